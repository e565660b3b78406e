#pragma once

#include <stdexcept>
#include <string>

namespace baxter {

// Failure modes of the documented operations. The CLI maps these onto
// machine-readable diagnostics and exit codes.
enum class errc {
  limit_exceeded,
  not_decomposable,
  not_complete,
  size_mismatch,
  not_baxter,
  not_twisted,
  not_alt_baxter,
  not_twin,
  not_in_image,
  intersecting,
  box_mismatch,
  malformed,
  not_parsable,
  inconsistent,
  non_exact_division,
  non_integer_result,
  not_palindromic,
  not_member,
  no_path,
};

inline const char* errc_name(errc e) {
  switch (e) {
    case errc::limit_exceeded: return "LimitExceeded";
    case errc::not_decomposable: return "NotDecomposable";
    case errc::not_complete: return "NotComplete";
    case errc::size_mismatch: return "SizeMismatch";
    case errc::not_baxter: return "NotBaxter";
    case errc::not_twisted: return "NotTwisted";
    case errc::not_alt_baxter: return "NotAltBaxter";
    case errc::not_twin: return "NotTwin";
    case errc::not_in_image: return "NotInImage";
    case errc::intersecting: return "Intersecting";
    case errc::box_mismatch: return "BoxMismatch";
    case errc::malformed: return "Malformed";
    case errc::not_parsable: return "NotParsable";
    case errc::inconsistent: return "Inconsistent";
    case errc::non_exact_division: return "NonExactDivision";
    case errc::non_integer_result: return "NonIntegerResult";
    case errc::not_palindromic: return "NotPalindromic";
    case errc::not_member: return "NotMember";
    case errc::no_path: return "NoPath";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace baxter
