#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "baxter/errors.hpp"
#include "baxter/limits.hpp"
#include "baxter/parallel.hpp"

namespace baxter {

// A permutation of {1..n} in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line) : v_(std::move(one_line)) {
    validate();
  }

  static Permutation identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    return Permutation(std::move(v));
  }

  int size() const { return static_cast<int>(v_.size()); }
  // 0-based position access.
  int operator[](int pos) const { return v_[static_cast<std::size_t>(pos)]; }
  const std::vector<int>& one_line() const { return v_; }

  // 0-based position of a value.
  int position_of(int value) const {
    for (int i = 0; i < size(); ++i)
      if (v_[static_cast<std::size_t>(i)] == value) return i;
    fail(errc::malformed, "value out of range");
  }

  std::string str() const {
    std::string out;
    bool wide = size() > 9;
    for (int i = 0; i < size(); ++i) {
      if (wide && i) out += ',';
      out += std::to_string(v_[static_cast<std::size_t>(i)]);
    }
    return out;
  }

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  void validate() const {
    if (v_.empty()) fail(errc::malformed, "permutation must have length >= 1");
    std::vector<char> seen(v_.size() + 1, 0);
    for (int x : v_) {
      if (x < 1 || x > static_cast<int>(v_.size()) || seen[static_cast<std::size_t>(x)])
        fail(errc::malformed, "not a rearrangement of 1..n");
      seen[static_cast<std::size_t>(x)] = 1;
    }
  }

  std::vector<int> v_;
};

// Convenience for literals like perm("43512"); digits only, so n <= 9.
inline Permutation perm(std::string_view digits) {
  std::vector<int> v;
  v.reserve(digits.size());
  for (char c : digits) v.push_back(c - '0');
  return Permutation(std::move(v));
}

// Vincular patterns with the middle pair adjacent: an instance is a position
// quadruple i < j < j+1 < k whose values realize the pattern.
enum class Pattern { p3142, p2413, p3412, p2143 };

inline bool pattern_matches(int a, int b, int c, int d, Pattern p) {
  switch (p) {
    case Pattern::p3142: return b < d && d < a && a < c;  // values 3,1,4,2
    case Pattern::p2413: return c < a && a < d && d < b;  // values 2,4,1,3
    case Pattern::p3412: return c < d && d < a && a < b;  // values 3,4,1,2
    case Pattern::p2143: return b < a && a < d && d < c;  // values 2,1,4,3
  }
  return false;
}

// All instances as 1-based quadruples (i, j, j+1, k).
inline std::vector<std::array<int, 4>> vincular_instances(const Permutation& w,
                                                          Pattern p) {
  std::vector<std::array<int, 4>> out;
  int n = w.size();
  for (int j = 1; j + 1 < n - 1; ++j)
    for (int i = 0; i < j; ++i)
      for (int k = j + 2; k < n; ++k)
        if (pattern_matches(w[i], w[j], w[j + 1], w[k], p))
          out.push_back({i + 1, j + 1, j + 2, k + 1});
  std::sort(out.begin(), out.end());
  return out;
}

inline bool contains_vincular(const Permutation& w, Pattern p) {
  int n = w.size();
  for (int j = 1; j + 1 < n - 1; ++j)
    for (int i = 0; i < j; ++i)
      for (int k = j + 2; k < n; ++k)
        if (pattern_matches(w[i], w[j], w[j + 1], w[k], p)) return true;
  return false;
}

inline bool is_baxter(const Permutation& w) {
  return !contains_vincular(w, Pattern::p3142) &&
         !contains_vincular(w, Pattern::p2413);
}

inline bool is_twisted_baxter(const Permutation& w) {
  return !contains_vincular(w, Pattern::p3412) &&
         !contains_vincular(w, Pattern::p2413);
}

inline Permutation inverse(const Permutation& w) {
  std::vector<int> v(static_cast<std::size_t>(w.size()));
  for (int i = 0; i < w.size(); ++i)
    v[static_cast<std::size_t>(w[i] - 1)] = i + 1;
  return Permutation(std::move(v));
}

// w0 * w * w0 with w0 = n, n-1, ..., 1.
inline Permutation conjugate_w0(const Permutation& w) {
  int n = w.size();
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    v[static_cast<std::size_t>(i)] = n + 1 - w[n - 1 - i];
  return Permutation(std::move(v));
}

// w * w0, i.e. w read right to left.
inline Permutation reverse(const Permutation& w) {
  std::vector<int> v(w.one_line().rbegin(), w.one_line().rend());
  return Permutation(std::move(v));
}

struct PermStats {
  int ascents = 0;
  int descents = 0;
  int inv_ascents = 0;
  int inv_descents = 0;
  friend bool operator==(const PermStats&, const PermStats&) = default;
};

inline PermStats stats(const Permutation& w) {
  PermStats s;
  for (int i = 0; i + 1 < w.size(); ++i)
    (w[i] < w[i + 1] ? s.ascents : s.descents)++;
  Permutation wi = inverse(w);
  for (int i = 0; i + 1 < wi.size(); ++i)
    (wi[i] < wi[i + 1] ? s.inv_ascents : s.inv_descents)++;
  return s;
}

// w1 < w2 > w3 < w4 ...
inline bool is_alternating(const Permutation& w) {
  for (int i = 0; i + 1 < w.size(); ++i) {
    bool need_ascent = (i % 2 == 0);
    if (need_ascent ? (w[i] > w[i + 1]) : (w[i] < w[i + 1])) return false;
  }
  return w.size() >= 1;
}

enum class PermFamily { baxter, twisted, alt_baxter };

namespace detail {

// Appending v after prefix w can only create pattern instances whose 'k'
// position is the new slot; earlier instances were already excluded.
inline bool append_ok(const std::vector<int>& w, int v,
                      std::span<const Pattern> avoid) {
  int m = static_cast<int>(w.size());
  for (int j = 1; j + 1 < m; ++j) {
    int b = w[static_cast<std::size_t>(j)];
    int c = w[static_cast<std::size_t>(j + 1)];
    for (int i = 0; i < j; ++i) {
      int a = w[static_cast<std::size_t>(i)];
      for (Pattern p : avoid)
        if (pattern_matches(a, b, c, v, p)) return false;
    }
  }
  return true;
}

inline void family_dfs(std::vector<int>& w, std::uint32_t used, int n,
                       std::span<const Pattern> avoid, bool alternating,
                       std::vector<Permutation>& out) {
  int m = static_cast<int>(w.size());
  if (m == n) {
    out.emplace_back(w);
    return;
  }
  for (int v = 1; v <= n; ++v) {
    if (used & (1u << v)) continue;
    if (alternating && m >= 1) {
      bool need_ascent = (m % 2 == 1);
      int prev = w[static_cast<std::size_t>(m - 1)];
      if (need_ascent ? (prev > v) : (prev < v)) continue;
    }
    if (!append_ok(w, v, avoid)) continue;
    w.push_back(v);
    family_dfs(w, used | (1u << v), n, avoid, alternating, out);
    w.pop_back();
  }
}

}  // namespace detail

// Exhaustive enumeration in lexicographic order. The search space is
// partitioned across workers by first entry; the merged result does not
// depend on the worker count. For ALT_BAXTER, n is the permutation length.
inline std::vector<Permutation> enumerate(PermFamily f, int n,
                                          std::optional<int> k = {}) {
  static constexpr std::array<Pattern, 2> kBaxterAvoid{Pattern::p3142,
                                                       Pattern::p2413};
  static constexpr std::array<Pattern, 2> kTwistedAvoid{Pattern::p3412,
                                                        Pattern::p2413};
  if (n < 1) fail(errc::malformed, "n must be >= 1");
  bool alternating = (f == PermFamily::alt_baxter);
  if (alternating) {
    require_within(n, desk_limits().max_alt_len, "alternating length");
  } else {
    require_within(n, desk_limits().max_perm_n, "n");
  }
  std::span<const Pattern> avoid =
      (f == PermFamily::twisted) ? std::span<const Pattern>(kTwistedAvoid)
                                 : std::span<const Pattern>(kBaxterAvoid);

  std::vector<std::vector<Permutation>> shards(static_cast<std::size_t>(n));
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t first) {
    std::vector<int> w;
    w.reserve(static_cast<std::size_t>(n));
    w.push_back(static_cast<int>(first) + 1);
    detail::family_dfs(w, 1u << (first + 1), n, avoid, alternating,
                       shards[first]);
  });
  std::vector<Permutation> out;
  for (auto& shard : shards)
    out.insert(out.end(), shard.begin(), shard.end());
  if (k) {
    std::erase_if(out, [&](const Permutation& w) {
      PermStats s = stats(w);
      return (f == PermFamily::twisted ? s.inv_ascents : s.ascents) != *k;
    });
  }
  return out;
}

// The Baxter property at value p: the entries strictly between p and p+1
// split into a block of values below p next to p and a block of values above
// p+1 next to p+1.
enum class DecompSide { p_first, p1_first };

struct Decomposition {
  std::vector<int> prefix;
  DecompSide side = DecompSide::p_first;
  std::vector<int> lower;  // values < p
  std::vector<int> upper;  // values > p+1
  std::vector<int> suffix;
  int p = 0;
};

inline Decomposition decompose_at(const Permutation& w, int p) {
  int n = w.size();
  if (p < 1 || p >= n) fail(errc::malformed, "need 1 <= p <= n-1");
  int pos_p = w.position_of(p);
  int pos_q = w.position_of(p + 1);
  Decomposition d;
  d.p = p;
  d.side = pos_p < pos_q ? DecompSide::p_first : DecompSide::p1_first;
  int lo = std::min(pos_p, pos_q), hi = std::max(pos_p, pos_q);
  for (int i = 0; i < lo; ++i) d.prefix.push_back(w[i]);
  for (int i = hi + 1; i < n; ++i) d.suffix.push_back(w[i]);
  // Between the pair: p_first expects the low block then the high block,
  // p1_first the high block then the low block.
  bool in_second = false;
  for (int i = lo + 1; i < hi; ++i) {
    int v = w[i];
    bool low = v < p;
    bool first_kind = (d.side == DecompSide::p_first) ? low : !low;
    if (!in_second && first_kind) {
      (low ? d.lower : d.upper).push_back(v);
    } else if (first_kind) {
      fail(errc::not_decomposable,
           "no valid split between " + std::to_string(p) + " and " +
               std::to_string(p + 1) + " in " + w.str());
    } else {
      in_second = true;
      (low ? d.lower : d.upper).push_back(v);
    }
  }
  return d;
}

inline Permutation recompose(const Decomposition& d) {
  std::vector<int> v = d.prefix;
  if (d.side == DecompSide::p_first) {
    v.push_back(d.p);
    v.insert(v.end(), d.lower.begin(), d.lower.end());
    v.insert(v.end(), d.upper.begin(), d.upper.end());
    v.push_back(d.p + 1);
  } else {
    v.push_back(d.p + 1);
    v.insert(v.end(), d.upper.begin(), d.upper.end());
    v.insert(v.end(), d.lower.begin(), d.lower.end());
    v.push_back(d.p);
  }
  v.insert(v.end(), d.suffix.begin(), d.suffix.end());
  return Permutation(std::move(v));
}

}  // namespace baxter
