#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "baxter/errors.hpp"
#include "baxter/permutation.hpp"

namespace baxter {

// Word over {1,2,3} of length 3n: each letter appears n times and every
// prefix dominates (#1 >= #2 >= #3). These are the row words of standard
// Young tableaux of shape 3 x n.
class YamanouchiWord {
 public:
  explicit YamanouchiWord(std::string letters) : s_(std::move(letters)) {
    validate();
  }
  const std::string& str() const { return s_; }
  int n() const { return static_cast<int>(s_.size()) / 3; }
  friend auto operator<=>(const YamanouchiWord&, const YamanouchiWord&) = default;

 private:
  void validate() const {
    if (s_.empty() || s_.size() % 3 != 0)
      fail(errc::malformed, "word length must be a positive multiple of 3");
    int count[4] = {0, 0, 0, 0};
    for (char c : s_) {
      if (c < '1' || c > '3') fail(errc::malformed, "letters must be 1, 2 or 3");
      ++count[c - '0'];
      if (count[2] > count[1] || count[3] > count[2])
        fail(errc::malformed, "prefix dominance violated in " + s_);
    }
    if (count[1] != count[2] || count[2] != count[3])
      fail(errc::malformed, "letters must appear equally often");
  }

  std::string s_;
};

// Standard Young tableau of shape 3 x n.
class Tableau3xN {
 public:
  explicit Tableau3xN(std::array<std::vector<int>, 3> rows)
      : rows_(std::move(rows)) {
    validate();
  }
  const std::array<std::vector<int>, 3>& rows() const { return rows_; }
  int n() const { return static_cast<int>(rows_[0].size()); }
  friend auto operator<=>(const Tableau3xN&, const Tableau3xN&) = default;

 private:
  void validate() const {
    std::size_t n = rows_[0].size();
    if (n == 0 || rows_[1].size() != n || rows_[2].size() != n)
      fail(errc::malformed, "rows must have equal positive length");
    std::vector<char> seen(3 * n + 1, 0);
    for (const auto& row : rows_)
      for (int x : row) {
        if (x < 1 || x > static_cast<int>(3 * n) || seen[static_cast<std::size_t>(x)])
          fail(errc::malformed, "entries must be 1..3n exactly once");
        seen[static_cast<std::size_t>(x)] = 1;
      }
    for (const auto& row : rows_)
      for (std::size_t j = 0; j + 1 < n; ++j)
        if (row[j] >= row[j + 1]) fail(errc::malformed, "rows must increase");
    for (int r = 0; r + 1 < 3; ++r)
      for (std::size_t j = 0; j < n; ++j)
        if (rows_[static_cast<std::size_t>(r)][j] >= rows_[static_cast<std::size_t>(r) + 1][j])
          fail(errc::malformed, "columns must increase");
  }

  std::array<std::vector<int>, 3> rows_;
};

// Letter i of the word is the row of entry i.
inline YamanouchiWord word_from_tableau(const Tableau3xN& t) {
  int size = 3 * t.n();
  std::string s(static_cast<std::size_t>(size), '?');
  for (int r = 0; r < 3; ++r)
    for (int x : t.rows()[static_cast<std::size_t>(r)])
      s[static_cast<std::size_t>(x - 1)] = static_cast<char>('1' + r);
  return YamanouchiWord(std::move(s));
}

inline Tableau3xN tableau_from_word(const YamanouchiWord& x) {
  std::array<std::vector<int>, 3> rows;
  for (int i = 0; i < static_cast<int>(x.str().size()); ++i)
    rows[static_cast<std::size_t>(x.str()[static_cast<std::size_t>(i)] - '1')]
        .push_back(i + 1);
  return Tableau3xN(std::move(rows));
}

// Adjacent-equal-pair masks.
inline constexpr unsigned kAvoid11 = 1u;
inline constexpr unsigned kAvoid22 = 2u;
inline constexpr unsigned kAvoid33 = 4u;

inline bool avoids(const YamanouchiWord& x, unsigned mask) {
  const std::string& s = x.str();
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i] != s[i + 1]) continue;
    unsigned bit = 1u << (s[i] - '1');
    if (mask & bit) return false;
  }
  return true;
}

// Number of consecutive entry pairs (i, i+1) with i in the first row and
// i+1 in the third. Counting any adjacency within rows 1 and 3 would
// misgrade the all-descent tableau, whose word 123123... carries only
// 3-then-1 adjacencies.
inline int baxter_stat_k(const YamanouchiWord& x) {
  const std::string& s = x.str();
  int k = 0;
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (s[i] == '1' && s[i + 1] == '3') ++k;
  return k;
}

// Evacuation on row words of a rectangular tableau: reverse the word and
// swap 1 <-> 3.
inline YamanouchiWord evac_word(const YamanouchiWord& x) {
  std::string s(x.str().rbegin(), x.str().rend());
  for (char& c : s) c = static_cast<char>('1' + ('3' - c));
  return YamanouchiWord(std::move(s));
}

// Rotate the tableau 180 degrees and relabel i -> N+1-i.
inline Tableau3xN evac_tableau(const Tableau3xN& t) {
  int size = 3 * t.n();
  std::array<std::vector<int>, 3> rows;
  for (int r = 0; r < 3; ++r) {
    const auto& src = t.rows()[static_cast<std::size_t>(2 - r)];
    for (auto it = src.rbegin(); it != src.rend(); ++it)
      rows[static_cast<std::size_t>(r)].push_back(size + 1 - *it);
  }
  return Tableau3xN(std::move(rows));
}

// Shuffle of two balanced parenthesis systems over a/A and b/B (A and B are
// the closing letters), with the extra rule that any prefix ending in 'b'
// holds strictly more a's than A's.
class ShuffleWord {
 public:
  explicit ShuffleWord(std::string letters) : s_(std::move(letters)) {
    validate();
  }
  const std::string& str() const { return s_; }
  int n() const { return static_cast<int>(s_.size()) / 2; }
  friend auto operator<=>(const ShuffleWord&, const ShuffleWord&) = default;

 private:
  void validate() const {
    if (s_.empty() || s_.size() % 2 != 0)
      fail(errc::malformed, "shuffle length must be a positive even number");
    int na = 0, nA = 0, nb = 0, nB = 0;
    for (char c : s_) {
      switch (c) {
        case 'a': ++na; break;
        case 'A': ++nA; break;
        case 'b':
          if (na <= nA)
            fail(errc::malformed, "prefix ending in b needs more a's than A's");
          ++nb;
          break;
        case 'B': ++nB; break;
        default: fail(errc::malformed, "letters must be a, A, b or B");
      }
      if (nA > na || nB > nb)
        fail(errc::malformed, "unbalanced prefix in " + s_);
    }
    if (na != nA || nb != nB) fail(errc::malformed, "unbalanced word " + s_);
  }

  std::string s_;
};

// The letter substitution a -> 1, b -> 21, A -> 23, B -> 3.
inline YamanouchiWord shuffle_to_yamanouchi(const ShuffleWord& alpha) {
  std::string out;
  for (char c : alpha.str()) {
    switch (c) {
      case 'a': out += '1'; break;
      case 'b': out += "21"; break;
      case 'A': out += "23"; break;
      case 'B': out += '3'; break;
    }
  }
  return YamanouchiWord(std::move(out));
}

// Unique parse of a 22-avoiding word: every 2 pairs with its successor.
inline ShuffleWord yamanouchi_to_shuffle(const YamanouchiWord& x) {
  if (!avoids(x, kAvoid22))
    fail(errc::not_parsable, "word contains adjacent 2's");
  const std::string& s = x.str();
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1') {
      out += 'a';
    } else if (s[i] == '3') {
      out += 'B';
    } else {
      if (i + 1 >= s.size()) fail(errc::not_parsable, "trailing 2");
      ++i;
      out += (s[i] == '1') ? 'b' : 'A';
    }
  }
  return ShuffleWord(std::move(out));
}

// ---- the type system relating alternating Baxter permutations and shuffles

namespace detail {
inline int type_of_unchecked(const Permutation& w, int p) {
  int pos_p = w.position_of(p), pos_q = w.position_of(p + 1);
  bool p_first = pos_p < pos_q;
  bool has_small = false, has_large = false;
  for (int i = std::min(pos_p, pos_q) + 1; i < std::max(pos_p, pos_q); ++i)
    (w[i] < p ? has_small : has_large) = true;
  if (p_first) {
    if (!has_small) return has_large ? 2 : 1;
    return has_large ? 4 : 3;
  }
  if (!has_small) return has_large ? 7 : 5;
  return has_large ? 8 : 6;
}

inline void require_alt_baxter(const Permutation& w) {
  if (w.size() % 2 != 0 || !is_alternating(w) || !is_baxter(w))
    fail(errc::not_alt_baxter, w.str() + " is not alternating Baxter");
}
}  // namespace detail

// The type of p in an alternating Baxter permutation records the relative
// order of p and p+1 and whether small/large values sit between them.
inline int type_of(const Permutation& w, int p) {
  detail::require_alt_baxter(w);
  if (p < 1 || p >= w.size()) fail(errc::malformed, "need 1 <= p <= n-1");
  return detail::type_of_unchecked(w, p);
}

// One digit per p in [n-1], as a string over '1'..'8'.
inline std::string type_word(const Permutation& w) {
  detail::require_alt_baxter(w);
  std::string out;
  for (int p = 1; p < w.size(); ++p)
    out += static_cast<char>('0' + detail::type_of_unchecked(w, p));
  return out;
}

namespace detail {

// Per type: the letter class of alpha_p ('1' for a/b, '3' for A/B) and the
// fixed letter alpha_{p+1}.
struct TypeRule {
  char first_class;
  char second;
};

inline TypeRule type_rule(int type) {
  switch (type) {
    case 1: return {'1', 'A'};
    case 2: return {'1', 'b'};
    case 3: return {'3', 'A'};
    case 4: return {'3', 'b'};
    case 5: return {'1', 'B'};
    case 6: return {'3', 'B'};
    case 7: return {'1', 'a'};
    case 8: return {'3', 'a'};
  }
  fail(errc::malformed, "type out of range");
}

inline char letter_class(char c) { return (c == 'a' || c == 'b') ? '1' : '3'; }
// Whether the image of the letter under the substitution starts with a 2.
inline bool preceded_by_2(char c) { return c == 'b' || c == 'A'; }

}  // namespace detail

// Rebuild a shuffle word from a type word: alpha_1 = a, then each type pins
// the next letter and constrains the current one.
inline ShuffleWord shuffle_from_type_word(std::string_view types) {
  std::string alpha = "a";
  for (char tc : types) {
    detail::TypeRule rule = detail::type_rule(tc - '0');
    if (detail::letter_class(alpha.back()) != rule.first_class)
      fail(errc::inconsistent, "type word conflicts with the running prefix");
    alpha += rule.second;
  }
  return ShuffleWord(std::move(alpha));
}

// Recover the type word of a shuffle word from the letter classes and the
// preceded-by-2 flags.
inline std::string type_word_of_shuffle(const ShuffleWord& alpha) {
  const std::string& s = alpha.str();
  std::string out;
  for (std::size_t p = 0; p + 1 < s.size(); ++p) {
    char c1 = detail::letter_class(s[p]);
    char c2 = detail::letter_class(s[p + 1]);
    bool pre = detail::preceded_by_2(s[p + 1]);
    int type;
    if (c1 == '1' && c2 == '3') type = pre ? 1 : 5;
    else if (c1 == '1' && c2 == '1') type = pre ? 2 : 7;
    else if (c1 == '3' && c2 == '3') type = pre ? 3 : 6;
    else type = pre ? 4 : 8;
    out += static_cast<char>('0' + type);
  }
  return out;
}

inline ShuffleWord alt_to_shuffle(const Permutation& w) {
  return shuffle_from_type_word(type_word(w));
}

namespace detail {
inline const std::map<std::string, Permutation>& alt_type_table(int len) {
  static std::mutex mu;
  static std::map<int, std::map<std::string, Permutation>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(len);
  if (it != cache.end()) return it->second;
  std::map<std::string, Permutation> table;
  for (const Permutation& w : enumerate(PermFamily::alt_baxter, len))
    table.emplace(type_word(w), w);
  return cache.emplace(len, std::move(table)).first->second;
}
}  // namespace detail

// Inverse of alt_to_shuffle: decode the type word, then look the permutation
// up in the per-size table (types determine it uniquely).
inline Permutation shuffle_to_alt(const ShuffleWord& alpha) {
  int len = static_cast<int>(alpha.str().size());
  require_within(len, desk_limits().max_alt_len, "alternating length");
  const auto& table = detail::alt_type_table(len);
  auto it = table.find(type_word_of_shuffle(alpha));
  if (it == table.end())
    fail(errc::inconsistent, "no alternating Baxter permutation has this type word");
  return it->second;
}

// The involution on type words induced by conjugation: reverse, then swap
// 2 <-> 3 and 6 <-> 7.
inline std::string involute_type_word(std::string_view types) {
  std::string out(types.rbegin(), types.rend());
  for (char& c : out) {
    if (c == '2') c = '3';
    else if (c == '3') c = '2';
    else if (c == '6') c = '7';
    else if (c == '7') c = '6';
  }
  return out;
}

// The common involution on shuffle words; it equals both conjugation pulled
// through the permutation side and evacuation pulled through the word side.
inline ShuffleWord involute_shuffle(const ShuffleWord& alpha) {
  return shuffle_from_type_word(involute_type_word(type_word_of_shuffle(alpha)));
}

// All Yamanouchi words for 3 x n avoiding the masked adjacent pairs,
// lexicographically sorted.
inline std::vector<YamanouchiWord> enumerate_yamanouchi(int n, unsigned mask) {
  std::vector<YamanouchiWord> out;
  std::string s;
  int count[4] = {0, 0, 0, 0};
  auto dfs = [&](auto&& self) -> void {
    if (static_cast<int>(s.size()) == 3 * n) {
      out.emplace_back(s);
      return;
    }
    for (char c = '1'; c <= '3'; ++c) {
      int d = c - '0';
      if (count[d] == n) continue;
      if (d > 1 && count[d] + 1 > count[d - 1]) continue;
      if (!s.empty() && s.back() == c && (mask & (1u << (d - 1)))) continue;
      ++count[d];
      s += c;
      self(self);
      s.pop_back();
      --count[d];
    }
  };
  dfs(dfs);
  return out;
}

// All shuffle words of the given even length, sorted by byte value.
inline std::vector<ShuffleWord> enumerate_shuffles(int len) {
  if (len < 2 || len % 2 != 0) fail(errc::malformed, "length must be even and positive");
  std::vector<ShuffleWord> out;
  std::string s;
  int na = 0, nA = 0, nb = 0, nB = 0;
  auto dfs = [&](auto&& self) -> void {
    if (static_cast<int>(s.size()) == len) {
      if (na == nA && nb == nB) out.emplace_back(s);
      return;
    }
    int remaining = len - static_cast<int>(s.size());
    if ((na - nA) + (nb - nB) > remaining) return;
    for (char c : {'A', 'B', 'a', 'b'}) {
      if (c == 'A' && nA >= na) continue;
      if (c == 'B' && nB >= nb) continue;
      if (c == 'b' && na <= nA) continue;
      switch (c) { case 'a': ++na; break; case 'A': ++nA; break;
                   case 'b': ++nb; break; default: ++nB; break; }
      s += c;
      self(self);
      s.pop_back();
      switch (c) { case 'a': --na; break; case 'A': --nA; break;
                   case 'b': --nb; break; default: --nB; break; }
    }
  };
  dfs(dfs);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace baxter
