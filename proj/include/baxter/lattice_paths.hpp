#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "baxter/binary_tree.hpp"
#include "baxter/errors.hpp"

namespace baxter {

// Three non-crossing monotone NE paths. Path i runs from
// A_1=(0,2), A_2=(1,1), A_3=(2,0) to B_1=(k,l+2), B_2=(k+1,l+1), B_3=(k+2,l);
// each takes k east ('E') and l north ('N') steps.
struct LatticePathTriple {
  int k = 0;
  int l = 0;
  std::array<std::string, 3> paths;
  friend auto operator<=>(const LatticePathTriple&, const LatticePathTriple&) = default;
};

inline std::array<std::pair<int, int>, 3> path_anchors() {
  return {{{0, 2}, {1, 1}, {2, 0}}};
}

inline std::string serialize(const LatticePathTriple& t) {
  return std::to_string(t.k) + "," + std::to_string(t.l) + ":" + t.paths[0] +
         "|" + t.paths[1] + "|" + t.paths[2];
}

inline std::vector<std::pair<int, int>> path_vertices(const LatticePathTriple& t,
                                                      int i) {
  auto [x, y] = path_anchors()[static_cast<std::size_t>(i)];
  std::vector<std::pair<int, int>> out{{x, y}};
  for (char c : t.paths[static_cast<std::size_t>(i)]) {
    (c == 'E' ? x : y)++;
    out.emplace_back(x, y);
  }
  return out;
}

inline bool paths_intersect(const LatticePathTriple& t) {
  std::set<std::pair<int, int>> seen;
  for (int i = 0; i < 3; ++i)
    for (auto v : path_vertices(t, i))
      if (!seen.insert(v).second) return true;
  return false;
}

inline void validate_triple(const LatticePathTriple& t) {
  if (t.k < 0 || t.l < 0) fail(errc::malformed, "negative order");
  for (const std::string& p : t.paths) {
    int e = 0, n = 0;
    for (char c : p) {
      if (c == 'E') ++e;
      else if (c == 'N') ++n;
      else fail(errc::malformed, "steps must be E or N");
    }
    if (e != t.k || n != t.l)
      fail(errc::malformed, "each path needs k east and l north steps");
  }
  if (paths_intersect(t)) fail(errc::intersecting, "paths share a vertex");
}

// Plane partition: a rows x cols array, weakly decreasing along rows and
// columns, entries in 0..height.
class PlanePartition {
 public:
  PlanePartition(int rows, int cols, int height,
                 std::vector<std::vector<int>> entries)
      : rows_(rows), cols_(cols), height_(height), e_(std::move(entries)) {
    validate();
  }

  static PlanePartition zero(int rows, int cols, int height) {
    return PlanePartition(rows, cols, height,
                          std::vector<std::vector<int>>(
                              static_cast<std::size_t>(rows),
                              std::vector<int>(static_cast<std::size_t>(cols), 0)));
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int height() const { return height_; }
  int at(int r, int c) const {  // 0-based
    return e_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  }
  const std::vector<std::vector<int>>& entries() const { return e_; }

  long long weight() const {
    long long w = 0;
    for (const auto& row : e_)
      for (int x : row) w += x;
    return w;
  }

  friend auto operator<=>(const PlanePartition&, const PlanePartition&) = default;

 private:
  void validate() const {
    if (rows_ < 0 || cols_ < 0 || height_ < 0)
      fail(errc::malformed, "negative box");
    if (static_cast<int>(e_.size()) != rows_)
      fail(errc::box_mismatch, "row count does not match the box");
    for (const auto& row : e_)
      if (static_cast<int>(row.size()) != cols_)
        fail(errc::box_mismatch, "column count does not match the box");
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) {
        int v = at(r, c);
        if (v < 0 || v > height_) fail(errc::malformed, "entry outside 0..height");
        if (c + 1 < cols_ && v < at(r, c + 1))
          fail(errc::malformed, "rows must weakly decrease");
        if (r + 1 < rows_ && v < at(r + 1, c))
          fail(errc::malformed, "columns must weakly decrease");
      }
  }

  int rows_, cols_, height_;
  std::vector<std::vector<int>> e_;
};

inline std::string serialize(const PlanePartition& p) {
  std::string out = std::to_string(p.rows()) + "x" + std::to_string(p.cols()) +
                    "x" + std::to_string(p.height()) + ":";
  for (const auto& row : p.entries()) {
    for (int x : row) out += std::to_string(x) + ",";
    out += ";";
  }
  return out;
}

// pi'(i,j) = height - pi(rows+1-i, cols+1-j).
inline PlanePartition complement_pp(const PlanePartition& p) {
  std::vector<std::vector<int>> e(
      static_cast<std::size_t>(p.rows()),
      std::vector<int>(static_cast<std::size_t>(p.cols()), 0));
  for (int r = 0; r < p.rows(); ++r)
    for (int c = 0; c < p.cols(); ++c)
      e[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
          p.height() - p.at(p.rows() - 1 - r, p.cols() - 1 - c);
  return PlanePartition(p.rows(), p.cols(), p.height(), std::move(e));
}

// Complement inside an explicitly given box; the partition must fit it.
inline PlanePartition complement_in(const PlanePartition& p, int rows, int cols,
                                    int height) {
  if (p.rows() > rows || p.cols() > cols || p.height() > height)
    fail(errc::box_mismatch, "partition does not fit the box");
  std::vector<std::vector<int>> e(
      static_cast<std::size_t>(rows),
      std::vector<int>(static_cast<std::size_t>(cols), 0));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      int rr = rows - 1 - r, cc = cols - 1 - c;
      int v = (rr < p.rows() && cc < p.cols()) ? p.at(rr, cc) : 0;
      e[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = height - v;
    }
  return PlanePartition(rows, cols, height, std::move(e));
}

inline bool is_self_complementary(const PlanePartition& p) {
  return complement_pp(p) == p;
}

namespace detail {
// East-step counts before each north step, read from the anchor; entry j is
// the x-offset at which the path crosses the j-th unit strip.
inline std::vector<int> east_profile(const std::string& path, int l) {
  std::vector<int> e;
  e.reserve(static_cast<std::size_t>(l));
  int east = 0;
  for (char c : path) {
    if (c == 'E') ++east;
    else e.push_back(east);
  }
  return e;
}

inline std::string path_from_profile(const std::vector<int>& e, int k) {
  std::string out;
  int east = 0;
  for (int target : e) {
    while (east < target) { out += 'E'; ++east; }
    out += 'N';
  }
  while (east < k) { out += 'E'; ++east; }
  return out;
}
}  // namespace detail

// Stack the three path layers into a plane partition in the k x l x 3 box.
// The largest layer comes from the path launched at A_3; the array has one
// row per north strip, top strip first, so entries form an l x k array.
inline PlanePartition pp_from_paths(const LatticePathTriple& t) {
  validate_triple(t);
  std::array<std::vector<int>, 3> profile;
  for (int i = 0; i < 3; ++i)
    profile[static_cast<std::size_t>(i)] =
        detail::east_profile(t.paths[static_cast<std::size_t>(i)], t.l);
  // Cell (r,c) counts the layers containing it; layer m comes from path 4-m,
  // whose profile bounds the region above it in each strip.
  std::vector<std::vector<int>> e(
      static_cast<std::size_t>(t.l),
      std::vector<int>(static_cast<std::size_t>(t.k), 0));
  for (int r = 0; r < t.l; ++r)
    for (int c = 0; c < t.k; ++c) {
      int v = 0;
      for (int i = 0; i < 3; ++i) {
        const auto& prof = profile[static_cast<std::size_t>(2 - i)];
        if (prof[static_cast<std::size_t>(t.l - 1 - r)] > c) ++v;
      }
      e[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
    }
  return PlanePartition(t.l, t.k, 3, std::move(e));
}

// Inverse of pp_from_paths: slice the partition into its three layers.
inline LatticePathTriple paths_from_pp(const PlanePartition& p) {
  if (p.height() != 3) fail(errc::box_mismatch, "expected a k x l x 3 box");
  LatticePathTriple t;
  t.k = p.cols();
  t.l = p.rows();
  for (int layer = 1; layer <= 3; ++layer) {
    std::vector<int> profile(static_cast<std::size_t>(t.l), 0);
    for (int r = 0; r < t.l; ++r) {
      int len = 0;
      while (len < t.k && p.at(r, len) >= layer) ++len;
      profile[static_cast<std::size_t>(t.l - 1 - r)] = len;
    }
    t.paths[static_cast<std::size_t>(3 - layer)] =
        detail::path_from_profile(profile, t.k);
  }
  validate_triple(t);
  return t;
}

// 180-degree rotation about the centre; path i becomes path 4-i reversed.
inline LatticePathTriple rotate_paths(const LatticePathTriple& t) {
  LatticePathTriple out;
  out.k = t.k;
  out.l = t.l;
  for (int i = 0; i < 3; ++i)
    out.paths[static_cast<std::size_t>(i)] =
        std::string(t.paths[static_cast<std::size_t>(2 - i)].rbegin(),
                    t.paths[static_cast<std::size_t>(2 - i)].rend());
  return out;
}

namespace detail {
// Child directions of the non-root nodes in preorder / postorder. Infix
// would not do: trees whose root splits differently can share both the
// infix direction word and the leaf code.
inline void preorder_directions(const BinaryTree& t, bool from_left,
                                bool is_root, std::string& out, char left_char,
                                char right_char) {
  if (t.is_empty()) return;
  if (!is_root) out += from_left ? left_char : right_char;
  preorder_directions(t.left(), true, false, out, left_char, right_char);
  preorder_directions(t.right(), false, false, out, left_char, right_char);
}

inline void postorder_directions(const BinaryTree& t, bool from_left,
                                 bool is_root, std::string& out, char left_char,
                                 char right_char) {
  if (t.is_empty()) return;
  postorder_directions(t.left(), true, false, out, left_char, right_char);
  postorder_directions(t.right(), false, false, out, left_char, right_char);
  if (!is_root) out += from_left ? left_char : right_char;
}
}  // namespace detail

// Twin trees to a path triple: the first path walks the internal nodes of
// the left tree in preorder, the third walks the right tree in postorder
// with the roles flipped, and the middle path reads the leaf code. The
// conventions are pinned by the published order-(2,1) triples.
inline LatticePathTriple paths_from_twin(const TwinPair& p) {
  if (!is_twin(p.left, p.right)) fail(errc::not_twin, "not a twin pair");
  auto [left_leaves, right_leaves] = leaf_counts(p.left);
  LatticePathTriple t;
  t.k = left_leaves - 1;
  t.l = right_leaves - 1;
  detail::preorder_directions(trunc(p.left), false, true, t.paths[0], 'N', 'E');
  for (char c : code(p.left)) t.paths[1] += (c == '1') ? 'E' : 'N';
  detail::postorder_directions(trunc(p.right), false, true, t.paths[2], 'E', 'N');
  validate_triple(t);
  return t;
}

namespace detail {
inline const std::map<std::string, TwinPair>& twin_path_table(int n) {
  static std::mutex mu;
  static std::map<int, std::map<std::string, TwinPair>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::map<std::string, TwinPair> table;
  for (const TwinPair& p : all_twin_pairs(n))
    table.emplace(serialize(paths_from_twin(p)), p);
  return cache.emplace(n, std::move(table)).first->second;
}
}  // namespace detail

inline TwinPair twin_from_paths(const LatticePathTriple& t) {
  validate_triple(t);
  int n = t.k + t.l + 1;
  require_within(n, desk_limits().max_perm_n, "n");
  const auto& table = detail::twin_path_table(n);
  auto it = table.find(serialize(t));
  if (it == table.end())
    fail(errc::not_in_image, "triple is not the image of a twin pair");
  return it->second;
}

// All (k,l) triples, sorted canonically.
inline std::vector<LatticePathTriple> enumerate_path_triples(int k, int l) {
  std::vector<std::string> words;
  std::string w;
  auto gen = [&](auto&& self, int e, int n) -> void {
    if (e == 0 && n == 0) {
      words.push_back(w);
      return;
    }
    if (e > 0) { w += 'E'; self(self, e - 1, n); w.pop_back(); }
    if (n > 0) { w += 'N'; self(self, e, n - 1); w.pop_back(); }
  };
  gen(gen, k, l);
  std::vector<LatticePathTriple> out;
  for (const auto& p1 : words)
    for (const auto& p2 : words)
      for (const auto& p3 : words) {
        LatticePathTriple t{k, l, {p1, p2, p3}};
        if (!paths_intersect(t)) out.push_back(std::move(t));
      }
  std::sort(out.begin(), out.end());
  return out;
}

// All plane partitions in a rows x cols box with entries <= height,
// lexicographically sorted by row content.
inline std::vector<PlanePartition> enumerate_plane_partitions(int rows, int cols,
                                                              int height) {
  std::vector<PlanePartition> out;
  std::vector<std::vector<int>> grid(
      static_cast<std::size_t>(rows),
      std::vector<int>(static_cast<std::size_t>(cols), 0));
  auto dfs = [&](auto&& self, int r, int c) -> void {
    if (r == rows || rows == 0 || cols == 0) {
      out.emplace_back(rows, cols, height, grid);
      return;
    }
    if (c == cols) {
      self(self, r + 1, 0);
      return;
    }
    int cap = height;
    if (c > 0) cap = std::min(cap, grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)]);
    if (r > 0) cap = std::min(cap, grid[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)]);
    for (int v = 0; v <= cap; ++v) {
      grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
      self(self, r, c + 1);
    }
    grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 0;
  };
  dfs(dfs, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace baxter
