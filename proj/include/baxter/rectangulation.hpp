#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "baxter/binary_tree.hpp"
#include "baxter/errors.hpp"

namespace baxter {

struct Rect {
  int x1 = 0, y1 = 0, x2 = 0, y2 = 0;
  friend auto operator<=>(const Rect&, const Rect&) = default;
};

// Tiling of [0,n]^2 by n rectangles, each of whose interiors meets the open
// diagonal from (0,n) to (n,0). Rectangle i is the one containing the open
// diagonal segment of diagonal cell i (cells numbered 1..n from top-left),
// and the rectangles are stored in that order.
class Rectangulation {
 public:
  Rectangulation(int n, std::vector<Rect> rects)
      : n_(n), r_(std::move(rects)) {
    canonicalize_and_validate();
  }

  int n() const { return n_; }
  const std::vector<Rect>& rects() const { return r_; }
  friend auto operator<=>(const Rectangulation&, const Rectangulation&) = default;

 private:
  // Which diagonal cells' open segments lie inside this rectangle?
  // The diagonal crosses the rectangle for x in (max(x1, n-y2), min(x2, n-y1)).
  static std::pair<int, int> diagonal_span(const Rect& r, int n) {
    return {std::max(r.x1, n - r.y2), std::min(r.x2, n - r.y1)};
  }

  void canonicalize_and_validate() {
    if (n_ < 1 || static_cast<int>(r_.size()) != n_)
      fail(errc::malformed, "need exactly n rectangles");
    long long area = 0;
    for (const Rect& r : r_) {
      if (r.x1 < 0 || r.y1 < 0 || r.x2 > n_ || r.y2 > n_ || r.x1 >= r.x2 ||
          r.y1 >= r.y2)
        fail(errc::malformed, "rectangle outside the square or degenerate");
      area += static_cast<long long>(r.x2 - r.x1) * (r.y2 - r.y1);
    }
    if (area != static_cast<long long>(n_) * n_)
      fail(errc::malformed, "rectangles do not tile the square");
    for (std::size_t i = 0; i < r_.size(); ++i)
      for (std::size_t j = i + 1; j < r_.size(); ++j) {
        const Rect &a = r_[i], &b = r_[j];
        bool disjoint = a.x2 <= b.x1 || b.x2 <= a.x1 || a.y2 <= b.y1 || b.y2 <= a.y1;
        if (!disjoint) fail(errc::malformed, "rectangle interiors overlap");
      }
    std::vector<Rect> by_cell(static_cast<std::size_t>(n_));
    std::vector<char> assigned(static_cast<std::size_t>(n_), 0);
    for (const Rect& r : r_) {
      auto [lo, hi] = diagonal_span(r, n_);
      if (hi - lo != 1)
        fail(errc::malformed,
             "each rectangle must contain exactly one diagonal cell segment");
      if (assigned[static_cast<std::size_t>(lo)])
        fail(errc::malformed, "two rectangles claim one diagonal cell");
      assigned[static_cast<std::size_t>(lo)] = 1;
      by_cell[static_cast<std::size_t>(lo)] = r;
    }
    r_ = std::move(by_cell);
  }

  int n_;
  std::vector<Rect> r_;
};

inline std::string serialize(const Rectangulation& r) {
  std::string out;
  for (const Rect& x : r.rects())
    out += std::to_string(x.x1) + "," + std::to_string(x.y1) + "," +
           std::to_string(x.x2) + "," + std::to_string(x.y2) + ";";
  return out;
}

// Glue the truncated twin trees into a rectangulation: with nodes indexed by
// infix position, tree 1 supplies the bottom/left extents of rectangle i and
// tree 2 the top/right extents, through the infix spans of their subtrees.
inline Rectangulation rect_from_twin(const TwinPair& p) {
  if (!is_twin(p.left, p.right)) fail(errc::not_twin, "not a twin pair");
  int n = (p.left.node_count() - 1) / 2;
  // spans_by_pos[i] = (min, max) infix position within the subtree of the
  // node at infix position i.
  auto spans_by_pos = [](const BinaryTree& t, int n_nodes) {
    std::vector<std::pair<int, int>> out(static_cast<std::size_t>(n_nodes + 1));
    int counter = 0;
    auto walk = [&](auto&& self, const BinaryTree& node) -> std::pair<int, int> {
      int lo = 0, hi = 0;
      if (!node.left().is_empty()) {
        auto l = self(self, node.left());
        lo = l.first;
      }
      int pos = ++counter;
      if (lo == 0) lo = pos;
      hi = pos;
      if (!node.right().is_empty()) {
        auto r = self(self, node.right());
        hi = r.second;
      }
      out[static_cast<std::size_t>(pos)] = {lo, hi};
      return {lo, hi};
    };
    if (!t.is_empty()) walk(walk, t);
    return out;
  };
  auto t1 = spans_by_pos(trunc(p.left), n);
  auto t2 = spans_by_pos(trunc(p.right), n);
  std::vector<Rect> rects;
  rects.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    auto [lmin1, rmax1] = t1[static_cast<std::size_t>(i)];
    auto [lmin2, rmax2] = t2[static_cast<std::size_t>(i)];
    rects.push_back(Rect{lmin1 - 1, n - rmax1, rmax2, n + 1 - lmin2});
  }
  return Rectangulation(n, std::move(rects));
}

// (vertical, horizontal) diagonal crossings: walls whose relative interior
// contains an interior diagonal lattice point (a, n-a).
inline std::pair<int, int> diag_stats(const Rectangulation& r) {
  int n = r.n();
  // vwall[x][y]: unit wall segment at x from y to y+1 (x in 1..n-1).
  std::vector<std::vector<char>> vwall(
      static_cast<std::size_t>(n + 1), std::vector<char>(static_cast<std::size_t>(n), 0));
  std::vector<std::vector<char>> hwall(
      static_cast<std::size_t>(n + 1), std::vector<char>(static_cast<std::size_t>(n), 0));
  for (const Rect& q : r.rects()) {
    for (int x : {q.x1, q.x2})
      if (x > 0 && x < n)
        for (int y = q.y1; y < q.y2; ++y)
          vwall[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = 1;
    for (int y : {q.y1, q.y2})
      if (y > 0 && y < n)
        for (int x = q.x1; x < q.x2; ++x)
          hwall[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] = 1;
  }
  int vertical = 0, horizontal = 0;
  for (int a = 1; a < n; ++a) {
    int b = n - a;  // the diagonal point (a, b)
    if (vwall[static_cast<std::size_t>(a)][static_cast<std::size_t>(b - 1)] &&
        vwall[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])
      ++vertical;
    if (hwall[static_cast<std::size_t>(b)][static_cast<std::size_t>(a - 1)] &&
        hwall[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)])
      ++horizontal;
  }
  return {vertical, horizontal};
}

// 180-degree rotation about the centre of the square.
inline Rectangulation rotate_rect(const Rectangulation& r) {
  int n = r.n();
  std::vector<Rect> rects;
  for (const Rect& q : r.rects())
    rects.push_back(Rect{n - q.x2, n - q.y2, n - q.x1, n - q.y1});
  return Rectangulation(n, std::move(rects));
}

namespace detail {
inline const std::map<std::string, TwinPair>& twin_rect_table(int n) {
  static std::mutex mu;
  static std::map<int, std::map<std::string, TwinPair>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::map<std::string, TwinPair> table;
  for (const TwinPair& p : all_twin_pairs(n))
    table.emplace(serialize(rect_from_twin(p)), p);
  return cache.emplace(n, std::move(table)).first->second;
}
}  // namespace detail

inline TwinPair twin_from_rect(const Rectangulation& r) {
  require_within(r.n(), desk_limits().max_perm_n, "n");
  const auto& table = detail::twin_rect_table(r.n());
  auto it = table.find(serialize(r));
  if (it == table.end())
    fail(errc::not_in_image, "rectangulation is not the image of a twin pair");
  return it->second;
}

// Direct search over all diagonal rectangulations: pick, for each diagonal
// cell in turn, the rectangle that owns its open segment.
inline std::vector<Rectangulation> enumerate_rectangulations(int n) {
  std::vector<Rectangulation> out;
  std::vector<Rect> placed;
  auto disjoint_from_placed = [&](const Rect& r) {
    for (const Rect& q : placed)
      if (!(r.x2 <= q.x1 || q.x2 <= r.x1 || r.y2 <= q.y1 || q.y2 <= r.y1))
        return false;
    return true;
  };
  long long area = 0;
  auto dfs = [&](auto&& self, int cell) -> void {
    if (cell > n) {
      if (area == static_cast<long long>(n) * n)
        out.emplace_back(n, placed);
      return;
    }
    // Rectangle for cell i spans x in (i-1, i) on the diagonal exactly:
    // max(x1, n-y2) = i-1 and min(x2, n-y1) = i.
    for (int x1 = 0; x1 <= cell - 1; ++x1)
      for (int x2 = cell; x2 <= n; ++x2)
        for (int y1 = 0; y1 <= n - cell; ++y1)
          for (int y2 = n - cell + 1; y2 <= n; ++y2) {
            if (std::max(x1, n - y2) != cell - 1) continue;
            if (std::min(x2, n - y1) != cell) continue;
            Rect r{x1, y1, x2, y2};
            if (!disjoint_from_placed(r)) continue;
            placed.push_back(r);
            area += static_cast<long long>(x2 - x1) * (y2 - y1);
            self(self, cell + 1);
            area -= static_cast<long long>(x2 - x1) * (y2 - y1);
            placed.pop_back();
          }
  };
  dfs(dfs, 1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace baxter
