#pragma once

#include <algorithm>
#include <deque>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "baxter/errors.hpp"
#include "baxter/permutation.hpp"

namespace baxter {

namespace detail {
// Swap the adjacent middle pair of every instance of `from`, producing the
// distinct neighbours one weak-order step away.
inline std::vector<Permutation> move_neighbours(const Permutation& w,
                                                Pattern from) {
  std::set<int> middles;
  for (const auto& inst : vincular_instances(w, from))
    middles.insert(inst[1]);  // 1-based j
  std::vector<Permutation> out;
  for (int j : middles) {
    std::vector<int> v = w.one_line();
    std::swap(v[static_cast<std::size_t>(j - 1)], v[static_cast<std::size_t>(j)]);
    out.emplace_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}
}  // namespace detail

// 3-14-2 -> 3-41-2 moves add one inversion.
inline std::vector<Permutation> up_moves(const Permutation& w) {
  return detail::move_neighbours(w, Pattern::p3142);
}

// 3-41-2 -> 3-14-2 moves remove one inversion.
inline std::vector<Permutation> down_moves(const Permutation& w) {
  return detail::move_neighbours(w, Pattern::p3412);
}

// The congruence needs the sibling move pair as well: 2-14-3 <-> 2-41-3.
// With only the 3-41-2 moves, permutations such as 2413 would sit in classes
// of their own and the classes would not be counted by the Baxter numbers.
inline std::vector<Permutation> congruence_up_moves(const Permutation& w) {
  std::vector<Permutation> out = detail::move_neighbours(w, Pattern::p3142);
  std::vector<Permutation> more = detail::move_neighbours(w, Pattern::p2143);
  out.insert(out.end(), more.begin(), more.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::vector<Permutation> congruence_down_moves(const Permutation& w) {
  std::vector<Permutation> out = detail::move_neighbours(w, Pattern::p3412);
  std::vector<Permutation> more = detail::move_neighbours(w, Pattern::p2413);
  out.insert(out.end(), more.begin(), more.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// A congruence class: a weak-order interval holding exactly one twisted
// Baxter permutation (bottom) and one Baxter permutation (top).
struct Fiber {
  std::vector<Permutation> members;  // sorted
  Permutation bottom;
  Permutation top;
};

inline Fiber fiber(const Permutation& w) {
  require_within(w.size(), desk_limits().max_fiber_n, "n");
  std::set<Permutation> seen{w};
  std::deque<Permutation> queue{w};
  while (!queue.empty()) {
    Permutation cur = std::move(queue.front());
    queue.pop_front();
    for (auto dir : {congruence_up_moves(cur), congruence_down_moves(cur)})
      for (Permutation& next : dir)
        if (seen.insert(next).second) queue.push_back(next);
  }
  Fiber f;
  f.members.assign(seen.begin(), seen.end());
  int bottoms = 0, tops = 0;
  for (const Permutation& m : f.members) {
    if (is_twisted_baxter(m)) { f.bottom = m; ++bottoms; }
    if (is_baxter(m)) { f.top = m; ++tops; }
  }
  if (bottoms != 1 || tops != 1)
    fail(errc::inconsistent, "fiber does not have unique representatives");
  return f;
}

namespace detail {
inline Permutation iterate_moves(Permutation w, bool upward) {
  for (;;) {
    std::vector<Permutation> next = upward ? up_moves(w) : down_moves(w);
    if (next.empty()) return w;
    w = next.front();
  }
}
}  // namespace detail

// The Baxter permutation in the class of a twisted Baxter permutation.
// Greedy iteration of 3-14-2 -> 3-41-2 moves reaches it; the full closure is
// the fallback if the greedy walk ever ends elsewhere.
inline Permutation twisted_to_baxter(const Permutation& w) {
  if (!is_twisted_baxter(w))
    fail(errc::not_twisted, w.str() + " is not twisted Baxter");
  Permutation top = detail::iterate_moves(w, true);
  if (!is_baxter(top)) top = fiber(w).top;
  return top;
}

// The twisted Baxter permutation in the class of a Baxter permutation.
inline Permutation baxter_to_twisted(const Permutation& w) {
  if (!is_baxter(w)) fail(errc::not_baxter, w.str() + " is not Baxter");
  Permutation bottom = detail::iterate_moves(w, false);
  if (!is_twisted_baxter(bottom)) bottom = fiber(w).bottom;
  return bottom;
}

// Inversions as value pairs (a, b) with a > b and a left of b.
inline std::set<std::pair<int, int>> inversion_set(const Permutation& w) {
  std::set<std::pair<int, int>> inv;
  for (int i = 0; i < w.size(); ++i)
    for (int j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) inv.emplace(w[i], w[j]);
  return inv;
}

inline bool weak_order_leq(const Permutation& u, const Permutation& v) {
  auto a = inversion_set(u), b = inversion_set(v);
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Every fiber of S_n, in sorted order of their minima.
inline std::vector<Fiber> all_fibers(int n) {
  require_within(n, desk_limits().max_fiber_n, "n");
  std::vector<Fiber> out;
  std::set<Permutation> visited;
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
  do {
    Permutation w(v);
    if (visited.contains(w)) continue;
    Fiber f = fiber(w);
    visited.insert(f.members.begin(), f.members.end());
    out.push_back(std::move(f));
  } while (std::next_permutation(v.begin(), v.end()));
  std::sort(out.begin(), out.end(),
            [](const Fiber& a, const Fiber& b) { return a.bottom < b.bottom; });
  return out;
}

// Conjugation by w0 maps fibers to fibers: every conjugated fiber must again
// be a fiber, with conjugated representatives.
inline bool fiber_involution_check(int n) {
  for (const Fiber& f : all_fibers(n)) {
    std::vector<Permutation> conj;
    conj.reserve(f.members.size());
    for (const Permutation& m : f.members) conj.push_back(conjugate_w0(m));
    std::sort(conj.begin(), conj.end());
    Fiber g = fiber(conj.front());
    if (g.members != conj) return false;
    if (g.bottom != conjugate_w0(f.bottom)) return false;
    if (g.top != conjugate_w0(f.top)) return false;
  }
  return true;
}

}  // namespace baxter
