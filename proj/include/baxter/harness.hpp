#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "baxter/binary_tree.hpp"
#include "baxter/congruence.hpp"
#include "baxter/errors.hpp"
#include "baxter/lattice_paths.hpp"
#include "baxter/parallel.hpp"
#include "baxter/permutation.hpp"
#include "baxter/qpoly.hpp"
#include "baxter/rectangulation.hpp"
#include "baxter/words.hpp"

namespace baxter {

// The object families. baxter and baxter_inv share a carrier and differ in
// which statistics grade them (descents vs inverse descents).
enum class Family {
  baxter,
  baxter_inv,
  twisted,
  twin,
  paths,
  pp,
  rect,
  alt_baxter,
  shuffle,
  yam22,
  tableaux,
};

inline const char* family_name(Family f) {
  switch (f) {
    case Family::baxter: return "baxter";
    case Family::baxter_inv: return "baxter-inv";
    case Family::twisted: return "twisted";
    case Family::twin: return "twin";
    case Family::paths: return "paths";
    case Family::pp: return "pp";
    case Family::rect: return "rect";
    case Family::alt_baxter: return "alt-baxter";
    case Family::shuffle: return "shuffle";
    case Family::yam22: return "yam22";
    case Family::tableaux: return "tableaux";
  }
  return "?";
}

inline std::optional<Family> family_from_name(std::string_view name) {
  for (Family f : {Family::baxter, Family::baxter_inv, Family::twisted,
                   Family::twin, Family::paths, Family::pp, Family::rect,
                   Family::alt_baxter, Family::shuffle, Family::yam22,
                   Family::tableaux})
    if (name == family_name(f)) return f;
  return std::nullopt;
}

using FamilyValue =
    std::variant<Permutation, TwinPair, LatticePathTriple, PlanePartition,
                 Rectangulation, ShuffleWord, YamanouchiWord, Tableau3xN>;

inline std::string value_key(const FamilyValue& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Permutation>) return x.str();
        else if constexpr (std::is_same_v<T, ShuffleWord>) return x.str();
        else if constexpr (std::is_same_v<T, YamanouchiWord>) return x.str();
        else if constexpr (std::is_same_v<T, Tableau3xN>)
          return word_from_tableau(x).str();
        else return serialize(x);
      },
      v);
}

// The n grading every family shares along the bijection chains.
inline int object_size(Family f, const FamilyValue& v) {
  switch (f) {
    case Family::baxter:
    case Family::baxter_inv:
    case Family::twisted:
      return std::get<Permutation>(v).size();
    case Family::alt_baxter:
      return std::get<Permutation>(v).size() / 2;
    case Family::twin:
      return (std::get<TwinPair>(v).left.node_count() - 1) / 2;
    case Family::paths: {
      const auto& t = std::get<LatticePathTriple>(v);
      return t.k + t.l + 1;
    }
    case Family::pp: {
      const auto& p = std::get<PlanePartition>(v);
      return p.rows() + p.cols() + 1;
    }
    case Family::rect:
      return std::get<Rectangulation>(v).n();
    case Family::shuffle:
      return std::get<ShuffleWord>(v).n();
    case Family::yam22:
      return std::get<YamanouchiWord>(v).n();
    case Family::tableaux:
      return std::get<Tableau3xN>(v).n();
  }
  fail(errc::malformed, "unknown family");
}

inline bool is_member(Family f, const FamilyValue& v) {
  switch (f) {
    case Family::baxter:
    case Family::baxter_inv:
      return is_baxter(std::get<Permutation>(v));
    case Family::twisted:
      return is_twisted_baxter(std::get<Permutation>(v));
    case Family::alt_baxter: {
      const auto& w = std::get<Permutation>(v);
      return w.size() % 2 == 0 && is_alternating(w) && is_baxter(w);
    }
    case Family::twin: {
      const auto& p = std::get<TwinPair>(v);
      return is_twin(p.left, p.right);
    }
    case Family::paths: {
      validate_triple(std::get<LatticePathTriple>(v));
      return true;
    }
    case Family::pp:
      return std::get<PlanePartition>(v).height() == 3;
    case Family::rect:
      return true;  // construction already validated the tiling
    case Family::shuffle:
      return true;
    case Family::yam22:
      return avoids(std::get<YamanouchiWord>(v), kAvoid22);
    case Family::tableaux:
      return avoids(word_from_tableau(std::get<Tableau3xN>(v)),
                    kAvoid11 | kAvoid22 | kAvoid33);
  }
  return false;
}

// The natural involution of each family.
inline FamilyValue involute(Family f, const FamilyValue& v) {
  switch (f) {
    case Family::baxter:
    case Family::baxter_inv:
    case Family::twisted:
    case Family::alt_baxter:
      return conjugate_w0(std::get<Permutation>(v));
    case Family::twin:
      return involute_pair(std::get<TwinPair>(v));
    case Family::paths:
      return rotate_paths(std::get<LatticePathTriple>(v));
    case Family::pp:
      return complement_pp(std::get<PlanePartition>(v));
    case Family::rect:
      return rotate_rect(std::get<Rectangulation>(v));
    case Family::shuffle:
      return involute_shuffle(std::get<ShuffleWord>(v));
    case Family::yam22:
      return evac_word(std::get<YamanouchiWord>(v));
    case Family::tableaux:
      return evac_tableau(std::get<Tableau3xN>(v));
  }
  fail(errc::malformed, "unknown family");
}

// (k,l) order of an object within its family.
inline std::pair<int, int> object_order(Family f, const FamilyValue& v) {
  switch (f) {
    case Family::baxter: {
      PermStats s = stats(std::get<Permutation>(v));
      return {s.ascents, s.descents};
    }
    case Family::baxter_inv:
    case Family::twisted: {
      PermStats s = stats(std::get<Permutation>(v));
      return {s.inv_ascents, s.inv_descents};
    }
    case Family::twin: {
      auto [left, right] = leaf_counts(std::get<TwinPair>(v).left);
      return {left - 1, right - 1};
    }
    case Family::paths: {
      const auto& t = std::get<LatticePathTriple>(v);
      return {t.k, t.l};
    }
    case Family::pp: {
      const auto& p = std::get<PlanePartition>(v);
      return {p.cols(), p.rows()};
    }
    case Family::rect:
      return diag_stats(std::get<Rectangulation>(v));
    case Family::yam22:
    case Family::tableaux: {
      YamanouchiWord x = f == Family::tableaux
                             ? word_from_tableau(std::get<Tableau3xN>(v))
                             : std::get<YamanouchiWord>(v);
      int k = baxter_stat_k(x);
      return {k, x.n() - 1 - k};
    }
    default:
      fail(errc::malformed, "family has no (k,l) order");
  }
}

// Exhaustive enumeration of a family at size n, canonically sorted.
inline std::vector<FamilyValue> enumerate_family(Family f, int n) {
  std::vector<FamilyValue> out;
  switch (f) {
    case Family::baxter:
    case Family::baxter_inv:
      for (auto& w : enumerate(PermFamily::baxter, n)) out.emplace_back(std::move(w));
      break;
    case Family::twisted:
      for (auto& w : enumerate(PermFamily::twisted, n)) out.emplace_back(std::move(w));
      break;
    case Family::alt_baxter:
      for (auto& w : enumerate(PermFamily::alt_baxter, 2 * n))
        out.emplace_back(std::move(w));
      break;
    case Family::twin:
      for (auto& p : all_twin_pairs(n)) out.emplace_back(std::move(p));
      break;
    case Family::paths:
      for (int k = 0; k < n; ++k)
        for (auto& t : enumerate_path_triples(k, n - 1 - k))
          out.emplace_back(std::move(t));
      break;
    case Family::pp:
      for (int k = 0; k < n; ++k)
        for (auto& p : enumerate_plane_partitions(n - 1 - k, k, 3))
          out.emplace_back(std::move(p));
      break;
    case Family::rect:
      for (auto& r : enumerate_rectangulations(n)) out.emplace_back(std::move(r));
      break;
    case Family::shuffle:
      for (auto& s : enumerate_shuffles(2 * n)) out.emplace_back(std::move(s));
      break;
    case Family::yam22:
      for (auto& x : enumerate_yamanouchi(n, kAvoid22)) out.emplace_back(std::move(x));
      break;
    case Family::tableaux:
      for (auto& x : enumerate_yamanouchi(n, kAvoid11 | kAvoid22 | kAvoid33))
        out.emplace_back(tableau_from_word(x));
      break;
  }
  return out;
}

struct BijectionEdge {
  std::string name;
  Family src = Family::baxter;
  Family dst = Family::baxter;
  std::function<FamilyValue(const FamilyValue&)> forward;
  std::function<FamilyValue(const FamilyValue&)> inverse;
};

namespace detail {
// Baxter permutation -> 22-avoiding Yamanouchi word, through the chain of
// tree pairs, alternating permutations and shuffle words.
inline YamanouchiWord baxter_to_word(const Permutation& w) {
  TwinPair p = psi_twin(w);
  Permutation alt = psi_inverse_complete(p.left, p.right);
  return shuffle_to_yamanouchi(alt_to_shuffle(alt));
}

inline Permutation word_to_baxter(const YamanouchiWord& x) {
  Permutation alt = shuffle_to_alt(yamanouchi_to_shuffle(x));
  auto [l, r] = completed_psi(alt);
  return psi_inverse_baxter(make_twin(std::move(l), std::move(r)));
}
}  // namespace detail

// The registered bijections. Composite maps chain the primitive ones, so a
// failure localizes to a single primitive.
inline const std::vector<BijectionEdge>& registered_edges() {
  static const std::vector<BijectionEdge> edges = [] {
    std::vector<BijectionEdge> e;
    e.push_back({"psi", Family::baxter, Family::twin,
                 [](const FamilyValue& v) -> FamilyValue {
                   return psi_twin(std::get<Permutation>(v));
                 },
                 [](const FamilyValue& v) -> FamilyValue {
                   return psi_inverse_baxter(std::get<TwinPair>(v));
                 }});
    e.push_back({"twin-paths", Family::twin, Family::paths,
                 [](const FamilyValue& v) -> FamilyValue {
                   return paths_from_twin(std::get<TwinPair>(v));
                 },
                 [](const FamilyValue& v) -> FamilyValue {
                   return twin_from_paths(std::get<LatticePathTriple>(v));
                 }});
    e.push_back({"paths-pp", Family::paths, Family::pp,
                 [](const FamilyValue& v) -> FamilyValue {
                   return pp_from_paths(std::get<LatticePathTriple>(v));
                 },
                 [](const FamilyValue& v) -> FamilyValue {
                   return paths_from_pp(std::get<PlanePartition>(v));
                 }});
    e.push_back({"twin-rect", Family::twin, Family::rect,
                 [](const FamilyValue& v) -> FamilyValue {
                   return rect_from_twin(std::get<TwinPair>(v));
                 },
                 [](const FamilyValue& v) -> FamilyValue {
                   return twin_from_rect(std::get<Rectangulation>(v));
                 }});
    e.push_back({"inverse", Family::baxter, Family::baxter_inv,
                 [](const FamilyValue& v) -> FamilyValue {
                   return inverse(std::get<Permutation>(v));
                 },
                 [](const FamilyValue& v) -> FamilyValue {
                   return inverse(std::get<Permutation>(v));
                 }});
    e.push_back({"congruence", Family::twisted, Family::baxter_inv,
                 [](const FamilyValue& v) -> FamilyValue {
                   return twisted_to_baxter(std::get<Permutation>(v));
                 },
                 [](const FamilyValue& v) -> FamilyValue {
                   return baxter_to_twisted(std::get<Permutation>(v));
                 }});
    e.push_back({"beta", Family::alt_baxter, Family::shuffle,
                 [](const FamilyValue& v) -> FamilyValue {
                   return alt_to_shuffle(std::get<Permutation>(v));
                 },
                 [](const FamilyValue& v) -> FamilyValue {
                   return shuffle_to_alt(std::get<ShuffleWord>(v));
                 }});
    e.push_back({"f", Family::shuffle, Family::yam22,
                 [](const FamilyValue& v) -> FamilyValue {
                   return shuffle_to_yamanouchi(std::get<ShuffleWord>(v));
                 },
                 [](const FamilyValue& v) -> FamilyValue {
                   return yamanouchi_to_shuffle(std::get<YamanouchiWord>(v));
                 }});
    e.push_back({"tableaux", Family::baxter, Family::tableaux,
                 [](const FamilyValue& v) -> FamilyValue {
                   return tableau_from_word(
                       detail::baxter_to_word(std::get<Permutation>(v)));
                 },
                 [](const FamilyValue& v) -> FamilyValue {
                   return detail::word_to_baxter(
                       word_from_tableau(std::get<Tableau3xN>(v)));
                 }});
    return e;
  }();
  return edges;
}

inline const BijectionEdge& edge_by_name(std::string_view name) {
  for (const BijectionEdge& e : registered_edges())
    if (e.name == name) return e;
  fail(errc::malformed, "unknown edge " + std::string(name));
}

struct SquareFailure {
  std::string input, lhs, rhs;
};

struct SquareReport {
  std::string edge;
  int size = 0;
  long checked = 0;
  std::vector<SquareFailure> failures;
  bool ok() const { return failures.empty(); }
};

// Exhaustively verify forward(involute(x)) == involute(forward(x)) and the
// round trip inverse(forward(x)) == x over all source objects of size n.
inline SquareReport check_square(const BijectionEdge& edge, int n) {
  std::vector<FamilyValue> objects = enumerate_family(edge.src, n);
  SquareReport report{edge.name, n, static_cast<long>(objects.size()), {}};
  std::vector<std::vector<SquareFailure>> slots(objects.size());
  parallel_for(objects.size(), [&](std::size_t i) {
    const FamilyValue& x = objects[i];
    FamilyValue fx = edge.forward(x);
    FamilyValue lhs = edge.forward(involute(edge.src, x));
    FamilyValue rhs = involute(edge.dst, fx);
    if (value_key(lhs) != value_key(rhs))
      slots[i].push_back({value_key(x), value_key(lhs), value_key(rhs)});
    FamilyValue back = edge.inverse(fx);
    if (value_key(back) != value_key(x))
      slots[i].push_back({value_key(x), value_key(back), value_key(x)});
  });
  for (auto& s : slots)
    report.failures.insert(report.failures.end(), s.begin(), s.end());
  return report;
}

// ---- censuses against the closed-form counts

struct FamilyCensus {
  Int count = 0;
  Int fixed = 0;
  friend bool operator==(const FamilyCensus&, const FamilyCensus&) = default;
};

struct CensusRow {
  int k = 0, l = 0;
  Int theta_count;    // theta(k,l)
  Int theta_fixed;    // theta_q(k,l) at q = -1
  std::map<std::string, FamilyCensus> families;
  bool consistent = true;
};

struct CensusReport {
  int n = 0;
  std::vector<CensusRow> rows;
  bool consistent = true;
};

// Count objects and involution-fixed objects of every family per (k,l) and
// compare against the polynomial predictions.
inline CensusReport census(int n) {
  require_within(n, desk_limits().max_perm_n, "n");
  static constexpr Family kFamilies[] = {
      Family::baxter, Family::baxter_inv, Family::twisted, Family::paths,
      Family::pp,     Family::rect,       Family::tableaux};
  CensusReport report;
  report.n = n;
  for (int k = 0; k < n; ++k) {
    CensusRow row;
    row.k = k;
    row.l = n - 1 - k;
    row.theta_count = theta(k, row.l);
    row.theta_fixed = fixed_count(k, row.l);
    report.rows.push_back(std::move(row));
  }
  for (Family f : kFamilies) {
    std::vector<FamilyValue> objects = enumerate_family(f, n);
    std::vector<FamilyCensus> per_k(static_cast<std::size_t>(n));
    for (const FamilyValue& x : objects) {
      auto [k, l] = object_order(f, x);
      FamilyCensus& c = per_k[static_cast<std::size_t>(k)];
      c.count += 1;
      if (value_key(involute(f, x)) == value_key(x)) c.fixed += 1;
    }
    for (int k = 0; k < n; ++k) {
      CensusRow& row = report.rows[static_cast<std::size_t>(k)];
      const FamilyCensus& c = per_k[static_cast<std::size_t>(k)];
      row.families[family_name(f)] = c;
      if (c.count != row.theta_count || c.fixed != row.theta_fixed)
        row.consistent = false;
    }
  }
  for (const CensusRow& row : report.rows)
    if (!row.consistent) report.consistent = false;
  return report;
}

}  // namespace baxter
