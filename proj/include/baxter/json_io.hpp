#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "baxter/harness.hpp"

namespace baxter {

using json = nlohmann::json;

// Wire formats:
//   permutation       [3,1,2,4]
//   tree              "(- (- -))"        (canonical string)
//   twin pair         ["(..)", "(..)"]
//   path triple       {"k":2,"l":1,"paths":["EEN","EEN","EEN"]}
//   plane partition   {"box":[2,3,3],"rows":[[3,2,0],[1,0,0]]}
//                     (row-major entries; the box tag keeps degenerate
//                     zero-row boxes unambiguous)
//   rectangulation    [[x1,y1,x2,y2],...] sorted by diagonal cell
//   shuffle word      "abAB"             (A, B close a, b)
//   yamanouchi word   "112233"
//   tableau           [[1,2],[3,4],[5,6]]
//   polynomial        ["1","1","2"]      (decimal strings, index = exponent)

inline json to_json(const Permutation& w) { return json(w.one_line()); }

inline json to_json(const TwinPair& p) {
  return json::array({serialize(p.left), serialize(p.right)});
}

inline json to_json(const LatticePathTriple& t) {
  return json{{"k", t.k}, {"l", t.l}, {"paths", t.paths}};
}

inline json to_json(const PlanePartition& p) {
  return json{{"box", json::array({p.rows(), p.cols(), p.height()})},
              {"rows", p.entries()}};
}

inline json to_json(const Rectangulation& r) {
  json out = json::array();
  for (const Rect& q : r.rects())
    out.push_back(json::array({q.x1, q.y1, q.x2, q.y2}));
  return out;
}

inline json to_json(const ShuffleWord& s) { return json(s.str()); }
inline json to_json(const YamanouchiWord& x) { return json(x.str()); }
inline json to_json(const Tableau3xN& t) { return json(t.rows()); }

inline json to_json(const IntPolynomial& p) { return json(p.coeff_strings()); }

inline json to_json(const BiPolynomial& p) {
  json out = json::array();
  for (const IntPolynomial& c : p.t_coeffs()) out.push_back(to_json(c));
  return out;
}

inline json to_json(Family, const FamilyValue& v) {
  return std::visit([](const auto& x) { return to_json(x); }, v);
}

inline json to_json(const Fiber& f) {
  json members = json::array();
  for (const Permutation& m : f.members) members.push_back(to_json(m));
  return json{{"members", members},
              {"bottom", to_json(f.bottom)},
              {"top", to_json(f.top)}};
}

inline json to_json(const SquareReport& r) {
  json failures = json::array();
  for (const SquareFailure& f : r.failures)
    failures.push_back(json{{"input", f.input}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  return json{{"edge", r.edge},
              {"size", r.size},
              {"checked", r.checked},
              {"failures", failures}};
}

inline json to_json(const CensusRow& row) {
  json families;
  for (const auto& [name, c] : row.families)
    families[name] = json{{"count", c.count.str()}, {"fixed", c.fixed.str()}};
  return json{{"k", row.k},
              {"l", row.l},
              {"theta", row.theta_count.str()},
              {"theta_at_minus_1", row.theta_fixed.str()},
              {"families", families},
              {"consistent", row.consistent}};
}

inline Permutation permutation_from_json(const json& j) {
  if (!j.is_array()) fail(errc::malformed, "permutation must be a JSON array");
  return Permutation(j.get<std::vector<int>>());
}

inline FamilyValue value_from_json(Family f, const json& j) {
  switch (f) {
    case Family::baxter:
    case Family::baxter_inv:
    case Family::twisted:
    case Family::alt_baxter:
      return permutation_from_json(j);
    case Family::twin: {
      if (!j.is_array() || j.size() != 2)
        fail(errc::malformed, "twin pair must be a two-element array");
      return make_twin(parse_tree(j[0].get<std::string>()),
                       parse_tree(j[1].get<std::string>()));
    }
    case Family::paths: {
      LatticePathTriple t;
      t.k = j.at("k").get<int>();
      t.l = j.at("l").get<int>();
      auto p = j.at("paths").get<std::vector<std::string>>();
      if (p.size() != 3) fail(errc::malformed, "need three paths");
      t.paths = {p[0], p[1], p[2]};
      validate_triple(t);
      return t;
    }
    case Family::pp: {
      if (j.is_array()) {  // bare row-major entries
        auto rows = j.get<std::vector<std::vector<int>>>();
        int r = static_cast<int>(rows.size());
        int c = rows.empty() ? 0 : static_cast<int>(rows[0].size());
        return PlanePartition(r, c, 3, std::move(rows));
      }
      auto box = j.at("box").get<std::vector<int>>();
      if (box.size() != 3) fail(errc::malformed, "box needs three entries");
      return PlanePartition(box[0], box[1], box[2],
                            j.at("rows").get<std::vector<std::vector<int>>>());
    }
    case Family::rect: {
      auto quads = j.get<std::vector<std::vector<int>>>();
      std::vector<Rect> rects;
      for (const auto& q : quads) {
        if (q.size() != 4) fail(errc::malformed, "rectangle needs 4 coordinates");
        rects.push_back(Rect{q[0], q[1], q[2], q[3]});
      }
      int n = static_cast<int>(rects.size());
      return Rectangulation(n, std::move(rects));
    }
    case Family::shuffle:
      return ShuffleWord(j.get<std::string>());
    case Family::yam22:
      return YamanouchiWord(j.get<std::string>());
    case Family::tableaux: {
      auto rows = j.get<std::vector<std::vector<int>>>();
      if (rows.size() != 3) fail(errc::malformed, "tableau needs 3 rows");
      return Tableau3xN({rows[0], rows[1], rows[2]});
    }
  }
  fail(errc::malformed, "unknown family");
}

}  // namespace baxter
