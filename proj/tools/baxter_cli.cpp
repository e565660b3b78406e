// Command-line surface over the Baxter engine. Subcommands emit JSON lines;
// --format table renders aligned text for humans.

#include <cstdlib>
#include <deque>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "baxter/baxter.hpp"

namespace {

using baxter::Family;
using baxter::FamilyValue;
using baxter::json;

struct Options {
  std::string format = "json";
  int threads = 0;
};

void emit(const Options& opt, const json& j) {
  if (opt.format == "json") {
    std::cout << j.dump() << "\n";
    return;
  }
  // table mode: flat key=value rendering, arrays inline
  if (j.is_object()) {
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) std::cout << "  ";
      first = false;
      std::cout << it.key() << "=" << it.value().dump();
    }
    std::cout << "\n";
  } else {
    std::cout << j.dump() << "\n";
  }
}

int object_n(Family f, const FamilyValue& v) { return baxter::object_size(f, v); }

// Shortest edge path between families, ties broken by registration order.
std::vector<std::pair<const baxter::BijectionEdge*, bool>> edge_path(Family from,
                                                                     Family to) {
  struct Step {
    const baxter::BijectionEdge* edge;
    bool forward;
    Family prev;
  };
  std::map<Family, Step> visited;
  std::deque<Family> queue{from};
  visited[from] = {nullptr, true, from};
  while (!queue.empty()) {
    Family cur = queue.front();
    queue.pop_front();
    if (cur == to) break;
    for (const auto& e : baxter::registered_edges()) {
      if (e.src == cur && !visited.contains(e.dst)) {
        visited[e.dst] = {&e, true, cur};
        queue.push_back(e.dst);
      }
      if (e.dst == cur && !visited.contains(e.src)) {
        visited[e.src] = {&e, false, cur};
        queue.push_back(e.src);
      }
    }
  }
  if (!visited.contains(to)) baxter::fail(baxter::errc::no_path, "no bijection path");
  std::vector<std::pair<const baxter::BijectionEdge*, bool>> path;
  for (Family cur = to; cur != from; cur = visited[cur].prev)
    path.emplace_back(visited[cur].edge, visited[cur].forward);
  std::reverse(path.begin(), path.end());
  return path;
}

Family parse_family(const std::string& name) {
  auto f = baxter::family_from_name(name);
  if (!f) baxter::fail(baxter::errc::malformed, "unknown family " + name);
  return *f;
}

baxter::IntPolynomial poly_for(const std::string& which, int n, int m, int k,
                               int l, int a, int b, int c, int i) {
  using namespace baxter;
  if (which == "qbinomial") return qbinomial(n, k);
  if (which == "theta-q") return theta_q(k, l);
  if (which == "macmahon-q") return macmahon_q(a, b, c);
  if (which == "hoggatt-q") return hoggatt_q(m, k, l);
  if (which == "hoggatt-sum-q") return hoggatt_sum_q(n, m);
  if (which == "baxter-poly") return baxter_poly(n);
  if (which == "gamma-q") return gamma_q(n, i);
  fail(errc::malformed, "unknown polynomial op " + which);
}

int run(int argc, char** argv) {
  CLI::App app{"exact combinatorics of the Baxter object families"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  Options opt;
  std::string config_path;
  app.add_option("--format", opt.format)->check(CLI::IsMember({"json", "table"}));
  app.add_option("--threads", opt.threads);
  app.add_option("--config", config_path);

  std::string family_name, from_name, to_name, edge_name = "all", object_text,
              poly_which;
  int n = 0, k = -1, l = -1, m = 3, a = 0, b = 0, c = 0, idx = 0, max_n = 5;
  bool have_k = false;

  auto* cmd_enum = app.add_subcommand("enumerate", "list all family members");
  cmd_enum->add_option("--family", family_name)->required();
  cmd_enum->add_option("--n", n);
  cmd_enum->add_option("--k", k);
  cmd_enum->add_option("--l", l);

  auto* cmd_map = app.add_subcommand("map", "apply a bijection chain");
  cmd_map->add_option("--from", from_name)->required();
  cmd_map->add_option("--to", to_name)->required();
  cmd_map->add_option("--object", object_text)->required();

  auto* cmd_inv = app.add_subcommand("involute", "apply a family involution");
  cmd_inv->add_option("--family", family_name)->required();
  cmd_inv->add_option("--object", object_text)->required();

  auto* cmd_fixed = app.add_subcommand("fixed", "involution fixed-point counts");
  cmd_fixed->add_option("--family", family_name);
  cmd_fixed->add_option("--k", k);
  cmd_fixed->add_option("--l", l);
  cmd_fixed->add_option("--n", n);

  auto* cmd_poly = app.add_subcommand("poly", "exact polynomial values");
  cmd_poly->add_option("which", poly_which)->required();
  cmd_poly->add_option("--n", n);
  cmd_poly->add_option("--m", m);
  cmd_poly->add_option("--k", k);
  cmd_poly->add_option("--l", l);
  cmd_poly->add_option("--a", a);
  cmd_poly->add_option("--b", b);
  cmd_poly->add_option("--c", c);
  cmd_poly->add_option("--i", idx);

  auto* cmd_verify = app.add_subcommand("verify", "commuting-square checks");
  cmd_verify->add_option("--edge", edge_name);
  cmd_verify->add_option("--max-n", max_n);

  auto* cmd_census = app.add_subcommand("census", "family counts per (k,l)");
  cmd_census->add_option("--n", n)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  if (opt.threads > 0) baxter::set_worker_count(opt.threads);
  if (const char* cap = std::getenv("BAXTER_LIMIT_N")) {
    baxter::desk_limits().max_perm_n = std::atoi(cap);
    baxter::desk_limits().max_fiber_n = std::atoi(cap);
  }
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) baxter::fail(baxter::errc::malformed, "cannot read " + config_path);
    json cfg = json::parse(in);
    if (cfg.contains("max_n")) baxter::desk_limits().max_perm_n = cfg["max_n"];
    if (cfg.contains("max_alt_len")) baxter::desk_limits().max_alt_len = cfg["max_alt_len"];
    if (cfg.contains("max_fiber_n")) baxter::desk_limits().max_fiber_n = cfg["max_fiber_n"];
  }
  have_k = k >= 0;

  if (cmd_enum->parsed()) {
    Family f = parse_family(family_name);
    if (n == 0 && have_k && l >= 0) n = k + l + 1;
    if (n <= 0) baxter::fail(baxter::errc::malformed, "need --n or --k/--l");
    for (const FamilyValue& v : baxter::enumerate_family(f, n)) {
      if (have_k && baxter::object_order(f, v).first != k) continue;
      emit(opt, baxter::to_json(f, v));
    }
    return 0;
  }
  if (cmd_map->parsed()) {
    Family from = parse_family(from_name), to = parse_family(to_name);
    FamilyValue v = baxter::value_from_json(from, json::parse(object_text));
    if (!baxter::is_member(from, v))
      baxter::fail(baxter::errc::not_member, "object is not in " + from_name);
    for (auto [edge, forward] : edge_path(from, to))
      v = forward ? edge->forward(v) : edge->inverse(v);
    emit(opt, baxter::to_json(to, v));
    return 0;
  }
  if (cmd_inv->parsed()) {
    Family f = parse_family(family_name);
    FamilyValue v = baxter::value_from_json(f, json::parse(object_text));
    if (!baxter::is_member(f, v))
      baxter::fail(baxter::errc::not_member, "object is not in " + family_name);
    emit(opt, baxter::to_json(f, baxter::involute(f, v)));
    return 0;
  }
  if (cmd_fixed->parsed()) {
    if (!family_name.empty()) {
      Family f = parse_family(family_name);
      if (n == 0) n = k + l + 1;
      baxter::Int count = 0, fixed = 0;
      for (const FamilyValue& v : baxter::enumerate_family(f, n)) {
        if (have_k && baxter::object_order(f, v).first != k) continue;
        count += 1;
        if (baxter::value_key(baxter::involute(f, v)) == baxter::value_key(v))
          fixed += 1;
      }
      emit(opt, json{{"family", family_name}, {"n", n}, {"k", have_k ? json(k) : json()},
                     {"count", count.str()}, {"fixed", fixed.str()}});
    } else {
      if (!have_k || l < 0) baxter::fail(baxter::errc::malformed, "need --k and --l");
      emit(opt, json{{"k", k}, {"l", l}, {"theta", baxter::theta(k, l).str()},
                     {"fixed", baxter::fixed_count(k, l).str()}});
    }
    return 0;
  }
  if (cmd_poly->parsed()) {
    json out{{"op", poly_which}};
    if (poly_which == "theta") {
      out["k"] = k; out["l"] = l;
      out["value"] = baxter::theta(k, l).str();
    } else if (poly_which == "hoggatt-sum") {
      out["n"] = n; out["m"] = m;
      out["value"] = baxter::hoggatt_sum(n, m).str();
    } else if (poly_which == "ffon") {
      out["k"] = k; out["l"] = l;
      out["value"] = baxter::ffon_fixed(k, l).str();
    } else if (poly_which == "gamma-closed") {
      out["n"] = n; out["i"] = idx;
      baxter::Rat g = baxter::gamma_closed(n, idx);
      out["value"] = g.str();
    } else if (poly_which == "baxter-poly-tq") {
      out["n"] = n;
      out["coeffs"] = baxter::to_json(baxter::baxter_poly_tq(n));
    } else if (poly_which == "real-rooted") {
      out["n"] = n;
      out["value"] = baxter::is_real_rooted(baxter::baxter_poly(n));
    } else {
      baxter::IntPolynomial p = poly_for(poly_which, n, m, k, l, a, b, c, idx);
      out["coeffs"] = baxter::to_json(p);
    }
    emit(opt, out);
    return 0;
  }
  if (cmd_verify->parsed()) {
    bool any_failed = false;
    for (const auto& e : baxter::registered_edges()) {
      if (edge_name != "all" && e.name != edge_name) continue;
      for (int size = 1; size <= max_n; ++size) {
        baxter::SquareReport r = baxter::check_square(e, size);
        emit(opt, baxter::to_json(r));
        if (!r.ok()) any_failed = true;
      }
    }
    return any_failed ? 3 : 0;
  }
  if (cmd_census->parsed()) {
    baxter::CensusReport r = baxter::census(n);
    for (const baxter::CensusRow& row : r.rows) emit(opt, baxter::to_json(row));
    return r.consistent ? 0 : 3;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const baxter::Error& e) {
    std::cout << json{{"error", baxter::errc_name(e.code())},
                      {"message", e.what()}}
                     .dump()
              << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cout << json{{"error", "Internal"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
}
