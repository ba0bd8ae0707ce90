#include <chrono>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include "mvcr/io.hpp"
#include "mvcr/verify.hpp"
#include "oracles.hpp"

using namespace mvcr;

namespace {

std::string witness_dir = ".";

bool hull_equals_bruhat_orbit(const WeylGroup& W, const GGMSDatum& d, WeylElt x, const Coweight& lam) {
  std::vector<Coweight> pts;
  for (WeylElt w : W.elements())
    if (oracle::bruhat_by_subwords(W, w, x)) pts.push_back(W.act(w, lam));
  const auto verts = d.vertices();
  for (const auto& v : verts)
    if (!oracle::in_convex_hull(pts, v)) return false;
  for (const auto& p : pts)
    if (!oracle::in_convex_hull(verts, p)) return false;
  return true;
}

bool crystal_cardinality() {
  const std::vector<std::pair<const char*, Coweight>> cases{
      {"A2", Coweight{1, 0}},    {"A2", Coweight{0, 1}},    {"A2", Coweight{1, 1}},
      {"A2", Coweight{2, 0}},    {"A3", Coweight{1, 0, 0}}, {"A3", Coweight{0, 1, 0}},
      {"A1xA1", Coweight{1, 1}}, {"A1xA1", Coweight{1, 0}}, {"A1xA1", Coweight{2, 1}}};
  for (const auto& [type, lam] : cases) {
    const auto rs = RootSystem::make(type);
    const auto cr = generate_mv(rs, lam);
    if (static_cast<Int>(cr.size()) != oracle::weyl_dimension(rs->weyl(), lam)) return false;
    std::map<Coweight, Int> m;
    for (const auto& P : cr.nodes()) ++m[wt(P)];
    if (m != oracle::freudenthal(rs->weyl(), lam)) return false;
  }
  return true;
}

bool move_consistency() {
  for (const auto& [type, lam] : std::vector<std::pair<const char*, Coweight>>{{"A3", Coweight{1, 0, 0}},
                                                                              {"A2", Coweight{1, 1}}}) {
    const auto rs = RootSystem::make(type);
    const auto cr = generate_mv(rs, lam);
    const auto tree = rs->bfs_from(0);
    const std::size_t none = static_cast<std::size_t>(-1);
    for (const auto& P : cr.nodes()) {
      std::vector<LusztigDatum> at(rs->words().size());
      at[0] = lusztig_datum(*rs, P, 0);
      for (const auto& [u, e] : tree)
        if (e != none) at[u] = apply_move(*rs, at[rs->edges()[e].from], rs->edges()[e]);
      for (std::size_t u = 0; u < at.size(); ++u)
        if (at[u] != lusztig_datum(*rs, P, u)) return false;
      // Every edge closes a cycle with the tree; each must return the datum unchanged.
      for (const auto& edge : rs->edges())
        if (apply_move(*rs, at[edge.from], edge) != at[edge.to]) return false;
    }
  }
  return true;
}

bool n_multiple_commutes() {
  const auto rs = RootSystem::make("A2");
  const Coweight lam{1, 1};
  const auto cr = generate_mv(rs, lam);
  for (Int n : {2, 3})
    for (const auto& P : cr.nodes())
      for (int j = 0; j < 2; ++j) {
        const auto fp = f(*rs, P, j);
        const auto fs = f_power(*rs, s_multiple(P, n), j, n);
        if (fp.has_value() != fs.has_value()) return false;
        if (fp && s_multiple(*fp, n) != *fs) return false;
      }
  return true;
}

bool scale_is_minkowski() {
  const auto rs = RootSystem::make("A2");
  const auto cr = generate_mv(rs, Coweight{1, 1});
  for (const auto& P : cr.nodes()) {
    GGMSDatum acc = P.datum;
    if (scale(P.datum, 1) != acc) return false;
    for (Int n = 2; n <= 4; ++n) {
      acc = minkowski_sum(acc, P.datum);
      if (scale(P.datum, n) != acc) return false;
    }
  }
  return true;
}

bool extremal_hulls() {
  const auto rs = RootSystem::make("A2");
  const WeylGroup& W = rs->weyl();
  for (const Coweight lam : {Coweight{1, 1}, Coweight{1, 0}, Coweight{0, 1}, Coweight{2, 1}})
    for (WeylElt x : W.elements()) {
      const auto P = extremal_polytope(*rs, x, lam);
      for (std::size_t u = 0; u < rs->words().size(); ++u) {
        const auto s = y_sequence(*rs, x, u);
        for (std::size_t l = 0; l < s.y.size(); ++l)
          if (P.datum[rs->prefixes(u)[l]] != W.act(s.y[l], lam)) return false;
      }
      if (!is_mv_datum(*rs, P.datum)) return false;
      if (!hull_equals_bruhat_orbit(W, P.datum, x, lam)) return false;
      if (check_extremal_edges(W, P.datum)) return false;
    }
  return true;
}

bool demazure_cross_validation() {
  const auto rs = RootSystem::make("A2");
  const WeylGroup& W = rs->weyl();
  for (const Coweight lam : {Coweight{1, 0}, Coweight{1, 1}}) {
    const auto cr = generate_mv(rs, lam);
    for (WeylElt x : W.elements()) {
      const auto a = demazure_members_along(cr, W.word(x));
      if (a != demazure_set_recursive(cr, x).members) return false;
      if (weight_character(cr, a) != demazure_character(W, x, lam)) return false;
    }
  }
  return true;
}

bool all_pass(const VerificationReport& r) { return r.overall() == Status::Pass && !r.instances.empty(); }

bool main_and_corollary() {
  for (const auto& [type, lam] : std::vector<std::pair<const char*, Coweight>>{{"A2", Coweight{1, 1}},
                                                                              {"A3", Coweight{1, 0, 0}}}) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto rs = RootSystem::make(type);
    if (!all_pass(verify_main_theorem(rs, lam, {}, 24, 0))) return false;
    if (!all_pass(verify_corollary(rs, lam, {}, 0))) return false;
    if (std::chrono::steady_clock::now() - t0 > std::chrono::seconds(60)) return false;
  }
  return true;
}

bool tensor_estimate() {
  const auto rs = RootSystem::make("A2");
  for (const auto& [a, b] : std::vector<std::pair<Coweight, Coweight>>{
           {Coweight{1, 0}, Coweight{1, 0}}, {Coweight{1, 0}, Coweight{0, 1}}, {Coweight{1, 1}, Coweight{1, 0}}})
    if (!all_pass(verify_tensor_estimate(rs, a, b, false, 0))) return false;
  return true;
}

bool min_ext() {
  const auto rs = RootSystem::make("A2");
  for (const auto& [a, b] : std::vector<std::pair<Coweight, Coweight>>{{Coweight{1, 0}, Coweight{0, 1}},
                                                                      {Coweight{1, 0}, Coweight{1, 0}}}) {
    const auto r = verify_min_ext(rs, a, b, 0);
    if (!all_pass(r) || r.instances.size() != rs->weyl().size()) return false;
  }
  return true;
}

bool converse_probe() {
  Json all = Json::array();
  for (const auto& [type, lam] : std::vector<std::pair<const char*, Coweight>>{
           {"A2", Coweight{1, 1}}, {"A2", Coweight{2, 1}}, {"A3", Coweight{1, 0, 0}}, {"A3", Coweight{0, 1, 0}}}) {
    const auto rep = verify_corollary(RootSystem::make(type), lam, {}, 0);
    for (const auto& w : rep.extra.at("converse").at("witnesses")) all.push_back(w);
  }
  if (all.empty()) return false;
  const auto path = std::filesystem::path(witness_dir) / "converse_witnesses.json";
  {
    std::ofstream out(path);
    out << Json{{"witnesses", all}}.dump(2) << "\n";
  }
  std::ifstream in(path);
  const Json loaded = Json::parse(in);
  if (loaded.at("witnesses").size() != all.size()) return false;
  for (const auto& w : loaded.at("witnesses"))
    if (!recheck_converse_witness(converse_witness_from_json(w))) return false;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; ++i)
    if (std::strcmp(argv[i], "--witness-dir") == 0) witness_dir = argv[i + 1];

  struct Criterion {
    const char* name;
    double limit_s;
    std::function<bool()> run;
  };
  const std::vector<Criterion> criteria{
      {"crystal cardinality and character", 5, crystal_cardinality},
      {"move consistency on fundamental cycles", 10, move_consistency},
      {"S_N commutes with f_j", 10, n_multiple_commutes},
      {"scale equals N-fold Minkowski sum", 5, scale_is_minkowski},
      {"extremal polytopes equal Bruhat hulls", 5, extremal_hulls},
      {"Demazure cross-validation", 10, demazure_cross_validation},
      {"extremal factorization and containments", 120, main_and_corollary},
      {"tensor product estimate", 120, tensor_estimate},
      {"minimal extremal sums", 10, min_ext},
      {"converse failure probe", 60, converse_probe},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string err;
    try {
      ok = criteria[k].run();
    } catch (const std::exception& e) {
      err = e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = s < criteria[k].limit_s;
    const bool pass = ok && in_time;
    failed += !pass;
    std::printf("[%s] %2zu %-42s %8.3fs (limit %gs)%s%s\n", pass ? "PASS" : "FAIL", k + 1, criteria[k].name, s,
                criteria[k].limit_s, in_time ? "" : " over time", err.empty() ? "" : (" error: " + err).c_str());
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed ? 1 : 0;
}
