// mvcr: command-line front end for MV crystals, Demazure crystals and the verification suite.

#include <cerrno>
#include <cstring>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mvcr/mvcr.hpp"

using namespace mvcr;

namespace {

struct RunConfig {
  std::string cartan;
  std::string lambda;
  std::string x;
  std::string lambda1;
  std::string lambda2;
  long nmax = 24;
  std::string out;
  std::string dot;
  std::string format = "json";
  unsigned jobs = 0;
  bool conjecture = false;
  long node = -1;
};

// A config error names the flag it came from.
struct ConfigError : Error {
  ConfigError(const std::string& field, const std::string& what) : Error("--" + field + ": " + what) {}
};

template <typename Fn>
auto field(const std::string& name, Fn&& fn) {
  try {
    return fn();
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(name, e.what());
  }
}

RootSystemPtr load_cartan(const RunConfig& cfg) {
  if (cfg.cartan.empty()) throw ConfigError("cartan", "required");
  return field("cartan", [&] { return RootSystem::make(cfg.cartan); });
}

Coweight load_dominant(const std::string& name, const std::string& text, const RootSystem& rs) {
  if (text.empty()) throw ConfigError(name, "required");
  return field(name, [&] {
    Coweight v = parse_coweight(text, rs.rank());
    if (!v.is_dominant()) throw NotDominant(v.str() + " is not dominant");
    return v;
  });
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + ": " + std::strerror(errno));
  f << text;
  if (!f) throw std::runtime_error("cannot write " + path + ": " + std::strerror(errno));
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

int exit_code(Status s) {
  switch (s) {
    case Status::Pass: return 0;
    case Status::Fail: return 1;
    case Status::Inconclusive: return 2;
  }
  return 1;
}

void print_summary(const VerificationReport& r) {
  std::cerr << r.theorem << ": " << r.instances.size() << " instances, " << r.count(Status::Pass) << " pass, "
            << r.count(Status::Fail) << " fail, " << r.count(Status::Inconclusive) << " inconclusive ("
            << r.wall_ms << " ms)\n";
  if (r.extra.contains("converse"))
    std::cerr << "  converse scan: " << r.extra["converse"]["count"] << " polytope(s) inside P_{x.lambda} outside MV_x\n";
  if (r.extra.contains("conjecture"))
    std::cerr << "  conjecture mode (experimental): " << r.extra["conjecture"]["violations"].size() << " violation(s) in "
              << r.extra["conjecture"]["checked"] << " non-extremal case(s)\n";
}

std::vector<WeylElt> selected_x(const RunConfig& cfg, const RootSystem& rs) {
  if (cfg.x.empty()) return {};
  return {field("x", [&] { return parse_weyl(rs.weyl(), cfg.x); })};
}

int cmd_crystal(const RunConfig& cfg) {
  const auto rsp = load_cartan(cfg);
  const Coweight lam = load_dominant("lambda", cfg.lambda, *rsp);
  const MVCrystal cr = generate_mv(rsp, lam, cfg.jobs);
  const ExtremalFamily family(rsp, lam);
  if (cfg.format == "json") write_output(cfg.out, dump(crystal_to_json(cr, &family)));
  else if (cfg.format == "dot") write_output(cfg.out, crystal_to_dot(cr, &family));
  else write_output(cfg.out, crystal_to_tsv(cr));
  if (!cfg.dot.empty()) write_output(cfg.dot, crystal_to_dot(cr, &family));
  std::cerr << "MV" << lam.str() << " in " << rsp->cartan().name() << ": " << cr.size() << " nodes\n";
  return 0;
}

int cmd_verify(const RunConfig& cfg, const std::string& which) {
  const auto rsp = load_cartan(cfg);
  std::vector<VerificationReport> reports;
  const bool all = which == "all";
  if (which == "main" || which == "corollary" || which == "sanity" || (all && !cfg.lambda.empty())) {
    const Coweight lam = load_dominant("lambda", cfg.lambda, *rsp);
    const auto xs = selected_x(cfg, *rsp);
    if (which == "main" || all) reports.push_back(verify_main_theorem(rsp, lam, xs, cfg.nmax, cfg.jobs));
    if (which == "corollary" || all) reports.push_back(verify_corollary(rsp, lam, xs, cfg.jobs));
    if (which == "sanity" || all) reports.push_back(crystal_sanity(rsp, lam, cfg.jobs));
  }
  if (which == "tensor" || which == "minext" || (all && !cfg.lambda1.empty())) {
    const Coweight l1 = load_dominant("lambda1", cfg.lambda1, *rsp);
    const Coweight l2 = load_dominant("lambda2", cfg.lambda2, *rsp);
    if (which == "tensor" || all) reports.push_back(verify_tensor_estimate(rsp, l1, l2, cfg.conjecture, cfg.jobs));
    if (which == "minext" || all) reports.push_back(verify_min_ext(rsp, l1, l2, cfg.jobs));
  }
  if (reports.empty()) throw ConfigError("lambda", "'verify all' needs --lambda and/or --lambda1/--lambda2");
  Status worst = Status::Pass;
  for (const auto& r : reports) {
    print_summary(r);
    const Status s = r.overall();
    if (s == Status::Fail || (s == Status::Inconclusive && worst == Status::Pass)) worst = s;
  }
  if (reports.size() == 1) {
    write_output(cfg.out, dump(report_to_json(reports.front())));
  } else {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r));
    write_output(cfg.out, dump(Json{{"reports", arr}}));
  }
  return exit_code(worst);
}

int cmd_demazure(const RunConfig& cfg) {
  const auto rsp = load_cartan(cfg);
  const WeylGroup& W = rsp->weyl();
  const Coweight lam = load_dominant("lambda", cfg.lambda, *rsp);
  if (cfg.x.empty()) throw ConfigError("x", "required");
  const WeylElt x = field("x", [&] { return parse_weyl(W, cfg.x); });
  const WeylElt rep = W.min_coset_rep(x, lam);
  if (rep != x)
    std::cerr << "note: x = " << W.word_string(x) << " reduced to its minimal coset representative "
              << W.word_string(rep) << "\n";
  const MVCrystal cr = generate_mv(rsp, lam, cfg.jobs);
  const ExtremalFamily family(rsp, lam);
  const DemazureSet D = demazure_set(cr, rep);
  const Json listing = demazure_to_json(cr, D, family);
  if (cfg.format == "tsv") {
    std::ostringstream os;
    os << "id\twt\tlusztig\textremal\tinside_extremal\n";
    for (const auto& row : listing["members"]) {
      std::string l;
      for (const auto& v : row["lusztig"]) l += (l.empty() ? "" : ",") + v.dump();
      os << row["id"] << "\t" << Coweight(row["wt"].get<std::vector<Int>>()).str() << "\t" << l << "\t"
         << (row["extremal"].is_null() ? "-" : row["extremal"].get<std::string>()) << "\t"
         << (row["inside_extremal"].get<bool>() ? "yes" : "no") << "\n";
    }
    write_output(cfg.out, os.str());
  } else {
    write_output(cfg.out, dump(listing));
  }
  std::cerr << "MV_" << W.word_string(rep) << lam.str() << ": " << D.members.size() << " members\n";
  return 0;
}

int cmd_factor(const RunConfig& cfg) {
  const auto rsp = load_cartan(cfg);
  const RootSystem& rs = *rsp;
  const Coweight lam = load_dominant("lambda", cfg.lambda, rs);
  const MVCrystal cr = generate_mv(rsp, lam, cfg.jobs);
  const ExtremalFamily family(rsp, lam);
  std::vector<std::size_t> ids;
  if (cfg.node >= 0) {
    if (static_cast<std::size_t>(cfg.node) >= cr.size()) throw ConfigError("node", "no such node");
    ids.push_back(static_cast<std::size_t>(cfg.node));
  } else {
    for (std::size_t k = 0; k < cr.size(); ++k) ids.push_back(k);
  }
  std::vector<Json> rows(ids.size());
  bool missing = false;
  parallel_for(ids.size(), cfg.jobs, [&](std::size_t t) {
    const MVPolytope& P = cr.node(ids[t]);
    try {
      const Factorization fz = extremal_factorization(rs, P, family, cfg.nmax);
      rows[t] = factorization_to_json(rs.weyl(), ids[t], fz, ls_path(rs, P, fz));
    } catch (const NotFound& nf) {
      rows[t] = Json{{"P_id", ids[t]}, {"not_found", nf.nmax()}};
    }
  });
  Json arr = Json::array();
  for (auto& r : rows) {
    missing = missing || r.contains("not_found");
    arr.push_back(std::move(r));
  }
  write_output(cfg.out,
               dump(Json{{"cartan", rs.cartan().name()}, {"lambda", to_json(lam)}, {"nmax", cfg.nmax}, {"factorizations", arr}}));
  return missing ? 2 : 0;
}

// Re-imports a crystal export (must reproduce it byte for byte) or re-checks the converse
// witnesses stored in a corollary report.
int cmd_check(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + ": " + std::strerror(errno));
  std::stringstream buf;
  buf << f.rdbuf();
  const std::string text = buf.str();
  const Json j = Json::parse(text);
  auto check_converse = [](const Json& holder) {
    std::size_t bad = 0;
    for (const auto& w : holder.at("witnesses")) bad += !recheck_converse_witness(converse_witness_from_json(w));
    std::cerr << holder.at("witnesses").size() << " converse witness(es) rechecked, " << bad << " failed\n";
    return bad;
  };
  if (j.contains("nodes")) {
    const MVCrystal cr = crystal_from_json(j);
    const ExtremalFamily family(cr.root_system_ptr(), cr.lambda());
    const bool flags = !j["nodes"].empty() && j["nodes"][0].contains("extremal");
    const bool same = dump(crystal_to_json(cr, flags ? &family : nullptr)) == text;
    std::cerr << "crystal with " << cr.size() << " nodes re-imported; round trip " << (same ? "identical" : "DIFFERS") << "\n";
    return same ? 0 : 1;
  }
  std::size_t bad = 0;
  if (j.contains("witnesses")) bad += check_converse(j);
  else if (j.contains("converse")) bad += check_converse(j["converse"]);
  else if (j.contains("reports")) {
    for (const auto& r : j["reports"])
      if (r.contains("converse")) bad += check_converse(r["converse"]);
  } else throw ParseError(path + ": neither a crystal export nor a file with converse witnesses");
  return bad ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"MV polytopes, crystals and Demazure crystals for simply-laced root systems"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML file with option values (keys as the long flag names)");
  RunConfig cfg;
  app.add_option("--cartan", cfg.cartan, "Cartan type, e.g. A2, D4, A1xA1");
  app.add_option("--lambda", cfg.lambda, "dominant coweight in fundamental-coweight coordinates, e.g. 1,1");
  app.add_option("--x", cfg.x, "Weyl group element as a word in 1-based generators, e.g. 121 or 1,2,1");
  app.add_option("--lambda1", cfg.lambda1, "right tensor factor highest weight");
  app.add_option("--lambda2", cfg.lambda2, "left tensor factor highest weight");
  app.add_option("--nmax", cfg.nmax, "largest N tried by the extremal factorization search")
      ->envname("MVCR_NMAX")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", cfg.out, "output file (default: stdout)");
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "dot", "tsv"}));
  app.add_option("--jobs", cfg.jobs, "worker threads (0: all cores)");
  app.add_flag("--conjecture", cfg.conjecture, "also test non-extremal left factors (experimental)");

  auto* crystal = app.add_subcommand("crystal", "export MV(lambda) as JSON, DOT or TSV");
  crystal->add_option("--dot", cfg.dot, "also write DOT to this file");
  std::string which;
  auto* verify = app.add_subcommand("verify", "run verification suites and write a JSON report");
  verify->add_option("suite", which, "main, corollary, tensor, minext, sanity or all")
      ->required()
      ->check(CLI::IsMember({"main", "corollary", "tensor", "minext", "sanity", "all"}));
  auto* demazure = app.add_subcommand("demazure", "list the Demazure crystal MV_x(lambda)");
  auto* factor = app.add_subcommand("factor", "extremal factorizations K_N(P) and their paths");
  factor->add_option("--node", cfg.node, "only this node id");
  std::string check_path;
  auto* check = app.add_subcommand("check", "re-import a crystal export or re-check stored converse witnesses");
  check->add_option("file", check_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (crystal->parsed()) return cmd_crystal(cfg);
    if (verify->parsed()) return cmd_verify(cfg, which);
    if (demazure->parsed()) return cmd_demazure(cfg);
    if (factor->parsed()) return cmd_factor(cfg);
    if (check->parsed()) return cmd_check(check_path);
  } catch (const std::exception& e) {
    std::cerr << "mvcr: error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}
