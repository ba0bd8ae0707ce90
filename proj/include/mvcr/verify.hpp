#pragma once

#include <chrono>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mvcr/character.hpp"
#include "mvcr/codec.hpp"
#include "mvcr/demazure.hpp"
#include "mvcr/extremal.hpp"
#include "mvcr/mvcrystal.hpp"
#include "mvcr/parallel.hpp"
#include "mvcr/tensorops.hpp"

namespace mvcr {

enum class Status { Pass, Fail, Inconclusive };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Inconclusive: return "inconclusive";
  }
  return "?";
}

struct Instance {
  std::string id;
  Status status = Status::Pass;
  Json witness;
};

struct VerificationReport {
  std::string theorem;
  std::string cartan;
  Json params = Json::object();
  std::vector<Instance> instances;
  Json extra = Json::object();  // side scans (converse, conjecture mode)
  double wall_ms = 0;

  std::size_t count(Status s) const {
    std::size_t c = 0;
    for (const auto& i : instances) c += i.status == s;
    return c;
  }
  Status overall() const {
    if (count(Status::Fail)) return Status::Fail;
    if (count(Status::Inconclusive)) return Status::Inconclusive;
    return Status::Pass;
  }
};

/// Deterministic JSON form (wall time is left out so that reruns are byte-identical).
inline Json report_to_json(const VerificationReport& r) {
  Json j;
  j["theorem"] = r.theorem;
  j["cartan"] = r.cartan;
  for (auto it = r.params.begin(); it != r.params.end(); ++it) j[it.key()] = it.value();
  Json inst = Json::array();
  for (const auto& i : r.instances) {
    Json e;
    e["id"] = i.id;
    e["status"] = status_name(i.status);
    e["witness"] = i.witness;
    inst.push_back(std::move(e));
  }
  j["instances"] = std::move(inst);
  for (auto it = r.extra.begin(); it != r.extra.end(); ++it) j[it.key()] = it.value();
  j["summary"] = {{"instances", r.instances.size()},
                  {"pass", r.count(Status::Pass)},
                  {"fail", r.count(Status::Fail)},
                  {"inconclusive", r.count(Status::Inconclusive)},
                  {"status", status_name(r.overall())}};
  return j;
}

namespace detail {

inline Json containment_json(const WeylGroup& W, const ContainmentWitness& w) {
  return Json{{"reason", "containment"},
              {"vertex", W.word_string(w.vertex)},
              {"chamber", W.word_string(w.chamber)},
              {"point", to_json(w.point)}};
}

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline std::vector<WeylElt> coset_list(const WeylGroup& W, const Coweight& lambda, const std::vector<WeylElt>& xs) {
  if (!xs.empty()) {
    std::vector<WeylElt> out;
    for (WeylElt x : xs) out.push_back(W.min_coset_rep(x, lambda));
    return out;
  }
  return W.min_coset_reps(lambda);
}

inline std::string node_id(const WeylGroup& W, WeylElt x, std::size_t k) {
  return "x=" + W.word_string(x) + "/P" + std::to_string(k);
}

}  // namespace detail

/// N . P is contained in P_{x_1.lambda} + ... + P_{x_N.lambda} with x >= x_k, for every P in
/// MV_x(lambda) and each x in `xs` (all of W^lambda_min when empty).
inline VerificationReport verify_main_theorem(const RootSystemPtr& rsp, const Coweight& lambda,
                                              const std::vector<WeylElt>& xs, Int nmax, unsigned jobs = 1) {
  detail::Stopwatch clock;
  const RootSystem& rs = *rsp;
  const WeylGroup& W = rs.weyl();
  const MVCrystal cr = generate_mv(rsp, lambda, jobs);
  const ExtremalFamily family(rsp, lambda);
  VerificationReport rep{"main", rs.cartan().name(), {{"lambda", to_json(lambda)}, {"nmax", nmax}}, {}, Json::object(), 0};
  for (WeylElt x : detail::coset_list(W, lambda, xs)) {
    const auto members = demazure_set(cr, x).members;
    std::vector<Instance> out(members.size());
    parallel_for(members.size(), jobs, [&](std::size_t t) {
      const MVPolytope& P = cr.node(members[t]);
      Instance& in = out[t];
      in.id = detail::node_id(W, x, members[t]);
      Factorization fz;
      try {
        fz = extremal_factorization(rs, P, family, nmax);
      } catch (const NotFound& nf) {
        in.status = Status::Inconclusive;
        in.witness = {{"reason", "not found"}, {"nmax", nf.nmax()}};
        return;
      } catch (const Error& err) {
        in.status = Status::Fail;
        in.witness = {{"reason", err.what()}};
        return;
      }
      Json factors = Json::array();
      for (WeylElt xk : fz.xs) factors.push_back(W.word_string(xk));
      for (WeylElt xk : fz.xs) {
        if (!W.bruhat_leq(xk, x)) {
          in.status = Status::Fail;
          in.witness = {{"reason", "factor not below x"}, {"factor", W.word_string(xk)}, {"factors", factors}};
          return;
        }
      }
      GGMSDatum sum = family.polytope(fz.xs.front()).datum;
      for (std::size_t k = 1; k < fz.xs.size(); ++k) sum = minkowski_sum(sum, family.polytope(fz.xs[k]).datum);
      if (auto w = containment_witness(W, sum, scale(P.datum, fz.n))) {
        in.status = Status::Fail;
        in.witness = detail::containment_json(W, *w);
        in.witness["N"] = fz.n;
        in.witness["factors"] = factors;
        return;
      }
      in.witness = {{"N", fz.n}, {"factors", factors}};
    });
    for (auto& i : out) rep.instances.push_back(std::move(i));
  }
  rep.wall_ms = clock.ms();
  return rep;
}

/// A polytope contained in P_{x.lambda} but outside MV_x(lambda), stored by its Lusztig datum
/// along the least reduced word of w0.
struct ConverseWitness {
  std::string cartan;
  Coweight lambda;
  Word x;
  Word word;
  std::vector<Int> lusztig;
};

inline Json to_json(const ConverseWitness& w) {
  return Json{{"cartan", w.cartan},
              {"lambda", to_json(w.lambda)},
              {"x", w.x.empty() ? std::string("e") : word_label(w.x)},
              {"word", word_label(w.word)},
              {"lusztig", w.lusztig}};
}

inline ConverseWitness converse_witness_from_json(const Json& j) {
  ConverseWitness w;
  w.cartan = j.at("cartan").get<std::string>();
  w.lambda = coweight_from_json(j.at("lambda"));
  w.x = parse_word(j.at("x").get<std::string>(), w.lambda.rank());
  w.word = parse_word(j.at("word").get<std::string>(), w.lambda.rank());
  w.lusztig = j.at("lusztig").get<std::vector<Int>>();
  return w;
}

/// Rebuilds the witness from scratch and checks both halves of the claim.
inline bool recheck_converse_witness(const ConverseWitness& w) {
  const auto rsp = RootSystem::make(w.cartan);
  const RootSystem& rs = *rsp;
  const WeylElt x = rs.weyl().from_word(w.x);
  const MVPolytope P = polytope_from_lusztig(rs, w.lambda, LusztigDatum{rs.word_index(w.word), w.lusztig});
  const MVPolytope E = extremal_polytope(rs, rs.weyl().min_coset_rep(x, w.lambda), w.lambda);
  if (!contains(rs.weyl(), E.datum, P.datum)) return false;
  return !in_demazure(generate_mv(rsp, w.lambda), P, x);
}

/// P is contained in P_{x.lambda} for every P in MV_x(lambda). Also scans MV(lambda) for the
/// converse: polytopes inside P_{x.lambda} that are not in MV_x(lambda).
inline VerificationReport verify_corollary(const RootSystemPtr& rsp, const Coweight& lambda,
                                           const std::vector<WeylElt>& xs, unsigned jobs = 1) {
  detail::Stopwatch clock;
  const RootSystem& rs = *rsp;
  const WeylGroup& W = rs.weyl();
  const MVCrystal cr = generate_mv(rsp, lambda, jobs);
  const ExtremalFamily family(rsp, lambda);
  VerificationReport rep{"corollary", rs.cartan().name(), {{"lambda", to_json(lambda)}}, {}, Json::object(), 0};
  Json converse = Json::array();
  for (WeylElt x : detail::coset_list(W, lambda, xs)) {
    const auto members = demazure_set(cr, x).members;
    const GGMSDatum& E = family.polytope(x).datum;
    std::vector<Instance> out(members.size());
    parallel_for(members.size(), jobs, [&](std::size_t t) {
      Instance& in = out[t];
      in.id = detail::node_id(W, x, members[t]);
      if (auto w = containment_witness(W, E, cr.node(members[t]).datum)) {
        in.status = Status::Fail;
        in.witness = detail::containment_json(W, *w);
      } else {
        in.witness = Json::object();
      }
    });
    for (auto& i : out) rep.instances.push_back(std::move(i));

    std::vector<char> hit(cr.size(), 0);
    parallel_for(cr.size(), jobs, [&](std::size_t k) {
      hit[k] = !std::binary_search(members.begin(), members.end(), k) && contains(W, E, cr.node(k).datum);
    });
    for (std::size_t k = 0; k < cr.size(); ++k) {
      if (!hit[k]) continue;
      ConverseWitness cw{rs.cartan().name(), lambda, W.word(x), rs.words().front(),
                         lusztig_datum(rs, cr.node(k), 0).n};
      Json j = to_json(cw);
      j["id"] = detail::node_id(W, x, k);
      converse.push_back(std::move(j));
    }
  }
  rep.extra["converse"] = {{"count", converse.size()}, {"witnesses", converse}};
  rep.wall_ms = clock.ms();
  return rep;
}

/// In each component of MV(lambda2) (x) MV(lambda1), every P whose image P2 (x) P1 has P2
/// extremal lies in P1 + P2. In conjecture mode the remaining P are checked too and reported
/// separately.
inline VerificationReport verify_tensor_estimate(const RootSystemPtr& rsp, const Coweight& lambda1,
                                                 const Coweight& lambda2, bool conjecture = false, unsigned jobs = 1) {
  detail::Stopwatch clock;
  const RootSystem& rs = *rsp;
  const WeylGroup& W = rs.weyl();
  const MVCrystal left = generate_mv(rsp, lambda2, jobs);
  const MVCrystal right = generate_mv(rsp, lambda1, jobs);
  const ExtremalFamily family2(rsp, lambda2);
  VerificationReport rep{"tensor", rs.cartan().name(),
                         {{"lambda1", to_json(lambda1)}, {"lambda2", to_json(lambda2)}}, {}, Json::object(), 0};
  std::map<Coweight, MVCrystal> crystals;
  Json unchecked = Json::array();
  std::size_t conj_checked = 0;
  for (const auto& comp : decompose(left, right)) {
    auto it = crystals.find(comp.lambda);
    if (it == crystals.end()) it = crystals.emplace(comp.lambda, generate_mv(rsp, comp.lambda, jobs)).first;
    const MVCrystal& cr = it->second;
    struct Row {
      Instance in;
      bool extremal = false;
    };
    std::vector<Row> rows(cr.size());
    parallel_for(cr.size(), jobs, [&](std::size_t k) {
      const MVPolytope& P = cr.node(k);
      const TensorNode b = embed(rs, P, comp);
      const MVPolytope& P2 = b.factors[0];
      const MVPolytope& P1 = b.factors[1];
      Row& row = rows[k];
      row.in.id = "lambda=" + comp.lambda.str() + "#" + std::to_string(comp.index) + "/P" + std::to_string(k);
      const auto x2 = family2.find(P2);
      row.extremal = x2.has_value();
      const GGMSDatum sum = minkowski_sum(P1.datum, P2.datum);
      if (auto w = containment_witness(W, sum, P.datum)) {
        row.in.status = Status::Fail;
        row.in.witness = detail::containment_json(W, *w);
      } else {
        row.in.witness = {{"equality", sum == P.datum}};
      }
      if (x2) row.in.witness["x2"] = W.word_string(*x2);
    });
    for (auto& row : rows) {
      if (row.extremal) {
        rep.instances.push_back(std::move(row.in));
      } else if (conjecture) {
        ++conj_checked;
        if (row.in.status == Status::Fail) {
          Json j = row.in.witness;
          j["id"] = row.in.id;
          unchecked.push_back(std::move(j));
        }
      }
    }
  }
  if (conjecture)
    rep.extra["conjecture"] = {{"experimental", true}, {"checked", conj_checked}, {"violations", unchecked}};
  rep.wall_ms = clock.ms();
  return rep;
}

/// For every x in W: P_{x.(lambda1+lambda2)} = P_{x.lambda1} + P_{x.lambda2} vertexwise, and the
/// embedding into the highest component of MV(lambda1) (x) MV(lambda2) sends it to
/// P_{x.lambda1} (x) P_{x.lambda2}.
inline VerificationReport verify_min_ext(const RootSystemPtr& rsp, const Coweight& lambda1, const Coweight& lambda2,
                                         unsigned jobs = 1) {
  detail::Stopwatch clock;
  const RootSystem& rs = *rsp;
  const WeylGroup& W = rs.weyl();
  const Coweight sum = lambda1 + lambda2;
  VerificationReport rep{"minext", rs.cartan().name(),
                         {{"lambda1", to_json(lambda1)}, {"lambda2", to_json(lambda2)}}, {}, Json::object(), 0};
  const ComponentEmbedding top{sum, TensorNode{{highest_polytope(rs, lambda1), highest_polytope(rs, lambda2)}}, 0};
  const auto elems = W.elements();
  rep.instances.resize(elems.size());
  parallel_for(elems.size(), jobs, [&](std::size_t t) {
    const WeylElt x = elems[t];
    Instance& in = rep.instances[t];
    in.id = "x=" + W.word_string(x);
    const MVPolytope E = extremal_polytope(rs, x, sum);
    const MVPolytope E1 = extremal_polytope(rs, x, lambda1);
    const MVPolytope E2 = extremal_polytope(rs, x, lambda2);
    if (E.datum != minkowski_sum(E1.datum, E2.datum)) {
      std::size_t k = 0;
      while (E.datum.mu[k] == E1.datum.mu[k] + E2.datum.mu[k]) ++k;
      in.status = Status::Fail;
      in.witness = {{"reason", "vertex sum"}, {"chamber", W.word_string(WeylElt{static_cast<std::uint32_t>(k)})}};
      return;
    }
    if (embed(rs, E, top) != TensorNode{{E1, E2}}) {
      in.status = Status::Fail;
      in.witness = {{"reason", "tensor image"}};
      return;
    }
    in.witness = Json::object();
  });
  rep.wall_ms = clock.ms();
  return rep;
}

/// Oracle checks on MV(lambda): dimension, weight multiplicities, Demazure characters, move
/// relations, string axioms, and the extremal constructions.
inline VerificationReport crystal_sanity(const RootSystemPtr& rsp, const Coweight& lambda, unsigned jobs = 1) {
  detail::Stopwatch clock;
  const RootSystem& rs = *rsp;
  const WeylGroup& W = rs.weyl();
  const MVCrystal cr = generate_mv(rsp, lambda, jobs);
  VerificationReport rep{"sanity", rs.cartan().name(), {{"lambda", to_json(lambda)}}, {}, Json::object(), 0};
  auto add = [&](std::string id, bool ok, Json witness = Json::object()) {
    rep.instances.push_back(Instance{std::move(id), ok ? Status::Pass : Status::Fail, std::move(witness)});
  };

  const Int dim = weyl_dimension(W, lambda);
  add("dimension", static_cast<Int>(cr.size()) == dim, {{"crystal", cr.size()}, {"weyl", dim}});

  std::vector<std::size_t> all(cr.size());
  for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
  const Character full = freudenthal(W, lambda);
  add("character", weight_character(cr, all) == full);
  add("demazure/w0", demazure_character(W, W.longest(), lambda) == full);

  for (WeylElt x : W.min_coset_reps(lambda)) {
    const auto a = demazure_set(cr, x).members;
    const auto b = demazure_set_recursive(cr, x).members;
    const bool ok = a == b && weight_character(cr, a) == demazure_character(W, x, lambda);
    add("demazure/x=" + W.word_string(x), ok, {{"size", a.size()}});
  }

  std::vector<char> moves_ok(cr.size()), strings_ok(cr.size());
  parallel_for(cr.size(), jobs, [&](std::size_t k) {
    const MVPolytope& P = cr.node(k);
    moves_ok[k] = is_mv_datum(rs, P.datum);
    bool ok = true;
    for (std::size_t jj = 0; jj < rs.rank() && ok; ++jj) {
      const int j = static_cast<int>(jj);
      ok = phi(rs, P, j) - epsilon(rs, P, j) == wt(P).pair(j);
      const auto down = f(rs, P, j);
      ok = ok && down.has_value() == f_geometric(rs, P, j).has_value();
      if (ok && down) {
        ok = wt(*down) == wt(P) - rs.cartan().simple_coroot(j) && epsilon(rs, *down, j) == epsilon(rs, P, j) + 1 &&
             phi(rs, *down, j) == phi(rs, P, j) - 1 && e(rs, *down, j) == std::optional<MVPolytope>(P);
      }
    }
    strings_ok[k] = ok;
  });
  auto first_bad = [](const std::vector<char>& v) {
    for (std::size_t k = 0; k < v.size(); ++k)
      if (!v[k]) return Json{{"node", k}};
    return Json::object();
  };
  add("moves", std::all_of(moves_ok.begin(), moves_ok.end(), [](char c) { return c; }), first_bad(moves_ok));
  add("strings", std::all_of(strings_ok.begin(), strings_ok.end(), [](char c) { return c; }), first_bad(strings_ok));

  for (WeylElt x : W.min_coset_reps(lambda)) {
    const MVPolytope E = extremal_polytope(rs, x, lambda);
    const bool ok = E == extremal_by_strings(rs, x, lambda) && !check_extremal_edges(W, E.datum) && cr.find(E);
    add("extremal/x=" + W.word_string(x), ok);
  }
  rep.wall_ms = clock.ms();
  return rep;
}

}  // namespace mvcr
