#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mvcr/codec.hpp"
#include "mvcr/demazure.hpp"
#include "mvcr/extremal.hpp"
#include "mvcr/mvcrystal.hpp"
#include "mvcr/tensorops.hpp"

namespace mvcr {

/// GGMS datum as an object keyed by the ShortLex-least word of each Weyl element ("e", "1", "2,1", ...),
/// in enumeration order.
inline Json ggms_to_json(const WeylGroup& W, const GGMSDatum& d) {
  Json j = Json::object();
  for (WeylElt w : W.elements()) j[W.word_string(w)] = to_json(d[w]);
  return j;
}

inline GGMSDatum ggms_from_json(const WeylGroup& W, const Json& j) {
  std::vector<std::optional<Coweight>> mu(W.size());
  for (auto it = j.begin(); it != j.end(); ++it) {
    const WeylElt w = parse_weyl(W, it.key());
    if (W.word(w) != parse_word(it.key(), W.rank()))
      throw ParseError("GGMS key '" + it.key() + "' is not a canonical word");
    mu[w.id] = coweight_from_json(it.value());
    if (mu[w.id]->rank() != W.rank()) throw RankMismatch("GGMS vertex has wrong rank");
  }
  GGMSDatum d;
  for (WeylElt w : W.elements()) {
    if (!mu[w.id]) throw ParseError("GGMS datum is missing the vertex at " + W.word_string(w));
    d.mu.push_back(*mu[w.id]);
  }
  return d;
}

/// MV(lambda) with Lusztig data along the least reduced word of w0 and extremality flags.
inline Json crystal_to_json(const MVCrystal& cr, const ExtremalFamily* family = nullptr) {
  const RootSystem& rs = cr.root_system();
  const WeylGroup& W = rs.weyl();
  Json j;
  j["cartan"] = rs.cartan().name();
  j["lambda"] = to_json(cr.lambda());
  j["word"] = word_label(rs.words().front());
  Json nodes = Json::array();
  for (std::size_t k = 0; k < cr.size(); ++k) {
    const MVPolytope& P = cr.node(k);
    Json n;
    n["id"] = k;
    n["wt"] = to_json(wt(P));
    n["lusztig"] = lusztig_datum(rs, P, 0).n;
    if (family) {
      const auto x = family->find(P);
      n["extremal"] = x ? Json(W.word_string(*x)) : Json(nullptr);
    }
    n["ggms"] = ggms_to_json(W, P.datum);
    nodes.push_back(std::move(n));
  }
  j["nodes"] = std::move(nodes);
  Json edges = Json::array();
  for (std::size_t k = 0; k < cr.size(); ++k)
    for (std::size_t c = 0; c < rs.rank(); ++c) {
      const std::size_t t = cr.f_edge(k, static_cast<int>(c));
      if (t != MVCrystal::npos) edges.push_back(Json{{"from", k}, {"to", t}, {"color", c + 1}});
    }
  j["edges"] = std::move(edges);
  return j;
}

/// Rebuilds a crystal from crystal_to_json output. Node order and edges are taken from the file;
/// every node is checked to be an MV datum with the stated Lusztig datum.
inline MVCrystal crystal_from_json(const Json& j) {
  auto rsp = RootSystem::make(j.at("cartan").get<std::string>());
  const RootSystem& rs = *rsp;
  const Coweight lambda = coweight_from_json(j.at("lambda"));
  if (lambda.rank() != rs.rank()) throw RankMismatch("crystal JSON: lambda has wrong rank");
  if (!lambda.is_dominant()) throw NotDominant("crystal JSON: lambda is not dominant");
  MVCrystal cr(rsp, lambda);
  for (const auto& n : j.at("nodes")) {
    MVPolytope P{ggms_from_json(rs.weyl(), n.at("ggms")), lambda};
    if (!is_mv_datum(rs, P.datum)) throw ParseError("crystal JSON: node " + n.at("id").dump() + " is not an MV datum");
    if (lusztig_datum(rs, P, 0).n != n.at("lusztig").get<std::vector<Int>>())
      throw ParseError("crystal JSON: Lusztig datum of node " + n.at("id").dump() + " does not match its vertices");
    if (cr.add(std::move(P)) != n.at("id").get<std::size_t>()) throw ParseError("crystal JSON: node ids out of order");
  }
  for (const auto& e : j.at("edges")) {
    const auto from = e.at("from").get<std::size_t>(), to = e.at("to").get<std::size_t>();
    const auto c = e.at("color").get<std::size_t>();
    if (from >= cr.size() || to >= cr.size() || c < 1 || c > rs.rank()) throw ParseError("crystal JSON: bad edge");
    cr.link(from, static_cast<int>(c - 1), to);
  }
  return cr;
}

inline std::string crystal_to_dot(const MVCrystal& cr, const ExtremalFamily* family = nullptr) {
  const RootSystem& rs = cr.root_system();
  static const char* colours[] = {"red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan"};
  std::ostringstream os;
  os << "digraph MV {\n  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t k = 0; k < cr.size(); ++k) {
    const MVPolytope& P = cr.node(k);
    os << "  n" << k << " [label=\"" << k << "\\nwt " << wt(P).str() << "\\nL (";
    const auto n = lusztig_datum(rs, P, 0).n;
    for (std::size_t t = 0; t < n.size(); ++t) os << (t ? "," : "") << n[t];
    os << ")\"";
    if (family && family->find(P)) os << ", style=bold";
    os << "];\n";
  }
  for (std::size_t k = 0; k < cr.size(); ++k)
    for (std::size_t c = 0; c < rs.rank(); ++c) {
      const std::size_t t = cr.f_edge(k, static_cast<int>(c));
      if (t == MVCrystal::npos) continue;
      os << "  n" << k << " -> n" << t << " [label=\"" << c + 1 << "\", color=" << colours[c % 8] << "];\n";
    }
  os << "}\n";
  return os.str();
}

inline std::string crystal_to_tsv(const MVCrystal& cr) {
  const RootSystem& rs = cr.root_system();
  std::ostringstream os;
  os << "id\twt\tlusztig";
  for (std::size_t c = 0; c < rs.rank(); ++c) os << "\tf" << c + 1;
  os << "\n";
  for (std::size_t k = 0; k < cr.size(); ++k) {
    const MVPolytope& P = cr.node(k);
    os << k << "\t" << wt(P).str() << "\t";
    const auto n = lusztig_datum(rs, P, 0).n;
    for (std::size_t t = 0; t < n.size(); ++t) os << (t ? "," : "") << n[t];
    for (std::size_t c = 0; c < rs.rank(); ++c) {
      const std::size_t t = cr.f_edge(k, static_cast<int>(c));
      os << "\t";
      if (t == MVCrystal::npos) os << "-";
      else os << t;
    }
    os << "\n";
  }
  return os.str();
}

/// Members of MV_x(lambda) with Lusztig data, extremality and containment in P_{x.lambda}.
inline Json demazure_to_json(const MVCrystal& cr, const DemazureSet& D, const ExtremalFamily& family) {
  const RootSystem& rs = cr.root_system();
  const WeylGroup& W = rs.weyl();
  const GGMSDatum& E = family.polytope(D.x).datum;
  Json j;
  j["cartan"] = rs.cartan().name();
  j["lambda"] = to_json(D.lambda);
  j["x"] = W.word_string(D.x);
  j["word"] = word_label(rs.words().front());
  Json rows = Json::array();
  for (std::size_t k : D.members) {
    const MVPolytope& P = cr.node(k);
    const auto x = family.find(P);
    rows.push_back(Json{{"id", k},
                        {"wt", to_json(wt(P))},
                        {"lusztig", lusztig_datum(rs, P, 0).n},
                        {"extremal", x ? Json(W.word_string(*x)) : Json(nullptr)},
                        {"inside_extremal", contains(W, E, P.datum)}});
  }
  j["members"] = std::move(rows);
  return j;
}

inline Json factorization_to_json(const WeylGroup& W, std::size_t id, const Factorization& fz, const LSPath& path) {
  Json xs = Json::array();
  for (WeylElt x : fz.xs) xs.push_back(W.word_string(x));
  Json dirs = Json::array();
  for (const auto& d : path.directions) dirs.push_back(to_json(d));
  Json breaks = Json::array();
  for (const auto& t : path.breaks) breaks.push_back(std::to_string(t.numerator()) + "/" + std::to_string(t.denominator()));
  return Json{{"P_id", id},
              {"N", fz.n},
              {"factors", xs},
              {"path", {{"directions", dirs}, {"breaks", breaks}, {"endpoint", to_json(path.endpoint)}}}};
}

inline Factorization factorization_from_json(const WeylGroup& W, const Json& j) {
  Factorization fz;
  fz.n = j.at("N").get<Int>();
  for (const auto& x : j.at("factors")) fz.xs.push_back(parse_weyl(W, x.get<std::string>()));
  if (static_cast<Int>(fz.xs.size()) != fz.n) throw ParseError("factorization JSON: N does not match the factor count");
  return fz;
}

}  // namespace mvcr
