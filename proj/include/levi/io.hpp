#pragma once

// JSON and text formats for arrangements, graphs, ideals, Betti tables and
// classification verdicts. Object keys keep insertion order so output is
// byte-stable.

#include <string>
#include <variant>

#include <json.hpp>

#include "levi/arrangement.hpp"
#include "levi/bipartite.hpp"
#include "levi/classify.hpp"
#include "levi/errors.hpp"
#include "levi/monomial.hpp"
#include "levi/resolution.hpp"

namespace levi {

using Json = nlohmann::ordered_json;

// --- arrangements -----------------------------------------------------------

inline Json to_json(const Arrangement& a) {
  Json points = Json::array();
  for (const auto& p : a.points()) points.push_back(Json{{"id", p.id}, {"curves", p.curves}});
  return Json{{"d", a.degree()},
              {"k", a.curve_count()},
              {"mode", a.mode() == Mode::strict_d_arrangement ? "strict" : "configuration"},
              {"points", std::move(points)}};
}

inline std::string dump_arrangement(const Arrangement& a) { return to_json(a).dump(); }

namespace detail {

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

inline int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw InputError(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

inline Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace detail

inline Arrangement arrangement_from_json(const Json& j) {
  const int d = detail::int_field(j, "d");
  const int k = detail::int_field(j, "k");
  Mode mode = Mode::strict_d_arrangement;
  if (j.contains("mode")) {
    const Json& m = j.at("mode");
    if (m == "strict") {
      mode = Mode::strict_d_arrangement;
    } else if (m == "configuration") {
      mode = Mode::configuration;
    } else {
      throw InputError("mode must be \"strict\" or \"configuration\"");
    }
  }
  const Json& pts = detail::field(j, "points");
  if (!pts.is_array()) throw InputError("\"points\" must be an array");
  std::vector<Point> points;
  for (const Json& p : pts) {
    const Json& id = detail::field(p, "id");
    const Json& curves = detail::field(p, "curves");
    if (!id.is_string() || !curves.is_array()) throw InputError("point needs a string id and a curve array");
    Point pt{id.get<std::string>(), {}};
    for (const Json& c : curves) {
      if (!c.is_number_integer()) throw InputError("curve ids must be integers");
      pt.curves.push_back(c.get<int>());
    }
    points.push_back(std::move(pt));
  }
  return Arrangement(d, k, std::move(points), mode);
}

inline Arrangement parse_arrangement(const std::string& text) {
  return arrangement_from_json(detail::parse_text(text));
}

// --- graphs -----------------------------------------------------------------

inline Json to_json(const BipartiteGraph& g) {
  Json edges = Json::array();
  for (auto [x, y] : g.edges()) edges.push_back(Json::array({x, y}));
  return Json{{"s", g.x_count()}, {"k", g.y_count()}, {"edges", std::move(edges)}};
}

inline BipartiteGraph graph_from_json(const Json& j) {
  const int s = detail::int_field(j, "s");
  const int k = detail::int_field(j, "k");
  const Json& es = detail::field(j, "edges");
  if (!es.is_array()) throw InputError("\"edges\" must be an array");
  std::vector<Edge> edges;
  for (const Json& e : es) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw InputError("each edge must be a pair of integers");
    }
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return BipartiteGraph(s, k, std::move(edges));
}

/// Either input kind accepted by the CLI.
struct ParsedInput {
  std::optional<Arrangement> arrangement;
  BipartiteGraph graph;
};

inline ParsedInput parse_input(const std::string& text) {
  const Json j = detail::parse_text(text);
  if (j.is_object() && j.contains("points")) {
    Arrangement a = arrangement_from_json(j);
    BipartiteGraph g = levi_graph(a);
    return {std::move(a), std::move(g)};
  }
  if (j.is_object() && j.contains("edges")) return {std::nullopt, graph_from_json(j)};
  throw InputError("input is neither an arrangement (\"points\") nor a graph (\"edges\")");
}

// --- ideals -----------------------------------------------------------------

inline Json to_json(const MonomialIdeal& ideal) {
  return Json{{"variables", ideal.labels()}, {"generators", ideal.gens()}};
}

// --- Betti tables -----------------------------------------------------------

inline Json to_json(const BettiTable& t) {
  Json entries = Json::array();
  for (const auto& [key, v] : t.entries()) entries.push_back(Json::array({key.first, key.second, v}));
  return Json{{"n", t.variable_count()}, {"entries", std::move(entries)}};
}

inline BettiTable betti_from_json(const Json& j) {
  BettiTable t(detail::int_field(j, "n"));
  const Json& es = detail::field(j, "entries");
  if (!es.is_array()) throw InputError("\"entries\" must be an array");
  for (const Json& e : es) {
    if (!e.is_array() || e.size() != 3) throw InputError("Betti entries are [i, j, value] triples");
    t.add(e[0].get<int>(), e[1].get<int>(), e[2].get<long long>());
  }
  return t;
}

inline Json to_json(const HomologicalSummary& s) {
  return Json{{"n", s.n},
              {"pd", s.pd},
              {"reg_quotient", s.reg_quotient},
              {"reg_ideal", s.reg_ideal},
              {"dim", s.dim},
              {"depth", s.depth},
              {"codim", s.codim},
              {"cohen_macaulay", s.is_cm}};
}

// --- verdicts ---------------------------------------------------------------

inline Json to_json(const VertexOrder& o) { return Json{{"x", o.x}, {"y", o.y}}; }

inline Json to_json(const ClassificationVerdict& v) {
  Json cm{{"value", v.is_cm}};
  if (v.ordering.order) {
    cm["ordering"] = to_json(*v.ordering.order);
  } else {
    cm["witness"] = v.ordering.witness;
  }
  cm["cross_free_pure_order"] = v.cross_free ? to_json(*v.cross_free) : Json(nullptr);
  Json scm{{"value", v.is_scm}, {"stage", v.shelling.stage}};
  if (v.shelling.shellable) {
    scm["shelling"] = v.shelling.shelling;
  } else {
    scm["obstruction"] = v.shelling.obstruction;
  }
  return Json{{"isolated", v.isolated},
              {"cohen_macaulay", std::move(cm)},
              {"buchsbaum", v.is_buchsbaum},
              {"sequentially_cohen_macaulay", std::move(scm)},
              {"note", v.note}};
}

inline Json to_json(const BoundReport& r) {
  return Json{{"s", r.s},
              {"k", r.k},
              {"d", r.d},
              {"t_k_zero", r.tk_zero},
              {"pd_lower", r.pd_lower},
              {"pd_upper", to_string(r.pd_upper)},
              {"max_degree", r.max_degree},
              {"dhs_upper", to_string(r.dhs_upper)},
              {"matching_number", r.matching_number},
              {"reg_upper_matching", r.reg_upper_matching},
              {"reg_upper_global", r.reg_upper_global},
              {"rees_reg", r.rees_reg},
              {"power_bound_applicable", r.power_bound_applicable}};
}

inline Json to_json(const BoundCheck& c) {
  return Json{{"name", c.name}, {"applicable", c.applicable}, {"pass", c.pass}, {"detail", c.detail}};
}

}  // namespace levi
