#include "turanforge/serialize.hpp"

#include "turanforge/graph_io.hpp"

namespace turanforge {

Json to_json(const VertexSet& s) { return Json(s.members()); }

Json to_json(const Clique& c) { return to_json(c.vertices()); }

Json to_json(const KrPlusWitness& w) {
  Json parts = Json::array();
  for (const auto& p : w.parts) parts.push_back(to_json(p));
  return Json{{"parts", parts}, {"extra_edge", {w.extra_edge.first, w.extra_edge.second}}};
}

KrPlusWitness witness_from_json(const Json& j) {
  try {
    if (!j.is_object() || !j.contains("parts") || !j.contains("extra_edge")) {
      throw ParseError("witness: expected an object with \"parts\" and \"extra_edge\"");
    }
    KrPlusWitness w;
    for (const auto& part : j.at("parts")) w.parts.emplace_back(part.get<std::vector<Vertex>>());
    const auto edge = j.at("extra_edge").get<std::vector<Vertex>>();
    if (edge.size() != 2) throw ParseError("witness: extra_edge must have two entries");
    w.extra_edge = {edge[0], edge[1]};
    return w;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("witness: ") + e.what());
  }
}

Json to_json(const CliqueSet& m, std::size_t limit) {
  Json members = Json::array();
  for (const Clique& c : m) {
    if (limit != 0 && members.size() >= limit) break;
    members.push_back(to_json(c));
  }
  return Json{{"clique_size", m.clique_size()}, {"size", m.size()}, {"truncated", limit != 0 && m.size() > limit},
              {"members", members}};
}

Json to_json(const ExtractionTrace& t, bool full) {
  const std::size_t limit = full ? 0 : 16;
  auto sets = [](const std::vector<VertexSet>& v) {
    Json out = Json::array();
    for (const auto& s : v) out.push_back(to_json(s));
    return out;
  };
  auto cliques = [](const std::vector<Clique>& v) {
    Json out = Json::array();
    for (const auto& c : v) out.push_back(to_json(c));
    return out;
  };
  return Json{{"pivot_edge", {t.pivot_edge.first, t.pivot_edge.second}},
              {"pivot_joint", t.pivot_joint},
              {"B", to_json(t.set_b)},
              {"X", to_json(t.set_x, limit)},
              {"Y", to_json(t.set_y, limit)},
              {"theta", to_string(t.theta)},
              {"theta_source", t.theta_source},
              {"prune_steps", t.prune_steps},
              {"s", t.s},
              {"m", t.m},
              {"H", sets(t.covered_parts)},
              {"A", cliques(t.transversals)},
              {"F_edges", t.f_edges},
              {"S", cliques(t.selected)},
              {"T", to_json(t.t_set)},
              {"H_star", sets(t.star_parts)},
              {"h1_index", t.h1_index},
              {"attempts", t.attempts},
              {"stage", t.stage}};
}

Json to_json(const DichotomyOutcome& d) {
  Json j{{"certified", d.certified()},
         {"branch", d.branch ? Json(to_string(*d.branch)) : Json(nullptr)},
         {"order", d.sub.graph.order()},
         {"edges", d.edges},
         {"min_degree", d.min_degree},
         {"deleted", d.deleted},
         {"dense_condition", d.dense_holds},
         {"mindeg_condition", d.mindeg_holds}};
  if (d.clique) j["clique"] = to_json(d.sub.to_host_set(d.clique->vertices()));
  if (!d.failure.empty()) j["failure"] = d.failure;
  return j;
}

Json to_json(const Decomposition& d) {
  return Json{{"removed", to_json(d.removed)},
              {"g0_vertices", d.g0.to_host},
              {"coloring", d.coloring},
              {"g0_order", d.g0.graph.order()},
              {"g0_min_degree", d.g0.graph.order() == 0 ? 0 : d.g0.graph.min_degree()}};
}

Json to_json(const StabilityMeasures& m) {
  return Json{{"n", m.n},
              {"edges", m.edges},
              {"removed", m.removed},
              {"g0_order", m.g0_order},
              {"g0_min_degree", m.g0_min_degree},
              {"order_bound", m.order_bound},
              {"degree_bound", m.degree_bound},
              {"r_partite", m.r_partite}};
}

Json to_json(const TheoremTargets& p) {
  return Json{{"c", p.c}, {"s", p.s}, {"t", p.t}, {"exponent", p.exponent}, {"in_regime", p.in_regime}};
}

}  // namespace turanforge
