#include "report.hpp"

#include "turanforge/oracle.hpp"

#include <sstream>

namespace turanforge::app {
namespace {

Json params_json(const ExtractParams& p, std::size_t s_target, std::size_t t_min, const Json& theta) {
  Json j;
  j["r"] = p.r;
  j["c"] = p.c ? Json(*p.c) : Json(nullptr);
  j["alpha"] = p.alpha ? Json(to_string(*p.alpha)) : Json(nullptr);
  j["s_target"] = s_target;
  j["t_min"] = t_min;
  j["theta"] = theta;
  return j;
}

Json achieved_json(const KrPlusWitness& w) {
  return Json{{"part_sizes", w.part_sizes()}, {"first", w.parts.front().size()}, {"t", w.last_part_size()}};
}

Json error_json(const std::string& kind, const std::string& message) {
  return Json{{"kind", kind}, {"message", message}};
}

ExtractOptions options_for(const ExtractParams& p) {
  ExtractOptions o;
  o.target_s = p.target_s;
  o.target_t = p.target_t;
  o.theta = p.theta;
  return o;
}

void fill_turan(Json& rep, ExtractRun& run, const Graph& g, const ExtractParams& p) {
  const InvertedResult res = turan_inverted(g, p.r, p.c.value_or(0), options_for(p));
  const Json theta = res.trace ? Json(to_string(res.trace->theta)) : Json(nullptr);
  rep["parameters"] = params_json(p, res.s_target, res.t_min, theta);
  rep["branch"] = res.branch ? Json(to_string(*res.branch)) : Json(nullptr);
  rep["dichotomy"] = to_json(res.dichotomy);
  if (res) {
    rep["outcome"] = "witness";
    rep["witness"] = to_json(*res.witness);
    rep["achieved"] = achieved_json(*res.witness);
    run.exit_code = kOk;
    run.witness = res.witness;
  } else {
    rep["outcome"] = "not_found";
    rep["error"] = error_json("not_found", res.failure);
    run.exit_code = kNotFound;
  }
  rep["theorem_targets"] = to_json(res.theorem);
  rep["trace"] = res.trace ? to_json(*res.trace, p.full_trace) : Json(nullptr);
}

void fill_stability(Json& rep, ExtractRun& run, const Graph& g, const ExtractParams& p) {
  const StabilityOutcome out = stability_decompose(g, p.r, p.c.value_or(0), *p.alpha, options_for(p));
  const Json theta = out.trace ? Json(to_string(out.trace->theta)) : Json(nullptr);
  rep["parameters"] = params_json(p, out.s_target, out.t_min, theta);
  rep["branch"] = out.witness ? Json("witness") : out.decomposition ? Json("decomposition") : Json(nullptr);
  rep["measures"] = to_json(out.measures);
  rep["alpha_in_theorem_regime"] = out.alpha_in_theorem_regime;
  if (out.witness) {
    rep["outcome"] = "witness";
    rep["witness_route"] = out.witness_route;
    rep["witness"] = to_json(*out.witness);
    rep["achieved"] = achieved_json(*out.witness);
    run.exit_code = kOk;
    run.witness = out.witness;
  } else if (out.decomposition) {
    rep["outcome"] = "decomposition";
    rep["decomposition"] = to_json(*out.decomposition);
    run.exit_code = kOk;
  } else {
    rep["outcome"] = "not_found";
    rep["error"] = error_json("not_found", out.failure);
    run.exit_code = kNotFound;
  }
  rep["theorem_targets"] = to_json(out.theorem);
  rep["trace"] = out.trace ? to_json(*out.trace, p.full_trace) : Json(nullptr);
}

}  // namespace

ExtractRun run_extract(const Graph& g, const Json& input, const ExtractParams& params) {
  ExtractRun run;
  Json& rep = run.report;
  rep["schema_version"] = kSchemaVersion;
  rep["command"] = "extract";
  rep["mode"] = params.alpha ? "stability" : "turan";
  rep["input"] = input;
  rep["graph"] = Json{{"n", g.order()}, {"m", g.edge_count()}};
  try {
    if (params.alpha) {
      fill_stability(rep, run, g, params);
    } else {
      fill_turan(rep, run, g, params);
    }
  } catch (const PreconditionError& e) {
    rep["outcome"] = "error";
    rep["error"] = error_json("precondition", e.what());
    run.exit_code = kError;
  } catch (const InternalFault& e) {
    rep["outcome"] = "error";
    rep["error"] = error_json("internal", e.what());
    run.exit_code = kError;
  }
  return run;
}

int verify_certificate(const Graph& g, const Json& cert, std::string& diagnostic) {
  if (!cert.is_object()) {
    diagnostic = "certificate: expected a JSON object";
    return kError;
  }
  if (cert.contains("schema_version") && cert["schema_version"] != kSchemaVersion) {
    diagnostic = "certificate: unsupported schema_version " + cert["schema_version"].dump();
    return kError;
  }
  if (cert.contains("parts")) {
    const VerifyResult v = verify_krplus(g, witness_from_json(cert));
    diagnostic = v.diagnostic;
    return v ? kOk : kInvalidCertificate;
  }
  if (cert.contains("witness") && cert["witness"].is_object()) {
    const VerifyResult v = verify_krplus(g, witness_from_json(cert["witness"]));
    diagnostic = v.diagnostic;
    return v ? kOk : kInvalidCertificate;
  }
  if (cert.contains("decomposition") && cert["decomposition"].is_object()) {
    try {
      const Json& params = cert.at("parameters");
      const std::size_t r = params.at("r").get<std::size_t>();
      const Rational alpha = parse_rational(params.at("alpha").get<std::string>());
      const Json& d = cert["decomposition"];
      const VertexSet removed(d.at("removed").get<std::vector<Vertex>>());
      const auto coloring = d.at("coloring").get<std::vector<int>>();
      diagnostic = check_decomposition(g, r, alpha, removed, coloring);
      return diagnostic.empty() ? kOk : kInvalidCertificate;
    } catch (const Json::exception& e) {
      diagnostic = std::string("certificate: ") + e.what();
      return kError;
    } catch (const PreconditionError& e) {
      diagnostic = std::string("certificate: ") + e.what();
      return kError;
    }
  }
  diagnostic = "certificate: no witness or decomposition";
  return kError;
}

std::string to_dot(const Graph& g, const std::optional<KrPlusWitness>& witness) {
  static const char* const palette[] = {"#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#a65628", "#f781bf"};
  std::ostringstream out;
  out << "graph G {\n  node [shape=circle, style=filled, fillcolor=\"#dddddd\"];\n";
  std::vector<bool> placed(g.order(), false);
  if (witness) {
    for (std::size_t i = 0; i < witness->parts.size(); ++i) {
      const char* color = palette[i % std::size(palette)];
      out << "  subgraph cluster_" << i << " {\n    label=\"part " << i + 1 << "\";\n    color=\"" << color << "\";\n";
      for (Vertex v : witness->parts[i]) {
        if (v >= g.order()) continue;
        out << "    " << v << " [fillcolor=\"" << color << "\"];\n";
        placed[v] = true;
      }
      out << "  }\n";
    }
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!placed[v]) out << "  " << v << ";\n";
  }
  for (const auto& [a, b] : g.edges()) {
    out << "  " << a << " -- " << b;
    if (witness && canonical(witness->extra_edge) == canonical(Edge{a, b})) out << " [penwidth=3, color=\"#000000\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace turanforge::app
