#pragma once

#include "turanforge/graph_io.hpp"
#include "turanforge/stability.hpp"

#include <nlohmann/json.hpp>

namespace turanforge {

using Json = nlohmann::ordered_json;

/// {"parts": [[...], ...], "extra_edge": [u, v]}
Json to_json(const KrPlusWitness& w);
/// Throws ParseError on a malformed object.
KrPlusWitness witness_from_json(const Json& j);

Json to_json(const VertexSet& s);
Json to_json(const Clique& c);

/// Clique sets list at most `limit` members unless `limit` is 0.
Json to_json(const CliqueSet& m, std::size_t limit);

Json to_json(const ExtractionTrace& t, bool full);
Json to_json(const DichotomyOutcome& d);

/// {"removed": [...], "g0_vertices": [...], "coloring": [...], ...}
Json to_json(const Decomposition& d);
Json to_json(const StabilityMeasures& m);
Json to_json(const TheoremTargets& p);

}  // namespace turanforge
