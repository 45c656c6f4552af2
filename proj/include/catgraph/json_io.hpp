#pragma once

#include <json.hpp>

#include "catgraph/epi_mono.hpp"
#include "catgraph/graph.hpp"
#include "catgraph/limits.hpp"
#include "catgraph/morphism.hpp"

namespace catgraph {

using Json = nlohmann::json;

/// {"parts":[...], "vertices":[...], "incidence":{"e":["u","v"],...}}
/// Arrays and object keys are emitted sorted; pairs in canonical order.
Json to_json(const Graph& g);
Graph graph_from_json(const Json& j);

/// {"dom":<graph>, "cod":<graph>, "map":{"p":"q",...}}
Json to_json(const Morphism& f);
Morphism morphism_from_json(const Json& j);

/// {"kind":..., "apex":<graph>, "legs":{name:<morphism>}}
Json to_json(const ConeResult& cone);

Json to_json(const ValidationReport& r);
Json to_json(const EpiReport& r);
Json to_json(const MonoReport& r);
Json to_json(const UmpReport& r);

Graph graph_from_file(const std::string& path);
Morphism morphism_from_file(const std::string& path);

}  // namespace catgraph
