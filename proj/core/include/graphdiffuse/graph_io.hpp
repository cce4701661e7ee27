#pragma once

#include <nlohmann/json.hpp>

#include "graphdiffuse/graph.hpp"

namespace graphdiffuse {

// {"interior": [ids], "boundary": [ids], "edges": [[a, b], ...]}
Graph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Graph& g);

}  // namespace graphdiffuse
