#include "graphdiffuse/graph_io.hpp"

#include "graphdiffuse/error.hpp"

namespace graphdiffuse {

namespace {
std::vector<VertexId> read_ids(const nlohmann::json& j, const char* key) {
  std::vector<VertexId> out;
  if (!j.contains(key)) return out;
  const auto& arr = j.at(key);
  if (!arr.is_array()) throw DomainError(std::string("'") + key + "' must be an array");
  for (const auto& v : arr) {
    if (!v.is_number_integer()) throw DomainError(std::string("'") + key + "' ids must be integers");
    out.push_back(v.get<VertexId>());
  }
  return out;
}
}  // namespace

Graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw DomainError("graph JSON must be an object");
  std::vector<std::pair<VertexId, VertexId>> edges;
  if (j.contains("edges")) {
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
        throw DomainError("each edge must be a pair of integer ids");
      edges.emplace_back(e[0].get<VertexId>(), e[1].get<VertexId>());
    }
  }
  return Graph(read_ids(j, "interior"), read_ids(j, "boundary"), edges);
}

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json j;
  const auto& ids = g.ids();
  j["interior"] = std::vector<VertexId>(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(g.interior_count()));
  j["boundary"] = std::vector<VertexId>(ids.begin() + static_cast<std::ptrdiff_t>(g.interior_count()), ids.end());
  auto edges = nlohmann::json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back({g.id(a), g.id(b)});
  j["edges"] = std::move(edges);
  return j;
}

}  // namespace graphdiffuse
