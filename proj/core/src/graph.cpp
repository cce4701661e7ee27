#include "graphdiffuse/graph.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "graphdiffuse/error.hpp"

namespace graphdiffuse {

Graph::Graph(std::vector<VertexId> interior, std::vector<VertexId> boundary,
             const std::vector<std::pair<VertexId, VertexId>>& edges)
    : n_(interior.size()) {
  ids_ = std::move(interior);
  ids_.insert(ids_.end(), boundary.begin(), boundary.end());
  index_.reserve(ids_.size());
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (ids_[i] < 0) throw DomainError("vertex ids must be nonnegative");
    if (!index_.emplace(ids_[i], i).second)
      throw DomainError("vertex id " + std::to_string(ids_[i]) + " listed twice");
  }

  adjacency_.assign(ids_.size(), {});
  for (const auto& [a, b] : edges) {
    const std::size_t ia = index_of(a);
    const std::size_t ib = index_of(b);
    if (ia == ib) throw DomainError("self-loop at vertex " + std::to_string(a));
    if (is_boundary(ia) && is_boundary(ib))
      throw DomainError("edge between boundary vertices " + std::to_string(a) + " and " +
                        std::to_string(b));
    adjacency_[ia].push_back(ib);
    adjacency_[ib].push_back(ia);
  }
  for (auto& nb : adjacency_) {
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      throw DomainError("duplicate edge");
  }
  edge_count_ = edges.size();

  for (std::size_t b = n_; b < ids_.size(); ++b)
    if (adjacency_[b].empty())
      throw DomainError("boundary vertex " + std::to_string(ids_[b]) +
                        " has no interior neighbour");
}

std::size_t Graph::interior_degree(std::size_t index) const {
  const auto& nb = adjacency_.at(index);
  return static_cast<std::size_t>(
      std::count_if(nb.begin(), nb.end(), [this](std::size_t x) { return x < n_; }));
}

std::optional<std::size_t> Graph::find(VertexId id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Graph::index_of(VertexId id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw DomainError("unknown vertex id " + std::to_string(id));
  return it->second;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(edge_count_);
  for (std::size_t a = 0; a < adjacency_.size(); ++a)
    for (std::size_t b : adjacency_[a])
      if (a < b) out.emplace_back(a, b);
  return out;
}

bool Graph::is_connected() const {
  if (ids_.empty()) return true;
  std::vector<char> seen(ids_.size(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : adjacency_[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == ids_.size();
}

Graph Graph::with_labels(std::map<std::string, std::size_t> labels) const {
  for (const auto& [name, idx] : labels)
    if (idx >= ids_.size()) throw DomainError("label '" + name + "' points past the vertex set");
  Graph copy = *this;
  copy.labels_ = std::move(labels);
  return copy;
}

std::size_t Graph::at_label(const std::string& label) const {
  auto it = labels_.find(label);
  if (it == labels_.end()) throw DomainError("unknown label '" + label + "'");
  return it->second;
}

BoundaryCondition BoundaryCondition::robin(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("Robin parameter must be finite and >= 0");
  return BoundaryCondition(Kind::Robin, t);
}

std::string BoundaryCondition::describe() const {
  switch (kind_) {
    case Kind::Dirichlet:
      return "dirichlet";
    case Kind::Neumann:
      return "neumann";
    case Kind::Robin: {
      std::ostringstream os;
      os << "robin(" << t_ << ")";
      return os.str();
    }
  }
  return "?";
}

}  // namespace graphdiffuse
