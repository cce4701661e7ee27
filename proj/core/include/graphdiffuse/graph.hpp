#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace graphdiffuse {

using VertexId = std::int64_t;

// Undirected, unweighted graph with an explicit vertex boundary.
//
// Interior vertices occupy internal indices [0, n) in the order supplied,
// boundary vertices occupy [n, n + k). Every boundary vertex must touch at
// least one interior vertex and boundary vertices are never adjacent to each
// other. Instances are immutable once constructed.
class Graph {
public:
  Graph() = default;
  Graph(std::vector<VertexId> interior, std::vector<VertexId> boundary,
        const std::vector<std::pair<VertexId, VertexId>>& edges);

  std::size_t interior_count() const noexcept { return n_; }
  std::size_t boundary_count() const noexcept { return ids_.size() - n_; }
  std::size_t vertex_count() const noexcept { return ids_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  bool is_boundary(std::size_t index) const noexcept { return index >= n_; }

  // Number of incident edges, interior and boundary neighbours alike.
  std::size_t degree(std::size_t index) const { return adjacency_.at(index).size(); }
  // Number of neighbours that lie in the interior.
  std::size_t interior_degree(std::size_t index) const;
  // Sorted neighbour indices.
  const std::vector<std::size_t>& neighbors(std::size_t index) const {
    return adjacency_.at(index);
  }

  VertexId id(std::size_t index) const { return ids_.at(index); }
  const std::vector<VertexId>& ids() const noexcept { return ids_; }
  std::optional<std::size_t> find(VertexId id) const;
  std::size_t index_of(VertexId id) const;  // throws DomainError if absent

  // Index pairs (a, b) with a < b, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  // Connectivity of the whole vertex set, boundary included.
  bool is_connected() const;

  // Optional family-specific names ("3", "(1,-2)", ...) for internal indices.
  Graph with_labels(std::map<std::string, std::size_t> labels) const;
  const std::map<std::string, std::size_t>& labels() const noexcept { return labels_; }
  std::size_t at_label(const std::string& label) const;

private:
  std::size_t n_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<VertexId> ids_;
  std::unordered_map<VertexId, std::size_t> index_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::map<std::string, std::size_t> labels_;
};

// Boundary condition family. Neumann behaves exactly as Robin with t = 0.
class BoundaryCondition {
public:
  enum class Kind { Robin, Dirichlet, Neumann };

  static BoundaryCondition robin(double t);
  static BoundaryCondition neumann() { return BoundaryCondition(Kind::Neumann, 0.0); }
  static BoundaryCondition dirichlet() { return BoundaryCondition(Kind::Dirichlet, 0.0); }

  Kind kind() const noexcept { return kind_; }
  bool is_dirichlet() const noexcept { return kind_ == Kind::Dirichlet; }
  // Robin parameter; zero for Neumann, meaningless for Dirichlet.
  double t() const noexcept { return t_; }
  std::string describe() const;

private:
  BoundaryCondition(Kind kind, double t) : kind_(kind), t_(t) {}
  Kind kind_;
  double t_;
};

}  // namespace graphdiffuse
