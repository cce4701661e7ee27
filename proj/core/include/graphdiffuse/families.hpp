#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "graphdiffuse/graph.hpp"

namespace graphdiffuse {

// Path with interior positions 1..n and boundary positions 0 and n+1. Vertex
// ids equal positions and every vertex is labelled by its position.
Graph path_graph(int n);

// Path over positions -(n+1)..(n+1) with boundary at both ends. Ids are
// position + n + 1, labels are the signed positions.
Graph centered_path_graph(int n);

// Cycle on 2n+2 vertices, no boundary.
Graph loop_graph(int n);

// Cycle on 2n+2 vertices plus the rungs i ~ i+n+1, no boundary.
Graph mobius_graph(int n);

// Complete graph on d interior vertices; boundary vertex x+d hangs off interior vertex x.
Graph complete_graph_with_boundary(int d);

// Square lattice patch [-radius, radius]^2 with the ring of outer neighbours as
// boundary. Labels are "(m,n)".
Graph lattice_patch(int radius);
std::size_t lattice_patch_index(int radius, int m, int n);

// Connected interior graph on `interior` vertices (random spanning tree plus
// extra edges with probability extra_edge_prob), with `boundary` vertices each
// attached to between one and three random interior vertices.
Graph random_connected_graph(std::size_t interior, std::size_t boundary, double extra_edge_prob,
                             std::mt19937_64& engine);

// Family parameter record shared by the closed forms and the CLI.
struct FamilySpec {
  std::string family;  // path | centered_path | loop | mobius | complete | bethe | lattice2d
  int size = 0;        // n, d or k depending on the family
  double alpha0 = 1.0;
  double t = 0.0;
  bool dirichlet = false;  // path only

  static FamilySpec from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  bool is_finite() const;
  Graph graph() const;                     // finite families only
  BoundaryCondition boundary_condition() const;
};

}  // namespace graphdiffuse
