#include "graphdiffuse/families.hpp"

#include <algorithm>
#include <set>

#include <nlohmann/json.hpp>

#include "graphdiffuse/error.hpp"
#include "graphdiffuse/random.hpp"

namespace graphdiffuse {

namespace {

void require_size(int n, int min, const char* what) {
  if (n < min)
    throw DomainError(std::string(what) + " size must be at least " + std::to_string(min));
}

std::vector<VertexId> id_range(VertexId first, VertexId last) {
  std::vector<VertexId> out;
  for (VertexId v = first; v <= last; ++v) out.push_back(v);
  return out;
}

}  // namespace

Graph path_graph(int n) {
  require_size(n, 1, "path");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId v = 0; v <= n; ++v) edges.emplace_back(v, v + 1);
  Graph g(id_range(1, n), {0, n + 1}, edges);
  std::map<std::string, std::size_t> labels;
  for (VertexId v = 0; v <= n + 1; ++v) labels[std::to_string(v)] = g.index_of(v);
  return g.with_labels(std::move(labels));
}

Graph centered_path_graph(int n) {
  require_size(n, 0, "centered path");
  const VertexId shift = n + 1;
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId v = 0; v < 2 * shift; ++v) edges.emplace_back(v, v + 1);
  Graph g(id_range(1, 2 * shift - 1), {0, 2 * shift}, edges);
  std::map<std::string, std::size_t> labels;
  for (VertexId p = -shift; p <= shift; ++p) labels[std::to_string(p)] = g.index_of(p + shift);
  return g.with_labels(std::move(labels));
}

Graph loop_graph(int n) {
  require_size(n, 0, "loop");
  const VertexId m = 2 * static_cast<VertexId>(n) + 2;
  std::vector<std::pair<VertexId, VertexId>> edges;
  if (m == 2) {
    edges.emplace_back(0, 1);
  } else {
    for (VertexId v = 0; v < m; ++v) edges.emplace_back(v, (v + 1) % m);
  }
  return Graph(id_range(0, m - 1), {}, edges);
}

Graph mobius_graph(int n) {
  require_size(n, 1, "Mobius ladder");
  const VertexId m = 2 * static_cast<VertexId>(n) + 2;
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId v = 0; v < m; ++v) edges.emplace_back(v, (v + 1) % m);
  for (VertexId v = 0; v <= n; ++v) edges.emplace_back(v, v + n + 1);
  return Graph(id_range(0, m - 1), {}, edges);
}

Graph complete_graph_with_boundary(int d) {
  require_size(d, 1, "complete graph");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId a = 0; a < d; ++a)
    for (VertexId b = a + 1; b < d; ++b) edges.emplace_back(a, b);
  for (VertexId a = 0; a < d; ++a) edges.emplace_back(a, a + d);
  return Graph(id_range(0, d - 1), id_range(d, 2 * d - 1), edges);
}

std::size_t lattice_patch_index(int radius, int m, int n) {
  const int side = 2 * radius + 1;
  const std::size_t base = static_cast<std::size_t>(side) * static_cast<std::size_t>(side);
  const auto off = [&](int x) { return static_cast<std::size_t>(x + radius); };
  if (std::abs(m) <= radius && std::abs(n) <= radius)
    return off(m) * static_cast<std::size_t>(side) + off(n);
  if (std::abs(n) <= radius) {
    if (m == -(radius + 1)) return base + off(n);
    if (m == radius + 1) return base + static_cast<std::size_t>(side) + off(n);
  }
  if (std::abs(m) <= radius) {
    if (n == -(radius + 1)) return base + 2 * static_cast<std::size_t>(side) + off(m);
    if (n == radius + 1) return base + 3 * static_cast<std::size_t>(side) + off(m);
  }
  throw DomainError("lattice point outside the patch");
}

Graph lattice_patch(int radius) {
  require_size(radius, 0, "lattice patch");
  const int side = 2 * radius + 1;
  const std::size_t total = static_cast<std::size_t>(side) * side + 4 * static_cast<std::size_t>(side);
  std::vector<VertexId> interior, boundary;
  for (std::size_t v = 0; v < total; ++v)
    (v < static_cast<std::size_t>(side) * side ? interior : boundary).push_back(static_cast<VertexId>(v));

  std::vector<std::pair<VertexId, VertexId>> edges;
  const auto id = [&](int m, int n) { return static_cast<VertexId>(lattice_patch_index(radius, m, n)); };
  for (int m = -radius; m <= radius; ++m)
    for (int n = -radius; n <= radius; ++n) {
      // Each interior point owns its edges to the right and upwards; the left
      // and bottom rings are attached from their interior neighbour.
      edges.emplace_back(id(m, n), id(m + 1, n));
      edges.emplace_back(id(m, n), id(m, n + 1));
      if (m == -radius) edges.emplace_back(id(m, n), id(m - 1, n));
      if (n == -radius) edges.emplace_back(id(m, n), id(m, n - 1));
    }
  Graph g(std::move(interior), std::move(boundary), edges);

  std::map<std::string, std::size_t> labels;
  const auto label = [](int m, int n) {
    return "(" + std::to_string(m) + "," + std::to_string(n) + ")";
  };
  for (int m = -radius - 1; m <= radius + 1; ++m)
    for (int n = -radius - 1; n <= radius + 1; ++n) {
      const bool corner = std::abs(m) > radius && std::abs(n) > radius;
      if (!corner) labels[label(m, n)] = lattice_patch_index(radius, m, n);
    }
  return g.with_labels(std::move(labels));
}

Graph random_connected_graph(std::size_t interior, std::size_t boundary, double extra_edge_prob,
                             std::mt19937_64& engine) {
  if (interior == 0) throw DomainError("random graph needs at least one interior vertex");
  std::set<std::pair<VertexId, VertexId>> edges;
  for (std::size_t v = 1; v < interior; ++v)
    edges.emplace(static_cast<VertexId>(uniform_index(engine, v)), static_cast<VertexId>(v));
  for (std::size_t a = 0; a < interior; ++a)
    for (std::size_t b = a + 1; b < interior; ++b) {
      const double u = uniform01(engine);
      if (u < extra_edge_prob) edges.emplace(static_cast<VertexId>(a), static_cast<VertexId>(b));
    }
  for (std::size_t k = 0; k < boundary; ++k) {
    const auto b = static_cast<VertexId>(interior + k);
    const std::size_t links = std::min<std::size_t>(1 + uniform_index(engine, 3), interior);
    for (std::size_t x : sample_without_replacement(engine, interior, links))
      edges.emplace(static_cast<VertexId>(x), b);
  }
  return Graph(id_range(0, static_cast<VertexId>(interior) - 1),
               id_range(static_cast<VertexId>(interior),
                        static_cast<VertexId>(interior + boundary) - 1),
               std::vector<std::pair<VertexId, VertexId>>(edges.begin(), edges.end()));
}

FamilySpec FamilySpec::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("family")) throw DomainError("family record needs a 'family' key");
  FamilySpec s;
  s.family = j.at("family").get<std::string>();
  for (const char* key : {"n", "d", "k"})
    if (j.contains(key)) s.size = j.at(key).get<int>();
  s.alpha0 = j.value("alpha0", 1.0);
  s.t = j.value("t", 0.0);
  const std::string bc = j.value("bc", std::string("robin"));
  if (bc == "dirichlet") {
    s.dirichlet = true;
  } else if (bc == "neumann") {
    s.t = 0.0;
  } else if (bc != "robin") {
    throw DomainError("unknown boundary condition '" + bc + "'");
  }
  static const std::set<std::string> known{"path", "centered_path", "loop", "mobius",
                                           "complete", "bethe", "lattice2d"};
  if (!known.count(s.family)) throw DomainError("unknown family '" + s.family + "'");
  if (s.dirichlet && s.family != "path")
    throw UnsupportedError("Dirichlet closed form exists only for the path");
  return s;
}

nlohmann::json FamilySpec::to_json() const {
  nlohmann::json j;
  j["family"] = family;
  const char* key = family == "complete" ? "d" : family == "bethe" ? "k" : "n";
  if (family != "lattice2d") j[key] = size;
  j["alpha0"] = alpha0;
  j["t"] = t;
  if (dirichlet) j["bc"] = "dirichlet";
  return j;
}

bool FamilySpec::is_finite() const { return family != "bethe" && family != "lattice2d"; }

Graph FamilySpec::graph() const {
  if (family == "path") return path_graph(size);
  if (family == "centered_path") return centered_path_graph(size);
  if (family == "loop") return loop_graph(size);
  if (family == "mobius") return mobius_graph(size);
  if (family == "complete") return complete_graph_with_boundary(size);
  throw UnsupportedError("family '" + family + "' is infinite and has no finite graph");
}

BoundaryCondition FamilySpec::boundary_condition() const {
  if (dirichlet) return BoundaryCondition::dirichlet();
  if (t == 0.0) return BoundaryCondition::neumann();
  return BoundaryCondition::robin(t);
}

}  // namespace graphdiffuse
