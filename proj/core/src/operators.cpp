#include "graphdiffuse/operators.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Cholesky>
#include <Eigen/LU>

#include "graphdiffuse/error.hpp"

namespace graphdiffuse {

namespace {

void check_alpha0(double alpha0) {
  if (!(alpha0 > 0.0) || !std::isfinite(alpha0))
    throw DomainError("alpha0 must be finite and positive");
}

// Calls emit(row, col, value) for each nonzero of H0.
template <class Emit>
void for_each_h0_entry(const Graph& g, double alpha0, const BoundaryCondition& bc, Emit&& emit) {
  const std::size_t n = g.interior_count();
  for (std::size_t x = 0; x < n; ++x) {
    emit(x, x, static_cast<double>(g.degree(x)) + alpha0);
    for (std::size_t y : g.neighbors(x)) emit(x, y, -1.0);
  }
  for (std::size_t y = n; y < g.vertex_count(); ++y) {
    if (bc.is_dirichlet()) {
      emit(y, y, 1.0);
      continue;
    }
    // Boundary vertices only ever neighbour interior vertices.
    emit(y, y, bc.t() + static_cast<double>(g.neighbors(y).size()));
    for (std::size_t x : g.neighbors(y)) emit(y, x, -1.0);
  }
}

}  // namespace

DiffusionOperator::DiffusionOperator(Eigen::MatrixXd matrix, std::size_t interior_count,
                                     double alpha0, BoundaryCondition bc)
    : matrix_(std::move(matrix)), n_(interior_count), alpha0_(alpha0), bc_(bc) {
  if (matrix_.rows() != matrix_.cols()) throw DomainError("operator matrix must be square");
  if (n_ > static_cast<std::size_t>(matrix_.rows()))
    throw DomainError("interior count exceeds operator size");
}

AbsorptionProfile::AbsorptionProfile(std::map<std::size_t, double> values) {
  for (const auto& [i, v] : values) {
    if (!std::isfinite(v)) throw DomainError("absorption values must be finite");
    if (v != 0.0) values_.emplace(i, v);
  }
}

AbsorptionProfile AbsorptionProfile::uniform(const std::vector<std::size_t>& support, double value) {
  std::map<std::size_t, double> v;
  for (std::size_t i : support) v[i] = value;
  return AbsorptionProfile(std::move(v));
}

std::vector<std::size_t> AbsorptionProfile::support() const {
  std::vector<std::size_t> s;
  s.reserve(values_.size());
  for (const auto& kv : values_) s.push_back(kv.first);
  return s;
}

double AbsorptionProfile::value(std::size_t index) const {
  auto it = values_.find(index);
  return it == values_.end() ? 0.0 : it->second;
}

double AbsorptionProfile::eta_max() const {
  double m = 0.0;
  for (const auto& kv : values_) m = std::max(m, std::abs(kv.second));
  return m;
}

AbsorptionProfile AbsorptionProfile::scaled(double factor) const {
  std::map<std::size_t, double> v;
  for (const auto& [i, x] : values_) v[i] = x * factor;
  return AbsorptionProfile(std::move(v));
}

std::size_t AbsorptionProfile::max_index() const {
  return values_.empty() ? 0 : values_.rbegin()->first;
}

Eigen::MatrixXd build_laplacian(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.interior_count());
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, static_cast<Eigen::Index>(g.vertex_count()));
  for (Eigen::Index x = 0; x < n; ++x) {
    const auto ux = static_cast<std::size_t>(x);
    l(x, x) = static_cast<double>(g.degree(ux));
    for (std::size_t y : g.neighbors(ux)) l(x, static_cast<Eigen::Index>(y)) = -1.0;
  }
  return l;
}

Eigen::MatrixXd build_normalized_laplacian(const Graph& g) {
  const auto m = static_cast<Eigen::Index>(g.vertex_count());
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(m, m);
  for (Eigen::Index x = 0; x < m; ++x) {
    const auto ux = static_cast<std::size_t>(x);
    const double dx = static_cast<double>(g.degree(ux));
    if (dx == 0.0) continue;
    l(x, x) = 1.0;
    for (std::size_t y : g.neighbors(ux))
      l(x, static_cast<Eigen::Index>(y)) = -1.0 / std::sqrt(dx * static_cast<double>(g.degree(y)));
  }
  return l;
}

DiffusionOperator assemble_h0(const Graph& g, double alpha0, const BoundaryCondition& bc) {
  check_alpha0(alpha0);
  const auto m = static_cast<Eigen::Index>(g.vertex_count());
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(m, m);
  for_each_h0_entry(g, alpha0, bc, [&](std::size_t r, std::size_t c, double v) {
    h(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = v;
  });
  return DiffusionOperator(std::move(h), g.interior_count(), alpha0, bc);
}

Eigen::SparseMatrix<double> assemble_h0_sparse(const Graph& g, double alpha0,
                                               const BoundaryCondition& bc) {
  check_alpha0(alpha0);
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(g.vertex_count() + 2 * g.edge_count());
  for_each_h0_entry(g, alpha0, bc, [&](std::size_t r, std::size_t c, double v) {
    trip.emplace_back(static_cast<int>(r), static_cast<int>(c), v);
  });
  const auto m = static_cast<Eigen::Index>(g.vertex_count());
  Eigen::SparseMatrix<double> h(m, m);
  h.setFromTriplets(trip.begin(), trip.end());
  return h;
}

DiffusionOperator assemble_perturbed(const DiffusionOperator& h0, const AbsorptionProfile& eta) {
  if (!eta.empty() && eta.max_index() >= h0.interior_count())
    throw DomainError("absorption support index " + std::to_string(eta.max_index()) +
                      " is outside the interior");
  Eigen::MatrixXd h = h0.matrix();
  for (const auto& [i, v] : eta.values()) {
    const auto k = static_cast<Eigen::Index>(i);
    h(k, k) += h0.alpha0() * v;
  }
  return DiffusionOperator(std::move(h), h0.interior_count(), h0.alpha0(), h0.bc());
}

Eigen::VectorXd source_vector(const Graph& g, const Eigen::VectorXd& f, const Eigen::VectorXd& boundary) {
  if (static_cast<std::size_t>(f.size()) != g.interior_count() ||
      static_cast<std::size_t>(boundary.size()) != g.boundary_count())
    throw DomainError("source vector sizes do not match the graph");
  Eigen::VectorXd out(f.size() + boundary.size());
  out << f, boundary;
  return out;
}

double normal_derivative(const Graph& g, const Eigen::VectorXd& u, std::size_t y) {
  if (y >= g.vertex_count() || !g.is_boundary(y))
    throw DomainError("normal derivative requires a boundary vertex");
  if (static_cast<std::size_t>(u.size()) != g.vertex_count())
    throw DomainError("vector length does not match the graph");
  double s = 0.0;
  const double uy = u(static_cast<Eigen::Index>(y));
  for (std::size_t x : g.neighbors(y)) s += uy - u(static_cast<Eigen::Index>(x));
  return s;
}

double neumann_small_alpha_slope(const Graph& g) {
  if (!g.is_connected()) throw DomainError("small-absorption slope requires a connected graph");
  return static_cast<double>(g.interior_count()) / static_cast<double>(g.vertex_count());
}

Eigen::VectorXd solve_direct(const DiffusionOperator& op, const Eigen::VectorXd& rhs) {
  if (rhs.size() != op.matrix().rows()) throw DomainError("right-hand side has the wrong length");
  if (op.is_symmetric()) {
    Eigen::LLT<Eigen::MatrixXd> llt(op.matrix());
    if (llt.info() == Eigen::Success) return llt.solve(rhs);
  }
  return op.matrix().partialPivLu().solve(rhs);
}

}  // namespace graphdiffuse
