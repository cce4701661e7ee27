#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "graphdiffuse/graph.hpp"

namespace graphdiffuse {

// Assembled (n + k) x (n + k) operator together with the data it was built from.
//
// Robin and Neumann assemblies are symmetric. The Dirichlet variant replaces
// the boundary rows by identity rows and therefore keeps nonzero
// interior-to-boundary couplings only above the diagonal.
class DiffusionOperator {
public:
  DiffusionOperator(Eigen::MatrixXd matrix, std::size_t interior_count, double alpha0,
                    BoundaryCondition bc);

  const Eigen::MatrixXd& matrix() const noexcept { return matrix_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(matrix_.rows()); }
  std::size_t interior_count() const noexcept { return n_; }
  double alpha0() const noexcept { return alpha0_; }
  const BoundaryCondition& bc() const noexcept { return bc_; }
  bool is_symmetric() const noexcept { return !bc_.is_dirichlet(); }

private:
  Eigen::MatrixXd matrix_;
  std::size_t n_;
  double alpha0_;
  BoundaryCondition bc_;
};

// Absorption perturbation eta on interior vertices. Zero values are dropped so
// the support is exactly the set of nonzero entries.
class AbsorptionProfile {
public:
  AbsorptionProfile() = default;
  explicit AbsorptionProfile(std::map<std::size_t, double> values);
  static AbsorptionProfile uniform(const std::vector<std::size_t>& support, double value);

  const std::map<std::size_t, double>& values() const noexcept { return values_; }
  std::vector<std::size_t> support() const;
  bool empty() const noexcept { return values_.empty(); }
  double value(std::size_t index) const;
  double eta_max() const;  // max |eta|, which is also the spectral norm of diag(eta)
  AbsorptionProfile scaled(double factor) const;
  // Largest index present, or nothing for an empty profile.
  std::size_t max_index() const;

private:
  std::map<std::size_t, double> values_;
};

// Rows of the graph Laplacian for interior vertices, columns over all vertices.
Eigen::MatrixXd build_laplacian(const Graph& g);

// Symmetric normalized Laplacian over every vertex; rows of isolated vertices are zero.
Eigen::MatrixXd build_normalized_laplacian(const Graph& g);

DiffusionOperator assemble_h0(const Graph& g, double alpha0, const BoundaryCondition& bc);

// Same matrix as assemble_h0, compressed column storage.
Eigen::SparseMatrix<double> assemble_h0_sparse(const Graph& g, double alpha0,
                                               const BoundaryCondition& bc);

// H0 + alpha0 * diag(eta), with eta extended by zeros on the boundary.
DiffusionOperator assemble_perturbed(const DiffusionOperator& h0, const AbsorptionProfile& eta);

// Concatenated right-hand side (f on the interior, g on the boundary).
Eigen::VectorXd source_vector(const Graph& g, const Eigen::VectorXd& f, const Eigen::VectorXd& boundary);

// Sum over interior neighbours x of y of (u(y) - u(x)); y is an internal boundary index.
double normal_derivative(const Graph& g, const Eigen::VectorXd& u, std::size_t y);

// |V| / (|V| + |dV|), the small-absorption slope of the Neumann ground state.
double neumann_small_alpha_slope(const Graph& g);

// Direct solve of op * u = rhs (Cholesky when symmetric, LU otherwise).
Eigen::VectorXd solve_direct(const DiffusionOperator& op, const Eigen::VectorXd& rhs);

}  // namespace graphdiffuse
