#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "graphdiffuse/operators.hpp"

namespace graphdiffuse {

// Where a Green's matrix came from.
struct Provenance {
  enum class Kind { DirectInverse, BornSeries, ClosedForm };
  Kind kind = Kind::DirectInverse;
  int terms = 0;       // BornSeries only
  std::string family;  // ClosedForm only

  static Provenance direct() { return {}; }
  static Provenance born(int n) { return {Kind::BornSeries, n, {}}; }
  static Provenance closed_form(std::string name) { return {Kind::ClosedForm, 0, std::move(name)}; }
  std::string describe() const;
};

class GreensMatrix {
public:
  GreensMatrix(Eigen::MatrixXd entries, double alpha0, Provenance provenance);

  const Eigen::MatrixXd& entries() const noexcept { return entries_; }
  double operator()(std::size_t i, std::size_t j) const {
    return entries_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
  std::size_t size() const noexcept { return static_cast<std::size_t>(entries_.rows()); }
  double alpha0() const noexcept { return alpha0_; }
  const Provenance& provenance() const noexcept { return provenance_; }

private:
  Eigen::MatrixXd entries_;
  double alpha0_;
  Provenance provenance_;
};

struct ConvergenceReport {
  double global_margin = 0.0;      // alpha0 ||G0|| ||eta||
  double restricted_margin = 0.0;  // alpha0 eta_max ||G0 restricted to the support||
  bool converges_global = true;
  bool converges_restricted = true;
};

// Largest eta_max for which each certificate still guarantees convergence,
// for a fixed support. Infinite when the support is empty.
struct NormCutoffs {
  double global = 0.0;
  double restricted = 0.0;
};

// Inverse of the operator. Cholesky for symmetric operators, partial-pivot LU
// for Dirichlet assemblies; the residual ||G H - I||_inf is verified.
GreensMatrix greens_direct(const DiffusionOperator& h);

// Partial sums u_0 .. u_N of the Born series applied to f.
std::vector<Eigen::VectorXd> born_iterates(const GreensMatrix& g0, const AbsorptionProfile& eta,
                                           double alpha0, int n_terms, const Eigen::VectorXd& f);

// u_N only.
Eigen::VectorXd born_solve(const GreensMatrix& g0, const AbsorptionProfile& eta, double alpha0,
                           int n_terms, const Eigen::VectorXd& f);

// Truncated series operator B_N = sum_{m<=N} (-alpha0 G0 eta)^m G0 as a matrix.
GreensMatrix born_operator(const GreensMatrix& g0, const AbsorptionProfile& eta, double alpha0,
                           int n_terms);

ConvergenceReport convergence_report(const GreensMatrix& g0, const AbsorptionProfile& eta,
                                     double alpha0);

NormCutoffs norm_cutoffs(const GreensMatrix& g0, const std::vector<std::size_t>& support,
                         double alpha0);

// ||G0||^2 q^N / (1 - q) with q the restricted margin.
double truncation_error_bound(const GreensMatrix& g0, const AbsorptionProfile& eta, double alpha0,
                              int n_terms);

struct CutoffOptions {
  int n_max = 40;
  double tolerance = 1e-3;
};

// Bisection on the scale of `shape` (normalized so max|eta| = 1) for the
// largest eta_max at which ||u_N - u||_inf still drops between N_max/2 and
// N_max. Returns +infinity for an empty shape.
double empirical_cutoff(const DiffusionOperator& h0, const GreensMatrix& g0,
                        const AbsorptionProfile& shape, const Eigen::VectorXd& f,
                        const CutoffOptions& options = {});

// Whether the series error at options.n_max is below the error at n_max / 2.
bool born_error_decays(const DiffusionOperator& h0, const GreensMatrix& g0,
                       const AbsorptionProfile& eta, const Eigen::VectorXd& f, int n_max);

}  // namespace graphdiffuse
