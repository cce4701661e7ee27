#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "graphdiffuse/closed_form.hpp"
#include "graphdiffuse/error.hpp"

namespace graphdiffuse {

// Background Green's function evaluated entry by entry.
template <class Vertex>
using GreenKernel = std::function<double(const Vertex&, const Vertex&)>;

struct ScatteringOperator {
  Eigen::MatrixXd g_r;          // G restricted to the sites
  Eigen::VectorXd eigvals;      // ascending
  Eigen::MatrixXd eigvecs;      // orthonormal columns
  Eigen::VectorXd d_tilde;      // 1 / (1 + alpha0 kappa lambda)
  bool converges = true;        // alpha0 kappa max|lambda| < 1
};

struct ScatteredValue {
  double value = 0.0;
  bool in_series_region = true;
};

namespace detail {
inline void check_strength(double kappa, double alpha0) {
  if (!(alpha0 > 0.0) || !std::isfinite(alpha0)) throw DomainError("alpha0 must be positive");
  if (!(kappa >= 0.0) || !std::isfinite(kappa)) throw DomainError("kappa must be nonnegative");
}
}  // namespace detail

template <class Vertex>
ScatteringOperator scattering_operator(const GreenKernel<Vertex>& g0,
                                       const std::vector<Vertex>& sites, double kappa,
                                       double alpha0) {
  detail::check_strength(kappa, alpha0);
  const auto m = static_cast<Eigen::Index>(sites.size());
  if (m == 0) throw DomainError("at least one absorber site is required");
  for (Eigen::Index a = 0; a < m; ++a)
    for (Eigen::Index b = a + 1; b < m; ++b)
      if (sites[a] == sites[b]) throw DomainError("absorber sites must be distinct");

  ScatteringOperator op;
  op.g_r.resize(m, m);
  for (Eigen::Index a = 0; a < m; ++a)
    for (Eigen::Index b = a; b < m; ++b) op.g_r(a, b) = op.g_r(b, a) = g0(sites[a], sites[b]);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(op.g_r);
  op.eigvals = es.eigenvalues();
  op.eigvecs = es.eigenvectors();
  op.d_tilde.resize(m);
  const double ak = alpha0 * kappa;
  for (Eigen::Index l = 0; l < m; ++l) {
    const double denom = 1.0 + ak * op.eigvals(l);
    if (denom == 0.0)
      throw SingularityError("scattering pole in mode " + std::to_string(l) +
                             " (1 + alpha0 kappa lambda = 0)");
    op.d_tilde(l) = 1.0 / denom;
  }
  op.converges = ak * op.eigvals.cwiseAbs().maxCoeff() < 1.0;
  return op;
}

// alpha0 kappa G(i,y) G(y,j) / (1 + alpha0 kappa G(y,y)), i.e. G0 - G.
template <class Vertex>
ScatteredValue single_absorber_scattered(const GreenKernel<Vertex>& g0, const Vertex& y,
                                         double kappa, double alpha0, const Vertex& i,
                                         const Vertex& j) {
  detail::check_strength(kappa, alpha0);
  const double ak = alpha0 * kappa;
  const double gyy = g0(y, y);
  const double denom = 1.0 + ak * gyy;
  if (denom == 0.0) throw SingularityError("single absorber pole: 1 + alpha0 kappa G(y,y) = 0");
  return {ak / denom * g0(i, y) * g0(y, j), std::abs(ak * gyy) < 1.0};
}

template <class Vertex>
ScatteredValue multi_absorber_scattered(const GreenKernel<Vertex>& g0,
                                        const std::vector<Vertex>& sites, double kappa,
                                        double alpha0, const Vertex& i, const Vertex& j) {
  const ScatteringOperator op = scattering_operator(g0, sites, kappa, alpha0);
  const auto m = static_cast<Eigen::Index>(sites.size());
  Eigen::VectorXd gi(m), gj(m);
  for (Eigen::Index a = 0; a < m; ++a) {
    gi(a) = g0(i, sites[a]);
    gj(a) = g0(sites[a], j);
  }
  const Eigen::VectorXd pi = op.eigvecs.transpose() * gi;
  const Eigen::VectorXd pj = op.eigvecs.transpose() * gj;
  const double v = alpha0 * kappa * (pi.array() * op.d_tilde.array() * pj.array()).sum();
  return {v, op.converges};
}

// Thread-safe memo of square-lattice Green's function values keyed by the
// normalized offset (max(|dm|,|dn|), min(|dm|,|dn|)).
class LatticeGreenCache {
public:
  explicit LatticeGreenCache(double alpha0);

  double alpha0() const noexcept { return alpha0_; }
  LatticeValue get(std::int64_t dm, std::int64_t dn) const;
  std::size_t size() const;

private:
  double alpha0_;
  mutable std::shared_mutex mutex_;
  mutable std::map<std::pair<std::int64_t, std::int64_t>, LatticeValue> values_;
};

struct LatticePoint {
  std::int64_t m = 0;
  std::int64_t n = 0;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

GreenKernel<std::int64_t> infinite_path_kernel(double alpha0);
GreenKernel<LatticePoint> lattice2d_kernel(const LatticeGreenCache& cache);

struct TwoAbsorberValue {
  double value = 0.0;
  double lambda_plus = 0.0;
  double lambda_minus = 0.0;
  double abs_error = 0.0;  // propagated quadrature error
  bool in_series_region = true;
};

// Absorbers at (0,k1), (0,k2); source (s,0); detector (j,0).
TwoAbsorberValue two_absorber_lattice2d(double alpha0, double kappa, std::int64_t k1,
                                        std::int64_t k2, std::int64_t s, std::int64_t j,
                                        const LatticeGreenCache& cache);
TwoAbsorberValue two_absorber_lattice2d(double alpha0, double kappa, std::int64_t k1,
                                        std::int64_t k2, std::int64_t s, std::int64_t j);

// Absorbers at k1, k2 on the infinite path, source i, detector j, written with
// the mode eigenvalues 1/(2 sinh log r) +- G(k1,k2).
TwoAbsorberValue two_absorber_infinite_path(double alpha0, double kappa, std::int64_t k1,
                                            std::int64_t k2, std::int64_t i, std::int64_t j);

// |two-absorber field - (single field at k1 + single field at k2)| on the infinite path.
double far_separation_residual(double alpha0, double kappa, std::int64_t k1, std::int64_t k2,
                               std::int64_t i, std::int64_t j);

}  // namespace graphdiffuse
