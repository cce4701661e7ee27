#include "graphdiffuse/absorbers.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <string>

namespace graphdiffuse {

LatticeGreenCache::LatticeGreenCache(double alpha0) : alpha0_(alpha0) {
  if (!(alpha0 > 0.0) || !std::isfinite(alpha0)) throw DomainError("alpha0 must be positive");
}

LatticeValue LatticeGreenCache::get(std::int64_t dm, std::int64_t dn) const {
  const std::int64_t a = std::llabs(dm), b = std::llabs(dn);
  const std::pair<std::int64_t, std::int64_t> key{std::max(a, b), std::min(a, b)};
  {
    std::shared_lock lock(mutex_);
    auto it = values_.find(key);
    if (it != values_.end()) return it->second;
  }
  const LatticeValue v = lattice2d_green_estimate(alpha0_, key.first, key.second);
  std::unique_lock lock(mutex_);
  return values_.emplace(key, v).first->second;
}

std::size_t LatticeGreenCache::size() const {
  std::shared_lock lock(mutex_);
  return values_.size();
}

GreenKernel<std::int64_t> infinite_path_kernel(double alpha0) {
  (void)absorption_ratio(alpha0);
  return [alpha0](const std::int64_t& i, const std::int64_t& j) { return infinite_path_green(alpha0, i, j); };
}

GreenKernel<LatticePoint> lattice2d_kernel(const LatticeGreenCache& cache) {
  return [&cache](const LatticePoint& p, const LatticePoint& q) {
    return cache.get(q.m - p.m, q.n - p.n).value;
  };
}

namespace {

// Inputs of the two-site mode formula: G(y,y), G(y1,y2), G(i,y1), G(i,y2), G(y1,j), G(y2,j).
using TwoSiteInputs = std::array<double, 6>;

double two_site_value(double ak, const TwoSiteInputs& x) {
  const double lp = x[0] + x[1], lm = x[0] - x[1];
  const double sp = (x[2] + x[3]) * (x[4] + x[5]) / 2.0;
  const double sm = (x[2] - x[3]) * (x[4] - x[5]) / 2.0;
  return ak * (sp / (1.0 + ak * lp) + sm / (1.0 + ak * lm));
}

TwoAbsorberValue two_site(double alpha0, double kappa, const TwoSiteInputs& x, const TwoSiteInputs& err) {
  detail::check_strength(kappa, alpha0);
  const double ak = alpha0 * kappa;
  TwoAbsorberValue out;
  out.lambda_plus = x[0] + x[1];
  out.lambda_minus = x[0] - x[1];
  if (out.lambda_plus < out.lambda_minus) std::swap(out.lambda_plus, out.lambda_minus);
  if (1.0 + ak * out.lambda_plus == 0.0 || 1.0 + ak * out.lambda_minus == 0.0)
    throw SingularityError(std::string("two-absorber pole in the ") +
                           (1.0 + ak * out.lambda_plus == 0.0 ? "plus" : "minus") + " mode");
  out.value = two_site_value(ak, x);
  out.in_series_region = ak * std::max(std::abs(out.lambda_plus), std::abs(out.lambda_minus)) < 1.0;
  // First-order propagation of the input errors, one input at a time.
  double e = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (err[k] == 0.0) continue;
    TwoSiteInputs y = x;
    y[k] += err[k];
    e += std::abs(two_site_value(ak, y) - out.value);
  }
  out.abs_error = e + 4.0 * std::numeric_limits<double>::epsilon() * std::abs(out.value);
  return out;
}

}  // namespace

TwoAbsorberValue two_absorber_lattice2d(double alpha0, double kappa, std::int64_t k1, std::int64_t k2,
                                        std::int64_t s, std::int64_t j, const LatticeGreenCache& cache) {
  if (k1 == k2) throw DomainError("absorber sites must be distinct");
  if (cache.alpha0() != alpha0) throw DomainError("cache was built for a different alpha0");
  const std::array<LatticeValue, 6> g{cache.get(0, 0),  cache.get(0, k2 - k1), cache.get(s, k1),
                                      cache.get(s, k2), cache.get(j, k1),      cache.get(j, k2)};
  TwoSiteInputs x, err;
  for (std::size_t k = 0; k < g.size(); ++k) {
    x[k] = g[k].value;
    err[k] = g[k].abs_error;
  }
  return two_site(alpha0, kappa, x, err);
}

TwoAbsorberValue two_absorber_lattice2d(double alpha0, double kappa, std::int64_t k1, std::int64_t k2,
                                        std::int64_t s, std::int64_t j) {
  const LatticeGreenCache cache(alpha0);
  return two_absorber_lattice2d(alpha0, kappa, k1, k2, s, j, cache);
}

TwoAbsorberValue two_absorber_infinite_path(double alpha0, double kappa, std::int64_t k1, std::int64_t k2,
                                            std::int64_t i, std::int64_t j) {
  if (k1 == k2) throw DomainError("absorber sites must be distinct");
  const auto g = [alpha0](std::int64_t a, std::int64_t b) { return infinite_path_green(alpha0, a, b); };
  const TwoSiteInputs x{g(k1, k1), g(k1, k2), g(i, k1), g(i, k2), g(k1, j), g(k2, j)};
  return two_site(alpha0, kappa, x, TwoSiteInputs{});
}

double far_separation_residual(double alpha0, double kappa, std::int64_t k1, std::int64_t k2,
                               std::int64_t i, std::int64_t j) {
  const TwoAbsorberValue both = two_absorber_infinite_path(alpha0, kappa, k1, k2, i, j);
  const auto kernel = infinite_path_kernel(alpha0);
  const double s1 = single_absorber_scattered<std::int64_t>(kernel, k1, kappa, alpha0, i, j).value;
  const double s2 = single_absorber_scattered<std::int64_t>(kernel, k2, kappa, alpha0, i, j).value;
  return std::abs(both.value - (s1 + s2));
}

}  // namespace graphdiffuse
