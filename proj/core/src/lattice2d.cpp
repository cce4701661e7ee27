#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "graphdiffuse/closed_form.hpp"
#include "graphdiffuse/error.hpp"

namespace graphdiffuse {

namespace {

constexpr double kRelTol = 1e-10;

double lattice_a(double alpha0) {
  if (!(alpha0 > 0.0) || !std::isfinite(alpha0))
    throw DomainError("lattice Green's function requires a finite alpha0 > 0");
  return 1.0 + 0.25 * alpha0;
}

}  // namespace

LatticeValue lattice2d_green_quadrature(double alpha0, std::int64_t dm, std::int64_t dn) {
  const double a = lattice_a(alpha0);
  const auto am = std::llabs(dm), an = std::llabs(dn);
  const double dplus = static_cast<double>(am + an);
  const double dminus = static_cast<double>(am - an);

  // The integrand over [0, pi] is symmetric about pi/2 (d+ + d- is even), so
  // integrate one half and double: g = (1 / 2pi) int_0^{pi/2}.
  const auto integrand = [=](double v) {
    const double c = std::cos(v);
    const double root = std::sqrt(a * a - c * c);
    const double ratio = c / (a + root);
    return std::cos(dminus * v) * std::pow(ratio, dplus) / root;
  };
  double err = 0.0;
  const double integral = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      integrand, 0.0, 0.5 * M_PI, 30, kRelTol, &err);
  const double value = integral / (2.0 * M_PI);
  const double abs_err = err / (2.0 * M_PI);
  if (!std::isfinite(value) || abs_err > kRelTol * std::abs(value) + 1e-300) {
    std::ostringstream os;
    os << "lattice quadrature did not converge for offset (" << dm << "," << dn
       << "): estimated error " << abs_err;
    throw NumericalError(os.str(), abs_err);
  }
  return {value, abs_err};
}

LatticeValue lattice2d_green_estimate(double alpha0, std::int64_t dm, std::int64_t dn) {
  if (dm == 0 && dn == 0) {
    const double a = lattice_a(alpha0);
    const double value = elliptic_k(1.0 / a) / (2.0 * M_PI * a);
    return {value, 4.0 * std::numeric_limits<double>::epsilon() * value};
  }
  return lattice2d_green_quadrature(alpha0, dm, dn);
}

double lattice2d_green(double alpha0, std::int64_t m1, std::int64_t n1, std::int64_t m2,
                       std::int64_t n2) {
  return lattice2d_green_estimate(alpha0, m2 - m1, n2 - n1).value;
}

}  // namespace graphdiffuse
