#include "graphdiffuse/closed_form.hpp"

#include <cmath>
#include <cstdlib>

#include "graphdiffuse/error.hpp"

namespace graphdiffuse {

namespace {

void check_alpha0(double alpha0) {
  if (!(alpha0 > 0.0) || !std::isfinite(alpha0))
    throw DomainError("closed forms require a finite alpha0 > 0");
}

void check_index(int i, int lo, int hi) {
  if (i < lo || i > hi) throw DomainError("index " + std::to_string(i) + " outside the family");
}

// Path Green's function in the form divided through by r^(n+1) so that every
// power of r has a nonpositive exponent. Positions satisfy 0 <= i <= j <= n+1.
double path_kernel(int n1, double r, double a2, int i, int j) {
  const double s = r - 1.0 / r;
  const auto p = [r](int e) { return std::pow(r, e); };
  const double num = a2 * p(i - j) - p(i + j - 2 * n1) - p(-i - j) + p(j - i - 2 * n1) / a2;
  const double den = s * (a2 - p(-2 * n1) / a2);
  return num / den;
}

// Position of an internal index for the families built in families.cpp.
int family_position(const FamilySpec& s, std::size_t idx) {
  const auto i = static_cast<int>(idx);
  if (s.family == "path") return i < s.size ? i + 1 : (i == s.size ? 0 : s.size + 1);
  if (s.family == "centered_path") {
    const int interior = 2 * s.size + 1;
    return i < interior ? i - s.size : (i == interior ? -(s.size + 1) : s.size + 1);
  }
  return i;
}

}  // namespace

double absorption_ratio(double alpha0) {
  check_alpha0(alpha0);
  return 1.0 + 0.5 * (alpha0 + std::sqrt(alpha0 * alpha0 + 4.0 * alpha0));
}

PathParams PathParams::make(int n, double alpha0, double t) {
  if (n < 1) throw DomainError("path length must be at least 1");
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("Robin parameter must be finite and >= 0");
  PathParams p;
  p.n = n;
  p.t = t;
  p.r = absorption_ratio(alpha0);
  p.gamma = 1.0 / (1.0 + t);
  const double gap = 1.0 + t - p.r;
  if (gap == 0.0) throw SingularityError("path parameters singular: 1 + t equals r");
  p.a_squared = 1.0 + (p.r * p.r - 1.0) / (p.r * gap);
  return p;
}

double path_green_robin(int n, double alpha0, double t, int i, int j) {
  const PathParams p = PathParams::make(n, alpha0, t);
  check_index(i, 0, n + 1);
  check_index(j, 0, n + 1);
  if (i > j) std::swap(i, j);
  return path_kernel(n + 1, p.r, p.a_squared, i, j);
}

double path_green_dirichlet(int n, double alpha0, int i, int j) {
  if (n < 1) throw DomainError("path length must be at least 1");
  const double r = absorption_ratio(alpha0);
  check_index(i, 0, n + 1);
  check_index(j, 0, n + 1);
  const int n1 = n + 1;
  if (i == 0 || i == n1) return i == j ? 1.0 : 0.0;
  const double tail = 1.0 - std::pow(r, -2 * n1);
  if (j == 0) return (std::pow(r, -i) - std::pow(r, i - 2 * n1)) / tail;
  if (j == n1) return (std::pow(r, i - n1) - std::pow(r, -i - n1)) / tail;
  if (i > j) std::swap(i, j);
  return path_kernel(n1, r, 1.0, i, j);
}

double centered_path_green(int n, double alpha0, double t, int i, int j) {
  check_index(i, -(n + 1), n + 1);
  check_index(j, -(n + 1), n + 1);
  return path_green_robin(2 * n + 1, alpha0, t, i + n + 1, j + n + 1);
}

double infinite_path_green(double alpha0, std::int64_t i, std::int64_t j) {
  const double r = absorption_ratio(alpha0);
  const double d = static_cast<double>(std::llabs(i - j));
  return std::exp(-std::log(r) * d) / (r - 1.0 / r);
}

double loop_green(int n, double alpha0, int i, int j) {
  const double r = absorption_ratio(alpha0);
  const int m = 2 * n + 2;
  check_index(i, 0, m - 1);
  check_index(j, 0, m - 1);
  const int diff = std::abs(i - j);
  const int d = std::min(diff, m - diff);
  const int n1 = n + 1;
  return (std::pow(r, -d) + std::pow(r, d - 2 * n1)) /
         ((r - 1.0 / r) * (1.0 - std::pow(r, -2 * n1)));
}

double mobius_green(int n, double alpha0, int i, int j) {
  check_alpha0(alpha0);
  if (n < 1 || n % 2 == 0) throw UnsupportedError("Mobius ladder closed form needs odd n");
  const int m = 2 * n + 2;
  check_index(i, 0, m - 1);
  check_index(j, 0, m - 1);
  const int n1 = n + 1;
  const int h = n1 / 2;
  // Signed offset in (-(n+1), n+1].
  int k = ((i - j) % m + m) % m;
  if (k > n1) k -= m;

  // Part symmetric under the half-turn: a Robin path with t = alpha0 / 2.
  int fold = std::abs(k);
  if (fold > h) fold = n1 - fold;
  const double g1 = 0.5 * path_green_robin(n, alpha0, 0.5 * alpha0, fold + h, h);

  // Antisymmetric part: a Dirichlet path with absorption alpha0 + 2, extended
  // past |k| = h by g2(k) = -g2(k -+ (n+1)).
  double sign = 1.0;
  int ka = k;
  if (ka > h) {
    ka -= n1;
    sign = -1.0;
  } else if (ka < -h) {
    ka += n1;
    sign = -1.0;
  }
  const double g2 = sign * 0.5 * path_green_dirichlet(n, alpha0 + 2.0, ka + h, h);
  return g1 + g2;
}

double complete_green(int d, double alpha0, double t, int x, int y) {
  check_alpha0(alpha0);
  if (d < 2) throw DomainError("complete graph closed form needs d >= 2");
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("Robin parameter must be finite and >= 0");
  check_index(x, 0, 2 * d - 1);
  check_index(y, 0, 2 * d - 1);
  const double gamma = 1.0 / (1.0 + t);
  const double sigma = 2.0 + alpha0 - gamma;
  if (sigma - 1.0 == 0.0) throw SingularityError("complete graph closed form singular (sigma = 1)");
  const double g = 1.0 / ((sigma - 1.0) * (sigma - 1.0 + d));
  const bool bx = x >= d, by = y >= d;
  const int ix = bx ? x - d : x, iy = by ? y - d : y;
  const double interior = ix == iy ? sigma * g : g;
  if (!bx && !by) return interior;
  if (bx != by) return gamma * interior;
  return ix == iy ? gamma + gamma * gamma * sigma * g : gamma * gamma * g;
}

BetheParams BetheParams::make(int k, double alpha0) {
  check_alpha0(alpha0);
  if (k < 2) throw DomainError("Bethe lattice needs coordination number >= 2");
  BetheParams p;
  p.k = k;
  const double b = k + alpha0;
  // Smaller root of (k-1) lambda^2 - (k + alpha0) lambda + 1 = 0, written
  // without cancellation.
  p.lambda = 2.0 / (b + std::sqrt(b * b - 4.0 * (k - 1)));
  if (!(p.lambda < 1.0))
    throw DomainError("Bethe lattice Green's function unbounded (lambda >= 1)");
  p.norm = k * (1.0 - p.lambda) + alpha0;
  return p;
}

double bethe_green(int k, double alpha0, std::int64_t dist) {
  if (dist < 0) throw DomainError("distance must be nonnegative");
  const BetheParams p = BetheParams::make(k, alpha0);
  return std::pow(p.lambda, static_cast<double>(dist)) / p.norm;
}

double elliptic_k(double m) {
  const double m2 = m * m;
  if (!(m2 < 1.0)) throw DomainError("elliptic_k requires m^2 < 1");
  double a = 1.0, b = std::sqrt(1.0 - m2);
  for (int it = 0; it < 64 && std::abs(a - b) > 1e-16 * a; ++it) {
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return M_PI / (a + b);
}

double closed_form_entry(const FamilySpec& s, std::size_t i, std::size_t j) {
  const int pi = family_position(s, i), pj = family_position(s, j);
  if (s.family == "path")
    return s.dirichlet ? path_green_dirichlet(s.size, s.alpha0, pi, pj)
                       : path_green_robin(s.size, s.alpha0, s.t, pi, pj);
  if (s.family == "centered_path") return centered_path_green(s.size, s.alpha0, s.t, pi, pj);
  if (s.family == "loop") return loop_green(s.size, s.alpha0, pi, pj);
  if (s.family == "mobius") return mobius_green(s.size, s.alpha0, pi, pj);
  if (s.family == "complete") return complete_green(s.size, s.alpha0, s.t, pi, pj);
  throw UnsupportedError("family '" + s.family + "' has no finite Green's matrix");
}

GreensMatrix closed_form_greens(const FamilySpec& s) {
  std::size_t m = 0;
  if (s.family == "path") m = static_cast<std::size_t>(s.size) + 2;
  else if (s.family == "centered_path") m = 2 * static_cast<std::size_t>(s.size) + 3;
  else if (s.family == "loop" || s.family == "mobius") m = 2 * static_cast<std::size_t>(s.size) + 2;
  else if (s.family == "complete") m = 2 * static_cast<std::size_t>(s.size);
  else throw UnsupportedError("family '" + s.family + "' has no finite Green's matrix");

  Eigen::MatrixXd g(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      g(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = closed_form_entry(s, a, b);
  return GreensMatrix(std::move(g), s.alpha0, Provenance::closed_form(s.family));
}

}  // namespace graphdiffuse
