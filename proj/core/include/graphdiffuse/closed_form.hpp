#pragma once

#include <cstdint>

#include "graphdiffuse/born.hpp"
#include "graphdiffuse/families.hpp"

namespace graphdiffuse {

// Path parameters. r solves r + 1/r = 2 + alpha0 with r > 1. The amplitude a
// enters only through a^2, which turns negative (a purely imaginary) whenever
// t < r - 1, Neumann included; every formula below is real in a^2.
struct PathParams {
  int n = 0;
  double t = 0.0;
  double r = 1.0;
  double a_squared = 1.0;
  double gamma = 1.0;  // 1 / (1 + t)

  static PathParams make(int n, double alpha0, double t);
};

double absorption_ratio(double alpha0);  // r

double path_green_robin(int n, double alpha0, double t, int i, int j);
double path_green_dirichlet(int n, double alpha0, int i, int j);
// Indices run over -(n+1)..(n+1).
double centered_path_green(int n, double alpha0, double t, int i, int j);
double infinite_path_green(double alpha0, std::int64_t i, std::int64_t j);
double loop_green(int n, double alpha0, int i, int j);
double mobius_green(int n, double alpha0, int i, int j);
// Indices 0..d-1 interior, d..2d-1 boundary (x + d attached to x).
double complete_green(int d, double alpha0, double t, int x, int y);

struct BetheParams {
  int k = 2;
  double lambda = 0.0;
  double norm = 1.0;  // k (1 - lambda) + alpha0

  static BetheParams make(int k, double alpha0);
};

double bethe_green(int k, double alpha0, std::int64_t dist);

// Complete elliptic integral of the first kind with the modulus squared
// inside: K(m) = int_0^{pi/2} (1 - m^2 sin^2 phi)^{-1/2}.
double elliptic_k(double m);

struct LatticeValue {
  double value = 0.0;
  double abs_error = 0.0;
};

// Square-lattice Green's function. The diagonal uses the elliptic integral,
// everything else adaptive Gauss-Kronrod quadrature (relative tolerance 1e-10).
double lattice2d_green(double alpha0, std::int64_t m1, std::int64_t n1, std::int64_t m2,
                       std::int64_t n2);
LatticeValue lattice2d_green_estimate(double alpha0, std::int64_t dm, std::int64_t dn);
// Always integrates, the diagonal included.
LatticeValue lattice2d_green_quadrature(double alpha0, std::int64_t dm, std::int64_t dn);

// Entry (i, j) in the internal index order of spec.graph(). Finite families only.
double closed_form_entry(const FamilySpec& spec, std::size_t i, std::size_t j);
GreensMatrix closed_form_greens(const FamilySpec& spec);

}  // namespace graphdiffuse
