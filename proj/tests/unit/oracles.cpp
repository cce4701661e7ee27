#include "oracles.hpp"

#include <Eigen/LU>
#include <Eigen/SparseCholesky>
#include <boost/math/quadrature/tanh_sinh.hpp>

namespace oracle {

Eigen::MatrixXd inverse(const Eigen::MatrixXd& m) { return m.fullPivLu().inverse(); }

Eigen::MatrixXd path_operator_by_position(int n, double alpha0, double t) {
  const int m = n + 2;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(m, m);
  for (int i = 1; i <= n; ++i) {
    h(i, i) = 2.0 + alpha0;
    h(i, i - 1) = h(i, i + 1) = -1.0;
  }
  h(0, 0) = h(m - 1, m - 1) = 1.0 + t;
  h(0, 1) = h(m - 1, m - 2) = -1.0;
  return h;
}

std::vector<double> truncated_lattice_column(double alpha0, int radius,
                                             const std::vector<std::pair<int, int>>& offsets) {
  const int side = 2 * radius + 1;
  const auto idx = [&](int m, int n) { return (m + radius) * side + (n + radius); };
  std::vector<Eigen::Triplet<double>> trip;
  for (int m = -radius; m <= radius; ++m)
    for (int n = -radius; n <= radius; ++n) {
      trip.emplace_back(idx(m, n), idx(m, n), 4.0 + alpha0);
      const int nb[4][2] = {{m + 1, n}, {m - 1, n}, {m, n + 1}, {m, n - 1}};
      for (const auto& q : nb)
        if (std::abs(q[0]) <= radius && std::abs(q[1]) <= radius)
          trip.emplace_back(idx(m, n), idx(q[0], q[1]), -1.0);
    }
  Eigen::SparseMatrix<double> a(side * side, side * side);
  a.setFromTriplets(trip.begin(), trip.end());
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(a);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(side * side);
  rhs(idx(0, 0)) = 1.0;
  const Eigen::VectorXd u = solver.solve(rhs);
  std::vector<double> out;
  for (const auto& [m, n] : offsets) out.push_back(u(idx(m, n)));
  return out;
}

double integrate(const std::function<double(double)>& f, double a, double b) {
  boost::math::quadrature::tanh_sinh<double> ts;
  return ts.integrate(f, a, b);
}

double max_abs_diff(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace oracle
