#include "graphdiffuse/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace graphdiffuse {

bool is_exactly_symmetric(const Eigen::MatrixXd& m) {
  return m.rows() == m.cols() && m == m.transpose();
}

double spectral_norm(const Eigen::MatrixXd& m) {
  if (m.size() == 0) return 0.0;
  if (is_exactly_symmetric(m)) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().maxCoeff();
  }
  Eigen::BDCSVD<Eigen::MatrixXd> svd(m);
  return svd.singularValues()(0);
}

Eigen::MatrixXd principal_submatrix(const Eigen::MatrixXd& m, const std::vector<std::size_t>& idx) {
  const auto k = static_cast<Eigen::Index>(idx.size());
  Eigen::MatrixXd s(k, k);
  for (Eigen::Index a = 0; a < k; ++a)
    for (Eigen::Index b = 0; b < k; ++b)
      s(a, b) = m(static_cast<Eigen::Index>(idx[a]), static_cast<Eigen::Index>(idx[b]));
  return s;
}

double inf_norm(const Eigen::MatrixXd& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().rowwise().sum().maxCoeff();
}

double min_eigenvalue(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

}  // namespace graphdiffuse
