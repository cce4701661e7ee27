#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace graphdiffuse {

// l2 operator norm. Symmetric input uses the eigenvalue of largest magnitude,
// anything else the largest singular value.
double spectral_norm(const Eigen::MatrixXd& m);

// Principal submatrix on the given indices (in the given order).
Eigen::MatrixXd principal_submatrix(const Eigen::MatrixXd& m, const std::vector<std::size_t>& idx);

// max_i sum_j |m(i, j)|
double inf_norm(const Eigen::MatrixXd& m);

bool is_exactly_symmetric(const Eigen::MatrixXd& m);

// Smallest eigenvalue of a symmetric matrix.
double min_eigenvalue(const Eigen::MatrixXd& m);

}  // namespace graphdiffuse
