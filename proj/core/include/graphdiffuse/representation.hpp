#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "graphdiffuse/group.hpp"

namespace graphdiffuse {

using cplx = std::complex<double>;

struct Representation {
  std::string label;                    // partition "(3,1)" or character "chi(1,0)"
  std::size_t degree = 1;
  std::vector<Eigen::MatrixXcd> images;  // indexed by group element
};

struct RepresentationSet {
  std::vector<Representation> reps;
  bool unitary = true;

  std::size_t degree_square_sum() const;
};

// Characters of a product of cyclic groups, as degree-one representations.
// Character k evaluates to exp(2 pi i sum_j k_j x_j / n_j); k runs over the
// group elements in index order.
RepresentationSet characters_abelian(const FiniteGroup& group);

// One real orthogonal irrep per partition of n (2 <= n <= 6), partitions in
// reverse lexicographic order, basis = standard Young tableaux.
RepresentationSet young_orthogonal_irreps(int n);

// Throws CompletenessError when sum d^2 != |G| or two character vectors
// coincide, DomainError when the homomorphism check fails on `samples`
// pseudo-random pairs or a matrix is not unitary.
void validate_representations(const FiniteGroup& group, const RepresentationSet& set,
                              std::size_t samples = 100, unsigned long long seed = 1);

// Sum of rho(s) over the generators.
Eigen::MatrixXcd m_matrix(const Representation& rho, const std::vector<std::size_t>& generators);

// F[f](rho) = sum_g f(g) rho(g).
std::vector<Eigen::MatrixXcd> fourier_transform(const RepresentationSet& set,
                                                const Eigen::VectorXcd& f);
// F^-1[h](g) = (1/|G|) sum_rho d_rho Tr(rho(g^-1) h(rho)).
Eigen::VectorXcd inverse_fourier_transform(const FiniteGroup& group, const RepresentationSet& set,
                                           const std::vector<Eigen::MatrixXcd>& hats);

}  // namespace graphdiffuse
