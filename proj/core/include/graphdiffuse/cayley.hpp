#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "graphdiffuse/born.hpp"
#include "graphdiffuse/graph.hpp"
#include "graphdiffuse/group.hpp"
#include "graphdiffuse/representation.hpp"

namespace graphdiffuse {

// Vertex per element, edge {g, h} iff g h^-1 in S. No boundary.
Graph cayley_graph(const FiniteGroup& group, const GeneratorSet& s);

// |S| - sum_s conj(chi(s)).
double eigenvalues_cayley_abelian(const GeneratorSet& s, const Representation& chi);

// (L + alpha0 I)^-1 f through the character basis.
Eigen::VectorXd green_abelian(const FiniteGroup& group, const GeneratorSet& s, double alpha0,
                              const Eigen::VectorXd& f);
GreensMatrix green_abelian_matrix(const FiniteGroup& group, const GeneratorSet& s, double alpha0);

// One Fourier-side eigenfunction mapped back to the group, before orthonormalization.
struct IrrepEigenfunction {
  std::size_t irrep = 0;
  std::size_t j = 0;  // eigenvector of M(rho)
  std::size_t k = 0;  // column slot
  double eigenvalue = 0.0;  // |S| + alpha0 - nu_j
  Eigen::VectorXcd u;
};

std::vector<IrrepEigenfunction> irrep_eigenfunctions(const FiniteGroup& group,
                                                     const GeneratorSet& s,
                                                     const RepresentationSet& reps, double alpha0);

GreensMatrix green_nonabelian(const FiniteGroup& group, const GeneratorSet& s,
                              const RepresentationSet& reps, double alpha0);

}  // namespace graphdiffuse
