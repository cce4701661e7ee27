#include "graphdiffuse/cayley.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "graphdiffuse/error.hpp"

namespace graphdiffuse {

namespace {

Eigen::MatrixXd realify(const Eigen::MatrixXcd& m, const char* what) {
  const double imag = m.imag().cwiseAbs().maxCoeff();
  const double scale = std::max(1.0, m.real().cwiseAbs().maxCoeff());
  if (imag > 1e-10 * scale) {
    std::ostringstream os;
    os << what << ": imaginary residue " << imag << " exceeds tolerance";
    throw NumericalError(os.str(), imag);
  }
  return m.real();
}

}  // namespace

Graph cayley_graph(const FiniteGroup& group, const GeneratorSet& s) {
  // g h^-1 = s  <=>  h = s^-1 g, and S is closed under inversion.
  std::set<std::pair<VertexId, VertexId>> edges;
  for (std::size_t g = 0; g < group.order(); ++g)
    for (std::size_t x : s.elements()) {
      const std::size_t h = group.multiply(x, g);
      edges.emplace(static_cast<VertexId>(std::min(g, h)), static_cast<VertexId>(std::max(g, h)));
    }
  std::vector<VertexId> ids(group.order());
  for (std::size_t g = 0; g < ids.size(); ++g) ids[g] = static_cast<VertexId>(g);
  return Graph(std::move(ids), {}, std::vector<std::pair<VertexId, VertexId>>(edges.begin(), edges.end()));
}

double eigenvalues_cayley_abelian(const GeneratorSet& s, const Representation& chi) {
  if (chi.degree != 1) throw DomainError("abelian eigenvalues need a degree-one character");
  cplx sum = 0.0;
  for (std::size_t x : s.elements()) sum += std::conj(chi.images.at(x)(0, 0));
  const cplx lambda = static_cast<double>(s.size()) - sum;
  if (std::abs(lambda.imag()) >= 1e-12)
    throw NumericalError("character eigenvalue is not real", std::abs(lambda.imag()));
  return lambda.real();
}

namespace {

// Columns: characters scaled by 1/sqrt|G|, so X X^* = I.
Eigen::MatrixXcd character_table(const FiniteGroup& group, const RepresentationSet& chars) {
  const auto order = static_cast<Eigen::Index>(group.order());
  Eigen::MatrixXcd x(order, order);
  const double scale = 1.0 / std::sqrt(static_cast<double>(order));
  for (Eigen::Index k = 0; k < order; ++k)
    for (Eigen::Index g = 0; g < order; ++g)
      x(g, k) = scale * chars.reps[static_cast<std::size_t>(k)].images[static_cast<std::size_t>(g)](0, 0);
  return x;
}

Eigen::MatrixXcd abelian_solve(const FiniteGroup& group, const GeneratorSet& s, double alpha0,
                               const Eigen::MatrixXcd& rhs) {
  if (!(alpha0 > 0.0)) throw DomainError("alpha0 must be positive");
  const RepresentationSet chars = characters_abelian(group);
  const Eigen::MatrixXcd x = character_table(group, chars);
  Eigen::VectorXcd inv(static_cast<Eigen::Index>(group.order()));
  for (std::size_t k = 0; k < group.order(); ++k)
    inv(static_cast<Eigen::Index>(k)) = 1.0 / (eigenvalues_cayley_abelian(s, chars.reps[k]) + alpha0);
  return x * (inv.asDiagonal() * (x.adjoint() * rhs));
}

}  // namespace

Eigen::VectorXd green_abelian(const FiniteGroup& group, const GeneratorSet& s, double alpha0,
                              const Eigen::VectorXd& f) {
  if (static_cast<std::size_t>(f.size()) != group.order()) throw DomainError("source length mismatch");
  const Eigen::MatrixXcd u = abelian_solve(group, s, alpha0, f.cast<cplx>());
  return realify(u, "abelian Green's function");
}

GreensMatrix green_abelian_matrix(const FiniteGroup& group, const GeneratorSet& s, double alpha0) {
  const auto order = static_cast<Eigen::Index>(group.order());
  const Eigen::MatrixXcd g = abelian_solve(group, s, alpha0, Eigen::MatrixXcd::Identity(order, order));
  Eigen::MatrixXd re = realify(g, "abelian Green's function");
  re = (0.5 * (re + re.transpose())).eval();
  return GreensMatrix(std::move(re), alpha0, Provenance::closed_form("cayley-abelian"));
}

std::vector<IrrepEigenfunction> irrep_eigenfunctions(const FiniteGroup& group, const GeneratorSet& s,
                                                     const RepresentationSet& reps, double alpha0) {
  const auto order = static_cast<Eigen::Index>(group.order());
  const double shift = static_cast<double>(s.size()) + alpha0;
  std::vector<IrrepEigenfunction> out;
  for (std::size_t i = 0; i < reps.reps.size(); ++i) {
    const Representation& rho = reps.reps[i];
    Eigen::MatrixXcd m = m_matrix(rho, s.elements());
    m = (0.5 * (m + m.adjoint())).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
    const double scale = static_cast<double>(rho.degree) / static_cast<double>(order);
    for (std::size_t j = 0; j < rho.degree; ++j) {
      const Eigen::VectorXcd v = es.eigenvectors().col(static_cast<Eigen::Index>(j));
      // Inverse transform of the block that is v in column k and zero elsewhere:
      // u(g) = (d/|G|) (rho(g^-1) v)_k.
      std::vector<Eigen::VectorXcd> cols(rho.degree, Eigen::VectorXcd(order));
      for (Eigen::Index g = 0; g < order; ++g) {
        const Eigen::VectorXcd w = rho.images[group.inverse(static_cast<std::size_t>(g))] * v;
        for (std::size_t k = 0; k < rho.degree; ++k) cols[k](g) = scale * w(static_cast<Eigen::Index>(k));
      }
      for (std::size_t k = 0; k < rho.degree; ++k)
        out.push_back({i, j, k, shift - es.eigenvalues()(static_cast<Eigen::Index>(j)), std::move(cols[k])});
    }
  }
  return out;
}

GreensMatrix green_nonabelian(const FiniteGroup& group, const GeneratorSet& s,
                              const RepresentationSet& reps, double alpha0) {
  if (!(alpha0 > 0.0)) throw DomainError("alpha0 must be positive");
  if (reps.degree_square_sum() != group.order())
    throw CompletenessError("representation set incomplete: sum of squared degrees " +
                            std::to_string(reps.degree_square_sum()) + " != |G| = " +
                            std::to_string(group.order()));
  std::vector<IrrepEigenfunction> fns = irrep_eigenfunctions(group, s, reps, alpha0);
  std::stable_sort(fns.begin(), fns.end(), [](const auto& a, const auto& b) {
    return a.eigenvalue < b.eigenvalue;
  });

  const auto order = static_cast<Eigen::Index>(group.order());
  Eigen::MatrixXcd phi(order, order);
  Eigen::VectorXd inv_lambda(order);
  Eigen::Index filled = 0;
  const double group_tol = 1e-9 * (static_cast<double>(s.size()) + alpha0);

  for (std::size_t start = 0; start < fns.size();) {
    std::size_t stop = start + 1;
    while (stop < fns.size() && fns[stop].eigenvalue - fns[start].eigenvalue <= group_tol) ++stop;
    const Eigen::Index group_start = filled;
    for (std::size_t v = start; v < stop; ++v) {
      Eigen::VectorXcd u = fns[v].u;
      const double original = u.norm();
      // Modified Gram-Schmidt against the group so far, then one repeat pass.
      for (int pass = 0; pass < 2; ++pass)
        for (Eigen::Index c = group_start; c < filled; ++c) u -= phi.col(c).dot(u) * phi.col(c);
      const double residual = u.norm();
      if (!(residual > 1e-12 * original)) {
        std::ostringstream os;
        os << "eigenfunctions lose rank in the eigenvalue group lambda = " << fns[start].eigenvalue
           << " (" << (stop - start) << " vectors)";
        throw DegeneracyError(os.str());
      }
      if (filled >= order) throw CompletenessError("more eigenfunctions than group elements");
      phi.col(filled) = u / residual;
      inv_lambda(filled) = 1.0 / fns[v].eigenvalue;
      ++filled;
    }
    start = stop;
  }
  if (filled != order) throw CompletenessError("eigenfunctions do not span the group algebra");

  const Eigen::MatrixXcd g = phi * inv_lambda.cast<cplx>().asDiagonal() * phi.adjoint();
  Eigen::MatrixXd re = realify(g, "non-abelian Green's function");
  re = (0.5 * (re + re.transpose())).eval();
  return GreensMatrix(std::move(re), alpha0, Provenance::closed_form("cayley-irreps"));
}

}  // namespace graphdiffuse
