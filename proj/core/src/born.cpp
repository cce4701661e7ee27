#include "graphdiffuse/born.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Cholesky>
#include <Eigen/LU>

#include "graphdiffuse/error.hpp"
#include "graphdiffuse/linalg.hpp"

namespace graphdiffuse {

std::string Provenance::describe() const {
  switch (kind) {
    case Kind::DirectInverse:
      return "direct-inverse";
    case Kind::BornSeries:
      return "born-series(" + std::to_string(terms) + ")";
    case Kind::ClosedForm:
      return "closed-form(" + family + ")";
  }
  return "?";
}

GreensMatrix::GreensMatrix(Eigen::MatrixXd entries, double alpha0, Provenance provenance)
    : entries_(std::move(entries)), alpha0_(alpha0), provenance_(std::move(provenance)) {
  if (entries_.rows() != entries_.cols()) throw DomainError("Green's matrix must be square");
}

namespace {

// Smallest k such that the leading k x k block has no Cholesky factor; the
// factorization proceeds row by row, so failure is monotone in k.
std::size_t first_failing_minor(const Eigen::MatrixXd& h) {
  Eigen::Index lo = 1, hi = h.rows();
  while (lo < hi) {
    const Eigen::Index mid = lo + (hi - lo) / 2;
    Eigen::LLT<Eigen::MatrixXd> llt(h.topLeftCorner(mid, mid));
    if (llt.info() == Eigen::Success) lo = mid + 1;
    else hi = mid;
  }
  return static_cast<std::size_t>(lo - 1);
}

void check_eta(const GreensMatrix& g0, const AbsorptionProfile& eta) {
  if (!eta.empty() && eta.max_index() >= g0.size())
    throw DomainError("absorption support lies outside the Green's matrix");
}

// out = -alpha0 * G0 * diag(eta) * in, touching only the support columns.
template <class Dense>
Dense apply_step(const GreensMatrix& g0, const AbsorptionProfile& eta, double alpha0, const Dense& in) {
  Dense out = Dense::Zero(in.rows(), in.cols());
  for (const auto& [s, v] : eta.values()) {
    const auto k = static_cast<Eigen::Index>(s);
    out.noalias() += (-alpha0 * v) * g0.entries().col(k) * in.row(k);
  }
  return out;
}

}  // namespace

GreensMatrix greens_direct(const DiffusionOperator& h) {
  const Eigen::MatrixXd& m = h.matrix();
  const auto size = m.rows();
  const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(size, size);
  Eigen::MatrixXd g;
  if (h.is_symmetric()) {
    Eigen::LLT<Eigen::MatrixXd> llt(m);
    if (llt.info() != Eigen::Success) {
      const std::size_t pivot = first_failing_minor(m);
      throw FactorizationError("operator is not positive definite: Cholesky pivot " +
                                   std::to_string(pivot) + " is not positive",
                               pivot);
    }
    g = llt.solve(eye);
    g = (0.5 * (g + g.transpose())).eval();
  } else {
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(m);
    const Eigen::VectorXd diag = lu.matrixLU().diagonal().cwiseAbs();
    Eigen::Index pivot = 0;
    const double smallest = diag.size() ? diag.minCoeff(&pivot) : 1.0;
    if (!(smallest > std::numeric_limits<double>::epsilon() * diag.maxCoeff()))
      throw FactorizationError("operator is numerically singular at LU pivot " +
                                   std::to_string(pivot),
                               static_cast<std::size_t>(pivot));
    g = lu.solve(eye);
  }
  const double residual = inf_norm(g * m - eye);
  if (!(residual < 1e-10 * static_cast<double>(size)))
    throw NumericalError("inverse residual too large", residual);
  return GreensMatrix(std::move(g), h.alpha0(), Provenance::direct());
}

std::vector<Eigen::VectorXd> born_iterates(const GreensMatrix& g0, const AbsorptionProfile& eta,
                                           double alpha0, int n_terms, const Eigen::VectorXd& f) {
  if (n_terms < 0) throw DomainError("number of Born terms must be nonnegative");
  if (static_cast<std::size_t>(f.size()) != g0.size()) throw DomainError("source length mismatch");
  check_eta(g0, eta);
  std::vector<Eigen::VectorXd> out;
  out.reserve(static_cast<std::size_t>(n_terms) + 1);
  Eigen::VectorXd term = g0.entries() * f;
  out.push_back(term);
  for (int m = 1; m <= n_terms; ++m) {
    term = apply_step(g0, eta, alpha0, term);
    out.push_back(out.back() + term);
  }
  return out;
}

Eigen::VectorXd born_solve(const GreensMatrix& g0, const AbsorptionProfile& eta, double alpha0,
                           int n_terms, const Eigen::VectorXd& f) {
  if (n_terms < 0) throw DomainError("number of Born terms must be nonnegative");
  if (static_cast<std::size_t>(f.size()) != g0.size()) throw DomainError("source length mismatch");
  check_eta(g0, eta);
  Eigen::VectorXd term = g0.entries() * f;
  Eigen::VectorXd sum = term;
  for (int m = 1; m <= n_terms; ++m) {
    term = apply_step(g0, eta, alpha0, term);
    sum += term;
  }
  return sum;
}

GreensMatrix born_operator(const GreensMatrix& g0, const AbsorptionProfile& eta, double alpha0,
                           int n_terms) {
  if (n_terms < 0) throw DomainError("number of Born terms must be nonnegative");
  check_eta(g0, eta);
  Eigen::MatrixXd term = g0.entries();
  Eigen::MatrixXd sum = term;
  for (int m = 1; m <= n_terms; ++m) {
    term = apply_step(g0, eta, alpha0, term);
    sum += term;
  }
  return GreensMatrix(std::move(sum), alpha0, Provenance::born(n_terms));
}

ConvergenceReport convergence_report(const GreensMatrix& g0, const AbsorptionProfile& eta,
                                     double alpha0) {
  check_eta(g0, eta);
  ConvergenceReport r;
  if (eta.empty()) return r;
  const double eta_max = eta.eta_max();
  r.global_margin = alpha0 * spectral_norm(g0.entries()) * eta_max;
  r.restricted_margin = alpha0 * eta_max * spectral_norm(principal_submatrix(g0.entries(), eta.support()));
  r.converges_global = r.global_margin < 1.0;
  r.converges_restricted = r.restricted_margin < 1.0;
  return r;
}

NormCutoffs norm_cutoffs(const GreensMatrix& g0, const std::vector<std::size_t>& support,
                         double alpha0) {
  const double inf = std::numeric_limits<double>::infinity();
  if (support.empty()) return {inf, inf};
  return {1.0 / (alpha0 * spectral_norm(g0.entries())),
          1.0 / (alpha0 * spectral_norm(principal_submatrix(g0.entries(), support)))};
}

double truncation_error_bound(const GreensMatrix& g0, const AbsorptionProfile& eta, double alpha0,
                              int n_terms) {
  if (n_terms < 0) throw DomainError("number of Born terms must be nonnegative");
  const ConvergenceReport rep = convergence_report(g0, eta, alpha0);
  const double q = rep.restricted_margin;
  if (!(q < 1.0)) {
    std::ostringstream os;
    os << "truncation bound undefined: restricted margin " << q << " >= 1";
    throw BoundUndefinedError(os.str());
  }
  const double g_norm = spectral_norm(g0.entries());
  return g_norm * g_norm * std::pow(q, n_terms) / (1.0 - q);
}

bool born_error_decays(const DiffusionOperator& h0, const GreensMatrix& g0,
                       const AbsorptionProfile& eta, const Eigen::VectorXd& f, int n_max) {
  if (n_max < 2) throw DomainError("decay test needs at least two terms");
  const Eigen::VectorXd u = solve_direct(assemble_perturbed(h0, eta), f);
  const auto it = born_iterates(g0, eta, h0.alpha0(), n_max, f);
  const double e_half = (it[static_cast<std::size_t>(n_max / 2)] - u).lpNorm<Eigen::Infinity>();
  const double e_full = (it.back() - u).lpNorm<Eigen::Infinity>();
  const double floor = 1e-12 * std::max(1.0, u.lpNorm<Eigen::Infinity>());
  return e_full < e_half || e_full <= floor;
}

double empirical_cutoff(const DiffusionOperator& h0, const GreensMatrix& g0,
                        const AbsorptionProfile& shape, const Eigen::VectorXd& f,
                        const CutoffOptions& options) {
  if (shape.empty()) return std::numeric_limits<double>::infinity();
  const AbsorptionProfile unit = shape.scaled(1.0 / shape.eta_max());
  const auto decays = [&](double eta_max) {
    return born_error_decays(h0, g0, unit.scaled(eta_max), f, options.n_max);
  };

  double lo = 0.0;
  double hi = 2.0 * norm_cutoffs(g0, unit.support(), h0.alpha0()).restricted;
  int doublings = 0;
  while (decays(hi)) {
    lo = hi;
    hi *= 2.0;
    if (++doublings > 60) return std::numeric_limits<double>::infinity();
  }
  while (hi - lo > options.tolerance) {
    const double mid = 0.5 * (lo + hi);
    if (decays(mid)) lo = mid;
    else hi = mid;
  }
  return lo;
}

}  // namespace graphdiffuse
