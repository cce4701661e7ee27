#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "graphdiffuse/born.hpp"
#include "graphdiffuse/closed_form.hpp"
#include "graphdiffuse/error.hpp"
#include "graphdiffuse/families.hpp"
#include "graphdiffuse/linalg.hpp"
#include "graphdiffuse/random.hpp"
#include "oracles.hpp"

using namespace graphdiffuse;

namespace {

struct Instance {
  Graph graph;
  DiffusionOperator h0;
  GreensMatrix g0;
};

Instance make(const Graph& g, double alpha0, const BoundaryCondition& bc) {
  DiffusionOperator h0 = assemble_h0(g, alpha0, bc);
  GreensMatrix g0 = greens_direct(h0);
  return {g, std::move(h0), std::move(g0)};
}

AbsorptionProfile random_profile(std::size_t n, std::size_t k, double eta_max, std::mt19937_64& engine) {
  std::map<std::size_t, double> v;
  for (std::size_t i : sample_without_replacement(engine, n, k)) v[i] = 0.5 + 0.5 * uniform01(engine);
  const AbsorptionProfile p(v);
  return p.scaled(eta_max / p.eta_max());
}

Eigen::VectorXd unit(std::size_t size, std::size_t at) {
  Eigen::VectorXd e = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(size));
  e(static_cast<Eigen::Index>(at)) = 1.0;
  return e;
}

}  // namespace

TEST(GreensDirect, ScalarSystem) {
  const GreensMatrix g = greens_direct(assemble_h0(Graph({0}, {}, {}), 2.0, BoundaryCondition::neumann()));
  ASSERT_EQ(g.size(), 1u);
  EXPECT_DOUBLE_EQ(g(0, 0), 0.5);
  EXPECT_EQ(g.provenance().kind, Provenance::Kind::DirectInverse);
}

TEST(GreensDirect, MatchesPathClosedForm) {
  const Instance in = make(path_graph(8), 0.5, BoundaryCondition::robin(0.5));
  const GreensMatrix cf = closed_form_greens(FamilySpec{"path", 8, 0.5, 0.5, false});
  EXPECT_LE(oracle::max_abs_diff(in.g0.entries(), cf.entries()), 1e-10);
}

TEST(GreensDirect, SymmetricWithSmallResidual) {
  std::mt19937_64 engine(1);
  const Instance in = make(random_connected_graph(80, 20, 0.05, engine), 0.3, BoundaryCondition::robin(0.2));
  EXPECT_TRUE(is_exactly_symmetric(in.g0.entries()));
  const auto m = in.h0.matrix().rows();
  EXPECT_LT(inf_norm(in.g0.entries() * in.h0.matrix() - Eigen::MatrixXd::Identity(m, m)), 1e-10 * m);
}

TEST(GreensDirect, ReproducesSolution) {
  std::mt19937_64 engine(2);
  const Instance in = make(random_connected_graph(30, 6, 0.1, engine), 0.7, BoundaryCondition::robin(1.0));
  Eigen::VectorXd f(36);
  for (Eigen::Index i = 0; i < 36; ++i) f(i) = uniform01(engine);
  const Eigen::VectorXd u = oracle::inverse(in.h0.matrix()) * f;
  for (Eigen::Index y = 0; y < 36; ++y) EXPECT_NEAR(in.g0.entries().row(y).dot(f), u(y), 1e-12);
}

TEST(GreensDirect, DirichletUsesGeneralInverse) {
  const Instance in = make(path_graph(8), 0.5, BoundaryCondition::dirichlet());
  EXPECT_LE(oracle::max_abs_diff(in.g0.entries(), oracle::inverse(in.h0.matrix())), 1e-12);
}

TEST(GreensDirect, IndefiniteNamesPivot) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(4, 4);
  m(2, 2) = -1.0;
  const DiffusionOperator h(m, 4, 1.0, BoundaryCondition::neumann());
  try {
    greens_direct(h);
    FAIL() << "expected a factorization error";
  } catch (const FactorizationError& e) {
    EXPECT_EQ(e.pivot(), 2u);
  }
}

TEST(GreensDirect, SingularDirichletNamesPivot) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(3, 3);
  m(0, 1) = 2.0;
  m(1, 1) = 0.0;
  m(2, 2) = 0.0;
  const DiffusionOperator h(m, 2, 1.0, BoundaryCondition::dirichlet());
  EXPECT_THROW(greens_direct(h), FactorizationError);
}

TEST(BornSolve, ZeroPerturbation) {
  const Instance in = make(path_graph(10), 1.0, BoundaryCondition::robin(0.5));
  const Eigen::VectorXd f = unit(12, 10);
  const Eigen::VectorXd base = in.g0.entries() * f;
  for (int n : {0, 1, 7}) EXPECT_EQ(born_solve(in.g0, AbsorptionProfile{}, 1.0, n, f), base);
}

TEST(BornSolve, TwoTermExpansion) {
  const Instance in = make(path_graph(10), 1.0, BoundaryCondition::robin(0.5));
  const AbsorptionProfile eta({{2, 0.3}, {5, 0.9}});
  const Eigen::VectorXd f = unit(12, 10);
  Eigen::MatrixXd diag = Eigen::MatrixXd::Zero(12, 12);
  diag(2, 2) = 0.3;
  diag(5, 5) = 0.9;
  const Eigen::MatrixXd& g = in.g0.entries();
  const Eigen::VectorXd expected = g * f - 1.0 * g * diag * g * f;
  EXPECT_LE((born_solve(in.g0, eta, 1.0, 1, f) - expected).lpNorm<Eigen::Infinity>(), 1e-15);
}

TEST(BornSolve, IteratesAgreeWithSolve) {
  std::mt19937_64 engine(4);
  const Instance in = make(loop_graph(7), 1.0, BoundaryCondition::neumann());
  const AbsorptionProfile eta = random_profile(16, 4, 0.8, engine);
  const Eigen::VectorXd f = unit(16, 0);
  const auto it = born_iterates(in.g0, eta, 1.0, 12, f);
  for (int n = 0; n <= 12; ++n)
    EXPECT_LE((it[static_cast<std::size_t>(n)] - born_solve(in.g0, eta, 1.0, n, f)).norm(), 1e-14);
}

TEST(BornSolve, GeometricDecayBelowCutoff) {
  std::mt19937_64 engine(6);
  const Instance in = make(path_graph(62), 1.0, BoundaryCondition::robin(0.5));
  const AbsorptionProfile shape = random_profile(62, 15, 1.0, engine);
  const double restricted = norm_cutoffs(in.g0, shape.support(), 1.0).restricted;
  const AbsorptionProfile eta = shape.scaled(0.8 * restricted);
  const Eigen::VectorXd f = unit(64, 62);
  const Eigen::VectorXd u = solve_direct(assemble_perturbed(in.h0, eta), f);
  const auto it = born_iterates(in.g0, eta, 1.0, 40, f);
  for (std::size_t n = 3; n < 30; ++n)
    EXPECT_LT((it[n + 1] - u).lpNorm<Eigen::Infinity>(), (it[n] - u).lpNorm<Eigen::Infinity>());
}

TEST(BornOperator, EqualsSeriesDefinition) {
  const Instance in = make(path_graph(6), 0.8, BoundaryCondition::robin(0.3));
  const AbsorptionProfile eta({{1, 0.4}, {4, 0.2}});
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(8, 8);
  d(1, 1) = 0.4;
  d(4, 4) = 0.2;
  const Eigen::MatrixXd step = -0.8 * in.g0.entries() * d;
  Eigen::MatrixXd power = Eigen::MatrixXd::Identity(8, 8), sum = Eigen::MatrixXd::Zero(8, 8);
  for (int m = 0; m <= 5; ++m) {
    sum += power * in.g0.entries();
    power = power * step;
  }
  EXPECT_LE(oracle::max_abs_diff(born_operator(in.g0, eta, 0.8, 5).entries(), sum), 1e-14);
}

TEST(ConvergenceReport, ZeroPerturbation) {
  const Instance in = make(path_graph(4), 1.0, BoundaryCondition::robin(0.5));
  const ConvergenceReport r = convergence_report(in.g0, AbsorptionProfile{}, 1.0);
  EXPECT_EQ(r.global_margin, 0.0);
  EXPECT_EQ(r.restricted_margin, 0.0);
  EXPECT_TRUE(r.converges_global);
  EXPECT_TRUE(r.converges_restricted);
}

TEST(ConvergenceReport, RestrictedNeverExceedsGlobal) {
  std::mt19937_64 engine(8);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 10 + uniform_index(engine, 60);
    const Instance in = make(random_connected_graph(n, 5, 0.1, engine), 0.5, BoundaryCondition::robin(0.5));
    const AbsorptionProfile eta = random_profile(n, 1 + uniform_index(engine, n), 1.3, engine);
    const ConvergenceReport r = convergence_report(in.g0, eta, 0.5);
    EXPECT_LE(r.restricted_margin, r.global_margin * (1 + 1e-14));
  }
}

TEST(TruncationBound, ZeroPerturbation) {
  const Instance in = make(path_graph(4), 1.0, BoundaryCondition::robin(0.5));
  for (int n = 1; n < 5; ++n) EXPECT_EQ(truncation_error_bound(in.g0, AbsorptionProfile{}, 1.0, n), 0.0);
}

TEST(TruncationBound, GeometricRatio) {
  const Instance in = make(path_graph(8), 1.0, BoundaryCondition::robin(0.5));
  const AbsorptionProfile eta({{0, 0.5}, {3, 0.5}, {6, 0.25}});
  const double q = convergence_report(in.g0, eta, 1.0).restricted_margin;
  for (int n = 0; n < 10; ++n) {
    const double ratio = truncation_error_bound(in.g0, eta, 1.0, n + 1) / truncation_error_bound(in.g0, eta, 1.0, n);
    EXPECT_NEAR(ratio, q, 1e-14);
  }
}

TEST(TruncationBound, UndefinedOutsideRegion) {
  const Instance in = make(path_graph(8), 1.0, BoundaryCondition::robin(0.5));
  const AbsorptionProfile unit_eta = AbsorptionProfile::uniform({1, 2, 3}, 1.0);
  const double cutoff = norm_cutoffs(in.g0, unit_eta.support(), 1.0).restricted;
  EXPECT_THROW(truncation_error_bound(in.g0, unit_eta.scaled(cutoff * 1.01), 1.0, 3), BoundUndefinedError);
}

TEST(TruncationBound, DominatesMeasuredOperatorError) {
  std::mt19937_64 engine(10);
  const Instance in = make(path_graph(8), 1.0, BoundaryCondition::robin(0.5));
  for (double margin : {0.3, 0.6, 0.9}) {
    const AbsorptionProfile shape = random_profile(8, 3, 1.0, engine);
    const AbsorptionProfile eta = shape.scaled(margin * norm_cutoffs(in.g0, shape.support(), 1.0).restricted);
    const Eigen::MatrixXd b = oracle::inverse(assemble_perturbed(in.h0, eta).matrix());
    for (int n = 1; n <= 20; ++n) {
      const double measured = spectral_norm(b - born_operator(in.g0, eta, 1.0, n).entries());
      EXPECT_LE(measured, truncation_error_bound(in.g0, eta, 1.0, n) * (1 + 1e-12));
    }
  }
}

// ||u_N - H^-1 f||_inf <= bound ||f||_2 on catalog instances with margin < 0.9.
TEST(TruncationBound, OracleEquivalenceAcrossFamilies) {
  std::mt19937_64 engine(12);
  const std::vector<FamilySpec> specs{{"path", 30, 1.0, 0.5, false}, {"loop", 15, 0.5, 0.0, false},
                                      {"mobius", 15, 0.8, 0.0, false}, {"complete", 20, 0.3, 1.0, false}};
  for (const auto& spec : specs) {
    const Graph g = spec.graph();
    const DiffusionOperator h0 = assemble_h0(g, spec.alpha0, spec.boundary_condition());
    const GreensMatrix g0 = closed_form_greens(spec);
    const std::size_t n = g.interior_count();
    const AbsorptionProfile shape = random_profile(n, std::max<std::size_t>(1, n / 4), 1.0, engine);
    const AbsorptionProfile eta = shape.scaled(0.85 * norm_cutoffs(g0, shape.support(), spec.alpha0).restricted);
    Eigen::VectorXd f(static_cast<Eigen::Index>(g.vertex_count()));
    for (Eigen::Index i = 0; i < f.size(); ++i) f(i) = uniform01(engine) - 0.5;
    const Eigen::VectorXd u = oracle::inverse(assemble_perturbed(h0, eta).matrix()) * f;
    const auto it = born_iterates(g0, eta, spec.alpha0, 30, f);
    for (int n_terms = 0; n_terms <= 30; ++n_terms)
      EXPECT_LE((it[static_cast<std::size_t>(n_terms)] - u).lpNorm<Eigen::Infinity>(),
                truncation_error_bound(g0, eta, spec.alpha0, n_terms) * f.norm())
          << spec.family << " N=" << n_terms;
  }
}

TEST(BornOperator, SeriesInverseIdentity) {
  const Instance in = make(path_graph(12), 1.0, BoundaryCondition::robin(0.5));
  const AbsorptionProfile shape = AbsorptionProfile::uniform({2, 5, 9}, 1.0);
  const AbsorptionProfile eta = shape.scaled(0.6 * norm_cutoffs(in.g0, shape.support(), 1.0).restricted);
  const Eigen::MatrixXd h = assemble_perturbed(in.h0, eta).matrix();
  const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(14, 14);
  double previous = spectral_norm(born_operator(in.g0, eta, 1.0, 0).entries() * h - eye);
  for (int n = 1; n <= 15; ++n) {
    const double now = spectral_norm(born_operator(in.g0, eta, 1.0, n).entries() * h - eye);
    EXPECT_LT(now, previous);
    previous = now;
  }
  EXPECT_LT(previous, 1e-3);
}

TEST(EmpiricalCutoff, EmptySupportIsInfinite) {
  const Instance in = make(path_graph(6), 1.0, BoundaryCondition::robin(0.5));
  EXPECT_TRUE(std::isinf(empirical_cutoff(in.h0, in.g0, AbsorptionProfile{}, unit(8, 6))));
}

TEST(EmpiricalCutoff, OrderingAndDivergenceWitness) {
  std::mt19937_64 engine(42);
  for (const FamilySpec& spec : {FamilySpec{"path", 62, 1.0, 0.5, false}, FamilySpec{"loop", 31, 1.0, 0.0, false}}) {
    const Graph g = spec.graph();
    const DiffusionOperator h0 = assemble_h0(g, spec.alpha0, spec.boundary_condition());
    const GreensMatrix g0 = closed_form_greens(spec);
    const std::size_t n = g.interior_count();
    const AbsorptionProfile shape = random_profile(n, n / 4, 1.0, engine);
    const Eigen::VectorXd f = unit(g.vertex_count(), spec.family == "path" ? g.at_label("0") : 0);
    const double empirical = empirical_cutoff(h0, g0, shape, f);
    const NormCutoffs bounds = norm_cutoffs(g0, shape.support(), spec.alpha0);
    EXPECT_LE(bounds.global, bounds.restricted);
    EXPECT_LE(bounds.restricted, empirical) << spec.family;

    const AbsorptionProfile wild = shape.scaled(2.0 * empirical);
    const Eigen::VectorXd u = solve_direct(assemble_perturbed(h0, wild), f);
    const auto it = born_iterates(g0, wild, spec.alpha0, 30, f);
    EXPECT_GT((it[30] - u).lpNorm<Eigen::Infinity>(), (it[5] - u).lpNorm<Eigen::Infinity>());
  }
}
