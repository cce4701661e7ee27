#include "experiments.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "graphdiffuse/absorbers.hpp"
#include "graphdiffuse/born.hpp"
#include "graphdiffuse/cayley.hpp"
#include "graphdiffuse/closed_form.hpp"
#include "graphdiffuse/error.hpp"
#include "graphdiffuse/families.hpp"
#include "graphdiffuse/linalg.hpp"
#include "graphdiffuse/random.hpp"

namespace graphdiffuse::experiments {

using nlohmann::json;

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string render_csv(const std::string& subcommand, const RunResult& result, std::uint64_t seed) {
  std::ostringstream out;
  out << "# graphdiffuse " << kToolVersion << ' ' << subcommand << '\n';
  out << "# config: " << result.config.dump() << '\n';
  out << "# seed: " << seed << '\n';
  const auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t k = 0; k < cells.size(); ++k) out << (k ? "," : "") << cells[k];
    out << '\n';
  };
  line(result.table.columns);
  for (const auto& row : result.table.rows) line(row);
  return out.str();
}

void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& body) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

AbsorptionProfile random_profile(std::size_t interior, std::size_t count, double eta_max,
                                 std::mt19937_64& engine) {
  std::map<std::size_t, double> v;
  for (std::size_t i : sample_without_replacement(engine, interior, count)) v[i] = 0.5 + 0.5 * uniform01(engine);
  const AbsorptionProfile p(v);
  if (p.empty()) return p;
  return p.scaled(eta_max / p.eta_max());
}

namespace {

json with_defaults(json defaults, const json& config) {
  if (config.is_null()) return defaults;
  if (!config.is_object()) throw DomainError("configuration must be a JSON object");
  for (const auto& [key, value] : config.items()) defaults[key] = value;
  return defaults;
}

std::string family_label(const FamilySpec& s) {
  std::string out = s.family + " " + (s.family == "complete" ? "d=" : "n=") + std::to_string(s.size) +
                    " alpha0=" + format_number(s.alpha0);
  out += s.dirichlet ? " dirichlet" : " t=" + format_number(s.t);
  return out;
}

// Born instance shared by born-sweep and cutoff.
struct BornSetup {
  FamilySpec spec;
  Graph graph;
  DiffusionOperator h0;
  GreensMatrix g0;
  AbsorptionProfile shape;  // max weight 1
  Eigen::VectorXd f;
};

json born_defaults() {
  return {{"family", {{"family", "path"}, {"n", 62}, {"alpha0", 1.0}, {"t", 0.5}}},
          {"n_max", 40}};
}

BornSetup make_born_setup(const json& cfg, std::uint64_t seed) {
  const FamilySpec spec = FamilySpec::from_json(cfg.at("family"));
  if (!spec.is_finite()) throw DomainError("Born experiments need a finite family");
  Graph g = spec.graph();
  DiffusionOperator h0 = assemble_h0(g, spec.alpha0, spec.boundary_condition());
  GreensMatrix g0 = closed_form_greens(spec);
  std::mt19937_64 engine(seed);
  AbsorptionProfile shape = random_profile(g.interior_count(), g.vertex_count() / 4, 1.0, engine);
  // Unit source on the first boundary vertex (the left end of a path), else vertex 0.
  Eigen::VectorXd f = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(g.vertex_count()));
  f(static_cast<Eigen::Index>(g.boundary_count() > 0 ? g.interior_count() : 0)) = 1.0;
  return {spec, std::move(g), std::move(h0), std::move(g0), std::move(shape), std::move(f)};
}

}  // namespace

RunResult run_eigvals(const json& config, const RunOptions& options) {
  RunResult res;
  res.config = with_defaults({{"family", {{"family", "path"}, {"n", 64}, {"alpha0", 1.0}, {"bc", "neumann"}}},
                              {"alpha_min", 1e-6},
                              {"alpha_max", 1.0},
                              {"points", 31}},
                             config);
  const FamilySpec spec = FamilySpec::from_json(res.config.at("family"));
  if (spec.dirichlet || spec.t != 0.0) throw DomainError("eigvals needs a Neumann instance");
  const Graph g = spec.graph();
  if (!g.is_connected()) throw DomainError("graph is disconnected");
  const double lo = res.config.at("alpha_min").get<double>(), hi = res.config.at("alpha_max").get<double>();
  const int points = res.config.at("points").get<int>();
  if (!(lo > 0.0) || !(hi >= lo) || points < 1) throw DomainError("invalid alpha0 grid");
  const double slope = neumann_small_alpha_slope(g);

  std::vector<std::array<double, 3>> rows(static_cast<std::size_t>(points));
  parallel_for(rows.size(), options.workers, [&](std::size_t k) {
    const double frac = points == 1 ? 0.0 : static_cast<double>(k) / (points - 1);
    const double a = lo * std::pow(hi / lo, frac);
    rows[k] = {a, min_eigenvalue(assemble_h0(g, a, BoundaryCondition::neumann()).matrix()), a * slope};
  });

  res.table.columns = {"alpha0", "lambda_min", "bound"};
  double worst = 0.0;
  for (const auto& [a, lambda, bound] : rows) {
    res.table.rows.push_back({format_number(a), format_number(lambda), format_number(bound)});
    // The bound is the Rayleigh quotient of the constant vector, so it can only sit above.
    if (lambda > bound * (1.0 + 1e-10)) res.passed = false;
    if (a <= 1e-3) worst = std::max(worst, std::abs(lambda / bound - 1.0));
  }
  if (worst > 0.01) res.passed = false;
  res.summary = "slope " + format_number(slope) + ", worst relative gap below alpha0=1e-3: " + format_number(worst);
  return res;
}

RunResult run_born_sweep(const json& config, const RunOptions& options) {
  RunResult res;
  json defaults = born_defaults();
  defaults["eta_step"] = 0.026;
  defaults["curves"] = 16;
  res.config = with_defaults(defaults, config);
  const BornSetup s = make_born_setup(res.config, options.seed);
  const int n_max = res.config.at("n_max").get<int>();
  const double step = res.config.at("eta_step").get<double>();
  const int curves = res.config.at("curves").get<int>();
  if (n_max < 0 || curves < 1 || !(step > 0.0)) throw DomainError("invalid sweep grid");

  struct Curve {
    double eta_max;
    ConvergenceReport report;
    std::vector<double> errors;
  };
  std::vector<Curve> out(static_cast<std::size_t>(curves));
  parallel_for(out.size(), options.workers, [&](std::size_t k) {
    const double eta_max = step * static_cast<double>(k + 1);
    const AbsorptionProfile eta = s.shape.scaled(eta_max);
    const Eigen::VectorXd u = solve_direct(assemble_perturbed(s.h0, eta), s.f);
    Curve c{eta_max, convergence_report(s.g0, eta, s.spec.alpha0), {}};
    for (const auto& un : born_iterates(s.g0, eta, s.spec.alpha0, n_max, s.f))
      c.errors.push_back((un - u).lpNorm<Eigen::Infinity>());
    out[k] = std::move(c);
  });

  res.table.columns = {"eta_max", "N", "error_inf", "global_margin", "restricted_margin"};
  for (const auto& c : out)
    for (std::size_t n = 0; n < c.errors.size(); ++n)
      res.table.rows.push_back({format_number(c.eta_max), std::to_string(n), format_number(c.errors[n]),
                                format_number(c.report.global_margin), format_number(c.report.restricted_margin)});
  res.summary = family_label(s.spec) + ", support " + std::to_string(s.shape.support().size()) + " vertices";
  return res;
}

RunResult run_cutoff(const json& config, const RunOptions& options) {
  RunResult res;
  json defaults = born_defaults();
  defaults["tolerance"] = 1e-3;
  res.config = with_defaults(defaults, config);
  const BornSetup s = make_born_setup(res.config, options.seed);
  CutoffOptions opts;
  opts.n_max = res.config.at("n_max").get<int>();
  opts.tolerance = res.config.at("tolerance").get<double>();
  const double empirical = empirical_cutoff(s.h0, s.g0, s.shape, s.f, opts);
  const NormCutoffs bounds = norm_cutoffs(s.g0, s.shape.support(), s.spec.alpha0);
  res.table.columns = {"quantity", "eta_max"};
  res.table.rows = {{"empirical", format_number(empirical)},
                    {"restricted_bound", format_number(bounds.restricted)},
                    {"global_bound", format_number(bounds.global)}};
  res.passed = bounds.global <= bounds.restricted && bounds.restricted <= empirical;
  res.summary = family_label(s.spec) + (res.passed ? ": ordering holds" : ": ordering violated");
  return res;
}

RunResult run_catalog_check(const json& config, const RunOptions& options) {
  RunResult res;
  const json families = json::array({
      {{"family", "path"}, {"n", 8}, {"alpha0", 0.5}, {"t", 0.0}},
      {{"family", "path"}, {"n", 8}, {"alpha0", 0.5}, {"t", 0.5}},
      {{"family", "path"}, {"n", 8}, {"alpha0", 2.0}, {"t", 0.0}},
      {{"family", "path"}, {"n", 8}, {"alpha0", 2.0}, {"t", 0.5}},
      {{"family", "path"}, {"n", 8}, {"alpha0", 0.5}, {"bc", "dirichlet"}},
      {{"family", "loop"}, {"n", 4}, {"alpha0", 0.5}},
      {{"family", "mobius"}, {"n", 5}, {"alpha0", 0.5}},
      {{"family", "complete"}, {"d", 10}, {"alpha0", 0.5}, {"t", 1.0}},
  });
  res.config = with_defaults({{"families", families}, {"tolerance", 1e-10}}, config);
  const double tol = res.config.at("tolerance").get<double>();
  std::vector<FamilySpec> specs;
  for (const auto& j : res.config.at("families")) specs.push_back(FamilySpec::from_json(j));

  std::vector<double> dev(specs.size());
  parallel_for(specs.size(), options.workers, [&](std::size_t k) {
    const FamilySpec& spec = specs[k];
    const GreensMatrix direct = greens_direct(assemble_h0(spec.graph(), spec.alpha0, spec.boundary_condition()));
    dev[k] = (closed_form_greens(spec).entries() - direct.entries()).cwiseAbs().maxCoeff();
  });

  res.table.columns = {"family", "max_deviation", "passed"};
  for (std::size_t k = 0; k < specs.size(); ++k) {
    const bool ok = dev[k] < tol;
    res.passed = res.passed && ok;
    res.table.rows.push_back({family_label(specs[k]), format_number(dev[k]), ok ? "1" : "0"});
  }
  res.summary = std::to_string(specs.size()) + " instances, " + (res.passed ? "all within tolerance" : "FAILURES");
  return res;
}

RunResult run_permutohedron(const json& config, const RunOptions&) {
  RunResult res;
  res.config = with_defaults({{"n", 4}, {"alpha0", 0.1}, {"loop_size", 10}}, config);
  const int n = res.config.at("n").get<int>();
  const double alpha0 = res.config.at("alpha0").get<double>();
  if (!(alpha0 > 0.0)) throw DomainError("alpha0 must be positive");

  const FiniteGroup sn = FiniteGroup::symmetric(n);
  const RepresentationSet irreps = young_orthogonal_irreps(n);
  validate_representations(sn, irreps);
  const GeneratorSet s = GeneratorSet::adjacent_transpositions(sn);
  const GreensMatrix g = green_nonabelian(sn, s, irreps, alpha0);
  const Eigen::MatrixXd dense =
      assemble_h0(cayley_graph(sn, s), alpha0, BoundaryCondition::neumann()).matrix().inverse();
  const double dev = (g.entries() - dense).cwiseAbs().maxCoeff();

  // Abelian sanity check on a loop built from characters.
  const int m = res.config.at("loop_size").get<int>();
  const FiniteGroup zm = FiniteGroup::cyclic_product({m});
  const GeneratorSet pm(zm, {zm.from_coordinates(std::vector<int>{1}), zm.from_coordinates(std::vector<int>{m - 1})});
  const Eigen::MatrixXd loop_dense =
      assemble_h0(cayley_graph(zm, pm), alpha0, BoundaryCondition::neumann()).matrix().inverse();
  const double loop_dev = (green_abelian_matrix(zm, pm, alpha0).entries() - loop_dense).cwiseAbs().maxCoeff();

  res.table.columns = {"i", "j", "green"};
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      res.table.rows.push_back({std::to_string(i), std::to_string(j), format_number(g(i, j))});
  res.passed = dev < 1e-10 && loop_dev < 1e-10;
  res.summary = "sum of squared degrees " + std::to_string(irreps.degree_square_sum()) + ", max deviation " +
                format_number(dev) + ", loop deviation " + format_number(loop_dev);
  return res;
}

RunResult run_absorbers(const json& config, const RunOptions& options) {
  RunResult res;
  const std::string geometry = config.is_object() ? config.value("geometry", std::string("1d")) : "1d";
  json defaults;
  if (geometry == "1d")
    defaults = {{"geometry", "1d"}, {"alpha0", 1e-3}, {"kappa", 100.0}, {"source", -10}, {"detector", -20},
                {"separations", {1, 2, 5, 10, 20, 40, 80, 160}}};
  else if (geometry == "2d")
    defaults = {{"geometry", "2d"}, {"alpha0", 1e-3}, {"kappa", 1e3}, {"source", 5}, {"detector", -5},
                {"separations", {1, 2, 4, 8, 16, 32}}};
  else
    throw DomainError("geometry must be 1d or 2d");
  res.config = with_defaults(defaults, config);
  const double alpha0 = res.config.at("alpha0").get<double>(), kappa = res.config.at("kappa").get<double>();
  const auto src = res.config.at("source").get<std::int64_t>(), det = res.config.at("detector").get<std::int64_t>();
  const auto seps = res.config.at("separations").get<std::vector<std::int64_t>>();

  struct Row {
    TwoAbsorberValue both;
    double sum;
  };
  std::vector<Row> rows(seps.size());
  if (geometry == "1d") {
    const auto kernel = infinite_path_kernel(alpha0);
    parallel_for(seps.size(), options.workers, [&](std::size_t k) {
      const TwoAbsorberValue v = two_absorber_infinite_path(alpha0, kappa, 0, seps[k], src, det);
      const double s1 = single_absorber_scattered<std::int64_t>(kernel, 0, kappa, alpha0, src, det).value;
      const double s2 = single_absorber_scattered<std::int64_t>(kernel, seps[k], kappa, alpha0, src, det).value;
      rows[k] = {v, s1 + s2};
    });
  } else {
    const LatticeGreenCache cache(alpha0);
    const auto kernel = lattice2d_kernel(cache);
    const LatticePoint s{src, 0}, d{det, 0};
    parallel_for(seps.size(), options.workers, [&](std::size_t k) {
      const TwoAbsorberValue v = two_absorber_lattice2d(alpha0, kappa, 0, seps[k], src, det, cache);
      const double s1 = single_absorber_scattered<LatticePoint>(kernel, {0, 0}, kappa, alpha0, s, d).value;
      const double s2 = single_absorber_scattered<LatticePoint>(kernel, {0, seps[k]}, kappa, alpha0, s, d).value;
      rows[k] = {v, s1 + s2};
    });
  }

  res.table.columns = {"separation", "scattered", "noninteracting_sum", "residual", "error_estimate",
                       "in_series_region"};
  double worst_error = 0.0;
  for (std::size_t k = 0; k < seps.size(); ++k) {
    const Row& r = rows[k];
    res.table.rows.push_back({std::to_string(seps[k]), format_number(r.both.value), format_number(r.sum),
                              format_number(std::abs(r.both.value - r.sum)), format_number(r.both.abs_error),
                              r.both.in_series_region ? "1" : "0"});
    if (!std::isfinite(r.both.value)) res.passed = false;
    worst_error = std::max(worst_error, r.both.abs_error);
  }
  if (worst_error >= 1e-8) res.passed = false;
  res.summary = geometry + " sweep over " + std::to_string(seps.size()) + " separations, worst error estimate " +
                format_number(worst_error);
  return res;
}

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names{"eigvals", "born-sweep", "cutoff", "catalog-check", "permutohedron",
                                              "absorbers"};
  return names;
}

RunResult run(const std::string& subcommand, const json& config, const RunOptions& options) {
  if (subcommand == "eigvals") return run_eigvals(config, options);
  if (subcommand == "born-sweep") return run_born_sweep(config, options);
  if (subcommand == "cutoff") return run_cutoff(config, options);
  if (subcommand == "catalog-check") return run_catalog_check(config, options);
  if (subcommand == "permutohedron") return run_permutohedron(config, options);
  if (subcommand == "absorbers") return run_absorbers(config, options);
  throw DomainError("unknown subcommand '" + subcommand + "'");
}

}  // namespace graphdiffuse::experiments
