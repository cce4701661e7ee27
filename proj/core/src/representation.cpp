#include "graphdiffuse/representation.hpp"

#include <cmath>
#include <deque>
#include <numeric>
#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "graphdiffuse/error.hpp"
#include "graphdiffuse/random.hpp"

namespace graphdiffuse {

std::size_t RepresentationSet::degree_square_sum() const {
  std::size_t s = 0;
  for (const auto& r : reps) s += r.degree * r.degree;
  return s;
}

RepresentationSet characters_abelian(const FiniteGroup& group) {
  if (group.kind() != FiniteGroup::Kind::CyclicProduct)
    throw DomainError("characters are built for products of cyclic groups");
  const auto& orders = group.cyclic_orders();
  RepresentationSet set;
  for (std::size_t k = 0; k < group.order(); ++k) {
    const std::vector<int> kk = group.coordinates(k);
    Representation chi;
    chi.degree = 1;
    std::ostringstream label;
    label << "chi(";
    for (std::size_t j = 0; j < kk.size(); ++j) label << (j ? "," : "") << kk[j];
    label << ")";
    chi.label = label.str();
    chi.images.reserve(group.order());
    for (std::size_t x = 0; x < group.order(); ++x) {
      const std::vector<int> xx = group.coordinates(x);
      // Reduce the phase numerator mod n_j first to keep the angle small.
      double phase = 0.0;
      for (std::size_t j = 0; j < kk.size(); ++j)
        phase += static_cast<double>((static_cast<long long>(kk[j]) * xx[j]) % orders[j]) / orders[j];
      Eigen::MatrixXcd m(1, 1);
      m(0, 0) = std::polar(1.0, 2.0 * M_PI * phase);
      chi.images.push_back(std::move(m));
    }
    set.reps.push_back(std::move(chi));
  }
  return set;
}

namespace {

std::vector<std::vector<int>> partitions(int n, int max_part) {
  if (n == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int first = std::min(n, max_part); first >= 1; --first)
    for (auto& rest : partitions(n - first, first)) {
      rest.insert(rest.begin(), first);
      out.push_back(std::move(rest));
    }
  return out;
}

// Standard tableaux of a shape, each stored as the row of every letter.
void fill_tableaux(const std::vector<int>& shape, std::vector<int>& lengths, std::vector<int>& rows,
                   std::vector<std::vector<int>>& out) {
  const auto n = static_cast<std::size_t>(std::accumulate(shape.begin(), shape.end(), 0));
  if (rows.size() == n) {
    out.push_back(rows);
    return;
  }
  for (std::size_t r = 0; r < shape.size(); ++r) {
    if (lengths[r] >= shape[r]) continue;
    if (r > 0 && lengths[r - 1] <= lengths[r]) continue;
    ++lengths[r];
    rows.push_back(static_cast<int>(r));
    fill_tableaux(shape, lengths, rows, out);
    rows.pop_back();
    --lengths[r];
  }
}

}  // namespace

RepresentationSet young_orthogonal_irreps(int n) {
  if (n < 2 || n > 6) throw UnsupportedError("Young orthogonal irreps are provided for 2 <= n <= 6");
  const FiniteGroup sn = FiniteGroup::symmetric(n);
  const GeneratorSet gens = GeneratorSet::adjacent_transpositions(sn);

  RepresentationSet set;
  for (const auto& shape : partitions(n, n)) {
    std::vector<std::vector<int>> tableaux;
    std::vector<int> lengths(shape.size(), 0), rows;
    fill_tableaux(shape, lengths, rows, tableaux);
    const auto d = static_cast<Eigen::Index>(tableaux.size());
    std::map<std::vector<int>, Eigen::Index> where;
    for (Eigen::Index a = 0; a < d; ++a) where[tableaux[static_cast<std::size_t>(a)]] = a;

    // Column of each letter follows from the order in which rows were filled.
    std::vector<std::vector<int>> cols(tableaux.size());
    for (std::size_t a = 0; a < tableaux.size(); ++a) {
      std::vector<int> len(shape.size(), 0);
      for (int r : tableaux[a]) cols[a].push_back(len[static_cast<std::size_t>(r)]++);
    }

    std::vector<Eigen::MatrixXcd> simple;
    for (int i = 0; i + 1 < n; ++i) {
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
      for (Eigen::Index a = 0; a < d; ++a) {
        const auto& row = tableaux[static_cast<std::size_t>(a)];
        const auto& col = cols[static_cast<std::size_t>(a)];
        const auto ui = static_cast<std::size_t>(i);
        if (row[ui] == row[ui + 1]) {
          m(a, a) = 1.0;
        } else if (col[ui] == col[ui + 1]) {
          m(a, a) = -1.0;
        } else {
          const double axial = (col[ui + 1] - row[ui + 1]) - (col[ui] - row[ui]);
          std::vector<int> swapped = row;
          std::swap(swapped[ui], swapped[ui + 1]);
          m(a, a) = 1.0 / axial;
          m(where.at(swapped), a) = std::sqrt(1.0 - 1.0 / (axial * axial));
        }
      }
      simple.push_back(std::move(m));
    }

    Representation rho;
    rho.degree = static_cast<std::size_t>(d);
    std::ostringstream label;
    label << "(";
    for (std::size_t k = 0; k < shape.size(); ++k) label << (k ? "," : "") << shape[k];
    label << ")";
    rho.label = label.str();
    rho.images.assign(sn.order(), Eigen::MatrixXcd());
    rho.images[FiniteGroup::identity()] = Eigen::MatrixXcd::Identity(d, d);
    std::deque<std::size_t> queue{FiniteGroup::identity()};
    while (!queue.empty()) {
      const std::size_t g = queue.front();
      queue.pop_front();
      for (std::size_t k = 0; k < gens.size(); ++k) {
        const std::size_t h = sn.multiply(gens.elements()[k], g);
        if (rho.images[h].size() != 0) continue;
        rho.images[h] = simple[k] * rho.images[g];
        queue.push_back(h);
      }
    }
    set.reps.push_back(std::move(rho));
  }
  return set;
}

void validate_representations(const FiniteGroup& group, const RepresentationSet& set,
                              std::size_t samples, unsigned long long seed) {
  const std::size_t total = set.degree_square_sum();
  if (total != group.order())
    throw CompletenessError("sum of squared degrees is " + std::to_string(total) + ", group order is " +
                            std::to_string(group.order()));
  for (const auto& rho : set.reps) {
    if (rho.images.size() != group.order())
      throw CompletenessError("representation " + rho.label + " does not cover the group");
    const auto d = static_cast<Eigen::Index>(rho.degree);
    for (const auto& m : rho.images) {
      if (m.rows() != d || m.cols() != d)
        throw DomainError("representation " + rho.label + " has a matrix of the wrong size");
      if (set.unitary && ((m * m.adjoint()) - Eigen::MatrixXcd::Identity(d, d)).norm() > 1e-10)
        throw DomainError("representation " + rho.label + " is not unitary");
    }
  }
  std::mt19937_64 engine(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t g = uniform_index(engine, group.order());
    const std::size_t h = uniform_index(engine, group.order());
    const std::size_t gh = group.multiply(g, h);
    for (const auto& rho : set.reps)
      if ((rho.images[gh] - rho.images[g] * rho.images[h]).norm() > 1e-10)
        throw DomainError("representation " + rho.label + " fails the homomorphism check");
  }
  // Inequivalence through distinct character vectors.
  std::vector<Eigen::VectorXcd> chars;
  for (const auto& rho : set.reps) {
    Eigen::VectorXcd c(static_cast<Eigen::Index>(group.order()));
    for (std::size_t g = 0; g < group.order(); ++g) c(static_cast<Eigen::Index>(g)) = rho.images[g].trace();
    for (const auto& other : chars)
      if ((other - c).norm() < 1e-8)
        throw CompletenessError("representation " + rho.label + " repeats an earlier character");
    chars.push_back(std::move(c));
  }
}

Eigen::MatrixXcd m_matrix(const Representation& rho, const std::vector<std::size_t>& generators) {
  const auto d = static_cast<Eigen::Index>(rho.degree);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  for (std::size_t s : generators) m += rho.images.at(s);
  return m;
}

std::vector<Eigen::MatrixXcd> fourier_transform(const RepresentationSet& set, const Eigen::VectorXcd& f) {
  std::vector<Eigen::MatrixXcd> out;
  out.reserve(set.reps.size());
  for (const auto& rho : set.reps) {
    if (rho.images.size() != static_cast<std::size_t>(f.size()))
      throw DomainError("function length does not match the group order");
    const auto d = static_cast<Eigen::Index>(rho.degree);
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(d, d);
    for (Eigen::Index g = 0; g < f.size(); ++g) acc += f(g) * rho.images[static_cast<std::size_t>(g)];
    out.push_back(std::move(acc));
  }
  return out;
}

Eigen::VectorXcd inverse_fourier_transform(const FiniteGroup& group, const RepresentationSet& set,
                                           const std::vector<Eigen::MatrixXcd>& hats) {
  if (hats.size() != set.reps.size()) throw DomainError("one transform block per representation expected");
  const auto order = static_cast<Eigen::Index>(group.order());
  Eigen::VectorXcd f = Eigen::VectorXcd::Zero(order);
  for (std::size_t r = 0; r < set.reps.size(); ++r) {
    const auto& rho = set.reps[r];
    const double d = static_cast<double>(rho.degree);
    for (Eigen::Index g = 0; g < order; ++g) {
      const auto& inv = rho.images[group.inverse(static_cast<std::size_t>(g))];
      f(g) += d * (inv * hats[r]).trace();
    }
  }
  return f / static_cast<double>(order);
}

}  // namespace graphdiffuse
