#include "graphdiffuse/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "graphdiffuse/error.hpp"

namespace graphdiffuse {

FiniteGroup FiniteGroup::cyclic_product(std::vector<int> orders) {
  FiniteGroup g;
  g.kind_ = Kind::CyclicProduct;
  g.order_ = 1;
  for (int n : orders) {
    if (n < 1) throw DomainError("cyclic orders must be positive");
    g.order_ *= static_cast<std::size_t>(n);
  }
  g.orders_ = std::move(orders);
  return g;
}

FiniteGroup FiniteGroup::symmetric(int n) {
  if (n < 1 || n > 8) throw UnsupportedError("symmetric group degree must be between 1 and 8");
  FiniteGroup g;
  g.kind_ = Kind::Symmetric;
  g.n_ = n;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    g.perms_.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  g.order_ = g.perms_.size();
  return g;
}

FiniteGroup FiniteGroup::from_json(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "cyclic_product") return cyclic_product(j.at("orders").get<std::vector<int>>());
  if (kind == "symmetric") return symmetric(j.at("n").get<int>());
  throw DomainError("unknown group kind '" + kind + "'");
}

bool FiniteGroup::is_abelian() const noexcept {
  return kind_ == Kind::CyclicProduct || n_ <= 2;
}

std::vector<int> FiniteGroup::coordinates(std::size_t element) const {
  if (kind_ != Kind::CyclicProduct) throw DomainError("coordinates exist only for cyclic products");
  if (element >= order_) throw DomainError("group element out of range");
  std::vector<int> c(orders_.size());
  for (std::size_t k = orders_.size(); k-- > 0;) {
    const auto n = static_cast<std::size_t>(orders_[k]);
    c[k] = static_cast<int>(element % n);
    element /= n;
  }
  return c;
}

std::size_t FiniteGroup::from_coordinates(std::span<const int> coords) const {
  if (kind_ != Kind::CyclicProduct) throw DomainError("coordinates exist only for cyclic products");
  if (coords.size() != orders_.size()) throw DomainError("coordinate count does not match the group");
  std::size_t idx = 0;
  for (std::size_t k = 0; k < orders_.size(); ++k) {
    const int n = orders_[k];
    idx = idx * static_cast<std::size_t>(n) + static_cast<std::size_t>(((coords[k] % n) + n) % n);
  }
  return idx;
}

std::vector<int> FiniteGroup::permutation(std::size_t element) const {
  if (kind_ != Kind::Symmetric) throw DomainError("permutations exist only for symmetric groups");
  return perms_.at(element);
}

std::size_t FiniteGroup::from_permutation(std::span<const int> perm) const {
  if (kind_ != Kind::Symmetric) throw DomainError("permutations exist only for symmetric groups");
  if (perm.size() != static_cast<std::size_t>(n_)) throw DomainError("permutation has the wrong length");
  // Lexicographic rank via the Lehmer code.
  std::vector<char> used(perm.size(), 0);
  std::size_t rank = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    const int v = perm[i];
    if (v < 0 || v >= n_ || used[static_cast<std::size_t>(v)])
      throw DomainError("not a permutation of 0..n-1");
    std::size_t smaller = 0;
    for (int w = 0; w < v; ++w) smaller += used[static_cast<std::size_t>(w)] ? 0 : 1;
    used[static_cast<std::size_t>(v)] = 1;
    rank = rank * (perm.size() - i) + smaller;
  }
  return rank;
}

std::size_t FiniteGroup::multiply(std::size_t a, std::size_t b) const {
  if (a >= order_ || b >= order_) throw DomainError("group element out of range");
  if (kind_ == Kind::CyclicProduct) {
    std::vector<int> ca = coordinates(a), cb = coordinates(b);
    for (std::size_t k = 0; k < ca.size(); ++k) ca[k] += cb[k];
    return from_coordinates(ca);
  }
  const auto& pa = perms_[a];
  const auto& pb = perms_[b];
  std::vector<int> c(pa.size());
  for (std::size_t x = 0; x < c.size(); ++x) c[x] = pa[static_cast<std::size_t>(pb[x])];
  return from_permutation(c);
}

std::size_t FiniteGroup::inverse(std::size_t a) const {
  if (a >= order_) throw DomainError("group element out of range");
  if (kind_ == Kind::CyclicProduct) {
    std::vector<int> c = coordinates(a);
    for (int& x : c) x = -x;
    return from_coordinates(c);
  }
  const auto& p = perms_[a];
  std::vector<int> inv(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) inv[static_cast<std::size_t>(p[x])] = static_cast<int>(x);
  return from_permutation(inv);
}

std::string FiniteGroup::describe() const {
  std::ostringstream os;
  if (kind_ == Kind::Symmetric) {
    os << "S" << n_;
    return os.str();
  }
  if (orders_.empty()) return "trivial";
  for (std::size_t k = 0; k < orders_.size(); ++k) os << (k ? " x " : "") << "Z/" << orders_[k];
  return os.str();
}

GeneratorSet::GeneratorSet(const FiniteGroup& group, std::vector<std::size_t> elements) {
  std::set<std::size_t> seen;
  for (std::size_t s : elements) {
    if (s >= group.order()) throw DomainError("generator outside the group");
    if (s == FiniteGroup::identity()) throw DomainError("generator set may not contain the identity");
    if (!seen.insert(s).second) throw DomainError("generator listed twice");
  }
  for (std::size_t s : elements)
    if (!seen.count(group.inverse(s)))
      throw DomainError("generator set is not closed under inversion");
  elements_ = std::move(elements);
}

GeneratorSet GeneratorSet::from_json(const FiniteGroup& group, const nlohmann::json& j) {
  if (!j.is_array()) throw DomainError("generators must be a JSON array");
  std::vector<std::size_t> out;
  for (const auto& e : j) {
    if (e.is_number_integer()) {
      const auto v = e.get<long long>();
      if (v < 0) throw DomainError("generator index must be nonnegative");
      out.push_back(static_cast<std::size_t>(v));
    } else if (e.is_array()) {
      const auto v = e.get<std::vector<int>>();
      out.push_back(group.kind() == FiniteGroup::Kind::Symmetric ? group.from_permutation(v)
                                                                 : group.from_coordinates(v));
    } else {
      throw DomainError("generator must be an index or an array");
    }
  }
  return GeneratorSet(group, std::move(out));
}

GeneratorSet GeneratorSet::adjacent_transpositions(const FiniteGroup& sn) {
  if (sn.kind() != FiniteGroup::Kind::Symmetric) throw DomainError("adjacent transpositions need S_n");
  std::vector<std::size_t> out;
  for (int i = 0; i + 1 < sn.degree(); ++i) {
    std::vector<int> p(static_cast<std::size_t>(sn.degree()));
    std::iota(p.begin(), p.end(), 0);
    std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(i) + 1]);
    out.push_back(sn.from_permutation(p));
  }
  return GeneratorSet(sn, std::move(out));
}

}  // namespace graphdiffuse
