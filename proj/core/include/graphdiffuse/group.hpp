#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace graphdiffuse {

// Finite group given by enumeration: either a product of cyclic groups
// Z/n1 x ... x Z/nm (elements indexed in mixed radix, first coordinate most
// significant) or the symmetric group S_n (permutations in one-line notation,
// indexed lexicographically). Element 0 is the identity in both cases.
//
// Permutations compose right to left: multiply(a, b) maps x to a(b(x)).
class FiniteGroup {
public:
  enum class Kind { CyclicProduct, Symmetric };

  static FiniteGroup cyclic_product(std::vector<int> orders);
  static FiniteGroup symmetric(int n);
  static FiniteGroup from_json(const nlohmann::json& j);

  Kind kind() const noexcept { return kind_; }
  bool is_abelian() const noexcept;
  std::size_t order() const noexcept { return order_; }
  static constexpr std::size_t identity() noexcept { return 0; }

  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const;

  const std::vector<int>& cyclic_orders() const noexcept { return orders_; }
  std::vector<int> coordinates(std::size_t element) const;
  std::size_t from_coordinates(std::span<const int> coords) const;  // reduced mod orders

  int degree() const noexcept { return n_; }  // S_n only
  std::vector<int> permutation(std::size_t element) const;
  std::size_t from_permutation(std::span<const int> perm) const;

  std::string describe() const;

private:
  Kind kind_ = Kind::CyclicProduct;
  std::size_t order_ = 1;
  std::vector<int> orders_;
  int n_ = 0;
  std::vector<std::vector<int>> perms_;  // cached one-line forms for S_n
};

// Symmetric generating subset without the identity.
class GeneratorSet {
public:
  GeneratorSet(const FiniteGroup& group, std::vector<std::size_t> elements);
  // Integers are element indices; arrays are coordinates or permutations.
  static GeneratorSet from_json(const FiniteGroup& group, const nlohmann::json& j);
  // Adjacent transpositions (i, i+1) of S_n.
  static GeneratorSet adjacent_transpositions(const FiniteGroup& sn);

  const std::vector<std::size_t>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }

private:
  std::vector<std::size_t> elements_;
};

}  // namespace graphdiffuse
