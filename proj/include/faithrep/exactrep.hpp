#pragma once

#include <cstdint>
#include <vector>

#include <nlohmann/json.hpp>

#include "faithrep/cyclotomic.hpp"
#include "faithrep/group.hpp"

namespace faithrep {

/// One-dimensional character of a subgroup: g -> e(exponent(g) / modulus).
struct LinearCharacter {
  std::vector<int> elements;             ///< sorted subgroup elements
  std::vector<std::int64_t> exponents;   ///< aligned with `elements`
  int modulus = 1;

  std::int64_t exponent_of(int g) const;
  bool contains(int g) const;
};

/// Throws not_subgroup or chi_not_homomorphism.
void check_linear_character(const FiniteGroup& g, const LinearCharacter& chi);

/// Monomial matrices: rho(g) e_i = e(scalar(g, i) / modulus) e_{image(g, i)}.
class MonomialRep {
 public:
  MonomialRep(int group_order, int degree, int modulus, std::vector<int> images, std::vector<std::int64_t> scalars);

  int degree() const { return degree_; }
  int modulus() const { return modulus_; }
  int group_order() const { return group_order_; }
  int image(int g, int i) const { return images_[static_cast<std::size_t>(g) * degree_ + i]; }
  std::int64_t scalar(int g, int i) const { return scalars_[static_cast<std::size_t>(g) * degree_ + i]; }

  Cyclotomic trace(int g) const;
  std::vector<Cyclotomic> character() const;
  /// rho(a) rho(b) == rho(ab)
  bool multiplies_correctly(const FiniteGroup& g, int a, int b) const;

  nlohmann::json to_json() const;

 private:
  int group_order_;
  int degree_;
  int modulus_;
  std::vector<int> images_;
  std::vector<std::int64_t> scalars_;
};

/// Ind_A^G(chi) over left cosets r A with r the least element of its coset.
MonomialRep induce_character(const FiniteGroup& g, const LinearCharacter& chi);

/// chi_Ind(g) = sum over coset representatives r with r^-1 g r in A of chi(r^-1 g r).
std::vector<Cyclotomic> induced_character_formula(const FiniteGroup& g, const LinearCharacter& chi);

/// {g : chi(g) == chi(1)}
std::vector<int> kernel_of(const FiniteGroup& g, const std::vector<Cyclotomic>& character);

/// Direct sums are kept as lists of summand characters.
struct RepSum {
  std::vector<std::vector<Cyclotomic>> summands;
  std::vector<int> degrees;

  void add(std::vector<Cyclotomic> character);
  int total_degree() const;
};

std::vector<int> kernel_of(const FiniteGroup& g, const RepSum& sum);
bool is_faithful(const FiniteGroup& g, const RepSum& sum);

/// Value vector of a linear character defined on all of g.
std::vector<Cyclotomic> linear_character_values(const FiniteGroup& g, const LinearCharacter& chi);

/// Extends chi from its subgroup S to the abelian subgroup `target` (which
/// contains S), adding one element at a time: if m is minimal with h^m in S,
/// chi(h) is taken as an m-th root of chi(h^m).
LinearCharacter extend_linear_character(const FiniteGroup& g, const LinearCharacter& chi,
                                        const std::vector<int>& target);

}  // namespace faithrep
