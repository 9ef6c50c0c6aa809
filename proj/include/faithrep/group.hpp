#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace faithrep {

/// Default order cap for materialized groups and character tables.
inline constexpr int kDefaultOracleCap = 4096;
/// Multiplication tables are indexed with 16-bit entries.
inline constexpr int kHardOrderLimit = 65536;

/// Effective cap: FAITHREP_ORACLE_CAP when set, otherwise kDefaultOracleCap.
int oracle_cap();

/// Finite group given by its multiplication table. Elements are 0..order-1.
class FiniteGroup {
 public:
  using Table = std::vector<std::uint16_t>;

  /// Validates the table (Latin square, identity, associativity via Light's
  /// test on a generating set).
  FiniteGroup(std::string name, Table table, int order);

  /// Builds a table by calling mul(a, b) for all pairs.
  template <typename Mul>
  static FiniteGroup from_operation(std::string name, int order, Mul&& mul) {
    check_order(order);
    Table table(static_cast<std::size_t>(order) * order);
    for (int a = 0; a < order; ++a) {
      for (int b = 0; b < order; ++b) {
        table[static_cast<std::size_t>(a) * order + b] = static_cast<std::uint16_t>(mul(a, b));
      }
    }
    return FiniteGroup(std::move(name), std::move(table), order);
  }

  static FiniteGroup from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  const std::string& name() const { return name_; }
  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  int inv(int a) const { return inverse_[a]; }
  int power(int a, std::int64_t k) const;
  int element_order(int a) const { return element_order_[a]; }
  int exponent() const { return exponent_; }
  /// x g x^-1
  int conj(int g, int x) const { return mul(mul(x, g), inv(x)); }
  /// a b a^-1 b^-1
  int commutator(int a, int b) const { return mul(mul(a, b), mul(inv(a), inv(b))); }

  /// Smallest subgroup containing gens, as a sorted element list.
  std::vector<int> generate(const std::vector<int>& gens) const;
  /// Greedy generating set in element order.
  const std::vector<int>& generators() const { return generators_; }
  bool is_subgroup(const std::vector<int>& elems) const;
  bool is_normal(const std::vector<int>& elems) const;

  static void check_order(int order);

 private:
  std::string name_;
  int order_ = 0;
  int identity_ = 0;
  int exponent_ = 1;
  Table table_;
  std::vector<int> inverse_;
  std::vector<int> element_order_;
  std::vector<int> generators_;

  std::vector<int> compute_generators() const;
};

enum class SubgroupLabel { A, L, Z, center, commutator, maximal_abelian, custom };

/// Named subgroup with a sorted element list and a membership bitmap.
struct SubgroupHandle {
  SubgroupLabel label = SubgroupLabel::custom;
  std::vector<int> elements;
  std::vector<bool> member;

  static SubgroupHandle make(SubgroupLabel label, std::vector<int> elements, int group_order);
  bool contains(int g) const { return member[g]; }
  int size() const { return static_cast<int>(elements.size()); }
};

struct ConjugacyClasses {
  /// Classes sorted by their least element; class 0 is the identity class.
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;
  std::vector<int> representative;

  int count() const { return static_cast<int>(classes.size()); }
};

ConjugacyClasses conjugacy_classes(const FiniteGroup& g);

struct StructureInfo {
  SubgroupHandle center;
  SubgroupHandle commutator_subgroup;
  SubgroupHandle omega1_center;
  ConjugacyClasses classes;
  bool is_p_group = false;
  int prime = 0;  ///< the prime when is_p_group
  bool is_abelian = false;
  bool is_two_step = false;  ///< [G,G] inside Z(G)
  bool commutator_cyclic = false;
  SubgroupHandle maximal_abelian;
  /// d(Z(G)) = dim Omega_1(Z(G)) for p-groups; invariant-factor count otherwise.
  int center_rank = 0;
};

/// Exhaustive structure data. Throws cap_exceeded above oracle_cap().
StructureInfo structure_scan(const FiniteGroup& g);

/// Centralizer of a set of elements.
std::vector<int> centralizer(const FiniteGroup& g, const std::vector<int>& elems);
/// Maximal abelian subgroup grown greedily from `seed` (an abelian subgroup).
std::vector<int> maximal_abelian_containing(const FiniteGroup& g, const std::vector<int>& seed);
/// Number of invariant factors of an abelian subgroup.
int abelian_rank(const FiniteGroup& g, const std::vector<int>& abelian_subgroup);
bool is_cyclic(const FiniteGroup& g, const std::vector<int>& subgroup);

/// G / N for a normal subgroup N; cosets are numbered by their least element.
struct Quotient {
  FiniteGroup group;
  std::vector<int> projection;  ///< element of G -> coset index
};

Quotient quotient_group(const FiniteGroup& g, const std::vector<int>& normal);

}  // namespace faithrep
