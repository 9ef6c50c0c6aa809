#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "faithrep/chain_ring.hpp"
#include "faithrep/group.hpp"

namespace faithrep {

/// (x, y, z) with x, y in R^k and z in R, entries as ring enumeration indices.
struct HeisElem {
  std::vector<int> x;
  std::vector<int> y;
  int z = 0;

  bool operator==(const HeisElem&) const = default;
};

/// Hei_{2k+1}(R): upper unitriangular [[1, x, z], [0, I_k, y^T], [0, 0, 1]].
/// Element indices are mixed radix over the stream (x_1..x_k, y_1..y_k, z),
/// z least significant, so the identity has index 0.
class HeisenbergGroup {
 public:
  HeisenbergGroup(ChainRing ring, int k);

  const ChainRing& ring() const { return ring_; }
  const RingTables& tables() const { return *tables_; }
  int k() const { return k_; }
  std::int64_t order() const { return order_; }

  HeisElem mul(const HeisElem& a, const HeisElem& b) const;
  HeisElem inv(const HeisElem& a) const;
  HeisElem identity() const;
  /// (x1,y1,z1)(x,y,z)(x1,y1,z1)^-1 computed by group multiplication.
  HeisElem conj(const HeisElem& h, const HeisElem& by) const { return mul(mul(by, h), inv(by)); }
  HeisElem commutator(const HeisElem& a, const HeisElem& b) const;

  std::int64_t encode(const HeisElem& h) const;
  HeisElem decode(std::int64_t index) const;

  /// Multiplication table; throws cap_exceeded above oracle_cap().
  FiniteGroup materialize() const;

  /// A = {(x,0,z)}, L = {(0,y,0)}, Z = {(0,0,z)} as element index lists.
  std::vector<int> subgroup_a() const;
  std::vector<int> subgroup_l() const;
  std::vector<int> subgroup_z() const;

  std::string name() const;

 private:
  ChainRing ring_;
  std::shared_ptr<const RingTables> tables_;
  int k_;
  std::int64_t order_;
};

/// U_size(R), upper unitriangular matrices. Entries above the diagonal are
/// stored row-major; the element index is mixed radix over that stream.
class UnitriangularGroup {
 public:
  UnitriangularGroup(ChainRing ring, int size);

  const ChainRing& ring() const { return ring_; }
  int size() const { return size_; }
  int entry_count() const { return size_ * (size_ - 1) / 2; }
  std::int64_t order() const { return order_; }

  std::vector<int> mul(const std::vector<int>& a, const std::vector<int>& b) const;
  std::int64_t encode(const std::vector<int>& entries) const;
  std::vector<int> decode(std::int64_t index) const;
  int entry_position(int row, int col) const;

  FiniteGroup materialize() const;
  /// Hei_{2 size - 3}(R) sitting in the first row and last column.
  std::vector<int> embedded_heisenberg() const;
  /// Index in U of the image of a Heisenberg element (k = size - 2).
  std::int64_t embed(const HeisElem& h) const;
  /// Throws char2_unsupported when the residue characteristic is 2.
  void require_odd_residue_characteristic() const;

  std::string name() const;

 private:
  ChainRing ring_;
  std::shared_ptr<const RingTables> tables_;
  int size_;
  std::int64_t order_;
};

/// Aff(R) = R x| R^x with (a1,u1)(a2,u2) = (a1 + u1 a2, u1 u2). Index is
/// a * |R^x| + (position of u among units), so the identity has index 0.
class AffineGroup {
 public:
  explicit AffineGroup(ChainRing ring);

  const ChainRing& ring() const { return ring_; }
  std::int64_t order() const { return order_; }
  int unit_count() const { return static_cast<int>(units_.size()); }
  /// ring index of the unit at a position
  int unit(int position) const { return units_[position]; }

  std::int64_t encode(int a, int u) const;
  std::pair<int, int> decode(std::int64_t index) const;

  FiniteGroup materialize() const;
  /// Translation subgroup {(a, 1)}.
  std::vector<int> translations() const;
  std::string name() const;

 private:
  ChainRing ring_;
  std::shared_ptr<const RingTables> tables_;
  std::vector<int> units_;
  std::vector<int> unit_position_;
  std::int64_t order_;
};

/// GL_2(R).
FiniteGroup general_linear_2(const ChainRing& ring);

/// Z/N x| (Z/h_1 x ... x Z/h_r), generator i acting on Z/N by c -> m_i c.
struct CyclicAction {
  int modulus = 1;
  std::vector<int> h_orders;
  std::vector<int> multipliers;

  int h_order() const;
  /// Orbit of 1 in Z/N under the multiplier group.
  std::vector<int> orbit_of_generator() const;
  /// Image of H in (Z/N)^x has |H| elements.
  bool is_faithful() const;
};

FiniteGroup cyclic_semidirect(const CyclicAction& action);
/// Dicyclic group of order 4n (n = 2 gives the quaternion group Q8).
FiniteGroup dicyclic(int n);
FiniteGroup dihedral(int n);
FiniteGroup abelian_product(const std::vector<int>& cyclic_orders);

/// Parsed "family:key=value,..." group specifier.
struct GroupSpec {
  std::string family;
  std::map<std::string, std::string> args;
  std::string text;

  int int_arg(const std::string& key, int fallback) const;
  bool has(const std::string& key) const { return args.count(key) != 0; }
  std::vector<int> list_arg(const std::string& key) const;
  RingParams ring_params() const;
};

GroupSpec parse_group_spec(const std::string& text);
FiniteGroup build_group(const GroupSpec& spec);

}  // namespace faithrep
