#pragma once

#include <cstdint>
#include <vector>

#include <nlohmann/json.hpp>

#include "faithrep/chain_ring.hpp"
#include "faithrep/cyclotomic.hpp"

namespace faithrep {

/// Additive character psi_b : x -> psi(b x) of a chain ring.
struct AddChar {
  RingElem b;
  int level = 0;  ///< valuation(b)

  bool operator==(const AddChar&) const = default;
};

/// F_p coordinates of a character restricted to an elementary abelian group.
struct DualVector {
  int p = 2;
  std::vector<int> coords;

  bool is_zero() const;
  bool operator==(const DualVector&) const = default;
};

/// The duality b -> psi_b for a fixed primitive psi on R.
///
/// psi is an F-linear functional on the cyclic coordinates of (R, +):
/// psi(x) = e(sum_c w_c * a_c(x) * (N / m_c) / N), N the additive exponent and
/// m_c the modulus of coordinate c. The default functional is the Galois-ring
/// trace for e = 1 and the top-socle digit of omega_1 otherwise.
class AdditiveDual {
 public:
  explicit AdditiveDual(ChainRing ring);
  /// Custom functional weights (one per additive coordinate); must be primitive.
  AdditiveDual(ChainRing ring, std::vector<std::int64_t> weights);

  const ChainRing& ring() const { return ring_; }
  /// psi values are N-th roots of unity.
  std::int64_t value_modulus() const { return ring_.additive_exponent(); }
  const std::vector<std::int64_t>& weights() const { return weights_; }

  /// Exponent k with psi(x) = e(k / N).
  std::int64_t psi_exponent(const RingElem& x) const;

  AddChar psi_b(const RingElem& b) const;
  AddChar primitive_character() const { return psi_b(ring_.one()); }
  /// Exponent of psi_b(x).
  std::int64_t evaluate(const AddChar& chi, const RingElem& x) const;
  Cyclotomic evaluate_exact(const AddChar& chi, const RingElem& x) const;

  /// Index n - level: the largest ideal in ker psi_b is pi^(n - level) R.
  int conductor(const AddChar& chi) const;
  /// Generators omega_i pi^(n - xi + j), ordered by (i, j).
  std::vector<RingElem> omega1_generators() const;
  DualVector restrict_to_omega1(const AddChar& chi) const;

  nlohmann::json to_json(const AddChar& chi) const;

 private:
  ChainRing ring_;
  std::vector<std::int64_t> weights_;
};

/// Kernel of an exponent-valued additive functional contains no nonzero ideal,
/// decided by evaluating it on the socle pi^(n-1) R.
template <typename Psi>
bool is_primitive_functional(const ChainRing& ring, Psi&& psi_exponent) {
  for (const auto& s : ring.ideal(ring.n() - 1)) {
    if (psi_exponent(s) != 0) return true;
  }
  return false;
}

/// Trace of multiplication by y^i on the unramified ring, reduced mod p^n (e = 1 only).
std::vector<std::int64_t> galois_trace_weights(const ChainRing& ring);

int rank_mod_p(const std::vector<DualVector>& vectors);
bool spans_dual(const std::vector<DualVector>& vectors, int dimension);
/// Minimum-weight basis of the linear matroid spanned by `vectors`: scan by
/// increasing weight (ties by index), keep vectors that raise the rank.
std::vector<int> basis_greedy(const std::vector<DualVector>& vectors, const std::vector<std::int64_t>& weights);

}  // namespace faithrep
