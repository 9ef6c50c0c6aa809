#pragma once

#include <cstdint>
#include <vector>

#include <nlohmann/json.hpp>

#include "faithrep/char_duality.hpp"
#include "faithrep/exactrep.hpp"
#include "faithrep/families.hpp"

namespace faithrep {

/// Explicit enumeration is allowed while |R|^(k+1) stays below this.
inline constexpr std::int64_t kExplicitCatalogLimit = 100000;

/// L-orbit of the character psi_(b_vec, b) of A = {(x, 0, z)}; ring elements
/// are enumeration indices.
struct OrbitRep {
  std::vector<int> b_vec;
  int b = 0;
  int level = 0;
  std::int64_t orbit_size = 0;
  std::int64_t stabilizer_size = 0;
};

/// theta_(s, lambda): induced from psi_s * lambda on A L_s.
struct IrrepDescriptor {
  std::vector<int> b_vec;
  int b = 0;
  /// lambda(y) = psi(c . y) on L_s = (pi^(n - level) R)^k; c in (R / pi^level)^k
  std::vector<int> lambda;
  std::int64_t lambda_label = 0;
  std::int64_t dim = 1;
  int level = 0;
  AddChar central_char;
  DualVector central_dual;  ///< central character restricted to Omega_1(Z)
};

/// Per-level counts, available without enumeration.
struct LevelSummary {
  int level = 0;
  std::int64_t central_values = 0;   ///< number of b with this level
  std::int64_t orbits_per_value = 0;
  std::int64_t lambdas_per_orbit = 0;
  std::int64_t dim = 1;

  std::int64_t irreps() const { return central_values * orbits_per_value * lambdas_per_orbit; }
};

class MackeyCatalog {
 public:
  explicit MackeyCatalog(const HeisenbergGroup& h);

  const HeisenbergGroup& group() const { return h_; }
  const AdditiveDual& dual() const { return dual_; }
  bool explicit_mode() const { return explicit_; }

  /// L-orbits on the dual of A computed by direct enumeration.
  std::vector<OrbitRep> orbit_representatives() const;
  /// Full catalog; throws cap_exceeded in symbolic mode.
  std::vector<IrrepDescriptor> irreps() const;
  std::vector<LevelSummary> summary() const;
  std::int64_t irrep_count() const;

  /// The inducing character psi_s * lambda on A L_s inside h.materialize().
  LinearCharacter inducing_character(const IrrepDescriptor& d) const;
  /// Descriptor for given data (lambda trivial when empty).
  IrrepDescriptor describe(std::vector<int> b_vec, int b, std::vector<int> lambda = {}) const;

  nlohmann::json to_json(const IrrepDescriptor& d) const;

 private:
  HeisenbergGroup h_;
  AdditiveDual dual_;
  bool explicit_;

  std::vector<std::int64_t> psi_by_index_;
  /// canon_[level][a]: least index in a + pi^level R
  std::vector<std::vector<int>> canon_;
  std::vector<std::vector<int>> coset_reps_;
};

/// Level 0 only: the unique irreducible with central character chi has
/// dimension [H : A]. Throws not_generic otherwise.
std::int64_t stone_von_neumann_dim(const HeisenbergGroup& h, const AddChar& chi);

/// V = R^2k with <(x1, y1), (x2, y2)> = x1 . y2 - y1 . x2.
class SymplecticModule {
 public:
  SymplecticModule(ChainRing ring, int k);

  const ChainRing& ring() const { return ring_; }
  int k() const { return k_; }
  std::int64_t size() const;
  /// Vectors are index lists of length 2k (x then y).
  std::vector<int> vector_at(std::int64_t index) const;
  int pairing(const std::vector<int>& v, const std::vector<int>& w) const;
  /// |V(a)| for a = pi^j R, computed by enumerating V.
  std::int64_t perp_size(int ideal_power) const;
  std::vector<std::vector<int>> perp(int ideal_power) const;

 private:
  ChainRing ring_;
  RingTables tables_;
  int k_;
};

/// sqrt |V / V(a)| with a the conductor ideal of chi. Throws char2_unsupported for p = 2.
std::int64_t schrodinger_dim(const SymplecticModule& m, const AdditiveDual& dual, const AddChar& chi);

/// Largest ideal pi^j R inside ker psi_b, found by testing every ideal; returns j.
int conductor_by_search(const AdditiveDual& dual, const RingElem& b);

}  // namespace faithrep
