#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "faithrep/char_duality.hpp"
#include "faithrep/families.hpp"
#include "faithrep/mackey_irreps.hpp"

namespace faithrep {

/// An irreducible offered to the solver: its dimension and the restriction of
/// its central character to Omega_1(Z).
struct Candidate {
  std::string label;
  std::int64_t dim = 1;
  DualVector dual;
};

struct FaithfulSolution {
  std::vector<std::string> summands;
  std::vector<std::int64_t> dims;
  std::int64_t total_dim = 0;
  /// F_p rows of the chosen central characters (p-group certificate).
  std::vector<DualVector> certificate;
  int certificate_rank = 0;
  /// Set when the sum was realized by explicit matrices and its kernel computed.
  bool kernel_checked = false;
  std::int64_t kernel_size = 0;

  bool faithful() const { return kernel_checked && kernel_size == 1; }
  nlohmann::json to_json() const;
};

std::int64_t formula_heisenberg(const RingParams& params, int k);
std::int64_t formula_affine(std::int64_t q, int n);
/// Same value as the Heisenberg group Hei_(2 size - 3); odd residue characteristic only.
std::int64_t formula_unitriangular(const RingParams& params, int size);

struct TwoStepFormula {
  std::int64_t sqrt_index = 0;  ///< sqrt [G : Z(G)]
  int center_rank = 0;          ///< minimal number of generators of Z(G)
  std::int64_t value = 0;
};

/// sqrt [G : Z] + d(Z) - 1 for two-step nilpotent p-groups with cyclic [G, G].
TwoStepFormula formula_two_step(const FiniteGroup& g);

struct OrbitBound {
  std::int64_t bound = 0;
  bool equality = false;  ///< the action on C is faithful
};

/// |H . 1| for C = Z/N acted on by the multipliers of H.
OrbitBound orbit_lower_bound(const CyclicAction& action);

/// Checks sum alpha = f xi and the suffix bounds alpha_i + ... + alpha_(xi-1) <= (xi - i) f
/// (throws constraint_violation), then reports whether
/// sum alpha_i q^(k(n-i)) >= sum f q^(k(n-i)).
bool levels_lower_bound_audit(const std::vector<int>& alpha, std::int64_t q, int f, int k, int n);

/// Minimum-dimension set of candidates whose duals form a basis of F_p^dimension.
/// Throws pool_does_not_span.
FaithfulSolution solve_pgroup(const std::vector<Candidate>& pool, int dimension);

/// Candidates from the Mackey catalog (one per central value in symbolic mode).
std::vector<Candidate> heisenberg_candidates(const MackeyCatalog& catalog);
FaithfulSolution solve_heisenberg(const HeisenbergGroup& h);

/// Sum of the irreducibles with central characters psi_b, b = omega_i pi^j.
/// Realizes and kernel-checks them when `check` is set and the group is within the cap.
FaithfulSolution construct_faithful_heisenberg(const HeisenbergGroup& h, bool check = true);
/// Ind_A(chi_1) + chi_2 + ... + chi_r with A maximal abelian; always kernel-checked.
FaithfulSolution construct_faithful_two_step(const FiniteGroup& g);
/// Ind from a primitive additive character of the translations.
FaithfulSolution construct_faithful_affine(const AffineGroup& aff, bool check = true);

}  // namespace faithrep
