#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "faithrep/cyclotomic.hpp"
#include "faithrep/group.hpp"
#include "faithrep/minfaith_solver.hpp"

namespace faithrep {

/// Exact character table; rows are irreducibles, columns conjugacy classes.
struct CharacterTable {
  int group_order = 1;
  int exponent = 1;
  std::int64_t prime = 0;  ///< modular prime the table was computed with
  std::vector<int> class_reps;
  std::vector<int> class_sizes;
  std::vector<int> class_of;
  std::vector<std::vector<Cyclotomic>> chars;
  std::vector<int> dims;

  int count() const { return static_cast<int>(dims.size()); }
  const Cyclotomic& value(int irrep, int element) const { return chars[irrep][class_of[element]]; }
  /// Per-element values of one irreducible.
  std::vector<Cyclotomic> row_by_element(int irrep) const;

  nlohmann::json to_json() const;
  std::string to_csv() const;
};

/// Dixon's method: common eigenvectors of the class matrices over F_l with
/// l = 1 mod exp(G), l > 2 sqrt|G|, values lifted through the power maps.
/// Throws cap_exceeded above oracle_cap() and modular_prime_not_found when
/// no prime among the first few candidates splits.
CharacterTable character_table(const FiniteGroup& g);

/// sum_C |C| chi_i(C) conj(chi_j(C)) == |G| delta_ij, exactly.
bool check_orthogonality(const CharacterTable& t);

/// Kernel of each irreducible as a sorted element list.
std::vector<std::vector<int>> kernel_lattice(const FiniteGroup& g, const CharacterTable& t);

/// Minimal normal subgroups (sorted element lists, sorted by least non-identity element).
std::vector<std::vector<int>> minimal_normal_subgroups(const FiniteGroup& g, const ConjugacyClasses& classes);

struct OracleResult {
  std::int64_t min_dim = 0;
  std::vector<int> selection;  ///< table rows
  std::int64_t nodes = 0;      ///< search nodes visited
};

/// Exact minimum of sum chi(1) over sets of irreducibles with trivial common kernel.
OracleResult min_faithful_exhaustive(const FiniteGroup& g, const CharacterTable& t);

/// Solver candidates for a p-group from its table: restriction of each
/// central character to Omega_1(Z(G)) in a fixed greedy basis.
std::vector<Candidate> candidates_from_table(const FiniteGroup& g, const CharacterTable& t, int* dimension);

/// One suite instance: every applicable method's value of m_faithful.
struct CrossRow {
  std::string name;
  std::string group;
  std::int64_t order = 0;
  std::map<std::string, std::int64_t> values;
  std::map<std::string, std::string> skipped;
  std::optional<std::int64_t> expected;
  std::vector<std::string> problems;

  bool ok() const { return problems.empty(); }
};

struct CrossReport {
  std::vector<CrossRow> rows;

  bool all_match() const;
  nlohmann::json to_json() const;
  std::string to_csv() const;
  std::string to_human() const;
};

/// Suite entries: {"name", "group" (group spec), optional "expect", optional "oracle": false}.
CrossReport cross_validate(const nlohmann::json& suite);
/// The pinned suite shipped with the library.
nlohmann::json default_suite();

}  // namespace faithrep
