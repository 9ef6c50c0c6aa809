#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace faithrep {

/// Parameters (p, f, e, n) of a truncated local-field integer ring O/p^n.
/// An empty `e` encodes equal characteristic (e = infinity).
struct RingParams {
  int p = 2;
  int f = 1;
  std::optional<int> e = 1;
  int n = 1;

  bool equal_characteristic() const { return !e.has_value(); }
  /// min{e, n}
  int xi() const { return e ? std::min(*e, n) : n; }

  bool operator==(const RingParams&) const = default;
};

std::string format_ramification(const std::optional<int>& e);
std::optional<int> parse_ramification(const std::string& text);

nlohmann::json to_json(const RingParams& params);
RingParams ring_params_from_json(const nlohmann::json& j);

/// Element of O/p^n written as sum d(i,j) * omega_i * pi^j with digits in [0, p).
/// coords[j * f + i] holds d(i,j).
struct RingElem {
  std::vector<int> coords;

  bool operator==(const RingElem&) const = default;
  auto operator<=>(const RingElem&) const = default;
};

/// Finite chain ring O/p^n in canonical digit coordinates.
///
/// Internally every element is a pi-adic expansion whose digits are integer
/// polynomials in y of degree < f with coefficients in [0, p); y is a root of
/// the unramified polynomial h. Arithmetic works on unreduced integer digit
/// vectors and renormalizes by carrying p = pi^e upward e positions (dropped
/// entirely in equal characteristic, where p = 0).
class ChainRing {
 public:
  static ChainRing make(int p, int f, std::optional<int> e, int n);
  static ChainRing make(const RingParams& params);

  const RingParams& params() const { return params_; }
  int p() const { return params_.p; }
  int f() const { return params_.f; }
  int n() const { return params_.n; }
  std::optional<int> e() const { return params_.e; }
  bool equal_characteristic() const { return params_.equal_characteristic(); }
  int xi() const { return params_.xi(); }
  std::int64_t q() const { return q_; }
  std::int64_t size() const { return size_; }
  int coord_count() const { return params_.f * params_.n; }

  /// Monic h(y), coefficients low degree first (length f + 1).
  const std::vector<int>& unramified_poly() const { return h_; }

  RingElem zero() const;
  RingElem one() const;
  RingElem uniformizer() const;
  RingElem from_int(std::int64_t value) const;
  /// omega_i * pi^j with 0-based i.
  RingElem omega_pi(int i, int j) const;

  RingElem add(const RingElem& a, const RingElem& b) const;
  RingElem sub(const RingElem& a, const RingElem& b) const;
  RingElem neg(const RingElem& a) const;
  RingElem mul(const RingElem& a, const RingElem& b) const;
  RingElem scale(const RingElem& a, std::int64_t k) const;

  /// Largest j <= n with a in pi^j R; valuation(0) == n.
  int valuation(const RingElem& a) const;
  bool is_unit(const RingElem& a) const { return valuation(a) == 0; }

  /// Enumeration index: coordinate 0 is least significant, so Z/p^n
  /// enumerates as 0, 1, ..., p^n - 1.
  std::int64_t index_of(const RingElem& a) const;
  RingElem element(std::int64_t index) const;

  std::vector<RingElem> elements() const;
  std::vector<RingElem> units() const;
  /// Units omega_1 = 1, omega_2 = y, ..., omega_f = y^(f-1).
  std::vector<RingElem> omega_units() const;
  /// Index n - xi with Omega_1(R, +) = pi^(n - xi) R.
  int omega1_index() const { return params_.n - xi(); }
  std::vector<RingElem> ideal(int j) const;

  /// Additive group (R, +) is the direct sum of cyclic groups generated by
  /// omega_i * pi^t, t < min(e, n) (t < n in equal characteristic). These
  /// return the cyclic coordinates a(i,t) and their moduli p^m(t).
  std::vector<std::int64_t> additive_coords(const RingElem& a) const;
  const std::vector<std::int64_t>& additive_moduli() const { return add_moduli_; }
  /// Exponent of (R, +).
  std::int64_t additive_exponent() const { return add_exponent_; }

  nlohmann::json to_json(const RingElem& a) const;
  RingElem elem_from_json(const nlohmann::json& j) const;
  std::string describe() const;

 private:
  ChainRing() = default;
  RingElem normalize(std::vector<std::int64_t> raw) const;

  RingParams params_;
  std::int64_t q_ = 0;
  std::int64_t size_ = 0;
  std::vector<int> h_;
  std::vector<std::int64_t> add_moduli_;
  int add_components_per_omega_ = 0;
  std::int64_t add_exponent_ = 1;
};

/// Lexicographically least monic irreducible of degree f over F_p, coefficient
/// vector compared from the constant term upward as a base-p integer.
std::vector<int> least_irreducible_poly(int p, int f);
bool is_irreducible_mod_p(const std::vector<int>& poly, int p);

/// Index-based add/mul/neg lookup tables for rings small enough to tabulate.
class RingTables {
 public:
  explicit RingTables(const ChainRing& ring);

  static constexpr std::int64_t kMaxSize = 1024;

  int size() const { return size_; }
  int add(int a, int b) const { return add_[static_cast<std::size_t>(a) * size_ + b]; }
  int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * size_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int valuation(int a) const { return val_[a]; }
  int zero() const { return 0; }
  int one() const { return one_; }

 private:
  int size_ = 0;
  int one_ = 0;
  std::vector<int> add_;
  std::vector<int> mul_;
  std::vector<int> neg_;
  std::vector<int> val_;
};

/// Ring isomorphism a -> b as an index map, by backtracking over bijections
/// (rings of at most 64 elements).
std::optional<std::vector<int>> find_ring_isomorphism(const RingTables& a, const RingTables& b);

}  // namespace faithrep
