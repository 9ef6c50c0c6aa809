#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace faithrep {

/// Exact element of Z[zeta_m], stored as the remainder of sum c_j x^j modulo
/// the m-th cyclotomic polynomial. The remainder is unique, so equality of
/// values is equality of coefficient vectors at a common order.
class Cyclotomic {
 public:
  Cyclotomic() : order_(1), coeffs_{0} {}

  static Cyclotomic integer(std::int64_t value, int order = 1);
  /// zeta_order^exponent
  static Cyclotomic root_of_unity(int order, std::int64_t exponent);
  /// sum_j raw[j] * zeta_order^j for any length of raw.
  static Cyclotomic from_coefficients(int order, std::vector<std::int64_t> raw) { return reduce(order, std::move(raw)); }

  int order() const { return order_; }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

  /// Same value viewed in Q(zeta_new_order); new_order must be a multiple of order().
  Cyclotomic lift(int new_order) const;
  Cyclotomic conj() const;

  std::optional<std::int64_t> as_integer() const;
  bool is_zero() const;
  std::complex<double> to_complex() const;
  std::string to_string() const;

  Cyclotomic& operator+=(const Cyclotomic& other);
  Cyclotomic& operator-=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Cyclotomic& other);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

 private:
  Cyclotomic(int order, std::vector<std::int64_t> coeffs) : order_(order), coeffs_(std::move(coeffs)) {}
  static Cyclotomic reduce(int order, std::vector<std::int64_t> raw);

  int order_;
  std::vector<std::int64_t> coeffs_;
};

/// Integer coefficients of Phi_m, low degree first.
const std::vector<std::int64_t>& cyclotomic_polynomial(int m);
int euler_phi(int m);

}  // namespace faithrep
