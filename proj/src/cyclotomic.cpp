#include "faithrep/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

#include "faithrep/arith.hpp"
#include "faithrep/error.hpp"

namespace faithrep {

namespace {

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<int, std::vector<std::int64_t>>& phi_cache() {
  static std::map<int, std::vector<std::int64_t>> cache;
  return cache;
}

std::vector<std::int64_t> compute_phi(int m) {
  // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d, exact division by monic polynomials.
  std::vector<std::int64_t> num(static_cast<std::size_t>(m) + 1, 0);
  num[0] = -1;
  num[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    const auto& div = cyclotomic_polynomial(d);
    const int dd = static_cast<int>(div.size()) - 1;
    const int dn = static_cast<int>(num.size()) - 1;
    std::vector<std::int64_t> quot(static_cast<std::size_t>(dn - dd) + 1, 0);
    for (int t = dn; t >= dd; --t) {
      const std::int64_t c = num[t];
      quot[t - dd] = c;
      if (c == 0) continue;
      for (int s = 0; s <= dd; ++s) num[t - dd + s] -= c * div[s];
    }
    num = std::move(quot);
  }
  return num;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(int m) {
  if (m < 1) throw Error(ErrorCode::invalid_parameters, "cyclotomic order must be positive");
  {
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto it = phi_cache().find(m);
    if (it != phi_cache().end()) return it->second;
  }
  auto poly = compute_phi(m);
  std::lock_guard<std::mutex> lock(cache_mutex());
  return phi_cache().emplace(m, std::move(poly)).first->second;
}

int euler_phi(int m) { return static_cast<int>(cyclotomic_polynomial(m).size()) - 1; }

Cyclotomic Cyclotomic::reduce(int order, std::vector<std::int64_t> raw) {
  const auto& phi = cyclotomic_polynomial(order);
  const int deg = static_cast<int>(phi.size()) - 1;
  for (int t = static_cast<int>(raw.size()) - 1; t >= deg; --t) {
    const std::int64_t c = raw[t];
    if (c == 0) continue;
    for (int s = 0; s <= deg; ++s) raw[t - deg + s] -= c * phi[s];
  }
  raw.resize(static_cast<std::size_t>(deg), 0);
  return Cyclotomic(order, std::move(raw));
}

Cyclotomic Cyclotomic::integer(std::int64_t value, int order) {
  std::vector<std::int64_t> raw{value};
  return reduce(order, std::move(raw));
}

Cyclotomic Cyclotomic::root_of_unity(int order, std::int64_t exponent) {
  const auto e = static_cast<std::size_t>(floor_mod(exponent, order));
  std::vector<std::int64_t> raw(e + 1, 0);
  raw[e] = 1;
  return reduce(order, std::move(raw));
}

Cyclotomic Cyclotomic::lift(int new_order) const {
  if (new_order == order_) return *this;
  if (new_order % order_ != 0) throw Error(ErrorCode::invalid_parameters, "lift target must be a multiple");
  const int step = new_order / order_;
  std::vector<std::int64_t> raw(static_cast<std::size_t>(coeffs_.size()) * step + 1, 0);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) raw[j * step] = coeffs_[j];
  return reduce(new_order, std::move(raw));
}

Cyclotomic Cyclotomic::conj() const {
  std::vector<std::int64_t> raw(static_cast<std::size_t>(order_), 0);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    raw[(order_ - static_cast<int>(j)) % order_] += coeffs_[j];
  }
  return reduce(order_, std::move(raw));
}

std::optional<std::int64_t> Cyclotomic::as_integer() const {
  for (std::size_t j = 1; j < coeffs_.size(); ++j) {
    if (coeffs_[j] != 0) return std::nullopt;
  }
  return coeffs_.empty() ? 0 : coeffs_[0];
}

bool Cyclotomic::is_zero() const {
  for (auto c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> out{0.0, 0.0};
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / order_;
    out += static_cast<double>(coeffs_[j]) * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return out;
}

std::string Cyclotomic::to_string() const {
  if (auto v = as_integer()) return std::to_string(*v);
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const auto c = coeffs_[j];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? "+" : "-");
    else if (c < 0) os << "-";
    const auto mag = c < 0 ? -c : c;
    if (j == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << "*";
      os << "E(" << order_ << ")";
      if (j != 1) os << "^" << j;
    }
    first = false;
  }
  return os.str();
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
  if (other.order_ != order_) {
    const int m = static_cast<int>(lcm64(order_, other.order_));
    *this = lift(m);
    return *this += other.lift(m);
  }
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] = checked_add(coeffs_[j], other.coeffs_[j]);
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other) {
  return *this += other * Cyclotomic::integer(-1, other.order_);
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& other) {
  if (other.order_ != order_) {
    const int m = static_cast<int>(lcm64(order_, other.order_));
    *this = lift(m);
    return *this *= other.lift(m);
  }
  if (coeffs_.empty()) return *this;
  std::vector<std::int64_t> raw(coeffs_.size() * 2, 0);
  for (std::size_t a = 0; a < coeffs_.size(); ++a) {
    if (coeffs_[a] == 0) continue;
    for (std::size_t b = 0; b < other.coeffs_.size(); ++b) {
      raw[a + b] = checked_add(raw[a + b], checked_mul(coeffs_[a], other.coeffs_[b]));
    }
  }
  *this = reduce(order_, std::move(raw));
  return *this;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  const int m = static_cast<int>(lcm64(a.order_, b.order_));
  return a.lift(m).coeffs_ == b.lift(m).coeffs_;
}

}  // namespace faithrep
