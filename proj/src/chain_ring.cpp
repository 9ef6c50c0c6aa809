#include "faithrep/chain_ring.hpp"

#include <algorithm>
#include <sstream>

#include "faithrep/arith.hpp"
#include "faithrep/error.hpp"

namespace faithrep {

namespace {

// Remainder of a modulo b over F_p; b monic. Coefficients low degree first.
std::vector<int> poly_mod_p(std::vector<int> a, const std::vector<int>& b, int p) {
  const int db = static_cast<int>(b.size()) - 1;
  for (int d = static_cast<int>(a.size()) - 1; d >= db; --d) {
    const int c = static_cast<int>(floor_mod(a[d], p));
    if (c == 0) continue;
    for (int t = 0; t <= db; ++t) {
      a[d - db + t] = static_cast<int>(floor_mod(a[d - db + t] - c * b[t], p));
    }
  }
  a.resize(std::max(db, 0));
  for (auto& c : a) c = static_cast<int>(floor_mod(c, p));
  return a;
}

}  // namespace

std::string format_ramification(const std::optional<int>& e) {
  return e ? std::to_string(*e) : std::string("inf");
}

std::optional<int> parse_ramification(const std::string& text) {
  if (text == "inf" || text == "INF" || text == "Inf") return std::nullopt;
  try {
    std::size_t used = 0;
    const int value = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw Error(ErrorCode::parse_error, "ramification index must be a positive integer or 'inf': " + text);
  }
}

nlohmann::json to_json(const RingParams& params) {
  nlohmann::json j;
  j["p"] = params.p;
  j["f"] = params.f;
  if (params.e) {
    j["e"] = *params.e;
  } else {
    j["e"] = "inf";
  }
  j["n"] = params.n;
  return j;
}

RingParams ring_params_from_json(const nlohmann::json& j) {
  RingParams out;
  try {
    out.p = j.at("p").get<int>();
    out.f = j.at("f").get<int>();
    out.n = j.at("n").get<int>();
    const auto& e = j.at("e");
    if (e.is_string()) {
      out.e = parse_ramification(e.get<std::string>());
    } else {
      out.e = e.get<int>();
    }
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::parse_error, std::string("ring parameters: ") + ex.what());
  }
  return out;
}

bool is_irreducible_mod_p(const std::vector<int>& poly, int p) {
  const int deg = static_cast<int>(poly.size()) - 1;
  if (deg <= 1) return deg == 1;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (int d = 1; d <= deg / 2; ++d) {
    const std::int64_t count = ipow(p, d);
    for (std::int64_t code = 0; code < count; ++code) {
      std::vector<int> divisor(d + 1, 0);
      std::int64_t c = code;
      for (int t = 0; t < d; ++t) {
        divisor[t] = static_cast<int>(c % p);
        c /= p;
      }
      divisor[d] = 1;
      const auto rem = poly_mod_p(poly, divisor, p);
      if (std::all_of(rem.begin(), rem.end(), [](int v) { return v == 0; })) return false;
    }
  }
  return true;
}

std::vector<int> least_irreducible_poly(int p, int f) {
  const std::int64_t count = ipow(p, f);
  for (std::int64_t code = 0; code < count; ++code) {
    std::vector<int> poly(f + 1, 0);
    std::int64_t c = code;
    for (int t = 0; t < f; ++t) {
      poly[t] = static_cast<int>(c % p);
      c /= p;
    }
    poly[f] = 1;
    if (is_irreducible_mod_p(poly, p)) return poly;
  }
  throw Error(ErrorCode::invalid_parameters, "no irreducible polynomial found");
}

ChainRing ChainRing::make(const RingParams& params) { return make(params.p, params.f, params.e, params.n); }

ChainRing ChainRing::make(int p, int f, std::optional<int> e, int n) {
  if (!is_prime(p)) throw Error(ErrorCode::invalid_parameters, "p must be prime, got " + std::to_string(p));
  if (f < 1) throw Error(ErrorCode::invalid_parameters, "f must be positive");
  if (n < 1) throw Error(ErrorCode::invalid_parameters, "n must be positive");
  if (e && *e < 1) throw Error(ErrorCode::invalid_parameters, "e must be positive or inf");

  ChainRing ring;
  ring.params_ = RingParams{p, f, e, n};
  ring.q_ = ipow(p, f);
  ring.size_ = ipow(ring.q_, n);
  if (ring.size_ > (std::int64_t{1} << 40)) {
    throw Error(ErrorCode::cap_exceeded, "ring too large to index: q^n = " + std::to_string(ring.size_));
  }
  ring.h_ = least_irreducible_poly(p, f);

  // Cyclic components of (R, +): omega_i * pi^t for t below the carry span.
  const int span = e ? std::min(*e, n) : n;
  ring.add_components_per_omega_ = span;
  ring.add_moduli_.clear();
  for (int i = 0; i < f; ++i) {
    for (int t = 0; t < span; ++t) {
      const int m = e ? (n - t + *e - 1) / *e : 1;
      ring.add_moduli_.push_back(ipow(p, m));
    }
  }
  ring.add_exponent_ = e ? ipow(p, (n + *e - 1) / *e) : p;
  return ring;
}

RingElem ChainRing::normalize(std::vector<std::int64_t> raw) const {
  const int f = params_.f;
  const int n = params_.n;
  const int p = params_.p;
  RingElem out;
  out.coords.assign(static_cast<std::size_t>(f) * n, 0);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < f; ++i) {
      const std::int64_t c = raw[static_cast<std::size_t>(j) * f + i];
      const std::int64_t digit = floor_mod(c, p);
      const std::int64_t carry = floor_div(c, p);
      out.coords[static_cast<std::size_t>(j) * f + i] = static_cast<int>(digit);
      if (carry != 0 && params_.e && j + *params_.e < n) {
        raw[static_cast<std::size_t>(j + *params_.e) * f + i] += carry;
      }
    }
  }
  return out;
}

RingElem ChainRing::zero() const { return RingElem{std::vector<int>(static_cast<std::size_t>(coord_count()), 0)}; }

RingElem ChainRing::one() const { return omega_pi(0, 0); }

RingElem ChainRing::uniformizer() const { return omega_pi(0, 1); }

RingElem ChainRing::omega_pi(int i, int j) const {
  RingElem out = zero();
  if (j < params_.n) out.coords[static_cast<std::size_t>(j) * params_.f + i] = 1;
  return out;
}

RingElem ChainRing::from_int(std::int64_t value) const {
  std::vector<std::int64_t> raw(static_cast<std::size_t>(coord_count()), 0);
  raw[0] = value;
  return normalize(std::move(raw));
}

RingElem ChainRing::add(const RingElem& a, const RingElem& b) const {
  std::vector<std::int64_t> raw(a.coords.begin(), a.coords.end());
  for (std::size_t t = 0; t < raw.size(); ++t) raw[t] += b.coords[t];
  return normalize(std::move(raw));
}

RingElem ChainRing::neg(const RingElem& a) const {
  std::vector<std::int64_t> raw(a.coords.size());
  for (std::size_t t = 0; t < raw.size(); ++t) raw[t] = -a.coords[t];
  return normalize(std::move(raw));
}

RingElem ChainRing::sub(const RingElem& a, const RingElem& b) const { return add(a, neg(b)); }

RingElem ChainRing::scale(const RingElem& a, std::int64_t k) const {
  std::vector<std::int64_t> raw(a.coords.size());
  for (std::size_t t = 0; t < raw.size(); ++t) raw[t] = checked_mul(a.coords[t], k);
  return normalize(std::move(raw));
}

RingElem ChainRing::mul(const RingElem& a, const RingElem& b) const {
  const int f = params_.f;
  const int n = params_.n;
  std::vector<std::int64_t> raw(static_cast<std::size_t>(f) * n, 0);
  std::vector<std::int64_t> prod(static_cast<std::size_t>(2 * f - 1), 0);
  for (int j1 = 0; j1 < n; ++j1) {
    for (int j2 = 0; j1 + j2 < n; ++j2) {
      const int* da = &a.coords[static_cast<std::size_t>(j1) * f];
      const int* db = &b.coords[static_cast<std::size_t>(j2) * f];
      std::fill(prod.begin(), prod.end(), 0);
      bool any = false;
      for (int s = 0; s < f; ++s) {
        if (da[s] == 0) continue;
        for (int t = 0; t < f; ++t) {
          if (db[t] == 0) continue;
          prod[s + t] += static_cast<std::int64_t>(da[s]) * db[t];
          any = true;
        }
      }
      if (!any) continue;
      // Reduce modulo the monic h over the integers: y^f = -(h_0 + ... + h_{f-1} y^{f-1}).
      for (int d = 2 * f - 2; d >= f; --d) {
        const std::int64_t c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (int t = 0; t < f; ++t) prod[d - f + t] -= c * h_[t];
      }
      for (int t = 0; t < f; ++t) raw[static_cast<std::size_t>(j1 + j2) * f + t] += prod[t];
    }
  }
  return normalize(std::move(raw));
}

int ChainRing::valuation(const RingElem& a) const {
  const int f = params_.f;
  for (int j = 0; j < params_.n; ++j) {
    for (int i = 0; i < f; ++i) {
      if (a.coords[static_cast<std::size_t>(j) * f + i] != 0) return j;
    }
  }
  return params_.n;
}

std::int64_t ChainRing::index_of(const RingElem& a) const {
  std::int64_t idx = 0;
  for (auto it = a.coords.rbegin(); it != a.coords.rend(); ++it) idx = idx * params_.p + *it;
  return idx;
}

RingElem ChainRing::element(std::int64_t index) const {
  RingElem out = zero();
  for (auto& c : out.coords) {
    c = static_cast<int>(index % params_.p);
    index /= params_.p;
  }
  return out;
}

std::vector<RingElem> ChainRing::elements() const {
  std::vector<RingElem> out;
  out.reserve(static_cast<std::size_t>(size_));
  for (std::int64_t idx = 0; idx < size_; ++idx) out.push_back(element(idx));
  return out;
}

std::vector<RingElem> ChainRing::units() const {
  std::vector<RingElem> out;
  for (std::int64_t idx = 0; idx < size_; ++idx) {
    RingElem a = element(idx);
    if (is_unit(a)) out.push_back(std::move(a));
  }
  return out;
}

std::vector<RingElem> ChainRing::omega_units() const {
  std::vector<RingElem> out;
  for (int i = 0; i < params_.f; ++i) out.push_back(omega_pi(i, 0));
  return out;
}

std::vector<RingElem> ChainRing::ideal(int j) const {
  std::vector<RingElem> out;
  for (std::int64_t idx = 0; idx < size_; ++idx) {
    RingElem a = element(idx);
    if (valuation(a) >= j) out.push_back(std::move(a));
  }
  return out;
}

std::vector<std::int64_t> ChainRing::additive_coords(const RingElem& a) const {
  const int f = params_.f;
  const int n = params_.n;
  const int span = add_components_per_omega_;
  const int step = params_.e ? *params_.e : n;
  std::vector<std::int64_t> out(static_cast<std::size_t>(f) * span, 0);
  for (int i = 0; i < f; ++i) {
    for (int t = 0; t < span; ++t) {
      std::int64_t value = 0;
      std::int64_t weight = 1;
      for (int j = t; j < n; j += step) {
        value += weight * a.coords[static_cast<std::size_t>(j) * f + i];
        weight *= params_.p;
      }
      out[static_cast<std::size_t>(i) * span + t] = value;
    }
  }
  return out;
}

nlohmann::json ChainRing::to_json(const RingElem& a) const { return a.coords; }

RingElem ChainRing::elem_from_json(const nlohmann::json& j) const {
  RingElem out;
  try {
    out.coords = j.get<std::vector<int>>();
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::parse_error, ex.what());
  }
  if (static_cast<int>(out.coords.size()) != coord_count()) {
    throw Error(ErrorCode::parse_error, "element has wrong coordinate count");
  }
  for (int c : out.coords) {
    if (c < 0 || c >= params_.p) throw Error(ErrorCode::parse_error, "digit out of range");
  }
  return out;
}

std::string ChainRing::describe() const {
  std::ostringstream os;
  const auto& pr = params_;
  if (pr.equal_characteristic()) {
    os << "F_" << q_ << "[T]/(T^" << pr.n << ")";
  } else if (*pr.e == 1) {
    if (pr.f == 1) {
      os << "Z/" << size_;
    } else {
      os << "GR(" << ipow(pr.p, pr.n) << "," << pr.f << ")";
    }
  } else {
    os << "GR(" << ipow(pr.p, (pr.n + *pr.e - 1) / *pr.e) << "," << pr.f << ")[x]/(x^" << *pr.e << "-" << pr.p
       << ", x^" << pr.n << ")";
  }
  return os.str();
}

RingTables::RingTables(const ChainRing& ring) {
  if (ring.size() > kMaxSize) {
    throw Error(ErrorCode::cap_exceeded, "ring of size " + std::to_string(ring.size()) + " exceeds table cap");
  }
  size_ = static_cast<int>(ring.size());
  const auto elems = ring.elements();
  add_.resize(static_cast<std::size_t>(size_) * size_);
  mul_.resize(static_cast<std::size_t>(size_) * size_);
  neg_.resize(size_);
  val_.resize(size_);
  for (int a = 0; a < size_; ++a) {
    neg_[a] = static_cast<int>(ring.index_of(ring.neg(elems[a])));
    val_[a] = ring.valuation(elems[a]);
    for (int b = 0; b < size_; ++b) {
      add_[static_cast<std::size_t>(a) * size_ + b] = static_cast<int>(ring.index_of(ring.add(elems[a], elems[b])));
      mul_[static_cast<std::size_t>(a) * size_ + b] = static_cast<int>(ring.index_of(ring.mul(elems[a], elems[b])));
    }
  }
  one_ = static_cast<int>(ring.index_of(ring.one()));
}

namespace {

bool consistent(const RingTables& a, const RingTables& b, const std::vector<int>& img, int x) {
  for (int y = 0; y <= x; ++y) {
    const int s = a.add(x, y);
    if (s <= x && img[s] != b.add(img[x], img[y])) return false;
    const int m = a.mul(x, y);
    if (m <= x && img[m] != b.mul(img[x], img[y])) return false;
  }
  return true;
}

bool extend_iso(const RingTables& a, const RingTables& b, std::vector<int>& img, std::vector<bool>& used, int x) {
  if (x == a.size()) return true;
  for (int t = 0; t < b.size(); ++t) {
    if (used[t]) continue;
    if (x == a.one() && t != b.one()) continue;
    img[x] = t;
    used[t] = true;
    if (consistent(a, b, img, x) && extend_iso(a, b, img, used, x + 1)) return true;
    used[t] = false;
  }
  img[x] = -1;
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_ring_isomorphism(const RingTables& a, const RingTables& b) {
  if (a.size() != b.size()) return std::nullopt;
  if (a.size() > 64) throw Error(ErrorCode::cap_exceeded, "isomorphism search limited to 64 elements");
  std::vector<int> img(static_cast<std::size_t>(a.size()), -1);
  std::vector<bool> used(static_cast<std::size_t>(b.size()), false);
  if (!extend_iso(a, b, img, used, 0)) return std::nullopt;
  return img;
}

}  // namespace faithrep
