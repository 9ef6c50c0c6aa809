#include "faithrep/families.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <numeric>
#include <sstream>

#include "faithrep/arith.hpp"
#include "faithrep/error.hpp"

namespace faithrep {

namespace {

void require_cap(std::int64_t order, const std::string& name) {
  if (order > oracle_cap()) {
    throw Error(ErrorCode::cap_exceeded,
                name + " has order " + std::to_string(order) + " above cap " + std::to_string(oracle_cap()));
  }
}

}  // namespace

// ---------------------------------------------------------------- Heisenberg

HeisenbergGroup::HeisenbergGroup(ChainRing ring, int k)
    : ring_(std::move(ring)), tables_(std::make_shared<RingTables>(ring_)), k_(k) {
  if (k < 1) throw Error(ErrorCode::invalid_parameters, "Heisenberg rank k must be positive");
  order_ = ipow(ring_.size(), 2 * k + 1);
}

HeisElem HeisenbergGroup::identity() const { return HeisElem{std::vector<int>(k_, 0), std::vector<int>(k_, 0), 0}; }

HeisElem HeisenbergGroup::mul(const HeisElem& a, const HeisElem& b) const {
  const auto& t = *tables_;
  HeisElem out;
  out.x.resize(k_);
  out.y.resize(k_);
  int z = t.add(a.z, b.z);
  for (int i = 0; i < k_; ++i) {
    out.x[i] = t.add(a.x[i], b.x[i]);
    out.y[i] = t.add(a.y[i], b.y[i]);
    z = t.add(z, t.mul(a.x[i], b.y[i]));
  }
  out.z = z;
  return out;
}

HeisElem HeisenbergGroup::inv(const HeisElem& a) const {
  // (x,y,z)^-1 = (-x, -y, -z + x y^T)
  const auto& t = *tables_;
  HeisElem out;
  out.x.resize(k_);
  out.y.resize(k_);
  int z = t.neg(a.z);
  for (int i = 0; i < k_; ++i) {
    out.x[i] = t.neg(a.x[i]);
    out.y[i] = t.neg(a.y[i]);
    z = t.add(z, t.mul(a.x[i], a.y[i]));
  }
  out.z = z;
  return out;
}

HeisElem HeisenbergGroup::commutator(const HeisElem& a, const HeisElem& b) const {
  return mul(mul(a, b), mul(inv(a), inv(b)));
}

std::int64_t HeisenbergGroup::encode(const HeisElem& h) const {
  const std::int64_t s = ring_.size();
  std::int64_t idx = 0;
  for (int v : h.x) idx = idx * s + v;
  for (int v : h.y) idx = idx * s + v;
  return idx * s + h.z;
}

HeisElem HeisenbergGroup::decode(std::int64_t index) const {
  const std::int64_t s = ring_.size();
  HeisElem out;
  out.x.resize(k_);
  out.y.resize(k_);
  out.z = static_cast<int>(index % s);
  index /= s;
  for (int i = k_ - 1; i >= 0; --i) {
    out.y[i] = static_cast<int>(index % s);
    index /= s;
  }
  for (int i = k_ - 1; i >= 0; --i) {
    out.x[i] = static_cast<int>(index % s);
    index /= s;
  }
  return out;
}

FiniteGroup HeisenbergGroup::materialize() const {
  require_cap(order_, name());
  const int n = static_cast<int>(order_);
  std::vector<HeisElem> elems;
  elems.reserve(n);
  for (int i = 0; i < n; ++i) elems.push_back(decode(i));
  return FiniteGroup::from_operation(name(), n, [&](int a, int b) { return static_cast<int>(encode(mul(elems[a], elems[b]))); });
}

std::vector<int> HeisenbergGroup::subgroup_a() const {
  std::vector<int> out;
  for (std::int64_t i = 0; i < order_; ++i) {
    const auto h = decode(i);
    if (std::all_of(h.y.begin(), h.y.end(), [](int v) { return v == 0; })) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<int> HeisenbergGroup::subgroup_l() const {
  std::vector<int> out;
  for (std::int64_t i = 0; i < order_; ++i) {
    const auto h = decode(i);
    if (h.z == 0 && std::all_of(h.x.begin(), h.x.end(), [](int v) { return v == 0; })) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<int> HeisenbergGroup::subgroup_z() const {
  std::vector<int> out;
  for (int z = 0; z < ring_.size(); ++z) out.push_back(z);
  return out;
}

std::string HeisenbergGroup::name() const {
  return "Hei_" + std::to_string(2 * k_ + 1) + "(" + ring_.describe() + ")";
}

// ------------------------------------------------------------ Unitriangular

UnitriangularGroup::UnitriangularGroup(ChainRing ring, int size)
    : ring_(std::move(ring)), tables_(std::make_shared<RingTables>(ring_)), size_(size) {
  if (size < 3) throw Error(ErrorCode::invalid_parameters, "unitriangular size must be at least 3");
  order_ = ipow(ring_.size(), entry_count());
}

int UnitriangularGroup::entry_position(int row, int col) const {
  // row-major over the strict upper triangle
  return row * size_ - row * (row + 1) / 2 + (col - row - 1);
}

std::vector<int> UnitriangularGroup::mul(const std::vector<int>& a, const std::vector<int>& b) const {
  const auto& t = *tables_;
  std::vector<int> out(entry_count());
  for (int i = 0; i < size_; ++i) {
    for (int j = i + 1; j < size_; ++j) {
      int v = t.add(a[entry_position(i, j)], b[entry_position(i, j)]);
      for (int l = i + 1; l < j; ++l) v = t.add(v, t.mul(a[entry_position(i, l)], b[entry_position(l, j)]));
      out[entry_position(i, j)] = v;
    }
  }
  return out;
}

std::int64_t UnitriangularGroup::encode(const std::vector<int>& entries) const {
  std::int64_t idx = 0;
  for (int v : entries) idx = idx * ring_.size() + v;
  return idx;
}

std::vector<int> UnitriangularGroup::decode(std::int64_t index) const {
  std::vector<int> out(entry_count());
  for (int t = entry_count() - 1; t >= 0; --t) {
    out[t] = static_cast<int>(index % ring_.size());
    index /= ring_.size();
  }
  return out;
}

FiniteGroup UnitriangularGroup::materialize() const {
  require_cap(order_, name());
  const int n = static_cast<int>(order_);
  std::vector<std::vector<int>> elems;
  elems.reserve(n);
  for (int i = 0; i < n; ++i) elems.push_back(decode(i));
  return FiniteGroup::from_operation(name(), n, [&](int a, int b) { return static_cast<int>(encode(mul(elems[a], elems[b]))); });
}

std::vector<int> UnitriangularGroup::embedded_heisenberg() const {
  std::vector<int> out;
  for (std::int64_t i = 0; i < order_; ++i) {
    const auto m = decode(i);
    bool ok = true;
    for (int r = 1; r < size_ - 1 && ok; ++r) {
      for (int c = r + 1; c < size_ - 1 && ok; ++c) ok = m[entry_position(r, c)] == 0;
    }
    if (ok) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::int64_t UnitriangularGroup::embed(const HeisElem& h) const {
  const int k = size_ - 2;
  std::vector<int> m(entry_count(), 0);
  for (int i = 0; i < k; ++i) {
    m[entry_position(0, i + 1)] = h.x[i];
    m[entry_position(i + 1, size_ - 1)] = h.y[i];
  }
  m[entry_position(0, size_ - 1)] = h.z;
  return encode(m);
}

void UnitriangularGroup::require_odd_residue_characteristic() const {
  if (ring_.p() == 2) {
    throw Error(ErrorCode::char2_unsupported, "residue characteristic 2 is excluded for unitriangular results");
  }
}

std::string UnitriangularGroup::name() const { return "U_" + std::to_string(size_) + "(" + ring_.describe() + ")"; }

// ------------------------------------------------------------------- Affine

AffineGroup::AffineGroup(ChainRing ring) : ring_(std::move(ring)), tables_(std::make_shared<RingTables>(ring_)) {
  unit_position_.assign(static_cast<std::size_t>(ring_.size()), -1);
  for (int a = 0; a < ring_.size(); ++a) {
    if (tables_->valuation(a) == 0) {
      unit_position_[a] = static_cast<int>(units_.size());
      units_.push_back(a);
    }
  }
  order_ = ring_.size() * static_cast<std::int64_t>(units_.size());
}

std::int64_t AffineGroup::encode(int a, int u) const { return static_cast<std::int64_t>(a) * unit_count() + unit_position_[u]; }

std::pair<int, int> AffineGroup::decode(std::int64_t index) const {
  return {static_cast<int>(index / unit_count()), units_[index % unit_count()]};
}

FiniteGroup AffineGroup::materialize() const {
  require_cap(order_, name());
  const auto& t = *tables_;
  return FiniteGroup::from_operation(name(), static_cast<int>(order_), [&](int x, int y) {
    const auto [a1, u1] = decode(x);
    const auto [a2, u2] = decode(y);
    return static_cast<int>(encode(t.add(a1, t.mul(u1, a2)), t.mul(u1, u2)));
  });
}

std::vector<int> AffineGroup::translations() const {
  std::vector<int> out;
  for (int a = 0; a < ring_.size(); ++a) out.push_back(static_cast<int>(encode(a, tables_->one())));
  std::sort(out.begin(), out.end());
  return out;
}

std::string AffineGroup::name() const { return "Aff(" + ring_.describe() + ")"; }

// ---------------------------------------------------------------------- GL2

FiniteGroup general_linear_2(const ChainRing& ring) {
  const RingTables t(ring);
  const int s = t.size();
  std::vector<std::array<int, 4>> mats;
  std::vector<int> index_of(static_cast<std::size_t>(s) * s * s * s, -1);
  for (int a = 0; a < s; ++a) {
    for (int b = 0; b < s; ++b) {
      for (int c = 0; c < s; ++c) {
        for (int d = 0; d < s; ++d) {
          const int det = t.sub(t.mul(a, d), t.mul(b, c));
          if (t.valuation(det) != 0) continue;
          index_of[((static_cast<std::size_t>(a) * s + b) * s + c) * s + d] = static_cast<int>(mats.size());
          mats.push_back({a, b, c, d});
        }
      }
    }
  }
  const std::string name = "GL_2(" + ring.describe() + ")";
  require_cap(static_cast<std::int64_t>(mats.size()), name);
  return FiniteGroup::from_operation(name, static_cast<int>(mats.size()), [&](int x, int y) {
    const auto& m = mats[x];
    const auto& w = mats[y];
    const int a = t.add(t.mul(m[0], w[0]), t.mul(m[1], w[2]));
    const int b = t.add(t.mul(m[0], w[1]), t.mul(m[1], w[3]));
    const int c = t.add(t.mul(m[2], w[0]), t.mul(m[3], w[2]));
    const int d = t.add(t.mul(m[2], w[1]), t.mul(m[3], w[3]));
    return index_of[((static_cast<std::size_t>(a) * s + b) * s + c) * s + d];
  });
}

// ------------------------------------------------------- cyclic extensions

int CyclicAction::h_order() const {
  int out = 1;
  for (int h : h_orders) out *= h;
  return out;
}

std::vector<int> CyclicAction::orbit_of_generator() const {
  std::vector<int> orbit{1 % modulus};
  std::vector<bool> seen(modulus, false);
  seen[1 % modulus] = true;
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (int m : multipliers) {
      const int next = static_cast<int>(floor_mod(static_cast<std::int64_t>(orbit[head]) * m, modulus));
      if (!seen[next]) {
        seen[next] = true;
        orbit.push_back(next);
      }
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

bool CyclicAction::is_faithful() const {
  // The orbit of 1 is the image of H in (Z/N)^x.
  return static_cast<int>(orbit_of_generator().size()) == h_order();
}

FiniteGroup cyclic_semidirect(const CyclicAction& action) {
  const int modulus = action.modulus;
  if (modulus < 1) throw Error(ErrorCode::invalid_parameters, "cyclic modulus must be positive");
  if (action.h_orders.size() != action.multipliers.size()) {
    throw Error(ErrorCode::invalid_parameters, "need one multiplier per cyclic factor of H");
  }
  for (std::size_t i = 0; i < action.h_orders.size(); ++i) {
    const int m = action.multipliers[i];
    if (action.h_orders[i] < 1 || gcd64(m, modulus) != 1 ||
        powmod(m, action.h_orders[i], modulus) != 1 % modulus) {
      throw Error(ErrorCode::invalid_parameters, "multiplier " + std::to_string(m) + " does not define an action");
    }
  }
  const int hsize = action.h_order();
  const int order = modulus * hsize;
  std::ostringstream name;
  name << "Z/" << modulus << " x| H(";
  for (std::size_t i = 0; i < action.h_orders.size(); ++i) {
    name << (i ? "," : "") << action.h_orders[i] << ":" << action.multipliers[i];
  }
  name << ")";
  require_cap(order, name.str());

  // Decode H index into exponent vector (last factor least significant).
  auto h_decode = [&](int idx) {
    std::vector<int> v(action.h_orders.size());
    for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i) {
      v[i] = idx % action.h_orders[i];
      idx /= action.h_orders[i];
    }
    return v;
  };
  std::vector<int> h_mult(hsize);
  std::vector<std::vector<int>> h_vecs(hsize);
  for (int h = 0; h < hsize; ++h) {
    h_vecs[h] = h_decode(h);
    std::int64_t m = 1 % modulus;
    for (std::size_t i = 0; i < h_vecs[h].size(); ++i) {
      m = m * powmod(action.multipliers[i], h_vecs[h][i], modulus) % modulus;
    }
    h_mult[h] = static_cast<int>(m);
  }
  auto h_mul = [&](int a, int b) {
    int idx = 0;
    for (std::size_t i = 0; i < action.h_orders.size(); ++i) {
      idx = idx * action.h_orders[i] + (h_vecs[a][i] + h_vecs[b][i]) % action.h_orders[i];
    }
    return idx;
  };
  return FiniteGroup::from_operation(name.str(), order, [&](int x, int y) {
    const int c1 = x / hsize, h1 = x % hsize;
    const int c2 = y / hsize, h2 = y % hsize;
    const int c = static_cast<int>((c1 + static_cast<std::int64_t>(h_mult[h1]) * c2) % modulus);
    return c * hsize + h_mul(h1, h2);
  });
}

FiniteGroup dicyclic(int n) {
  if (n < 1) throw Error(ErrorCode::invalid_parameters, "dicyclic parameter must be positive");
  const int m = 2 * n;
  // element (i, j) = a^i x^j, index 2 i + j
  return FiniteGroup::from_operation("Dic_" + std::to_string(n), 4 * n, [&](int u, int v) {
    const int i1 = u / 2, j1 = u % 2, i2 = v / 2, j2 = v % 2;
    if (j1 == 0) return static_cast<int>(floor_mod(i1 + i2, m)) * 2 + j2;
    if (j2 == 0) return static_cast<int>(floor_mod(i1 - i2, m)) * 2 + 1;
    return static_cast<int>(floor_mod(i1 - i2 + n, m)) * 2;
  });
}

FiniteGroup dihedral(int n) {
  return cyclic_semidirect(CyclicAction{n, {2}, {n - 1}});
}

FiniteGroup abelian_product(const std::vector<int>& cyclic_orders) {
  int order = 1;
  std::string name = "Z";
  for (std::size_t i = 0; i < cyclic_orders.size(); ++i) {
    if (cyclic_orders[i] < 1) throw Error(ErrorCode::invalid_parameters, "cyclic order must be positive");
    order = static_cast<int>(checked_mul(order, cyclic_orders[i]));
    name += (i ? "x" : "/") + std::to_string(cyclic_orders[i]);
  }
  require_cap(order, name);
  return FiniteGroup::from_operation(name, order, [&](int a, int b) {
    int idx = 0;
    int ra = a, rb = b;
    int weight = 1;
    for (int i = static_cast<int>(cyclic_orders.size()) - 1; i >= 0; --i) {
      const int m = cyclic_orders[i];
      idx += ((ra % m + rb % m) % m) * weight;
      weight *= m;
      ra /= m;
      rb /= m;
    }
    return idx;
  });
}

// ------------------------------------------------------------ spec strings

int GroupSpec::int_arg(const std::string& key, int fallback) const {
  auto it = args.find(key);
  if (it == args.end()) return fallback;
  try {
    std::size_t used = 0;
    const int v = std::stoi(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument(it->second);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::parse_error, "argument " + key + " must be an integer in '" + text + "'");
  }
}

std::vector<int> GroupSpec::list_arg(const std::string& key) const {
  auto it = args.find(key);
  if (it == args.end()) throw Error(ErrorCode::parse_error, "missing argument " + key + " in '" + text + "'");
  std::vector<int> out;
  std::stringstream ss(it->second);
  std::string item;
  while (std::getline(ss, item, '.')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw Error(ErrorCode::parse_error, "bad list entry '" + item + "' in '" + text + "'");
    }
  }
  return out;
}

RingParams GroupSpec::ring_params() const {
  RingParams r;
  if (!has("p")) throw Error(ErrorCode::parse_error, "missing p in '" + text + "'");
  r.p = int_arg("p", 2);
  r.f = int_arg("f", 1);
  r.n = int_arg("n", 1);
  auto it = args.find("e");
  r.e = it == args.end() ? std::optional<int>(1) : parse_ramification(it->second);
  return r;
}

GroupSpec parse_group_spec(const std::string& text) {
  GroupSpec spec;
  spec.text = text;
  const auto colon = text.find(':');
  spec.family = text.substr(0, colon);
  if (spec.family.empty()) throw Error(ErrorCode::parse_error, "empty group family in '" + text + "'");
  if (colon == std::string::npos) return spec;
  std::stringstream ss(text.substr(colon + 1));
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::parse_error, "expected key=value, got '" + item + "'");
    spec.args[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return spec;
}

FiniteGroup build_group(const GroupSpec& spec) {
  const auto& fam = spec.family;
  if (fam == "heis") return HeisenbergGroup(ChainRing::make(spec.ring_params()), spec.int_arg("k", 1)).materialize();
  if (fam == "unitri") {
    return UnitriangularGroup(ChainRing::make(spec.ring_params()), spec.int_arg("size", 3)).materialize();
  }
  if (fam == "aff") return AffineGroup(ChainRing::make(spec.ring_params())).materialize();
  if (fam == "gl2") return general_linear_2(ChainRing::make(spec.ring_params()));
  if (fam == "sdp") {
    CyclicAction action{spec.int_arg("N", 1), spec.list_arg("h"), spec.list_arg("mult")};
    return cyclic_semidirect(action);
  }
  if (fam == "dihedral") return dihedral(spec.int_arg("n", 4));
  if (fam == "dicyclic") return dicyclic(spec.int_arg("n", 2));
  if (fam == "abelian") return abelian_product(spec.list_arg("orders"));
  if (fam == "table") {
    auto it = spec.args.find("path");
    if (it == spec.args.end()) throw Error(ErrorCode::parse_error, "table group needs path=<file>");
    std::ifstream in(it->second);
    if (!in) throw Error(ErrorCode::parse_error, "cannot open " + it->second);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& ex) {
      throw Error(ErrorCode::parse_error, ex.what());
    }
    return FiniteGroup::from_json(j);
  }
  throw Error(ErrorCode::parse_error, "unknown group family '" + fam + "'");
}

}  // namespace faithrep
