#include "faithrep/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "faithrep/arith.hpp"
#include "faithrep/error.hpp"

namespace faithrep {

std::vector<Cyclotomic> CharacterTable::row_by_element(int irrep) const {
  std::vector<Cyclotomic> out;
  out.reserve(class_of.size());
  for (int c : class_of) out.push_back(chars[irrep][c]);
  return out;
}

nlohmann::json CharacterTable::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : chars) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& v : row) r.push_back(v.to_string());
    rows.push_back(r);
  }
  return {{"order", group_order}, {"class_reps", class_reps}, {"class_sizes", class_sizes},
          {"dims", dims},         {"chars", rows}};
}

std::string CharacterTable::to_csv() const {
  std::ostringstream os;
  os << "irrep,dim";
  for (std::size_t c = 0; c < class_reps.size(); ++c) os << ",c" << c << "(rep=" << class_reps[c] << ";size=" << class_sizes[c] << ")";
  os << "\n";
  for (int i = 0; i < count(); ++i) {
    os << i << "," << dims[i];
    for (const auto& v : chars[i]) os << "," << v.to_string();
    os << "\n";
  }
  return os.str();
}

namespace {

using Mat = std::vector<std::vector<std::int64_t>>;
using Vec = std::vector<std::int64_t>;

struct Field {
  std::int64_t l;
  std::int64_t mul(std::int64_t a, std::int64_t b) const { return a * b % l; }
  std::int64_t add(std::int64_t a, std::int64_t b) const { return (a + b) % l; }
  std::int64_t sub(std::int64_t a, std::int64_t b) const { return (a - b + l) % l; }
  std::int64_t inv(std::int64_t a) const { return powmod(a, l - 2, l); }
};

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(Mat& m, const Field& F) {
  std::vector<int> pivots;
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return pivots;
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i) {
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    const auto inv = F.inv(m[r][c]);
    for (auto& x : m[r]) x = F.mul(x, inv);
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const auto f = m[i][c];
      for (int t = c; t < cols; ++t) m[i][t] = F.sub(m[i][t], F.mul(f, m[r][t]));
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(static_cast<std::size_t>(r));
  return pivots;
}

// Basis of {x : m x = 0}.
std::vector<Vec> nullspace(Mat m, const Field& F) {
  const int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
  const auto pivots = rref(m, F);
  std::vector<bool> is_piv(static_cast<std::size_t>(cols), false);
  for (int c : pivots) is_piv[c] = true;
  std::vector<Vec> out;
  for (int free = 0; free < cols; ++free) {
    if (is_piv[free]) continue;
    Vec v(static_cast<std::size_t>(cols), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F.sub(0, m[r][free]);
    out.push_back(std::move(v));
  }
  return out;
}

// Characteristic polynomial via Hessenberg reduction, low degree first.
Vec charpoly(Mat h, const Field& F) {
  const int n = static_cast<int>(h.size());
  for (int i = 0; i < n - 2; ++i) {
    int piv = -1;
    for (int r = i + 1; r < n; ++r) {
      if (h[r][i] != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != i + 1) {
      std::swap(h[piv], h[i + 1]);
      for (int r = 0; r < n; ++r) std::swap(h[r][piv], h[r][i + 1]);
    }
    const auto inv = F.inv(h[i + 1][i]);
    for (int r = i + 2; r < n; ++r) {
      if (h[r][i] == 0) continue;
      const auto f = F.mul(h[r][i], inv);
      for (int c = 0; c < n; ++c) h[r][c] = F.sub(h[r][c], F.mul(f, h[i + 1][c]));
      for (int c = 0; c < n; ++c) h[c][i + 1] = F.add(h[c][i + 1], F.mul(f, h[c][r]));
    }
  }
  // p_m(x) = (x - h_mm) p_(m-1) - sum_i h_(m-i, m) prod(subdiagonal) p_(m-i-1)
  std::vector<Vec> p(static_cast<std::size_t>(n) + 1);
  p[0] = {1};
  for (int m = 1; m <= n; ++m) {
    Vec cur(static_cast<std::size_t>(m) + 1, 0);
    for (std::size_t t = 0; t < p[m - 1].size(); ++t) {
      cur[t + 1] = F.add(cur[t + 1], p[m - 1][t]);
      cur[t] = F.sub(cur[t], F.mul(h[m - 1][m - 1], p[m - 1][t]));
    }
    std::int64_t prod = 1;
    for (int i = 1; i < m; ++i) {
      prod = F.mul(prod, h[m - i][m - i - 1]);
      const auto coef = F.mul(h[m - i - 1][m - 1], prod);
      if (coef == 0) continue;
      for (std::size_t t = 0; t < p[m - i - 1].size(); ++t) cur[t] = F.sub(cur[t], F.mul(coef, p[m - i - 1][t]));
    }
    p[m] = std::move(cur);
  }
  return p[n];
}

std::int64_t eval_poly(const Vec& poly, std::int64_t x, const Field& F) {
  std::int64_t acc = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = F.add(F.mul(acc, x), *it);
  return acc;
}

std::int64_t primitive_root(std::int64_t l) {
  std::vector<std::int64_t> factors;
  std::int64_t m = l - 1;
  for (std::int64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) factors.push_back(m);
  for (std::int64_t g = 2;; ++g) {
    if (std::all_of(factors.begin(), factors.end(), [&](std::int64_t f) { return powmod(g, (l - 1) / f, l) != 1; })) return g;
  }
}

// Subspace with a reduced echelon basis: basis[t][pivots[t]] == 1 and zero at other pivots.
struct Subspace {
  std::vector<Vec> basis;
  std::vector<int> pivots;
};

Subspace make_subspace(std::vector<Vec> vecs, const Field& F) {
  Mat m(vecs.begin(), vecs.end());
  Subspace s;
  s.pivots = rref(m, F);
  s.basis.assign(m.begin(), m.end());
  return s;
}

struct DixonFailure {};

class Dixon {
 public:
  Dixon(const FiniteGroup& g, const ConjugacyClasses& cls, std::int64_t l)
      : g_(g), cls_(cls), h_(cls.count()), F_{l}, class_mats_(static_cast<std::size_t>(h_)) {}

  // Rows are the central-character vectors omega(C_l), normalized at the identity class.
  std::vector<Vec> run() {
    std::vector<Subspace> spaces;
    {
      std::vector<Vec> id;
      for (int i = 0; i < h_; ++i) {
        Vec v(static_cast<std::size_t>(h_), 0);
        v[i] = 1;
        id.push_back(std::move(v));
      }
      spaces.push_back(make_subspace(std::move(id), F_));
    }
    for (int j = 1; j < h_; ++j) {
      if (std::all_of(spaces.begin(), spaces.end(), [](const Subspace& s) { return s.basis.size() == 1; })) break;
      std::vector<Subspace> next;
      for (auto& s : spaces) {
        if (s.basis.size() == 1) {
          next.push_back(std::move(s));
          continue;
        }
        auto parts = split(s, j);
        for (auto& p : parts) next.push_back(std::move(p));
      }
      spaces = std::move(next);
    }
    std::vector<Vec> out;
    for (auto& s : spaces) {
      if (s.basis.size() != 1) throw DixonFailure{};
      auto v = s.basis[0];
      if (v[0] == 0) throw DixonFailure{};
      const auto inv = F_.inv(v[0]);
      for (auto& x : v) x = F_.mul(x, inv);
      out.push_back(std::move(v));
    }
    return out;
  }

 private:
  const FiniteGroup& g_;
  const ConjugacyClasses& cls_;
  int h_;
  Field F_;
  std::vector<Mat> class_mats_;

  // (M_j)_(k,l) = #{x in C_j : x^-1 z_l in C_k}, z_l the class representative.
  const Mat& class_matrix(int j) {
    auto& m = class_mats_[j];
    if (!m.empty()) return m;
    m.assign(static_cast<std::size_t>(h_), Vec(static_cast<std::size_t>(h_), 0));
    for (int l = 0; l < h_; ++l) {
      const int z = cls_.representative[l];
      for (int x : cls_.classes[j]) ++m[cls_.class_of[g_.mul(g_.inv(x), z)]][l];
    }
    for (auto& row : m) {
      for (auto& v : row) v %= F_.l;
    }
    return m;
  }

  Vec apply(const Mat& m, const Vec& v) const {
    Vec out(static_cast<std::size_t>(h_), 0);
    for (int k = 0; k < h_; ++k) {
      std::int64_t acc = 0;
      for (int l = 0; l < h_; ++l) {
        if (m[k][l] != 0 && v[l] != 0) acc = (acc + m[k][l] * v[l]) % F_.l;
      }
      out[k] = acc;
    }
    return out;
  }

  std::vector<Subspace> split(const Subspace& s, int j) {
    const auto& m = class_matrix(j);
    const int d = static_cast<int>(s.basis.size());
    // X[t][u]: coordinate t of M b_u
    Mat x(static_cast<std::size_t>(d), Vec(static_cast<std::size_t>(d), 0));
    for (int u = 0; u < d; ++u) {
      const auto img = apply(m, s.basis[u]);
      for (int t = 0; t < d; ++t) x[t][u] = img[s.pivots[t]];
    }
    const auto poly = charpoly(x, F_);
    std::vector<std::int64_t> roots;
    for (std::int64_t lam = 0; lam < F_.l; ++lam) {
      if (eval_poly(poly, lam, F_) == 0) roots.push_back(lam);
    }
    if (roots.empty()) throw DixonFailure{};
    if (roots.size() == 1) return {s};
    std::vector<Subspace> out;
    int total = 0;
    for (auto lam : roots) {
      Mat shifted = x;
      for (int t = 0; t < d; ++t) shifted[t][t] = F_.sub(shifted[t][t], lam);
      std::vector<Vec> vecs;
      for (const auto& c : nullspace(shifted, F_)) {
        Vec w(static_cast<std::size_t>(h_), 0);
        for (int t = 0; t < d; ++t) {
          if (c[t] == 0) continue;
          for (int k = 0; k < h_; ++k) w[k] = F_.add(w[k], F_.mul(c[t], s.basis[t][k]));
        }
        vecs.push_back(std::move(w));
      }
      total += static_cast<int>(vecs.size());
      out.push_back(make_subspace(std::move(vecs), F_));
    }
    if (total != d) throw DixonFailure{};
    return out;
  }
};

std::int64_t next_dixon_prime(std::int64_t after, int exponent) {
  std::int64_t l = after + 1;
  l += floor_mod(1 - l, exponent);
  while (!is_prime(l)) l += exponent;
  return l;
}

CharacterTable table_mod(const FiniteGroup& g, const ConjugacyClasses& cls, std::int64_t l) {
  const int h = cls.count();
  const int e = g.exponent();
  const std::int64_t order = g.order();
  const Field F{l};
  auto omegas = Dixon(g, cls, l).run();
  if (static_cast<int>(omegas.size()) != h) throw DixonFailure{};

  std::vector<int> inverse_class(static_cast<std::size_t>(h));
  for (int c = 0; c < h; ++c) inverse_class[c] = cls.class_of[g.inv(cls.representative[c])];

  const auto root = powmod(primitive_root(l), (l - 1) / e, l);
  struct Row {
    int dim;
    Vec mod_values;
  };
  std::vector<Row> rows;
  const auto max_dim = static_cast<std::int64_t>(std::sqrt(static_cast<double>(order)) + 1);
  for (const auto& w : omegas) {
    std::int64_t s = 0;
    for (int c = 0; c < h; ++c) {
      s = F.add(s, F.mul(F.mul(w[c], w[inverse_class[c]]), F.inv(static_cast<std::int64_t>(cls.classes[c].size()) % l)));
    }
    if (s == 0) throw DixonFailure{};
    const auto d2 = F.mul(order % l, F.inv(s));
    int dim = 0;
    for (std::int64_t d = 1; d <= max_dim; ++d) {
      if (d * d % l == d2 && order % d == 0) {
        dim = static_cast<int>(d);
        break;
      }
    }
    if (dim == 0) throw DixonFailure{};
    Vec vals(static_cast<std::size_t>(h));
    for (int c = 0; c < h; ++c) {
      vals[c] = F.mul(F.mul(dim, w[c]), F.inv(static_cast<std::int64_t>(cls.classes[c].size()) % l));
    }
    rows.push_back({dim, std::move(vals)});
  }
  std::int64_t sum_sq = 0;
  for (const auto& r : rows) sum_sq += static_cast<std::int64_t>(r.dim) * r.dim;
  if (sum_sq != order) throw DixonFailure{};
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return a.dim != b.dim ? a.dim < b.dim : a.mod_values < b.mod_values;
  });

  CharacterTable t;
  t.group_order = static_cast<int>(order);
  t.exponent = e;
  t.prime = l;
  t.class_of = cls.class_of;
  for (int c = 0; c < h; ++c) {
    t.class_reps.push_back(cls.representative[c]);
    t.class_sizes.push_back(static_cast<int>(cls.classes[c].size()));
  }
  for (const auto& r : rows) {
    t.dims.push_back(r.dim);
    std::vector<Cyclotomic> values;
    for (int c = 0; c < h; ++c) {
      // eigenvalue multiplicities of rho(x): m_t = o^-1 sum_s chi(x^s) z^(-ts)
      const int x = cls.representative[c];
      const int o = g.element_order(x);
      const auto zo = powmod(root, e / o, l);
      const auto zo_inv = F.inv(zo);
      const auto o_inv = F.inv(o % l);
      std::vector<std::int64_t> raw(static_cast<std::size_t>(e), 0);
      for (int tt = 0; tt < o; ++tt) {
        std::int64_t acc = 0;
        const auto step = powmod(zo_inv, tt, l);
        std::int64_t zpow = 1;
        int xs = g.identity();
        for (int s = 0; s < o; ++s) {
          acc = F.add(acc, F.mul(r.mod_values[cls.class_of[xs]], zpow));
          zpow = F.mul(zpow, step);
          xs = g.mul(xs, x);
        }
        const auto m = F.mul(acc, o_inv);
        if (m > r.dim) throw DixonFailure{};
        raw[static_cast<std::size_t>(tt) * (e / o)] = m;
      }
      values.push_back(Cyclotomic::from_coefficients(e, std::move(raw)));
    }
    t.chars.push_back(std::move(values));
  }
  return t;
}

}  // namespace

CharacterTable character_table(const FiniteGroup& g) {
  if (g.order() > oracle_cap()) {
    throw Error(ErrorCode::cap_exceeded,
                g.name() + " has order " + std::to_string(g.order()) + " above cap " + std::to_string(oracle_cap()));
  }
  const auto cls = conjugacy_classes(g);
  const auto bound = static_cast<std::int64_t>(2.0 * std::sqrt(static_cast<double>(g.order())));
  std::int64_t l = next_dixon_prime(bound, g.exponent());
  for (int attempt = 0; attempt < 8; ++attempt) {
    try {
      return table_mod(g, cls, l);
    } catch (const DixonFailure&) {
      l = next_dixon_prime(l, g.exponent());
    }
  }
  throw Error(ErrorCode::modular_prime_not_found, "no splitting prime found for " + g.name());
}

bool check_orthogonality(const CharacterTable& t) {
  const int h = static_cast<int>(t.class_reps.size());
  if (t.count() != h) return false;
  std::vector<std::vector<Cyclotomic>> conj_weighted(static_cast<std::size_t>(h));
  for (int j = 0; j < h; ++j) {
    for (int c = 0; c < h; ++c) conj_weighted[j].push_back(t.chars[j][c].conj() * Cyclotomic::integer(t.class_sizes[c]));
  }
  for (int i = 0; i < h; ++i) {
    for (int j = i; j < h; ++j) {
      Cyclotomic acc = Cyclotomic::integer(0, t.exponent);
      for (int c = 0; c < h; ++c) acc += t.chars[i][c] * conj_weighted[j][c];
      if (!(acc == Cyclotomic::integer(i == j ? t.group_order : 0))) return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> kernel_lattice(const FiniteGroup& g, const CharacterTable& t) {
  std::vector<std::vector<int>> out;
  for (int i = 0; i < t.count(); ++i) {
    const auto one = Cyclotomic::integer(t.dims[i]);
    std::vector<int> k;
    for (int x = 0; x < g.order(); ++x) {
      if (t.value(i, x) == one) k.push_back(x);
    }
    out.push_back(std::move(k));
  }
  return out;
}

namespace {

int first_nontrivial(const std::vector<int>& sub, int identity) { return sub[0] == identity ? sub[1] : sub[0]; }

}  // namespace

std::vector<std::vector<int>> minimal_normal_subgroups(const FiniteGroup& g, const ConjugacyClasses& classes) {
  std::vector<std::vector<int>> closures;
  for (int c = 0; c < classes.count(); ++c) {
    if (classes.representative[c] == g.identity()) continue;
    auto n = g.generate(classes.classes[c]);
    if (std::find(closures.begin(), closures.end(), n) == closures.end()) closures.push_back(std::move(n));
  }
  std::vector<std::vector<int>> out;
  for (const auto& n : closures) {
    const bool minimal = std::none_of(closures.begin(), closures.end(), [&](const std::vector<int>& m) {
      return m.size() < n.size() && std::includes(n.begin(), n.end(), m.begin(), m.end());
    });
    if (minimal) out.push_back(n);
  }
  const int e = g.identity();
  std::sort(out.begin(), out.end(),
            [&](const auto& a, const auto& b) { return first_nontrivial(a, e) < first_nontrivial(b, e); });
  return out;
}

namespace {

using Bits = std::vector<std::uint64_t>;

bool covers_all(const Bits& a, const Bits& full) { return a == full; }

Bits bit_or(Bits a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] |= b[i];
  return a;
}

bool test_bit(const Bits& a, int i) { return (a[i / 64] >> (i % 64)) & 1U; }

bool subset_of(const Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] & ~b[i]) return false;
  }
  return true;
}

struct Search {
  std::vector<Bits> cover;         // per usable irrep
  std::vector<std::int64_t> dim;   // per usable irrep
  std::vector<int> row;            // table row of usable irrep
  std::vector<std::vector<int>> by_target;  // irreps covering each minimal normal subgroup, by dim
  std::vector<std::int64_t> cheapest;
  Bits full;
  int targets = 0;

  std::int64_t best = 0;
  std::vector<int> best_pick;
  std::vector<int> pick;
  std::int64_t nodes = 0;

  void dfs(const Bits& covered, std::int64_t cost) {
    ++nodes;
    if (covers_all(covered, full)) {
      if (cost < best) {
        best = cost;
        best_pick = pick;
      }
      return;
    }
    // admissible bound: every uncovered target still needs some covering irrep
    std::int64_t bound = 0;
    int branch = -1;
    std::size_t fewest = SIZE_MAX;
    for (int u = 0; u < targets; ++u) {
      if (test_bit(covered, u)) continue;
      bound = std::max(bound, cheapest[u]);
      if (by_target[u].size() < fewest) {
        fewest = by_target[u].size();
        branch = u;
      }
    }
    if (cost + bound >= best) return;
    for (int i : by_target[branch]) {
      pick.push_back(i);
      dfs(bit_or(covered, cover[i]), cost + dim[i]);
      pick.pop_back();
    }
  }
};

}  // namespace

OracleResult min_faithful_exhaustive(const FiniteGroup& g, const CharacterTable& t) {
  OracleResult out;
  const auto classes = conjugacy_classes(g);
  const auto minimal = minimal_normal_subgroups(g, classes);
  const int u = static_cast<int>(minimal.size());
  if (u == 0) return out;

  Search s;
  s.targets = u;
  const std::size_t words = static_cast<std::size_t>((u + 63) / 64);
  s.full.assign(words, 0);
  for (int i = 0; i < u; ++i) s.full[i / 64] |= std::uint64_t{1} << (i % 64);

  std::vector<Bits> raw_cover;
  for (int i = 0; i < t.count(); ++i) {
    Bits b(words, 0);
    const auto one = Cyclotomic::integer(t.dims[i]);
    for (int m = 0; m < u; ++m) {
      // a minimal normal subgroup meets a kernel trivially or lies inside it
      const int x = first_nontrivial(minimal[m], g.identity());
      if (!(t.value(i, x) == one)) b[m / 64] |= std::uint64_t{1} << (m % 64);
    }
    raw_cover.push_back(std::move(b));
  }
  // drop irreps dominated by a cheaper (or equal, earlier) one covering a superset
  for (int i = 0; i < t.count(); ++i) {
    if (std::all_of(raw_cover[i].begin(), raw_cover[i].end(), [](std::uint64_t w) { return w == 0; })) continue;
    bool dominated = false;
    for (int j = 0; j < t.count() && !dominated; ++j) {
      if (j == i || !subset_of(raw_cover[i], raw_cover[j])) continue;
      dominated = t.dims[j] < t.dims[i] || (t.dims[j] == t.dims[i] && (raw_cover[i] != raw_cover[j] || j < i));
    }
    if (dominated) continue;
    s.cover.push_back(raw_cover[i]);
    s.dim.push_back(t.dims[i]);
    s.row.push_back(i);
  }
  s.by_target.resize(static_cast<std::size_t>(u));
  s.cheapest.assign(static_cast<std::size_t>(u), 0);
  for (int m = 0; m < u; ++m) {
    for (std::size_t i = 0; i < s.cover.size(); ++i) {
      if (test_bit(s.cover[i], m)) s.by_target[m].push_back(static_cast<int>(i));
    }
    std::stable_sort(s.by_target[m].begin(), s.by_target[m].end(), [&](int a, int b) { return s.dim[a] < s.dim[b]; });
    if (s.by_target[m].empty()) throw Error(ErrorCode::invalid_parameters, "table misses a minimal normal subgroup");
    s.cheapest[m] = s.dim[s.by_target[m].front()];
  }
  s.best = 0;
  for (auto d : s.dim) s.best += d;
  s.best += 1;
  s.dfs(Bits(words, 0), 0);

  out.min_dim = s.best;
  out.nodes = s.nodes;
  for (int i : s.best_pick) out.selection.push_back(s.row[i]);
  std::sort(out.selection.begin(), out.selection.end());
  return out;
}

std::vector<Candidate> candidates_from_table(const FiniteGroup& g, const CharacterTable& t, int* dimension) {
  int k = 0;
  const auto p = prime_power_base(g.order(), &k);
  if (p == 0) throw Error(ErrorCode::invalid_parameters, g.name() + " is not a p-group");
  const auto info = structure_scan(g);
  std::vector<int> basis;
  std::vector<int> span{g.identity()};
  for (int z : info.center.elements) {
    if (g.power(z, p) != g.identity() || std::binary_search(span.begin(), span.end(), z)) continue;
    basis.push_back(z);
    span = g.generate(basis);
  }
  if (dimension != nullptr) *dimension = static_cast<int>(basis.size());

  std::vector<Candidate> out;
  for (int i = 0; i < t.count(); ++i) {
    Candidate c;
    c.label = "chi_" + std::to_string(i);
    c.dim = t.dims[i];
    c.dual.p = static_cast<int>(p);
    for (int z : basis) {
      // central elements act by the scalar chi(z) / chi(1), a p-th root of unity here
      int found = -1;
      for (int a = 0; a < p && found < 0; ++a) {
        if (t.value(i, z) == Cyclotomic::integer(t.dims[i]) * Cyclotomic::root_of_unity(static_cast<int>(p), a)) found = a;
      }
      if (found < 0) throw Error(ErrorCode::invalid_parameters, "central value is not a scalar root of unity");
      c.dual.coords.push_back(found);
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace faithrep
