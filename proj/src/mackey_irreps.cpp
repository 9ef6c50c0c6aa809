#include "faithrep/mackey_irreps.hpp"

#include <algorithm>

#include "faithrep/arith.hpp"
#include "faithrep/error.hpp"

namespace faithrep {

namespace {

std::int64_t tuple_count(std::int64_t base, int k) {
  std::int64_t out = 1;
  for (int i = 0; i < k; ++i) out = checked_mul(out, base);
  return out;
}

// Mixed radix digits (most significant first) of idx over `base`.
void unrank(std::int64_t idx, std::int64_t base, std::vector<int>& digits) {
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    *it = static_cast<int>(idx % base);
    idx /= base;
  }
}

}  // namespace

MackeyCatalog::MackeyCatalog(const HeisenbergGroup& h) : h_(h), dual_(h.ring()) {
  const auto& t = h_.tables();
  const int size = t.size();
  explicit_ = tuple_count(size, h_.k() + 1) <= kExplicitCatalogLimit;

  const auto& ring = h_.ring();
  psi_by_index_.resize(static_cast<std::size_t>(size));
  for (int a = 0; a < size; ++a) psi_by_index_[a] = dual_.psi_exponent(ring.element(a));

  const int n = ring.n();
  canon_.assign(static_cast<std::size_t>(n) + 1, std::vector<int>(static_cast<std::size_t>(size)));
  coset_reps_.resize(static_cast<std::size_t>(n) + 1);
  for (int level = 0; level <= n; ++level) {
    std::vector<int> ideal;
    for (int a = 0; a < size; ++a) {
      if (t.valuation(a) >= level) ideal.push_back(a);
    }
    for (int a = 0; a < size; ++a) {
      int best = a;
      for (int s : ideal) best = std::min(best, t.add(a, s));
      canon_[level][a] = best;
      if (best == a) coset_reps_[level].push_back(a);
    }
  }
}

std::vector<OrbitRep> MackeyCatalog::orbit_representatives() const {
  if (!explicit_) throw Error(ErrorCode::cap_exceeded, "dual of A too large to enumerate for " + h_.name());
  const auto& t = h_.tables();
  const int size = t.size();
  const int k = h_.k();
  const std::int64_t tuples = tuple_count(size, k);

  std::vector<OrbitRep> out;
  std::vector<int> bvec(static_cast<std::size_t>(k));
  std::vector<int> y(static_cast<std::size_t>(k));
  std::vector<int> image(static_cast<std::size_t>(k));
  for (int b = 0; b < size; ++b) {
    std::vector<bool> seen(static_cast<std::size_t>(tuples), false);
    for (std::int64_t start = 0; start < tuples; ++start) {
      if (seen[start]) continue;
      unrank(start, size, bvec);
      OrbitRep rep{bvec, b, t.valuation(b), 0, 0};
      // conjugation by (0, y, 0) sends psi_(b_vec, b) to psi_(b_vec + b y, b)
      for (std::int64_t yi = 0; yi < tuples; ++yi) {
        unrank(yi, size, y);
        std::int64_t idx = 0;
        for (int j = 0; j < k; ++j) {
          image[j] = t.add(bvec[j], t.mul(b, y[j]));
          idx = idx * size + image[j];
        }
        if (idx == start) ++rep.stabilizer_size;
        if (!seen[idx]) {
          seen[idx] = true;
          ++rep.orbit_size;
        }
      }
      out.push_back(std::move(rep));
    }
  }
  return out;
}

IrrepDescriptor MackeyCatalog::describe(std::vector<int> b_vec, int b, std::vector<int> lambda) const {
  const auto& ring = h_.ring();
  const int k = h_.k();
  if (static_cast<int>(b_vec.size()) != k) throw Error(ErrorCode::invalid_parameters, "b_vec must have k entries");
  if (lambda.empty()) lambda.assign(static_cast<std::size_t>(k), 0);
  if (static_cast<int>(lambda.size()) != k) throw Error(ErrorCode::invalid_parameters, "lambda must have k entries");

  IrrepDescriptor d;
  d.b = b;
  d.level = h_.tables().valuation(b);
  const auto& reps = coset_reps_[d.level];
  for (auto& v : b_vec) v = canon_[d.level][v];
  for (auto& v : lambda) {
    v = canon_[d.level][v];
    const auto pos = std::lower_bound(reps.begin(), reps.end(), v) - reps.begin();
    d.lambda_label = d.lambda_label * static_cast<std::int64_t>(reps.size()) + pos;
  }
  d.b_vec = std::move(b_vec);
  d.lambda = std::move(lambda);
  d.dim = ipow(ring.q(), static_cast<std::int64_t>(ring.n() - d.level) * k);
  d.central_char = dual_.psi_b(ring.element(b));
  d.central_dual = dual_.restrict_to_omega1(d.central_char);
  return d;
}

std::vector<IrrepDescriptor> MackeyCatalog::irreps() const {
  std::vector<IrrepDescriptor> out;
  const int k = h_.k();
  for (const auto& orbit : orbit_representatives()) {
    const auto& reps = coset_reps_[orbit.level];
    const std::int64_t count = tuple_count(static_cast<std::int64_t>(reps.size()), k);
    std::vector<int> digits(static_cast<std::size_t>(k));
    for (std::int64_t li = 0; li < count; ++li) {
      unrank(li, static_cast<std::int64_t>(reps.size()), digits);
      std::vector<int> lambda;
      for (int dgt : digits) lambda.push_back(reps[dgt]);
      auto d = describe(orbit.b_vec, orbit.b, std::move(lambda));
      d.dim = orbit.orbit_size;
      out.push_back(std::move(d));
    }
  }
  return out;
}

std::vector<LevelSummary> MackeyCatalog::summary() const {
  const auto& ring = h_.ring();
  const std::int64_t q = ring.q();
  const int n = ring.n();
  const int k = h_.k();
  std::vector<LevelSummary> out;
  for (int i = 0; i <= n; ++i) {
    LevelSummary s;
    s.level = i;
    s.central_values = i == n ? 1 : ipow(q, n - i) - ipow(q, n - i - 1);
    s.orbits_per_value = ipow(q, static_cast<std::int64_t>(i) * k);
    s.lambdas_per_orbit = s.orbits_per_value;
    s.dim = ipow(q, static_cast<std::int64_t>(n - i) * k);
    out.push_back(s);
  }
  return out;
}

std::int64_t MackeyCatalog::irrep_count() const {
  std::int64_t total = 0;
  for (const auto& s : summary()) total = checked_add(total, s.irreps());
  return total;
}

LinearCharacter MackeyCatalog::inducing_character(const IrrepDescriptor& d) const {
  const auto& t = h_.tables();
  const int size = t.size();
  const int k = h_.k();
  const int n = h_.ring().n();
  std::vector<int> stab;
  for (int a = 0; a < size; ++a) {
    if (t.valuation(a) >= n - d.level) stab.push_back(a);
  }
  const std::int64_t xs = tuple_count(size, k);
  const std::int64_t ys = tuple_count(static_cast<std::int64_t>(stab.size()), k);

  std::vector<std::pair<int, std::int64_t>> values;
  HeisElem e;
  e.x.resize(static_cast<std::size_t>(k));
  e.y.resize(static_cast<std::size_t>(k));
  std::vector<int> ydig(static_cast<std::size_t>(k));
  for (std::int64_t xi = 0; xi < xs; ++xi) {
    unrank(xi, size, e.x);
    for (std::int64_t yi = 0; yi < ys; ++yi) {
      unrank(yi, static_cast<std::int64_t>(stab.size()), ydig);
      for (int j = 0; j < k; ++j) e.y[j] = stab[ydig[j]];
      int lin = 0;
      for (int j = 0; j < k; ++j) {
        lin = t.add(lin, t.mul(d.b_vec[j], e.x[j]));
        lin = t.add(lin, t.mul(d.lambda[j], e.y[j]));
      }
      for (int z = 0; z < size; ++z) {
        e.z = z;
        values.emplace_back(static_cast<int>(h_.encode(e)), psi_by_index_[t.add(lin, t.mul(d.b, z))]);
      }
    }
  }
  std::sort(values.begin(), values.end());
  LinearCharacter chi;
  chi.modulus = static_cast<int>(dual_.value_modulus());
  for (const auto& [g, ex] : values) {
    chi.elements.push_back(g);
    chi.exponents.push_back(ex);
  }
  return chi;
}

nlohmann::json MackeyCatalog::to_json(const IrrepDescriptor& d) const {
  const auto& ring = h_.ring();
  nlohmann::json bvec = nlohmann::json::array();
  for (int v : d.b_vec) bvec.push_back(ring.to_json(ring.element(v)));
  return {{"orbit_rep", {{"b_vec", bvec}, {"b", ring.to_json(ring.element(d.b))}}},
          {"lambda_label", d.lambda_label},
          {"dim", d.dim},
          {"level", d.level},
          {"central_char", dual_.to_json(d.central_char)}};
}

std::int64_t stone_von_neumann_dim(const HeisenbergGroup& h, const AddChar& chi) {
  if (chi.level != 0) throw Error(ErrorCode::not_generic, "central character has level " + std::to_string(chi.level));
  // [H : A] with |A| = |R|^(k+1)
  return h.order() / tuple_count(h.ring().size(), h.k() + 1);
}

// ------------------------------------------------------------ Symplectic

SymplecticModule::SymplecticModule(ChainRing ring, int k) : ring_(std::move(ring)), tables_(ring_), k_(k) {
  if (k < 1) throw Error(ErrorCode::invalid_parameters, "k must be positive");
}

std::int64_t SymplecticModule::size() const { return tuple_count(ring_.size(), 2 * k_); }

std::vector<int> SymplecticModule::vector_at(std::int64_t index) const {
  std::vector<int> v(static_cast<std::size_t>(2 * k_));
  unrank(index, ring_.size(), v);
  return v;
}

int SymplecticModule::pairing(const std::vector<int>& v, const std::vector<int>& w) const {
  int acc = 0;
  for (int j = 0; j < k_; ++j) {
    acc = tables_.add(acc, tables_.mul(v[j], w[k_ + j]));
    acc = tables_.sub(acc, tables_.mul(v[k_ + j], w[j]));
  }
  return acc;
}

std::vector<std::vector<int>> SymplecticModule::perp(int ideal_power) const {
  const std::int64_t total = size();
  if (total > 4 * kExplicitCatalogLimit) throw Error(ErrorCode::cap_exceeded, "symplectic module too large to enumerate");
  // the pairing is bilinear, so testing against the standard basis suffices
  std::vector<std::vector<int>> basis;
  for (int j = 0; j < 2 * k_; ++j) {
    std::vector<int> e(static_cast<std::size_t>(2 * k_), 0);
    e[j] = tables_.one();
    basis.push_back(std::move(e));
  }
  std::vector<std::vector<int>> out;
  for (std::int64_t i = 0; i < total; ++i) {
    auto v = vector_at(i);
    const bool inside = std::all_of(basis.begin(), basis.end(),
                                    [&](const auto& e) { return tables_.valuation(pairing(v, e)) >= ideal_power; });
    if (inside) out.push_back(std::move(v));
  }
  return out;
}

std::int64_t SymplecticModule::perp_size(int ideal_power) const {
  return static_cast<std::int64_t>(perp(ideal_power).size());
}

std::int64_t schrodinger_dim(const SymplecticModule& m, const AdditiveDual& dual, const AddChar& chi) {
  if (m.ring().p() == 2) throw Error(ErrorCode::char2_unsupported, "residue characteristic 2");
  const std::int64_t quotient = m.size() / m.perp_size(dual.conductor(chi));
  const std::int64_t root = exact_isqrt(quotient);
  if (root < 0) throw Error(ErrorCode::non_square_index, "|V / V(a)| = " + std::to_string(quotient));
  return root;
}

int conductor_by_search(const AdditiveDual& dual, const RingElem& b) {
  const auto& ring = dual.ring();
  const auto chi = dual.psi_b(b);
  for (int j = 0; j <= ring.n(); ++j) {
    const auto ideal = ring.ideal(j);
    const bool inside = std::all_of(ideal.begin(), ideal.end(), [&](const RingElem& x) { return dual.evaluate(chi, x) == 0; });
    if (inside) return j;
  }
  return ring.n();
}

}  // namespace faithrep
