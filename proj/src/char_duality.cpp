#include "faithrep/char_duality.hpp"

#include <algorithm>
#include <numeric>

#include "faithrep/arith.hpp"
#include "faithrep/error.hpp"

namespace faithrep {

bool DualVector::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
}

std::vector<std::int64_t> galois_trace_weights(const ChainRing& ring) {
  if (!ring.e() || *ring.e() != 1) {
    throw Error(ErrorCode::invalid_parameters, "Galois trace weights need an unramified ring");
  }
  const int f = ring.f();
  const std::int64_t modulus = ring.additive_exponent();
  std::vector<std::int64_t> weights(static_cast<std::size_t>(f), 0);
  for (int i = 0; i < f; ++i) {
    std::int64_t tr = 0;
    for (int t = 0; t < f; ++t) {
      const auto prod = ring.mul(ring.omega_pi(i, 0), ring.omega_pi(t, 0));
      tr += ring.additive_coords(prod)[static_cast<std::size_t>(t)];
    }
    weights[i] = floor_mod(tr, modulus);
  }
  return weights;
}

namespace {

std::vector<std::int64_t> default_weights(const ChainRing& ring) {
  if (ring.e() && *ring.e() == 1) return galois_trace_weights(ring);
  // Component (omega_1, t) with t the residue of the socle position n - 1.
  const int top = ring.e() ? (ring.n() - 1) % *ring.e() : ring.n() - 1;
  std::vector<std::int64_t> weights(ring.additive_moduli().size(), 0);
  weights[static_cast<std::size_t>(top)] = 1;
  return weights;
}

}  // namespace

AdditiveDual::AdditiveDual(ChainRing ring) : AdditiveDual(ring, default_weights(ring)) {}

AdditiveDual::AdditiveDual(ChainRing ring, std::vector<std::int64_t> weights)
    : ring_(std::move(ring)), weights_(std::move(weights)) {
  if (weights_.size() != ring_.additive_moduli().size()) {
    throw Error(ErrorCode::invalid_parameters, "one functional weight per additive coordinate required");
  }
  if (!is_primitive_functional(ring_, [this](const RingElem& x) { return psi_exponent(x); })) {
    throw Error(ErrorCode::invalid_parameters, "character kernel contains the socle; not primitive");
  }
}

std::int64_t AdditiveDual::psi_exponent(const RingElem& x) const {
  const auto coords = ring_.additive_coords(x);
  const auto& moduli = ring_.additive_moduli();
  const std::int64_t big = value_modulus();
  std::int64_t acc = 0;
  for (std::size_t c = 0; c < coords.size(); ++c) {
    if (weights_[c] == 0 || coords[c] == 0) continue;
    const std::int64_t scale = big / moduli[c];
    acc = floor_mod(acc + floor_mod(weights_[c] * coords[c], moduli[c]) * scale, big);
  }
  return acc;
}

AddChar AdditiveDual::psi_b(const RingElem& b) const { return AddChar{b, ring_.valuation(b)}; }

std::int64_t AdditiveDual::evaluate(const AddChar& chi, const RingElem& x) const {
  return psi_exponent(ring_.mul(chi.b, x));
}

Cyclotomic AdditiveDual::evaluate_exact(const AddChar& chi, const RingElem& x) const {
  return Cyclotomic::root_of_unity(static_cast<int>(value_modulus()), evaluate(chi, x));
}

int AdditiveDual::conductor(const AddChar& chi) const { return ring_.n() - chi.level; }

std::vector<RingElem> AdditiveDual::omega1_generators() const {
  std::vector<RingElem> out;
  const int base = ring_.omega1_index();
  for (int i = 0; i < ring_.f(); ++i) {
    for (int j = 0; j < ring_.xi(); ++j) out.push_back(ring_.omega_pi(i, base + j));
  }
  return out;
}

DualVector AdditiveDual::restrict_to_omega1(const AddChar& chi) const {
  DualVector out;
  out.p = ring_.p();
  const std::int64_t step = value_modulus() / ring_.p();
  for (const auto& g : omega1_generators()) {
    const std::int64_t ex = evaluate(chi, g);
    out.coords.push_back(static_cast<int>(ex / step));
  }
  return out;
}

nlohmann::json AdditiveDual::to_json(const AddChar& chi) const {
  return nlohmann::json{{"b", chi.b.coords}, {"level", chi.level}};
}

namespace {

// Incremental row-echelon basis over F_p.
class EchelonBasis {
 public:
  explicit EchelonBasis(int p) : p_(p) {}

  // Returns true when v is independent of the rows so far (and adds it).
  bool insert(std::vector<int> v) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const int piv = pivots_[r];
      const int c = v[piv];
      if (c == 0) continue;
      for (std::size_t t = 0; t < v.size(); ++t) {
        v[t] = static_cast<int>(floor_mod(v[t] - static_cast<std::int64_t>(c) * rows_[r][t], p_));
      }
    }
    const auto it = std::find_if(v.begin(), v.end(), [](int c) { return c != 0; });
    if (it == v.end()) return false;
    const int piv = static_cast<int>(it - v.begin());
    const auto inv = invmod(v[piv], p_);
    for (auto& c : v) c = static_cast<int>(floor_mod(static_cast<std::int64_t>(c) * inv, p_));
    // keep rows reduced at the new pivot
    for (auto& row : rows_) {
      const int c = row[piv];
      if (c == 0) continue;
      for (std::size_t t = 0; t < row.size(); ++t) {
        row[t] = static_cast<int>(floor_mod(row[t] - static_cast<std::int64_t>(c) * v[t], p_));
      }
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
  }

  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  int p_;
  std::vector<std::vector<int>> rows_;
  std::vector<int> pivots_;
};

}  // namespace

int rank_mod_p(const std::vector<DualVector>& vectors) {
  if (vectors.empty()) return 0;
  EchelonBasis basis(vectors.front().p);
  for (const auto& v : vectors) basis.insert(v.coords);
  return basis.rank();
}

bool spans_dual(const std::vector<DualVector>& vectors, int dimension) {
  return rank_mod_p(vectors) == dimension;
}

std::vector<int> basis_greedy(const std::vector<DualVector>& vectors, const std::vector<std::int64_t>& weights) {
  if (vectors.size() != weights.size()) throw Error(ErrorCode::invalid_parameters, "one weight per vector required");
  std::vector<int> order(vectors.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return weights[a] < weights[b]; });
  std::vector<int> chosen;
  if (vectors.empty()) return chosen;
  EchelonBasis basis(vectors.front().p);
  for (int idx : order) {
    if (basis.insert(vectors[idx].coords)) chosen.push_back(idx);
  }
  return chosen;
}

}  // namespace faithrep
