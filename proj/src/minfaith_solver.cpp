#include "faithrep/minfaith_solver.hpp"

#include <algorithm>
#include <numeric>

#include "faithrep/arith.hpp"
#include "faithrep/error.hpp"
#include "faithrep/exactrep.hpp"

namespace faithrep {

nlohmann::json FaithfulSolution::to_json() const {
  nlohmann::json parts = nlohmann::json::array();
  for (std::size_t i = 0; i < summands.size(); ++i) parts.push_back({{"label", summands[i]}, {"dim", dims[i]}});
  nlohmann::json cert = nlohmann::json::object();
  if (!certificate.empty()) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : certificate) rows.push_back(r.coords);
    cert["p"] = certificate.front().p;
    cert["rows"] = rows;
    cert["rank"] = certificate_rank;
  }
  if (kernel_checked) cert["kernel_size"] = kernel_size;
  return {{"total_dim", total_dim}, {"summands", parts}, {"certificate", cert}};
}

// ------------------------------------------------------------ formulas

std::int64_t formula_heisenberg(const RingParams& params, int k) {
  if (k < 1) throw Error(ErrorCode::invalid_parameters, "k must be positive");
  const auto ring = ChainRing::make(params);
  std::int64_t total = 0;
  for (int i = 0; i < params.xi(); ++i) {
    total = checked_add(total, checked_mul(params.f, ipow(ring.q(), static_cast<std::int64_t>(k) * (params.n - i))));
  }
  return total;
}

std::int64_t formula_affine(std::int64_t q, int n) {
  if (n < 1 || prime_power_base(q, nullptr) == 0) throw Error(ErrorCode::invalid_parameters, "q must be a prime power and n >= 1");
  return ipow(q, n) - ipow(q, n - 1);
}

std::int64_t formula_unitriangular(const RingParams& params, int size) {
  if (size < 3) throw Error(ErrorCode::invalid_parameters, "unitriangular size must be at least 3");
  if (size > 3 && params.p == 2) throw Error(ErrorCode::char2_unsupported, "residue characteristic 2");
  return formula_heisenberg(params, size - 2);
}

TwoStepFormula formula_two_step(const FiniteGroup& g) {
  const auto info = structure_scan(g);
  if (!info.is_p_group && g.order() > 1) throw Error(ErrorCode::not_two_step, g.name() + " is not a p-group");
  if (!info.is_two_step) throw Error(ErrorCode::not_two_step, "[G,G] is not central in " + g.name());
  if (!info.commutator_cyclic) throw Error(ErrorCode::commutator_not_cyclic, "[G,G] is not cyclic in " + g.name());
  const std::int64_t index = g.order() / info.center.size();
  TwoStepFormula out;
  out.sqrt_index = exact_isqrt(index);
  if (out.sqrt_index < 0) throw Error(ErrorCode::non_square_index, "[G:Z] = " + std::to_string(index));
  out.center_rank = info.center_rank;
  out.value = out.sqrt_index + out.center_rank - 1;
  return out;
}

OrbitBound orbit_lower_bound(const CyclicAction& action) {
  return {static_cast<std::int64_t>(action.orbit_of_generator().size()), action.is_faithful()};
}

bool levels_lower_bound_audit(const std::vector<int>& alpha, std::int64_t q, int f, int k, int n) {
  const int xi = static_cast<int>(alpha.size());
  if (xi < 1 || xi > n) throw Error(ErrorCode::invalid_parameters, "profile length must be in [1, n]");
  if (std::any_of(alpha.begin(), alpha.end(), [](int a) { return a < 0; })) {
    throw Error(ErrorCode::constraint_violation, "negative entry");
  }
  if (std::accumulate(alpha.begin(), alpha.end(), 0LL) != static_cast<long long>(f) * xi) {
    throw Error(ErrorCode::constraint_violation, "entries must sum to f xi");
  }
  long long suffix = 0;
  for (int i = xi - 1; i >= 0; --i) {
    suffix += alpha[i];
    if (suffix > static_cast<long long>(xi - i) * f) {
      throw Error(ErrorCode::constraint_violation, "suffix from " + std::to_string(i) + " exceeds (xi - i) f");
    }
  }
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  for (int i = 0; i < xi; ++i) {
    const auto w = ipow(q, static_cast<std::int64_t>(k) * (n - i));
    lhs = checked_add(lhs, checked_mul(alpha[i], w));
    rhs = checked_add(rhs, checked_mul(f, w));
  }
  return lhs >= rhs;
}

// ------------------------------------------------------------ greedy

FaithfulSolution solve_pgroup(const std::vector<Candidate>& pool, int dimension) {
  std::vector<DualVector> vecs;
  std::vector<std::int64_t> weights;
  for (const auto& c : pool) {
    vecs.push_back(c.dual);
    weights.push_back(c.dim);
  }
  const auto chosen = basis_greedy(vecs, weights);
  if (static_cast<int>(chosen.size()) != dimension) {
    throw Error(ErrorCode::pool_does_not_span,
                "central characters span rank " + std::to_string(chosen.size()) + " of " + std::to_string(dimension));
  }
  FaithfulSolution out;
  for (int idx : chosen) {
    out.summands.push_back(pool[idx].label);
    out.dims.push_back(pool[idx].dim);
    out.total_dim = checked_add(out.total_dim, pool[idx].dim);
    out.certificate.push_back(pool[idx].dual);
  }
  out.certificate_rank = rank_mod_p(out.certificate);
  return out;
}

namespace {

std::string ring_label(const ChainRing& ring, int idx) { return ring.to_json(ring.element(idx)).dump(); }

std::string irrep_label(const ChainRing& ring, const IrrepDescriptor& d) {
  std::string s = "theta(b=" + ring_label(ring, d.b) + ",b_vec=[";
  for (std::size_t j = 0; j < d.b_vec.size(); ++j) s += (j ? "," : "") + ring_label(ring, d.b_vec[j]);
  return s + "],lambda=" + std::to_string(d.lambda_label) + ")";
}

int omega1_dimension(const ChainRing& ring) { return ring.f() * ring.xi(); }

}  // namespace

std::vector<Candidate> heisenberg_candidates(const MackeyCatalog& catalog) {
  const auto& ring = catalog.group().ring();
  std::vector<Candidate> out;
  auto push = [&](const IrrepDescriptor& d) { out.push_back({irrep_label(ring, d), d.dim, d.central_dual}); };
  if (catalog.explicit_mode()) {
    for (const auto& d : catalog.irreps()) push(d);
  } else {
    const std::vector<int> zero(static_cast<std::size_t>(catalog.group().k()), 0);
    for (int b = 0; b < ring.size(); ++b) push(catalog.describe(zero, b));
  }
  return out;
}

FaithfulSolution solve_heisenberg(const HeisenbergGroup& h) {
  MackeyCatalog catalog(h);
  return solve_pgroup(heisenberg_candidates(catalog), omega1_dimension(h.ring()));
}

// ------------------------------------------------------------ constructions

FaithfulSolution construct_faithful_heisenberg(const HeisenbergGroup& h, bool check) {
  MackeyCatalog catalog(h);
  const auto& ring = h.ring();
  const std::vector<int> zero(static_cast<std::size_t>(h.k()), 0);
  std::vector<IrrepDescriptor> parts;
  for (int i = 0; i < ring.f(); ++i) {
    for (int j = 0; j < ring.xi(); ++j) {
      parts.push_back(catalog.describe(zero, static_cast<int>(ring.index_of(ring.omega_pi(i, j)))));
    }
  }
  FaithfulSolution out;
  for (const auto& d : parts) {
    out.summands.push_back(irrep_label(ring, d));
    out.dims.push_back(d.dim);
    out.total_dim = checked_add(out.total_dim, d.dim);
    out.certificate.push_back(d.central_dual);
  }
  out.certificate_rank = rank_mod_p(out.certificate);

  if (check && h.order() <= oracle_cap()) {
    const auto g = h.materialize();
    RepSum sum;
    for (const auto& d : parts) {
      const auto rep = induce_character(g, catalog.inducing_character(d));
      if (rep.degree() != d.dim) throw Error(ErrorCode::invalid_parameters, "induced degree differs from catalog");
      sum.add(rep.character());
    }
    out.kernel_checked = true;
    out.kernel_size = static_cast<std::int64_t>(kernel_of(g, sum).size());
  }
  return out;
}

namespace {

// Linear character of the elementary abelian group spanned by `basis`
// (independent elements of order p) with chi(basis[j]) = e(values[j] / p).
LinearCharacter elementary_character(const FiniteGroup& g, const std::vector<int>& basis,
                                     const std::vector<int>& values, int p) {
  std::vector<std::pair<int, std::int64_t>> pairs{{g.identity(), 0}};
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const auto prev = pairs;
    int pw = g.identity();
    for (int a = 1; a < p; ++a) {
      pw = g.mul(pw, basis[j]);
      for (const auto& [x, ex] : prev) pairs.emplace_back(g.mul(x, pw), (ex + static_cast<std::int64_t>(a) * values[j]) % p);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  LinearCharacter chi;
  chi.modulus = p;
  for (const auto& [x, ex] : pairs) {
    chi.elements.push_back(x);
    chi.exponents.push_back(ex);
  }
  return chi;
}

}  // namespace

FaithfulSolution construct_faithful_two_step(const FiniteGroup& g) {
  formula_two_step(g);  // precondition checks
  const auto info = structure_scan(g);
  FaithfulSolution out;
  if (g.order() == 1) {
    out.kernel_checked = true;
    out.kernel_size = 1;
    return out;
  }
  const int p = info.prime;
  std::vector<int> omega1;
  for (int z : info.center.elements) {
    if (g.power(z, p) == g.identity()) omega1.push_back(z);
  }

  // b0 spans Omega_1 of the cyclic commutator subgroup when it is nontrivial
  int b0 = -1;
  for (int z : info.commutator_subgroup.elements) {
    if (g.element_order(z) == p) {
      b0 = z;
      break;
    }
  }
  if (b0 < 0) b0 = *std::find_if(omega1.begin(), omega1.end(), [&](int z) { return z != g.identity(); });
  std::vector<int> basis{b0};
  auto span = g.generate(basis);
  for (int z : omega1) {
    if (std::binary_search(span.begin(), span.end(), z)) continue;
    basis.push_back(z);
    span = g.generate(basis);
  }
  const int r = static_cast<int>(basis.size());

  RepSum sum;
  auto record = [&](std::string label, std::int64_t dim, std::vector<Cyclotomic> character, std::vector<int> values) {
    out.summands.push_back(std::move(label));
    out.dims.push_back(dim);
    out.total_dim += dim;
    out.certificate.push_back(DualVector{p, std::move(values)});
    sum.add(std::move(character));
  };

  // chi_1 is nontrivial on b0, hence on every nontrivial subgroup of [G,G]
  std::vector<int> first(static_cast<std::size_t>(r), 0);
  first[0] = 1;
  const auto chi1 = extend_linear_character(g, elementary_character(g, basis, first, p), info.maximal_abelian.elements);
  const auto induced = induce_character(g, chi1);
  record("Ind_A(chi_1)", induced.degree(), induced.character(), first);

  if (r > 1) {
    // chi_i for i >= 2 vanish on [G,G] and factor through the abelian G/[G,G]
    const auto quot = quotient_group(g, info.commutator_subgroup.elements);
    std::vector<int> rest_basis;
    for (int j = 1; j < r; ++j) rest_basis.push_back(quot.projection[basis[j]]);
    std::vector<int> all(static_cast<std::size_t>(quot.group.order()));
    std::iota(all.begin(), all.end(), 0);
    for (int i = 1; i < r; ++i) {
      std::vector<int> values(static_cast<std::size_t>(r - 1), 0);
      values[i - 1] = 1;
      const auto on_q = extend_linear_character(quot.group, elementary_character(quot.group, rest_basis, values, p), all);
      LinearCharacter lifted;
      lifted.modulus = on_q.modulus;
      for (int x = 0; x < g.order(); ++x) {
        lifted.elements.push_back(x);
        lifted.exponents.push_back(on_q.exponent_of(quot.projection[x]));
      }
      std::vector<int> full(static_cast<std::size_t>(r), 0);
      full[i] = 1;
      record("chi_" + std::to_string(i + 1), 1, linear_character_values(g, lifted), full);
    }
  }
  out.certificate_rank = rank_mod_p(out.certificate);
  out.kernel_checked = true;
  out.kernel_size = static_cast<std::int64_t>(kernel_of(g, sum).size());
  return out;
}

FaithfulSolution construct_faithful_affine(const AffineGroup& aff, bool check) {
  const auto& ring = aff.ring();
  AdditiveDual dual(ring);
  FaithfulSolution out;
  out.summands.push_back("Ind_R(psi)");
  out.dims.push_back(aff.unit_count());
  out.total_dim = aff.unit_count();
  if (check && aff.order() <= oracle_cap()) {
    const auto g = aff.materialize();
    LinearCharacter chi;
    chi.modulus = static_cast<int>(dual.value_modulus());
    chi.elements = aff.translations();
    for (int x : chi.elements) chi.exponents.push_back(dual.psi_exponent(ring.element(aff.decode(x).first)));
    const auto rep = induce_character(g, chi);
    RepSum sum;
    sum.add(rep.character());
    out.dims.back() = rep.degree();
    out.total_dim = rep.degree();
    out.kernel_checked = true;
    out.kernel_size = static_cast<std::int64_t>(kernel_of(g, sum).size());
  }
  return out;
}

}  // namespace faithrep
