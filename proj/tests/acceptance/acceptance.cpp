// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "faithrep/arith.hpp"
#include "faithrep/chain_ring.hpp"
#include "faithrep/char_duality.hpp"
#include "faithrep/error.hpp"
#include "faithrep/exactrep.hpp"
#include "faithrep/families.hpp"
#include "faithrep/mackey_irreps.hpp"
#include "faithrep/minfaith_solver.hpp"
#include "faithrep/oracle.hpp"

using namespace faithrep;

namespace {

struct Criterion {
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  template <typename A, typename B>
  void equal(const A& got, const B& want, const std::string& what) {
    if (!(got == want)) {
      std::ostringstream s;
      s << what << ": got " << got << ", want " << want;
      failures.push_back(s.str());
    }
  }
};

std::map<std::string, FiniteGroup> g_groups;
std::map<std::string, CharacterTable> g_tables;

const FiniteGroup& group(const std::string& spec) {
  auto it = g_groups.find(spec);
  if (it == g_groups.end()) it = g_groups.emplace(spec, build_group(parse_group_spec(spec))).first;
  return it->second;
}

const CharacterTable& table(const std::string& spec) {
  auto it = g_tables.find(spec);
  if (it == g_tables.end()) it = g_tables.emplace(spec, character_table(group(spec))).first;
  return it->second;
}

std::int64_t oracle(const std::string& spec) { return min_faithful_exhaustive(group(spec), table(spec)).min_dim; }

std::string spec_of(const RingParams& rp, int k) {
  std::ostringstream s;
  s << "heis:p=" << rp.p << ",f=" << rp.f << ",e=" << format_ramification(rp.e) << ",n=" << rp.n << ",k=" << k;
  return s.str();
}

// ------------------------------------------------------------------ 1

void heisenberg_endpoints(Criterion& c) {
  struct Case {
    RingParams ring;
    std::int64_t expect;
    bool oracle;
  };
  const std::vector<Case> cases = {{{2, 1, 1, 1}, 2, true},  {{3, 1, 1, 1}, 3, true},  {{5, 1, 1, 1}, 5, true},
                                   {{2, 1, 1, 2}, 4, true},  {{2, 1, std::nullopt, 2}, 6, true},
                                   {{3, 1, 1, 2}, 9, true},  {{2, 1, 2, 2}, 6, true},  {{2, 2, 1, 2}, 32, true}};
  for (const auto& cs : cases) {
    const HeisenbergGroup h(ChainRing::make(cs.ring), 1);
    const auto name = h.name();
    c.equal(formula_heisenberg(cs.ring, 1), cs.expect, name + " formula");
    c.equal(solve_heisenberg(h).total_dim, cs.expect, name + " solver");
    const auto built = construct_faithful_heisenberg(h);
    c.equal(built.total_dim, cs.expect, name + " construction degree");
    c.expect(built.faithful(), name + " construction kernel check");
    if (cs.oracle) c.equal(oracle(spec_of(cs.ring, 1)), cs.expect, name + " oracle");
  }
  c.expect(oracle(spec_of({2, 1, 1, 2}, 1)) != oracle(spec_of({2, 1, std::nullopt, 2}, 1)),
           "Hei3(Z/4) and Hei3(F2[t]/t^2) must differ");
  const RingTables ram(ChainRing::make(2, 1, 2, 2));
  const RingTables eq(ChainRing::make(2, 1, std::nullopt, 2));
  c.expect(find_ring_isomorphism(ram, eq).has_value(), "ramified ring isomorphic to F2[t]/t^2");
}

// ------------------------------------------------------------------ 2

void unitriangular(Criterion& c) {
  const std::int64_t f = formula_heisenberg({3, 1, 1, 1}, 2);
  c.equal(f, 9, "formula_heisenberg(3,1,1,1,2)");
  c.equal(formula_unitriangular({3, 1, 1, 1}, 4), f, "formula_unitriangular U4(F3)");
  c.equal(oracle("unitri:size=4,p=3"), f, "oracle U4(F3)");
  c.equal(oracle("unitri:size=3,p=3"), oracle("heis:p=3"), "U3(F3) vs Hei3(F3)");
  c.equal(oracle("heis:p=3,k=2"), f, "oracle Hei5(F3)");
  c.notes.push_back("U4(F5) skipped: order 15625 exceeds the oracle cap");
}

// ------------------------------------------------------------------ 3

void two_step(Criterion& c) {
  const std::vector<std::pair<std::string, std::int64_t>> cases = {
      {"dihedral:n=4", 2}, {"dicyclic:n=2", 2}, {"heis:p=2,n=2", 4}, {"heis:p=3", 3},
      {"sdp:N=9,h=3,mult=4", 3}, {"sdp:N=8,h=2,mult=5", 2}};
  for (const auto& [spec, want] : cases) {
    const auto& g = group(spec);
    c.equal(formula_two_step(g).value, want, spec + " formula");
    c.equal(oracle(spec), want, spec + " oracle");
    const auto built = construct_faithful_two_step(g);
    c.expect(built.faithful() && built.total_dim == want, spec + " construction");
  }
  c.expect(structure_scan(group("sdp:N=9,h=3,mult=4")).center.size() == 3 && group("sdp:N=9,h=3,mult=4").exponent() == 9,
           "3^(1+2) of exponent 9");
  c.expect(group("heis:p=3").exponent() == 3, "3^(1+2) of exponent 3");
}

// ------------------------------------------------------------------ 4

void affine(Criterion& c) {
  const std::vector<std::pair<RingParams, std::int64_t>> cases = {
      {{3, 1, 1, 1}, 2}, {{2, 1, 1, 2}, 2}, {{3, 1, 1, 2}, 6}, {{2, 2, 1, 1}, 3}};
  for (const auto& [rp, want] : cases) {
    const AffineGroup aff(ChainRing::make(rp));
    const auto name = aff.name();
    const auto q = ipow(rp.p, rp.f);
    c.equal(formula_affine(q, rp.n), want, name + " formula");
    std::ostringstream spec;
    spec << "aff:p=" << rp.p << ",f=" << rp.f << ",n=" << rp.n;
    c.equal(oracle(spec.str()), want, name + " oracle");
    const auto built = construct_faithful_affine(aff);
    c.expect(built.faithful(), name + " induced construction is faithful");
    c.equal(built.total_dim, want, name + " construction degree");
  }
}

// ------------------------------------------------------------------ 5

void orbit_bounds(Criterion& c) {
  const auto b8 = orbit_lower_bound({8, {2}, {7}});
  c.equal(b8.bound, 2, "Z/8, H = {1, -1} bound");
  c.expect(b8.equality, "Z/8 action is faithful");
  c.equal(oracle("sdp:N=8,h=2,mult=7"), 2, "Z/8 x| {1, -1} oracle");
  const auto b9 = orbit_lower_bound({9, {6}, {2}});
  c.equal(b9.bound, 6, "Z/9 full units bound");
  c.equal(oracle("sdp:N=9,h=6,mult=2"), 6, "Z/9 x| units oracle");
  const auto bq = orbit_lower_bound({4, {2, 2}, {3, 1}});
  c.expect(!bq.equality, "action through a quotient is not faithful");
  const auto oq = oracle("sdp:N=4,h=2.2,mult=3.1");
  c.expect(oq >= bq.bound, "oracle >= bound for the non-faithful action");
  std::ostringstream s;
  s << "non-faithful action: bound " << bq.bound << ", oracle " << oq;
  c.notes.push_back(s.str());
}

// ------------------------------------------------------------------ 6

void gl2(Criterion& c) { c.equal(oracle("gl2:p=3"), 3 - 1, "GL2(F3) oracle"); }

// ------------------------------------------------------------------ 7

void properties(Criterion& c) {
  const std::vector<std::pair<RingParams, int>> heis = {
      {{2, 1, 1, 1}, 1}, {{3, 1, 1, 1}, 1}, {{5, 1, 1, 1}, 1}, {{2, 1, 1, 2}, 1}, {{2, 1, std::nullopt, 2}, 1},
      {{2, 1, 2, 2}, 1}, {{3, 1, 1, 2}, 1}, {{2, 2, 1, 1}, 1}, {{2, 1, 1, 3}, 1}, {{2, 1, 2, 3}, 1},
      {{2, 1, 1, 1}, 2}, {{3, 1, 1, 1}, 2}, {{2, 1, 1, 2}, 2}, {{2, 1, std::nullopt, 2}, 2}, {{2, 2, 1, 2}, 1}};

  for (const auto& [rp, k] : heis) {
    const HeisenbergGroup h(ChainRing::make(rp), k);
    const auto name = h.name();
    const MackeyCatalog cat(h);
    std::int64_t squares = 0;
    for (const auto& l : cat.summary()) squares += l.irreps() * l.dim * l.dim;
    c.equal(squares, h.order(), name + " sum of dim^2");
    c.equal(cat.irrep_count(), static_cast<std::int64_t>(conjugacy_classes(h.materialize()).count()),
            name + " irreducibles vs classes");
    const auto& r = h.ring();
    const auto& t = h.tables();
    for (const auto& o : cat.orbit_representatives()) {
      c.equal(o.stabilizer_size, ipow(r.q(), static_cast<std::int64_t>(o.level) * k), name + " stabilizer size");
      std::int64_t ann = 0;
      for (int y = 0; y < t.size(); ++y) ann += t.mul(o.b, y) == 0;
      c.equal(ipow(ann, k), o.stabilizer_size, name + " stabilizer by enumeration");
    }
    for (const auto& d : cat.irreps())
      c.equal(d.dim, ipow(r.q(), static_cast<std::int64_t>(r.n() - d.level) * k), name + " dimension law");
  }

  const std::vector<RingParams> rings = {
      {2, 1, 1, 1}, {3, 1, 1, 1}, {5, 1, 1, 1}, {2, 1, 1, 2}, {2, 1, 1, 3}, {3, 1, 1, 2}, {2, 2, 1, 1},
      {2, 2, 1, 2}, {2, 1, std::nullopt, 2}, {3, 1, std::nullopt, 2}, {2, 1, 2, 2}, {2, 1, 2, 3}, {3, 1, 2, 2}};
  for (const auto& rp : rings) {
    const auto ring = ChainRing::make(rp);
    const AdditiveDual dual(ring);
    const auto el = ring.elements();
    for (const auto& b : el) {
      const auto chi = dual.psi_b(b);
      c.equal(dual.conductor(chi), ring.n() - ring.valuation(b), ring.describe() + " conductor");
      c.equal(conductor_by_search(dual, b), ring.n() - ring.valuation(b), ring.describe() + " conductor by search");
      Cyclotomic sum;
      for (const auto& x : el) sum += dual.evaluate_exact(chi, x);
      c.expect(b == ring.zero() ? sum == Cyclotomic::integer(ring.size()) : sum.is_zero(),
               ring.describe() + " orthogonality");
      const bool prim = is_primitive_functional(ring, [&](const RingElem& x) { return dual.evaluate(chi, x); });
      c.expect(prim == (ring.valuation(b) == 0), ring.describe() + " primitivity");
    }
    if (rp.p != 2) {
      for (int k : {1, 2}) {
        const SymplecticModule m(ring, k);
        if (m.size() > 10000) continue;
        const HeisenbergGroup h(ring, k);
        const MackeyCatalog cat(h);
        for (const auto& b : el) {
          const auto mackey = cat.describe(std::vector<int>(k, 0), static_cast<int>(ring.index_of(b))).dim;
          c.equal(schrodinger_dim(m, dual, dual.psi_b(b)), mackey, ring.describe() + " Schrodinger dimension");
        }
      }
    }
  }

  // induced characters from matrices vs the sum formula, |G| <= 512
  for (const auto& [rp, k] : heis) {
    const HeisenbergGroup h(ChainRing::make(rp), k);
    if (h.order() > 512) continue;
    const auto g = h.materialize();
    const MackeyCatalog cat(h);
    for (const auto& d : cat.irreps()) {
      const auto chi = cat.inducing_character(d);
      c.expect(induce_character(g, chi).character() == induced_character_formula(g, chi), h.name() + " induced character");
    }
  }
  for (const auto& rp : std::vector<RingParams>{{3, 1, 1, 1}, {2, 1, 1, 2}, {3, 1, 1, 2}, {2, 2, 1, 1}, {5, 1, 1, 1}}) {
    const AffineGroup aff(ChainRing::make(rp));
    const auto g = aff.materialize();
    const AdditiveDual dual(aff.ring());
    auto tr = aff.translations();
    std::sort(tr.begin(), tr.end());
    LinearCharacter chi;
    chi.modulus = static_cast<int>(dual.value_modulus());
    chi.elements = tr;
    for (int x : tr) chi.exponents.push_back(dual.psi_exponent(aff.ring().element(aff.decode(x).first)));
    c.expect(induce_character(g, chi).character() == induced_character_formula(g, chi), aff.name() + " induced character");
  }

  std::mt19937 rng(4242);
  int profiles = 0;
  while (profiles < 10000) {
    const int f = 1 + static_cast<int>(rng() % 3);
    const int xi = 1 + static_cast<int>(rng() % 4);
    const int n = xi + static_cast<int>(rng() % 2);
    const int k = 1 + static_cast<int>(rng() % 2);
    const std::int64_t q = ipow(rng() % 2 ? 2 : 3, f);
    std::vector<int> alpha(static_cast<std::size_t>(xi));
    int left = f * xi;
    for (int i = 0; i < xi - 1; ++i) {
      alpha[i] = static_cast<int>(rng() % (left + 1));
      left -= alpha[i];
    }
    alpha[xi - 1] = left;
    int suffix = 0;
    bool admissible = true;
    for (int i = xi - 1; i >= 0; --i) {
      suffix += alpha[i];
      admissible &= suffix <= (xi - i) * f;
    }
    if (!admissible) continue;
    ++profiles;
    c.expect(levels_lower_bound_audit(alpha, q, f, k, n), "level profile inequality");
  }
}

// ------------------------------------------------------------------ 8

void solver_vs_search(Criterion& c) {
  int checked = 0;
  for (const auto& item : default_suite()) {
    const std::string spec = item["group"];
    const auto& g = group(spec);
    if (prime_power_base(g.order()) == 0 && g.order() != 1) continue;
    const auto& t = table(spec);
    int dim = 0;
    const auto pool = candidates_from_table(g, t, &dim);
    const auto greedy = solve_pgroup(pool, dim).total_dim;
    c.equal(greedy, min_faithful_exhaustive(g, t).min_dim, item["name"].get<std::string>() + " greedy vs search");
    ++checked;
  }
  c.notes.push_back(std::to_string(checked) + " p-groups");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria = {
      {"Heisenberg endpoints: formula, solver, construction, oracle", heisenberg_endpoints},
      {"U4(F3) equals the Hei5(F3) value", unitriangular},
      {"two-step formula vs oracle", two_step},
      {"affine groups: formula, oracle, induced construction", affine},
      {"orbit lower bound vs oracle", orbit_bounds},
      {"GL2(F3) has minimal faithful dimension q - 1", gl2},
      {"structural property suites", properties},
      {"greedy solver vs exhaustive search on suite p-groups", solver_vs_search}};

  bool all = true;
  int index = 0;
  for (const auto& [title, body] : criteria) {
    ++index;
    Criterion c;
    const auto start = std::chrono::steady_clock::now();
    try {
      body(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = c.failures.empty();
    all &= ok;
    std::printf("%s criterion %d: %s (%.1fs)\n", ok ? "PASS" : "FAIL", index, title.c_str(), secs);
    for (const auto& n : c.notes) std::printf("    note: %s\n", n.c_str());
    for (std::size_t i = 0; i < c.failures.size() && i < 20; ++i) std::printf("    %s\n", c.failures[i].c_str());
  }
  return all ? 0 : 1;
}
