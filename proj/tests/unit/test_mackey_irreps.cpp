#include <doctest.h>

#include <algorithm>
#include <iterator>
#include <map>
#include <set>

#include "faithrep/arith.hpp"
#include "faithrep/mackey_irreps.hpp"
#include "helpers.hpp"

using namespace faithrep;

namespace {

struct Instance {
  RingParams ring;
  int k;
};

// every Heisenberg test group of order <= 4096
const std::vector<Instance> kSmall = {
    {{2, 1, 1, 1}, 1}, {{3, 1, 1, 1}, 1}, {{5, 1, 1, 1}, 1}, {{2, 1, 1, 2}, 1}, {{2, 1, std::nullopt, 2}, 1},
    {{2, 1, 2, 2}, 1}, {{3, 1, 1, 2}, 1}, {{2, 2, 1, 1}, 1}, {{2, 1, 1, 3}, 1}, {{2, 1, 2, 3}, 1},
    {{2, 1, std::nullopt, 3}, 1}, {{3, 1, std::nullopt, 2}, 1}, {{2, 1, 1, 1}, 2}, {{3, 1, 1, 1}, 2},
    {{2, 1, 1, 2}, 2}, {{2, 1, std::nullopt, 2}, 2}, {{2, 1, 1, 1}, 3}, {{2, 2, 1, 2}, 1}};

std::int64_t total_dim_squares(const MackeyCatalog& c) {
  std::int64_t s = 0;
  for (const auto& l : c.summary()) s += l.irreps() * l.dim * l.dim;
  return s;
}

Cyclotomic inner(const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b) {
  Cyclotomic s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i].conj();
  return s;
}

}  // namespace

TEST_SUITE("mackey_irreps") {
  TEST_CASE("catalog completeness") {
    for (const auto& inst : kSmall) {
      const HeisenbergGroup h(ChainRing::make(inst.ring), inst.k);
      CAPTURE(h.name());
      const MackeyCatalog cat(h);
      CHECK(total_dim_squares(cat) == h.order());
      const auto classes = conjugacy_classes(h.materialize());
      CHECK(cat.irrep_count() == classes.count());
      if (cat.explicit_mode()) {
        const auto irr = cat.irreps();
        CHECK(static_cast<std::int64_t>(irr.size()) == cat.irrep_count());
        std::int64_t s = 0;
        for (const auto& d : irr) s += d.dim * d.dim;
        CHECK(s == h.order());
      }
    }
  }

  TEST_CASE("stabilizers, orbits and the dimension law") {
    for (const auto& inst : kSmall) {
      const HeisenbergGroup h(ChainRing::make(inst.ring), inst.k);
      CAPTURE(h.name());
      const MackeyCatalog cat(h);
      if (!cat.explicit_mode()) continue;
      const auto& r = h.ring();
      const auto& t = h.tables();
      const std::int64_t q = r.q();
      const int k = h.k();
      const std::int64_t l_size = ipow(r.size(), k);
      std::map<int, std::int64_t> orbits_per_level;
      for (const auto& o : cat.orbit_representatives()) {
        const int i = r.n() - r.valuation(r.element(o.b));
        const int level = r.valuation(r.element(o.b));
        CHECK(o.level == level);
        CHECK(o.orbit_size * o.stabilizer_size == l_size);
        CHECK(o.stabilizer_size == ipow(q, static_cast<std::int64_t>(r.n() - i) * k));
        // stabilizer by brute force: y with b y = 0, equal to (pi^(n - level) R)^k
        std::int64_t killed = 0;
        for (int y = 0; y < t.size(); ++y) {
          const bool in_ann = t.mul(o.b, y) == 0;
          CHECK(in_ann == (t.valuation(y) >= r.n() - level));
          if (in_ann) ++killed;
        }
        CHECK(ipow(killed, k) == o.stabilizer_size);
        ++orbits_per_level[level];
      }
      for (const auto& s : cat.summary()) CHECK(orbits_per_level[s.level] == s.central_values * s.orbits_per_value);
      for (const auto& d : cat.irreps()) CHECK(d.dim == ipow(q, static_cast<std::int64_t>(r.n() - d.level) * k));
    }
  }

  TEST_CASE("L acts on the dual of A by b_vec -> b_vec + b y") {
    for (const auto& inst : std::vector<Instance>{{{2, 1, 1, 2}, 1}, {{3, 1, 1, 2}, 1}, {{2, 1, 2, 2}, 2}, {{2, 2, 1, 1}, 1}}) {
      const HeisenbergGroup h(ChainRing::make(inst.ring), inst.k);
      const auto& t = h.tables();
      const AdditiveDual dual(h.ring());
      const int n = t.size();
      auto psi = [&](int idx) { return dual.psi_exponent(h.ring().element(idx)); };
      const int k = h.k();
      for (int b = 0; b < n; ++b) {
        for (int y0 = 0; y0 < n; ++y0) {
          for (int x0 = 0; x0 < n; ++x0) {
            const int bv = (b * 3 + 1) % n;
            HeisElem l{std::vector<int>(k, 0), std::vector<int>(k, y0), 0};
            HeisElem a{std::vector<int>(k, x0), std::vector<int>(k, 0), (x0 + b) % n};
            const auto conj = h.conj(a, h.inv(l));
            int lhs = t.mul(b, conj.z);
            int rhs = t.mul(b, a.z);
            for (int i = 0; i < k; ++i) {
              lhs = t.add(lhs, t.mul(bv, conj.x[i]));
              rhs = t.add(rhs, t.mul(t.add(bv, t.mul(b, y0)), a.x[i]));
            }
            CHECK(psi(lhs) == psi(rhs));
          }
        }
      }
    }
  }

  TEST_CASE("catalog characters are irreducible and distinct") {
    for (const auto& inst : std::vector<Instance>{{{2, 1, 1, 1}, 1}, {{3, 1, 1, 1}, 1}, {{2, 1, 1, 2}, 1},
                                                  {{2, 1, std::nullopt, 2}, 1}, {{2, 1, 2, 2}, 1}, {{2, 1, 1, 1}, 2}}) {
      const HeisenbergGroup h(ChainRing::make(inst.ring), inst.k);
      CAPTURE(h.name());
      const auto g = h.materialize();
      const MackeyCatalog cat(h);
      const AdditiveDual& dual = cat.dual();
      std::vector<std::vector<Cyclotomic>> chars;
      for (const auto& d : cat.irreps()) {
        const auto chi = cat.inducing_character(d);
        const auto ch = induced_character_formula(g, chi);
        CHECK(ch[0] == Cyclotomic::integer(d.dim));
        CHECK(inner(ch, ch) == Cyclotomic::integer(g.order()));
        // central character is psi_b on Z
        for (int z : h.subgroup_z()) {
          const auto zr = h.ring().element(h.decode(z).z);
          CHECK(ch[z] == Cyclotomic::integer(d.dim) * dual.evaluate_exact(d.central_char, zr));
        }
        CHECK(d.central_dual == dual.restrict_to_omega1(dual.psi_b(h.ring().element(d.b))));
        chars.push_back(ch);
      }
      for (std::size_t i = 0; i < chars.size(); ++i)
        for (std::size_t j = i + 1; j < chars.size(); ++j) CHECK(inner(chars[i], chars[j]).is_zero());
    }
  }

  TEST_CASE("level-one irreducibles of Hei3(Z/4) meet the center in {0, (0,0,2)}") {
    const HeisenbergGroup h(ChainRing::make(2, 1, 1, 2), 1);
    const auto g = h.materialize();
    const MackeyCatalog cat(h);
    HeisElem z2{{0}, {0}, 2};
    const std::vector<int> expected = {0, static_cast<int>(h.encode(z2))};
    const auto z = h.subgroup_z();
    int seen = 0;
    for (const auto& d : cat.irreps()) {
      if (d.level != 1) continue;
      ++seen;
      CHECK(d.dim == 2);
      const auto rep = induce_character(g, cat.inducing_character(d));
      const auto ker = kernel_of(g, rep.character());
      // the image is a group of order 8 with a faithful 2-dimensional irreducible
      CHECK(ker.size() == 8);
      std::vector<int> central;
      std::set_intersection(ker.begin(), ker.end(), z.begin(), z.end(), std::back_inserter(central));
      CHECK(central == expected);
    }
    CHECK(seen == 4);
  }

  TEST_CASE("Stone-von Neumann") {
    const HeisenbergGroup h4(ChainRing::make(2, 1, 1, 2), 1);
    const AdditiveDual d4(h4.ring());
    CHECK(stone_von_neumann_dim(h4, d4.psi_b(h4.ring().one())) == 4);
    CHECK(error_of([&] { stone_von_neumann_dim(h4, d4.psi_b(h4.ring().from_int(2))); }) == ErrorCode::not_generic);
    const HeisenbergGroup h5(ChainRing::make(3, 1, 1, 1), 2);
    const AdditiveDual d3(h5.ring());
    CHECK(stone_von_neumann_dim(h5, d3.psi_b(h5.ring().one())) == 9);
  }

  TEST_CASE("Schrodinger dimension equals the Mackey dimension") {
    CHECK(error_of([] {
            const SymplecticModule m(ChainRing::make(2, 1, 1, 2), 1);
            const AdditiveDual d(m.ring());
            schrodinger_dim(m, d, d.psi_b(m.ring().one()));
          }) == ErrorCode::char2_unsupported);
    for (const auto& inst : std::vector<Instance>{{{3, 1, 1, 1}, 1}, {{3, 1, 1, 2}, 1}, {{3, 1, 1, 2}, 2},
                                                  {{3, 1, std::nullopt, 2}, 1}, {{3, 1, 2, 2}, 1}, {{5, 1, 1, 1}, 2},
                                                  {{3, 1, 1, 3}, 1}}) {
      const auto ring = ChainRing::make(inst.ring);
      const SymplecticModule m(ring, inst.k);
      const AdditiveDual d(ring);
      const HeisenbergGroup h(ring, inst.k);
      const MackeyCatalog cat(h);
      for (const auto& b : ring.elements()) {
        const int bi = static_cast<int>(ring.index_of(b));
        const auto mackey = cat.describe(std::vector<int>(inst.k, 0), bi).dim;
        CHECK(schrodinger_dim(m, d, d.psi_b(b)) == mackey);
        // |V(a)| with a the conductor ideal
        const int j = d.conductor(d.psi_b(b));
        CHECK(m.perp_size(j) * mackey * mackey == m.size());
      }
    }
    const SymplecticModule m9(ChainRing::make(3, 1, 1, 2), 1);
    const AdditiveDual d9(m9.ring());
    CHECK(schrodinger_dim(m9, d9, d9.psi_b(m9.ring().one())) == 9);
    CHECK(schrodinger_dim(m9, d9, d9.psi_b(m9.ring().zero())) == 1);
    const SymplecticModule m9b(ChainRing::make(3, 1, 1, 2), 2);
    CHECK(schrodinger_dim(m9b, d9, d9.psi_b(m9.ring().from_int(3))) == 9);
  }

  TEST_CASE("symplectic pairing") {
    const SymplecticModule m(ChainRing::make(3, 1, 1, 1), 1);
    for (std::int64_t a = 0; a < m.size(); ++a) {
      const auto v = m.vector_at(a);
      CHECK(m.pairing(v, v) == 0);
      for (std::int64_t b = 0; b < m.size(); ++b) {
        const auto w = m.vector_at(b);
        CHECK(m.pairing(v, w) == m.ring().index_of(m.ring().neg(m.ring().element(m.pairing(w, v)))));
      }
    }
    CHECK(static_cast<std::int64_t>(m.perp(0).size()) == m.size());
    CHECK(m.perp(1).size() == 1);
  }

  TEST_CASE("symbolic mode") {
    const HeisenbergGroup h(ChainRing::make(3, 1, 1, 3), 3);
    const MackeyCatalog cat(h);
    CHECK_FALSE(cat.explicit_mode());
    CHECK(total_dim_squares(cat) == h.order());
    CHECK(error_of([&] { cat.irreps(); }) == ErrorCode::cap_exceeded);
    const auto s = cat.summary();
    CHECK(s.front().level == 0);
    CHECK(s.front().dim == ipow(3, 9));
  }
}
