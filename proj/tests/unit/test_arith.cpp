#include <doctest.h>

#include <complex>
#include <random>

#include "faithrep/arith.hpp"
#include "faithrep/cyclotomic.hpp"
#include "helpers.hpp"

using namespace faithrep;

TEST_SUITE("arith") {
  TEST_CASE("floor division and modulus") {
    CHECK(floor_mod(-1, 4) == 3);
    CHECK(floor_mod(7, 4) == 3);
    CHECK(floor_div(-7, 2) == -4);
    CHECK(floor_div(7, -2) == -4);
  }

  TEST_CASE("primes and powers") {
    CHECK(is_prime(2));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    int k = 0;
    CHECK(prime_power_base(81, &k) == 3);
    CHECK(k == 4);
    CHECK(prime_power_base(12) == 0);
    CHECK(exact_isqrt(144) == 12);
    CHECK(exact_isqrt(145) == -1);
    CHECK(ipow(5, 6) == 15625);
  }

  TEST_CASE("modular inverse") {
    for (std::int64_t a = 1; a < 13; ++a) CHECK(floor_mod(a * invmod(a, 13), 13) == 1);
    CHECK(powmod(3, 12, 13) == 1);
  }

  TEST_CASE("overflow is reported") {
    CHECK(error_of([] { checked_mul(std::int64_t{1} << 40, std::int64_t{1} << 40); }) == ErrorCode::overflow);
    CHECK(error_of([] { ipow(10, 30); }) == ErrorCode::overflow);
  }

  TEST_CASE("gcd and lcm") {
    CHECK(gcd64(12, 18) == 6);
    CHECK(gcd64(0, 5) == 5);
    CHECK(lcm64(4, 6) == 12);
  }
}

TEST_SUITE("cyclotomic") {
  TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<std::int64_t>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<std::int64_t>{1, -1, 1});
    CHECK(euler_phi(9) == 6);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(24) == 8);
  }

  TEST_CASE("roots of unity have the right order") {
    for (int m : {1, 2, 3, 4, 6, 8, 9, 12, 16, 18, 24}) {
      const auto z = Cyclotomic::root_of_unity(m, 1);
      Cyclotomic acc = Cyclotomic::integer(1, m);
      for (int i = 1; i <= m; ++i) {
        acc *= z;
        if (i < m) CHECK_FALSE(acc == Cyclotomic::integer(1, m));
      }
      CHECK(acc == Cyclotomic::integer(1, m));
    }
  }

  TEST_CASE("sums of all p-th roots vanish") {
    for (int p : {2, 3, 5, 7}) {
      Cyclotomic s = Cyclotomic::integer(0, p);
      for (int j = 0; j < p; ++j) s += Cyclotomic::root_of_unity(p, j);
      CHECK(s.is_zero());
    }
    Cyclotomic s = Cyclotomic::integer(0, 12);
    for (int j = 0; j < 12; ++j) s += Cyclotomic::root_of_unity(12, j);
    CHECK(s.is_zero());
  }

  TEST_CASE("mixed orders compare after lifting") {
    const auto a = Cyclotomic::root_of_unity(4, 1);
    const auto b = Cyclotomic::root_of_unity(8, 2);
    CHECK(a == b);
    CHECK(Cyclotomic::root_of_unity(6, 3) == Cyclotomic::integer(-1));
    CHECK((Cyclotomic::root_of_unity(3, 1) * Cyclotomic::root_of_unity(2, 1)) == Cyclotomic::root_of_unity(6, 5));
    CHECK(a.lift(24) == a);
  }

  TEST_CASE("complex embedding agrees with exact arithmetic") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int m : {5, 8, 9, 12}) {
      for (int trial = 0; trial < 30; ++trial) {
        std::vector<std::int64_t> ra(static_cast<std::size_t>(m)), rb(static_cast<std::size_t>(m));
        for (auto& c : ra) c = coef(rng);
        for (auto& c : rb) c = coef(rng);
        const auto a = Cyclotomic::from_coefficients(m, ra);
        const auto b = Cyclotomic::from_coefficients(m, rb);
        CHECK(std::abs((a * b).to_complex() - a.to_complex() * b.to_complex()) < 1e-9);
        CHECK(std::abs((a - b).to_complex() - (a.to_complex() - b.to_complex())) < 1e-9);
        CHECK(std::abs(a.conj().to_complex() - std::conj(a.to_complex())) < 1e-9);
        CHECK((a - a).is_zero());
      }
    }
  }

  TEST_CASE("integers are recognized") {
    const auto v = Cyclotomic::root_of_unity(3, 1) + Cyclotomic::root_of_unity(3, 2);
    REQUIRE(v.as_integer().has_value());
    CHECK(*v.as_integer() == -1);
    CHECK_FALSE(Cyclotomic::root_of_unity(4, 1).as_integer().has_value());
  }
}
