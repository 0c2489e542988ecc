#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>

#include "pgraph/number_theory.hpp"

using namespace pgraph;

namespace {

// counting oracle, independent of the multiplicative implementation
std::uint64_t phi_by_count(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++count;
  return count;
}

}  // namespace

TEST_CASE("euler_phi basics") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(9) == 6);
  for (std::uint64_t p : {2, 3, 5, 7, 11, 97}) CHECK(euler_phi(p) == p - 1);
  CHECK_THROWS_AS(euler_phi(0), std::invalid_argument);
}

TEST_CASE("euler_phi matches the counting oracle") {
  for (std::uint64_t n = 1; n <= 500; ++n) CHECK(euler_phi(n) == phi_by_count(n));
}

TEST_CASE("euler_phi is multiplicative on coprime arguments") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<std::uint64_t> pick(1, 1000);
  int checked = 0;
  while (checked < 300) {
    std::uint64_t a = pick(rng), b = pick(rng);
    if (std::gcd(a, b) != 1) continue;
    CHECK(euler_phi(a * b) == euler_phi(a) * euler_phi(b));
    ++checked;
  }
}

TEST_CASE("divisors") {
  CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(1) == std::vector<std::uint64_t>{1});
  CHECK(divisors(97) == std::vector<std::uint64_t>{1, 97});
  CHECK_THROWS_AS(divisors(0), std::invalid_argument);
}

TEST_CASE("totient divisor sum telescopes to n") {
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    std::uint64_t sum = 0;
    for (std::uint64_t d : divisors(n)) sum += euler_phi(d);
    REQUIRE(sum == n);
  }
}

TEST_CASE("primality and prime powers") {
  CHECK(is_prime(2));
  CHECK(is_prime(13));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(prime_divisors(60) == std::vector<std::uint64_t>{2, 3, 5});
  CHECK(prime_divisors(1).empty());
  CHECK(is_prime_power(8));
  CHECK(is_prime_power(27));
  CHECK_FALSE(is_prime_power(12));
  CHECK_FALSE(is_prime_power(1));
}

TEST_CASE("crt_solve on the worked examples") {
  ResidueClass r = crt_solve({{{2, 3}, {3, 5}}});
  CHECK(r.value == 8);
  CHECK(r.modulus == 15);

  r = crt_solve({{{0, 7}}});
  CHECK(r.value == 0);
  CHECK(r.modulus == 7);

  r = crt_solve({{{1, 4}, {2, 9}, {3, 25}}});
  CHECK(r.modulus == 900);
  CHECK(r.value % 4 == 1);
  CHECK(r.value % 9 == 2);
  CHECK(r.value % 25 == 3);
}

TEST_CASE("crt_solve result is the unique solution (exhaustive scan)") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::uint64_t> moduli_pool{3, 4, 5, 7, 9, 11, 13};
    std::shuffle(moduli_pool.begin(), moduli_pool.end(), rng);
    CongruenceSystem sys;
    std::uint64_t product = 1;
    for (std::uint64_t m : moduli_pool) {
      bool coprime = true;
      for (auto& [res, mm] : sys.congruences) coprime = coprime && std::gcd(m, mm) == 1;
      if (!coprime || product * m > 10000) continue;
      sys.congruences.push_back({static_cast<std::int64_t>(rng() % m), m});
      product *= m;
    }
    if (sys.congruences.empty()) continue;
    ResidueClass r = crt_solve(sys);
    REQUIRE(r.modulus == product);
    std::uint64_t matches = 0, witness = 0;
    for (std::uint64_t x = 0; x < product; ++x) {
      bool all = true;
      for (auto& [res, m] : sys.congruences)
        all = all && x % m == static_cast<std::uint64_t>(res) % m;
      if (all) {
        ++matches;
        witness = x;
      }
    }
    REQUIRE(matches == 1);
    REQUIRE(witness == r.value);
  }
}

TEST_CASE("crt_solve rejects non-coprime moduli with a gcd witness") {
  try {
    crt_solve({{{1, 4}, {2, 6}}});
    FAIL("expected an exception");
  } catch (const std::invalid_argument& e) {
    std::string msg = e.what();
    CHECK(msg.find("gcd 2") != std::string::npos);
  }
}

TEST_CASE("phi identity frozen values") {
  PhiIdentitySides s = phi_identity_sides(2, 3);
  CHECK(s.lhs == 42);
  CHECK(s.rhs == 42);
  s = phi_identity_sides(3, 2);
  CHECK(s.lhs == 56);
  CHECK(s.rhs == 56);
  s = phi_identity_sides(2, 1);
  CHECK(s.lhs == 0);
  CHECK(s.rhs == 0);
}

TEST_CASE("phi identity holds across the prime-power grid") {
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
    std::uint64_t pn = 1;
    for (unsigned n = 1; pn * p <= 100000; ++n) {
      pn *= p;
      PhiIdentitySides s = phi_identity_sides(p, n);
      REQUIRE(s.lhs == s.rhs);
    }
  }
}

TEST_CASE("phi identity rejects bad arguments and overflow") {
  CHECK_THROWS_AS(phi_identity_sides(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(phi_identity_sides(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(phi_identity_sides(2, 64), std::overflow_error);
}
