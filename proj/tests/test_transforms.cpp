#include <doctest.h>

#include <random>

#include "modrep/errors.hpp"
#include "modrep/transforms.hpp"
#include "oracles.hpp"

using namespace modrep;

TEST_SUITE("transforms") {

TEST_CASE("fermat normalization examples") {
  const auto g = MultilinearPoly::variable(1, 3, 1) * 2;
  CHECK(fermat_normalize(g, 3) == MultilinearPoly::variable(1, 3, 1));

  const auto b = MultilinearPoly::variable(3, 2, 1) * MultilinearPoly::variable(3, 2, 3);
  CHECK(fermat_normalize(b, 2) == b);

  const auto s = MultilinearPoly::variable(2, 3, 1) + MultilinearPoly::variable(2, 3, 2);
  const auto h = fermat_normalize(s, 3);
  CHECK(h.eval(0b00) == 0);
  CHECK(h.eval(0b01) == 1);
  CHECK(h.eval(0b10) == 1);
  CHECK(h.eval(0b11) == 1);
  CHECK_THROWS_AS(fermat_normalize(MultilinearPoly(2, 4), 4), DomainError);
  CHECK_THROWS_AS(fermat_normalize(MultilinearPoly(2, 5), 3), DomainError);
}

TEST_CASE("fermat normalization contract") {
  std::mt19937_64 rng(101);
  for (std::uint64_t p : {2, 3, 5})
    for (int t = 0; t < 25; ++t) {
      const unsigned n = 2 + rng() % 5;
      const auto g = random_multilinear(n, p, 3, 0.4, rng);
      const auto h = fermat_normalize(g, p);
      CHECK(h.degree() <= (p - 1) * g.degree());
      for (Mask v = 0; v < (Mask{1} << n); ++v) {
        const auto hv = oracle::eval_terms(h.terms(), v, p);
        CHECK(hv <= 1);
        CHECK((hv == 0) == (oracle::eval_terms(g.terms(), v, p) == 0));
      }
    }
}

TEST_CASE("unit monomial list") {
  const auto g = MultilinearPoly::constant(2, 4, 2) + MultilinearPoly::variable(2, 4, 1);
  const auto units = UnitMonomialList::from(g);
  CHECK(units.size() == 3);
  CHECK(units.count(0b00) == 2);
  CHECK(units.count(0b01) == 3);
}

TEST_CASE("binom_of_poly") {
  UnitMonomialList units{2, {0b01, 0b10}};
  CHECK(binom_of_poly(units, 0, 3) == MultilinearPoly::constant(2, 3, 1));
  CHECK(binom_of_poly(units, 1, 3) == MultilinearPoly::variable(2, 3, 1) + MultilinearPoly::variable(2, 3, 2));
  CHECK(binom_of_poly(units, 2, 3).eval(0b11) == 1);
  CHECK(binom_of_poly(units, 3, 3).is_zero());

  std::mt19937_64 rng(17);
  for (int t = 0; t < 20; ++t) {
    const auto g = random_multilinear(5, 4, 2, 0.3, rng);
    const auto u = UnitMonomialList::from(g);
    const auto levels = elementary_symmetric_levels(u, 6, 3);
    REQUIRE(levels.size() == 7);
    for (std::uint64_t j = 0; j <= 6; ++j)
      for (Mask v = 0; v < 32; ++v) CHECK(levels[j].eval(v) == oracle::binomial_mod(u.count(v), j, 3));
  }
}

TEST_CASE("modzero predicate") {
  CHECK(modzero_predicate(8, 2, 3));
  CHECK_FALSE(modzero_predicate(6, 2, 2));
  CHECK(modzero_predicate(0, 5, 4));
  for (auto [p, k] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 2}, {2, 3}, {3, 2}, {5, 2}})
    for (std::uint64_t v = 0; v <= 5000; ++v) CHECK(modzero_predicate(v, p, k) == (v % ipow(p, k) == 0));
}

TEST_CASE("prime-power reduction examples") {
  std::mt19937_64 rng(41);
  const auto g1 = random_multilinear(4, 5, 2, 0.5, rng);
  CHECK(prime_power_reduce(g1, 5, 1).h == g1);

  const auto g = MultilinearPoly::variable(1, 4, 1) * 2;
  const auto r = prime_power_reduce(g, 2, 2);
  CHECK(r.h.modulus() == 2);
  CHECK(r.h.eval(0) == 0);
  CHECK(r.h.eval(1) != 0);
  CHECK(r.degree_bound == 3);
  CHECK(r.degree <= 3);
  CHECK(r.terms.size() == 2);
  CHECK_THROWS_AS(prime_power_reduce(g, 2, 3), DomainError);
  CHECK_THROWS_AS(prime_power_reduce(g, 2, 0), DomainError);
}

TEST_CASE("prime-power reduction contract") {
  std::mt19937_64 rng(43);
  for (auto [p, k] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 2}, {2, 3}, {3, 2}})
    for (int t = 0; t < 15; ++t) {
      const std::uint64_t q = ipow(p, k);
      const unsigned n = 3 + rng() % 4;
      const auto g = random_multilinear(n, q, 2, 0.4, rng);
      const auto r = prime_power_reduce(g, p, k);
      CHECK(r.degree == r.h.degree());
      CHECK(r.degree <= r.degree_bound);
      CHECK(r.degree_bound == g.degree() * (2 * ipow(p, k - 1) - 1));
      for (Mask v = 0; v < (Mask{1} << n); ++v)
        CHECK((oracle::eval_terms(g.terms(), v, q) == 0) == (oracle::eval_terms(r.h.terms(), v, p) == 0));
    }
}

TEST_CASE("summands after the first nonzero binomial vanish") {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 20; ++t) {
    const auto g = random_multilinear(5, 8, 2, 0.5, rng);
    const auto r = prime_power_reduce(g, 2, 3);
    const auto units = UnitMonomialList::from(g);
    for (Mask v = 0; v < 32; ++v) {
      unsigned first = 3;
      for (unsigned i = 0; i < 3 && first == 3; ++i)
        if (oracle::binomial_mod(units.count(v), ipow(2, i), 2) != 0) first = i;
      for (unsigned i = first + 1; i < 3; ++i) CHECK(r.terms[i].eval(v) == 0);
    }
  }
}

TEST_CASE("random Z_9 polynomial on six variables") {
  std::mt19937_64 rng(2024);
  const auto g = random_multilinear(6, 9, 3, 0.3, rng);
  const auto r = prime_power_reduce(g, 3, 2);
  for (Mask v = 0; v < 64; ++v) CHECK((g.eval(v) == 0) == (r.h.eval(v) == 0));
}

TEST_CASE("ipow") {
  CHECK(ipow(3, 4) == 81);
  CHECK(ipow(7, 0) == 1);
  CHECK_THROWS_AS(ipow(10, 20), DomainError);
}

}  // TEST_SUITE
