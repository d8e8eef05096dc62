#include <doctest.h>

#include <cmath>
#include <vector>

#include "modrep/errors.hpp"
#include "modrep/search.hpp"
#include "modrep/transforms.hpp"
#include "oracles.hpp"

using namespace modrep;

namespace {

// Smallest degree <= d_max admitting a representation, by trying every
// coefficient vector; -1 if none.
int brute_min_degree(unsigned n, std::uint64_t m, unsigned d_max) {
  for (unsigned d = 0; d <= d_max; ++d) {
    std::vector<std::uint64_t> monomials;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s)
      if (oracle::weight(s) <= d) monomials.push_back(s);
    std::vector<std::uint64_t> coeff(monomials.size(), 0);
    while (true) {
      std::map<std::uint64_t, std::uint64_t> terms;
      for (std::size_t i = 0; i < monomials.size(); ++i)
        if (coeff[i] != 0) terms[monomials[i]] = coeff[i];
      bool ok = true;
      for (auto x : oracle::inputs_of_weight(n, 3 * n / 4)) ok = ok && oracle::eval_terms(terms, x, m) == 0;
      for (auto x : oracle::inputs_of_weight(n, n / 4)) ok = ok && oracle::eval_terms(terms, x, m) != 0;
      if (ok) return static_cast<int>(d);
      std::size_t i = 0;
      while (i < coeff.size() && ++coeff[i] == m) coeff[i++] = 0;
      if (i == coeff.size()) break;
    }
  }
  return -1;
}

}  // namespace

TEST_SUITE("search") {

TEST_CASE("theorem bound") {
  CHECK(degree_lower_bound(8, 2, 1) == Rational(2));
  CHECK(degree_lower_bound(12, 3, 1) == Rational(3, 2));
  CHECK(degree_lower_bound(16, 2, 2) == Rational(4, 3));
  CHECK(to_string(degree_lower_bound(12, 3, 1)) == "3/2");
  CHECK(default_search_degree(8, 2) == 1);
  CHECK(default_search_degree(12, 3) == 1);
  CHECK(default_search_degree(16, 4) == 1);
  CHECK_THROWS_AS(default_search_degree(12, 6), DomainError);
}

TEST_CASE("no low-degree representation at (8, 2) and (12, 3)") {
  SearchOptions opt;
  opt.d_max = 1;
  const auto a = exhaustive_min_degree(PromiseFn(8), 2, opt);
  CHECK_FALSE(a.found());
  CHECK(a.d_max == 1);
  CHECK(a.candidates_examined > 0);

  opt.d_max = 0;
  CHECK_FALSE(exhaustive_min_degree(PromiseFn(8), 2, opt).found());

  opt.d_max = 1;
  const auto b = exhaustive_min_degree(PromiseFn(12), 3, opt);
  CHECK_FALSE(b.found());
  opt.order = EnumerationOrder::Descending;
  CHECK_FALSE(exhaustive_min_degree(PromiseFn(12), 3, opt).found());
  opt.jobs = 4;
  CHECK_FALSE(exhaustive_min_degree(PromiseFn(12), 3, opt).found());
}

TEST_CASE("search agrees with brute force on tiny instances") {
  for (std::uint64_t m : {2, 3, 4, 5, 6})
    for (unsigned d_max : {1U, 2U}) {
      if (m >= 5 && d_max == 2) continue;
      SearchOptions opt;
      opt.d_max = d_max;
      const auto r = exhaustive_min_degree(PromiseFn(4), m, opt);
      const int expected = brute_min_degree(4, m, d_max);
      CAPTURE(m);
      CAPTURE(d_max);
      CHECK(r.found() == (expected >= 0));
      if (r.found()) {
        CHECK(static_cast<int>(r.found_degree()) == expected);
        CHECK(oracle::represents_brute(*r.witness, 4, m));
      }
    }
}

TEST_CASE("degree <= 1 verdicts at n = 8 match brute force") {
  SearchOptions opt;
  opt.d_max = 1;
  for (std::uint64_t m : {2, 3, 4, 6}) {
    CAPTURE(m);
    const auto r = exhaustive_min_degree(PromiseFn(8), m, opt);
    const int expected = brute_min_degree(8, m, 1);
    CHECK(r.found() == (expected >= 0));
    if (r.found()) CHECK(oracle::represents_brute(*r.witness, 8, m));
  }
}

TEST_CASE("result does not depend on jobs or order") {
  SearchOptions one;
  one.d_max = 2;
  SearchOptions many = one;
  many.jobs = 3;
  SearchOptions reversed = one;
  reversed.order = EnumerationOrder::Descending;
  for (std::uint64_t m : {3, 4}) {
    const auto a = exhaustive_min_degree(PromiseFn(4), m, one);
    const auto b = exhaustive_min_degree(PromiseFn(4), m, many);
    const auto c = exhaustive_min_degree(PromiseFn(4), m, reversed);
    CHECK(a.found() == b.found());
    CHECK(a.found() == c.found());
    if (a.found()) {
      CHECK(*a.witness == *b.witness);
      CHECK(a.found_degree() == c.found_degree());
    }
  }
}

TEST_CASE("budget") {
  SearchOptions opt;
  opt.d_max = 3;
  CHECK_THROWS_AS(exhaustive_min_degree(PromiseFn(24), 2, opt), BudgetExceeded);
  try {
    exhaustive_min_degree(PromiseFn(24), 2, opt);
  } catch (const BudgetExceeded& e) {
    CHECK(e.log10_candidates() == doctest::Approx(search_space_log10(24, 2, 3)));
  }
  CHECK(search_space_log10(8, 2, 1) == doctest::Approx(9 * std::log10(2.0)));
  CHECK_THROWS_AS(exhaustive_min_degree(PromiseFn(28), 2, SearchOptions{}), DomainError);
}

TEST_CASE("counting identities") {
  const auto a = verify_counting_identities(5, 1);
  CHECK(a.holds());
  CHECK(a.constraint_count == 3);
  CHECK(verify_counting_identities(2, 2).holds());
  const auto c = verify_counting_identities(3, 1);
  CHECK(c.holds());
  CHECK(c.constraint_count == 0);

  for (std::uint64_t p : {2, 3, 5, 7, 11})
    for (unsigned r = 0; 3 * ipow(p, r) <= 2000; ++r) {
      const std::uint64_t q = ipow(p, r);
      CHECK(verify_counting_identities(p, r).holds());
      CHECK(oracle::binomial_mod(3 * q, q, p) == 3 % p);
      for (std::uint64_t l = 1; l < q; ++l) CHECK(oracle::binomial_mod(3 * q - l, q - l, p) == 1 % p);
    }
}

TEST_CASE("contradiction check") {
  CHECK(contradiction_check(5));
  CHECK(contradiction_check(2));
  CHECK_FALSE(contradiction_check(3));
  for (std::uint64_t p : {7, 11, 13, 17, 19, 23}) CHECK(contradiction_check(p));
}

TEST_CASE("constraint rows") {
  const auto reject = build_reject_constraint(8, 0b111111, 2);
  CHECK(reject.columns.size() == 7);
  CHECK(reject.target == 0);
  for (auto bit : reject.incidence) CHECK(bit == 1);

  const auto empty = build_reject_constraint(8, 0, 1);
  CHECK(empty.columns == std::vector<Mask>{0});
  CHECK(empty.incidence == std::vector<std::uint8_t>{1});

  const auto accept = build_accept_constraint(8, 0b000011, 2);
  CHECK(accept.target == 1);
  int ones = 0;
  for (auto bit : accept.incidence) ones += bit;
  CHECK(ones == 3);
  CHECK(accept.incidence[0] == 1);

  CHECK_THROWS_AS(build_reject_constraint(8, Mask{1} << 6, 2), DomainError);
}

TEST_CASE("column sums reproduce the counting argument") {
  // n = 4p^r: accept rows over 3n/4 variables at degree bound n/4.
  for (auto [n, p] : std::vector<std::pair<unsigned, std::uint64_t>>{{8, 2}, {16, 2}, {12, 3}}) {
    const auto rows = lower_bound_system(n);
    const std::vector<ConstraintRow> accepts(rows.begin() + 1, rows.end());
    CHECK(accepts.size() == oracle::binomial(3 * n / 4, n / 4));
    const auto sums = column_sums(accepts, p);
    for (std::size_t i = 0; i < sums.size(); ++i) {
      const unsigned size = oracle::weight(rows.front().columns[i]);
      CHECK(sums[i] == oracle::binomial_mod(3 * n / 4 - size, n / 4 - size, p));
    }
  }
}

}  // TEST_SUITE
