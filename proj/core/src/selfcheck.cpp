#include "modrep/selfcheck.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <random>
#include <string>

#include "modrep/construct.hpp"
#include "modrep/errors.hpp"
#include "modrep/numtheory.hpp"
#include "modrep/polytext.hpp"
#include "modrep/qsim.hpp"
#include "modrep/search.hpp"
#include "modrep/separation.hpp"
#include "modrep/transforms.hpp"

namespace modrep {

namespace {

// A check returns an empty string on success, otherwise a description of the
// first counterexample.
using Check = std::function<std::string()>;

void run(std::vector<CheckResult>& out, const char* module, const char* name, const Check& check) {
  CheckResult r{module, name, false, {}};
  try {
    r.detail = check();
    r.passed = r.detail.empty();
  } catch (const std::exception& e) {
    r.detail = std::string("exception: ") + e.what();
  }
  out.push_back(std::move(r));
}

std::string at(std::initializer_list<std::uint64_t> values) {
  std::string s = "counterexample at (";
  bool first = true;
  for (auto v : values) {
    s += (first ? "" : ", ") + std::to_string(v);
    first = false;
  }
  return s + ")";
}

void numtheory_checks(std::vector<CheckResult>& out) {
  run(out, "numtheory", "lucas agrees with pascal, n,k <= 300, p <= 13", [] {
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
      const PascalTable t(300, p);
      for (std::uint64_t n = 0; n <= 300; ++n)
        for (std::uint64_t k = 0; k <= 300; ++k)
          if (binom_mod_prime(n, k, p) != t(n, k)) return at({n, k, p});
    }
    return std::string{};
  });
  run(out, "numtheory", "lucas+crt agrees with pascal, m in {6,10,15,30}", [] {
    for (std::uint64_t m : {6, 10, 15, 30}) {
      const PascalTable t(300, m);
      for (std::uint64_t n = 0; n <= 300; ++n)
        for (std::uint64_t k = 0; k <= 300; ++k)
          if (binom_mod_squarefree(n, k, m) != t(n, k)) return at({n, k, m});
    }
    return std::string{};
  });
  run(out, "numtheory", "p^k | v iff C(v, p^i) = 0 mod p for all i < k", [] {
    for (auto [p, k] : {std::pair<std::uint64_t, unsigned>{2, 2}, {2, 3}, {3, 2}})
      for (std::uint64_t v = 0; v <= 5000; ++v)
        if (modzero_predicate(v, p, k) != (v % ipow(p, k) == 0)) return at({v, p, k});
    return std::string{};
  });
  run(out, "numtheory", "first nonzero digit index matches digit string", [] {
    for (std::uint64_t p : {2, 3, 5, 7})
      for (std::uint64_t n = 1; n <= 5000; ++n) {
        const auto d = digits(n, p);
        std::size_t i = 0;
        while (d.digits[i] == 0) ++i;
        if (i != first_nonzero_digit_index(n, p) || d.value() != n) return at({n, p});
      }
    return std::string{};
  });
}

void boolpoly_checks(std::vector<CheckResult>& out, std::mt19937_64& rng) {
  run(out, "boolpoly", "symmetric evaluation matches explicit expansion", [&] {
    std::uniform_int_distribution<unsigned> n_dist(1, 12);
    for (int trial = 0; trial < 40; ++trial) {
      const unsigned n = n_dist(rng);
      const std::uint64_t m = std::uniform_int_distribution<std::uint64_t>(2, 12)(rng);
      SymmetricLevelPoly s(n, m);
      for (unsigned d = 0; d <= n; ++d) s.set_level(d, std::uniform_int_distribution<Residue>(0, m - 1)(rng));
      const auto explicit_poly = s.to_multilinear();
      for (Mask x = 0; x < (Mask{1} << n); ++x)
        if (explicit_poly.eval(x) != s.eval(popcount(x))) return at({n, m, x});
    }
    return std::string{};
  });
  run(out, "boolpoly", "multiplication is a commutative ring product", [&] {
    for (int trial = 0; trial < 60; ++trial) {
      const unsigned n = std::uniform_int_distribution<unsigned>(1, 6)(rng);
      const std::uint64_t m = std::uniform_int_distribution<std::uint64_t>(2, 9)(rng);
      const auto a = random_multilinear(n, m, 3, 0.4, rng);
      const auto b = random_multilinear(n, m, 3, 0.4, rng);
      const auto c = random_multilinear(n, m, 3, 0.4, rng);
      if (a * b != b * a || (a * b) * c != a * (b * c) || a * (b + c) != a * b + a * c) return at({n, m});
      for (Mask x = 0; x < (Mask{1} << n); ++x)
        if ((a * b).eval(x) != mul_mod(a.eval(x), b.eval(x), m)) return at({n, m, x});
    }
    return std::string{};
  });
  run(out, "boolpoly", "unit monomial expansion preserves values", [&] {
    for (int trial = 0; trial < 40; ++trial) {
      const unsigned n = std::uniform_int_distribution<unsigned>(1, 8)(rng);
      const std::uint64_t m = std::uniform_int_distribution<std::uint64_t>(2, 9)(rng);
      const auto g = random_multilinear(n, m, n, 0.3, rng);
      const auto units = UnitMonomialList::from(g);
      for (Mask x = 0; x < (Mask{1} << n); ++x)
        if (units.count(x) % m != g.eval(x)) return at({n, m, x});
    }
    return std::string{};
  });
  run(out, "boolpoly", "polynomial text round-trips", [&] {
    for (int trial = 0; trial < 100; ++trial) {
      const unsigned n = std::uniform_int_distribution<unsigned>(0, 10)(rng);
      const std::uint64_t m = std::uniform_int_distribution<std::uint64_t>(2, 50)(rng);
      const auto g = random_multilinear(n, m, 4, 0.2, rng);
      if (parse_poly(format_poly(g)) != g) return format_poly(g);
    }
    return std::string{};
  });
}

void transforms_checks(std::vector<CheckResult>& out, std::mt19937_64& rng) {
  run(out, "transforms", "fermat normalization is 0/1-valued and zero-set preserving", [&] {
    for (int trial = 0; trial < 200; ++trial) {
      const std::uint64_t p = std::array<std::uint64_t, 3>{2, 3, 5}[trial % 3];
      const unsigned n = std::uniform_int_distribution<unsigned>(1, 8)(rng);
      const auto g = random_multilinear(n, p, 3, 0.3, rng);
      const auto h = fermat_normalize(g, p);
      if (h.degree() > std::min<unsigned>((p - 1) * g.degree(), n)) return at({p, n});
      for (Mask x = 0; x < (Mask{1} << n); ++x) {
        const auto hv = h.eval(x);
        if (hv > 1 || (hv == 0) != (g.eval(x) == 0)) return at({p, n, x});
      }
    }
    return std::string{};
  });
  run(out, "transforms", "prime-power reduction preserves zero sets within the degree bound", [&] {
    const std::pair<std::uint64_t, unsigned> cases[] = {{2, 2}, {2, 3}, {3, 2}};
    for (int trial = 0; trial < 100; ++trial) {
      const auto [p, k] = cases[trial % 3];
      const unsigned n = std::uniform_int_distribution<unsigned>(1, 6)(rng);
      const auto g = random_multilinear(n, ipow(p, k), 2, 0.4, rng);
      const auto red = prime_power_reduce(g, p, k);
      if (red.degree > red.degree_bound) return at({p, k, n, red.degree});
      for (Mask x = 0; x < (Mask{1} << n); ++x)
        if ((red.h.eval(x) == 0) != (g.eval(x) == 0)) return at({p, k, n, x});
    }
    return std::string{};
  });
  run(out, "transforms", "terms after the first nonzero binomial vanish", [&] {
    for (int trial = 0; trial < 60; ++trial) {
      const std::uint64_t p = trial % 2 == 0 ? 2 : 3;
      const unsigned k = p == 2 ? 3 : 2;
      const unsigned n = std::uniform_int_distribution<unsigned>(1, 5)(rng);
      const auto g = random_multilinear(n, ipow(p, k), 2, 0.5, rng);
      const auto red = prime_power_reduce(g, p, k);
      const auto units = UnitMonomialList::from(g);
      for (Mask x = 0; x < (Mask{1} << n); ++x) {
        const auto count = units.count(x);
        unsigned r = 0;
        while (r < k && binom_mod_prime(count, ipow(p, r), p) == 0) ++r;
        for (unsigned i = 0; i < k; ++i) {
          const auto v = red.terms[i].eval(x);
          if ((i == r) != (v != 0)) return at({p, k, n, x, i});
        }
      }
    }
    return std::string{};
  });
}

void construct_checks(std::vector<CheckResult>& out) {
  run(out, "construct", "build verifies for m in {6,10,15,30}, 4 | n <= 10^5", [] {
    for (std::uint64_t m : {6, 10, 15, 30})
      for (std::uint64_t n = 4; n <= 100'000; n += 4) {
        const auto c = build(n, m);
        if (!asymptotic_witness(c.desc)) return at({n, m});
      }
    return std::string{};
  });
  run(out, "construct", "some prime of m avoids every a with m not dividing a", [] {
    for (std::uint64_t m : {6, 10, 15, 30, 105}) {
      const auto primes = factorize(m).primes();
      for (std::uint64_t a = 1; a <= 10 * m; ++a) {
        if (a % m == 0) continue;
        if (std::all_of(primes.begin(), primes.end(), [a](auto p) { return a % p == 0; })) return at({m, a});
      }
    }
    return std::string{};
  });
  run(out, "construct", "binomial difference mod m iff digit difference", [] {
    for (std::uint64_t m : {6, 10, 15, 30})
      for (std::uint64_t a = 1; a < m; ++a)
        for (unsigned b = 1; b <= 3; ++b)
          for (auto p : factorize(m).primes())
            for (unsigned l = 0; ipow(p, l) <= 3 * a * ipow(m, b); ++l)
              if (digit_difference_check(a, b, p, l, m) != digits_differ(a, b, p, l, m)) return at({m, a, b, p, l});
    return std::string{};
  });
  run(out, "construct", "residue-case binomials differ", [] {
    for (std::uint64_t m : {6, 10, 15, 30, 105})
      for (std::uint64_t a = 0; a <= 50; ++a)
        for (std::uint64_t c = 1; c < m; ++c) {
          const std::uint64_t lo = a * m + c, hi = 3 * lo;
          if (2 * c != m) {
            if (lo % m == hi % m) return at({m, a, c});
          } else if (digits(lo, 2).at(1) == digits(hi, 2).at(1)) {
            return at({m, a, c});
          }
        }
    return std::string{};
  });
}

void search_checks(std::vector<CheckResult>& out, unsigned jobs) {
  run(out, "search", "counting identities, 3p^r <= 2000", [] {
    for (std::uint64_t p : {2, 3, 5, 7, 11})
      for (unsigned r = 0; 3 * ipow(p, r) <= 2000; ++r)
        if (!verify_counting_identities(p, r).holds()) return at({p, r});
    return std::string{};
  });
  run(out, "search", "contradiction closes exactly for p != 3", [] {
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13})
      if (contradiction_check(p) != (p != 3)) return at({p});
    return std::string{};
  });
  run(out, "search", "no degree <= 1 representation at (8, 2) or (12, 3), either order", [jobs] {
    for (auto [n, m] : {std::pair<std::uint64_t, std::uint64_t>{8, 2}, {12, 3}})
      for (auto order : {EnumerationOrder::Ascending, EnumerationOrder::Descending}) {
        SearchOptions opt;
        opt.d_max = 1;
        opt.jobs = jobs;
        opt.order = order;
        if (exhaustive_min_degree(PromiseFn(n), m, opt).found()) return at({n, m});
      }
    return std::string{};
  });
}

void qsim_checks(std::vector<CheckResult>& out, std::mt19937_64& rng) {
  run(out, "qsim", "one iteration is exact for N = 4K, K <= 256", [&] {
    for (std::size_t k = 1; k <= 256; ++k) {
      const std::size_t n = 4 * k;
      for (const std::size_t count : {k, 3 * k}) {
        const auto set = OracleSet::random(n, count, rng);
        const auto flipped = QueryState::uniform(n).oracle_phase_flip(set);
        const auto state = flipped.diffusion();
        const Rational expected(count == k ? 1 : 0);
        if (flipped.norm() != Rational(static_cast<std::int64_t>(n)) ||
            state.norm() != Rational(static_cast<std::int64_t>(n)) || state.marked_probability(set) != expected)
          return at({n, count});
        const auto d = one_query_decide(set, rng);
        if ((d.verdict == Fraction::Quarter) != (count == k)) return at({n, count});
      }
    }
    return std::string{};
  });
}

void separation_checks(std::vector<CheckResult>& out, std::mt19937_64& rng) {
  run(out, "separation", "machine polynomial counts accepting paths", [&] {
    for (int trial = 0; trial < 300; ++trial) {
      const unsigned n = std::uniform_int_distribution<unsigned>(1, 10)(rng);
      const std::uint64_t m = std::uniform_int_distribution<std::uint64_t>(2, 6)(rng);
      const auto machine = random_machine(n, m, 6, 4, rng);
      const auto q = machine_polynomial(machine);
      if (q.degree() > machine.depth()) return at({n, m});
      for (Mask x = 0; x < (Mask{1} << n); ++x)
        if (q.eval(x) != machine.accepting_count(x) % m) return at({n, m, x});
    }
    return std::string{};
  });
  run(out, "separation", "every depth <= 1 machine at (8, 2) is fooled", [] {
    const PromiseFn g(8);
    for (const auto& machine : depth_one_machine_corpus(8, 2, 4)) {
      const auto f = find_fooling_oracle(machine, g);
      if (accepts(machine, f.oracle) == f.truth || popcount(f.oracle) != f.weight) return format_machine(machine);
    }
    return std::string{};
  });
}

}  // namespace

std::vector<CheckResult> run_selfcheck(std::uint64_t seed, unsigned jobs) {
  std::mt19937_64 rng(seed);
  std::vector<CheckResult> out;
  numtheory_checks(out);
  boolpoly_checks(out, rng);
  transforms_checks(out, rng);
  construct_checks(out);
  search_checks(out, jobs);
  qsim_checks(out, rng);
  separation_checks(out, rng);
  return out;
}

}  // namespace modrep
