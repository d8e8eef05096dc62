#include <doctest.h>

#include <random>

#include "modrep/errors.hpp"
#include "modrep/separation.hpp"
#include "oracles.hpp"

using namespace modrep;

namespace {

ModMachine machine(unsigned n, std::uint64_t m, std::vector<QueryPath> paths) { return {n, m, std::move(paths)}; }

// Accepting paths consistent with x, counted straight from the definition.
std::uint64_t brute_count(const ModMachine& mm, Mask x) {
  std::uint64_t count = 0;
  for (const auto& p : mm.paths) {
    if (!p.accepting) continue;
    bool ok = true;
    for (const auto& l : p.literals) ok = ok && (((x >> (l.variable - 1)) & 1U) == l.value);
    count += ok;
  }
  return count;
}

}  // namespace

TEST_SUITE("separation") {

TEST_CASE("path monomials") {
  const auto x1 = MultilinearPoly::variable(4, 3, 1);
  const auto one = MultilinearPoly::constant(4, 3, 1);
  CHECK(path_monomial({{{1, true}}, true}, 4, 3) == x1);
  CHECK(path_monomial({{{1, false}}, true}, 4, 3) == one - x1);
  const auto p = path_monomial({{{1, true}, {3, false}}, true}, 4, 3);
  CHECK(p == x1 * (one - MultilinearPoly::variable(4, 3, 3)));
  for (Mask v = 0; v < 16; ++v) CHECK(p.eval(v) == ((v & 1) && !(v & 4) ? 1U : 0U));
  CHECK(path_monomial({{{2, true}, {2, true}}, true}, 4, 3) == MultilinearPoly::variable(4, 3, 2));
  CHECK_THROWS_AS(path_monomial({{{2, true}, {2, false}}, true}, 4, 3), DomainError);
  CHECK_THROWS_AS(path_monomial({{{5, true}}, true}, 4, 3), DomainError);
}

TEST_CASE("machine polynomials") {
  CHECK(machine_polynomial(machine(8, 2, {{{}, true}})) == MultilinearPoly::constant(8, 2, 1));
  const auto twice = machine(8, 2, {{{{1, true}}, true}, {{{1, true}}, true}});
  CHECK(machine_polynomial(twice).is_zero());
  CHECK(machine_polynomial(machine(8, 2, {{{{1, true}}, false}})).is_zero());
  CHECK(machine_polynomial(machine(8, 2, {})).is_zero());
}

TEST_CASE("accepts") {
  const auto always = machine(8, 2, {{{}, true}});
  const auto twice = machine(8, 2, {{{{1, true}}, true}, {{{1, true}}, true}});
  const auto first = machine(8, 2, {{{{1, true}}, true}});
  for (Mask v = 0; v < 256; v += 5) {
    CHECK(accepts(always, v));
    CHECK_FALSE(accepts(twice, v));
  }
  CHECK(accepts(first, 0b1));
  CHECK_FALSE(accepts(first, 0b10));
}

TEST_CASE("fooling oracles") {
  const PromiseFn g(8);
  const auto a = find_fooling_oracle(machine(8, 2, {{{}, true}}), g);
  CHECK(to_bitstring(a.oracle, 8) == "00111111");
  CHECK(a.weight == 6);
  CHECK(a.machine_says);
  CHECK_FALSE(a.truth);

  const auto b = find_fooling_oracle(machine(8, 2, {}), g);
  CHECK(to_bitstring(b.oracle, 8) == "00000011");

  const auto c = find_fooling_oracle(machine(8, 2, {{{{1, true}}, true}}), g);
  CHECK(to_bitstring(c.oracle, 8) == "00000011");
  CHECK_FALSE(c.machine_says);
  CHECK(c.truth);

  // C(w, 1) + C(w, 2) accepting paths: 1 at w = 1 and 6 at w = 3, so this
  // depth-2 machine is correct on the n = 4 promise.
  std::vector<QueryPath> pairs;
  for (unsigned i = 1; i <= 4; ++i) {
    pairs.push_back({{{i, true}}, true});
    for (unsigned j = i + 1; j <= 4; ++j) pairs.push_back({{{i, true}, {j, true}}, true});
  }
  CHECK_THROWS_AS(find_fooling_oracle(machine(4, 2, pairs), PromiseFn(4)), FalsificationError);
}

TEST_CASE("polynomial counts accepting paths") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 300; ++t) {
    const unsigned n = 1 + rng() % 10;
    const std::uint64_t m = 2 + rng() % 5;
    const auto mm = random_machine(n, m, 6, 3, rng);
    const auto poly = machine_polynomial(mm);
    CHECK(poly.degree() <= mm.depth());
    for (Mask v = 0; v < (Mask{1} << n); ++v) {
      CHECK(poly.eval(v) == brute_count(mm, v) % m);
      CHECK(mm.accepting_count(v) == brute_count(mm, v));
      CHECK(accepts(mm, v) == (brute_count(mm, v) % m != 0));
    }
  }
}

TEST_CASE("every shallow machine at (8, 2) is fooled") {
  const auto corpus = depth_one_machine_corpus(8, 2, 4);
  CHECK(corpus.size() > 100);
  const PromiseFn g(8);
  std::mt19937_64 rng(99);
  std::vector<ModMachine> all = corpus;
  for (int t = 0; t < 1000; ++t) all.push_back(random_machine(8, 2, 4, 1, rng));
  for (const auto& mm : all) {
    CHECK(mm.depth() <= 1);
    const auto f = find_fooling_oracle(mm, g);
    const auto w = oracle::weight(f.oracle);
    CHECK(f.weight == w);
    CHECK((w == 2 || w == 6));
    CHECK(f.truth == (w == 2));
    CHECK(f.machine_says == accepts(mm, f.oracle));
    CHECK(f.machine_says != f.truth);
    // Least: nothing earlier in the same weight class, or in weight 2 when w = 6.
    for (auto v : oracle::inputs_of_weight(8, w))
      if (oracle::bits(v, 8) < oracle::bits(f.oracle, 8)) CHECK(accepts(mm, v) == (w == 2));
    if (w == 6)
      for (auto v : oracle::inputs_of_weight(8, 2)) CHECK(accepts(mm, v));
  }
}

TEST_CASE("machine text format") {
  const auto mm = parse_machine("# demo\nm=3 n=5\naccept: 1=1,3=0\nreject: 2=1\naccept:\n");
  CHECK(mm.n == 5);
  CHECK(mm.m == 3);
  REQUIRE(mm.paths.size() == 3);
  CHECK(mm.paths[0].literals == std::vector<Literal>{{1, true}, {3, false}});
  CHECK_FALSE(mm.paths[1].accepting);
  CHECK(mm.paths[2].literals.empty());
  CHECK(parse_machine(format_machine(mm)).paths == mm.paths);
  CHECK_THROWS_AS(parse_machine("m=2 n=4\naccept: 1=1,1=0\n"), ParseError);
  CHECK_THROWS_AS(parse_machine("m=2 n=4\naccept: 5=1\n"), ParseError);
  CHECK_THROWS_AS(parse_machine("m=2 n=4\nmaybe: 1=1\n"), ParseError);
  CHECK_THROWS_AS(parse_machine("accept: 1=1\n"), ParseError);
  CHECK_THROWS_AS(parse_machine("m=2 n=4\naccept: 1=2\n"), ParseError);
}

}  // TEST_SUITE
