#pragma once

// Finite query machines and the path-polynomial argument. A machine is a
// multiset of query paths; each path records (variable, answer) literals and
// whether it accepts. On an oracle setting x the machine accepts iff the
// number of accepting paths consistent with x is nonzero mod m. Summing one
// literal-product monomial per accepting path gives a polynomial over Z_m
// whose value on x is exactly that count, so a machine of small depth that
// decided the promise problem would be a low-degree representation.
//
// Text format (one machine per file):
//
//   m=<int> n=<int>
//   accept: 1=1,3=0
//   reject: 2=1
//   accept:
//
// Variables are 1-based. Blank lines and lines starting with '#' are ignored.

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "modrep/boolpoly.hpp"

namespace modrep {

struct Literal {
  unsigned variable;  // 1-based
  bool value;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

struct QueryPath {
  std::vector<Literal> literals;
  bool accepting = true;

  /// True when x agrees with every literal.
  bool consistent_with(Mask x) const noexcept;
  friend auto operator<=>(const QueryPath&, const QueryPath&) = default;
};

struct ModMachine {
  unsigned n = 0;
  std::uint64_t m = 2;
  std::vector<QueryPath> paths;

  std::size_t depth() const noexcept;
  /// Accepting paths consistent with x.
  std::uint64_t accepting_count(Mask x) const noexcept;
};

/// Product of x_i (answer 1) or (1 - x_i) (answer 0) over the path's literals.
MultilinearPoly path_monomial(const QueryPath& path, unsigned n, std::uint64_t m);

MultilinearPoly machine_polynomial(const ModMachine& machine);

bool accepts(const ModMachine& machine, Mask x);

struct FoolingOracle {
  Mask oracle = 0;
  unsigned weight = 0;
  bool machine_says = false;
  bool truth = false;
};

/// First promise input (weight n/4 in lexicographic order, then weight 3n/4)
/// on which the machine's answer differs from the promise function. Throws
/// FalsificationError if the machine is correct everywhere.
FoolingOracle find_fooling_oracle(const ModMachine& machine, const PromiseFn& target);

std::string format_machine(const ModMachine& machine);
ModMachine parse_machine(std::string_view text);

/// Every machine of at most `max_paths` paths of length <= 1 over n
/// variables, one representative per class under variable permutation.
std::vector<ModMachine> depth_one_machine_corpus(unsigned n, std::uint64_t m, unsigned max_paths);

/// Random machine: 1..max_paths paths, each of length 0..max_depth with
/// distinct variables, accepting with probability 1/2.
ModMachine random_machine(unsigned n, std::uint64_t m, unsigned max_paths, unsigned max_depth,
                          std::mt19937_64& rng);

}  // namespace modrep
