#pragma once

// Zero-set preserving transforms on 0/1 inputs:
//  - fermat_normalize: g over Z_p  ->  g^(p-1), which is 0/1-valued.
//  - prime_power_reduce: g over Z_{p^k}  ->  h over Z_p with
//      h(x) = 0 mod p  <=>  g(x) = 0 mod p^k,
//    built from h = sum_{i<k} C(g, p^i) * prod_{j<i} (1 - C(g, p^j)^(p-1)),
//    where C(g, t) is the level-t elementary symmetric function of g written
//    as a list of coefficient-1 monomials.

#include <cstdint>
#include <vector>

#include "modrep/boolpoly.hpp"

namespace modrep {

MultilinearPoly fermat_normalize(const MultilinearPoly& g, std::uint64_t p);

/// g as a multiset of coefficient-1 monomials. On a 0/1 input the number of
/// satisfied monomials is the integer lift of g(x).
struct UnitMonomialList {
  unsigned n = 0;
  std::vector<Mask> monomials;

  static UnitMonomialList from(const MultilinearPoly& g) { return {g.n(), expand_to_unit_monomials(g)}; }
  std::size_t size() const noexcept { return monomials.size(); }
  /// Number of monomials satisfied by x.
  std::uint64_t count(Mask x) const noexcept;
};

/// Polynomial over Z_p whose value on every 0/1 input is C(count(x), j) mod p.
/// Zero polynomial when j exceeds the list size.
MultilinearPoly binom_of_poly(const UnitMonomialList& units, std::uint64_t j, std::uint64_t p);

/// All levels 0..max_level in one pass of the (1 + z * mon) recurrence.
std::vector<MultilinearPoly> elementary_symmetric_levels(const UnitMonomialList& units,
                                                         std::uint64_t max_level, std::uint64_t p);

struct PrimePowerReduction {
  MultilinearPoly h;
  /// The k summands of h, in order; exposed for term-by-term inspection.
  std::vector<MultilinearPoly> terms;
  /// deg(g) * (2 p^(k-1) - 1), before any cap from multilinear reduction.
  std::uint64_t degree_bound = 0;
  unsigned degree = 0;
};

PrimePowerReduction prime_power_reduce(const MultilinearPoly& g, std::uint64_t p, unsigned k);

/// Right-hand side of  p^k | v  <=>  for all i < k: C(v, p^i) = 0 mod p.
bool modzero_predicate(std::uint64_t v, std::uint64_t p, unsigned k);

std::uint64_t ipow(std::uint64_t base, unsigned exponent);

}  // namespace modrep
