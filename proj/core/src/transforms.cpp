#include "modrep/transforms.hpp"

#include <algorithm>
#include <string>

#include "modrep/errors.hpp"
#include "modrep/numtheory.hpp"

namespace modrep {

std::uint64_t ipow(std::uint64_t base, unsigned exponent) {
  std::uint64_t result = 1;
  for (unsigned i = 0; i < exponent; ++i) {
    if (base != 0 && result > UINT64_MAX / base) throw DomainError("ipow: overflow");
    result *= base;
  }
  return result;
}

MultilinearPoly fermat_normalize(const MultilinearPoly& g, std::uint64_t p) {
  if (!is_prime(p)) throw DomainError("fermat_normalize: " + std::to_string(p) + " is not prime");
  if (g.modulus() != p) throw DomainError("fermat_normalize: polynomial modulus differs from p");
  return g.pow(static_cast<unsigned>(p - 1));
}

std::uint64_t UnitMonomialList::count(Mask x) const noexcept {
  return static_cast<std::uint64_t>(
      std::count_if(monomials.begin(), monomials.end(), [x](Mask s) { return (s & ~x) == 0; }));
}

std::vector<MultilinearPoly> elementary_symmetric_levels(const UnitMonomialList& units,
                                                         std::uint64_t max_level, std::uint64_t p) {
  std::vector<MultilinearPoly> level(max_level + 1, MultilinearPoly(units.n, p));
  level[0] = MultilinearPoly::constant(units.n, p, 1);
  // Multiply the generating function by (1 + z * mon) one monomial at a time.
  std::uint64_t seen = 0;
  for (const Mask u : units.monomials) {
    ++seen;
    for (std::uint64_t l = std::min(max_level, seen); l >= 1; --l) {
      if (level[l - 1].is_zero()) continue;
      level[l] += level[l - 1].times_monomial(u);
    }
  }
  return level;
}

MultilinearPoly binom_of_poly(const UnitMonomialList& units, std::uint64_t j, std::uint64_t p) {
  if (j > units.size()) return MultilinearPoly(units.n, p);
  return elementary_symmetric_levels(units, j, p)[j];
}

PrimePowerReduction prime_power_reduce(const MultilinearPoly& g, std::uint64_t p, unsigned k) {
  if (k == 0) throw DomainError("prime_power_reduce: k must be at least 1");
  if (!is_prime(p)) throw DomainError("prime_power_reduce: " + std::to_string(p) + " is not prime");
  if (g.modulus() != ipow(p, k)) throw DomainError("prime_power_reduce: polynomial modulus is not p^k");

  const auto units = UnitMonomialList::from(g);
  const std::uint64_t top = ipow(p, k - 1);
  const auto levels = elementary_symmetric_levels(units, std::min<std::uint64_t>(top, units.size()), p);
  auto binom_level = [&](std::uint64_t j) {
    return j < levels.size() ? levels[j] : MultilinearPoly(g.n(), p);
  };

  const auto one = MultilinearPoly::constant(g.n(), p, 1);
  PrimePowerReduction out{MultilinearPoly(g.n(), p), {}, 0, 0};
  MultilinearPoly guard = one;  // prod_{j<i} (1 - C(g, p^j)^(p-1))
  for (unsigned i = 0; i < k; ++i) {
    const auto b = binom_level(ipow(p, i));
    out.terms.push_back(b * guard);
    out.h += out.terms.back();
    if (i + 1 < k) guard = guard * (one - b.pow(static_cast<unsigned>(p - 1)));
  }
  out.degree_bound = static_cast<std::uint64_t>(g.degree()) * (2 * top - 1);
  out.degree = out.h.degree();
  return out;
}

bool modzero_predicate(std::uint64_t v, std::uint64_t p, unsigned k) {
  if (k == 0) throw DomainError("modzero_predicate: k must be at least 1");
  for (unsigned i = 0; i < k; ++i)
    if (binom_mod_prime(v, ipow(p, i), p) != 0) return false;
  return true;
}

}  // namespace modrep
