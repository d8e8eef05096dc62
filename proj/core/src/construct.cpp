#include "modrep/construct.hpp"

#include <string>

#include "modrep/errors.hpp"
#include "modrep/numtheory.hpp"
#include "modrep/transforms.hpp"

namespace modrep {

namespace {

Factorization require_squarefree_composite(std::uint64_t m) {
  const Factorization f = factorize(m);
  if (!f.squarefree()) throw DomainError("modulus " + std::to_string(m) + " is not squarefree");
  if (f.factors.size() < 2) throw DomainError("modulus " + std::to_string(m) + " is prime, not composite");
  return f;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) throw DomainError("integer overflow");
  return a * b;
}

}  // namespace

CaseDescriptor decompose(std::uint64_t n, std::uint64_t m) {
  if (n == 0 || n % 4 != 0) throw DomainError("n must be a positive multiple of 4");
  require_squarefree_composite(m);
  CaseDescriptor desc;
  desc.n = n;
  desc.m = m;
  const std::uint64_t quarter = n / 4;
  if (quarter % m == 0) {
    std::uint64_t a = quarter;
    unsigned b = 0;
    while (a % m == 0) {
      a /= m;
      ++b;
    }
    desc.split = DivisibleCase{a, b};
  } else {
    desc.split = ResidueCase{quarter / m, quarter % m};
  }
  return desc;
}

CaseDescriptor select_degree(CaseDescriptor desc) {
  const Factorization f = require_squarefree_composite(desc.m);
  if (desc.divisible()) {
    const auto [a, b] = desc.divisible_case();
    std::optional<std::uint64_t> p;
    for (const auto& pf : f.factors) {
      if (a % pf.prime != 0) {
        p = pf.prime;
        break;
      }
    }
    if (!p) throw InvariantViolation("no prime factor of m avoids a although m does not divide a");
    desc.chosen_prime = p;
    desc.degree = *p == 2 ? ipow(2, b + 1) : ipow(*p, b);
  } else {
    const auto c = desc.residue_case().c;
    desc.degree = (desc.m % 2 == 0 && c == desc.m / 2) ? 2 : 1;
  }
  desc.shift = binom_mod_squarefree(3 * (desc.n / 4), desc.degree, desc.m);
  return desc;
}

Construction build(std::uint64_t n, std::uint64_t m) {
  CaseDescriptor desc = select_degree(decompose(n, m));
  SymmetricLevelPoly poly(n, m);
  poly.set_level(0, desc.shift);
  poly.set_level(desc.degree, m - 1);

  const PromiseFn g(n);
  const SymmetricCheck check = check_representation(poly, g);
  if (!check.holds) {
    throw ConstructionError("construction does not represent the promise function at n=" + std::to_string(n) +
                                " m=" + std::to_string(m) + " (accept residue " +
                                std::to_string(check.accept_residue) + ", reject residue " +
                                std::to_string(check.reject_residue) + ")",
                            check.accept_residue, check.reject_residue);
  }
  return {std::move(desc), std::move(poly), check.accept_residue, check.reject_residue};
}

bool digit_difference_check(std::uint64_t a, unsigned b, std::uint64_t p_i, unsigned level, std::uint64_t m) {
  if (!is_prime(p_i) || m % p_i != 0) throw DomainError("p_i must be a prime factor of m");
  if (!factorize(m).squarefree()) throw DomainError("modulus must be squarefree");
  const std::uint64_t base = checked_mul(a, ipow(m, b));
  const std::uint64_t k = ipow(p_i, level);
  return binom_mod_squarefree(base, k, m) != binom_mod_squarefree(checked_mul(3, base), k, m);
}

bool digits_differ(std::uint64_t a, unsigned b, std::uint64_t p_i, unsigned level, std::uint64_t m) {
  if (!is_prime(p_i) || m % p_i != 0) throw DomainError("p_i must be a prime factor of m");
  const std::uint64_t base = checked_mul(a, ipow(m, b));
  return digits(base, p_i).at(level) != digits(checked_mul(3, base), p_i).at(level);
}

bool asymptotic_witness(const CaseDescriptor& desc) {
  if (desc.degree == 0) throw DomainError("asymptotic_witness: degree not selected");
  if (!desc.divisible()) return desc.degree <= 2;
  const unsigned b = desc.divisible_case().b;
  if (!desc.chosen_prime) return false;
  return ipow(desc.m, b) <= desc.n / 4 && desc.degree <= ipow(*desc.chosen_prime, b + 1);
}

}  // namespace modrep
