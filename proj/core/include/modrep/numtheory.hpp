#pragma once

// Exact modular combinatorics: base-k digits, binomial coefficients modulo a
// prime (Lucas), modulo a squarefree modulus (Lucas + CRT), and an additive
// Pascal-triangle oracle valid for any modulus.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace modrep {

using Residue = std::uint64_t;

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
  std::uint64_t m = 1;
  std::vector<PrimePower> factors;  // primes strictly increasing

  bool squarefree() const noexcept;
  bool is_prime() const noexcept { return factors.size() == 1 && factors[0].exponent == 1; }
  bool is_prime_power() const noexcept { return factors.size() == 1; }
  std::vector<std::uint64_t> primes() const;
  std::uint64_t largest_prime() const;
};

/// Trial division; 2 <= m <= 10^9.
Factorization factorize(std::uint64_t m);

bool is_prime(std::uint64_t n) noexcept;

/// Little-endian base-`base` digits in canonical form. Zero is the single digit [0].
struct DigitString {
  std::uint64_t base = 2;
  std::vector<std::uint64_t> digits;

  std::uint64_t value() const;
  /// Digit at a 0-based position; positions past the top are zero.
  std::uint64_t at(std::size_t position) const noexcept {
    return position < digits.size() ? digits[position] : 0;
  }

  friend bool operator==(const DigitString&, const DigitString&) = default;
};

DigitString digits(std::uint64_t n, std::uint64_t base);

/// Position of the lowest nonzero base-p digit of n, i.e. the largest i with p^i | n.
unsigned first_nonzero_digit_index(std::uint64_t n, std::uint64_t p);

/// C(n, k) mod p by Lucas' theorem (digitwise product, C(0, x) = 0 for x > 0).
Residue binom_mod_prime(std::uint64_t n, std::uint64_t k, std::uint64_t p);

/// C(n, k) mod m from the additive recurrence on a single rolling row. n <= 10^4.
Residue binom_mod_pascal(std::uint64_t n, std::uint64_t k, std::uint64_t m);

/// Full Pascal triangle mod m up to row `max_row`; used for bulk oracle checks.
class PascalTable {
 public:
  PascalTable(std::uint64_t max_row, std::uint64_t m);

  Residue operator()(std::uint64_t n, std::uint64_t k) const;
  std::uint64_t max_row() const noexcept { return max_row_; }
  std::uint64_t modulus() const noexcept { return m_; }

 private:
  std::uint64_t max_row_;
  std::uint64_t m_;
  std::vector<std::uint32_t> cells_;  // row n starts at n(n+1)/2
};

struct Congruence {
  Residue residue;
  std::uint64_t modulus;

  friend bool operator==(const Congruence&, const Congruence&) = default;
};

/// The unique x mod prod(moduli) satisfying every congruence. Moduli must be
/// pairwise coprime and their product must fit in 64 bits.
Congruence crt_combine(std::span<const Congruence> system);

/// Lucas per prime factor, recombined by CRT. m must be squarefree.
Residue binom_mod_squarefree(std::uint64_t n, std::uint64_t k, std::uint64_t m);

/// C(n, k) mod m for any m >= 1. Uses Lucas + CRT when m is squarefree,
/// otherwise the multiplicative formula with the primes of m factored out.
/// O(k) in the non-squarefree case.
Residue binom_mod(std::uint64_t n, std::uint64_t k, std::uint64_t m);

Residue pow_mod(Residue base, std::uint64_t exponent, std::uint64_t m);
Residue mul_mod(Residue a, Residue b, std::uint64_t m);

}  // namespace modrep
