#pragma once

// Low-degree symmetric polynomials representing the quarter / three-quarter
// promise function over Z_m for squarefree composite m.
//
// Write n/4 either as a * m^b with b >= 1 maximal (divisible case) or as
// a * m + c with 0 < c < m. A degree d is chosen so that
// C(n/4, d) != C(3n/4, d) mod m, and the representing polynomial is
//
//     C(3n/4, d) - sum_{|S| = d} mon(S).
//
// Divisible case: let p be the least prime of m not dividing a; d = p^b for
// odd p and d = 2^(b+1) for p = 2. Otherwise d = 1, except d = 2 when
// c = m/2.

#include <cstdint>
#include <optional>
#include <variant>

#include "modrep/boolpoly.hpp"

namespace modrep {

struct DivisibleCase {  // n/4 = a * m^b, m does not divide a
  std::uint64_t a;
  unsigned b;
  friend bool operator==(const DivisibleCase&, const DivisibleCase&) = default;
};

struct ResidueCase {  // n/4 = a * m + c, 0 < c < m
  std::uint64_t a;
  std::uint64_t c;
  friend bool operator==(const ResidueCase&, const ResidueCase&) = default;
};

struct CaseDescriptor {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::variant<DivisibleCase, ResidueCase> split;
  std::optional<std::uint64_t> chosen_prime;  // divisible case only
  std::uint64_t degree = 0;                   // 0 until select_degree
  Residue shift = 0;                          // C(3n/4, d) mod m

  bool divisible() const noexcept { return std::holds_alternative<DivisibleCase>(split); }
  const DivisibleCase& divisible_case() const { return std::get<DivisibleCase>(split); }
  const ResidueCase& residue_case() const { return std::get<ResidueCase>(split); }
};

/// Requires 4 | n and m squarefree with at least two prime factors.
CaseDescriptor decompose(std::uint64_t n, std::uint64_t m);

/// Fills chosen_prime (divisible case), degree and shift.
CaseDescriptor select_degree(CaseDescriptor desc);

struct Construction {
  CaseDescriptor desc;
  SymmetricLevelPoly poly;
  Residue accept_residue = 0;
  Residue reject_residue = 0;
};

/// Builds and verifies; throws ConstructionError carrying both residues if
/// the polynomial does not represent the promise function.
Construction build(std::uint64_t n, std::uint64_t m);

/// C(a m^b, p_i^l) != C(3 a m^b, p_i^l) mod m.
bool digit_difference_check(std::uint64_t a, unsigned b, std::uint64_t p_i, unsigned level, std::uint64_t m);

/// Whether the base-p_i digits of a m^b and 3 a m^b differ at 0-based position `level`.
bool digits_differ(std::uint64_t a, unsigned b, std::uint64_t p_i, unsigned level, std::uint64_t m);

/// Integer form of the degree bound: divisible case m^b <= n/4 and
/// d <= p'^(b+1) for the chosen prime p'; residue case d <= 2.
bool asymptotic_witness(const CaseDescriptor& desc);

}  // namespace modrep
