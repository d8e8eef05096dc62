#pragma once

// Desk-scale checks of the prime-power lower bound:
//  - the exact bound n / (4 (2p^(k-1) - 1)(p - 1)),
//  - an exhaustive search over all degree <= d_max polynomials over Z_m that
//    either finds a representing polynomial or certifies that none exists,
//  - the Lucas counting identities and the final contradiction step of the
//    lower-bound argument, and the constraint rows it sums.

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "modrep/boolpoly.hpp"
#include "modrep/rational.hpp"

namespace modrep {

/// n / (4 (2p^(k-1) - 1)(p - 1)). Over Z_(p^k) no polynomial of smaller degree
/// represents the promise function when n = 4p^r.
Rational degree_lower_bound(std::uint64_t n, std::uint64_t p, unsigned k);

/// ceil(bound) - 1 for m = p^k: the largest degree the bound rules out.
unsigned default_search_degree(std::uint64_t n, std::uint64_t m);

enum class EnumerationOrder { Ascending, Descending };

struct SearchOptions {
  unsigned d_max = 1;
  double budget = 1e8;  // max size of the coefficient space m^(#monomials)
  unsigned jobs = 1;
  EnumerationOrder order = EnumerationOrder::Ascending;
};

struct SearchReport {
  unsigned n = 0;
  std::uint64_t m = 0;
  unsigned d_max = 0;
  /// Set iff a representing polynomial of degree <= d_max exists; then it is
  /// the first one in enumeration order at the minimal degree.
  std::optional<MultilinearPoly> witness;
  /// Partial coefficient assignments visited by the pruned enumeration.
  std::uint64_t candidates_examined = 0;
  /// log10 of the unpruned coefficient space m^(#monomials of degree <= d_max).
  double log10_space = 0;
  std::chrono::nanoseconds elapsed{0};

  bool found() const noexcept { return witness.has_value(); }
  unsigned found_degree() const { return witness->degree(); }
};

/// log10 of the candidate space m^(sum_{d<=d_max} C(n, d)).
double search_space_log10(unsigned n, std::uint64_t m, unsigned d_max);

/// Throws BudgetExceeded when the space exceeds options.budget.
SearchReport exhaustive_min_degree(const PromiseFn& g, std::uint64_t m, const SearchOptions& options);

struct CountingIdentityReport {
  std::uint64_t p = 0;
  unsigned r = 0;
  Residue constraint_count = 0;     // C(3p^r, p^r) mod p
  bool total_identity = false;      // constraint_count == 3 mod p
  bool per_monomial_identity = false;  // C(3p^r - l, p^r - l) == 1 mod p, 0 < l < p^r
  bool pascal_agrees = false;       // every value matches the Pascal oracle
  bool holds() const noexcept { return total_identity && per_monomial_identity && pascal_agrees; }
};

/// Requires 3p^r <= 10^4 so the Pascal cross-check applies.
CountingIdentityReport verify_counting_identities(std::uint64_t p, unsigned r);

/// For both c_empty in {0, 1}: 3 - 2 c_empty != 0 mod p.
bool contradiction_check(std::uint64_t p);

/// One linear constraint on the coefficients c_S of a polynomial of degree
/// < degree_bound over the first 3n/4 variables: sum_{S subset of support} c_S = target.
struct ConstraintRow {
  std::vector<Mask> columns;             // by degree, then by mask
  std::vector<std::uint8_t> incidence;   // 1 iff column is a subset of support
  Residue target = 0;
};

ConstraintRow build_constraint(unsigned n, Mask support, unsigned degree_bound, Residue target);
/// The all-ones-on-support reject input: target 0.
ConstraintRow build_reject_constraint(unsigned n, Mask support, unsigned degree_bound);
/// An accept input with ones exactly on T: target 1.
ConstraintRow build_accept_constraint(unsigned n, Mask support, unsigned degree_bound);

/// The system used by the lower-bound argument at degree bound n/4: the
/// reject row for x_1..x_{3n/4} followed by every accept row T subset of
/// [3n/4], |T| = n/4, in lexicographic order.
std::vector<ConstraintRow> lower_bound_system(unsigned n);

/// Column sums of the given rows modulo p.
std::vector<Residue> column_sums(const std::vector<ConstraintRow>& rows, std::uint64_t p);

}  // namespace modrep
