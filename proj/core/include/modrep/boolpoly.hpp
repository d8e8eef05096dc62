#pragma once

// Multilinear polynomials over Z_m on 0/1 inputs, the compact symmetric form
// used for very large n, and the one-sided representation predicate for the
// quarter / three-quarter Hamming-weight promise function.
//
// Variables are 1-based (x_1 .. x_n). A monomial or an input is a Mask with
// bit i-1 standing for x_i. Bitstrings are written x_1 first, and
// "lexicographic" always means the order of those strings.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "modrep/numtheory.hpp"

namespace modrep {

using Mask = std::uint64_t;

inline constexpr unsigned kMaxExplicitVars = 64;

inline unsigned popcount(Mask x) noexcept { return static_cast<unsigned>(__builtin_popcountll(x)); }

/// Renders an input as its bitstring x_1 x_2 ... x_n.
std::string to_bitstring(Mask x, unsigned n);
Mask parse_bitstring(const std::string& bits);

/// Visits every weight-w input over n variables in lexicographic bitstring
/// order; stops early when `visit` returns false. Returns false iff stopped.
bool for_each_weight_lex(unsigned n, unsigned w, const std::function<bool(Mask)>& visit);

class MultilinearPoly {
 public:
  MultilinearPoly(unsigned n, std::uint64_t m);

  static MultilinearPoly constant(unsigned n, std::uint64_t m, Residue c);
  /// x_i, 1-based.
  static MultilinearPoly variable(unsigned n, std::uint64_t m, unsigned i);
  static MultilinearPoly monomial(unsigned n, std::uint64_t m, Mask support, Residue c = 1);

  unsigned n() const noexcept { return n_; }
  std::uint64_t modulus() const noexcept { return m_; }
  const std::map<Mask, Residue>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  Residue coeff(Mask support) const;
  /// Adds c to the coefficient of mon(support), reducing mod m.
  void add_term(Mask support, Residue c);
  unsigned degree() const noexcept;

  /// Value on a 0/1 input.
  Residue eval(Mask x) const;
  Residue operator()(Mask x) const { return eval(x); }

  MultilinearPoly times_monomial(Mask support) const;
  MultilinearPoly pow(unsigned exponent) const;
  /// Same monomials with coefficients reduced modulo `m`.
  MultilinearPoly reduced_mod(std::uint64_t m) const;

  MultilinearPoly& operator+=(const MultilinearPoly& rhs);
  MultilinearPoly& operator-=(const MultilinearPoly& rhs);
  MultilinearPoly& operator*=(Residue scalar);

  friend MultilinearPoly operator+(MultilinearPoly a, const MultilinearPoly& b) { return a += b; }
  friend MultilinearPoly operator-(MultilinearPoly a, const MultilinearPoly& b) { return a -= b; }
  friend MultilinearPoly operator-(const MultilinearPoly& a);
  friend MultilinearPoly operator*(const MultilinearPoly& a, const MultilinearPoly& b);
  friend MultilinearPoly operator*(MultilinearPoly a, Residue s) { return a *= s; }

  friend bool operator==(const MultilinearPoly&, const MultilinearPoly&) = default;

 private:
  void require_compatible(const MultilinearPoly& other, const char* op) const;

  unsigned n_;
  std::uint64_t m_;
  std::map<Mask, Residue> terms_;  // nonzero, reduced
};

/// multiply() is operator*; named for symmetry with the text format tools.
inline MultilinearPoly multiply(const MultilinearPoly& a, const MultilinearPoly& b) { return a * b; }

/// Symmetric polynomial  sum_d c_d * e_d(x), e_d the full degree-d elementary
/// symmetric sum. Its value on a weight-w input is sum_d c_d * C(w, d) mod m.
class SymmetricLevelPoly {
 public:
  SymmetricLevelPoly(std::uint64_t n, std::uint64_t m);

  std::uint64_t n() const noexcept { return n_; }
  std::uint64_t modulus() const noexcept { return m_; }
  const std::map<std::uint64_t, Residue>& levels() const noexcept { return levels_; }

  void set_level(std::uint64_t d, Residue c);
  Residue level(std::uint64_t d) const;
  std::uint64_t degree() const noexcept;

  Residue eval(std::uint64_t weight) const;
  /// Explicit expansion; n <= 64 and the expansion must stay small.
  MultilinearPoly to_multilinear() const;

 private:
  std::uint64_t n_;
  std::uint64_t m_;
  std::map<std::uint64_t, Residue> levels_;
};

inline Residue eval_symmetric(const SymmetricLevelPoly& p, std::uint64_t weight) { return p.eval(weight); }

/// g(x) = 1 on weight n/4, 0 on weight 3n/4, undefined elsewhere.
class PromiseFn {
 public:
  explicit PromiseFn(std::uint64_t n);

  std::uint64_t n() const noexcept { return n_; }
  std::uint64_t accept_weight() const noexcept { return n_ / 4; }
  std::uint64_t reject_weight() const noexcept { return 3 * n_ / 4; }
  /// Target value for an input weight, or nullopt outside the promise.
  std::optional<bool> value_at_weight(std::uint64_t w) const noexcept;

 private:
  std::uint64_t n_;
};

struct RepresentationCheck {
  bool holds = false;
  /// Lexicographically least promise input on which the polynomial fails.
  std::optional<Mask> witness;
  Residue witness_value = 0;
};

/// Exhaustive over all C(n, n/4) + C(n, 3n/4) promise inputs, in lexicographic
/// order, stopping at the first violation.
RepresentationCheck check_representation(const MultilinearPoly& poly, const PromiseFn& g);

struct SymmetricCheck {
  bool holds = false;
  Residue accept_residue = 0;
  Residue reject_residue = 0;
};

SymmetricCheck check_representation(const SymmetricLevelPoly& poly, const PromiseFn& g);

inline bool represents(const MultilinearPoly& p, const PromiseFn& g) { return check_representation(p, g).holds; }
inline bool represents(const SymmetricLevelPoly& p, const PromiseFn& g) { return check_representation(p, g).holds; }

/// Rewrites the polynomial as a multiset of coefficient-1 monomials: mon(S)
/// repeated c_S times, c_S lifted to [0, m). Sorted by mask.
std::vector<Mask> expand_to_unit_monomials(const MultilinearPoly& poly);

/// Random polynomial of degree <= max_degree; each eligible monomial is kept
/// with probability `density` and given a uniform nonzero coefficient.
MultilinearPoly random_multilinear(unsigned n, std::uint64_t m, unsigned max_degree, double density,
                                   std::mt19937_64& rng);

}  // namespace modrep
