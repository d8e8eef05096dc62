#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace modrep {

/// Precondition violated by the caller (bad modulus, out-of-range weight, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A Grover decision was requested on an oracle set outside the 1/4 vs 3/4 promise.
class PromiseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed polynomial or machine text.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive search would exceed its candidate budget. The search refuses
/// instead of truncating, so a "none found" answer is always complete.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, double log10_candidates)
      : std::runtime_error(what), log10_candidates_(log10_candidates) {}
  double log10_candidates() const noexcept { return log10_candidates_; }

 private:
  double log10_candidates_;
};

/// An internal exactness or consistency check failed. Never expected to fire.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The upper-bound polynomial failed its own verification at some (n, m).
class ConstructionError : public std::runtime_error {
 public:
  ConstructionError(const std::string& what, std::uint64_t accept_residue,
                    std::uint64_t reject_residue)
      : std::runtime_error(what),
        accept_residue_(accept_residue),
        reject_residue_(reject_residue) {}
  std::uint64_t accept_residue() const noexcept { return accept_residue_; }
  std::uint64_t reject_residue() const noexcept { return reject_residue_; }

 private:
  std::uint64_t accept_residue_;
  std::uint64_t reject_residue_;
};

/// No fooling oracle exists for a machine: the machine computes the promise
/// function correctly on every promise input.
class FalsificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace modrep
