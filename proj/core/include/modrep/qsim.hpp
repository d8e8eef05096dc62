#pragma once

// Exact one-iteration Grover distinguisher for the 1/4 vs 3/4 promise.
//
// Amplitudes are stored scaled by sqrt(N): the true amplitude of item i is
// q_i / sqrt(N). Starting from q = (1, ..., 1) every step keeps q rational,
// so the marked-item probability is an exact rational and "with certainty"
// is checked as an equality. Norm: sum q_i^2 == N.

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "modrep/rational.hpp"

namespace modrep {

class OracleSet {
 public:
  OracleSet(std::size_t items, std::span<const std::size_t> members);
  explicit OracleSet(std::vector<bool> membership);

  /// Uniformly random subset of exactly `count` items.
  static OracleSet random(std::size_t items, std::size_t count, std::mt19937_64& rng);

  std::size_t size() const noexcept { return membership_.size(); }
  std::size_t count() const noexcept { return count_; }
  bool contains(std::size_t i) const { return membership_.at(i); }
  const std::vector<bool>& membership() const noexcept { return membership_; }
  /// count is N/4 or 3N/4.
  bool satisfies_promise() const noexcept;

 private:
  std::vector<bool> membership_;
  std::size_t count_ = 0;
};

class QueryState {
 public:
  static QueryState uniform(std::size_t items);

  std::size_t size() const noexcept { return amplitudes_.size(); }
  const std::vector<Rational>& scaled_amplitudes() const noexcept { return amplitudes_; }
  /// sum q_i^2; equals N for every reachable state.
  Rational norm() const;

  QueryState oracle_phase_flip(const OracleSet& set) const;
  /// q_i -> 2 mean - q_i.
  QueryState diffusion() const;
  /// sum_{i in set} q_i^2 / N.
  Rational marked_probability(const OracleSet& set) const;
  /// Index drawn with probability q_i^2 / N.
  std::size_t measure(std::mt19937_64& rng) const;

  friend bool operator==(const QueryState&, const QueryState&) = default;

 private:
  explicit QueryState(std::vector<Rational> amplitudes) : amplitudes_(std::move(amplitudes)) {}
  std::vector<Rational> amplitudes_;
};

inline QueryState uniform_state(std::size_t items) { return QueryState::uniform(items); }
inline QueryState oracle_phase_flip(const QueryState& s, const OracleSet& set) { return s.oracle_phase_flip(set); }
inline QueryState diffusion(const QueryState& s) { return s.diffusion(); }
inline Rational marked_probability(const QueryState& s, const OracleSet& set) { return s.marked_probability(set); }

enum class Fraction { Quarter, ThreeQuarter };

const char* to_string(Fraction f) noexcept;

struct Decision {
  Fraction verdict = Fraction::Quarter;
  Rational marked_probability{0};
  std::size_t measured_index = 0;
  unsigned quantum_queries = 1;
  unsigned classical_checks = 1;
};

/// uniform -> phase flip -> diffusion, measure, then check the measured item
/// classically. Throws PromiseError off-promise and InvariantViolation if the
/// marked probability is not exactly 0 or 1.
Decision one_query_decide(const OracleSet& set, std::mt19937_64& rng);

}  // namespace modrep
