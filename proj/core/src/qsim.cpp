#include "modrep/qsim.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

#include "modrep/errors.hpp"

namespace modrep {

namespace {

void require_items(std::size_t items) {
  if (items == 0 || items % 4 != 0) throw DomainError("number of items must be a positive multiple of 4");
}

}  // namespace

OracleSet::OracleSet(std::size_t items, std::span<const std::size_t> members) : membership_(items, false) {
  require_items(items);
  for (const auto i : members) {
    if (i >= items) throw DomainError("oracle member out of range");
    if (!membership_[i]) ++count_;
    membership_[i] = true;
  }
}

OracleSet::OracleSet(std::vector<bool> membership) : membership_(std::move(membership)) {
  require_items(membership_.size());
  count_ = static_cast<std::size_t>(std::count(membership_.begin(), membership_.end(), true));
}

OracleSet OracleSet::random(std::size_t items, std::size_t count, std::mt19937_64& rng) {
  require_items(items);
  if (count > items) throw DomainError("cannot mark more items than exist");
  std::vector<std::size_t> order(items);
  std::iota(order.begin(), order.end(), std::size_t{0});
  // Partial Fisher-Yates over the first `count` slots.
  for (std::size_t i = 0; i < count; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, items - 1);
    std::swap(order[i], order[pick(rng)]);
  }
  return OracleSet(items, std::span(order.data(), count));
}

bool OracleSet::satisfies_promise() const noexcept {
  const auto n = membership_.size();
  return count_ == n / 4 || count_ == 3 * n / 4;
}

QueryState QueryState::uniform(std::size_t items) {
  require_items(items);
  return QueryState(std::vector<Rational>(items, Rational(1)));
}

Rational QueryState::norm() const {
  Rational sum(0);
  for (const auto& q : amplitudes_) sum += q * q;
  return sum;
}

QueryState QueryState::oracle_phase_flip(const OracleSet& set) const {
  if (set.size() != size()) throw DomainError("oracle size does not match state size");
  std::vector<Rational> out(amplitudes_);
  for (std::size_t i = 0; i < out.size(); ++i)
    if (set.contains(i)) out[i] = -out[i];
  return QueryState(std::move(out));
}

QueryState QueryState::diffusion() const {
  const Rational mean =
      std::accumulate(amplitudes_.begin(), amplitudes_.end(), Rational(0)) / static_cast<std::int64_t>(size());
  std::vector<Rational> out;
  out.reserve(size());
  for (const auto& q : amplitudes_) out.push_back(2 * mean - q);
  return QueryState(std::move(out));
}

Rational QueryState::marked_probability(const OracleSet& set) const {
  if (set.size() != size()) throw DomainError("oracle size does not match state size");
  Rational sum(0);
  for (std::size_t i = 0; i < size(); ++i)
    if (set.contains(i)) sum += amplitudes_[i] * amplitudes_[i];
  return sum / static_cast<std::int64_t>(size());
}

std::size_t QueryState::measure(std::mt19937_64& rng) const {
  // Integer weights q_i^2 * L^2 with L the common denominator.
  std::int64_t lcm = 1;
  for (const auto& q : amplitudes_) lcm = std::lcm(lcm, q.denominator());
  std::vector<std::uint64_t> weights;
  weights.reserve(size());
  std::uint64_t total = 0;
  for (const auto& q : amplitudes_) {
    const auto scaled = static_cast<std::uint64_t>(std::abs(q.numerator() * (lcm / q.denominator())));
    weights.push_back(scaled * scaled);
    total += scaled * scaled;
  }
  if (total == 0) throw InvariantViolation("measure: zero state");
  std::uniform_int_distribution<std::uint64_t> draw(0, total - 1);
  std::uint64_t ticket = draw(rng);
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (ticket < weights[i]) return i;
    ticket -= weights[i];
  }
  throw InvariantViolation("measure: sampling fell off the end");
}

const char* to_string(Fraction f) noexcept {
  return f == Fraction::Quarter ? "1/4" : "3/4";
}

Decision one_query_decide(const OracleSet& set, std::mt19937_64& rng) {
  if (!set.satisfies_promise())
    throw PromiseError("oracle marks " + std::to_string(set.count()) + " of " + std::to_string(set.size()) +
                       " items, not a quarter or three quarters");
  const QueryState state = QueryState::uniform(set.size()).oracle_phase_flip(set).diffusion();
  if (state.norm() != Rational(static_cast<std::int64_t>(set.size())))
    throw InvariantViolation("norm not conserved");

  Decision d;
  d.marked_probability = state.marked_probability(set);
  if (d.marked_probability != Rational(0) && d.marked_probability != Rational(1))
    throw InvariantViolation("marked probability " + to_string(d.marked_probability) + " is not exactly 0 or 1");
  d.measured_index = state.measure(rng);
  d.verdict = set.contains(d.measured_index) ? Fraction::Quarter : Fraction::ThreeQuarter;
  return d;
}

}  // namespace modrep
