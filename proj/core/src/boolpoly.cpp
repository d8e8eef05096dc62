#include "modrep/boolpoly.hpp"

#include <algorithm>
#include <string>

#include "modrep/errors.hpp"

namespace modrep {

namespace {

// Lexicographic bitstring order is numeric order of the integer whose most
// significant of n bits is x_1; convert that integer back to a Mask.
Mask lex_code_to_mask(unsigned __int128 code, unsigned n) {
  Mask mask = 0;
  for (unsigned j = 0; j < n; ++j)
    if ((code >> j) & 1U) mask |= Mask{1} << (n - 1 - j);
  return mask;
}

void require_modulus(std::uint64_t m) {
  if (m < 2) throw DomainError("modulus must be at least 2");
}

}  // namespace

std::string to_bitstring(Mask x, unsigned n) {
  std::string s(n, '0');
  for (unsigned i = 0; i < n; ++i)
    if ((x >> i) & 1U) s[i] = '1';
  return s;
}

Mask parse_bitstring(const std::string& bits) {
  if (bits.size() > kMaxExplicitVars) throw ParseError("bitstring longer than 64");
  Mask x = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      x |= Mask{1} << i;
    else if (bits[i] != '0')
      throw ParseError("bitstring may only contain 0 and 1");
  }
  return x;
}

bool for_each_weight_lex(unsigned n, unsigned w, const std::function<bool(Mask)>& visit) {
  if (n > kMaxExplicitVars) throw DomainError("explicit inputs support at most 64 variables");
  if (w > n) return true;
  if (w == 0) return visit(0);
  using u128 = unsigned __int128;
  const u128 limit = u128{1} << n;
  u128 code = (u128{1} << w) - 1;
  while (code < limit) {
    if (!visit(lex_code_to_mask(code, n))) return false;
    // Gosper's hack: next integer with the same popcount.
    const u128 low = code & (~code + 1);
    const u128 ripple = code + low;
    code = (((ripple ^ code) >> 2) / low) | ripple;
  }
  return true;
}

// --- MultilinearPoly -------------------------------------------------------

MultilinearPoly::MultilinearPoly(unsigned n, std::uint64_t m) : n_(n), m_(m) {
  if (n > kMaxExplicitVars) throw DomainError("explicit polynomials support at most 64 variables");
  require_modulus(m);
}

MultilinearPoly MultilinearPoly::constant(unsigned n, std::uint64_t m, Residue c) {
  return monomial(n, m, 0, c);
}

MultilinearPoly MultilinearPoly::variable(unsigned n, std::uint64_t m, unsigned i) {
  if (i == 0 || i > n) throw DomainError("variable index out of range");
  return monomial(n, m, Mask{1} << (i - 1), 1);
}

MultilinearPoly MultilinearPoly::monomial(unsigned n, std::uint64_t m, Mask support, Residue c) {
  MultilinearPoly p(n, m);
  p.add_term(support, c);
  return p;
}

Residue MultilinearPoly::coeff(Mask support) const {
  const auto it = terms_.find(support);
  return it == terms_.end() ? 0 : it->second;
}

void MultilinearPoly::add_term(Mask support, Residue c) {
  if (n_ < kMaxExplicitVars && (support >> n_) != 0) throw DomainError("monomial uses a variable beyond n");
  c %= m_;
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(support, c);
  if (!inserted) {
    it->second = (it->second + c) % m_;
    if (it->second == 0) terms_.erase(it);
  }
}

unsigned MultilinearPoly::degree() const noexcept {
  unsigned d = 0;
  for (const auto& [s, c] : terms_) d = std::max(d, popcount(s));
  return d;
}

Residue MultilinearPoly::eval(Mask x) const {
  if (n_ < kMaxExplicitVars && (x >> n_) != 0) throw DomainError("input has bits beyond n");
  Residue acc = 0;
  for (const auto& [s, c] : terms_)
    if ((s & ~x) == 0) acc = (acc + c) % m_;
  return acc;
}

MultilinearPoly MultilinearPoly::times_monomial(Mask support) const {
  MultilinearPoly out(n_, m_);
  for (const auto& [s, c] : terms_) out.add_term(s | support, c);
  return out;
}

MultilinearPoly MultilinearPoly::pow(unsigned exponent) const {
  MultilinearPoly result = constant(n_, m_, 1);
  MultilinearPoly base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent != 0) base = base * base;
  }
  return result;
}

MultilinearPoly MultilinearPoly::reduced_mod(std::uint64_t m) const {
  MultilinearPoly out(n_, m);
  for (const auto& [s, c] : terms_) out.add_term(s, c % m);
  return out;
}

void MultilinearPoly::require_compatible(const MultilinearPoly& other, const char* op) const {
  if (m_ != other.m_) throw DomainError(std::string(op) + ": modulus mismatch");
  if (n_ != other.n_) throw DomainError(std::string(op) + ": variable count mismatch");
}

MultilinearPoly& MultilinearPoly::operator+=(const MultilinearPoly& rhs) {
  require_compatible(rhs, "add");
  for (const auto& [s, c] : rhs.terms_) add_term(s, c);
  return *this;
}

MultilinearPoly& MultilinearPoly::operator-=(const MultilinearPoly& rhs) {
  require_compatible(rhs, "subtract");
  for (const auto& [s, c] : rhs.terms_) add_term(s, m_ - c);
  return *this;
}

MultilinearPoly& MultilinearPoly::operator*=(Residue scalar) {
  scalar %= m_;
  MultilinearPoly out(n_, m_);
  for (const auto& [s, c] : terms_) out.add_term(s, mul_mod(c, scalar, m_));
  terms_ = std::move(out.terms_);
  return *this;
}

MultilinearPoly operator-(const MultilinearPoly& a) {
  MultilinearPoly out(a.n_, a.m_);
  return out -= a;
}

MultilinearPoly operator*(const MultilinearPoly& a, const MultilinearPoly& b) {
  a.require_compatible(b, "multiply");
  MultilinearPoly out(a.n_, a.m_);
  for (const auto& [s, c] : a.terms_)
    for (const auto& [t, d] : b.terms_) out.add_term(s | t, mul_mod(c, d, a.m_));
  return out;
}

// --- SymmetricLevelPoly ----------------------------------------------------

SymmetricLevelPoly::SymmetricLevelPoly(std::uint64_t n, std::uint64_t m) : n_(n), m_(m) {
  require_modulus(m);
}

void SymmetricLevelPoly::set_level(std::uint64_t d, Residue c) {
  if (d > n_) throw DomainError("symmetric level exceeds n");
  c %= m_;
  if (c == 0)
    levels_.erase(d);
  else
    levels_[d] = c;
}

Residue SymmetricLevelPoly::level(std::uint64_t d) const {
  const auto it = levels_.find(d);
  return it == levels_.end() ? 0 : it->second;
}

std::uint64_t SymmetricLevelPoly::degree() const noexcept {
  return levels_.empty() ? 0 : levels_.rbegin()->first;
}

Residue SymmetricLevelPoly::eval(std::uint64_t weight) const {
  if (weight > n_) throw DomainError("weight exceeds n");
  Residue acc = 0;
  for (const auto& [d, c] : levels_) acc = (acc + mul_mod(c, binom_mod(weight, d, m_), m_)) % m_;
  return acc;
}

MultilinearPoly SymmetricLevelPoly::to_multilinear() const {
  if (n_ > kMaxExplicitVars) throw DomainError("to_multilinear: n exceeds 64");
  const auto n = static_cast<unsigned>(n_);
  MultilinearPoly out(n, m_);
  for (const auto& [d, c] : levels_) {
    for_each_weight_lex(n, static_cast<unsigned>(d), [&](Mask s) {
      out.add_term(s, c);
      return true;
    });
  }
  return out;
}

// --- PromiseFn and representation -----------------------------------------

PromiseFn::PromiseFn(std::uint64_t n) : n_(n) {
  if (n == 0 || n % 4 != 0) throw DomainError("promise function needs n a positive multiple of 4");
}

std::optional<bool> PromiseFn::value_at_weight(std::uint64_t w) const noexcept {
  if (w == accept_weight()) return true;
  if (w == reject_weight()) return false;
  return std::nullopt;
}

RepresentationCheck check_representation(const MultilinearPoly& poly, const PromiseFn& g) {
  if (poly.n() != g.n()) throw DomainError("represents: variable count mismatch");
  const auto n = poly.n();
  std::vector<Mask> accepts, rejects;
  for_each_weight_lex(n, static_cast<unsigned>(g.accept_weight()), [&](Mask x) {
    accepts.push_back(x);
    return true;
  });
  for_each_weight_lex(n, static_cast<unsigned>(g.reject_weight()), [&](Mask x) {
    rejects.push_back(x);
    return true;
  });

  // Merge both weight classes into one lexicographic sweep so the first
  // violation found is the least one overall.
  auto lex_less = [](Mask a, Mask b) { return a != b && (b & (a ^ b) & (~(a ^ b) + 1)) != 0; };
  std::size_t i = 0, j = 0;
  while (i < accepts.size() || j < rejects.size()) {
    const bool take_accept = j == rejects.size() || (i < accepts.size() && lex_less(accepts[i], rejects[j]));
    const Mask x = take_accept ? accepts[i++] : rejects[j++];
    const Residue v = poly.eval(x);
    if ((v != 0) != take_accept) return {false, x, v};
  }
  return {true, std::nullopt, 0};
}

SymmetricCheck check_representation(const SymmetricLevelPoly& poly, const PromiseFn& g) {
  if (poly.n() != g.n()) throw DomainError("represents: variable count mismatch");
  SymmetricCheck out;
  out.accept_residue = poly.eval(g.accept_weight());
  out.reject_residue = poly.eval(g.reject_weight());
  out.holds = out.accept_residue != 0 && out.reject_residue == 0;
  return out;
}

std::vector<Mask> expand_to_unit_monomials(const MultilinearPoly& poly) {
  std::vector<Mask> out;
  for (const auto& [s, c] : poly.terms()) out.insert(out.end(), c, s);
  return out;
}

MultilinearPoly random_multilinear(unsigned n, std::uint64_t m, unsigned max_degree, double density,
                                   std::mt19937_64& rng) {
  MultilinearPoly p(n, m);
  std::bernoulli_distribution keep(density);
  std::uniform_int_distribution<Residue> coeff(1, m - 1);
  for (unsigned d = 0; d <= std::min(max_degree, n); ++d) {
    for_each_weight_lex(n, d, [&](Mask s) {
      if (keep(rng)) p.add_term(s, coeff(rng));
      return true;
    });
  }
  return p;
}

}  // namespace modrep
