#include "modrep/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

#include "modrep/errors.hpp"

namespace modrep {

namespace {

constexpr std::uint64_t kMaxFactorizable = 1'000'000'000ULL;
constexpr std::uint64_t kMaxPascalRow = 10'000ULL;

// Inverse of a modulo m; requires gcd(a, m) = 1.
Residue inverse_mod(Residue a, std::uint64_t m) {
  std::int64_t old_r = static_cast<std::int64_t>(a % m), r = static_cast<std::int64_t>(m);
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - q * r};
    std::tie(old_s, s) = std::pair{s, old_s - q * s};
  }
  if (old_r != 1) throw InvariantViolation("inverse_mod: argument not a unit");
  const auto mm = static_cast<std::int64_t>(m);
  return static_cast<Residue>(((old_s % mm) + mm) % mm);
}

// C(n, k) mod p for n < p via the multiplicative formula.
Residue small_binom_mod_prime(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Residue num = 1, den = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    num = mul_mod(num, (n - i) % p, p);
    den = mul_mod(den, (i + 1) % p, p);
  }
  return mul_mod(num, pow_mod(den, p - 2, p), p);
}

}  // namespace

Residue mul_mod(Residue a, Residue b, std::uint64_t m) {
  return static_cast<Residue>((static_cast<unsigned __int128>(a) * b) % m);
}

Residue pow_mod(Residue base, std::uint64_t exponent, std::uint64_t m) {
  if (m == 1) return 0;
  Residue result = 1;
  base %= m;
  while (exponent != 0) {
    if (exponent & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exponent >>= 1U;
  }
  return result;
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

bool Factorization::squarefree() const noexcept {
  return std::all_of(factors.begin(), factors.end(),
                     [](const PrimePower& f) { return f.exponent == 1; });
}

std::vector<std::uint64_t> Factorization::primes() const {
  std::vector<std::uint64_t> out;
  out.reserve(factors.size());
  for (const auto& f : factors) out.push_back(f.prime);
  return out;
}

std::uint64_t Factorization::largest_prime() const {
  return factors.empty() ? 1 : factors.back().prime;
}

Factorization factorize(std::uint64_t m) {
  if (m < 2) throw DomainError("factorize: modulus must be at least 2");
  if (m > kMaxFactorizable) throw DomainError("factorize: modulus exceeds 10^9");
  Factorization f{m, {}};
  std::uint64_t rest = m;
  for (std::uint64_t d = 2; d * d <= rest; d += (d == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (rest % d == 0) {
      rest /= d;
      ++e;
    }
    if (e != 0) f.factors.push_back({d, e});
  }
  if (rest > 1) f.factors.push_back({rest, 1});
  return f;
}

std::uint64_t DigitString::value() const {
  std::uint64_t v = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) v = v * base + *it;
  return v;
}

DigitString digits(std::uint64_t n, std::uint64_t base) {
  if (base < 2) throw DomainError("digits: base must be at least 2");
  DigitString out{base, {}};
  do {
    out.digits.push_back(n % base);
    n /= base;
  } while (n != 0);
  return out;
}

unsigned first_nonzero_digit_index(std::uint64_t n, std::uint64_t p) {
  if (n == 0) throw DomainError("first_nonzero_digit_index: n must be positive");
  if (p < 2) throw DomainError("first_nonzero_digit_index: base must be at least 2");
  unsigned i = 0;
  while (n % p == 0) {
    n /= p;
    ++i;
  }
  return i;
}

Residue binom_mod_prime(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
  if (!is_prime(p)) throw DomainError("binom_mod_prime: modulus " + std::to_string(p) + " is not prime");
  if (k > n) return 0;
  Residue result = 1;
  while (k != 0) {
    const std::uint64_t nd = n % p, kd = k % p;
    if (kd > nd) return 0;
    result = mul_mod(result, small_binom_mod_prime(nd, kd, p), p);
    if (result == 0) return 0;
    n /= p;
    k /= p;
  }
  return result % p;
}

Residue binom_mod_pascal(std::uint64_t n, std::uint64_t k, std::uint64_t m) {
  if (m == 0) throw DomainError("binom_mod_pascal: modulus must be positive");
  if (n > kMaxPascalRow) throw DomainError("binom_mod_pascal: n exceeds 10^4");
  if (k > n) return 0;
  std::vector<Residue> row(k + 1, 0);
  row[0] = 1 % m;
  for (std::uint64_t r = 1; r <= n; ++r) {
    for (std::uint64_t j = std::min(r, k); j >= 1; --j) row[j] = (row[j] + row[j - 1]) % m;
  }
  return row[k];
}

PascalTable::PascalTable(std::uint64_t max_row, std::uint64_t m) : max_row_(max_row), m_(m) {
  if (m == 0 || m > 0x7fffffffULL) throw DomainError("PascalTable: modulus out of range");
  cells_.resize((max_row + 1) * (max_row + 2) / 2);
  for (std::uint64_t n = 0; n <= max_row; ++n) {
    const std::uint64_t base = n * (n + 1) / 2, prev = n == 0 ? 0 : (n - 1) * n / 2;
    cells_[base] = static_cast<std::uint32_t>(1 % m);
    cells_[base + n] = static_cast<std::uint32_t>(1 % m);
    for (std::uint64_t k = 1; k < n; ++k)
      cells_[base + k] = static_cast<std::uint32_t>((cells_[prev + k - 1] + cells_[prev + k]) % m);
  }
}

Residue PascalTable::operator()(std::uint64_t n, std::uint64_t k) const {
  if (n > max_row_) throw DomainError("PascalTable: row out of range");
  if (k > n) return 0;
  return cells_[n * (n + 1) / 2 + k];
}

Congruence crt_combine(std::span<const Congruence> system) {
  Congruence acc{0, 1};
  for (const auto& c : system) {
    if (c.modulus == 0) throw DomainError("crt_combine: zero modulus");
    if (std::gcd(acc.modulus, c.modulus) != 1)
      throw DomainError("crt_combine: moduli are not pairwise coprime");
    const unsigned __int128 product = static_cast<unsigned __int128>(acc.modulus) * c.modulus;
    if (product > UINT64_MAX) throw DomainError("crt_combine: combined modulus overflows");
    const std::uint64_t target = c.residue % c.modulus;
    // x = acc.residue + acc.modulus * t with t = (target - acc.residue) / acc.modulus mod c.modulus
    const Residue diff = (target + c.modulus - acc.residue % c.modulus) % c.modulus;
    const Residue t = mul_mod(diff, inverse_mod(acc.modulus % c.modulus, c.modulus), c.modulus);
    const auto x = static_cast<unsigned __int128>(acc.modulus) * t + acc.residue;
    acc = {static_cast<Residue>(x % product), static_cast<std::uint64_t>(product)};
  }
  return acc;
}

Residue binom_mod_squarefree(std::uint64_t n, std::uint64_t k, std::uint64_t m) {
  if (m == 1) return 0;
  const Factorization f = factorize(m);
  if (!f.squarefree()) throw DomainError("binom_mod_squarefree: modulus " + std::to_string(m) + " is not squarefree");
  std::vector<Congruence> system;
  system.reserve(f.factors.size());
  for (const auto& pf : f.factors) system.push_back({binom_mod_prime(n, k, pf.prime), pf.prime});
  return crt_combine(system).residue;
}

Residue binom_mod(std::uint64_t n, std::uint64_t k, std::uint64_t m) {
  if (m == 0) throw DomainError("binom_mod: modulus must be positive");
  if (m == 1 || k > n) return 0;
  const Factorization f = factorize(m);
  if (f.squarefree()) return binom_mod_squarefree(n, k, m);

  k = std::min(k, n - k);
  const auto primes = f.primes();
  std::vector<std::int64_t> exponent(primes.size(), 0);
  Residue unit_num = 1 % m, unit_den = 1 % m;
  auto strip = [&](std::uint64_t v, int sign) {
    for (std::size_t i = 0; i < primes.size(); ++i) {
      while (v % primes[i] == 0) {
        v /= primes[i];
        exponent[i] += sign;
      }
    }
    return v % m;
  };
  for (std::uint64_t i = 1; i <= k; ++i) {
    unit_num = mul_mod(unit_num, strip(n - k + i, +1), m);
    unit_den = mul_mod(unit_den, strip(i, -1), m);
  }
  Residue result = mul_mod(unit_num, inverse_mod(unit_den, m), m);
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (exponent[i] < 0) throw InvariantViolation("binom_mod: negative prime exponent");
    result = mul_mod(result, pow_mod(primes[i], static_cast<std::uint64_t>(exponent[i]), m), m);
  }
  return result;
}

}  // namespace modrep
