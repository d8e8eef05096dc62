#include "modrep/search.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <string>

#include "modrep/errors.hpp"
#include "modrep/numtheory.hpp"
#include "modrep/transforms.hpp"

namespace modrep {

Rational degree_lower_bound(std::uint64_t n, std::uint64_t p, unsigned k) {
  if (n == 0 || n % 4 != 0) throw DomainError("degree_lower_bound: n must be a positive multiple of 4");
  if (!is_prime(p)) throw DomainError("degree_lower_bound: p must be prime");
  if (k == 0) throw DomainError("degree_lower_bound: k must be at least 1");
  const auto denom = 4 * (2 * static_cast<std::int64_t>(ipow(p, k - 1)) - 1) * static_cast<std::int64_t>(p - 1);
  return Rational(static_cast<std::int64_t>(n), denom);
}

unsigned default_search_degree(std::uint64_t n, std::uint64_t m) {
  const Factorization f = factorize(m);
  if (!f.is_prime_power()) throw DomainError("default search degree needs a prime-power modulus");
  const auto c = ceil(degree_lower_bound(n, f.factors[0].prime, f.factors[0].exponent));
  return c <= 0 ? 0 : static_cast<unsigned>(c - 1);
}

double search_space_log10(unsigned n, std::uint64_t m, unsigned d_max) {
  double monomials = 0;
  for (unsigned d = 0; d <= std::min(d_max, n); ++d) {
    // C(n, d) in floating point; exactness is irrelevant for a budget estimate.
    monomials += std::exp(std::lgamma(n + 1.0) - std::lgamma(d + 1.0) - std::lgamma(n - d + 1.0));
  }
  return std::round(monomials) * std::log10(static_cast<double>(m));
}

namespace {

// Depth-first enumeration of coefficient vectors over a fixed monomial list.
// A promise input becomes checkable once every monomial it contains has been
// assigned; it is checked at exactly that depth, rejects before accepts.
class PrunedEnumerator {
 public:
  PrunedEnumerator(const PromiseFn& g, std::uint64_t m, unsigned degree, EnumerationOrder order)
      : m_(m), order_(order) {
    const auto n = static_cast<unsigned>(g.n());
    for (unsigned d = 0; d <= std::min(degree, n); ++d)
      for_each_weight_lex(n, d, [&](Mask s) {
        monomials_.push_back(s);
        return true;
      });
    std::sort(monomials_.begin(), monomials_.end());
    checks_.resize(monomials_.size());
    auto add_input = [&](Mask x, bool accept) {
      Check c{accept, {}};
      for (std::size_t i = 0; i < monomials_.size(); ++i)
        if ((monomials_[i] & ~x) == 0) c.indices.push_back(static_cast<std::uint32_t>(i));
      checks_[c.indices.back()].push_back(std::move(c));  // the empty monomial is always present
      return true;
    };
    for_each_weight_lex(n, static_cast<unsigned>(g.reject_weight()), [&](Mask x) { return add_input(x, false); });
    for_each_weight_lex(n, static_cast<unsigned>(g.accept_weight()), [&](Mask x) { return add_input(x, true); });
    coeffs_.assign(monomials_.size(), 0);
  }

  std::size_t width() const noexcept { return monomials_.size(); }
  const std::vector<Mask>& monomials() const noexcept { return monomials_; }

  /// Searches with coefficient 0 fixed to `first`. Returns the first
  /// representing coefficient vector in enumeration order, if any.
  std::optional<std::vector<Residue>> run_shard(Residue first) {
    coeffs_[0] = first;
    ++visited_;
    if (!consistent(0)) return std::nullopt;
    if (descend(1)) return coeffs_;
    return std::nullopt;
  }

  std::uint64_t visited() const noexcept { return visited_; }

 private:
  struct Check {
    bool accept;
    std::vector<std::uint32_t> indices;
  };

  bool consistent(std::size_t depth) const {
    for (const Check& c : checks_[depth]) {
      Residue v = 0;
      for (const auto i : c.indices) v += coeffs_[i];
      if (((v % m_) != 0) != c.accept) return false;
    }
    return true;
  }

  bool descend(std::size_t depth) {
    if (depth == coeffs_.size()) return true;
    for (Residue step = 0; step < m_; ++step) {
      coeffs_[depth] = order_ == EnumerationOrder::Ascending ? step : m_ - 1 - step;
      ++visited_;
      if (consistent(depth) && descend(depth + 1)) return true;
    }
    coeffs_[depth] = 0;
    return false;
  }

  std::uint64_t m_;
  EnumerationOrder order_;
  std::vector<Mask> monomials_;
  std::vector<std::vector<Check>> checks_;  // indexed by completion depth
  std::vector<Residue> coeffs_;
  std::uint64_t visited_ = 0;
};

struct ShardResult {
  std::optional<std::vector<Residue>> coeffs;
  std::uint64_t visited = 0;
};

}  // namespace

SearchReport exhaustive_min_degree(const PromiseFn& g, std::uint64_t m, const SearchOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (g.n() > 24) throw DomainError("exhaustive search supports n <= 24");
  if (m < 2) throw DomainError("modulus must be at least 2");
  const auto n = static_cast<unsigned>(g.n());

  SearchReport report;
  report.n = n;
  report.m = m;
  report.d_max = options.d_max;
  report.log10_space = search_space_log10(n, m, options.d_max);
  if (report.log10_space > std::log10(options.budget)) {
    throw BudgetExceeded("search space of about 10^" + std::to_string(report.log10_space) +
                             " candidates exceeds the budget of " + std::to_string(options.budget),
                         report.log10_space);
  }

  const unsigned jobs = std::max(1U, options.jobs);
  for (unsigned degree = 0; degree <= std::min(options.d_max, n); ++degree) {
    // Shard by the constant coefficient. Every shard runs to its own first
    // hit, so the visit count and the chosen witness do not depend on `jobs`.
    std::vector<ShardResult> shards(m);
    auto run = [&](Residue shard) {
      PrunedEnumerator e(g, m, degree, options.order);
      const Residue first = options.order == EnumerationOrder::Ascending ? shard : m - 1 - shard;
      ShardResult r;
      r.coeffs = e.run_shard(first);
      r.visited = e.visited();
      return r;
    };
    for (Residue begin = 0; begin < m; begin += jobs) {
      std::vector<std::future<ShardResult>> pending;
      for (Residue s = begin; s < std::min<Residue>(m, begin + jobs); ++s)
        pending.push_back(std::async(jobs == 1 ? std::launch::deferred : std::launch::async, run, s));
      for (Residue s = begin; s < std::min<Residue>(m, begin + jobs); ++s) shards[s] = pending[s - begin].get();
    }

    for (const auto& s : shards) report.candidates_examined += s.visited;
    const auto hit = std::find_if(shards.begin(), shards.end(), [](const ShardResult& s) { return s.coeffs; });
    if (hit != shards.end()) {
      const PrunedEnumerator layout(g, m, degree, options.order);
      MultilinearPoly w(n, m);
      for (std::size_t i = 0; i < layout.width(); ++i) w.add_term(layout.monomials()[i], (*hit->coeffs)[i]);
      report.witness = std::move(w);
      break;
    }
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

CountingIdentityReport verify_counting_identities(std::uint64_t p, unsigned r) {
  if (!is_prime(p)) throw DomainError("verify_counting_identities: p must be prime");
  const std::uint64_t q = ipow(p, r);
  if (3 * q > 10'000) throw DomainError("verify_counting_identities: 3p^r exceeds the Pascal oracle range");
  const PascalTable pascal(3 * q, p);

  CountingIdentityReport out;
  out.p = p;
  out.r = r;
  out.constraint_count = binom_mod_prime(3 * q, q, p);
  out.total_identity = out.constraint_count == 3 % p;
  out.pascal_agrees = pascal(3 * q, q) == out.constraint_count;
  out.per_monomial_identity = true;
  for (std::uint64_t l = 1; l < q; ++l) {
    const Residue lucas = binom_mod_prime(3 * q - l, q - l, p);
    if (lucas != 1 % p) out.per_monomial_identity = false;
    if (pascal(3 * q - l, q - l) != lucas) out.pascal_agrees = false;
  }
  return out;
}

bool contradiction_check(std::uint64_t p) {
  if (p < 2) throw DomainError("contradiction_check: p must be at least 2");
  for (std::uint64_t c_empty : {0U, 1U})
    if ((3 - 2 * c_empty) % p == 0) return false;
  return true;
}

ConstraintRow build_constraint(unsigned n, Mask support, unsigned degree_bound, Residue target) {
  if (n == 0 || n % 4 != 0) throw DomainError("build_constraint: n must be a positive multiple of 4");
  const unsigned width_vars = 3 * n / 4;
  if (width_vars < kMaxExplicitVars && (support >> width_vars) != 0)
    throw DomainError("build_constraint: support must lie within the first 3n/4 variables");
  ConstraintRow row;
  row.target = target;
  for (unsigned d = 0; d < degree_bound && d <= width_vars; ++d) {
    std::vector<Mask> level;
    for_each_weight_lex(width_vars, d, [&](Mask s) {
      level.push_back(s);
      return true;
    });
    std::sort(level.begin(), level.end());
    row.columns.insert(row.columns.end(), level.begin(), level.end());
  }
  row.incidence.reserve(row.columns.size());
  for (const Mask s : row.columns) row.incidence.push_back((s & ~support) == 0 ? 1 : 0);
  return row;
}

ConstraintRow build_reject_constraint(unsigned n, Mask support, unsigned degree_bound) {
  return build_constraint(n, support, degree_bound, 0);
}

ConstraintRow build_accept_constraint(unsigned n, Mask support, unsigned degree_bound) {
  return build_constraint(n, support, degree_bound, 1);
}

std::vector<ConstraintRow> lower_bound_system(unsigned n) {
  if (n == 0 || n % 4 != 0 || n > 24) throw DomainError("lower_bound_system: n must be a multiple of 4, at most 24");
  const unsigned quarter = n / 4, width_vars = 3 * n / 4;
  std::vector<ConstraintRow> rows;
  rows.push_back(build_reject_constraint(n, (Mask{1} << width_vars) - 1, quarter));
  for_each_weight_lex(width_vars, quarter, [&](Mask t) {
    rows.push_back(build_accept_constraint(n, t, quarter));
    return true;
  });
  return rows;
}

std::vector<Residue> column_sums(const std::vector<ConstraintRow>& rows, std::uint64_t p) {
  if (rows.empty()) return {};
  std::vector<Residue> sums(rows.front().columns.size(), 0);
  for (const auto& row : rows) {
    if (row.incidence.size() != sums.size()) throw DomainError("column_sums: rows have different widths");
    for (std::size_t i = 0; i < sums.size(); ++i) sums[i] = (sums[i] + row.incidence[i]) % p;
  }
  return sums;
}

}  // namespace modrep
