#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "modrep/construct.hpp"
#include "modrep/errors.hpp"
#include "modrep/numtheory.hpp"
#include "modrep/polytext.hpp"
#include "modrep/qsim.hpp"
#include "modrep/search.hpp"
#include "modrep/selfcheck.hpp"
#include "modrep/separation.hpp"
#include "modrep/transforms.hpp"

namespace modrep::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { Json, Csv, Plain };

struct RunConfig {
  std::uint64_t n = 0;
  std::string n_range;
  std::uint64_t k = 0;
  std::uint64_t m = 0;
  std::uint64_t p = 0;
  std::optional<unsigned> r;
  std::optional<unsigned> d_max;
  std::uint64_t seed = 1;
  double budget = 1e8;
  unsigned jobs = 1;
  Format format = Format::Json;
  std::string machine_file;
  std::string fraction;
  bool timing = false;
};

// Thrown for bad flag values that CLI11 cannot check on its own.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

std::string csv_cell(const Json& v) {
  std::string s = scalar_text(v);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) quoted += (c == '"') ? std::string("\"\"") : std::string(1, c);
  return quoted + "\"";
}

// Objects render as one CSV row (or key=value lines); arrays of objects as a
// table keyed by the first object's fields.
void emit(const Json& doc, Format format, std::ostream& out) {
  if (format == Format::Json) {
    out << doc.dump(2) << '\n';
    return;
  }
  const Json rows = doc.is_array() ? doc : Json::array({doc});
  if (format == Format::Plain) {
    bool first = true;
    for (const auto& row : rows) {
      if (!first) out << '\n';
      first = false;
      for (const auto& [key, value] : row.items()) out << key << ": " << scalar_text(value) << '\n';
    }
    return;
  }
  if (rows.empty()) return;
  std::vector<std::string> keys;
  for (const auto& [key, value] : rows.front().items()) keys.push_back(key);
  for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? "," : "") << keys[i];
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < keys.size(); ++i)
      out << (i ? "," : "") << (row.contains(keys[i]) ? csv_cell(row[keys[i]]) : std::string{});
    out << '\n';
  }
}

Json construction_json(std::uint64_t n, std::uint64_t m) {
  Json j;
  j["n"] = n;
  j["m"] = m;
  try {
    const auto c = build(n, m);
    const auto& d = c.desc;
    j["case"] = d.divisible() ? "A" : "B";
    if (d.divisible()) {
      j["a"] = d.divisible_case().a;
      j["b"] = d.divisible_case().b;
      j["p"] = *d.chosen_prime;
    } else {
      j["a"] = d.residue_case().a;
      j["c"] = d.residue_case().c;
      j["p"] = nullptr;
    }
    j["d"] = d.degree;
    j["shift"] = d.shift;
    j["accept_residue"] = c.accept_residue;
    j["reject_residue"] = c.reject_residue;
    j["asymptotic_witness"] = asymptotic_witness(d);
    j["verified"] = true;
  } catch (const ConstructionError& e) {
    j["accept_residue"] = e.accept_residue();
    j["reject_residue"] = e.reject_residue();
    j["verified"] = false;
    j["error"] = e.what();
  }
  return j;
}

int cmd_binom(const RunConfig& cfg, std::ostream& out) {
  if (cfg.m < 2) throw UsageError("--m must be at least 2");
  const Factorization f = factorize(cfg.m);
  Json j;
  j["n"] = cfg.n;
  j["k"] = cfg.k;
  j["m"] = cfg.m;
  Residue value = 0;
  if (f.is_prime()) {
    j["method"] = "lucas";
    value = binom_mod_prime(cfg.n, cfg.k, cfg.m);
  } else if (f.squarefree()) {
    j["method"] = "lucas+crt";
    value = binom_mod_squarefree(cfg.n, cfg.k, cfg.m);
  } else {
    j["method"] = "multiplicative";
    value = binom_mod(cfg.n, cfg.k, cfg.m);
  }
  j["residue"] = value;
  bool agree = true;
  if (cfg.n <= 10'000) {
    const Residue pascal = binom_mod_pascal(cfg.n, cfg.k, cfg.m);
    j["pascal"] = pascal;
    agree = pascal == value;
  } else {
    j["pascal"] = nullptr;
  }
  emit(j, cfg.format, out);
  return agree ? kOk : kVerificationFailure;
}

std::vector<std::uint64_t> construct_lengths(const RunConfig& cfg) {
  if (cfg.n_range.empty()) return {cfg.n};
  const auto colon = cfg.n_range.find(':');
  if (colon == std::string::npos) throw UsageError("--n range must look like FIRST:LAST");
  std::uint64_t first = 0, last = 0;
  try {
    first = std::stoull(cfg.n_range.substr(0, colon));
    last = std::stoull(cfg.n_range.substr(colon + 1));
  } catch (const std::exception&) {
    throw UsageError("--n range must look like FIRST:LAST");
  }
  if (first == 0 || first % 4 != 0 || last < first) throw UsageError("--n range needs 4 | FIRST <= LAST");
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = first; n <= last; n += 4) out.push_back(n);
  return out;
}

int cmd_construct(const RunConfig& cfg, std::ostream& out) {
  const auto lengths = construct_lengths(cfg);
  Json rows = Json::array();
  bool all_ok = true;
  for (const auto n : lengths) {
    rows.push_back(construction_json(n, cfg.m));
    all_ok = all_ok && rows.back()["verified"].get<bool>();
  }
  emit(lengths.size() == 1 && cfg.n_range.empty() ? rows.front() : rows, cfg.format, out);
  return all_ok ? kOk : kVerificationFailure;
}

int cmd_search(const RunConfig& cfg, std::ostream& out) {
  if (cfg.n == 0 || cfg.n % 4 != 0) throw UsageError("--n must be a positive multiple of 4");
  const Factorization f = factorize(cfg.m);
  std::optional<Rational> bound;
  if (f.is_prime_power()) bound = degree_lower_bound(cfg.n, f.factors[0].prime, f.factors[0].exponent);
  if (!cfg.d_max && !bound) throw UsageError("--dmax is required when m is not a prime power");

  SearchOptions opt;
  opt.d_max = cfg.d_max ? *cfg.d_max : default_search_degree(cfg.n, cfg.m);
  opt.budget = cfg.budget;
  opt.jobs = cfg.jobs;
  const auto report = exhaustive_min_degree(PromiseFn(cfg.n), cfg.m, opt);

  Json j;
  j["n"] = report.n;
  j["m"] = report.m;
  j["d_max"] = report.d_max;
  j["bound"] = bound ? Json(to_string(*bound)) : Json(nullptr);
  j["outcome"] = report.found() ? "found" : "none_below";
  j["degree"] = report.found() ? Json(report.found_degree()) : Json(nullptr);
  j["witness"] = report.found() ? Json(format_poly(*report.witness)) : Json(nullptr);
  j["candidates_examined"] = report.candidates_examined;
  j["log10_space"] = report.log10_space;
  if (cfg.timing) j["elapsed_ms"] = std::chrono::duration<double, std::milli>(report.elapsed).count();

  // A witness strictly below the lower bound would contradict it.
  const bool falsifies = report.found() && bound && Rational(report.found_degree()) < *bound;
  j["falsifies_bound"] = falsifies;
  emit(j, cfg.format, out);
  return falsifies ? kVerificationFailure : kOk;
}

int cmd_identities(const RunConfig& cfg, std::ostream& out) {
  if (!is_prime(cfg.p)) throw UsageError("--p must be prime");
  Json j;
  j["p"] = cfg.p;
  j["contradiction_closes"] = contradiction_check(cfg.p);
  Json list = Json::array();
  bool ok = true;
  std::vector<unsigned> levels;
  if (cfg.r) {
    levels.push_back(*cfg.r);
  } else {
    for (unsigned r = 0; 3 * ipow(cfg.p, r) <= 2000; ++r) levels.push_back(r);
  }
  for (const auto r : levels) {
    const auto rep = verify_counting_identities(cfg.p, r);
    Json e;
    e["r"] = r;
    e["constraint_count_mod_p"] = rep.constraint_count;
    e["total_identity"] = rep.total_identity;
    e["per_monomial_identity"] = rep.per_monomial_identity;
    e["pascal_agrees"] = rep.pascal_agrees;
    list.push_back(e);
    ok = ok && rep.holds();
  }
  j["identities"] = list;

  if (cfg.n != 0) {
    if (cfg.n % 4 != 0 || cfg.n > 16) throw UsageError("--n must be a multiple of 4, at most 16");
    // The accept/reject constraint system at degree bound n/4, summed mod p.
    const auto rows = lower_bound_system(static_cast<unsigned>(cfg.n));
    const std::vector<ConstraintRow> accepts(rows.begin() + 1, rows.end());
    Json sys;
    sys["n"] = cfg.n;
    sys["columns"] = rows.front().columns.size();
    sys["accept_rows"] = accepts.size();
    sys["accept_column_sums"] = column_sums(accepts, cfg.p);
    sys["reject_row"] = rows.front().incidence;
    j["system"] = sys;
  }
  emit(j, cfg.format, out);
  return ok ? kOk : kVerificationFailure;
}

int cmd_grover(const RunConfig& cfg, std::ostream& out) {
  if (cfg.fraction != "1/4" && cfg.fraction != "3/4") throw UsageError("--fraction must be 1/4 or 3/4");
  if (cfg.n == 0 || cfg.n % 4 != 0) throw UsageError("--n must be a positive multiple of 4");
  std::mt19937_64 rng(cfg.seed);
  const auto items = static_cast<std::size_t>(cfg.n);
  const auto set = OracleSet::random(items, cfg.fraction == "1/4" ? items / 4 : 3 * items / 4, rng);
  const auto d = one_query_decide(set, rng);
  Json j;
  j["N"] = cfg.n;
  j["fraction"] = cfg.fraction;
  j["seed"] = cfg.seed;
  j["marked_probability"] = to_string(d.marked_probability);
  j["decision"] = to_string(d.verdict);
  j["measured_index"] = d.measured_index;
  j["quantum_queries"] = d.quantum_queries;
  j["classical_checks"] = d.classical_checks;
  emit(j, cfg.format, out);
  return to_string(d.verdict) == cfg.fraction ? kOk : kVerificationFailure;
}

int cmd_fool(const RunConfig& cfg, std::ostream& out) {
  std::ifstream in(cfg.machine_file);
  if (!in) throw UsageError("cannot open machine file '" + cfg.machine_file + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const ModMachine machine = parse_machine(buf.str());
  const PromiseFn target(machine.n);

  Json j;
  j["n"] = machine.n;
  j["m"] = machine.m;
  j["depth"] = machine.depth();
  try {
    const auto f = find_fooling_oracle(machine, target);
    j["oracle"] = to_bitstring(f.oracle, machine.n);
    j["weight"] = f.weight;
    j["machine_says"] = f.machine_says;
    j["truth"] = f.truth;
  } catch (const FalsificationError& e) {
    j["oracle"] = nullptr;
    j["error"] = e.what();
    emit(j, cfg.format, out);
    return kVerificationFailure;
  }
  emit(j, cfg.format, out);
  return kOk;
}

int cmd_selftest(const RunConfig& cfg, std::ostream& out) {
  const auto results = run_selfcheck(cfg.seed, cfg.jobs);
  Json rows = Json::array();
  bool ok = true;
  for (const auto& r : results) {
    Json e;
    e["module"] = r.module;
    e["check"] = r.name;
    e["passed"] = r.passed;
    e["detail"] = r.detail;
    rows.push_back(e);
    ok = ok && r.passed;
  }
  if (cfg.format == Format::Json) {
    Json j;
    j["seed"] = cfg.seed;
    j["passed"] = ok;
    j["checks"] = rows;
    emit(j, cfg.format, out);
  } else {
    emit(rows, cfg.format, out);
  }
  return ok ? kOk : kVerificationFailure;
}

double default_budget() {
  if (const char* env = std::getenv("MODREP_BUDGET")) {
    try {
      return std::stod(env);
    } catch (const std::exception&) {
      throw UsageError("MODREP_BUDGET is not a number");
    }
  }
  return 1e8;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"modrep: polynomial representations of the quarter/three-quarter promise function"};
  app.require_subcommand(1);
  RunConfig cfg;

  const std::map<std::string, Format> formats{{"json", Format::Json}, {"csv", Format::Csv}, {"plain", Format::Plain}};
  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->transform(CLI::CheckedTransformer(formats));
  };

  auto* binom = app.add_subcommand("binom", "C(n, k) mod m by Lucas / CRT, checked against Pascal");
  binom->add_option("--n", cfg.n)->required();
  binom->add_option("--k", cfg.k)->required();
  binom->add_option("--m", cfg.m)->required();
  common(binom);

  auto* construct = app.add_subcommand("construct", "Build and verify the squarefree-modulus construction");
  construct->add_option("--n", cfg.n_range, "N, or FIRST:LAST for a sweep over multiples of 4")->required();
  construct->add_option("--m", cfg.m)->required();
  common(construct);

  auto* search = app.add_subcommand("search", "Exhaustive low-degree representation search");
  search->add_option("--n", cfg.n)->required();
  search->add_option("--m", cfg.m)->required();
  search->add_option("--dmax", cfg.d_max, "Largest degree to search (default: ceil(bound) - 1)");
  auto* budget_opt = search->add_option("--budget", cfg.budget, "Candidate-space budget (env MODREP_BUDGET)");
  search->add_option("--jobs", cfg.jobs)->check(CLI::PositiveNumber);
  search->add_flag("--timing", cfg.timing, "Include wall-clock time in the report");
  common(search);

  auto* identities = app.add_subcommand("identities", "Lucas counting identities of the lower-bound argument");
  identities->add_option("--p", cfg.p)->required();
  identities->add_option("--r", cfg.r);
  identities->add_option("--n", cfg.n, "Also sum the constraint system for this n (n <= 16)");
  common(identities);

  auto* grover = app.add_subcommand("grover", "Exact one-query 1/4 vs 3/4 distinguisher");
  grover->add_option("--n", cfg.n, "Number of items N")->required();
  grover->add_option("--fraction", cfg.fraction)->required();
  grover->add_option("--seed", cfg.seed);
  common(grover);

  auto* fool = app.add_subcommand("fool", "Find a promise input on which a query machine errs");
  fool->add_option("--machine", cfg.machine_file)->required();
  common(fool);

  auto* selftest = app.add_subcommand("selftest", "Run every module's property checks");
  selftest->add_option("--seed", cfg.seed);
  selftest->add_option("--jobs", cfg.jobs)->check(CLI::PositiveNumber);
  common(selftest);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (budget_opt->count() == 0) cfg.budget = default_budget();
    if (*construct) {
      if (cfg.n_range.find(':') == std::string::npos) {
        try {
          cfg.n = std::stoull(cfg.n_range);
        } catch (const std::exception&) {
          throw UsageError("--n must be an integer or FIRST:LAST");
        }
        cfg.n_range.clear();
      }
      return cmd_construct(cfg, out);
    }
    if (*binom) return cmd_binom(cfg, out);
    if (*search) return cmd_search(cfg, out);
    if (*identities) return cmd_identities(cfg, out);
    if (*grover) return cmd_grover(cfg, out);
    if (*fool) return cmd_fool(cfg, out);
    if (*selftest) return cmd_selftest(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const BudgetExceeded& e) {
    Json j;
    j["error"] = e.what();
    j["log10_candidates"] = e.log10_candidates();
    emit(j, cfg.format, out);
    return kUsageError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const PromiseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "verification failure: " << e.what() << '\n';
    return kVerificationFailure;
  }
  return kUsageError;
}

}  // namespace modrep::cli
