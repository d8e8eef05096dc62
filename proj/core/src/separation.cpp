#include "modrep/separation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>

#include "modrep/errors.hpp"

namespace modrep {

bool QueryPath::consistent_with(Mask x) const noexcept {
  return std::all_of(literals.begin(), literals.end(), [x](const Literal& l) {
    return (((x >> (l.variable - 1)) & 1U) != 0) == l.value;
  });
}

std::size_t ModMachine::depth() const noexcept {
  std::size_t d = 0;
  for (const auto& p : paths) d = std::max(d, p.literals.size());
  return d;
}

std::uint64_t ModMachine::accepting_count(Mask x) const noexcept {
  return static_cast<std::uint64_t>(std::count_if(
      paths.begin(), paths.end(), [x](const QueryPath& p) { return p.accepting && p.consistent_with(x); }));
}

MultilinearPoly path_monomial(const QueryPath& path, unsigned n, std::uint64_t m) {
  MultilinearPoly out = MultilinearPoly::constant(n, m, 1);
  Mask seen = 0, ones = 0;
  for (const auto& lit : path.literals) {
    if (lit.variable == 0 || lit.variable > n) throw DomainError("path literal variable out of range");
    const Mask bit = Mask{1} << (lit.variable - 1);
    if (seen & bit) {
      if (((ones & bit) != 0) != lit.value) throw DomainError("path queries a variable with conflicting answers");
      continue;
    }
    seen |= bit;
    if (lit.value) {
      ones |= bit;
      out = out.times_monomial(bit);
    } else {
      out = out * (MultilinearPoly::constant(n, m, 1) - MultilinearPoly::monomial(n, m, bit));
    }
  }
  return out;
}

MultilinearPoly machine_polynomial(const ModMachine& machine) {
  MultilinearPoly out(machine.n, machine.m);
  for (const auto& p : machine.paths)
    if (p.accepting) out += path_monomial(p, machine.n, machine.m);
  return out;
}

bool accepts(const ModMachine& machine, Mask x) {
  return machine.accepting_count(x) % machine.m != 0;
}

FoolingOracle find_fooling_oracle(const ModMachine& machine, const PromiseFn& target) {
  if (machine.n != target.n()) throw DomainError("machine and promise function disagree on n");
  std::optional<FoolingOracle> found;
  for (const bool truth : {true, false}) {
    const auto w = static_cast<unsigned>(truth ? target.accept_weight() : target.reject_weight());
    for_each_weight_lex(machine.n, w, [&](Mask x) {
      const bool says = accepts(machine, x);
      if (says == truth) return true;
      found = FoolingOracle{x, w, says, truth};
      return false;
    });
    if (found) return *found;
  }
  throw FalsificationError("machine answers every promise input correctly; no fooling oracle exists");
}

std::string format_machine(const ModMachine& machine) {
  std::ostringstream out;
  out << "m=" << machine.m << " n=" << machine.n << '\n';
  for (const auto& p : machine.paths) {
    out << (p.accepting ? "accept:" : "reject:");
    for (std::size_t i = 0; i < p.literals.size(); ++i)
      out << (i == 0 ? " " : ",") << p.literals[i].variable << '=' << (p.literals[i].value ? 1 : 0);
    out << '\n';
  }
  return out.str();
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::int64_t parse_int(std::string_view s, std::size_t line) {
  s = trim(s);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError("machine text, line " + std::to_string(line) + ": expected integer, got '" + std::string(s) + "'");
  return v;
}

}  // namespace

ModMachine parse_machine(std::string_view text) {
  ModMachine machine;
  bool have_header = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    const std::string_view raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto fail = [&](const std::string& why) {
      throw ParseError("machine text, line " + std::to_string(line_no) + ": " + why);
    };

    if (!have_header) {
      const auto space = line.find_first_of(" \t");
      if (line.substr(0, 2) != "m=" || space == std::string_view::npos) fail("expected 'm=<int> n=<int>'");
      const auto rest = trim(line.substr(space));
      if (rest.substr(0, 2) != "n=") fail("expected 'n=<int>'");
      const auto m = parse_int(line.substr(2, space - 2), line_no);
      const auto n = parse_int(rest.substr(2), line_no);
      if (m < 2) fail("modulus must be at least 2");
      if (n < 1 || n > static_cast<std::int64_t>(kMaxExplicitVars)) fail("n must be in [1, 64]");
      machine.m = static_cast<std::uint64_t>(m);
      machine.n = static_cast<unsigned>(n);
      have_header = true;
      continue;
    }

    const auto colon = line.find(':');
    if (colon == std::string_view::npos) fail("expected 'accept:' or 'reject:'");
    const auto kind = trim(line.substr(0, colon));
    QueryPath path;
    if (kind == "accept")
      path.accepting = true;
    else if (kind == "reject")
      path.accepting = false;
    else
      fail("unknown path kind '" + std::string(kind) + "'");

    std::string_view body = trim(line.substr(colon + 1));
    Mask seen = 0, ones = 0;
    while (!body.empty()) {
      const auto comma = body.find(',');
      const auto item = trim(body.substr(0, comma));
      body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
      const auto eq = item.find('=');
      if (eq == std::string_view::npos) fail("expected literal 'i=b'");
      const auto var = parse_int(item.substr(0, eq), line_no);
      const auto bit = parse_int(item.substr(eq + 1), line_no);
      if (var < 1 || var > static_cast<std::int64_t>(machine.n)) fail("variable index out of range");
      if (bit != 0 && bit != 1) fail("answer must be 0 or 1");
      const Mask b = Mask{1} << (var - 1);
      if ((seen & b) && (((ones & b) != 0) != (bit == 1))) fail("conflicting answers for one variable");
      seen |= b;
      if (bit == 1) ones |= b;
      path.literals.push_back({static_cast<unsigned>(var), bit == 1});
    }
    machine.paths.push_back(std::move(path));
  }
  if (!have_header) throw ParseError("machine text: missing 'm=<int> n=<int>' header");
  return machine;
}

namespace {

std::vector<QueryPath> canonical_paths(std::vector<QueryPath> paths) {
  std::vector<unsigned> used;
  for (const auto& p : paths)
    for (const auto& l : p.literals) used.push_back(l.variable);
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());

  std::vector<unsigned> image(used.size());
  std::iota(image.begin(), image.end(), 1U);
  std::vector<QueryPath> best;
  bool first = true;
  do {
    auto relabeled = paths;
    for (auto& p : relabeled) {
      for (auto& l : p.literals) {
        const auto pos = std::lower_bound(used.begin(), used.end(), l.variable) - used.begin();
        l.variable = image[static_cast<std::size_t>(pos)];
      }
      std::sort(p.literals.begin(), p.literals.end());
    }
    std::sort(relabeled.begin(), relabeled.end());
    if (first || relabeled < best) best = std::move(relabeled);
    first = false;
  } while (std::next_permutation(image.begin(), image.end()));
  return best;
}

}  // namespace

std::vector<ModMachine> depth_one_machine_corpus(unsigned n, std::uint64_t m, unsigned max_paths) {
  // Path alphabet; a machine with k paths touches at most k variables, so up
  // to relabeling the variables 1..min(n, k) suffice.
  std::vector<QueryPath> alphabet;
  for (const bool acc : {true, false}) {
    alphabet.push_back({{}, acc});
    for (unsigned v = 1; v <= std::min(n, max_paths); ++v)
      for (const bool bit : {false, true}) alphabet.push_back({{{v, bit}}, acc});
  }

  std::set<std::vector<QueryPath>> classes;
  std::vector<std::size_t> pick;
  // Multisets as non-decreasing index sequences.
  auto recurse = [&](auto&& self, std::size_t start) -> void {
    std::vector<QueryPath> paths;
    for (const auto i : pick) paths.push_back(alphabet[i]);
    classes.insert(canonical_paths(std::move(paths)));
    if (pick.size() == max_paths) return;
    for (std::size_t i = start; i < alphabet.size(); ++i) {
      pick.push_back(i);
      self(self, i);
      pick.pop_back();
    }
  };
  recurse(recurse, 0);

  std::vector<ModMachine> out;
  out.reserve(classes.size());
  for (const auto& paths : classes) out.push_back({n, m, paths});
  return out;
}

ModMachine random_machine(unsigned n, std::uint64_t m, unsigned max_paths, unsigned max_depth,
                          std::mt19937_64& rng) {
  if (n == 0 || n > kMaxExplicitVars) throw DomainError("random_machine: n must be in [1, 64]");
  ModMachine machine{n, m, {}};
  std::uniform_int_distribution<unsigned> path_count(1, std::max(1U, max_paths));
  std::uniform_int_distribution<unsigned> depth(0, std::min(max_depth, n));
  std::bernoulli_distribution coin(0.5);
  std::vector<unsigned> vars(n);
  std::iota(vars.begin(), vars.end(), 1U);
  const unsigned count = path_count(rng);
  for (unsigned i = 0; i < count; ++i) {
    QueryPath path;
    path.accepting = coin(rng);
    const unsigned len = depth(rng);
    for (unsigned j = 0; j < len; ++j) {
      std::uniform_int_distribution<unsigned> pick(j, n - 1);
      std::swap(vars[j], vars[pick(rng)]);
      path.literals.push_back({vars[j], coin(rng)});
    }
    machine.paths.push_back(std::move(path));
  }
  return machine;
}

}  // namespace modrep
