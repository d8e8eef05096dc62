#include "modrep/polytext.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <string>
#include <utility>
#include <vector>

#include "modrep/errors.hpp"

namespace modrep {

namespace {

std::vector<unsigned> indices_of(Mask s) {
  std::vector<unsigned> out;
  for (unsigned i = 0; i < kMaxExplicitVars; ++i)
    if ((s >> i) & 1U) out.push_back(i + 1);
  return out;
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  void expect_word(std::string_view w) {
    skip_ws();
    if (text_.substr(pos_, w.size()) != w) fail("expected '" + std::string(w) + "'");
    pos_ += w.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  std::int64_t integer() {
    skip_ws();
    std::int64_t v = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    if (pos_ < text_.size() && text_[pos_] == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{}) fail("expected integer");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return v;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("polynomial text, offset " + std::to_string(pos_) + ": " + why);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

Residue reduce_signed(std::int64_t c, std::uint64_t m) {
  const auto mm = static_cast<std::int64_t>(m);
  return static_cast<Residue>(((c % mm) + mm) % mm);
}

}  // namespace

std::string format_poly(const MultilinearPoly& p) {
  std::vector<std::pair<Mask, Residue>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    const unsigned da = popcount(a.first), db = popcount(b.first);
    if (da != db) return da < db;
    return indices_of(a.first) < indices_of(b.first);
  });
  std::string out = "m=" + std::to_string(p.modulus()) + " n=" + std::to_string(p.n());
  for (const auto& [s, c] : terms) {
    out += "; " + std::to_string(c) + "*";
    if (s == 0) {
      out += "1";
      continue;
    }
    out += "x{";
    bool first = true;
    for (unsigned i : indices_of(s)) {
      if (!first) out += ",";
      out += std::to_string(i);
      first = false;
    }
    out += "}";
  }
  return out;
}

MultilinearPoly parse_poly(std::string_view text) {
  Cursor cur(text);
  cur.expect_word("m");
  cur.expect('=');
  const std::int64_t m = cur.integer();
  cur.expect_word("n");
  cur.expect('=');
  const std::int64_t n = cur.integer();
  if (m < 2) cur.fail("modulus must be at least 2");
  if (n < 0 || n > static_cast<std::int64_t>(kMaxExplicitVars)) cur.fail("n must be in [0, 64]");
  MultilinearPoly p(static_cast<unsigned>(n), static_cast<std::uint64_t>(m));

  while (cur.accept(';')) {
    if (cur.done() || cur.peek() == ';') continue;
    std::int64_t coeff = 1;
    Mask support = 0;
    if (cur.peek() != 'x') {
      coeff = cur.integer();
      if (!cur.accept('*')) {
        p.add_term(0, reduce_signed(coeff, p.modulus()));
        continue;
      }
    }
    if (cur.accept('x')) {
      cur.expect('{');
      if (!cur.accept('}')) {
        do {
          const std::int64_t i = cur.integer();
          if (i < 1 || i > n) cur.fail("variable index out of range");
          support |= Mask{1} << (i - 1);
        } while (cur.accept(','));
        cur.expect('}');
      }
    } else {
      if (cur.integer() != 1) cur.fail("constant monomial must be written as 1");
    }
    p.add_term(support, reduce_signed(coeff, p.modulus()));
  }
  if (!cur.done()) cur.fail("unexpected trailing text");
  return p;
}

}  // namespace modrep
