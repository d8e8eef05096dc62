#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace modrep {

using Rational = boost::rational<std::int64_t>;

/// "p/q" with q > 0; integers keep the "/1".
inline std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline std::int64_t ceil(const Rational& r) {
  const auto q = r.numerator() / r.denominator();
  return (r.numerator() % r.denominator() > 0) ? q + 1 : q;
}

}  // namespace modrep
