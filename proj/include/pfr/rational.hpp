#pragma once

#include <boost/rational.hpp>

#include <charconv>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "pfr/error.hpp"

namespace pfr {

/// Exact rational numbers; breakpoints and point-function values live here.
using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

/// Parses "p/q" or "p". Rejects zero denominators and trailing garbage.
inline std::optional<Rational> try_parse_rational(std::string_view text) {
  auto parse_int = [](std::string_view s, std::int64_t& out) {
    if (s.empty()) return false;
    if (s.front() == '+') s.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
  };
  std::int64_t num = 0;
  std::int64_t den = 1;
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!parse_int(text, num)) return std::nullopt;
  } else {
    if (!parse_int(text.substr(0, slash), num)) return std::nullopt;
    if (!parse_int(text.substr(slash + 1), den)) return std::nullopt;
    if (den == 0) return std::nullopt;
  }
  return Rational(num, den);
}

inline Rational parse_rational(std::string_view text) {
  if (auto q = try_parse_rational(text)) return *q;
  throw Error(ErrorKind::SchemaError, "malformed rational '" + std::string(text) + "'");
}

/// Order isomorphism Q -> Q ∩ (-1,1), r |-> r / (1 + |r|).
inline Rational squash(const Rational& r) { return r / (Rational(1) + boost::abs(r)); }

/// Inverse of squash on (-1,1), q |-> q / (1 - |q|).
inline Rational unsquash(const Rational& q) { return q / (Rational(1) - boost::abs(q)); }

}  // namespace pfr
