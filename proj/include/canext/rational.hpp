#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>

#include "canext/error.hpp"

namespace canext {

/// Exact scalar used everywhere in the library.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Rational abs_of(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline Integer floor_of(const Rational& q) {
  Integer n = numerator_of(q);
  Integer d = denominator_of(q);
  Integer f = n / d;  // truncates toward zero
  if (n < 0 && f * d != n) f -= 1;
  return f;
}

inline Integer ceil_of(const Rational& q) { return -floor_of(Rational(-q)); }

/// Canonical text form: "p" for integers, "p/q" otherwise, lowest terms, q > 0.
inline std::string to_string(const Rational& q) {
  Integer d = denominator_of(q);
  if (d == 1) return numerator_of(q).str();
  return numerator_of(q).str() + "/" + d.str();
}

/// Parses "p", "p/q" or "-p/q". Rejects zero denominators and junk.
inline Rational parse_rational(std::string_view text) {
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) return false;
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!digits(num)) throw ValidationError("malformed rational '" + std::string(text) + "'");
  Integer p(std::string(num[0] == '+' ? num.substr(1) : num));
  if (slash == std::string_view::npos) return Rational(p);
  std::string_view den = text.substr(slash + 1);
  if (!digits(den) || den[0] == '-' || den[0] == '+')
    throw ValidationError("malformed rational '" + std::string(text) + "'");
  Integer q{std::string(den)};
  if (q == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
  return Rational(p, q);
}

/// The rational with least denominator in the closed interval [lo, hi]
/// (Stern-Brocot descent). Requires lo <= hi.
inline Rational simplest_between(Rational lo, Rational hi) {
  if (lo > hi) std::swap(lo, hi);
  if (lo <= 0 && hi >= 0) return Rational(0);
  if (hi < 0) return -simplest_between(-hi, -lo);
  Integer fl = floor_of(lo);
  if (Rational(fl) == lo) return lo;
  if (Rational(fl + 1) <= hi) return Rational(fl + 1);
  // lo and hi share the integer part fl; recurse on reciprocals of the fractional parts.
  Rational inner = simplest_between(Rational(1) / (hi - Rational(fl)), Rational(1) / (lo - Rational(fl)));
  return Rational(fl) + Rational(1) / inner;
}

}  // namespace canext
