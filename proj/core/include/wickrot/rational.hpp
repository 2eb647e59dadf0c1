#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

namespace wickrot {

/// Exact rational scalar. Structure constants and metrics parsed from
/// integer or rational literals stay exact; doubles are captured by their
/// exact dyadic value so that downstream arithmetic never rounds.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline Rational rational_from_double(double x) { return Rational(x); }

inline Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

/// "p/q" (or plain "p") with optional sign, exact. Rejects q = 0.
std::optional<Rational> parse_rational(const std::string& text);

/// Canonical form: "p" when the denominator is 1, otherwise "p/q".
std::string rational_to_string(const Rational& q);

/// Nearest rational with denominator <= max_den (Stern-Brocot search),
/// returned only when it reproduces x within tol. Used to snap numerically
/// recovered maps back onto exact entries before exact re-verification.
std::optional<Rational> snap_to_rational(double x, long max_den, double tol);

}  // namespace wickrot
