#pragma once

#include <gmpxx.h>

#include <string>

namespace torusrec {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p", or "p/q" (q > 0 after canonicalization).
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);
std::string to_string(const BigInt& n);

/// Nearest integer, ties going down: floor(q + 1/2). Used to pick the
/// principal branch of torus coordinates, q - round_nearest(q) in [-1/2, 1/2).
BigInt round_nearest(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace torusrec
