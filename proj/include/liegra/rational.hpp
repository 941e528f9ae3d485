#pragma once

#include <gmpxx.h>

#include <string>

namespace liegra {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Always "p/q", including integers ("3/1") and zero ("0/1").
std::string to_string(const Rational& r);

/// Accepts "p/q" or a bare integer "p".
Rational parse_rational(const std::string& s);

Rational make_rational(long num, long den = 1);

}  // namespace liegra
