#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qkloc {

using Integer = mpz_class;
using Rational = mpq_class;

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);

Rational make_rational(long num, long den = 1);

}  // namespace qkloc
