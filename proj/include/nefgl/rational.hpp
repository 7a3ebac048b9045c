#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace nefgl {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

// Accepts "p", "p/q" and plain decimals such as "-0.25"; result is canonical.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
double to_double(const Rational& q);

Rational make_rational(long num, long den = 1);

}  // namespace nefgl
