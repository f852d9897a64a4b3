#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace markedres {

using Rational = mpq_class;

// "3/4", "-2", "0"
std::string to_string(const Rational& q);

// accepts "7", "-3/4"; throws std::invalid_argument otherwise
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace markedres
