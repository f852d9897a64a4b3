#pragma once

#include "markedres/param_poly.hpp"
#include "markedres/rational.hpp"

#include <optional>
#include <string>

namespace markedres {

// What the polynomial layer needs to know about a scalar type.
template <class S>
struct Coefficient;

template <>
struct Coefficient<Rational> {
  static constexpr bool is_field = true;
  static bool zero(const Rational& c) { return sgn(c) == 0; }
  static Rational one() { return Rational(1); }
  // value if the coefficient is a rational constant
  static std::optional<Rational> constant(const Rational& c) { return c; }
  static std::string text(const Rational& c, const ParameterRing*) { return to_string(c); }
  static std::string latex(const Rational& c, const ParameterRing*) {
    if (c.get_den() == 1) return c.get_str();
    std::string s = sgn(c) < 0 ? "-" : "";
    Rational a = abs(c);
    return s + "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
  }
  // single-summand coefficients print without brackets
  static bool is_atomic(const Rational&) { return true; }
};

template <>
struct Coefficient<ParamPoly> {
  static constexpr bool is_field = false;
  static bool zero(const ParamPoly& c) { return c.is_zero(); }
  static ParamPoly one() { return ParamPoly(Rational(1)); }
  static std::optional<Rational> constant(const ParamPoly& c) {
    if (c.is_constant()) return c.constant_value();
    return std::nullopt;
  }
  static std::string text(const ParamPoly& c, const ParameterRing* r) { return to_string(c, r); }
  static std::string latex(const ParamPoly& c, const ParameterRing* r) { return to_latex(c, r); }
  static bool is_atomic(const ParamPoly& c) { return c.size() <= 1; }
};

}  // namespace markedres
