#pragma once

#include "markedres/marked.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace markedres {

// Expression over x-variables, components e1.. and named parameters.
// Unknown parameter names are appended to `ring` as they appear.
ModuleElement<ParamPoly> parse_element(std::string_view text, int nvars, ParameterRing& ring,
                                       const std::vector<int>& shifts = {0}, int line = 1);
ModuleElement<Rational> parse_rational_element(std::string_view text, int nvars,
                                               const std::vector<int>& shifts = {0});
// single term such as "x2^2*x1*e2"
ModuleTerm parse_module_term(std::string_view text, int nvars, const std::vector<int>& shifts = {0});

// `ideal[...]` or `module(n=2, shifts=[0,0]) { e1: [...], e2: [...] }`
struct ModuleLiteral {
  std::optional<int> nvars;  // from n=..., if given
  std::vector<int> shifts{0};
  std::vector<ModuleElement<Rational>> generators;
  bool monomial() const;
  std::vector<ModuleTerm> terms() const;  // precondition: monomial()
};
ModuleLiteral parse_module_literal(std::string_view text, std::optional<int> nvars);

// Marked-set file: `ring N`, optional `shifts d1 d2 ...`, then one `head | tail` per line.
struct MarkedFile {
  int nvars = 0;
  std::vector<int> shifts{0};
  ParameterRing ring;
  std::vector<std::pair<ModuleTerm, ModuleElement<ParamPoly>>> elements;
  std::vector<int> lines;

  ModulePtr module(std::optional<int> degree_cap = std::nullopt) const;
  MarkedSet<ParamPoly> marked_set(std::optional<int> degree_cap = std::nullopt) const;
  bool is_numeric() const;
  MarkedSet<Rational> rational_set(std::optional<int> degree_cap = std::nullopt) const;
};
MarkedFile parse_marked_file(std::string_view text, std::optional<int> nvars = std::nullopt);

}  // namespace markedres
