#include "corpus.hpp"

namespace markedres::testing {

const char* const kFamilyF =
    "ring 3\n"
    "params a\n"
    "x2^2    | -x2*x1 - x2*x0 + x1*x0\n"
    "x1^2    | a*x2*x1\n"
    "x2*x1^2 | -2*x2*x1*x0 + 2*x1*x0^2\n";

const char* const kSetG =
    "ring 3\n"
    "x2^2    | -1/2*x2*x1 - x2*x0\n"
    "x1^2    | -1/2*x2*x1 - x1*x0\n"
    "x2*x1^2 | -2*x2*x1*x0\n";

const char* const kSetFp =
    "ring 3\n"
    "x2^2 | -x1^2 - x2*x0 + x1*x0\n"
    "x2*x1 | -x1^2\n"
    "x1^3 | -2*x1^2*x0 + 2*x1*x0^2\n";

const char* const kSetGp =
    "ring 3\n"
    "x2^2 | -x1^2 - x2*x0 + x1*x0\n"
    "x2*x1 | -2*x1^2 + 2*x1*x0\n"
    "x1^3 | -3*x1^2*x0 + 2*x1*x0^2\n";

const char* const kSetM =
    "ring 3\n"
    "shifts 0 0\n"
    "x2^2*e1    | (-x2*x1 - x2*x0 + x1*x0)*e1\n"
    "x1^2*e1    | -x2*x1*e1\n"
    "x2*x1^2*e1 | (-2*x2*x1*x0 + 2*x1*x0^2)*e1\n"
    "x2^2*e2    | (-x1^2 - x2*x0 + x1*x0)*e2\n"
    "x2*x1*e2   | -x1^2*e2\n"
    "x1^3*e2    | (-2*x1^2*x0 + 2*x1*x0^2)*e2\n";

const char* const kSetN =
    "ring 3\n"
    "shifts 0 0\n"
    "x2^2*e1    | (-1/2*x2*x1 - x2*x0)*e1\n"
    "x1^2*e1    | (-1/2*x2*x1 - x1*x0)*e1\n"
    "x2*x1^2*e1 | -2*x2*x1*x0*e1\n"
    "x2^2*e2    | (-x1^2 - x2*x0 + x1*x0)*e2\n"
    "x2*x1*e2   | (-2*x1^2 + 2*x1*x0)*e2\n"
    "x1^3*e2    | (-3*x1^2*x0 + 2*x1*x0^2)*e2\n";

const char* const kSetFI =
    "ring 3\n"
    "x2^4      |\n"
    "x2^2*x1^2 |\n"
    "x2*x1^3   | x1^4\n"
    "x2^3*x1^2 |\n"
    "x1^5      |\n";

const char* const kSetFK =
    "ring 3\n"
    "x2^4      | -x1^4\n"
    "x2^2*x1^2 | x1^4\n"
    "x2*x1^3   | x2^3*x1\n"
    "x2^3*x1^2 |\n"
    "x1^5      |\n";

MarkedSet<Rational> rational_set(const char* text) { return parse_marked_file(text).rational_set(); }

MarkedSet<Rational> specialize_file(const char* text, const std::map<std::string, Rational>& values) {
  auto file = parse_marked_file(text);
  std::vector<std::optional<Rational>> point(file.ring.size());
  for (const auto& [name, v] : values) point.at(*file.ring.find(name)) = v;
  auto generic = file.marked_set();
  std::map<ModuleTerm, ModuleElement<Rational>> tails;
  for (const auto& e : generic.elements)
    tails[e.head] = map_coefficients<Rational>(e.tail, [&](const ParamPoly& c) { return evaluate(c, point); });
  return make_marked_set<Rational>(generic.module, tails);
}

MarkedSet<Rational> family_F(const Rational& a) { return specialize_file(kFamilyF, {{"a", a}}); }

MarkedSet<Rational> zero_tails(const std::string& literal, int nvars) {
  auto lit = parse_module_literal(literal, nvars);
  return zero_tail_set<Rational>(QuasiStableModule::make(nvars, lit.shifts, lit.terms()));
}

std::vector<CorpusEntry> paper_corpus() {
  std::vector<CorpusEntry> c;
  for (int a : {-1, 0, 1, 2, -2}) c.push_back({"F(a=" + std::to_string(a) + ")", family_F(a)});
  c.push_back({"F(a=-1/2)", family_F(Rational(-1, 2))});
  c.push_back({"J", zero_tails("ideal[x2^2, x1^2]", 3)});
  c.push_back({"G", rational_set(kSetG)});
  c.push_back({"J'", zero_tails("ideal[x2^2, x2*x1, x1^3]", 3)});
  c.push_back({"F'", rational_set(kSetFp)});
  c.push_back({"G'", rational_set(kSetGp)});
  c.push_back({"Je1+J'e2", zero_tails("module(n=2, shifts=[0,0]) { e1: [x2^2, x1^2], e2: [x2^2, x2*x1, x1^3] }", 3)});
  c.push_back({"M", rational_set(kSetM)});
  c.push_back({"N", rational_set(kSetN)});
  c.push_back({"x2^2J+x1^2J'", zero_tails("ideal[x2^4, x2^2*x1^2, x2*x1^3, x1^5]", 3)});
  c.push_back({"F_I", rational_set(kSetFI)});
  c.push_back({"F_K", rational_set(kSetFK)});
  c.push_back({"(x2,x1^2)", zero_tails("ideal[x2, x1^2]", 3)});
  c.push_back({"(x3,x2^2,x2x1)", zero_tails("ideal[x3, x2^2, x2*x1]", 4)});
  c.push_back({"(x3^2,x3x2)", zero_tails("ideal[x3^2, x3*x2]", 4)});
  return c;
}

std::vector<CorpusEntry> paper_bases() {
  std::vector<CorpusEntry> out;
  for (auto& e : paper_corpus())
    if (is_marked_basis(e.set).is_basis) out.push_back(std::move(e));
  return out;
}

}  // namespace markedres::testing
