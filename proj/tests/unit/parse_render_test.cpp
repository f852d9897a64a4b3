#include "corpus.hpp"
#include "markedres/parse.hpp"
#include "markedres/render.hpp"
#include "markedres/syzygy.hpp"
#include "random.hpp"

#include <gtest/gtest.h>

using namespace markedres;
using namespace markedres::testing;

namespace {

ParseError parse_error(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no parse error";
  return ParseError("none", 0, 0);
}

}  // namespace

TEST(ParseErrors, DoubleCaretPointsAtTheSecondCaret) {
  auto e = parse_error([] { parse_rational_element("x2^^2", 3); });
  EXPECT_EQ(e.line, 1);
  EXPECT_EQ(e.column, 4);
}

TEST(ParseErrors, UnknownVariable) {
  auto e = parse_error([] { parse_rational_element("x2 + x5", 3); });
  EXPECT_EQ(e.column, 6);
  parse_error([] { parse_rational_element("x2 + y", 3); });
}

TEST(ParseErrors, MarkedFileLineNumbers) {
  auto e = parse_error([] { parse_marked_file("ring 3\nx2^2 | x2*x1\nx1^2 | x2*(x1\n"); });
  EXPECT_EQ(e.line, 3);
}

TEST(ParseErrors, ModuleLiteral) {
  parse_error([] { parse_module_literal("ideal[x2^2, x1^2", 3); });
  parse_error([] { parse_module_literal("module(n=2, shifts=[0]) { e2: [x2] }", 3); });
}

TEST(Parse, ParametersAndRationals) {
  ParameterRing ring;
  auto e = parse_element("(a + 1/2)*x2*x0 - 3/4*x1^2", 3, ring);
  EXPECT_EQ(ring.size(), 1u);
  EXPECT_EQ(e.size(), 2u);
  EXPECT_EQ(to_string(e.coefficient(parse_module_term("x1^2", 3)), &ring), "-3/4");
}

TEST(Parse, ModuleLiteralShifts) {
  auto l = parse_module_literal("module(n=2, shifts=[0,1]) { e1: [x2^2, x1^2], e2: [x2] }", 3);
  EXPECT_EQ(l.shifts, (std::vector<int>{0, 1}));
  ASSERT_TRUE(l.monomial());
  auto ts = l.terms();
  ASSERT_EQ(ts.size(), 3u);
  EXPECT_EQ(ts[2].component, 1);
  EXPECT_EQ(ts[2].degree(), 2);
}

TEST(Render, ElementsUseDisplayOrder) {
  auto e = parse_rational_element("x0^2 - x1*x0 + x2*x1 + x2^2", 3);
  EXPECT_EQ(element_text(e, 3), "x2^2 + x2*x1 - x1*x0 + x0^2");
}

TEST(Render, MarkedFileRoundTrip) {
  for (const auto& [name, F] : paper_corpus()) {
    auto text = marked_file_text(F);
    auto G = parse_marked_file(text).rational_set();
    ASSERT_EQ(G.size(), F.size()) << name;
    for (std::size_t i = 0; i < F.size(); ++i) EXPECT_EQ(G.poly(i), F.poly(i)) << name;
  }
  Rng rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    auto F = random_marked_set(rng, random_quasi_stable(rng, 3 + trial % 2, 1 + trial % 2, 3), 60);
    auto G = parse_marked_file(marked_file_text(F)).rational_set();
    for (std::size_t i = 0; i < F.size(); ++i) EXPECT_EQ(G.poly(i), F.poly(i));
  }
}

TEST(Render, BettiTableLayout) {
  BettiTable b;
  b.set(0, 2, 2);
  b.set(0, 3, 1);
  b.set(1, 3, 1);
  b.set(1, 4, 1);
  EXPECT_EQ(b.render(), "   0 1\n2: 2 1\n3: 1 1\n");
  EXPECT_EQ(BettiTable{}.render(), "(empty)\n");
}

TEST(Render, ResolutionMarksHeads) {
  auto text = resolution_text(u_resolution(family_F(-1)), 3);
  EXPECT_NE(text.find("d_1:"), std::string::npos);
  EXPECT_NE(text.find("<x2>"), std::string::npos);
}

TEST(Json, ResolutionRoundTrip) {
  std::vector<MarkedSet<Rational>> sets{family_F(-1), rational_set(kSetG), rational_set(kSetM)};
  Rng rng(31);
  for (int k = 0; k < 5; ++k) sets.push_back(random_marked_basis(rng, random_quasi_stable(rng, 3, 1 + k % 2, 2)));
  for (const auto& F : sets) {
    auto res = u_resolution(F);
    auto j = to_json(res, F.module->nvars());
    int nvars = 0;
    auto back = resolution_from_json(Json::parse(j.dump()), &nvars);
    EXPECT_EQ(nvars, F.module->nvars());
    ASSERT_EQ(back.maps.size(), res.maps.size());
    for (std::size_t t = 0; t < res.maps.size(); ++t) EXPECT_EQ(back.maps[t], res.maps[t]);
    EXPECT_EQ(betti_table(back), betti_table(res));
  }
}

TEST(Json, BettiTable) {
  BettiTable b;
  b.set(0, 2, 2);
  b.set(1, 4, 1);
  auto j = to_json(b);
  EXPECT_FALSE(j.dump().empty());
  EXPECT_EQ(to_json(b), to_json(b));
}
