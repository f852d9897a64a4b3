#include "corpus.hpp"
#include "markedres/oracle.hpp"
#include "markedres/parse.hpp"
#include "markedres/syzygy.hpp"
#include "oracles.hpp"
#include "random.hpp"

#include <gtest/gtest.h>

using namespace markedres;
using namespace markedres::testing;

namespace {

ModuleElement<Rational> P(const std::string& s, int nvars = 3) { return parse_rational_element(s, nvars); }

std::vector<ModuleElement<Rational>> gens(std::initializer_list<const char*> ss, int nvars = 3) {
  std::vector<ModuleElement<Rational>> out;
  for (const char* s : ss) out.push_back(P(s, nvars));
  return out;
}

ModulePtr ideal(const std::string& lit, int nvars = 3) {
  auto l = parse_module_literal(lit, nvars);
  return QuasiStableModule::make(nvars, l.shifts, l.terms());
}

}  // namespace

TEST(LinearAlgebra, NullspaceOfASmallSystem) {
  RatMatrix A(2, 3);
  A << 1, 2, 3, 2, 4, 6;
  auto N = nullspace(A);
  EXPECT_EQ(N.cols(), 2);
  RatMatrix Z = A * N;
  for (Eigen::Index r = 0; r < Z.rows(); ++r)
    for (Eigen::Index c = 0; c < Z.cols(); ++c) EXPECT_EQ(Z(r, c), 0);
}

TEST(LinearAlgebra, EchelonRankOfRandomProducts) {
  Rng rng(4);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int trial = 0; trial < 30; ++trial) {
    RatMatrix A(5, 3), B(3, 6);
    for (Eigen::Index i = 0; i < A.size(); ++i) A.data()[i] = d(rng);
    for (Eigen::Index i = 0; i < B.size(); ++i) B.data()[i] = d(rng);
    RatMatrix C = A * B;
    auto e = reduced_echelon(C);
    EXPECT_LE(e.rank(), 3);
    EXPECT_EQ(e.rank() + nullspace(C).cols(), C.cols());
  }
}

TEST(Spans, FreeModuleDimensions) {
  EXPECT_EQ(free_dimension(3, {0}, 3), 10);
  EXPECT_EQ(free_dimension(4, {0}, 2), 10);
  EXPECT_EQ(free_dimension(3, {0, 1}, 2), 6 + 3);
  EXPECT_EQ(free_dimension(3, {2}, 1), 0);
  EXPECT_EQ(static_cast<long>(free_terms(3, {0, 0}, 2).size()), 12);
}

TEST(Spans, ComponentOfJInDegreeThree) {
  auto span = component_basis(3, {0}, gens({"x2^2", "x1^2"}), 3);
  EXPECT_EQ(span.dim(), 6u);
  EXPECT_TRUE(span_contains(span, P("x2*x1^2 - x0*x2^2")));
  EXPECT_FALSE(span_contains(span, P("x2*x1*x0")));
}

TEST(Spans, IdealI2InDegreeFour) {
  // (x2^2, x2x1, x1^3) is monomial, so the span is just its terms
  auto span = component_basis(3, {0}, gens({"x2^2", "x2*x1", "x1^3"}), 4);
  auto terms = module_terms(3, {0}, {parse_module_term("x2^2", 3), parse_module_term("x2*x1", 3),
                                     parse_module_term("x1^3", 3)}, 4);
  EXPECT_EQ(span.dim(), terms.size());
  EXPECT_EQ(free_dimension(3, {0}, 4) - static_cast<long>(span.dim()), 15 - 11);
}

TEST(Spans, IntersectionOfTwoLines) {
  // (x2, x1) meet (x2, x0) = (x2, x1x0): degree-2 piece has x2 * 3 variables + x1x0
  auto meet = intersect_by_degree(3, {0}, {gens({"x2", "x1"}), gens({"x2", "x0"})}, 2);
  EXPECT_EQ(meet.dim(), 4u);
  auto meet1 = intersect_by_degree(3, {0}, {gens({"x2", "x1"}), gens({"x2", "x0"})}, 1);
  EXPECT_EQ(meet1.dim(), 1u);
}

TEST(DirectSum, FamilyFOnlyAtMinusOne) {
  EXPECT_TRUE(direct_sum_check(family_F(-1), 3));
  EXPECT_TRUE(direct_sum_check(family_F(-1), 5));
  EXPECT_FALSE(direct_sum_check(family_F(0), 3));
}

TEST(DirectSum, AgreesWithTheCriterion) {
  Rng rng(17);
  int bases = 0, non_bases = 0;
  for (int trial = 0; trial < 40; ++trial) {
    auto U = random_quasi_stable(rng, 3, 1 + trial % 2, 2);
    auto F = trial % 3 ? random_marked_set(rng, U, 40) : random_marked_basis(rng, U);
    bool oracle = true;
    int top = U->regularity() + 2;
    for (int s = 0; s <= top; ++s) oracle = oracle && direct_sum_check(F, s);
    bool answer = is_marked_basis(F).is_basis;
    EXPECT_EQ(answer, oracle) << "trial " << trial;
    (answer ? bases : non_bases)++;
  }
  EXPECT_GT(bases, 0);
  EXPECT_GT(non_bases, 0);
}

TEST(DirectSum, SpanDimensionEqualsPommaretCount) {
  for (const auto& [name, F] : paper_bases())
    for (int s = 0; s <= F.module->regularity() + 2; ++s)
      EXPECT_EQ(span_dimension(F, s), F.module->count_in_degree(s)) << name << " degree " << s;
}

TEST(MarkedBasisFromSpans, RoundTrip) {
  for (const auto& [name, F] : paper_bases()) {
    const auto& U = *F.module;
    std::vector<ModuleElement<Rational>> polys(F.polys.begin(), F.polys.end());
    std::map<int, DegreewiseSpan> spans;
    for (const auto& h : U.pommaret_basis())
      spans[h.degree()] = component_basis(U.nvars(), U.shifts(), polys, h.degree());
    auto G = marked_basis_from_spans(F.module, spans);
    for (std::size_t i = 0; i < F.size(); ++i) EXPECT_EQ(G.poly(i), F.poly(i)) << name;
  }
}

TEST(MarkedBasisFromSpans, RejectsANonComplement) {
  auto J = ideal("ideal[x2^2, x1^2]");
  // x2*x0 is outside J, so the degree-2 span meets <N(J)_2>
  std::map<int, DegreewiseSpan> spans;
  spans[2] = span_of(3, {0}, gens({"x2^2", "x2*x0"}), 2);
  spans[3] = component_basis(3, {0}, gens({"x2^2", "x1^2"}), 3);
  EXPECT_THROW(marked_basis_from_spans(J, spans), DirectSumFails);
}

TEST(HilbertFunction, QuotientByJ) {
  auto hf = quotient_hilbert_function(3, {0}, gens({"x2^2", "x1^2"}), 0, 5);
  EXPECT_EQ(hf, (std::vector<long>{1, 3, 4, 4, 4, 4}));
}

TEST(LinearAlgebraSyzygy, MatchesTheFundamentalSyzygies) {
  for (const auto& [name, F] : paper_bases()) {
    auto syz = fundamental_syzygies(F);
    auto pairs = prolongation_pairs(*F.module);
    ASSERT_EQ(pairs.size(), syz.size()) << name;
    for (std::size_t k = 0; k < syz.size(); ++k) {
      auto [j, v] = prolongation_of(syz.elements[k].head);
      EXPECT_EQ(syz.poly(k), syzygy_by_linear_algebra(F, j, v)) << name << " #" << k;
    }
  }
}
