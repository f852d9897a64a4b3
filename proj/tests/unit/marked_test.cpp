#include "corpus.hpp"
#include "oracles.hpp"
#include "random.hpp"

#include <gtest/gtest.h>

using namespace markedres;
using namespace markedres::testing;

namespace {

ModuleTerm M(const std::string& s, int nvars = 3) { return parse_module_term(s, nvars); }
Poly<Rational> P(const std::string& s, int nvars = 3) { return parse_rational_element(s, nvars); }

std::size_t index_of(const MarkedSet<Rational>& F, const std::string& head) {
  return *F.module->pommaret_index(M(head, F.module->nvars()));
}

bool in_sliced_cone(const ModuleTerm& gen, const Term& m, int slice) {
  if (m.is_one()) return true;
  return m.max_var() < slice && (gen.term.is_one() || m.max_var() <= gen.term.min_var());
}

// f == sum q_g f_g + r
template <class S>
bool reconstructs(const ModuleElement<S>& f, const MarkedSet<S>& F, const UniqueWriting<S>& w) {
  ModuleElement<S> sum = w.remainder;
  for (std::size_t g = 0; g < F.size(); ++g) sum += multiply(w.quotients[g], F.poly(g));
  return sum == f;
}

}  // namespace

TEST(MarkedSet, SymbolicFamilyIsValid) {
  auto file = parse_marked_file(kFamilyF);
  auto F = file.marked_set();
  EXPECT_EQ(F.size(), 3u);
  EXPECT_EQ(file.ring.size(), 1u);
}

TEST(MarkedSet, ZeroTailsAreValid) {
  auto F = zero_tails("ideal[x2^2, x1^2]", 3);
  for (const auto& e : F.elements) EXPECT_TRUE(e.tail.is_zero());
  EXPECT_TRUE(is_marked_basis(F).is_basis);
}

TEST(MarkedSet, RejectsTailTermInU) {
  auto U = QuasiStableModule::ideal(3, {Term({0, 0, 2}), Term({0, 2, 0})});
  std::map<ModuleTerm, ModuleElement<Rational>> tails{
      {M("x2^2"), P("x2*x1")}, {M("x1^2"), P("x2*x1")}, {M("x2*x1^2"), {}}};
  EXPECT_NO_THROW(make_marked_set<Rational>(U, tails));
  tails[M("x2*x1^2")] = P("x2^2*x1");
  EXPECT_THROW(make_marked_set<Rational>(U, tails), TailTermInU);
}

TEST(MarkedSet, OtherValidationErrors) {
  auto U = QuasiStableModule::ideal(3, {Term({0, 0, 2}), Term({0, 2, 0})});
  std::map<ModuleTerm, ModuleElement<Rational>> tails{{M("x2^2"), {}}, {M("x1^2"), {}}};
  EXPECT_THROW(make_marked_set<Rational>(U, tails), MissingHead);
  tails[M("x2*x1^2")] = {};
  tails[M("x2*x1")] = {};
  EXPECT_THROW(make_marked_set<Rational>(U, tails), HeadNotInPommaretBasis);
  tails.erase(M("x2*x1"));
  tails[M("x1^2")] = P("x0^3");
  EXPECT_THROW(make_marked_set<Rational>(U, tails), DegreeMismatch);
}

TEST(Reduce, SymbolicProlongationOfSecondElement) {
  auto file = parse_marked_file(kFamilyF);
  auto F = file.marked_set();
  ParameterRing ring = file.ring;
  ParamPoly a = ParamPoly::var(*ring.find("a"));
  auto f = F.poly(1).shifted(Term::var(2));
  auto w = reduce(f, F);

  EXPECT_EQ(w.quotients[0], parse_element("a*x1", 3, ring));
  EXPECT_EQ(w.quotients[1], parse_element("-a*x0", 3, ring));
  EXPECT_EQ(w.quotients[2], parse_element("a + 1", 3, ring));
  // worked out by hand from the three quotients above
  EXPECT_EQ(w.remainder, parse_element("(a^2 + 3*a + 2)*x2*x1*x0 - (2*a + 2)*x1*x0^2", 3, ring));
  EXPECT_TRUE(reconstructs(f, F, w));

  // (a^2+4a+3) x2x1x0 - (a+1) x1x0^2 does not close the identity with the same quotients
  UniqueWriting<ParamPoly> other = w;
  other.remainder = parse_element("(a^2 + 4*a + 3)*x2*x1*x0 - (a + 1)*x1*x0^2", 3, ring);
  EXPECT_FALSE(reconstructs(f, F, other));
}

TEST(Reduce, SousEscalierInputIsItsOwnRemainder) {
  auto F = family_F(-1);
  auto f = P("x2*x1*x0 - 3*x0^3");
  auto w = reduce(f, F);
  for (const auto& q : w.quotients) EXPECT_TRUE(q.is_zero());
  EXPECT_EQ(w.remainder, f);
}

TEST(Reduce, ElementReducesToItself) {
  auto F = family_F(2);
  for (std::size_t j = 0; j < F.size(); ++j) {
    auto w = reduce(F.poly(j), F);
    EXPECT_TRUE(w.remainder.is_zero());
    for (std::size_t g = 0; g < F.size(); ++g)
      EXPECT_EQ(w.quotients[g], g == j ? Poly<Rational>::constant(1) : Poly<Rational>{});
  }
}

TEST(Reduce, InhomogeneousInputSplitsByDegree) {
  auto F = family_F(-1);
  auto f = P("x2^2 + x2*x1^2*x0 + x1");
  auto w = reduce(f, F);
  EXPECT_TRUE(reconstructs(f, F, w));
  for (const auto& [t, c] : w.remainder) EXPECT_FALSE(F.module->contains(t));
}

TEST(MarkedBasis, FamilyIsABasisOnlyAtMinusOne) {
  EXPECT_TRUE(is_marked_basis(family_F(-1)).is_basis);
  for (int a : {0, 1, -2, 3}) EXPECT_FALSE(is_marked_basis(family_F(a)).is_basis) << "a = " << a;
}

TEST(MarkedBasis, WitnessAtZero) {
  auto F = family_F(0);
  auto check = is_marked_basis(F);
  ASSERT_FALSE(check.is_basis);
  ASSERT_TRUE(check.witness);
  EXPECT_EQ(check.witness->element, index_of(F, "x1^2"));
  EXPECT_EQ(check.witness->variable, 2);
  EXPECT_EQ(check.witness->remainder, P("2*x2*x1*x0 - 2*x1*x0^2"));
}

TEST(MarkedBasis, SymbolicConditions) {
  auto F = parse_marked_file(kFamilyF).marked_set();
  auto check = is_marked_basis(F);
  EXPECT_FALSE(check.is_basis);
}

TEST(MarkedBasis, OtherWorkedExamples) {
  EXPECT_TRUE(is_marked_basis(rational_set(kSetG)).is_basis);
  EXPECT_TRUE(is_marked_basis(rational_set(kSetFp)).is_basis);
  EXPECT_TRUE(is_marked_basis(rational_set(kSetGp)).is_basis);
  EXPECT_TRUE(is_marked_basis(rational_set(kSetM)).is_basis);
  EXPECT_TRUE(is_marked_basis(rational_set(kSetN)).is_basis);
  EXPECT_TRUE(is_marked_basis(rational_set(kSetFI)).is_basis);
  EXPECT_TRUE(is_marked_basis(rational_set(kSetFK)).is_basis);
}

TEST(MarkedBasis, ParallelCheckAgrees) {
  Rng rng(19);
  for (int trial = 0; trial < 10; ++trial) {
    auto U = random_quasi_stable(rng, 3, 1, 3);
    auto F = trial % 2 ? random_marked_basis(rng, U) : random_marked_set(rng, U);
    auto a = is_marked_basis(F, 1), b = is_marked_basis(F, 3);
    EXPECT_EQ(a.is_basis, b.is_basis);
    if (a.witness) EXPECT_EQ(a.witness->element, b.witness->element);
  }
}

TEST(Truncate, BelowTheMinimalDegreeIsIdentity) {
  auto F = family_F(-1);
  auto T = truncate(F, 2);
  ASSERT_EQ(T.size(), F.size());
  for (std::size_t i = 0; i < F.size(); ++i) EXPECT_EQ(T.poly(i), F.poly(i));
}

TEST(Truncate, HeadsOfJAtDegreeThree) {
  auto T = truncate(zero_tails("ideal[x2^2, x1^2]", 3), 3);
  std::set<std::string> heads;
  for (const auto& e : T.elements) heads.insert(to_string(e.head, false));
  EXPECT_EQ(heads, (std::set<std::string>{"x2^3", "x2^2*x1", "x2^2*x0", "x1^3", "x1^2*x0", "x2*x1^2"}));
}

TEST(Truncate, ResultIsABasisOfTheTruncation) {
  for (const char* text : {kSetG, kSetFp}) {
    auto F = rational_set(text);
    for (int s : {3, 4}) {
      auto T = truncate(F, s);
      EXPECT_TRUE(is_marked_basis(T).is_basis);
      auto span = component_basis(3, {0}, std::vector<ModuleElement<Rational>>(F.polys.begin(), F.polys.end()), s);
      for (std::size_t i = 0; i < T.size(); ++i) {
        if (T.degree(i) == s) EXPECT_TRUE(span_contains(span, T.poly(i)));
        for (const auto& h : T.module->pommaret_basis()) EXPECT_GE(h.degree(), s);
      }
    }
  }
}

TEST(Truncate, RejectsNonBasis) { EXPECT_THROW(truncate(family_F(0), 3), NotABasis); }

TEST(ReductionProperties, ConfluenceUnderRandomStrategies) {
  Rng rng(4242);
  for (int trial = 0; trial < 30; ++trial) {
    auto U = random_quasi_stable(rng, 3 + trial % 2, 1 + trial % 2, 3);
    auto F = trial % 3 ? random_marked_basis(rng, U) : random_marked_set(rng, U);
    for (int k = 0; k < 4; ++k) {
      int s = U->regularity() + k % 2;
      auto f = random_homogeneous(rng, U->nvars(), U->shifts(), s, 6);
      auto w = reduce(f, F);
      EXPECT_TRUE(reconstructs(f, F, w));
      for (const auto& [t, c] : w.remainder) EXPECT_FALSE(U->contains(t));
      for (std::size_t g = 0; g < F.size(); ++g)
        for (const auto& [m, c] : w.quotients[g]) EXPECT_TRUE(cone_member(U->pommaret_basis()[g], m.term * U->pommaret_basis()[g]));
      for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        auto v = reduce(f, F, ReductionStrategy::random(seed + 10 * trial));
        EXPECT_EQ(v.remainder, w.remainder);
        EXPECT_TRUE(reconstructs(f, F, v));
      }
    }
  }
}

TEST(ReductionProperties, NormalFormDifferenceLiesInTheModule) {
  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    auto U = random_quasi_stable(rng, 3, 1 + trial % 2, 3);
    auto F = random_marked_basis(rng, U);
    int s = U->regularity() + 1;
    auto f = random_homogeneous(rng, U->nvars(), U->shifts(), s, 5);
    auto w = reduce(f, F);
    std::vector<ModuleElement<Rational>> polys(F.polys.begin(), F.polys.end());
    EXPECT_TRUE(span_contains(component_basis(U->nvars(), U->shifts(), polys, s), f - w.remainder));
  }
}

TEST(ReductionProperties, ProlongationQuotientsStayInSlicedCones) {
  Rng rng(57);
  std::vector<MarkedSet<Rational>> sets;
  for (const auto& e : paper_bases()) sets.push_back(e.set);
  for (int trial = 0; trial < 20; ++trial) sets.push_back(random_marked_basis(rng, random_quasi_stable(rng, 3 + trial % 2, 1, 3)));
  for (const auto& F : sets) {
    const auto& U = *F.module;
    for (auto [j, v] : prolongation_pairs(U)) {
      auto w = reduce(F.poly(j).shifted(Term::var(v)), F);
      EXPECT_TRUE(w.remainder.is_zero());
      for (std::size_t g = 0; g < F.size(); ++g)
        for (const auto& [m, c] : w.quotients[g])
          EXPECT_TRUE(in_sliced_cone(U.pommaret_basis()[g], m.term, v))
              << to_string(m.term) << " on " << to_string(U.pommaret_basis()[g], true) << " for x" << v;
    }
  }
}

TEST(ReductionProperties, WorksOverParameterRings) {
  auto F = parse_marked_file(kFamilyF).marked_set();
  for (auto [j, v] : prolongation_pairs(*F.module)) {
    auto f = F.poly(j).shifted(Term::var(v));
    auto w = reduce(f, F);
    EXPECT_TRUE(reconstructs(f, F, w));
    for (std::uint64_t seed = 1; seed <= 3; ++seed) EXPECT_EQ(reduce(f, F, ReductionStrategy::random(seed)).remainder, w.remainder);
  }
}
