#include "markedres/parse.hpp"
#include "markedres/poly_matrix.hpp"
#include "random.hpp"

#include <gtest/gtest.h>

using namespace markedres;
using markedres::testing::Rng;

namespace {

Poly<Rational> P(const std::string& s, int nvars = 3) { return parse_rational_element(s, nvars); }

Term T(std::vector<int> e) { return Term(e); }

Poly<ParamPoly> random_param_poly(Rng& rng, std::size_t params) {
  std::uniform_int_distribution<int> coef(-3, 3), var(0, static_cast<int>(params) - 1), pick(0, 2);
  Poly<ParamPoly> p;
  auto terms = terms_of_degree(3, 2);
  for (int k = 0; k < 4; ++k) {
    ParamPoly c = coef(rng);
    if (pick(rng)) c += ParamPoly::var(static_cast<std::size_t>(var(rng))) * ParamPoly(coef(rng));
    p.add(ModuleTerm{terms[static_cast<std::size_t>(k * 2 % terms.size())], 0, 0}, c);
  }
  return p;
}

}  // namespace

TEST(Term, DegreeAndExtremeVariables) {
  Term t = T({1, 0, 2});
  EXPECT_EQ(t.degree(), 3);
  EXPECT_EQ(t.min_var(), 0);
  EXPECT_EQ(t.max_var(), 2);
  EXPECT_EQ(Term{}.min_var(), -1);
  EXPECT_TRUE(T({0, 1, 0}).divides(T({1, 1, 0})));
  EXPECT_EQ(T({1, 1, 0}).quotient(T({0, 1, 0})), T({1, 0, 0}));
}

TEST(Term, ModuleTermDegreeIncludesShift) {
  ModuleTerm m{T({0, 2, 1}), 1, 3};
  EXPECT_EQ(m.degree(), 6);
}

TEST(Term, DisplayOrderOfQuadricsInFourVariables) {
  // the order the generic matrices use: B x2^2 + B x2x1 + B x1^2 + B x2x0 + B x1x0 + B x0^2
  std::vector<std::string> seen;
  for (const auto& t : terms_of_degree(4, 2))
    if (t.exponent(3) == 0) seen.push_back(to_string(t));
  EXPECT_EQ(seen, (std::vector<std::string>{"x2^2", "x2*x1", "x1^2", "x2*x0", "x1*x0", "x0^2"}));
}

TEST(Canonicalize, DropsZeroCoefficients) {
  auto e = canonicalize<Rational>({{ModuleTerm{T({0, 2, 0})}, 1}, {ModuleTerm{T({2, 0, 0})}, 0}});
  EXPECT_EQ(e, P("x1^2"));
  EXPECT_EQ(e.size(), 1u);
}

TEST(Canonicalize, MergesDuplicates) {
  auto e = canonicalize<Rational>({{ModuleTerm{T({0, 1, 1})}, 1}, {ModuleTerm{T({0, 1, 1})}, 1}});
  EXPECT_EQ(e, P("2*x2*x1"));
  EXPECT_EQ(P("x2*x1 + x1*x2"), P("2*x2*x1"));
}

TEST(Canonicalize, ParameterCancellation) {
  ParameterRing ring;
  auto e = parse_element("(a + 1 - a - 1)*x0", 3, ring);
  EXPECT_TRUE(e.is_zero());
}

TEST(Canonicalize, Idempotent) {
  auto e = P("3*x2^2 - x1*x0 + 1/2*x0^2");
  EXPECT_EQ(canonicalize(canonicalize(e)), canonicalize(e));
}

TEST(XCoefficients, ParameterCoefficientsOfARemainder) {
  ParameterRing ring;
  auto p = parse_element("(a^2 + 4*a + 3)*x2*x1*x0 - (a + 1)*x1*x0^2", 3, ring);
  auto coeffs = x_coefficients(p);
  ASSERT_EQ(coeffs.size(), 2u);
  ParamPoly a = ParamPoly::var(*ring.find("a"));
  EXPECT_EQ(p.coefficient(ModuleTerm{T({1, 1, 1})}), a * a + a * ParamPoly(4) + ParamPoly(3));
  EXPECT_EQ(p.coefficient(ModuleTerm{T({2, 1, 0})}), -(a + ParamPoly(1)));
  Poly<ParamPoly> back;
  for (const auto& [t, c] : coeffs) back.add(t, c);
  EXPECT_EQ(back, p);
}

TEST(XCoefficients, ConstantFreeAndZero) {
  auto p = P("x2 - x0");
  for (const auto& [t, c] : x_coefficients(p)) EXPECT_GT(t.degree(), 0);
  EXPECT_TRUE(x_coefficients(Poly<Rational>{}).empty());
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("-3/4"), Rational(-3, 4));
  EXPECT_EQ(to_string(parse_rational("6/8")), "3/4");
  EXPECT_EQ(to_string(Rational(-2)), "-2");
  EXPECT_THROW(parse_rational("3/"), std::invalid_argument);
}

TEST(ParamPoly, RingAxiomsOnRandomElements) {
  Rng rng(11);
  std::uniform_int_distribution<int> coef(-5, 5), var(0, 3);
  auto rnd = [&] {
    ParamPoly p;
    for (int k = 0; k < 4; ++k) {
      ParamMonomial m = ParamMonomial::var(static_cast<std::size_t>(var(rng))) *
                        ParamMonomial::var(static_cast<std::size_t>(var(rng)), static_cast<unsigned>(k % 2));
      p.add_term(m, coef(rng));
    }
    return p;
  };
  for (int trial = 0; trial < 200; ++trial) {
    ParamPoly a = rnd(), b = rnd(), c = rnd();
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a + (-a)).is_zero());
    EXPECT_EQ(a * b, b * a);
  }
}

TEST(Poly, RingAxiomsAndDegreeAdditivity) {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    auto p = markedres::testing::random_homogeneous(rng, 3, {0}, 2, 4);
    auto q = markedres::testing::random_homogeneous(rng, 3, {0}, 1, 3);
    auto r = markedres::testing::random_homogeneous(rng, 3, {0}, 3, 3);
    EXPECT_EQ(multiply(multiply(p, q), r), multiply(p, multiply(q, r)));
    EXPECT_EQ(multiply(p, q + r), multiply(p, q) + multiply(p, r));
    EXPECT_TRUE((p - p).is_zero());
    auto pq = multiply(p, q);
    if (!pq.is_zero()) {
      EXPECT_EQ(*pq.degree(), *p.degree() + *q.degree());
      EXPECT_TRUE(pq.is_homogeneous());
    }
  }
}

TEST(Poly, ParameterCoefficientsFollowTheSameAxioms) {
  Rng rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    auto p = random_param_poly(rng, 3), q = random_param_poly(rng, 3), r = random_param_poly(rng, 3);
    EXPECT_EQ(multiply(multiply(p, q), r), multiply(p, multiply(q, r)));
    EXPECT_EQ(multiply(p, q - r), multiply(p, q) - multiply(p, r));
  }
}

TEST(PolyMatrix, IdentityTimesM) {
  PolyMatrix<Rational> M({0, 0}, {2, 3});
  M.at(0, 0) = P("x2^2");
  M.at(1, 1) = P("x2*x1^2 - x1*x0^2");
  auto I = PolyMatrix<Rational>::identity({0, 0});
  auto R = matrix_multiply(I, M);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) EXPECT_EQ(R(r, c), M(r, c));
}

TEST(PolyMatrix, OneByOne) {
  PolyMatrix<Rational> A({0}, {1}), B({1}, {3});
  A.at(0, 0) = P("x2");
  B.at(0, 0) = P("x1^2");
  EXPECT_EQ(matrix_multiply(A, B)(0, 0), P("x2*x1^2"));
  EXPECT_TRUE(matrix_multiply(A, B).is_homogeneous());
}

TEST(PolyMatrix, ShiftMismatchThrows) {
  PolyMatrix<Rational> A({0}, {1}), B({2}, {3});
  EXPECT_THROW(matrix_multiply(A, B), ShapeMismatch);
}

TEST(PolyMatrix, MultiplicationIsAssociative) {
  Rng rng(3);
  auto random_matrix = [&](std::vector<int> rows, std::vector<int> cols) {
    PolyMatrix<Rational> M(rows, cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < cols.size(); ++c)
        if (cols[c] >= rows[r]) M.at(r, c) = markedres::testing::random_homogeneous(rng, 3, {0}, cols[c] - rows[r], 2);
    return M;
  };
  for (int trial = 0; trial < 30; ++trial) {
    auto A = random_matrix({0, 1}, {2, 2, 3});
    auto B = random_matrix({2, 2, 3}, {3, 4});
    auto C = random_matrix({3, 4}, {5});
    auto L = matrix_multiply(matrix_multiply(A, B), C);
    auto R = matrix_multiply(A, matrix_multiply(B, C));
    for (std::size_t r = 0; r < L.rows(); ++r) EXPECT_EQ(L(r, 0), R(r, 0));
    EXPECT_TRUE(L.is_homogeneous());
  }
}
