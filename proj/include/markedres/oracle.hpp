#pragma once

#include "markedres/marked.hpp"

#include <Eigen/Core>
#include <gmpxx.h>

#include <map>
#include <vector>

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  enum { IsComplex = 0, IsInteger = 0, IsSigned = 1, RequireInitialization = 1, ReadCost = 6, AddCost = 20, MulCost = 40 };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpq_class;
  using Nested = mpz_class;
  enum { IsComplex = 0, IsInteger = 1, IsSigned = 1, RequireInitialization = 1, ReadCost = 6, AddCost = 10, MulCost = 30 };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace markedres {

using RatMatrix = Eigen::Matrix<mpq_class, Eigen::Dynamic, Eigen::Dynamic>;
using IntMatrix = Eigen::Matrix<mpz_class, Eigen::Dynamic, Eigen::Dynamic>;

struct Echelon {
  RatMatrix rref;                   // only the nonzero rows
  std::vector<Eigen::Index> pivots; // pivot column of each row
  Eigen::Index rank() const { return rref.rows(); }
};

// Fraction-free (Bareiss) forward elimination on integer rows, then exact back substitution.
Echelon reduced_echelon(const RatMatrix& A);

// basis of {v : A v = 0}, one vector per column
RatMatrix nullspace(const RatMatrix& A);

// Degree-s piece of a graded submodule of R^m(-d), rows in reduced echelon form
// over the column basis `columns`.
struct DegreewiseSpan {
  int degree = 0;
  std::vector<ModuleTerm> columns;
  Echelon echelon;
  std::size_t dim() const { return static_cast<std::size_t>(echelon.rank()); }
  std::vector<ModuleElement<Rational>> elements() const;
};

// terms of R^m(-d) of graded degree s, component ascending then display order
std::vector<ModuleTerm> free_terms(int nvars, const std::vector<int>& shifts, int s);

RatMatrix to_rows(const std::vector<ModuleElement<Rational>>& elems, const std::vector<ModuleTerm>& columns);

DegreewiseSpan span_of(int nvars, const std::vector<int>& shifts, const std::vector<ModuleElement<Rational>>& elems,
                       int s);
// all degree-s multiples of homogeneous generators
DegreewiseSpan component_basis(int nvars, const std::vector<int>& shifts,
                               const std::vector<ModuleElement<Rational>>& gens, int s);
bool span_contains(const DegreewiseSpan& span, const ModuleElement<Rational>& e);

// (F)_s and <N(U)_s> fill the degree-s piece without overlap
bool direct_sum_check(const MarkedSet<Rational>& F, int s);

// degree-s piece of the intersection of ideals (or submodules of one free module)
DegreewiseSpan intersect_by_degree(int nvars, const std::vector<int>& shifts,
                                   const std::vector<std::vector<ModuleElement<Rational>>>& modules, int s);

// Projects the spans along <N(U)>; spans must hold every degree of the Pommaret basis.
// Throws DirectSumFails when some degree is not complementary to N(U).
MarkedSet<Rational> marked_basis_from_spans(ModulePtr U, const std::map<int, DegreewiseSpan>& spans);

// HF(R^m(-d)/(gens), s) for s in [lo, hi]
std::vector<long> quotient_hilbert_function(int nvars, const std::vector<int>& shifts,
                                            const std::vector<ModuleElement<Rational>>& gens, int lo, int hi);

// dim of the degree-s piece of R^m(-d)
long free_dimension(int nvars, const std::vector<int>& shifts, int s);

}  // namespace markedres
