#include "markedres/oracle.hpp"

#include <numeric>

namespace markedres {

Echelon reduced_echelon(const RatMatrix& A) {
  const Eigen::Index rows = A.rows(), cols = A.cols();
  // clear denominators row by row
  IntMatrix M(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    mpz_class l = 1;
    for (Eigen::Index j = 0; j < cols; ++j)
      if (sgn(A(i, j)) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), A(i, j).get_den_mpz_t());
    for (Eigen::Index j = 0; j < cols; ++j) {
      mpq_class v = A(i, j) * l;
      M(i, j) = v.get_num();
    }
  }
  std::vector<Eigen::Index> pivots;
  mpz_class prev = 1;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && sgn(M(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (Eigen::Index j = 0; j < cols; ++j) std::swap(M(p, j), M(r, j));
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      for (Eigen::Index j = c + 1; j < cols; ++j) {
        mpz_class v = M(r, c) * M(i, j) - M(i, c) * M(r, j);
        mpz_divexact(M(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      M(i, c) = 0;
    }
    prev = M(r, c);
    pivots.push_back(c);
    ++r;
  }
  Echelon e;
  e.pivots = pivots;
  e.rref.resize(r, cols);
  for (Eigen::Index i = 0; i < r; ++i) {
    mpq_class inv = mpq_class(1) / mpq_class(M(i, pivots[static_cast<std::size_t>(i)]));
    for (Eigen::Index j = 0; j < cols; ++j) e.rref(i, j) = mpq_class(M(i, j)) * inv;
  }
  for (Eigen::Index i = r - 1; i >= 0; --i) {
    Eigen::Index pc = pivots[static_cast<std::size_t>(i)];
    for (Eigen::Index k = 0; k < i; ++k) {
      if (sgn(e.rref(k, pc)) == 0) continue;
      mpq_class f = e.rref(k, pc);
      for (Eigen::Index j = pc; j < cols; ++j) e.rref(k, j) -= f * e.rref(i, j);
    }
  }
  return e;
}

RatMatrix nullspace(const RatMatrix& A) {
  auto e = reduced_echelon(A);
  const Eigen::Index cols = A.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (auto p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Eigen::Index> free;
  for (Eigen::Index j = 0; j < cols; ++j)
    if (!is_pivot[static_cast<std::size_t>(j)]) free.push_back(j);
  RatMatrix N(cols, static_cast<Eigen::Index>(free.size()));
  for (std::size_t k = 0; k < free.size(); ++k) {
    Eigen::Index f = free[k], kk = static_cast<Eigen::Index>(k);
    N(f, kk) = 1;
    for (Eigen::Index i = 0; i < e.rank(); ++i) N(e.pivots[static_cast<std::size_t>(i)], kk) = -e.rref(i, f);
  }
  return N;
}

std::vector<ModuleTerm> free_terms(int nvars, const std::vector<int>& shifts, int s) {
  std::vector<ModuleTerm> out;
  for (std::size_t k = 0; k < shifts.size(); ++k) {
    if (s < shifts[k]) continue;
    for (const auto& t : terms_of_degree(nvars, s - shifts[k]))
      out.push_back(ModuleTerm{t, static_cast<int>(k), shifts[k]});
  }
  return out;
}

long free_dimension(int nvars, const std::vector<int>& shifts, int s) {
  long d = 0;
  for (int sh : shifts)
    if (s >= sh) d += binomial(s - sh + nvars - 1, nvars - 1);
  return d;
}

RatMatrix to_rows(const std::vector<ModuleElement<Rational>>& elems, const std::vector<ModuleTerm>& columns) {
  std::map<ModuleTerm, Eigen::Index> index;
  for (std::size_t j = 0; j < columns.size(); ++j) index[columns[j]] = static_cast<Eigen::Index>(j);
  RatMatrix A(static_cast<Eigen::Index>(elems.size()), static_cast<Eigen::Index>(columns.size()));
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& [t, c] : elems[i]) {
      auto it = index.find(t);
      if (it == index.end()) throw std::invalid_argument("element term outside the column basis");
      A(static_cast<Eigen::Index>(i), it->second) = c;
    }
  return A;
}

std::vector<ModuleElement<Rational>> DegreewiseSpan::elements() const {
  std::vector<ModuleElement<Rational>> out;
  for (Eigen::Index i = 0; i < echelon.rank(); ++i) {
    ModuleElement<Rational> e;
    for (std::size_t j = 0; j < columns.size(); ++j) e.add(columns[j], echelon.rref(i, static_cast<Eigen::Index>(j)));
    out.push_back(std::move(e));
  }
  return out;
}

DegreewiseSpan span_of(int nvars, const std::vector<int>& shifts, const std::vector<ModuleElement<Rational>>& elems,
                       int s) {
  DegreewiseSpan span;
  span.degree = s;
  span.columns = free_terms(nvars, shifts, s);
  span.echelon = reduced_echelon(to_rows(elems, span.columns));
  return span;
}

DegreewiseSpan component_basis(int nvars, const std::vector<int>& shifts,
                               const std::vector<ModuleElement<Rational>>& gens, int s) {
  std::vector<ModuleElement<Rational>> mult;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    int d = *g.degree();
    if (d > s) continue;
    for (const auto& m : terms_of_degree(nvars, s - d)) mult.push_back(g.shifted(m));
  }
  return span_of(nvars, shifts, mult, s);
}

bool span_contains(const DegreewiseSpan& span, const ModuleElement<Rational>& e) {
  auto elems = span.elements();
  elems.push_back(e);
  return static_cast<std::size_t>(reduced_echelon(to_rows(elems, span.columns)).rank()) == span.dim();
}

namespace {

std::vector<ModuleElement<Rational>> polys_of(const MarkedSet<Rational>& F) {
  return std::vector<ModuleElement<Rational>>(F.polys.begin(), F.polys.end());
}

}  // namespace

bool direct_sum_check(const MarkedSet<Rational>& F, int s) {
  const auto& U = *F.module;
  auto span = component_basis(U.nvars(), U.shifts(), polys_of(F), s);
  auto N = U.sous_escalier(s);
  long total = free_dimension(U.nvars(), U.shifts(), s);
  if (static_cast<long>(span.dim() + N.size()) != total) return false;
  auto rows = span.elements();
  for (const auto& t : N) rows.push_back(ModuleElement<Rational>::monomial(t));
  return reduced_echelon(to_rows(rows, span.columns)).rank() == total;
}

DegreewiseSpan intersect_by_degree(int nvars, const std::vector<int>& shifts,
                                   const std::vector<std::vector<ModuleElement<Rational>>>& modules, int s) {
  if (modules.empty()) {
    std::vector<ModuleElement<Rational>> all;
    for (const auto& t : free_terms(nvars, shifts, s)) all.push_back(ModuleElement<Rational>::monomial(t));
    return span_of(nvars, shifts, all, s);
  }
  DegreewiseSpan acc = component_basis(nvars, shifts, modules[0], s);
  for (std::size_t k = 1; k < modules.size(); ++k) {
    DegreewiseSpan other = component_basis(nvars, shifts, modules[k], s);
    const Eigen::Index a = acc.echelon.rank(), b = other.echelon.rank(), cols = acc.echelon.rref.cols();
    // lambda*A = mu*B  <=>  [A; -B]^T (lambda, mu) = 0
    RatMatrix stackT(cols, a + b);
    for (Eigen::Index i = 0; i < a; ++i)
      for (Eigen::Index j = 0; j < cols; ++j) stackT(j, i) = acc.echelon.rref(i, j);
    for (Eigen::Index i = 0; i < b; ++i)
      for (Eigen::Index j = 0; j < cols; ++j) stackT(j, a + i) = -other.echelon.rref(i, j);
    RatMatrix N = nullspace(stackT);
    std::vector<ModuleElement<Rational>> common;
    auto rowsA = acc.elements();
    for (Eigen::Index c = 0; c < N.cols(); ++c) {
      ModuleElement<Rational> v;
      for (Eigen::Index i = 0; i < a; ++i)
        if (sgn(N(i, c)) != 0) v += rowsA[static_cast<std::size_t>(i)].scaled(N(i, c));
      common.push_back(std::move(v));
    }
    acc = span_of(nvars, shifts, common, s);
  }
  return acc;
}

MarkedSet<Rational> marked_basis_from_spans(ModulePtr U, const std::map<int, DegreewiseSpan>& spans) {
  std::map<ModuleTerm, ModuleElement<Rational>> tails;
  std::map<int, std::vector<ModuleTerm>> heads_by_degree;
  for (const auto& h : U->pommaret_basis()) heads_by_degree[h.degree()].push_back(h);
  for (const auto& [s, heads] : heads_by_degree) {
    auto it = spans.find(s);
    if (it == spans.end()) throw std::invalid_argument("no span in degree " + std::to_string(s));
    const DegreewiseSpan& span = it->second;
    // U-terms first, so pivots land on them whenever the direct sum holds
    std::vector<ModuleTerm> cols, inU, outU;
    for (const auto& t : span.columns) (U->contains(t) ? inU : outU).push_back(t);
    cols = inU;
    cols.insert(cols.end(), outU.begin(), outU.end());
    auto e = reduced_echelon(to_rows(span.elements(), cols));
    if (static_cast<std::size_t>(e.rank()) != inU.size())
      throw DirectSumFails("degree " + std::to_string(s) + ": span has dimension " + std::to_string(e.rank()) +
                           ", U has " + std::to_string(inU.size()) + " terms");
    for (std::size_t i = 0; i < inU.size(); ++i)
      if (e.pivots[i] != static_cast<Eigen::Index>(i))
        throw DirectSumFails("degree " + std::to_string(s) + ": span meets <N(U)>");
    for (const auto& h : heads) {
      auto pos = static_cast<Eigen::Index>(std::find(inU.begin(), inU.end(), h) - inU.begin());
      ModuleElement<Rational> tail;
      for (std::size_t j = inU.size(); j < cols.size(); ++j) tail.add(cols[j], e.rref(pos, static_cast<Eigen::Index>(j)));
      tails[h] = std::move(tail);
    }
  }
  return make_marked_set<Rational>(U, tails);
}

std::vector<long> quotient_hilbert_function(int nvars, const std::vector<int>& shifts,
                                            const std::vector<ModuleElement<Rational>>& gens, int lo, int hi) {
  std::vector<long> hf;
  for (int s = lo; s <= hi; ++s)
    hf.push_back(free_dimension(nvars, shifts, s) -
                 static_cast<long>(component_basis(nvars, shifts, gens, s).dim()));
  return hf;
}

}  // namespace markedres
