#include "random.hpp"

#include <set>

namespace markedres::testing {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Term random_term(Rng& rng, int nvars, int degree) {
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  for (int k = 0; k < degree; ++k) e[static_cast<std::size_t>(uniform(rng, 0, nvars - 1))]++;
  return Term(e);
}

std::vector<Term> close_up(std::vector<Term> seeds, int nvars) {
  std::set<Term, TermLess> seen(seeds.begin(), seeds.end());
  while (!seeds.empty()) {
    Term t = seeds.back();
    seeds.pop_back();
    for (int i = 0; i < nvars; ++i) {
      int a = t.exponent(i);
      if (a == 0) continue;
      for (int j = i + 1; j < nvars; ++j) {
        Term u = t.quotient(Term::var(i, a)).times_var(j, a);
        if (seen.insert(u).second) seeds.push_back(u);
      }
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

ModulePtr random_quasi_stable(Rng& rng, int nvars, int rank, int max_degree) {
  for (;;) {
    std::vector<int> shifts;
    std::vector<ModuleTerm> gens;
    for (int k = 0; k < rank; ++k) {
      int d = rank == 1 ? 0 : uniform(rng, 0, 1);
      shifts.push_back(d);
      std::vector<Term> seeds;
      int count = uniform(rng, 1, 3);
      for (int c = 0; c < count; ++c) seeds.push_back(random_term(rng, nvars, uniform(rng, 1, max_degree)));
      for (const auto& t : close_up(seeds, nvars)) gens.push_back(ModuleTerm{t, k, d});
    }
    auto U = QuasiStableModule::make(nvars, shifts, gens);
    // keep the resolutions small enough for a unit test
    if (U->size() <= 24 && U->regularity() <= max_degree + 4) return U;
  }
}

ModuleElement<Rational> CoordinateChange::apply(const ModuleTerm& t) const {
  auto out = ModuleElement<Rational>::monomial(ModuleTerm{Term{}, t.component, t.shift});
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Poly<Rational> lin;
    for (std::size_t j = 0; j <= i; ++j)
      if (sgn(rows[i][j]) != 0) lin.add(ModuleTerm{Term::var(static_cast<int>(j)), 0, 0}, rows[i][j]);
    for (int e = 0; e < t.term.exponent(static_cast<int>(i)); ++e) out = multiply(lin, out);
  }
  return out;
}

ModuleElement<Rational> CoordinateChange::apply(const ModuleElement<Rational>& e) const {
  ModuleElement<Rational> out;
  for (const auto& [t, c] : e) out += apply(t).scaled(c);
  return out;
}

CoordinateChange random_triangular(Rng& rng, int nvars) {
  static const int diag[] = {1, 1, -1, 2, 3};
  CoordinateChange g;
  g.rows.assign(static_cast<std::size_t>(nvars), std::vector<Rational>(static_cast<std::size_t>(nvars), 0));
  for (int i = 0; i < nvars; ++i) {
    g.rows[i][i] = diag[uniform(rng, 0, 4)];
    for (int j = 0; j < i; ++j) g.rows[i][j] = uniform(rng, -2, 2);
  }
  return g;
}

MarkedSet<Rational> transformed_basis(ModulePtr U, const CoordinateChange& g) {
  std::map<int, DegreewiseSpan> spans;
  for (const auto& h : U->pommaret_basis()) {
    int s = h.degree();
    if (spans.count(s)) continue;
    std::vector<ModuleElement<Rational>> images;
    for (const auto& t : U->terms_of_degree(s))
      if (U->contains(t)) images.push_back(g.apply(t));
    spans[s] = span_of(U->nvars(), U->shifts(), images, s);
  }
  return marked_basis_from_spans(U, spans);
}

MarkedSet<Rational> random_marked_basis(Rng& rng, ModulePtr U) {
  return transformed_basis(U, random_triangular(rng, U->nvars()));
}

MarkedSet<Rational> random_marked_set(Rng& rng, ModulePtr U, int density_percent) {
  std::map<ModuleTerm, ModuleElement<Rational>> tails;
  for (const auto& h : U->pommaret_basis()) {
    ModuleElement<Rational> tail;
    for (const auto& t : U->sous_escalier(h.degree()))
      if (uniform(rng, 1, 100) <= density_percent) {
        int c = uniform(rng, -3, 3);
        if (c) tail.add(t, c);
      }
    tails[h] = tail;
  }
  return make_marked_set<Rational>(U, tails);
}

ModuleElement<Rational> random_homogeneous(Rng& rng, int nvars, const std::vector<int>& shifts, int degree,
                                           int terms) {
  auto pool = free_terms(nvars, shifts, degree);
  ModuleElement<Rational> out;
  if (pool.empty()) return out;
  for (int k = 0; k < terms; ++k) {
    int c = uniform(rng, -4, 4);
    if (c) out.add(pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(pool.size()) - 1))], c);
  }
  return out;
}

}  // namespace markedres::testing
