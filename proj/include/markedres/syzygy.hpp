#pragma once

#include "markedres/betti.hpp"
#include "markedres/marked.hpp"
#include "markedres/poly_matrix.hpp"

#include <algorithm>
#include <set>

namespace markedres {

// U' in R^p(-d'): component j is generated by the non-multiplicative variables
// of the j-th Pommaret term, d'_j its degree.
inline ModulePtr syzygy_module(const QuasiStableModule& U) {
  std::vector<int> shifts;
  std::vector<ModuleTerm> gens;
  for (std::size_t j = 0; j < U.size(); ++j) {
    int d = U.pommaret_basis()[j].degree();
    shifts.push_back(d);
    for (int v : U.nonmultiplicative(j)) gens.push_back(ModuleTerm{Term::var(v), static_cast<int>(j), d});
  }
  return QuasiStableModule::make(U.nvars(), shifts, gens);
}

inline ModuleTerm syzygy_head(const QuasiStableModule& U, std::size_t j, int v) {
  return ModuleTerm{Term::var(v), static_cast<int>(j), U.pommaret_basis()[j].degree()};
}

// Slots x^eta f_gamma allowed by the sliced-cone bound, plus the head slot.
inline std::vector<ModuleTerm> suppsyz_support(const QuasiStableModule& U, std::size_t j, int v) {
  std::vector<ModuleTerm> slots{syzygy_head(U, j, v)};
  int target = U.pommaret_basis()[j].degree() + 1;
  for (std::size_t g = 0; g < U.size(); ++g) {
    const ModuleTerm& gamma = U.pommaret_basis()[g];
    int deg = target - gamma.degree();
    if (deg < 0) continue;
    int bound = std::min(v - 1, multiplicative_bound(gamma.term, U.nvars()));
    if (bound < 0) {
      if (deg == 0) slots.push_back(ModuleTerm{Term{}, static_cast<int>(g), gamma.degree()});
      continue;
    }
    // display order of the whole ring, not of the sliced variables
    auto etas = terms_of_degree(bound + 1, deg);
    std::sort(etas.begin(), etas.end(),
              [&](const Term& a, const Term& b) { return display_before(a, b, U.nvars()); });
    for (const auto& eta : etas) slots.push_back(ModuleTerm{eta, static_cast<int>(g), gamma.degree()});
  }
  return slots;
}

// Slots that some marked set over U can actually reach while rewriting x_v f_j:
// closure of the terms x_v*head, x_v*tail under "replace a U-term by its cone
// quotient times a generic tail".
inline std::vector<ModuleTerm> predicted_support(const QuasiStableModule& U, std::size_t j, int v) {
  std::set<ModuleTerm> seen, slots;
  std::vector<ModuleTerm> queue;
  auto push = [&](const ModuleTerm& t) {
    if (U.contains(t) && seen.insert(t).second) queue.push_back(t);
  };
  const ModuleTerm& head = U.pommaret_basis()[j];
  Term xv = Term::var(v);
  push(xv * head);
  for (const auto& b : U.sous_escalier(head.degree())) push(xv * b);
  while (!queue.empty()) {
    ModuleTerm t = queue.back();
    queue.pop_back();
    auto hit = U.pommaret_divisor(t);
    const ModuleTerm& gamma = U.pommaret_basis()[hit->index];
    slots.insert(ModuleTerm{hit->multiplier, static_cast<int>(hit->index), gamma.degree()});
    for (const auto& b : U.sous_escalier(gamma.degree())) push(hit->multiplier * b);
  }
  std::vector<ModuleTerm> out{syzygy_head(U, j, v)};
  for (const auto& s : suppsyz_support(U, j, v))
    if (slots.count(s)) out.push_back(s);
  return out;
}

// x_v f_j - sum P_gamma f_gamma for every prolongation; needs only a marked set.
template <class S>
MarkedSet<S> presyzygy_set(const MarkedSet<S>& F, unsigned threads = 1) {
  const QuasiStableModule& U = *F.module;
  auto Up = syzygy_module(U);
  auto pairs = prolongation_pairs(U);
  auto tails = detail::parallel_map<ModuleElement<S>>(pairs.size(), threads, [&](std::size_t k) {
    auto [j, v] = pairs[k];
    auto w = reduce(F.poly(j).shifted(Term::var(v)), F);
    ModuleElement<S> tail;
    for (std::size_t g = 0; g < w.quotients.size(); ++g)
      tail -= embed(w.quotients[g], static_cast<int>(g), F.degree(g));
    return tail;
  });
  std::map<ModuleTerm, ModuleElement<S>> assign;
  for (std::size_t k = 0; k < pairs.size(); ++k)
    assign[syzygy_head(U, pairs[k].first, pairs[k].second)] = std::move(tails[k]);
  return make_marked_set<S>(Up, assign);
}

template <class S>
MarkedSet<S> fundamental_syzygies(const MarkedSet<S>& F, unsigned threads = 1) {
  auto check = is_marked_basis(F, threads);
  if (!check.is_basis) throw NotABasis("fundamental syzygies need a marked basis");
  return presyzygy_set(F, threads);
}

// columns = elements of F, rows = components of the ambient free module
template <class S>
PolyMatrix<S> to_matrix(const MarkedSet<S>& F) {
  const QuasiStableModule& U = *F.module;
  PolyMatrix<S> M(U.shifts(), F.degrees());
  for (std::size_t c = 0; c < F.size(); ++c) {
    for (const auto& [t, a] : F.poly(c)) M.at(static_cast<std::size_t>(t.component), c).add(ModuleTerm{t.term, 0, 0}, a);
    const auto& h = F.elements[c].head;
    M.set_head(c, HeadPosition{static_cast<std::size_t>(h.component), h.term});
  }
  return M;
}

template <class S>
struct Resolution {
  std::vector<PolyMatrix<S>> maps;   // maps[0] is the presentation, maps[t] the t-th syzygies
  std::vector<MarkedSet<S>> levels;  // marked sets behind each map; empty after minimize
  std::size_t length() const { return maps.empty() ? 0 : maps.size() - 1; }
};

template <class S>
Resolution<S> u_resolution(const MarkedSet<S>& F, unsigned threads = 1) {
  if (!is_marked_basis(F, threads).is_basis) throw NotABasis("U-resolution needs a marked basis");
  Resolution<S> res;
  res.levels.push_back(F);
  res.maps.push_back(to_matrix(F));
  while (!prolongation_pairs(*res.levels.back().module).empty()) {
    res.levels.push_back(presyzygy_set(res.levels.back(), threads));
    res.maps.push_back(to_matrix(res.levels.back()));
  }
  return res;
}

template <class S>
BettiTable betti_table(const Resolution<S>& res) {
  BettiTable b;
  for (std::size_t t = 0; t < res.maps.size(); ++t)
    for (int d : res.maps[t].col_shifts()) b.add(static_cast<int>(t), d, 1);
  return b;
}

template <class S>
bool is_complex(const Resolution<S>& res) {
  for (std::size_t t = 1; t < res.maps.size(); ++t)
    if (!matrix_multiply(res.maps[t - 1], res.maps[t]).is_zero()) return false;
  return true;
}

enum class Minimality { Minimal, NotMinimal, Undecided };

template <class S>
struct ConstantEntry {
  std::size_t level = 0, row = 0, col = 0;
  S value;
};

template <class S>
struct MinimalityReport {
  Minimality verdict = Minimality::Minimal;
  std::optional<ConstantEntry<S>> witness;  // first unit constant in (level, row, col) order
  std::vector<bool> constant_free;          // indexed by level; entry 0 unused
  bool non_unit_constants = false;          // parameter-valued constants seen
  bool shortcut_minimal = true;             // first syzygy matrix free of constants
  bool shortcut_agrees = true;
  bool propagation_holds = true;            // constant-free at t implies constant-free at t+1
};

template <class S>
MinimalityReport<S> is_minimal(const Resolution<S>& res) {
  MinimalityReport<S> rep;
  rep.constant_free.assign(res.maps.size(), true);
  for (std::size_t t = 1; t < res.maps.size(); ++t) {
    const auto& M = res.maps[t];
    for (std::size_t r = 0; r < M.rows(); ++r)
      for (std::size_t c = 0; c < M.cols(); ++c) {
        const auto& e = M(r, c);
        if (e.is_zero() || *e.degree() != 0) continue;
        S value = e.coefficient(ModuleTerm{});
        auto k = Coefficient<S>::constant(value);
        if (!k) {
          rep.non_unit_constants = true;
          continue;
        }
        rep.constant_free[t] = false;
        if (!rep.witness) rep.witness = ConstantEntry<S>{t, r, c, value};
      }
  }
  if (rep.witness)
    rep.verdict = Minimality::NotMinimal;
  else if (rep.non_unit_constants)
    rep.verdict = Minimality::Undecided;
  rep.shortcut_minimal = res.maps.size() < 2 || rep.constant_free[1];
  if (Coefficient<S>::is_field) rep.shortcut_agrees = rep.shortcut_minimal == (rep.verdict == Minimality::Minimal);
  for (std::size_t t = 1; t + 1 < res.maps.size(); ++t)
    if (rep.constant_free[t] && !rep.constant_free[t + 1]) rep.propagation_holds = false;
  return rep;
}

struct MinimizedResolution {
  Resolution<Rational> resolution;
  BettiTable betti;
};

// Cancels unit constants, smallest (level, row, col) first.
MinimizedResolution minimize(const Resolution<Rational>& res);

struct Certificate {
  bool certified = false;
  std::string reason;
};

Certificate componentwise_certificate(const MarkedSet<Rational>& F);
bool groebner_obstruction(const MarkedSet<Rational>& F);

}  // namespace markedres
