#include "markedres/quasistable.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace markedres {

long binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

int multiplicative_bound(const Term& t, int nvars) {
  int m = t.min_var();
  return m < 0 ? nvars - 1 : m;
}

bool cone_contains(const ModuleTerm& gen, const ModuleTerm& t, std::optional<int> slice, int nvars) {
  if (gen.component != t.component) return false;
  if (!gen.term.divides(t.term)) return false;
  Term delta = t.term.quotient(gen.term);
  if (delta.is_one()) return true;
  int bound = multiplicative_bound(gen.term, nvars);
  if (slice) bound = std::min(bound, *slice - 1);
  return delta.max_var() <= bound;
}

namespace {

bool divisible_by_any(const std::vector<Term>& gens, const Term& t) {
  for (const auto& g : gens)
    if (g.divides(t)) return true;
  return false;
}

std::vector<Term> minimalize(std::vector<Term> gens, int nvars) {
  std::sort(gens.begin(), gens.end(), [nvars](const Term& a, const Term& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return display_before(a, b, nvars);
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Term> out;
  for (const auto& g : gens)
    if (!divisible_by_any(out, g)) out.push_back(g);
  return out;
}

std::optional<QuasiStabilityWitness> obstruction_in(const std::vector<Term>& gens, int component, int nvars) {
  int maxdeg = 0;
  for (const auto& g : gens) maxdeg = std::max(maxdeg, g.degree());
  for (const auto& g : gens) {
    for (int i = 0; i < nvars; ++i) {
      int ai = g.exponent(i);
      if (!ai) continue;
      Term base = g;
      for (int k = 0; k < ai; ++k) base = base.div_var(i);
      for (int j = i + 1; j < nvars; ++j) {
        bool ok = false;
        Term cand = base;
        for (int s = 0; s <= maxdeg && !ok; ++s) {
          if (divisible_by_any(gens, cand)) ok = true;
          cand = cand.times_var(j);
        }
        if (!ok) return QuasiStabilityWitness{ModuleTerm{g, component, 0}, i, j};
      }
    }
  }
  return std::nullopt;
}

// Completion of one component ideal, degree by degree; returns the Pommaret basis.
std::vector<Term> complete(const std::vector<Term>& gens, int nvars, int cap) {
  std::vector<Term> S;
  if (gens.empty()) return S;
  int maxgen = 0, mingen = gens.front().degree();
  for (const auto& g : gens) {
    maxgen = std::max(maxgen, g.degree());
    mingen = std::min(mingen, g.degree());
  }
  auto covered = [&](const Term& t) {
    for (const auto& s : S)
      if (cone_contains(ModuleTerm{s, 0, 0}, ModuleTerm{t, 0, 0}, std::nullopt, nvars)) return true;
    return false;
  };
  std::vector<Term> last;  // elements of S of the previous degree
  for (int d = mingen;; ++d) {
    if (d > cap) throw NotQuasiStable("Pommaret completion exceeded degree cap " + std::to_string(cap));
    std::vector<Term> cand;
    for (const auto& g : gens)
      if (g.degree() == d) cand.push_back(g);
    for (const auto& t : last) {
      for (int i = multiplicative_bound(t, nvars) + 1; i < nvars; ++i) cand.push_back(t.times_var(i));
    }
    std::sort(cand.begin(), cand.end(), TermLess{});
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    std::vector<Term> added;
    for (const auto& c : cand) {
      if (!covered(c)) {
        S.push_back(c);
        added.push_back(c);
      }
    }
    last = added;
    if (last.empty() && d >= maxgen) break;
  }
  // keep t with t/min(t) outside the ideal; those are exactly the Pommaret elements
  std::vector<Term> P;
  for (const auto& t : S) {
    if (t.is_one() || !divisible_by_any(gens, t.div_var(t.min_var()))) P.push_back(t);
  }
  return P;
}

}  // namespace

std::optional<QuasiStabilityWitness> quasi_stability_obstruction(int nvars, const std::vector<ModuleTerm>& gens) {
  int m = 0;
  for (const auto& g : gens) m = std::max(m, g.component + 1);
  for (int k = 0; k < m; ++k) {
    std::vector<Term> comp;
    for (const auto& g : gens)
      if (g.component == k) comp.push_back(g.term);
    auto w = obstruction_in(minimalize(comp, nvars), k, nvars);
    if (w) return w;
  }
  return std::nullopt;
}

bool is_quasi_stable(int nvars, const std::vector<ModuleTerm>& gens) {
  return !quasi_stability_obstruction(nvars, gens).has_value();
}

QuasiStableModule::QuasiStableModule(int nvars, std::vector<int> shifts, const std::vector<ModuleTerm>& generators,
                                     std::optional<int> degree_cap)
    : nvars_(nvars), shifts_(std::move(shifts)) {
  if (nvars_ < 1 || nvars_ > kMaxVars) throw std::invalid_argument("number of variables out of range");
  const int m = static_cast<int>(shifts_.size());
  std::vector<std::vector<Term>> comps(static_cast<std::size_t>(m));
  for (const auto& g : generators) {
    if (g.component < 0 || g.component >= m) throw std::invalid_argument("generator component out of range");
    if (g.term.max_var() >= nvars_) throw std::invalid_argument("generator uses a variable outside the ring");
    comps[static_cast<std::size_t>(g.component)].push_back(g.term);
  }
  int maxdeg = 0;
  for (int k = 0; k < m; ++k) {
    minimal_.push_back(minimalize(comps[static_cast<std::size_t>(k)], nvars_));
    for (const auto& t : minimal_.back()) maxdeg = std::max(maxdeg, t.degree());
  }
  for (int k = 0; k < m; ++k) {
    auto w = obstruction_in(minimal_[static_cast<std::size_t>(k)], k, nvars_);
    if (w) {
      std::ostringstream os;
      os << "not quasi-stable: generator " << to_string(w->generator.term) << " in component " << (k + 1)
         << ", x" << w->j << " cannot replace x" << w->i;
      throw NotQuasiStable(os.str());
    }
  }
  // Taylor's bound nvars*maxdeg dominates the Pommaret degrees; the 2*maxdeg+n term keeps small cases roomy
  int cap = degree_cap.value_or(std::max(2 * maxdeg + nvars_ - 1, nvars_ * maxdeg));
  for (int k = 0; k < m; ++k) {
    for (const auto& t : complete(minimal_[static_cast<std::size_t>(k)], nvars_, cap))
      pommaret_.push_back(ModuleTerm{t, k, shifts_[static_cast<std::size_t>(k)]});
  }
  std::sort(pommaret_.begin(), pommaret_.end(),
            [this](const ModuleTerm& a, const ModuleTerm& b) { return basis_before(a, b, nvars_); });
  for (std::size_t i = 0; i < pommaret_.size(); ++i) index_.emplace(pommaret_[i], i);
  std::size_t nmin = 0;
  for (const auto& c : minimal_) nmin += c.size();
  stable_ = nmin == pommaret_.size();
  D_ = n();
  reg_ = 0;
  for (const auto& p : pommaret_) {
    D_ = std::min(D_, multiplicative_bound(p.term, nvars_));
    reg_ = std::max(reg_, p.degree());
  }
}

std::shared_ptr<const QuasiStableModule> QuasiStableModule::ideal(int nvars, const std::vector<Term>& gens) {
  std::vector<ModuleTerm> g;
  for (const auto& t : gens) g.push_back(ModuleTerm{t, 0, 0});
  return std::make_shared<const QuasiStableModule>(nvars, std::vector<int>{0}, g);
}

std::shared_ptr<const QuasiStableModule> QuasiStableModule::make(int nvars, std::vector<int> shifts,
                                                                 const std::vector<ModuleTerm>& gens) {
  return std::make_shared<const QuasiStableModule>(nvars, std::move(shifts), gens);
}

std::vector<ModuleTerm> QuasiStableModule::minimal_basis() const {
  std::vector<ModuleTerm> out;
  for (int k = 0; k < rank(); ++k)
    for (const auto& t : minimal_[static_cast<std::size_t>(k)])
      out.push_back(ModuleTerm{t, k, shifts_[static_cast<std::size_t>(k)]});
  std::sort(out.begin(), out.end(),
            [this](const ModuleTerm& a, const ModuleTerm& b) { return basis_before(a, b, nvars_); });
  return out;
}

std::optional<std::size_t> QuasiStableModule::pommaret_index(const ModuleTerm& t) const {
  auto it = index_.find(t);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool QuasiStableModule::contains(int component, const Term& t) const {
  if (component < 0 || component >= rank()) return false;
  return divisible_by_any(minimal_[static_cast<std::size_t>(component)], t);
}

bool QuasiStableModule::contains(const ModuleTerm& t) const { return contains(t.component, t.term); }

std::optional<QuasiStableModule::ConeHit> QuasiStableModule::pommaret_divisor(const ModuleTerm& t) const {
  if (!contains(t)) return std::nullopt;
  // strip the smallest variable while staying inside U
  Term cur = t.term;
  while (!cur.is_one()) {
    Term next = cur.div_var(cur.min_var());
    if (!contains(t.component, next)) break;
    cur = next;
  }
  auto idx = pommaret_index(ModuleTerm{cur, t.component, shifts_[static_cast<std::size_t>(t.component)]});
  if (!idx) throw std::logic_error("Pommaret basis incomplete at " + to_string(t.term));
  return ConeHit{*idx, t.term.quotient(cur)};
}

std::vector<ModuleTerm> QuasiStableModule::terms_of_degree(int s) const {
  std::vector<ModuleTerm> out;
  for (int k = 0; k < rank(); ++k) {
    int d = shifts_[static_cast<std::size_t>(k)];
    for (const auto& t : markedres::terms_of_degree(nvars_, s - d)) out.push_back(ModuleTerm{t, k, d});
  }
  return out;
}

std::vector<ModuleTerm> QuasiStableModule::sous_escalier(int s) const {
  std::vector<ModuleTerm> out;
  for (const auto& t : terms_of_degree(s))
    if (!contains(t)) out.push_back(t);
  return out;
}

long QuasiStableModule::count_in_degree(int s) const {
  long c = 0;
  for (const auto& t : terms_of_degree(s))
    if (contains(t)) ++c;
  return c;
}

std::vector<int> QuasiStableModule::nonmultiplicative(std::size_t i) const {
  std::vector<int> v;
  for (int j = multiplicative_bound(pommaret_[i].term, nvars_) + 1; j < nvars_; ++j) v.push_back(j);
  return v;
}

std::vector<ModuleTerm> pommaret_basis(const QuasiStableModule& U) { return U.pommaret_basis(); }
bool is_stable(const QuasiStableModule& U) { return U.is_stable(); }
std::vector<ModuleTerm> sous_escalier(const QuasiStableModule& U, int s) { return U.sous_escalier(s); }

NumericInvariants numeric_invariants(const QuasiStableModule& U) {
  NumericInvariants inv;
  const int n = U.n();
  inv.D = U.depth_index();
  inv.reg = U.regularity();
  inv.pdim = U.projective_dimension();
  for (const auto& p : U.pommaret_basis()) {
    int q = multiplicative_bound(p.term, U.nvars());
    inv.g[{p.degree(), q}] += 1;
    if (q == 0) inv.has_min_index_zero = true;
    for (int i = 0; i <= n - q; ++i) inv.ranks.add(i, p.degree() + i, binomial(n - q, i));
  }
  // closed formula: r_{i,j} = sum_{q=1}^{n-i} binom(n-q, i) g_{j-i,q}
  for (const auto& [hq, cnt] : inv.g) {
    auto [h, q] = hq;
    for (int i = 0; i <= n; ++i) {
      if (q < 1 || q > n - i) continue;
      inv.ranks_formula.add(i, h + i, binomial(n - q, i) * cnt);
    }
  }
  inv.formula_agrees = inv.ranks == inv.ranks_formula;
  return inv;
}

}  // namespace markedres
