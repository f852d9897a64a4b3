#pragma once

#include "markedres/betti.hpp"
#include "markedres/errors.hpp"
#include "markedres/term.hpp"

#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace markedres {

// q with x_q = min(t); x_0..x_q are the multiplicative variables.
// The unit term gets n (all variables multiplicative).
int multiplicative_bound(const Term& t, int nvars);

// t in the Pommaret cone of gen (sliced at i when given: multipliers use variables < x_i too).
bool cone_contains(const ModuleTerm& gen, const ModuleTerm& t, std::optional<int> slice = std::nullopt,
                   int nvars = kMaxVars);

struct QuasiStabilityWitness {
  ModuleTerm generator;
  int i = 0;  // variable whose power is removed
  int j = 0;  // variable that cannot replace it
};

// first violation of the saturation test on minimal generators, if any
std::optional<QuasiStabilityWitness> quasi_stability_obstruction(int nvars,
                                                                 const std::vector<ModuleTerm>& gens);
bool is_quasi_stable(int nvars, const std::vector<ModuleTerm>& gens);

// Monomial submodule U of R^m(-d), R = K[x_0..x_{nvars-1}], with its Pommaret basis.
class QuasiStableModule {
 public:
  // throws NotQuasiStable
  QuasiStableModule(int nvars, std::vector<int> shifts, const std::vector<ModuleTerm>& generators,
                    std::optional<int> degree_cap = std::nullopt);

  static std::shared_ptr<const QuasiStableModule> ideal(int nvars, const std::vector<Term>& gens);
  static std::shared_ptr<const QuasiStableModule> make(int nvars, std::vector<int> shifts,
                                                       const std::vector<ModuleTerm>& gens);

  int nvars() const { return nvars_; }
  int n() const { return nvars_ - 1; }
  int rank() const { return static_cast<int>(shifts_.size()); }
  const std::vector<int>& shifts() const { return shifts_; }

  // minimal monomial basis, per component and flattened (basis order)
  const std::vector<std::vector<Term>>& component_generators() const { return minimal_; }
  std::vector<ModuleTerm> minimal_basis() const;

  // Pommaret basis in basis order (degree, component, display order)
  const std::vector<ModuleTerm>& pommaret_basis() const { return pommaret_; }
  std::size_t size() const { return pommaret_.size(); }
  std::optional<std::size_t> pommaret_index(const ModuleTerm& t) const;

  bool contains(const ModuleTerm& t) const;
  bool contains(int component, const Term& t) const;

  struct ConeHit {
    std::size_t index;  // position in pommaret_basis()
    Term multiplier;
  };
  // the unique Pommaret cone holding t
  std::optional<ConeHit> pommaret_divisor(const ModuleTerm& t) const;

  bool is_stable() const { return stable_; }
  // D = least min-index over the Pommaret basis (n for an empty basis)
  int depth_index() const { return D_; }
  int regularity() const { return reg_; }
  int projective_dimension() const { return pommaret_.empty() ? 0 : n() - D_; }
  bool is_zero() const { return pommaret_.empty(); }

  // free-module terms of graded degree s (all components)
  std::vector<ModuleTerm> terms_of_degree(int s) const;
  // sous-escalier in degree s, component ascending then display order
  std::vector<ModuleTerm> sous_escalier(int s) const;
  // |U_s ∩ T^m|
  long count_in_degree(int s) const;

  // non-multiplicative variables of the i-th Pommaret element
  std::vector<int> nonmultiplicative(std::size_t i) const;

  friend bool operator==(const QuasiStableModule& a, const QuasiStableModule& b) {
    return a.nvars_ == b.nvars_ && a.shifts_ == b.shifts_ && a.minimal_ == b.minimal_;
  }

 private:
  int nvars_;
  std::vector<int> shifts_;
  std::vector<std::vector<Term>> minimal_;
  std::vector<ModuleTerm> pommaret_;
  std::map<ModuleTerm, std::size_t> index_;
  bool stable_ = true;
  int D_ = 0;
  int reg_ = 0;
};

using ModulePtr = std::shared_ptr<const QuasiStableModule>;

std::vector<ModuleTerm> pommaret_basis(const QuasiStableModule& U);
bool is_stable(const QuasiStableModule& U);
std::vector<ModuleTerm> sous_escalier(const QuasiStableModule& U, int s);

struct NumericInvariants {
  std::map<std::pair<int, int>, int> g;  // (degree h, min index q) -> count
  int D = 0;
  int reg = 0;
  int pdim = 0;
  BettiTable ranks;          // direct count, authoritative
  BettiTable ranks_formula;  // closed formula with q running from 1
  bool formula_agrees = true;
  bool has_min_index_zero = false;
};

NumericInvariants numeric_invariants(const QuasiStableModule& U);

long binomial(long n, long k);

}  // namespace markedres
