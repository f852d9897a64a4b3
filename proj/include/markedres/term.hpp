#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace markedres {

// exponent vectors are dense; variables are x_0 < x_1 < ... < x_{kMaxVars-1}
inline constexpr int kMaxVars = 10;

class Term {
 public:
  using Exponents = std::array<std::uint8_t, kMaxVars>;

  Term() = default;
  explicit Term(const std::vector<int>& exps);

  static Term var(int i, int e = 1);

  int exponent(int i) const { return exps_[static_cast<std::size_t>(i)]; }
  const Exponents& exponents() const { return exps_; }
  int degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  // -1 for the unit term
  int min_var() const;
  int max_var() const;

  bool divides(const Term& other) const;
  Term times(const Term& other) const;
  Term quotient(const Term& divisor) const;  // exact division, caller checks divides()
  Term times_var(int i, int e = 1) const;
  Term div_var(int i) const;

  // largest exponent of x_i that still divides, i.e. exponent(i)
  friend bool operator==(const Term& a, const Term& b) { return a.exps_ == b.exps_; }
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

 private:
  Exponents exps_{};
  std::uint16_t degree_ = 0;
};

inline Term operator*(const Term& a, const Term& b) { return a.times(b); }

// Storage order on terms of equal degree: reverse lexicographic.
// Returns <0, 0, >0.
int revlex_compare(const Term& a, const Term& b);

// Total order used as map key (degree first, then revlex).
struct TermLess {
  bool operator()(const Term& a, const Term& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return revlex_compare(a, b) < 0;
  }
};

// Display order: decides which term is printed first inside a homogeneous
// polynomial and how same-degree sous-escalier terms are numbered.
// Higher weight sum i*a_i first, ties broken by a_{n-1}, a_{n-2}, ... ascending.
bool display_before(const Term& a, const Term& b, int nvars);

// Module term x^a e_k in R^m(-d); component is 0-based internally.
struct ModuleTerm {
  Term term;
  int component = 0;
  int shift = 0;

  int degree() const { return term.degree() + shift; }

  friend bool operator==(const ModuleTerm& a, const ModuleTerm& b) {
    return a.component == b.component && a.shift == b.shift && a.term == b.term;
  }
  friend bool operator!=(const ModuleTerm& a, const ModuleTerm& b) { return !(a == b); }
};

// component asc, degree asc, revlex
bool operator<(const ModuleTerm& a, const ModuleTerm& b);

inline ModuleTerm operator*(const Term& t, const ModuleTerm& u) {
  return ModuleTerm{t.times(u.term), u.component, u.shift};
}

// basis order of Pommaret bases and syzygy columns: degree asc, component asc, display order
bool basis_before(const ModuleTerm& a, const ModuleTerm& b, int nvars);

// All terms of R in nvars variables of the given degree, in display order.
std::vector<Term> terms_of_degree(int nvars, int degree);

// text form "x2^2*x1", "1"
std::string to_string(const Term& t);
// LaTeX form "x_{2}^{2}x_{1}", "1"
std::string to_latex(const Term& t);
// "x2^2*x1*e2" when rank > 1 (or force_component), components printed 1-based
std::string to_string(const ModuleTerm& t, bool with_component);

}  // namespace markedres
