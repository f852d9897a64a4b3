#pragma once

#include "markedres/coefficient.hpp"
#include "markedres/term.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace markedres {

// Sparse element of a graded free module R^m(-d) with coefficients in S.
// Polynomials of R are elements with every term in component 0, shift 0.
template <class S>
class ModuleElement {
 public:
  using Map = std::map<ModuleTerm, S>;
  using C = Coefficient<S>;

  ModuleElement() = default;

  static ModuleElement monomial(const ModuleTerm& t, const S& c) {
    ModuleElement e;
    e.add(t, c);
    return e;
  }
  static ModuleElement monomial(const ModuleTerm& t) { return monomial(t, C::one()); }
  static ModuleElement constant(const S& c) { return monomial(ModuleTerm{}, c); }

  void add(const ModuleTerm& t, const S& c) {
    if (C::zero(c)) return;
    auto [it, fresh] = terms_.emplace(t, c);
    if (!fresh) {
      it->second += c;
      if (C::zero(it->second)) terms_.erase(it);
    }
  }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  S coefficient(const ModuleTerm& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? S(0) : it->second;
  }
  bool has(const ModuleTerm& t) const { return terms_.count(t) != 0; }

  std::vector<ModuleTerm> support() const {
    std::vector<ModuleTerm> s;
    s.reserve(terms_.size());
    for (const auto& [t, c] : terms_) s.push_back(t);
    return s;
  }

  // greatest term in the storage order; precondition: nonzero
  const ModuleTerm& leading_term() const { return terms_.rbegin()->first; }

  std::optional<int> degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first.degree();
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.degree();
    for (const auto& [t, c] : terms_)
      if (t.degree() != d) return false;
    return true;
  }

  std::map<int, ModuleElement> homogeneous_parts() const {
    std::map<int, ModuleElement> parts;
    for (const auto& [t, c] : terms_) parts[t.degree()].terms_.emplace(t, c);
    return parts;
  }

  ModuleElement& operator+=(const ModuleElement& o) {
    for (const auto& [t, c] : o.terms_) add(t, c);
    return *this;
  }
  ModuleElement& operator-=(const ModuleElement& o) {
    for (const auto& [t, c] : o.terms_) add(t, -c);
    return *this;
  }
  friend ModuleElement operator+(ModuleElement a, const ModuleElement& b) { return a += b; }
  friend ModuleElement operator-(ModuleElement a, const ModuleElement& b) { return a -= b; }
  friend ModuleElement operator-(const ModuleElement& a) {
    ModuleElement r = a;
    for (auto& [t, c] : r.terms_) c = -c;
    return r;
  }
  friend bool operator==(const ModuleElement& a, const ModuleElement& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const ModuleElement& a, const ModuleElement& b) { return !(a == b); }

  ModuleElement scaled(const S& c) const {
    ModuleElement r;
    if (C::zero(c)) return r;
    for (const auto& [t, a] : terms_) r.add(t, a * c);
    return r;
  }

  // x^m * this
  ModuleElement shifted(const Term& m) const {
    ModuleElement r;
    for (const auto& [t, a] : terms_) r.terms_.emplace(m * t, a);
    return r;
  }

  // this -= c * x^m * g, the inner step of every reduction
  void subtract_multiple(const S& c, const Term& m, const ModuleElement& g) {
    for (const auto& [t, a] : g.terms_) add(m * t, -(c * a));
  }

 private:
  Map terms_;
};

template <class S>
using Poly = ModuleElement<S>;

// Builds an element from raw (term, coefficient) pairs; duplicates merge, zeros drop.
template <class S>
ModuleElement<S> canonicalize(const std::vector<std::pair<ModuleTerm, S>>& raw) {
  ModuleElement<S> e;
  for (const auto& [t, c] : raw) e.add(t, c);
  return e;
}

// Elements are kept canonical, so this is the identity.
template <class S>
ModuleElement<S> canonicalize(const ModuleElement<S>& e) {
  return e;
}

template <class S>
Poly<S> poly_term(const Term& t, const S& c) {
  return Poly<S>::monomial(ModuleTerm{t, 0, 0}, c);
}

template <class S>
Poly<S> poly_term(const Term& t) {
  return Poly<S>::monomial(ModuleTerm{t, 0, 0});
}

// p * e for a polynomial p of R
template <class S>
ModuleElement<S> multiply(const Poly<S>& p, const ModuleElement<S>& e) {
  ModuleElement<S> r;
  for (const auto& [t, c] : p)
    for (const auto& [u, d] : e) r.add(t.term * u, c * d);
  return r;
}

// component k of e as a polynomial of R
template <class S>
Poly<S> component_part(const ModuleElement<S>& e, int k) {
  Poly<S> p;
  for (const auto& [t, c] : e)
    if (t.component == k) p.add(ModuleTerm{t.term, 0, 0}, c);
  return p;
}

// p placed in component k with the given shift
template <class S>
ModuleElement<S> embed(const Poly<S>& p, int k, int shift) {
  ModuleElement<S> e;
  for (const auto& [t, c] : p) e.add(ModuleTerm{t.term, k, shift}, c);
  return e;
}

// coefficient extraction with respect to the x-variables
template <class S>
std::vector<std::pair<ModuleTerm, S>> x_coefficients(const ModuleElement<S>& p) {
  std::vector<std::pair<ModuleTerm, S>> out(p.begin(), p.end());
  return out;
}

// Coefficient-wise map into another ring.
template <class T, class S, class F>
ModuleElement<T> map_coefficients(const ModuleElement<S>& e, F&& f) {
  ModuleElement<T> r;
  for (const auto& [t, c] : e) r.add(t, f(c));
  return r;
}

}  // namespace markedres
