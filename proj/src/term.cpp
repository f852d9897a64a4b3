#include "markedres/term.hpp"

#include <algorithm>
#include <stdexcept>

namespace markedres {

Term::Term(const std::vector<int>& exps) {
  if (exps.size() > static_cast<std::size_t>(kMaxVars))
    throw std::invalid_argument("too many variables");
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0 || exps[i] > 255) throw std::invalid_argument("exponent out of range");
    exps_[i] = static_cast<std::uint8_t>(exps[i]);
    degree_ = static_cast<std::uint16_t>(degree_ + exps[i]);
  }
}

Term Term::var(int i, int e) {
  Term t;
  t.exps_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(e);
  t.degree_ = static_cast<std::uint16_t>(e);
  return t;
}

int Term::min_var() const {
  for (int i = 0; i < kMaxVars; ++i)
    if (exps_[i]) return i;
  return -1;
}

int Term::max_var() const {
  for (int i = kMaxVars - 1; i >= 0; --i)
    if (exps_[i]) return i;
  return -1;
}

bool Term::divides(const Term& other) const {
  if (degree_ > other.degree_) return false;
  for (int i = 0; i < kMaxVars; ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Term Term::times(const Term& other) const {
  Term r;
  for (int i = 0; i < kMaxVars; ++i) {
    int e = exps_[i] + other.exps_[i];
    if (e > 255) throw std::overflow_error("exponent overflow");
    r.exps_[i] = static_cast<std::uint8_t>(e);
  }
  r.degree_ = static_cast<std::uint16_t>(degree_ + other.degree_);
  return r;
}

Term Term::quotient(const Term& divisor) const {
  Term r;
  for (int i = 0; i < kMaxVars; ++i) r.exps_[i] = static_cast<std::uint8_t>(exps_[i] - divisor.exps_[i]);
  r.degree_ = static_cast<std::uint16_t>(degree_ - divisor.degree_);
  return r;
}

Term Term::times_var(int i, int e) const {
  Term r = *this;
  r.exps_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(r.exps_[static_cast<std::size_t>(i)] + e);
  r.degree_ = static_cast<std::uint16_t>(r.degree_ + e);
  return r;
}

Term Term::div_var(int i) const {
  Term r = *this;
  r.exps_[static_cast<std::size_t>(i)] -= 1;
  r.degree_ -= 1;
  return r;
}

int revlex_compare(const Term& a, const Term& b) {
  // larger exponent in the smallest differing variable makes the term smaller
  for (int i = 0; i < kMaxVars; ++i) {
    int ea = a.exponent(i), eb = b.exponent(i);
    if (ea != eb) return ea > eb ? -1 : 1;
  }
  return 0;
}

namespace {
int weight(const Term& t) {
  int w = 0;
  for (int i = 1; i < kMaxVars; ++i) w += i * t.exponent(i);
  return w;
}
}  // namespace

bool display_before(const Term& a, const Term& b, int nvars) {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  int wa = weight(a), wb = weight(b);
  if (wa != wb) return wa > wb;
  for (int i = nvars - 2; i >= 1; --i) {
    if (a.exponent(i) != b.exponent(i)) return a.exponent(i) < b.exponent(i);
  }
  // degree, weight and a_1..a_{n-1} pin the last two exponents
  return revlex_compare(a, b) > 0;
}

bool operator<(const ModuleTerm& a, const ModuleTerm& b) {
  if (a.component != b.component) return a.component < b.component;
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  int c = revlex_compare(a.term, b.term);
  if (c != 0) return c < 0;
  return a.shift < b.shift;
}

bool basis_before(const ModuleTerm& a, const ModuleTerm& b, int nvars) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  if (a.component != b.component) return a.component < b.component;
  return display_before(a.term, b.term, nvars);
}

std::vector<Term> terms_of_degree(int nvars, int degree) {
  std::vector<Term> out;
  if (degree < 0 || nvars <= 0) return out;
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  // enumerate compositions of degree into nvars parts
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == nvars - 1) {
      e[static_cast<std::size_t>(var)] = left;
      out.emplace_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[static_cast<std::size_t>(var)] = k;
      self(self, var + 1, left - k);
    }
  };
  rec(rec, 0, degree);
  std::sort(out.begin(), out.end(),
            [nvars](const Term& a, const Term& b) { return display_before(a, b, nvars); });
  return out;
}

std::string to_string(const Term& t) {
  if (t.is_one()) return "1";
  std::string s;
  for (int i = kMaxVars - 1; i >= 0; --i) {
    int e = t.exponent(i);
    if (!e) continue;
    if (!s.empty()) s += '*';
    s += 'x' + std::to_string(i);
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s;
}

std::string to_latex(const Term& t) {
  if (t.is_one()) return "1";
  std::string s;
  for (int i = kMaxVars - 1; i >= 0; --i) {
    int e = t.exponent(i);
    if (!e) continue;
    s += "x_{" + std::to_string(i) + "}";
    if (e > 1) s += "^{" + std::to_string(e) + "}";
  }
  return s;
}

std::string to_string(const ModuleTerm& t, bool with_component) {
  if (!with_component) return to_string(t.term);
  std::string e = "e" + std::to_string(t.component + 1);
  if (t.term.is_one()) return e;
  return to_string(t.term) + "*" + e;
}

}  // namespace markedres
