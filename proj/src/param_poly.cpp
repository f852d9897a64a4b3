#include "markedres/param_poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace markedres {

// ---- ParameterRing

ParameterRing ParameterRing::with_family(std::string name, std::size_t count, int index_base,
                                         bool indexed) const {
  if (family(name)) throw std::invalid_argument("duplicate parameter family " + name);
  ParameterRing r = *this;
  ParameterFamily f;
  f.name = std::move(name);
  f.count = count;
  f.index_base = index_base;
  f.indexed = indexed;
  f.offset = size_;
  r.families_.push_back(f);
  r.size_ += count;
  return r;
}

const ParameterFamily* ParameterRing::family(const std::string& name) const {
  for (const auto& f : families_)
    if (f.name == name) return &f;
  return nullptr;
}

const ParameterFamily& ParameterRing::family_of(std::size_t var) const {
  for (const auto& f : families_)
    if (var >= f.offset && var < f.offset + f.count) return f;
  throw std::out_of_range("parameter index " + std::to_string(var));
}

std::string ParameterRing::name(std::size_t var, bool latex) const {
  const ParameterFamily& f = family_of(var);
  if (!f.indexed) return f.name;
  long idx = static_cast<long>(var - f.offset) + f.index_base;
  if (latex) return f.name + "_{" + std::to_string(idx) + "}";
  return f.name + "_" + std::to_string(idx);
}

std::optional<std::size_t> ParameterRing::find(const std::string& name) const {
  for (const auto& f : families_) {
    if (!f.indexed) {
      if (f.name == name) return f.offset;
      continue;
    }
    std::string prefix = f.name + "_";
    if (name.rfind(prefix, 0) != 0) continue;
    std::string rest = name.substr(prefix.size());
    if (!rest.empty() && rest.front() == '{' && rest.back() == '}') rest = rest.substr(1, rest.size() - 2);
    if (rest.empty() || !std::all_of(rest.begin(), rest.end(), ::isdigit)) continue;
    long idx = std::stol(rest) - f.index_base;
    if (idx >= 0 && static_cast<std::size_t>(idx) < f.count) return f.offset + static_cast<std::size_t>(idx);
  }
  return std::nullopt;
}

bool operator==(const ParameterRing& a, const ParameterRing& b) {
  if (a.families_.size() != b.families_.size()) return false;
  for (std::size_t i = 0; i < a.families_.size(); ++i) {
    const auto& x = a.families_[i];
    const auto& y = b.families_[i];
    if (x.name != y.name || x.count != y.count || x.index_base != y.index_base || x.indexed != y.indexed)
      return false;
  }
  return true;
}

// ---- ParamMonomial

ParamMonomial ParamMonomial::var(std::size_t v, unsigned e) {
  ParamMonomial m;
  if (e == 0) return m;
  m.f_.emplace_back(static_cast<std::uint32_t>(v), e);
  m.degree_ = e;
  return m;
}

ParamMonomial ParamMonomial::operator*(const ParamMonomial& o) const {
  ParamMonomial r;
  r.f_.reserve(f_.size() + o.f_.size());
  auto i = f_.begin(), j = o.f_.begin();
  while (i != f_.end() || j != o.f_.end()) {
    if (j == o.f_.end() || (i != f_.end() && i->first < j->first)) {
      r.f_.push_back(*i++);
    } else if (i == f_.end() || j->first < i->first) {
      r.f_.push_back(*j++);
    } else {
      r.f_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  r.degree_ = degree_ + o.degree_;
  return r;
}

unsigned ParamMonomial::exponent(std::size_t v) const {
  for (const auto& [x, e] : f_)
    if (x == v) return e;
  return 0;
}

ParamMonomial ParamMonomial::without(std::size_t v) const {
  ParamMonomial r;
  for (const auto& p : f_) {
    if (p.first == v) continue;
    r.f_.push_back(p);
    r.degree_ += p.second;
  }
  return r;
}

bool ParamMonomialGreater::operator()(const ParamMonomial& a, const ParamMonomial& b) const {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0;
  for (; i < fa.size() && i < fb.size(); ++i) {
    if (fa[i].first != fb[i].first) return fa[i].first < fb[i].first;
    if (fa[i].second != fb[i].second) return fa[i].second > fb[i].second;
  }
  return i < fa.size() && i >= fb.size();
}

// ---- ParamPoly

ParamPoly::ParamPoly(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace(ParamMonomial{}, c);
}

ParamPoly ParamPoly::var(std::size_t v) {
  ParamPoly p;
  p.terms_.emplace(ParamMonomial::var(v), Rational(1));
  return p;
}

ParamPoly ParamPoly::monomial(const ParamMonomial& m, const Rational& c) {
  ParamPoly p;
  p.add_term(m, c);
  return p;
}

bool ParamPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational ParamPoly::constant_value() const {
  if (!is_constant()) throw std::logic_error("parameter polynomial is not constant");
  return constant_term();
}

Rational ParamPoly::constant_term() const {
  auto it = terms_.find(ParamMonomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned ParamPoly::total_degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

std::size_t ParamPoly::max_var_plus_one() const {
  std::size_t m = 0;
  for (const auto& [mono, c] : terms_)
    for (const auto& [v, e] : mono.factors()) m = std::max<std::size_t>(m, v + 1);
  return m;
}

void ParamPoly::add_term(const ParamMonomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& o) {
  *this = *this * o;
  return *this;
}

ParamPoly operator-(const ParamPoly& a) {
  ParamPoly r = a;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

bool is_zero(const ParamPoly& p) { return p.is_zero(); }

ParamPoly substitute(const ParamPoly& p, const std::vector<std::optional<ParamPoly>>& values) {
  ParamPoly out;
  for (const auto& [m, c] : p.terms()) {
    ParamPoly term(c);
    ParamMonomial rest;
    for (const auto& [v, e] : m.factors()) {
      if (v < values.size() && values[v]) {
        for (unsigned k = 0; k < e; ++k) term *= *values[v];
      } else {
        rest = rest * ParamMonomial::var(v, e);
      }
    }
    out += term * ParamPoly::monomial(rest, Rational(1));
  }
  return out;
}

Rational evaluate(const ParamPoly& p, const std::vector<std::optional<Rational>>& values) {
  Rational out = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational t = c;
    for (const auto& [v, e] : m.factors()) {
      if (v >= values.size() || !values[v]) throw std::invalid_argument("unassigned parameter");
      for (unsigned k = 0; k < e; ++k) t *= *values[v];
    }
    out += t;
  }
  return out;
}

ParamPoly normalize_generator(const ParamPoly& p) {
  if (p.is_zero()) return p;
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& [m, c] : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (sgn(p.terms().begin()->second) < 0) scale = -scale;
  ParamPoly r;
  for (const auto& [m, c] : p.terms()) r.add_term(m, c * scale);
  return r;
}

bool generator_less(const ParamPoly& a, const ParamPoly& b) {
  ParamMonomialGreater gt;
  auto i = a.terms().begin(), j = b.terms().begin();
  for (; i != a.terms().end() && j != b.terms().end(); ++i, ++j) {
    if (!(i->first == j->first)) return gt(j->first, i->first);  // smaller leading monomial first
    if (i->second != j->second) return i->second < j->second;
  }
  return i == a.terms().end() && j != b.terms().end();
}

std::vector<ParamPoly> canonical_generators(const std::vector<ParamPoly>& gens) {
  std::vector<ParamPoly> out;
  out.reserve(gens.size());
  for (const auto& g : gens) {
    ParamPoly n = normalize_generator(g);
    if (!n.is_zero()) out.push_back(std::move(n));
  }
  std::sort(out.begin(), out.end(), generator_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string monomial_string(const ParamMonomial& m, const ParameterRing* ring, bool latex) {
  std::string s;
  for (const auto& [v, e] : m.factors()) {
    if (!s.empty() && !latex) s += '*';
    s += ring ? ring->name(v, latex) : ("p" + std::to_string(v));
    if (e > 1) s += latex ? ("^{" + std::to_string(e) + "}") : ("^" + std::to_string(e));
  }
  return s;
}

namespace {
std::string render(const ParamPoly& p, const ParameterRing* ring, bool latex) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational a = abs(c);
    bool neg = sgn(c) < 0;
    if (first) {
      if (neg) s += '-';
    } else {
      s += neg ? "-" : "+";
    }
    first = false;
    std::string mono = monomial_string(m, ring, latex);
    if (mono.empty()) {
      s += latex ? (a.get_den() == 1 ? a.get_str() : "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}") : a.get_str();
    } else {
      if (a != 1) {
        if (latex && a.get_den() != 1)
          s += "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
        else
          s += a.get_str() + (latex ? "" : "*");
      }
      s += mono;
    }
  }
  return s;
}
}  // namespace

std::string to_string(const ParamPoly& p, const ParameterRing* ring) { return render(p, ring, false); }
std::string to_latex(const ParamPoly& p, const ParameterRing* ring) { return render(p, ring, true); }

}  // namespace markedres
