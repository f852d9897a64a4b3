#pragma once

#include "markedres/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace markedres {

// A named family of parameters such as C_0..C_37 or a single symbol "a".
struct ParameterFamily {
  std::string name;
  std::size_t count = 0;
  int index_base = 0;
  bool indexed = true;
  std::size_t offset = 0;  // global index of the first member
};

class ParameterRing {
 public:
  ParameterRing() = default;

  // extended copy; existing indices stay valid
  ParameterRing with_family(std::string name, std::size_t count, int index_base = 0,
                            bool indexed = true) const;

  std::size_t size() const { return size_; }
  const std::vector<ParameterFamily>& families() const { return families_; }
  const ParameterFamily* family(const std::string& name) const;
  const ParameterFamily& family_of(std::size_t var) const;

  // "C_17" / "C_{17}" / "a"
  std::string name(std::size_t var, bool latex = false) const;
  std::optional<std::size_t> find(const std::string& name) const;

  friend bool operator==(const ParameterRing& a, const ParameterRing& b);

 private:
  std::vector<ParameterFamily> families_;
  std::size_t size_ = 0;
};

// Monomial in parameters, stored as sorted (var, exponent) pairs.
class ParamMonomial {
 public:
  ParamMonomial() = default;
  static ParamMonomial var(std::size_t v, unsigned e = 1);

  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& factors() const { return f_; }
  unsigned degree() const { return degree_; }
  bool is_one() const { return f_.empty(); }
  ParamMonomial operator*(const ParamMonomial& o) const;
  unsigned exponent(std::size_t v) const;
  // removes variable v, returning its exponent
  ParamMonomial without(std::size_t v) const;

  friend bool operator==(const ParamMonomial& a, const ParamMonomial& b) {
    return a.f_ == b.f_;
  }

 private:
  std::vector<std::pair<std::uint32_t, std::uint32_t>> f_;
  unsigned degree_ = 0;
};

// Graded lexicographic, greatest first; lower parameter index is the more significant variable.
struct ParamMonomialGreater {
  bool operator()(const ParamMonomial& a, const ParamMonomial& b) const;
};

class ParamPoly {
 public:
  using Map = std::map<ParamMonomial, Rational, ParamMonomialGreater>;

  ParamPoly() = default;
  ParamPoly(const Rational& c);  // NOLINT: constants embed implicitly
  ParamPoly(long c) : ParamPoly(Rational(c)) {}  // NOLINT
  ParamPoly(int c) : ParamPoly(Rational(c)) {}   // NOLINT
  static ParamPoly var(std::size_t v);
  static ParamPoly monomial(const ParamMonomial& m, const Rational& c);

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // value when constant
  Rational constant_value() const;
  // coefficient of the unit monomial
  Rational constant_term() const;
  std::size_t size() const { return terms_.size(); }
  unsigned total_degree() const;
  std::size_t max_var_plus_one() const;

  void add_term(const ParamMonomial& m, const Rational& c);

  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  ParamPoly& operator*=(const ParamPoly& o);
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator-(const ParamPoly& a);
  friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }

 private:
  Map terms_;
};

bool is_zero(const ParamPoly& p);

// Substitute values for some parameters; unassigned ones stay symbolic.
ParamPoly substitute(const ParamPoly& p, const std::vector<std::optional<ParamPoly>>& values);
// Full evaluation; throws std::invalid_argument when a needed parameter is unassigned.
Rational evaluate(const ParamPoly& p, const std::vector<std::optional<Rational>>& values);

// Primitive integer form with positive leading stored coefficient (zero stays zero).
ParamPoly normalize_generator(const ParamPoly& p);

// Content-free, sign-normalized, deduplicated, sorted generator list with zeros removed.
std::vector<ParamPoly> canonical_generators(const std::vector<ParamPoly>& gens);

// Total order used to sort canonical generator lists.
bool generator_less(const ParamPoly& a, const ParamPoly& b);

// "a^2+4*a+3", "-C_1*B_2+1/2"
std::string to_string(const ParamPoly& p, const ParameterRing* ring);
std::string to_latex(const ParamPoly& p, const ParameterRing* ring);
std::string monomial_string(const ParamMonomial& m, const ParameterRing* ring, bool latex);

}  // namespace markedres
