#pragma once

#include "markedres/scheme.hpp"

#include "json.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace markedres {

namespace detail {

inline std::pair<bool, Rational> split_sign(const Rational& c) { return {sgn(c) < 0, abs(c)}; }
inline std::pair<bool, ParamPoly> split_sign(const ParamPoly& c) {
  if (c.size() == 1 && sgn(c.terms().begin()->second) < 0) return {true, -c};
  return {false, c};
}

// head first, then component asc, degree desc, display order
inline std::vector<ModuleTerm> print_order(std::vector<ModuleTerm> ts, const ModuleTerm* head, int nvars) {
  std::sort(ts.begin(), ts.end(), [&](const ModuleTerm& a, const ModuleTerm& b) {
    bool ha = head && a == *head, hb = head && b == *head;
    if (ha != hb) return ha;
    if (a.component != b.component) return a.component < b.component;
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    return display_before(a.term, b.term, nvars);
  });
  return ts;
}

}  // namespace detail

// "x2^2 - x2*x1 + (a+1)*x1*x0", head first when given; "0" for zero
template <class S>
std::string element_text(const ModuleElement<S>& e, int nvars, const ParameterRing* ring = nullptr,
                         const ModuleTerm* head = nullptr, bool components = false) {
  if (e.is_zero()) return "0";
  using C = Coefficient<S>;
  std::string s;
  bool first = true;
  for (const auto& t : detail::print_order(e.support(), head, nvars)) {
    auto [neg, a] = detail::split_sign(e.coefficient(t));
    s += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    first = false;
    std::string comp = components ? "e" + std::to_string(t.component + 1) : "";
    std::string body = t.term.is_one() ? comp : (components ? to_string(t.term) + "*" + comp : to_string(t.term));
    if (a == C::one()) {
      s += body.empty() ? "1" : body;
      continue;
    }
    std::string coef = C::text(a, ring);
    if (!C::is_atomic(a)) coef = "(" + coef + ")";
    s += body.empty() ? coef : coef + "*" + body;
  }
  return s;
}

// LaTeX without spaces; the head, if given, comes first inside \uwave{}
template <class S>
std::string element_latex(const ModuleElement<S>& e, int nvars, const ParameterRing* ring = nullptr,
                          const ModuleTerm* head = nullptr, bool components = false) {
  if (e.is_zero()) return "0";
  using C = Coefficient<S>;
  std::string s;
  bool first = true;
  for (const auto& t : detail::print_order(e.support(), head, nvars)) {
    auto [neg, a] = detail::split_sign(e.coefficient(t));
    if (neg)
      s += "-";
    else if (!first)
      s += "+";
    first = false;
    std::string comp = components ? "\\mathbf{e}_{" + std::to_string(t.component + 1) + "}" : "";
    std::string body = t.term.is_one() ? comp : to_latex(t.term) + comp;
    if (head && t == *head) body = "\\uwave{" + body + "}";
    if (a == C::one()) {
      s += body.empty() ? "1" : body;
      continue;
    }
    std::string coef = C::latex(a, ring);
    if (!C::is_atomic(a)) coef = "(" + coef + ")";
    s += coef + body;
  }
  return s;
}

// entry (r, c) of a matrix, with the head of column c marked when it sits in row r
template <class S>
std::string entry_latex(const PolyMatrix<S>& M, std::size_t r, std::size_t c, int nvars,
                        const ParameterRing* ring = nullptr) {
  const auto& h = M.head(c);
  if (h && h->row == r) {
    ModuleTerm head{h->term, 0, 0};
    return element_latex(M(r, c), nvars, ring, &head);
  }
  return element_latex(M(r, c), nvars, ring);
}

// aligned text matrix; heads are written as <x2>
template <class S>
std::string matrix_text(const PolyMatrix<S>& M, int nvars, const ParameterRing* ring = nullptr) {
  std::vector<std::vector<std::string>> cells(M.rows(), std::vector<std::string>(M.cols()));
  std::vector<std::size_t> width(M.cols(), 1);
  for (std::size_t r = 0; r < M.rows(); ++r)
    for (std::size_t c = 0; c < M.cols(); ++c) {
      const auto& h = M.head(c);
      std::string s;
      if (h && h->row == r) {
        ModuleTerm head{h->term, 0, 0};
        s = element_text(M(r, c), nvars, ring, &head);
        std::string plain = to_string(h->term);
        s = "<" + plain + ">" + s.substr(plain.size());
      } else {
        s = element_text(M(r, c), nvars, ring);
      }
      width[c] = std::max(width[c], s.size());
      cells[r][c] = std::move(s);
    }
  std::string out;
  for (std::size_t r = 0; r < M.rows(); ++r) {
    out += "[ ";
    for (std::size_t c = 0; c < M.cols(); ++c) {
      out += cells[r][c] + std::string(width[c] - cells[r][c].size(), ' ');
      out += c + 1 < M.cols() ? "  " : " ";
    }
    out += "]\n";
  }
  return out;
}

template <class S>
std::string marked_set_text(const MarkedSet<S>& F, const ParameterRing* ring = nullptr) {
  const auto& U = *F.module;
  bool comps = U.rank() > 1;
  std::string out;
  for (const auto& e : F.elements) {
    out += to_string(e.head, comps) + " | " + element_text(e.tail, U.nvars(), ring, nullptr, comps) + "\n";
  }
  return out;
}

// file readable by parse_marked_file
template <class S>
std::string marked_file_text(const MarkedSet<S>& F, const ParameterRing* ring = nullptr) {
  const auto& U = *F.module;
  std::string out = "ring " + std::to_string(U.nvars()) + "\n";
  if (U.rank() > 1 || U.shifts()[0] != 0) {
    out += "shifts";
    for (int d : U.shifts()) out += " " + std::to_string(d);
    out += "\n";
  }
  return out + marked_set_text(F, ring);
}

std::string resolution_text(const Resolution<Rational>& res, int nvars);

// JSON, schema "mbv1"
using Json = nlohmann::ordered_json;

Json to_json(const PolyMatrix<Rational>& M);
Json to_json(const PolyMatrix<ParamPoly>& M, const ParameterRing& ring);
Json to_json(const Resolution<Rational>& res, int nvars);
Json to_json(const BettiTable& b);
Json to_json(const ParamPoly& p, const ParameterRing& ring);
Json to_json(const SchemePresentation& P);

// inverse of to_json for resolutions; marked-set levels are not restored
Resolution<Rational> resolution_from_json(const Json& j, int* nvars = nullptr);

}  // namespace markedres
