#include "markedres/parse.hpp"

#include <cctype>
#include <sstream>

namespace markedres {

namespace {

enum class Tok { Number, Ident, Sym, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int line = 1, column = 1;
};

class Lexer {
 public:
  Lexer(std::string_view s, int line, int column) : s_(s), line_(line), col_(column) { advance(); }

  const Token& peek() const { return cur_; }
  Token take() {
    Token t = cur_;
    advance();
    return t;
  }
  bool accept(const std::string& sym) {
    if (cur_.kind == Tok::Sym && cur_.text == sym) {
      advance();
      return true;
    }
    return false;
  }
  void expect(const std::string& sym) {
    if (!accept(sym)) fail("expected '" + sym + "'");
  }
  [[noreturn]] void fail(const std::string& what) const {
    std::string got = cur_.kind == Tok::End ? "end of input" : "'" + cur_.text + "'";
    throw ParseError(what + ", found " + got, cur_.line, cur_.column);
  }

 private:
  void advance() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
      if (s_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
    cur_ = Token{};
    cur_.line = line_;
    cur_.column = col_;
    if (pos_ >= s_.size()) return;
    std::size_t start = pos_;
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ + 1 < s_.size() && s_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
        ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      }
      cur_.kind = Tok::Number;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      cur_.kind = Tok::Ident;
    } else {
      ++pos_;
      cur_.kind = Tok::Sym;
    }
    cur_.text = std::string(s_.substr(start, pos_ - start));
    col_ += static_cast<int>(pos_ - start);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  int line_, col_;
  Token cur_;
};

bool indexed_name(const std::string& s, char prefix, int& index) {
  if (s.size() < 2 || s[0] != prefix) return false;
  for (std::size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  index = std::stoi(s.substr(1));
  return true;
}

struct Value {
  ModuleElement<ParamPoly> e;  // scalars live in component 0
  bool vector = false;
};

class ExprParser {
 public:
  ExprParser(Lexer& lx, int nvars, ParameterRing& ring, std::size_t rank)
      : lx_(lx), nvars_(nvars), ring_(ring), rank_(rank) {}

  Value expr() {
    Value acc;
    bool first = true;
    for (;;) {
      bool neg = false;
      if (lx_.accept("+")) {
      } else if (lx_.accept("-")) {
        neg = true;
      } else if (!first) {
        break;
      }
      Value t = term();
      if (neg) t.e = -t.e;
      acc.e += t.e;
      acc.vector = acc.vector || t.vector;
      first = false;
    }
    return acc;
  }

 private:
  Value term() {
    Value v = factor();
    while (lx_.accept("*")) v = product(v, factor());
    return v;
  }

  Value product(const Value& a, const Value& b) {
    if (a.vector && b.vector) lx_.fail("product of two module elements");
    const Value& scalar = a.vector ? b : a;
    const Value& other = a.vector ? a : b;
    Value r;
    r.e = multiply(scalar.e, other.e);
    r.vector = other.vector;
    return r;
  }

  Value factor() {
    Value base = atom();
    if (lx_.accept("^")) {
      if (lx_.peek().kind != Tok::Number || lx_.peek().text.find('/') != std::string::npos)
        lx_.fail("expected exponent");
      int e = std::stoi(lx_.take().text);
      if (base.vector && e != 1) lx_.fail("power of a basis vector");
      Value r;
      r.e = ModuleElement<ParamPoly>::constant(ParamPoly(1));
      for (int i = 0; i < e; ++i) r = product(r, base);
      return r;
    }
    return base;
  }

  Value atom() {
    const Token& t = lx_.peek();
    if (t.kind == Tok::Number) {
      Rational q;
      try {
        q = parse_rational(t.text);
      } catch (const std::exception&) {
        lx_.fail("bad number");
      }
      lx_.take();
      return Value{ModuleElement<ParamPoly>::constant(ParamPoly(q)), false};
    }
    if (t.kind == Tok::Ident) {
      int idx = 0;
      if (indexed_name(t.text, 'x', idx)) {
        if (idx >= nvars_) throw ParseError("unknown variable " + t.text, t.line, t.column);
        lx_.take();
        return Value{ModuleElement<ParamPoly>::monomial(ModuleTerm{Term::var(idx), 0, 0}, ParamPoly(1)), false};
      }
      if (indexed_name(t.text, 'e', idx)) {
        if (idx < 1 || static_cast<std::size_t>(idx) > rank_)
          throw ParseError("unknown component " + t.text, t.line, t.column);
        lx_.take();
        return Value{ModuleElement<ParamPoly>::monomial(ModuleTerm{Term{}, idx - 1, 0}, ParamPoly(1)), true};
      }
      auto p = ring_.find(t.text);
      if (!p) {
        ring_ = ring_.with_family(t.text, 1, 0, false);
        p = ring_.find(t.text);
      }
      lx_.take();
      return Value{ModuleElement<ParamPoly>::constant(ParamPoly::var(*p)), false};
    }
    if (lx_.accept("(")) {
      Value v = expr();
      lx_.expect(")");
      return v;
    }
    lx_.fail("expected a term");
  }

  Lexer& lx_;
  int nvars_;
  ParameterRing& ring_;
  std::size_t rank_;
};

ModuleElement<ParamPoly> with_shifts(const ModuleElement<ParamPoly>& e, const std::vector<int>& shifts) {
  ModuleElement<ParamPoly> r;
  for (const auto& [t, c] : e) r.add(ModuleTerm{t.term, t.component, shifts[static_cast<std::size_t>(t.component)]}, c);
  return r;
}

ModuleElement<Rational> to_rational(const ModuleElement<ParamPoly>& e, int line, int column) {
  ModuleElement<Rational> r;
  for (const auto& [t, c] : e) {
    if (!c.is_constant()) throw ParseError("parameters are not allowed here", line, column);
    r.add(t, c.constant_value());
  }
  return r;
}

ModuleElement<ParamPoly> parse_in(Lexer& lx, int nvars, ParameterRing& ring, const std::vector<int>& shifts) {
  ExprParser p(lx, nvars, ring, shifts.size());
  return with_shifts(p.expr().e, shifts);
}

}  // namespace

ModuleElement<ParamPoly> parse_element(std::string_view text, int nvars, ParameterRing& ring,
                                       const std::vector<int>& shifts, int line) {
  Lexer lx(text, line, 1);
  auto e = parse_in(lx, nvars, ring, shifts);
  if (lx.peek().kind != Tok::End) lx.fail("unexpected input");
  return e;
}

ModuleElement<Rational> parse_rational_element(std::string_view text, int nvars, const std::vector<int>& shifts) {
  ParameterRing ring;
  return to_rational(parse_element(text, nvars, ring, shifts), 1, 1);
}

ModuleTerm parse_module_term(std::string_view text, int nvars, const std::vector<int>& shifts) {
  auto e = parse_rational_element(text, nvars, shifts);
  if (e.size() != 1 || e.begin()->second != 1) throw ParseError("expected a single term", 1, 1);
  return e.begin()->first;
}

bool ModuleLiteral::monomial() const {
  for (const auto& g : generators)
    if (g.size() != 1 || g.begin()->second != 1) return false;
  return true;
}

std::vector<ModuleTerm> ModuleLiteral::terms() const {
  std::vector<ModuleTerm> out;
  for (const auto& g : generators) out.push_back(g.begin()->first);
  return out;
}

namespace {

int max_variable(std::string_view text) {
  int best = -1;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != 'x' || (i > 0 && std::isalnum(static_cast<unsigned char>(text[i - 1])))) continue;
    std::size_t j = i + 1;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i + 1 && (j == text.size() || !std::isalnum(static_cast<unsigned char>(text[j]))))
      best = std::max(best, std::stoi(std::string(text.substr(i + 1, j - i - 1))));
  }
  return best;
}

int take_int(Lexer& lx) {
  bool neg = lx.accept("-");
  if (lx.peek().kind != Tok::Number || lx.peek().text.find('/') != std::string::npos) lx.fail("expected an integer");
  int v = std::stoi(lx.take().text);
  return neg ? -v : v;
}

}  // namespace

ModuleLiteral parse_module_literal(std::string_view text, std::optional<int> nvars) {
  ModuleLiteral lit;
  Lexer lx(text, 1, 1);
  Token kw = lx.peek();
  if (kw.kind != Tok::Ident || (kw.text != "ideal" && kw.text != "module")) lx.fail("expected 'ideal' or 'module'");
  lx.take();
  ParameterRing ring;
  int nv = nvars.value_or(max_variable(text) + 1);
  auto element = [&](int component) {
    Token at = lx.peek();
    auto e = parse_in(lx, nv, ring, std::vector<int>(lit.shifts.size(), 0));
    if (component > 0) {
      ModuleElement<ParamPoly> moved;
      for (const auto& [t, c] : e) {
        if (t.component != 0) throw ParseError("component given twice", at.line, at.column);
        moved.add(ModuleTerm{t.term, component - 1, 0}, c);
      }
      e = moved;
    }
    auto r = to_rational(e, at.line, at.column);
    ModuleElement<Rational> shifted;
    for (const auto& [t, c] : r) shifted.add(ModuleTerm{t.term, t.component, lit.shifts[static_cast<std::size_t>(t.component)]}, c);
    lit.generators.push_back(std::move(shifted));
  };
  if (kw.text == "ideal") {
    lx.expect("[");
    if (!lx.accept("]")) {
      do element(0);
      while (lx.accept(","));
      lx.expect("]");
    }
  } else {
    if (lx.accept("(")) {
      while (!lx.accept(")")) {
        Token key = lx.take();
        lx.expect("=");
        if (key.text == "n") {
          int n = take_int(lx);
          if (n < 0 || n + 1 > kMaxVars) throw ParseError("n out of range", key.line, key.column);
          if (nvars && *nvars != n + 1) throw ParseError("n disagrees with the ring size", key.line, key.column);
          nv = n + 1;
          lit.nvars = nv;
        } else if (key.text == "shifts") {
          lx.expect("[");
          lit.shifts.clear();
          if (!lx.accept("]")) {
            do lit.shifts.push_back(take_int(lx));
            while (lx.accept(","));
            lx.expect("]");
          }
        } else {
          throw ParseError("unknown option " + key.text, key.line, key.column);
        }
        lx.accept(",");
      }
    }
    lx.expect("{");
    while (!lx.accept("}")) {
      Token comp = lx.take();
      int k = 0;
      if (comp.kind != Tok::Ident || !indexed_name(comp.text, 'e', k) || k < 1 ||
          static_cast<std::size_t>(k) > lit.shifts.size())
        throw ParseError("expected a component name e1..e" + std::to_string(lit.shifts.size()), comp.line, comp.column);
      lx.expect(":");
      lx.expect("[");
      if (!lx.accept("]")) {
        do element(k);
        while (lx.accept(","));
        lx.expect("]");
      }
      lx.accept(",");
    }
  }
  if (lx.peek().kind != Tok::End) lx.fail("unexpected input");
  if (!lit.nvars) lit.nvars = nv;
  return lit;
}

MarkedFile parse_marked_file(std::string_view text, std::optional<int> nvars) {
  MarkedFile f;
  f.nvars = nvars.value_or(0);
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    std::istringstream words(line);
    std::string word;
    words >> word;
    if (word == "ring") {
      int n = 0;
      if (!(words >> n) || n < 1 || n > kMaxVars) throw ParseError("ring needs a variable count", lineno, 1);
      if (nvars && *nvars != n) throw ParseError("ring disagrees with --ring", lineno, 1);
      f.nvars = n;
      continue;
    }
    if (word == "shifts") {
      f.shifts.clear();
      int d;
      while (words >> d) f.shifts.push_back(d);
      if (f.shifts.empty()) throw ParseError("shifts needs at least one value", lineno, 1);
      continue;
    }
    if (word == "params") {
      while (words >> word)
        if (!f.ring.find(word)) f.ring = f.ring.with_family(word, 1, 0, false);
      continue;
    }
    auto bar = line.find('|');
    if (bar == std::string::npos) throw ParseError("expected 'head | tail'", lineno, static_cast<int>(line.size()) + 1);
    if (f.nvars == 0) f.nvars = std::max(1, max_variable(text) + 1);
    std::string head = line.substr(0, bar), tail = line.substr(bar + 1);
    Lexer hl(head, lineno, 1);
    auto h = parse_in(hl, f.nvars, f.ring, f.shifts);
    if (hl.peek().kind != Tok::End) hl.fail("unexpected input");
    if (h.size() != 1 || h.begin()->second != ParamPoly(1))
      throw ParseError("head must be a single monic term", lineno, static_cast<int>(first) + 1);
    Lexer tl(tail, lineno, static_cast<int>(bar) + 2);
    ModuleElement<ParamPoly> t;
    if (tl.peek().kind != Tok::End) t = parse_in(tl, f.nvars, f.ring, f.shifts);
    if (tl.peek().kind != Tok::End) tl.fail("unexpected input");
    f.elements.emplace_back(h.begin()->first, t);
    f.lines.push_back(lineno);
  }
  if (f.elements.empty()) throw ParseError("no marked elements", lineno, 1);
  return f;
}

ModulePtr MarkedFile::module(std::optional<int> degree_cap) const {
  std::vector<ModuleTerm> heads;
  for (const auto& [h, t] : elements) heads.push_back(h);
  return std::make_shared<const QuasiStableModule>(nvars, shifts, heads, degree_cap);
}

MarkedSet<ParamPoly> MarkedFile::marked_set(std::optional<int> degree_cap) const {
  std::map<ModuleTerm, ModuleElement<ParamPoly>> tails;
  for (const auto& [h, t] : elements) tails[h] = t;
  return make_marked_set<ParamPoly>(module(degree_cap), tails);
}

bool MarkedFile::is_numeric() const {
  for (const auto& [h, t] : elements)
    for (const auto& [m, c] : t)
      if (!c.is_constant()) return false;
  return true;
}

MarkedSet<Rational> MarkedFile::rational_set(std::optional<int> degree_cap) const {
  std::map<ModuleTerm, ModuleElement<Rational>> tails;
  for (std::size_t i = 0; i < elements.size(); ++i)
    tails[elements[i].first] = to_rational(elements[i].second, lines[i], 1);
  return make_marked_set<Rational>(module(degree_cap), tails);
}

}  // namespace markedres
