#include "markedres/render.hpp"

#include "markedres/parse.hpp"

#include <sstream>

namespace markedres {

std::string BettiTable::render() const {
  if (entries_.empty()) return "(empty)\n";
  int imax = 0, rmin = entries_.begin()->first.second - entries_.begin()->first.first, rmax = rmin;
  for (const auto& [k, v] : entries_) {
    imax = std::max(imax, k.first);
    rmin = std::min(rmin, k.second - k.first);
    rmax = std::max(rmax, k.second - k.first);
  }
  std::size_t w = 1;
  for (const auto& [k, v] : entries_) w = std::max(w, std::to_string(v).size());
  w = std::max(w, std::to_string(imax).size());
  std::size_t lw = std::max(std::to_string(rmin).size(), std::to_string(rmax).size()) + 1;
  auto pad = [](const std::string& s, std::size_t n) { return std::string(n - std::min(n, s.size()), ' ') + s; };
  std::string out = std::string(lw, ' ');
  for (int i = 0; i <= imax; ++i) out += " " + pad(std::to_string(i), w);
  out += "\n";
  for (int r = rmin; r <= rmax; ++r) {
    out += pad(std::to_string(r) + ":", lw);
    for (int i = 0; i <= imax; ++i) out += " " + pad(std::to_string(get(i, i + r)), w);
    out += "\n";
  }
  return out;
}

std::string resolution_text(const Resolution<Rational>& res, int nvars) {
  std::string out;
  for (std::size_t t = 0; t < res.maps.size(); ++t) {
    out += "d_" + std::to_string(t) + ":\n";
    out += matrix_text(res.maps[t], nvars);
  }
  return out;
}

namespace {

template <class S, class F>
Json matrix_json(const PolyMatrix<S>& M, F&& coef) {
  Json j;
  j["row_shifts"] = M.row_shifts();
  j["col_shifts"] = M.col_shifts();
  Json entries = Json::array();
  for (std::size_t r = 0; r < M.rows(); ++r)
    for (std::size_t c = 0; c < M.cols(); ++c) {
      if (M(r, c).is_zero()) continue;
      Json terms = Json::object();
      for (const auto& [t, a] : M(r, c)) terms[to_string(t.term)] = coef(a);
      entries.push_back(Json{{"row", r}, {"col", c}, {"terms", terms}});
    }
  j["entries"] = entries;
  Json heads = Json::array();
  for (std::size_t c = 0; c < M.cols(); ++c) {
    const auto& h = M.head(c);
    if (h)
      heads.push_back(Json{{"col", c}, {"row", h->row}, {"term", to_string(h->term)}});
  }
  j["heads"] = heads;
  return j;
}

}  // namespace

Json to_json(const PolyMatrix<Rational>& M) {
  return matrix_json(M, [](const Rational& a) { return to_string(a); });
}

Json to_json(const PolyMatrix<ParamPoly>& M, const ParameterRing& ring) {
  return matrix_json(M, [&](const ParamPoly& a) { return to_string(a, &ring); });
}

Json to_json(const BettiTable& b) {
  Json j = Json::array();
  for (const auto& [k, v] : b.entries()) j.push_back(Json{{"i", k.first}, {"j", k.second}, {"rank", v}});
  return j;
}

Json to_json(const Resolution<Rational>& res, int nvars) {
  Json j;
  j["schema"] = "mbv1";
  j["kind"] = "resolution";
  j["nvars"] = nvars;
  Json maps = Json::array();
  for (const auto& M : res.maps) maps.push_back(to_json(M));
  j["maps"] = maps;
  j["betti"] = to_json(betti_table(res));
  return j;
}

Json to_json(const ParamPoly& p, const ParameterRing& ring) {
  Json j = Json::object();
  for (const auto& [m, c] : p.terms()) {
    std::string key = monomial_string(m, &ring, false);
    j[key.empty() ? "1" : key] = to_string(c);
  }
  return j;
}

Json to_json(const SchemePresentation& P) {
  Json j;
  j["schema"] = "mbv1";
  j["kind"] = kind_name(P.kind);
  if (P.kind == SchemePresentation::Kind::Syzygy || P.kind == SchemePresentation::Kind::Resolution)
    j["level"] = P.level;
  Json fams = Json::array();
  for (const auto& f : P.ring.families())
    fams.push_back(Json{{"name", f.name}, {"count", f.count}, {"index_base", f.index_base}});
  j["parameters"] = fams;
  Json gens = Json::array();
  for (const auto& g : P.generators) gens.push_back(to_json(g, P.ring));
  j["generators"] = gens;
  return j;
}

Resolution<Rational> resolution_from_json(const Json& j, int* nvars_out) {
  if (j.value("schema", "") != "mbv1" || j.value("kind", "") != "resolution")
    throw std::invalid_argument("not an mbv1 resolution");
  int nvars = j.at("nvars").get<int>();
  if (nvars_out) *nvars_out = nvars;
  Resolution<Rational> res;
  for (const auto& m : j.at("maps")) {
    PolyMatrix<Rational> M(m.at("row_shifts").get<std::vector<int>>(), m.at("col_shifts").get<std::vector<int>>());
    for (const auto& e : m.at("entries")) {
      auto r = e.at("row").get<std::size_t>(), c = e.at("col").get<std::size_t>();
      if (r >= M.rows() || c >= M.cols()) throw std::invalid_argument("entry outside the matrix");
      for (const auto& [t, a] : e.at("terms").items()) {
        Term term = t == "1" ? Term{} : parse_module_term(t, nvars).term;
        M.at(r, c).add(ModuleTerm{term, 0, 0}, parse_rational(a.get<std::string>()));
      }
    }
    for (const auto& h : m.at("heads")) {
      std::string t = h.at("term").get<std::string>();
      M.set_head(h.at("col").get<std::size_t>(),
                 HeadPosition{h.at("row").get<std::size_t>(), t == "1" ? Term{} : parse_module_term(t, nvars).term});
    }
    res.maps.push_back(std::move(M));
  }
  return res;
}

}  // namespace markedres
