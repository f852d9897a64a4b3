#include "markedres/appendix.hpp"

#include "markedres/parse.hpp"

#include <sstream>

namespace markedres {

ModulePtr appendix_module() {
  return QuasiStableModule::ideal(4, {Term({0, 0, 0, 2}), Term({0, 0, 1, 1}), Term({0, 0, 3, 0}), Term({0, 2, 0, 1})});
}

SchemeOptions appendix_options() {
  SchemeOptions o;
  o.marked = FamilyOptions{"C", 0, 1, Numbering::ColumnMajor, {}};
  FamilyOptions b{"B", 0, 1, Numbering::Explicit, {}};
  // the printed delta1 numbers column 1 first, then walks the inner 2x2 block before the last column
  b.order = {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {0, 1}, {0, 2}, {2, 1}, {3, 1},
             {1, 1}, {1, 2}, {2, 2}, {3, 2}, {0, 3}, {1, 3}, {2, 3}, {3, 3}};
  o.levels = {b, FamilyOptions{"A", 0, 1, Numbering::ColumnMajor, {}}};
  return o;
}

std::vector<AppendixIdealSpec> appendix_ideals() {
  return {
      {"I1",
       {{"x3", "x2^3 + x1^3 - x0^3"}, {"x3 - x0", "x2 + x0", "x1 - x0"}, {"x3 - x0", "x2 + x0", "x1 + x0"}}},
      {"I2", {{"x3^2 - x2*x0", "x3*x2 - x1*x0", "x3*x1 - x2^2"}, {"x3", "x2 - x0", "x1"}}},
      {"I3", {{"x3", "x2^2 - x1^2 + x0^2"}, {"x3 + x0", "x2 - x0"}}},
  };
}

namespace {

constexpr int kNvars = 4;
constexpr int kTopDegree = 6;

std::vector<ModuleElement<Rational>> entries_of(const PolyMatrix<Rational>& M) {
  std::vector<ModuleElement<Rational>> out;
  for (std::size_t r = 0; r < M.rows(); ++r)
    for (std::size_t c = 0; c < M.cols(); ++c)
      if (!M(r, c).is_zero()) out.push_back(M(r, c));
  return out;
}

AppendixIdeal build_ideal(const AppendixIdealSpec& spec, const SchemeModel& model,
                          const SchemePresentation& marked, const SchemePresentation& locus, unsigned threads) {
  AppendixIdeal out;
  out.name = spec.name;
  std::vector<std::vector<ModuleElement<Rational>>> comps;
  for (const auto& c : spec.components) {
    std::vector<ModuleElement<Rational>> gens;
    for (const auto& g : c) gens.push_back(parse_rational_element(g, kNvars));
    comps.push_back(std::move(gens));
  }
  std::map<int, DegreewiseSpan> spans;
  for (int s = 0; s <= kTopDegree; ++s) spans[s] = intersect_by_degree(kNvars, {0}, comps, s);
  const auto J = model.modules()[0];
  out.basis = marked_basis_from_spans(J, spans);
  for (int s = 3; s <= kTopDegree; ++s)
    out.hilbert.push_back(free_dimension(kNvars, {0}, s) - static_cast<long>(spans[s].dim()));
  std::vector<ModuleElement<Rational>> polys(out.basis.polys.begin(), out.basis.polys.end());
  out.hilbert_basis = quotient_hilbert_function(kNvars, {0}, polys, 3, kTopDegree);

  out.resolution = u_resolution(out.basis, threads);
  out.minimality = is_minimal(out.resolution);
  out.minimized = minimize(out.resolution);
  out.hartshorne_rao = quotient_hilbert_function(kNvars, {0}, entries_of(out.minimized.resolution.maps.back()), 0, 4);
  out.in_marked_scheme = evaluate_point(marked, model, out.basis).vanishes;
  out.in_minimality_locus = evaluate_point(locus, model, out.basis).vanishes;
  return out;
}

}  // namespace

AppendixReport appendix_repro(unsigned threads) {
  SchemeOptions opts = appendix_options();
  opts.threads = threads;
  SchemeModel model(appendix_module(), opts);
  AppendixReport r;
  const auto& ring = model.ring();
  r.c_count = model.slots(0).size();
  r.b_count = model.length() >= 1 ? model.slots(1).size() : 0;
  r.a_count = model.length() >= 2 ? model.slots(2).size() : 0;

  const auto& G = model.generic_set();
  for (const auto& e : G.elements) {
    ModuleTerm head{e.head.term, 0, 0};
    Poly<ParamPoly> p;
    for (const auto& [t, c] : G.poly(&e - G.elements.data())) p.add(ModuleTerm{t.term, 0, 0}, c);
    r.marked_latex.push_back(element_latex(p, kNvars, &ring, &head));
  }
  auto M1 = model.matrix(1);
  r.delta1.assign(M1.rows(), std::vector<std::string>(M1.cols()));
  for (std::size_t i = 0; i < M1.rows(); ++i)
    for (std::size_t j = 0; j < M1.cols(); ++j) r.delta1[i][j] = entry_latex(M1, i, j, kNvars, &ring);
  auto M2 = model.matrix(2);
  for (std::size_t i = 0; i < M2.rows(); ++i) r.delta2.push_back(entry_latex(M2, i, 0, kNvars, &ring));

  auto marked = marked_scheme_ideal(model);
  auto locus = minimality_locus_ideal(model);
  for (auto p : locus.constant_slots) r.locus_slots.push_back(ring.name(p));
  r.marked_generators = marked.generators.size();
  r.syzygy_generators = syzygy_scheme_ideal(model).generators.size();
  for (const auto& P : resolution_scheme_ideals(model)) r.resolution_generators.push_back(P.generators.size());
  r.syzygy_contains_marked = syzygy_contains_marked(model).holds;

  for (const auto& spec : appendix_ideals())
    r.ideals.push_back(build_ideal(spec, model, marked, locus.presentation, threads));
  return r;
}

namespace {

std::string join(const std::vector<long>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string verdict(Minimality m) {
  switch (m) {
    case Minimality::Minimal: return "minimal";
    case Minimality::NotMinimal: return "not minimal";
    case Minimality::Undecided: return "undecided";
  }
  return "?";
}

}  // namespace

std::string appendix_text(const AppendixReport& r) {
  std::ostringstream o;
  o << "J = (x3^2, x3*x2, x2^3, x3*x1^2) in K[x0,x1,x2,x3]\n";
  o << "parameters: C " << r.c_count << ", B " << r.b_count << ", A " << r.a_count << "\n";
  o << "generators: U " << r.marked_generators << ", S " << r.syzygy_generators;
  for (std::size_t t = 0; t < r.resolution_generators.size(); ++t)
    o << ", S^(" << t + 1 << ") " << r.resolution_generators[t];
  o << "\n";
  o << "S contains U after B -> b(C): " << (r.syzygy_contains_marked ? "yes" : "no") << "\n";
  o << "constant slots of d_1:";
  for (const auto& s : r.locus_slots) o << " " << s;
  o << "\n\ngeneric marked set:\n";
  for (const auto& l : r.marked_latex) o << "  " << l << "\n";
  o << "d_1:\n";
  for (std::size_t i = 0; i < r.delta1.size(); ++i)
    for (std::size_t j = 0; j < r.delta1[i].size(); ++j)
      o << "  (" << i + 1 << "," << j + 1 << ") " << r.delta1[i][j] << "\n";
  o << "d_2:\n";
  for (std::size_t i = 0; i < r.delta2.size(); ++i) o << "  (" << i + 1 << ",1) " << r.delta2[i] << "\n";
  for (const auto& I : r.ideals) {
    o << "\n" << I.name << ": J-resolution " << verdict(I.minimality.verdict);
    if (I.minimality.witness) {
      const auto& w = *I.minimality.witness;
      o << " (d_" << w.level << "[" << w.row + 1 << "," << w.col + 1 << "] = " << to_string(w.value) << ")";
    }
    o << "\n  in Mf(J): " << (I.in_marked_scheme ? "yes" : "no")
      << ", in minimality locus: " << (I.in_minimality_locus ? "yes" : "no") << "\n";
    o << "  HF(R/I, 3..6) = " << join(I.hilbert) << "\n";
    o << "  Hartshorne-Rao HF(0..4) = " << join(I.hartshorne_rao) << "\n";
    o << "  marked basis:\n";
    std::istringstream lines(marked_set_text(I.basis));
    for (std::string l; std::getline(lines, l);) o << "    " << l << "\n";
    o << "  Betti table of the J-resolution:\n" << betti_table(I.resolution).render();
    o << "  after minimizing:\n" << I.minimized.betti.render();
  }
  return o.str();
}

Json appendix_json(const AppendixReport& r) {
  Json j;
  j["schema"] = "mbv1";
  j["kind"] = "appendix";
  j["parameters"] = Json{{"C", r.c_count}, {"B", r.b_count}, {"A", r.a_count}};
  j["generators"] = Json{{"U", r.marked_generators}, {"S", r.syzygy_generators}, {"S_t", r.resolution_generators}};
  j["syzygy_contains_marked"] = r.syzygy_contains_marked;
  j["locus_slots"] = r.locus_slots;
  j["marked_latex"] = r.marked_latex;
  j["delta1"] = r.delta1;
  j["delta2"] = r.delta2;
  Json ideals = Json::array();
  for (const auto& I : r.ideals) {
    Json x;
    x["name"] = I.name;
    x["minimal"] = I.minimality.verdict == Minimality::Minimal;
    x["in_marked_scheme"] = I.in_marked_scheme;
    x["in_minimality_locus"] = I.in_minimality_locus;
    x["hilbert_3_6"] = I.hilbert;
    x["hartshorne_rao_0_4"] = I.hartshorne_rao;
    x["resolution"] = to_json(I.resolution, kNvars);
    x["minimal_betti"] = to_json(I.minimized.betti);
    ideals.push_back(x);
  }
  j["ideals"] = ideals;
  return j;
}

}  // namespace markedres
