#include "cli.hpp"

#include "markedres/appendix.hpp"
#include "markedres/oracle.hpp"
#include "markedres/parse.hpp"
#include "markedres/render.hpp"
#include "markedres/scheme.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace markedres::cli {

namespace {

struct Negative {
  Json json;
};

struct Options {
  std::optional<int> ring;
  std::optional<int> degree_cap;
  bool json = false;
  bool oracle = false;
  unsigned threads = 1;
  std::string input;
  std::string basis_file;
  std::optional<int> degree;
  std::vector<std::string> lets;
  std::string names;
  int index_base = 0;
  bool negative = false;
  std::string ideal = "marked";
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// literal on the command line, or a file holding one
std::string literal_text(const std::string& input) {
  if (input.empty()) throw std::invalid_argument("missing module literal");
  std::error_code ec;
  if (std::filesystem::is_regular_file(input, ec)) return slurp(input);
  return input;
}

ModulePtr load_module(const Options& o) {
  auto lit = parse_module_literal(literal_text(o.input), o.ring);
  if (!lit.monomial()) throw std::invalid_argument("module literal must list monic terms");
  return std::make_shared<const QuasiStableModule>(*lit.nvars, lit.shifts, lit.terms(), o.degree_cap);
}

MarkedFile load_marked(const Options& o) {
  std::string path = o.basis_file.empty() ? o.input : o.basis_file;
  if (path.empty()) throw std::invalid_argument("missing --basis-file");
  MarkedFile f = parse_marked_file(slurp(path), o.ring);
  if (o.lets.empty()) return f;
  std::vector<std::optional<ParamPoly>> values(f.ring.size());
  for (const auto& l : o.lets) {
    auto eq = l.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("--let expects name=value, got " + l);
    auto p = f.ring.find(l.substr(0, eq));
    if (!p) throw std::invalid_argument("unknown parameter " + l.substr(0, eq));
    values[*p] = ParamPoly(parse_rational(l.substr(eq + 1)));
  }
  for (auto& [h, t] : f.elements)
    t = map_coefficients<ParamPoly>(t, [&](const ParamPoly& c) { return substitute(c, values); });
  return f;
}

MarkedSet<Rational> load_basis_set(const Options& o) {
  MarkedFile f = load_marked(o);
  if (!f.is_numeric()) throw std::invalid_argument("this command needs numeric coefficients (use --let)");
  return f.rational_set(o.degree_cap);
}

SchemeOptions scheme_options(const Options& o) {
  SchemeOptions s;
  s.threads = o.threads;
  std::vector<std::string> names;
  std::stringstream ss(o.names);
  for (std::string n; std::getline(ss, n, ',');)
    if (!n.empty()) names.push_back(n);
  auto fam = [&](const std::string& name) {
    return FamilyOptions{name, o.index_base, o.negative ? -1 : 1, Numbering::ColumnMajor, {}};
  };
  s.marked = fam(names.empty() ? "C" : names[0]);
  for (std::size_t t = 1; t < 8; ++t) {
    std::string name = t < names.size() ? names[t] : SchemeOptions{}.level(t).name;
    s.levels.push_back(fam(name));
  }
  return s;
}

std::string terms_line(const std::vector<ModuleTerm>& ts, bool comps) {
  std::string s;
  for (std::size_t i = 0; i < ts.size(); ++i) s += (i ? ", " : "") + to_string(ts[i], comps);
  return s;
}

std::string witness_text(const QuasiStableModule& U, std::size_t element, int variable, const std::string& rem) {
  return "x" + std::to_string(variable) + " * f[" + to_string(U.pommaret_basis()[element], U.rank() > 1) +
         "] leaves remainder " + rem;
}

Json terms_json(const std::vector<ModuleTerm>& ts, bool comps) {
  Json j = Json::array();
  for (const auto& t : ts) j.push_back(to_string(t, comps));
  return j;
}

// ---- commands ----

int cmd_pommaret(const Options& o, std::ostream& out) {
  auto U = load_module(o);
  auto inv = numeric_invariants(*U);
  bool comps = U->rank() > 1;
  Json j;
  j["schema"] = "mbv1";
  j["kind"] = "pommaret";
  j["pommaret_basis"] = terms_json(U->pommaret_basis(), comps);
  j["minimal_basis"] = terms_json(U->minimal_basis(), comps);
  j["stable"] = U->is_stable();
  j["D"] = inv.D;
  j["reg"] = inv.reg;
  j["pdim"] = inv.pdim;
  j["ranks"] = to_json(inv.ranks);
  j["formula_agrees"] = inv.formula_agrees;
  bool partition_ok = true;
  if (o.oracle) {
    // every term of U_s sits in exactly one cone
    for (int s = 0; s <= U->regularity() + 3; ++s)
      for (const auto& t : U->terms_of_degree(s)) {
        int hits = 0;
        for (const auto& g : U->pommaret_basis())
          if (cone_contains(g, t, std::nullopt, U->nvars())) ++hits;
        if (hits != (U->contains(t) ? 1 : 0)) partition_ok = false;
      }
    j["cone_partition"] = partition_ok;
  }
  if (o.json) {
    out << j.dump(2) << "\n";
  } else {
    out << "Pommaret basis: " << terms_line(U->pommaret_basis(), comps) << "\n";
    out << "stable: " << (U->is_stable() ? "yes" : "no") << "\n";
    out << "D = " << inv.D << ", reg = " << inv.reg << ", pdim = " << inv.pdim << "\n";
    out << "r table:\n" << inv.ranks.render();
    if (!inv.formula_agrees) out << "closed rank formula differs (terms with min index 0); direct count shown\n";
    if (o.oracle) out << "cone partition up to degree " << U->regularity() + 3 << ": " << (partition_ok ? "ok" : "FAILED") << "\n";
  }
  return partition_ok ? 0 : 1;
}

int cmd_check_quasistable(const Options& o, std::ostream& out) {
  auto lit = parse_module_literal(literal_text(o.input), o.ring);
  if (!lit.monomial()) throw std::invalid_argument("module literal must list monic terms");
  auto w = quasi_stability_obstruction(*lit.nvars, lit.terms());
  Json j;
  j["schema"] = "mbv1";
  j["kind"] = "quasi-stability";
  j["quasi_stable"] = !w.has_value();
  bool comps = lit.shifts.size() > 1;
  if (w) j["witness"] = Json{{"generator", to_string(w->generator, comps)}, {"i", w->i}, {"j", w->j}};
  if (o.json) {
    out << j.dump(2) << "\n";
  } else if (!w) {
    out << "quasi-stable: yes\n";
  } else {
    out << "quasi-stable: no\nwitness: generator " << to_string(w->generator, comps) << ", no power of x" << w->j
        << " replaces x" << w->i << "\n";
  }
  return w ? 1 : 0;
}

int cmd_marked_check(const Options& o, std::ostream& out) {
  MarkedFile f = load_marked(o);
  Json j;
  j["schema"] = "mbv1";
  j["kind"] = "marked-check";
  if (!f.is_numeric()) {
    auto F = f.marked_set(o.degree_cap);
    const auto& U = *F.module;
    std::vector<ParamPoly> conds;
    auto pairs = prolongation_pairs(U);
    auto rems = detail::parallel_map<ModuleElement<ParamPoly>>(pairs.size(), o.threads, [&](std::size_t k) {
      return reduce(F.poly(pairs[k].first).shifted(Term::var(pairs[k].second)), F).remainder;
    });
    for (const auto& r : rems)
      for (auto& c : coefficient_list(r)) conds.push_back(c);
    conds = canonical_generators(conds);
    j["basis"] = conds.empty();
    Json cj = Json::array();
    for (const auto& c : conds) cj.push_back(to_string(c, &f.ring));
    j["conditions"] = cj;
    if (o.json) {
      out << j.dump(2) << "\n";
    } else if (conds.empty()) {
      out << "marked basis: yes, for every parameter value\n";
    } else {
      out << "marked basis: only where these vanish\n";
      for (const auto& c : conds) out << "  " << to_string(c, &f.ring) << "\n";
      for (std::size_t k = 0; k < pairs.size(); ++k)
        if (!rems[k].is_zero()) {
          out << "witness: "
              << witness_text(U, pairs[k].first, pairs[k].second,
                              element_text(rems[k], U.nvars(), &f.ring, nullptr, U.rank() > 1))
              << "\n";
          break;
        }
    }
    return conds.empty() ? 0 : 1;
  }
  auto F = f.rational_set(o.degree_cap);
  const auto& U = *F.module;
  auto check = is_marked_basis(F, o.threads);
  j["basis"] = check.is_basis;
  std::string wtext;
  if (check.witness) {
    const auto& w = *check.witness;
    wtext = witness_text(U, w.element, w.variable, element_text(w.remainder, U.nvars(), nullptr, nullptr, U.rank() > 1));
    j["witness"] = Json{{"element", to_string(U.pommaret_basis()[w.element], U.rank() > 1)},
                        {"variable", w.variable},
                        {"remainder", element_text(w.remainder, U.nvars(), nullptr, nullptr, U.rank() > 1)}};
  }
  bool agree = true;
  if (o.oracle) {
    int lo = U.pommaret_basis().empty() ? 0 : U.pommaret_basis().front().degree();
    bool all_split = true;
    for (int s = lo; s <= U.regularity() + 2; ++s) all_split = all_split && direct_sum_check(F, s);
    agree = all_split == check.is_basis;
    j["oracle_agrees"] = agree;
  }
  if (o.json) {
    out << j.dump(2) << "\n";
  } else {
    out << "marked basis: " << (check.is_basis ? "yes" : "no") << "\n";
    if (check.witness) out << "witness: " << wtext << "\n";
    if (o.oracle) out << "direct-sum oracle: " << (agree ? "agrees" : "DISAGREES") << "\n";
  }
  return check.is_basis && agree ? 0 : 1;
}

int cmd_truncate(const Options& o, std::ostream& out) {
  if (!o.degree) throw std::invalid_argument("truncate needs --degree");
  auto F = load_basis_set(o);
  auto check = is_marked_basis(F, o.threads);
  if (!check.is_basis) {
    out << "not a marked basis\n";
    return 1;
  }
  auto T = truncate(F, *o.degree);
  if (o.json) {
    Json j;
    j["schema"] = "mbv1";
    j["kind"] = "marked-set";
    j["heads"] = terms_json(T.module->pommaret_basis(), T.module->rank() > 1);
    j["matrix"] = to_json(to_matrix(T));
    out << j.dump(2) << "\n";
  } else {
    out << marked_file_text(T);
  }
  return 0;
}

int not_basis(const MarkedSet<Rational>& F, const Options& o, std::ostream& out) {
  auto check = is_marked_basis(F, o.threads);
  if (check.is_basis) return 0;
  const auto& w = *check.witness;
  const auto& U = *F.module;
  out << "not a marked basis\nwitness: "
      << witness_text(U, w.element, w.variable, element_text(w.remainder, U.nvars(), nullptr, nullptr, U.rank() > 1))
      << "\n";
  return 1;
}

int cmd_syzygies(const Options& o, std::ostream& out) {
  auto F = load_basis_set(o);
  if (int rc = not_basis(F, o, out)) return rc;
  auto S = fundamental_syzygies(F, o.threads);
  if (o.json) {
    Json j;
    j["schema"] = "mbv1";
    j["kind"] = "syzygies";
    j["matrix"] = to_json(to_matrix(S));
    out << j.dump(2) << "\n";
  } else {
    out << marked_set_text(S);
  }
  return 0;
}

// Euler characteristic of the resolution against the oracle dimension of (F)_s
bool euler_check(const Resolution<Rational>& res, const MarkedSet<Rational>& F) {
  const auto& U = *F.module;
  std::vector<ModuleElement<Rational>> polys(F.polys.begin(), F.polys.end());
  for (int s = 0; s <= U.regularity() + 3; ++s) {
    long chi = 0;
    for (std::size_t t = 0; t < res.maps.size(); ++t)
      chi += (t % 2 ? -1 : 1) * free_dimension(U.nvars(), res.maps[t].col_shifts(), s);
    if (chi != static_cast<long>(component_basis(U.nvars(), U.shifts(), polys, s).dim())) return false;
  }
  return true;
}

int cmd_resolution(const Options& o, std::ostream& out) {
  auto F = load_basis_set(o);
  if (int rc = not_basis(F, o, out)) return rc;
  auto res = u_resolution(F, o.threads);
  int nv = F.module->nvars();
  bool ok = is_complex(res) && (!o.oracle || euler_check(res, F));
  if (o.json) {
    Json j = to_json(res, nv);
    j["complex"] = is_complex(res);
    out << j.dump(2) << "\n";
  } else {
    out << resolution_text(res, nv);
    out << "Betti table:\n" << betti_table(res).render();
    if (o.oracle) out << "complex and Euler characteristic: " << (ok ? "ok" : "FAILED") << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_betti(const Options& o, std::ostream& out) {
  MarkedSet<Rational> F;
  if (!o.basis_file.empty())
    F = load_basis_set(o);
  else
    F = zero_tail_set<Rational>(load_module(o));
  if (int rc = not_basis(F, o, out)) return rc;
  auto res = u_resolution(F, o.threads);
  auto r = betti_table(res);
  auto m = minimize(res);
  bool bounded = m.betti.bounded_by(r);
  Json j;
  j["schema"] = "mbv1";
  j["kind"] = "betti";
  j["r"] = to_json(r);
  j["beta"] = to_json(m.betti);
  j["bounded"] = bounded;
  if (o.json) {
    out << j.dump(2) << "\n";
  } else {
    out << "r:\n" << r.render() << "beta:\n" << m.betti.render();
  }
  return bounded ? 0 : 1;
}

std::string witness_string(const ConstantEntry<Rational>& w) {
  return "\u2202_" + std::to_string(w.level) + "[" + std::to_string(w.row + 1) + "," + std::to_string(w.col + 1) +
         "] = " + to_string(w.value);
}

int cmd_minimality(const Options& o, std::ostream& out) {
  auto F = load_basis_set(o);
  if (int rc = not_basis(F, o, out)) return rc;
  auto res = u_resolution(F, o.threads);
  auto rep = is_minimal(res);
  bool minimal = rep.verdict == Minimality::Minimal;
  if (o.json) {
    Json j;
    j["schema"] = "mbv1";
    j["kind"] = "minimality";
    j["minimal"] = minimal;
    if (rep.witness)
      j["witness"] = Json{{"level", rep.witness->level},
                          {"row", rep.witness->row + 1},
                          {"col", rep.witness->col + 1},
                          {"value", to_string(rep.witness->value)}};
    j["shortcut_agrees"] = rep.shortcut_agrees;
    j["propagation_holds"] = rep.propagation_holds;
    out << j.dump(2) << "\n";
  } else {
    out << (minimal ? "minimal" : "not minimal") << "\n";
    if (rep.witness) out << "witness: " << witness_string(*rep.witness) << "\n";
    out << "first-syzygy shortcut " << (rep.shortcut_agrees ? "agrees" : "DISAGREES") << "\n";
  }
  return minimal ? 0 : 1;
}

int cmd_cwl(const Options& o, std::ostream& out) {
  auto F = load_basis_set(o);
  if (int rc = not_basis(F, o, out)) return rc;
  auto c = componentwise_certificate(F);
  if (o.json) {
    out << Json{{"schema", "mbv1"}, {"kind", "cwl-certificate"}, {"certified", c.certified}, {"reason", c.reason}}.dump(2)
        << "\n";
  } else {
    out << (c.certified ? "componentwise linear: certified" : "componentwise linear: unknown") << "\n"
        << "reason: " << c.reason << "\n";
  }
  return c.certified ? 0 : 1;
}

int cmd_groebner(const Options& o, std::ostream& out) {
  auto F = load_basis_set(o);
  if (int rc = not_basis(F, o, out)) return rc;
  bool ob = groebner_obstruction(F);
  if (o.json)
    out << Json{{"schema", "mbv1"}, {"kind", "groebner-obstruction"}, {"obstruction", ob}}.dump(2) << "\n";
  else
    out << (ob ? "obstruction: not a Groebner basis for any term order with this initial ideal"
               : "no obstruction found")
        << "\n";
  return ob ? 0 : 1;
}

void print_presentation(const SchemePresentation& P, std::ostream& out, const std::string& title) {
  out << title << ": " << P.generators.size() << " generators\n";
  for (const auto& g : P.generators) out << "  " << to_string(g, &P.ring) << "\n";
}

std::string families_line(const ParameterRing& ring) {
  std::string s;
  for (const auto& f : ring.families())
    s += (s.empty() ? "" : ", ") + f.name + " " + std::to_string(f.count);
  return s;
}

int cmd_scheme_ideal(const Options& o, std::ostream& out) {
  SchemeModel model(load_module(o), scheme_options(o));
  auto P = marked_scheme_ideal(model);
  P.ring = ParameterRing{}.with_family(model.family(0).name, model.family(0).count, model.family(0).index_base);
  if (o.json) {
    out << to_json(P).dump(2) << "\n";
    return 0;
  }
  const auto& ring = model.ring();
  out << "generic marked set:\n" << marked_set_text(model.generic_set(), &ring);
  if (P.generators.empty())
    out << "Mf(U) = affine space of dimension " << model.slots(0).size() << "\n";
  else
    print_presentation(P, out, "U");
  return 0;
}

int cmd_syzygy_scheme(const Options& o, std::ostream& out) {
  SchemeModel model(load_module(o), scheme_options(o));
  auto P = syzygy_scheme_ideal(model);
  auto c = syzygy_contains_marked(model);
  auto sub = substitution_map(model);
  if (o.json) {
    Json j = to_json(P);
    j["contains_marked"] = c.holds;
    Json m = Json::object();
    for (const auto& [p, v] : sub) m[model.ring().name(p)] = to_string(v, &model.ring());
    j["substitution"] = m;
    out << j.dump(2) << "\n";
    return c.holds ? 0 : 1;
  }
  const auto& ring = model.ring();
  out << "parameters: " << families_line(ring) << "\n";
  if (model.length() >= 1) out << "M_1:\n" << matrix_text(model.matrix(1), model.modules()[0]->nvars(), &ring);
  print_presentation(P, out, "S");
  out << "substitution B -> b(C):\n";
  for (const auto& [p, v] : sub) out << "  " << ring.name(p) << " = " << to_string(v, &ring) << "\n";
  out << "S contains U: " << (c.holds ? "yes" : "no") << "\n";
  return c.holds ? 0 : 1;
}

int cmd_resolution_scheme(const Options& o, std::ostream& out) {
  SchemeModel model(load_module(o), scheme_options(o));
  auto Ps = resolution_scheme_ideals(model);
  if (o.json) {
    Json j = Json::array();
    for (const auto& P : Ps) j.push_back(to_json(P));
    out << j.dump(2) << "\n";
    return 0;
  }
  const auto& ring = model.ring();
  out << "parameters: " << families_line(ring) << "\n";
  int nv = model.modules()[0]->nvars();
  for (std::size_t t = 0; t <= model.length(); ++t) out << "M_" << t << ":\n" << matrix_text(model.matrix(t), nv, &ring);
  for (const auto& P : Ps) print_presentation(P, out, "S^(" + std::to_string(P.level) + ")");
  return 0;
}

int cmd_minimality_locus(const Options& o, std::ostream& out) {
  SchemeModel model(load_module(o), scheme_options(o));
  auto L = minimality_locus_ideal(model);
  const auto& ring = model.ring();
  if (o.json) {
    Json j = to_json(L.presentation);
    Json slots = Json::array();
    for (auto p : L.constant_slots) slots.push_back(ring.name(p));
    j["constant_slots"] = slots;
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "constant slots:";
  for (auto p : L.constant_slots) out << " " << ring.name(p);
  if (L.constant_slots.empty()) out << " none";
  out << "\n";
  print_presentation(L.presentation, out, "locus");
  return 0;
}

int cmd_evaluate(const Options& o, std::ostream& out) {
  auto F = load_basis_set(o);
  SchemeModel model(F.module, scheme_options(o));
  std::vector<SchemePresentation> Ps;
  if (o.ideal == "marked")
    Ps.push_back(marked_scheme_ideal(model));
  else if (o.ideal == "syzygy")
    Ps.push_back(syzygy_scheme_ideal(model));
  else if (o.ideal == "resolution")
    Ps = resolution_scheme_ideals(model);
  else if (o.ideal == "locus")
    Ps.push_back(minimality_locus_ideal(model).presentation);
  else
    throw std::invalid_argument("--ideal must be marked, syzygy, resolution or locus");
  bool all = true;
  Json j;
  j["schema"] = "mbv1";
  j["kind"] = "evaluation";
  j["ideal"] = o.ideal;
  Json per = Json::array();
  for (const auto& P : Ps) {
    auto e = evaluate_point(P, model, F);
    all = all && e.vanishes;
    std::size_t nonzero = 0;
    for (const auto& r : e.residues) nonzero += sgn(r) != 0;
    per.push_back(Json{{"kind", kind_name(P.kind)}, {"vanishes", e.vanishes}, {"nonzero", nonzero}});
    if (!o.json)
      out << kind_name(P.kind) << (P.kind == SchemePresentation::Kind::Resolution ? " " + std::to_string(P.level) : "")
          << ": " << (e.vanishes ? "vanishes" : "does not vanish (" + std::to_string(nonzero) + " nonzero)") << "\n";
  }
  j["results"] = per;
  j["vanishes"] = all;
  if (o.json) out << j.dump(2) << "\n";
  return all ? 0 : 1;
}

int cmd_appendix(const Options& o, std::ostream& out) {
  auto r = appendix_repro(o.threads);
  if (o.json)
    out << appendix_json(r).dump(2) << "\n";
  else
    out << appendix_text(r);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"marked bases, syzygies and resolutions over quasi-stable modules", "mbres"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub, bool module_input, bool basis_input) {
    sub->add_option("--ring", o.ring, "number of variables x0..x{N-1}")->check(CLI::Range(1, kMaxVars));
    sub->add_option("--degree-cap", o.degree_cap, "cap for Pommaret completion")->check(CLI::PositiveNumber);
    sub->add_flag("--json", o.json, "JSON output (schema mbv1)");
    sub->add_flag("--oracle", o.oracle, "run linear-algebra cross-checks");
    sub->add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1, 256));
    if (module_input) sub->add_option("input", o.input, "module literal or file holding one");
    if (basis_input) {
      sub->add_option("--basis-file", o.basis_file, "marked-set file");
      sub->add_option("--let", o.lets, "substitute a parameter, name=value");
      if (!module_input) sub->add_option("input", o.input, "marked-set file");
    }
  };
  auto scheme_flags = [&](CLI::App* sub) {
    sub->add_option("--names", o.names, "comma-separated family names, e.g. c,b,d");
    sub->add_option("--index-base", o.index_base, "first parameter index");
    sub->add_flag("--negative", o.negative, "tails written as head - sum(param*term)");
  };
  std::map<CLI::App*, std::function<int(const Options&, std::ostream&)>> handlers;
  auto add = [&](const std::string& name, const std::string& help, bool module_input, bool basis_input,
                 std::function<int(const Options&, std::ostream&)> h) {
    auto* s = app.add_subcommand(name, help);
    common(s, module_input, basis_input);
    handlers[s] = std::move(h);
    return s;
  };
  add("pommaret", "Pommaret basis and invariants of a monomial module", true, false, cmd_pommaret);
  add("check-quasistable", "quasi-stability test", true, false, cmd_check_quasistable);
  add("marked-check", "marked-basis criterion", false, true, cmd_marked_check);
  add("truncate", "marked basis of the truncation", false, true, cmd_truncate)
      ->add_option("--degree", o.degree, "truncation degree");
  add("syzygies", "fundamental syzygies", false, true, cmd_syzygies);
  add("resolution", "U-resolution", false, true, cmd_resolution);
  add("betti", "r and beta tables", true, true, cmd_betti);
  add("minimality", "minimality of the U-resolution", false, true, cmd_minimality);
  add("cwl-certificate", "componentwise-linearity certificate", false, true, cmd_cwl);
  add("groebner-obstruction", "Groebner-basis obstruction", false, true, cmd_groebner);
  scheme_flags(add("scheme-ideal", "equations of the marked scheme", true, false, cmd_scheme_ideal));
  scheme_flags(add("syzygy-scheme", "equations of the syzygy scheme", true, false, cmd_syzygy_scheme));
  scheme_flags(add("resolution-scheme", "equations S^(t) of the resolution scheme", true, false, cmd_resolution_scheme));
  scheme_flags(add("minimality-locus", "equations of the minimality locus", true, false, cmd_minimality_locus));
  auto* ev = add("evaluate", "evaluate scheme equations at a concrete marked basis", false, true, cmd_evaluate);
  scheme_flags(ev);
  ev->add_option("--ideal", o.ideal, "marked | syzygy | resolution | locus");
  add("appendix-repro", "reproduce the curves-in-P3 pipeline", false, false, cmd_appendix);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }
  try {
    for (auto& [sub, h] : handlers)
      if (sub->parsed()) return h(o, out);
  } catch (const ParseError& e) {
    err << "syntax error: " << e.what() << "\n";
    return 2;
  } catch (const NotQuasiStable& e) {
    err << "not quasi-stable: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace markedres::cli
