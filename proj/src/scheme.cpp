#include "markedres/scheme.hpp"

#include <set>
#include <stdexcept>

namespace markedres {

FamilyOptions SchemeOptions::level(std::size_t t) const {
  if (t - 1 < levels.size()) return levels[t - 1];
  static const char* names[] = {"B", "A", "D", "E", "G", "H", "K", "L", "N"};
  FamilyOptions f;
  f.name = t - 1 < std::size(names) ? names[t - 1] : "B" + std::to_string(t);
  return f;
}

std::string kind_name(SchemePresentation::Kind k) {
  switch (k) {
    case SchemePresentation::Kind::Marked: return "marked";
    case SchemePresentation::Kind::Syzygy: return "syzygy";
    case SchemePresentation::Kind::Resolution: return "resolution";
    case SchemePresentation::Kind::MinimalityLocus: return "minimality-locus";
  }
  return "?";
}

namespace {

using EntryKey = std::pair<std::size_t, std::size_t>;  // (row, col)

// Numbers the slot terms of each entry according to the family options.
std::vector<Slot> number_slots(const std::map<EntryKey, std::vector<Term>>& entries, const FamilyOptions& f,
                               std::size_t rows, std::size_t cols, std::size_t offset) {
  std::vector<EntryKey> order;
  switch (f.numbering) {
    case Numbering::ColumnMajor:
      for (std::size_t c = 0; c < cols; ++c)
        for (std::size_t r = 0; r < rows; ++r) order.emplace_back(r, c);
      break;
    case Numbering::RowMajor:
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) order.emplace_back(r, c);
      break;
    case Numbering::Explicit: {
      order = f.order;
      std::set<EntryKey> listed(order.begin(), order.end());
      for (const auto& [k, terms] : entries)
        if (!terms.empty() && !listed.count(k))
          throw std::invalid_argument("explicit numbering for family " + f.name + " misses entry (" +
                                      std::to_string(k.first + 1) + "," + std::to_string(k.second + 1) + ")");
      break;
    }
  }
  std::vector<Slot> slots;
  std::size_t next = offset;
  for (const auto& k : order) {
    auto it = entries.find(k);
    if (it == entries.end()) continue;
    for (const auto& t : it->second) slots.push_back(Slot{next++, k.first, k.second, t});
  }
  return slots;
}

ModuleElement<ParamPoly> slot_tail(const std::vector<Slot>& slots, std::size_t col, int sign,
                                   const std::vector<int>& row_shifts) {
  ModuleElement<ParamPoly> tail;
  for (const auto& s : slots) {
    if (s.col != col) continue;
    ParamPoly p = ParamPoly::var(s.param);
    if (sign < 0) p = -p;
    tail.add(ModuleTerm{s.term, static_cast<int>(s.row), row_shifts[s.row]}, p);
  }
  return tail;
}

}  // namespace

struct SchemeModel::Cache {
  std::once_flag once;
  std::vector<UniqueWriting<ParamPoly>> writings;
};

SchemeModel::SchemeModel(ModulePtr U, SchemeOptions opts)
    : U_(std::move(U)), opts_(std::move(opts)), cache_(std::make_shared<Cache>()) {
  modules_.push_back(U_);
  while (!prolongation_pairs(*modules_.back()).empty()) modules_.push_back(syzygy_module(*modules_.back()));

  // marked set: one parameter per (head, same-degree sous-escalier term)
  {
    std::map<EntryKey, std::vector<Term>> entries;
    for (std::size_t j = 0; j < U_->size(); ++j)
      for (const auto& b : U_->sous_escalier(U_->pommaret_basis()[j].degree()))
        entries[{static_cast<std::size_t>(b.component), j}].push_back(b.term);
    auto slots = number_slots(entries, opts_.marked, static_cast<std::size_t>(U_->rank()), U_->size(), 0);
    ring_ = ring_.with_family(opts_.marked.name, slots.size(), opts_.marked.index_base);
    std::map<ModuleTerm, ModuleElement<ParamPoly>> tails;
    for (std::size_t j = 0; j < U_->size(); ++j)
      tails[U_->pommaret_basis()[j]] = slot_tail(slots, j, opts_.marked.sign, U_->shifts());
    generic_ = make_marked_set<ParamPoly>(U_, tails);
    slots_.push_back(std::move(slots));
  }

  for (std::size_t t = 1; t < modules_.size(); ++t) {
    const auto& prev = *modules_[t - 1];
    const auto& cur = modules_[t];
    FamilyOptions f = opts_.level(t);
    std::map<EntryKey, std::vector<Term>> entries;
    for (std::size_t c = 0; c < cur->size(); ++c) {
      const ModuleTerm& h = cur->pommaret_basis()[c];
      auto support = suppsyz_support(prev, static_cast<std::size_t>(h.component), h.term.max_var());
      for (std::size_t k = 1; k < support.size(); ++k)
        entries[{static_cast<std::size_t>(support[k].component), c}].push_back(support[k].term);
    }
    auto slots = number_slots(entries, f, prev.size(), cur->size(), ring_.size());
    ring_ = ring_.with_family(f.name, slots.size(), f.index_base);
    std::map<ModuleTerm, ModuleElement<ParamPoly>> tails;
    for (std::size_t c = 0; c < cur->size(); ++c)
      tails[cur->pommaret_basis()[c]] = slot_tail(slots, c, f.sign, cur->shifts());
    presyz_.push_back(make_marked_set<ParamPoly>(cur, tails));
    slots_.push_back(std::move(slots));
  }
}

PolyMatrix<ParamPoly> SchemeModel::matrix(std::size_t t) const {
  return t == 0 ? to_matrix(generic_) : to_matrix(presyz_[t - 1]);
}

const ParameterFamily& SchemeModel::family(std::size_t t) const { return ring_.families()[t]; }

std::vector<ParamPoly> coefficient_list(const ModuleElement<ParamPoly>& e) {
  std::vector<ParamPoly> out;
  for (const auto& [t, c] : e) out.push_back(c);
  return out;
}

const std::vector<UniqueWriting<ParamPoly>>& SchemeModel::generic_writings() const {
  std::call_once(cache_->once, [&] {
    if (length() == 0) return;
    const auto& U1 = *modules_[1];
    cache_->writings = detail::parallel_map<UniqueWriting<ParamPoly>>(U1.size(), opts_.threads, [&](std::size_t c) {
      const ModuleTerm& h = U1.pommaret_basis()[c];
      return reduce(generic_.poly(static_cast<std::size_t>(h.component)).shifted(h.term), generic_);
    });
  });
  return cache_->writings;
}

SchemePresentation marked_scheme_ideal(const SchemeModel& model) {
  SchemePresentation P;
  P.kind = SchemePresentation::Kind::Marked;
  P.ring = model.ring();
  std::vector<ParamPoly> gens;
  for (const auto& w : model.generic_writings())
    for (auto& g : coefficient_list(w.remainder)) gens.push_back(std::move(g));
  P.generators = canonical_generators(gens);
  return P;
}

namespace {

std::vector<ParamPoly> product_coefficients(const SchemeModel& model, std::size_t t) {
  auto prod = matrix_multiply(model.matrix(t - 1), model.matrix(t));
  std::vector<ParamPoly> gens;
  for (std::size_t r = 0; r < prod.rows(); ++r)
    for (std::size_t c = 0; c < prod.cols(); ++c)
      for (auto& g : coefficient_list(prod(r, c))) gens.push_back(std::move(g));
  return gens;
}

}  // namespace

SchemePresentation syzygy_scheme_ideal(const SchemeModel& model) {
  SchemePresentation P;
  P.kind = SchemePresentation::Kind::Syzygy;
  P.level = 1;
  P.ring = model.ring();
  if (model.length() >= 1) P.generators = canonical_generators(product_coefficients(model, 1));
  return P;
}

std::vector<SchemePresentation> resolution_scheme_ideals(const SchemeModel& model) {
  std::vector<SchemePresentation> out;
  for (std::size_t t = 1; t <= model.length(); ++t) {
    SchemePresentation P;
    P.kind = SchemePresentation::Kind::Resolution;
    P.level = static_cast<int>(t);
    P.ring = model.ring();
    P.generators = canonical_generators(product_coefficients(model, t));
    out.push_back(std::move(P));
  }
  return out;
}

namespace {

struct SubstitutionResult {
  std::vector<std::pair<std::size_t, ParamPoly>> values;
  bool outside = false;
};

SubstitutionResult substitution(const SchemeModel& model) {
  SubstitutionResult out;
  if (model.length() == 0) return out;
  const auto& writings = model.generic_writings();
  const auto& U = *model.modules()[0];
  int sign = model.options().level(1).sign;
  std::set<std::pair<std::size_t, ModuleTerm>> used;
  for (const auto& s : model.slots(1)) {
    const auto& q = writings[s.col].quotients[s.row];
    ParamPoly v = q.coefficient(ModuleTerm{s.term, 0, 0});
    if (sign > 0) v = -v;
    out.values.emplace_back(s.param, v);
    used.insert({s.col, ModuleTerm{s.term, static_cast<int>(s.row), 0}});
  }
  const auto& U1 = *model.modules()[1];
  for (std::size_t c = 0; c < writings.size(); ++c) {
    const ModuleTerm& h = U1.pommaret_basis()[c];
    for (std::size_t g = 0; g < U.size(); ++g)
      for (const auto& [t, a] : writings[c].quotients[g]) {
        bool head = static_cast<int>(g) == h.component && t.term == h.term;
        if (!head && !used.count({c, ModuleTerm{t.term, static_cast<int>(g), 0}})) out.outside = true;
      }
  }
  return out;
}

}  // namespace

std::vector<std::pair<std::size_t, ParamPoly>> substitution_map(const SchemeModel& model) {
  return substitution(model).values;
}

ContainmentCheck syzygy_contains_marked(const SchemeModel& model) {
  ContainmentCheck out;
  out.expected = marked_scheme_ideal(model).generators;
  if (model.length() == 0) {
    out.holds = out.expected.empty();
    return out;
  }
  auto sub = substitution(model);
  out.outside_slots = sub.outside;
  std::vector<std::optional<ParamPoly>> values(model.ring().size());
  for (auto& [p, v] : sub.values) values[p] = v;
  std::vector<ParamPoly> gens;
  for (auto& g : product_coefficients(model, 1)) gens.push_back(substitute(g, values));
  out.recovered = canonical_generators(gens);
  out.holds = !out.outside_slots && out.recovered == out.expected;
  return out;
}

MinimalityLocus minimality_locus_ideal(const SchemeModel& model) {
  MinimalityLocus out;
  out.presentation.kind = SchemePresentation::Kind::MinimalityLocus;
  out.presentation.ring = model.ring();
  auto gens = marked_scheme_ideal(model).generators;
  if (model.length() >= 1) {
    std::map<std::size_t, ParamPoly> b;
    for (auto& [p, v] : substitution_map(model)) b[p] = v;
    for (const auto& s : model.slots(1)) {
      if (!s.term.is_one()) continue;
      out.constant_slots.push_back(s.param);
      gens.push_back(b[s.param]);
    }
  }
  out.presentation.generators = canonical_generators(gens);
  return out;
}

std::vector<std::optional<Rational>> point_values(const SchemeModel& model, const MarkedSet<Rational>& F) {
  const auto& U = *model.modules()[0];
  if (!(*F.module == U)) throw ShapeMismatch("marked set lives over a different module");
  std::vector<std::optional<Rational>> values(model.ring().size());
  auto read = [&](const MarkedSet<Rational>& level, std::size_t t, const QuasiStableModule& rows) {
    int sign = t == 0 ? model.options().marked.sign : model.options().level(t).sign;
    std::set<std::pair<std::size_t, ModuleTerm>> seen;
    for (const auto& s : model.slots(t)) {
      ModuleTerm mt{s.term, static_cast<int>(s.row), rows.shifts()[s.row]};
      Rational v = level.elements[s.col].tail.coefficient(mt);
      values[s.param] = sign > 0 ? v : Rational(-v);
      seen.insert({s.col, mt});
    }
    for (std::size_t c = 0; c < level.size(); ++c)
      for (const auto& [mt, a] : level.elements[c].tail)
        if (!seen.count({c, mt})) throw std::logic_error("coefficient outside the generic support");
  };
  read(F, 0, U);
  MarkedSet<Rational> level = F;
  for (std::size_t t = 1; t <= model.length(); ++t) {
    level = presyzygy_set(level, model.options().threads);
    read(level, t, *model.modules()[t]);
  }
  return values;
}

Evaluation evaluate_point(const SchemePresentation& P, const SchemeModel& model, const MarkedSet<Rational>& F) {
  if (P.ring.size() > model.ring().size()) throw ShapeMismatch("presentation ring larger than the model ring");
  auto values = point_values(model, F);
  Evaluation out;
  for (const auto& g : P.generators) {
    Rational r = evaluate(g, values);
    if (sgn(r) != 0) out.vanishes = false;
    out.residues.push_back(r);
  }
  return out;
}

MarkedSet<Rational> specialize(const SchemeModel& model, const std::vector<std::optional<Rational>>& values) {
  const auto& G = model.generic_set();
  std::map<ModuleTerm, ModuleElement<Rational>> tails;
  for (const auto& e : G.elements)
    tails[e.head] = map_coefficients<Rational>(e.tail, [&](const ParamPoly& p) { return evaluate(p, values); });
  return make_marked_set<Rational>(G.module, tails);
}

}  // namespace markedres
