#pragma once

#include "markedres/syzygy.hpp"

#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace markedres {

// Order in which the parameters of a matrix are numbered.
enum class Numbering { ColumnMajor, RowMajor, Explicit };

struct FamilyOptions {
  std::string name;
  int index_base = 0;
  int sign = 1;  // entry = head + sign * sum(param * term)
  Numbering numbering = Numbering::ColumnMajor;
  std::vector<std::pair<std::size_t, std::size_t>> order;  // (row, col), 0-based, for Explicit
};

struct SchemeOptions {
  FamilyOptions marked{"C"};
  std::vector<FamilyOptions> levels;  // B^(1), B^(2), ...; missing ones get default names
  unsigned threads = 1;

  FamilyOptions level(std::size_t t) const;  // t >= 1
};

// one parameter of a generic matrix: coefficient of `term` in entry (row, col)
struct Slot {
  std::size_t param = 0;  // global index in the parameter ring
  std::size_t row = 0, col = 0;
  Term term;
};

// Generic marked set over U and the generic pre-syzygy matrices M_1..M_L.
class SchemeModel {
 public:
  explicit SchemeModel(ModulePtr U, SchemeOptions opts = {});

  const ParameterRing& ring() const { return ring_; }
  const SchemeOptions& options() const { return opts_; }
  // U^(t), t = 0..L
  const std::vector<ModulePtr>& modules() const { return modules_; }
  std::size_t length() const { return modules_.size() - 1; }

  const MarkedSet<ParamPoly>& generic_set() const { return generic_; }
  // pre-syzygies of level t >= 1 as a marked set over U^(t)
  const MarkedSet<ParamPoly>& presyzygies(std::size_t t) const { return presyz_[t - 1]; }
  PolyMatrix<ParamPoly> matrix(std::size_t t) const;

  // slots of level t (0 = the C parameters, row = component, col = element)
  const std::vector<Slot>& slots(std::size_t t) const { return slots_[t]; }
  const ParameterFamily& family(std::size_t t) const;

  // unique writings of x_v F_j over the generic set, one per column of M_1; computed once
  const std::vector<UniqueWriting<ParamPoly>>& generic_writings() const;

 private:
  struct Cache;
  ModulePtr U_;
  SchemeOptions opts_;
  ParameterRing ring_;
  std::vector<ModulePtr> modules_;
  MarkedSet<ParamPoly> generic_;
  std::vector<MarkedSet<ParamPoly>> presyz_;
  std::vector<std::vector<Slot>> slots_;
  std::shared_ptr<Cache> cache_;
};

struct SchemePresentation {
  enum class Kind { Marked, Syzygy, Resolution, MinimalityLocus };
  Kind kind = Kind::Marked;
  int level = 0;  // t for S^(t)
  ParameterRing ring;
  std::vector<ParamPoly> generators;  // canonical
};

std::string kind_name(SchemePresentation::Kind k);

// all x-coefficients of e
std::vector<ParamPoly> coefficient_list(const ModuleElement<ParamPoly>& e);

SchemePresentation marked_scheme_ideal(const SchemeModel& model);
SchemePresentation syzygy_scheme_ideal(const SchemeModel& model);
std::vector<SchemePresentation> resolution_scheme_ideals(const SchemeModel& model);

// B^(1) -> b(C): slot values of the generic unique writings
std::vector<std::pair<std::size_t, ParamPoly>> substitution_map(const SchemeModel& model);

// the 𝒰-generators recovered from 𝒮 after B -> b(C), compared with 𝒰 itself
struct ContainmentCheck {
  bool holds = false;
  std::vector<ParamPoly> recovered;
  std::vector<ParamPoly> expected;
  bool outside_slots = false;  // a quotient landed outside the pre-syzygy support
};
ContainmentCheck syzygy_contains_marked(const SchemeModel& model);

struct MinimalityLocus {
  SchemePresentation presentation;
  std::vector<std::size_t> constant_slots;  // B^(1) parameters sitting on degree-0 slots
};
MinimalityLocus minimality_locus_ideal(const SchemeModel& model);

// parameter values of a concrete marked set: C from its tails, B^(t) from its pre-syzygy quotients
std::vector<std::optional<Rational>> point_values(const SchemeModel& model, const MarkedSet<Rational>& F);

struct Evaluation {
  bool vanishes = true;
  std::vector<Rational> residues;  // one per generator
};
Evaluation evaluate_point(const SchemePresentation& P, const SchemeModel& model, const MarkedSet<Rational>& F);

// substitutes numeric C-values into the generic marked set
MarkedSet<Rational> specialize(const SchemeModel& model, const std::vector<std::optional<Rational>>& values);

}  // namespace markedres
