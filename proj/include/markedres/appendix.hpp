#pragma once

#include "markedres/oracle.hpp"
#include "markedres/render.hpp"
#include "markedres/scheme.hpp"

#include <string>
#include <vector>

namespace markedres {

// J = (x3^2, x3*x2, x2^3, x3*x1^2) in K[x0..x3]
ModulePtr appendix_module();
// C, B, A named and numbered as in the printed matrices
SchemeOptions appendix_options();

struct AppendixIdealSpec {
  std::string name;
  std::vector<std::vector<std::string>> components;  // generators of the ideals being intersected
};
std::vector<AppendixIdealSpec> appendix_ideals();

struct AppendixIdeal {
  std::string name;
  MarkedSet<Rational> basis;
  Resolution<Rational> resolution;
  MinimalityReport<Rational> minimality;
  MinimizedResolution minimized;
  bool in_marked_scheme = false;     // 𝒰 vanishes at the point
  bool in_minimality_locus = false;  // locus ideal vanishes at the point
  std::vector<long> hartshorne_rao;  // degrees 0..4, quotient by the entries of the last minimized matrix
  std::vector<long> hilbert;         // HF(R/I, s), s = 3..6, from the intersected spans
  std::vector<long> hilbert_basis;   // same, from the marked basis
};

struct AppendixReport {
  std::size_t c_count = 0, b_count = 0, a_count = 0;
  std::vector<std::string> marked_latex;          // one line per generic element
  std::vector<std::vector<std::string>> delta1;   // [row][col]
  std::vector<std::string> delta2;
  std::vector<std::string> locus_slots;           // e.g. B_6
  std::size_t marked_generators = 0, syzygy_generators = 0;
  std::vector<std::size_t> resolution_generators;  // |S^(t)|
  bool syzygy_contains_marked = false;
  std::vector<AppendixIdeal> ideals;
};

AppendixReport appendix_repro(unsigned threads = 1);

std::string appendix_text(const AppendixReport& r);
Json appendix_json(const AppendixReport& r);

}  // namespace markedres
