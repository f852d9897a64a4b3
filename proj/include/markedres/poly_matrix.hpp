#pragma once

#include "markedres/errors.hpp"
#include "markedres/module_element.hpp"

#include <optional>
#include <vector>

namespace markedres {

struct HeadPosition {
  std::size_t row = 0;
  Term term;
  friend bool operator==(const HeadPosition& a, const HeadPosition& b) {
    return a.row == b.row && a.term == b.term;
  }
};

// Graded map between free modules: column c of degree col_shifts[c] maps to
// the sum over rows of entry(r,c) times basis vector r of degree row_shifts[r].
template <class S>
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::vector<int> row_shifts, std::vector<int> col_shifts)
      : row_shifts_(std::move(row_shifts)),
        col_shifts_(std::move(col_shifts)),
        entries_(row_shifts_.size() * col_shifts_.size()),
        heads_(col_shifts_.size()) {}

  std::size_t rows() const { return row_shifts_.size(); }
  std::size_t cols() const { return col_shifts_.size(); }
  const std::vector<int>& row_shifts() const { return row_shifts_; }
  const std::vector<int>& col_shifts() const { return col_shifts_; }

  const Poly<S>& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols() + c]; }
  Poly<S>& at(std::size_t r, std::size_t c) { return entries_[r * cols() + c]; }

  const std::optional<HeadPosition>& head(std::size_t c) const { return heads_[c]; }
  void set_head(std::size_t c, HeadPosition h) { heads_[c] = std::move(h); }

  // entry degrees must equal col shift minus row shift
  bool is_homogeneous() const {
    for (std::size_t r = 0; r < rows(); ++r)
      for (std::size_t c = 0; c < cols(); ++c) {
        const auto& e = (*this)(r, c);
        if (e.is_zero()) continue;
        if (!e.is_homogeneous() || *e.degree() != col_shifts_[c] - row_shifts_[r]) return false;
      }
    return true;
  }

  bool is_zero() const {
    for (const auto& e : entries_)
      if (!e.is_zero()) return false;
    return true;
  }

  static PolyMatrix identity(const std::vector<int>& shifts) {
    PolyMatrix m(shifts, shifts);
    for (std::size_t i = 0; i < shifts.size(); ++i) m.at(i, i) = Poly<S>::constant(Coefficient<S>::one());
    return m;
  }

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.row_shifts_ == b.row_shifts_ && a.col_shifts_ == b.col_shifts_ && a.entries_ == b.entries_ &&
           a.heads_ == b.heads_;
  }

 private:
  std::vector<int> row_shifts_, col_shifts_;
  std::vector<Poly<S>> entries_;
  std::vector<std::optional<HeadPosition>> heads_;
};

template <class S>
PolyMatrix<S> matrix_multiply(const PolyMatrix<S>& a, const PolyMatrix<S>& b) {
  if (a.cols() != b.rows() || a.col_shifts() != b.row_shifts())
    throw ShapeMismatch("matrix_multiply: column shifts of the left factor differ from row shifts of the right factor");
  PolyMatrix<S> out(a.row_shifts(), b.col_shifts());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) {
      Poly<S> acc;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (a(r, k).is_zero() || b(k, c).is_zero()) continue;
        acc += multiply(a(r, k), b(k, c));
      }
      out.at(r, c) = std::move(acc);
    }
  return out;
}

}  // namespace markedres
