#include "markedres/syzygy.hpp"

namespace markedres {

namespace {

template <class T>
std::vector<T> erase_at(const std::vector<T>& v, std::size_t k) {
  std::vector<T> out;
  out.reserve(v.size() - 1);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (i != k) out.push_back(v[i]);
  return out;
}

PolyMatrix<Rational> drop(const PolyMatrix<Rational>& M, std::optional<std::size_t> row, std::optional<std::size_t> col) {
  auto rs = row ? erase_at(M.row_shifts(), *row) : M.row_shifts();
  auto cs = col ? erase_at(M.col_shifts(), *col) : M.col_shifts();
  PolyMatrix<Rational> out(rs, cs);
  for (std::size_t r = 0, rr = 0; r < M.rows(); ++r) {
    if (row && r == *row) continue;
    for (std::size_t c = 0, cc = 0; c < M.cols(); ++c) {
      if (col && c == *col) continue;
      out.at(rr, cc) = M(r, c);
      ++cc;
    }
    ++rr;
  }
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> first_unit(const PolyMatrix<Rational>& M) {
  for (std::size_t r = 0; r < M.rows(); ++r)
    for (std::size_t c = 0; c < M.cols(); ++c) {
      const auto& e = M(r, c);
      if (!e.is_zero() && *e.degree() == 0) return std::make_pair(r, c);
    }
  return std::nullopt;
}

}  // namespace

MinimizedResolution minimize(const Resolution<Rational>& res) {
  std::vector<PolyMatrix<Rational>> maps;
  // heads lose their meaning once rows and columns move
  for (const auto& M : res.maps) {
    PolyMatrix<Rational> copy(M.row_shifts(), M.col_shifts());
    for (std::size_t r = 0; r < M.rows(); ++r)
      for (std::size_t c = 0; c < M.cols(); ++c) copy.at(r, c) = M(r, c);
    maps.push_back(std::move(copy));
  }
  for (;;) {
    std::optional<std::size_t> level;
    std::pair<std::size_t, std::size_t> pos;
    for (std::size_t t = 1; t < maps.size() && !level; ++t)
      if (auto u = first_unit(maps[t])) {
        level = t;
        pos = *u;
      }
    if (!level) break;
    std::size_t t = *level;
    auto [r, c] = pos;
    const auto& M = maps[t];
    Rational u = M(r, c).coefficient(ModuleTerm{});
    PolyMatrix<Rational> next = drop(M, r, c);
    for (std::size_t i = 0, ii = 0; i < M.rows(); ++i) {
      if (i == r) continue;
      if (!M(i, c).is_zero()) {
        auto factor = M(i, c).scaled(Rational(1) / u);
        for (std::size_t j = 0, jj = 0; j < M.cols(); ++j) {
          if (j == c) continue;
          if (!M(r, j).is_zero()) next.at(ii, jj) -= multiply(factor, M(r, j));
          ++jj;
        }
      }
      ++ii;
    }
    maps[t] = std::move(next);
    if (t + 1 < maps.size()) maps[t + 1] = drop(maps[t + 1], c, std::nullopt);
    maps[t - 1] = drop(maps[t - 1], std::nullopt, r);
  }
  MinimizedResolution out;
  out.resolution.maps = std::move(maps);
  out.betti = betti_table(out.resolution);
  return out;
}

Certificate componentwise_certificate(const MarkedSet<Rational>& F) {
  auto res = u_resolution(F);
  if (is_minimal(res).verdict == Minimality::Minimal) return {true, "U-resolution is minimal"};
  const auto& U = *F.module;
  auto degs = F.degrees();
  bool single = !degs.empty() && std::all_of(degs.begin(), degs.end(), [&](int d) { return d == degs.front(); });
  if (U.is_stable() && single) return {true, "U stable and generated in a single degree, resolution is linear"};
  return {false, "U-resolution not minimal; no certificate"};
}

bool groebner_obstruction(const MarkedSet<Rational>& F) {
  const auto& U = *F.module;
  if (U.rank() != 1) throw std::invalid_argument("Groebner obstruction is defined for ideals");
  if (U.is_stable()) return false;
  return is_minimal(u_resolution(F)).verdict == Minimality::Minimal;
}

}  // namespace markedres
