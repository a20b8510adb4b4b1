#include "qfe/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace qfe {

FractionFreeRref fraction_free_rref(PolyMatrix a, int ncols) {
  FractionFreeRref out;
  const std::size_t nrows = a.size();
  for (auto& row : a) {
    if (static_cast<int>(row.size()) != ncols) throw std::invalid_argument("ragged matrix");
  }
  PolyXQ prev(1);
  std::size_t r = 0;
  for (int c = 0; c < ncols && r < nrows; ++c) {
    const auto col = static_cast<std::size_t>(c);
    std::size_t best = nrows;
    for (std::size_t i = r; i < nrows; ++i) {
      if (a[i][col].is_zero()) continue;
      if (best == nrows || a[i][col].size() < a[best][col].size()) best = i;
    }
    if (best == nrows) continue;
    std::swap(a[r], a[best]);
    const PolyXQ p = a[r][col];
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == r) continue;
      const PolyXQ f = a[i][col];
      for (std::size_t j = 0; j < static_cast<std::size_t>(ncols); ++j) {
        PolyXQ v = p * a[i][j];
        if (!f.is_zero() && !a[r][j].is_zero()) v -= f * a[r][j];
        if (v.is_zero() || prev.is_one()) {
          a[i][j] = std::move(v);
          continue;
        }
        auto d = divide_exact(v, prev);
        if (!d) throw std::logic_error("inexact division in fraction-free elimination");
        a[i][j] = std::move(*d);
      }
    }
    prev = p;
    out.pivots.push_back(c);
    ++r;
  }
  out.rows = std::move(a);
  out.scale = prev;
  return out;
}

PolyVector make_primitive(PolyVector v) {
  PolyXQ g;
  for (const auto& e : v) {
    if (!e.is_zero()) g = gcd(g, e);
  }
  if (g.is_zero()) return v;
  for (auto& e : v) {
    if (!e.is_zero()) e = *divide_exact(e, g);
  }
  for (const auto& e : v) {
    if (e.is_zero()) continue;
    if (e.leading().coeff < 0) {
      for (auto& x : v) x = -x;
    }
    break;
  }
  return v;
}

std::vector<PolyVector> nullspace(const PolyMatrix& a, int ncols, std::vector<int>* free_columns) {
  const FractionFreeRref rr = fraction_free_rref(a, ncols);
  std::vector<bool> is_pivot(static_cast<std::size_t>(ncols), false);
  for (int c : rr.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<PolyVector> basis;
  if (free_columns) free_columns->clear();
  for (int f = 0; f < ncols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    PolyVector v(static_cast<std::size_t>(ncols));
    v[static_cast<std::size_t>(f)] = rr.scale;
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
      v[static_cast<std::size_t>(rr.pivots[i])] = -rr.rows[i][static_cast<std::size_t>(f)];
    }
    basis.push_back(make_primitive(std::move(v)));
    if (free_columns) free_columns->push_back(f);
  }
  return basis;
}

}  // namespace qfe
