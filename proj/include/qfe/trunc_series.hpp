#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qfe/poly.hpp"

namespace qfe {

/// Bivariate series in x and q, exact modulo q^{order+1}.
///
/// Stored densely by q-degree: row n holds the x-coefficients of q^n. Every
/// q-degree is in 0..order; x-degrees are never truncated.
class TruncSeries {
 public:
  explicit TruncSeries(int order = 0);

  static TruncSeries one(int order);
  /// Throws std::invalid_argument on a negative q-degree.
  static TruncSeries from_poly(const PolyXQ& p, int order);
  /// x-free series from its q-coefficients b_0, b_1, ... (extra entries dropped).
  static TruncSeries from_q_coefficients(const std::vector<Integer>& b, int order);

  int order() const { return order_; }
  Integer coeff(int xdeg, int qdeg) const;
  void add_to(int xdeg, int qdeg, const Integer& value);
  bool is_zero() const;
  bool is_x_free() const;
  /// Smallest q-degree carrying a non-zero coefficient.
  std::optional<int> lowest_qdeg() const;
  int max_xdeg() const;

  TruncSeries& operator+=(const TruncSeries& other);
  TruncSeries& operator-=(const TruncSeries& other);
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  /// Throws std::invalid_argument when the orders differ.
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend bool operator==(const TruncSeries&, const TruncSeries&);

  TruncSeries scaled(const Integer& c) const;
  /// Product with a polynomial whose q-degrees are non-negative.
  TruncSeries mul_poly(const PolyXQ& p) const;
  /// x -> x q^s for s >= 0: (k, n) moves to (k, n + k*s).
  TruncSeries subst_x(int s) const;
  /// x -> c q^s; the result is x-free.
  TruncSeries eval_x(const Integer& c, int s) const;
  TruncSeries truncated(int order) const;

  /// q-coefficients of an x-free series, length order+1.
  std::vector<Integer> q_coefficients() const;
  PolyXQ to_poly() const;
  std::string to_string() const;

 private:
  int order_;
  std::vector<std::vector<Integer>> rows_;
};

}  // namespace qfe
