#pragma once

#include <string>

#include "qfe/poly.hpp"

namespace qfe {

/// Quotient of two PolyXQ. Not reduced unless reduced() is called; equality
/// compares by cross-multiplication.
class RatXQ {
 public:
  RatXQ() : num_(0), den_(1) {}
  RatXQ(PolyXQ num);  // NOLINT: polynomials embed into the fraction field
  RatXQ(PolyXQ num, PolyXQ den);

  const PolyXQ& num() const { return num_; }
  const PolyXQ& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  /// True when the denominator is 1 (after reduction it is the right test for
  /// "is a Laurent polynomial").
  bool is_polynomial() const { return den_.is_one(); }

  /// Cancels the gcd, absorbs monomial denominators q^k into the numerator and
  /// makes the denominator's leading coefficient positive.
  RatXQ reduced() const;

  RatXQ operator-() const { return {-num_, den_}; }
  friend RatXQ operator+(const RatXQ& a, const RatXQ& b);
  friend RatXQ operator-(const RatXQ& a, const RatXQ& b) { return a + (-b); }
  friend RatXQ operator*(const RatXQ& a, const RatXQ& b);
  friend RatXQ operator/(const RatXQ& a, const RatXQ& b);
  friend bool operator==(const RatXQ& a, const RatXQ& b);

  std::string to_string(PolyStyle style = PolyStyle::Compact) const;

 private:
  PolyXQ num_;
  PolyXQ den_;
};

}  // namespace qfe
