#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "qfe/trunc_series.hpp"

namespace qfe {

/// Parameters of the double series
///
///   S_{C1,C2}(x) = sum_{m,n>=0} eps1^m eps2^n q^{E(m,n)} x^{D1 m + D2 n}
///                  / ((q^K1; q^K1)_m (q^K2; q^K2)_n)
///
/// with E(m,n) = B11 C(m+1,2) + B22 C(n+1,2) + B12 m n + C1 m + C2 n.
struct SeriesParams {
  int B11 = 1, B22 = 1, B12 = 1;
  int C1 = 0, C2 = 0;
  int D1 = 1, D2 = 1, K1 = 1, K2 = 1;
  int gamma = 1;
  int eps1 = 1, eps2 = 1;

  /// Throws std::invalid_argument unless B, D, K, gamma >= 1 and eps = +-1.
  void validate() const;

  long long exponent(long long m, long long n) const;
  SeriesParams with_c(int c1, int c2) const;

  /// Comma list B11,B22,B12,C1,C2,D1,D2,K1,K2,gamma,eps1,eps2.
  std::string to_string() const;
  static SeriesParams parse(std::string_view text);

  friend auto operator<=>(const SeriesParams&, const SeriesParams&) = default;
};

/// How the x variable is treated during evaluation.
struct XMode {
  enum class Kind { Symbolic, Power };
  Kind kind = Kind::Symbolic;
  /// Symbolic: evaluates S(x q^shift). Power: evaluates S(q^shift).
  int shift = 0;

  static XMode symbolic(int shift = 0) { return {Kind::Symbolic, shift}; }
  static XMode power(int shift) { return {Kind::Power, shift}; }
  static XMode one() { return {Kind::Power, 0}; }
};

/// E(m,n) + shift*(D1 m + D2 n) >= 1 for every (m,n) != (0,0): S(q^shift) is
/// a power series with constant term 1.
bool is_admissible(const SeriesParams& p, int shift = 0);

/// E(m,n) + shift*(D1 m + D2 n) >= 0 everywhere, the condition for S(x q^shift)
/// to have no negative q-powers.
bool has_nonnegative_exponents(const SeriesParams& p, int shift = 0);

/// Exact truncated evaluation. Throws std::domain_error for inadmissible
/// parameters in Power mode and for negative exponents in Symbolic mode.
TruncSeries eval_series(const SeriesParams& p, int order, XMode mode = XMode::symbolic());

/// 1/(q^K; q^K)_m modulo q^{order+1}, as q-coefficients.
std::vector<Integer> pochhammer_inv_coeffs(int K, int m, int order);
TruncSeries pochhammer_inv(int K, int m, int order);

/// Periodic product prod_r prod_{j>=0} (1 - q^{r + j*modulus})^{exponent_r}.
/// A negative exponent puts the factor in the denominator.
struct ProductSpec {
  struct Factor {
    int residue = 1;
    int exponent = 0;
    friend auto operator<=>(const Factor&, const Factor&) = default;
  };
  int modulus = 1;
  std::vector<Factor> factors;

  void validate() const;
  /// `(q^{1},q^{5};q^{6})_inf^{1}`; groups of equal exponent joined by ` * `,
  /// `1` for the empty product.
  std::string to_string() const;
  static ProductSpec parse(std::string_view text);

  friend auto operator<=>(const ProductSpec&, const ProductSpec&) = default;
};

TruncSeries expand_product(const ProductSpec& spec, int order);

/// Multiplies the q-coefficients b in place by (1 - q^k)^e, truncating at
/// b.size()-1.
void mul_one_minus_qk_pow(std::vector<Integer>& b, int k, const Integer& e);

}  // namespace qfe
