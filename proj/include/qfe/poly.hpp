#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qfe {

using Integer = mpz_class;

/// Exponent pair of a monomial x^xdeg q^qdeg. Ordered lexicographically.
struct Monomial {
  int xdeg = 0;
  int qdeg = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

enum class PolyStyle {
  /// Every coefficient printed, terms in descending order: `-1*x^2*q^3 + 1`.
  Canonical,
  /// Unit coefficients dropped, terms ascending: `x*q + x^2*q^3`.
  Compact,
};

/// Sparse polynomial in x (non-negative degrees) and q (signed degrees) with
/// arbitrary-precision integer coefficients.
///
/// Terms are kept sorted by monomial with no zero coefficients, so two equal
/// polynomials always have identical term vectors.
class PolyXQ {
 public:
  struct Term {
    Monomial mono;
    Integer coeff;

    friend bool operator==(const Term&, const Term&) = default;
  };

  PolyXQ() = default;
  PolyXQ(long c);  // NOLINT: implicit constants read naturally in formulas
  explicit PolyXQ(const Integer& c);

  static PolyXQ monomial(const Integer& c, int xdeg, int qdeg);
  static PolyXQ x_pow(int xdeg) { return monomial(1, xdeg, 0); }
  static PolyXQ q_pow(int qdeg) { return monomial(1, 0, qdeg); }

  /// Builds from arbitrary terms; merges duplicates and drops zeros.
  static PolyXQ from_terms(std::vector<Term> terms);

  /// Parses either print style. Throws std::invalid_argument on bad input.
  static PolyXQ parse(std::string_view text);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }

  /// Coefficient of x^xdeg q^qdeg (zero when absent).
  Integer coeff(int xdeg, int qdeg) const;

  int min_xdeg() const;
  int max_xdeg() const;
  int min_qdeg() const;
  int max_qdeg() const;

  /// Leading term in lexicographic (xdeg, qdeg) order. Requires non-zero.
  const Term& leading() const { return terms_.back(); }

  PolyXQ operator-() const;
  PolyXQ& operator+=(const PolyXQ& other);
  PolyXQ& operator-=(const PolyXQ& other);
  PolyXQ& operator*=(const PolyXQ& other);

  friend PolyXQ operator+(PolyXQ a, const PolyXQ& b) { return a += b; }
  friend PolyXQ operator-(PolyXQ a, const PolyXQ& b) { return a -= b; }
  friend PolyXQ operator*(const PolyXQ& a, const PolyXQ& b);
  friend bool operator==(const PolyXQ&, const PolyXQ&) = default;

  PolyXQ scaled(const Integer& c) const;
  /// Multiplies by x^dx q^dq; dx may be negative only if every term allows it.
  PolyXQ shifted(int dx, int dq) const;
  /// Substitutes x -> x q^s.
  PolyXQ subst_x(int s) const;
  /// Sets x = 0, keeping the q-polynomial constant in x.
  PolyXQ at_x_zero() const;
  bool has_nonnegative_coefficients() const;

  std::string to_string(PolyStyle style = PolyStyle::Canonical) const;

 private:
  std::vector<Term> terms_;
};

/// Integer content (positive gcd of coefficients); zero for the zero polynomial.
Integer content(const PolyXQ& p);

/// Greatest common divisor in Z[x, q], treating powers of q as units and
/// including the common monomial factor x^a q^b of the two inputs. The result
/// has a positive leading coefficient. gcd(0, p) normalizes p.
PolyXQ gcd(const PolyXQ& a, const PolyXQ& b);

/// a / b when b divides a exactly in Z[x, q, 1/q]; nullopt otherwise.
std::optional<PolyXQ> divide_exact(const PolyXQ& a, const PolyXQ& b);

/// Short textual form used in reports and JSON: same as to_string(Canonical).
inline std::string to_string(const PolyXQ& p) { return p.to_string(); }

}  // namespace qfe
