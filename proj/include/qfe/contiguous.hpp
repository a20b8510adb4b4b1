#pragma once

#include <array>
#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qfe/poly.hpp"
#include "qfe/series.hpp"

namespace qfe {

using IndexPair = std::pair<int, int>;

/// S_{c1,c2}(x q^shift) with shift 0 or gamma.
struct SeriesRef {
  int c1 = 0;
  int c2 = 0;
  int shift = 0;

  IndexPair pair() const { return {c1, c2}; }
  /// `S[-2,-1](x)`, `S[0,0](x*q)`, `S[1,0](x*q^2)`.
  std::string to_string() const;

  friend auto operator<=>(const SeriesRef&, const SeriesRef&) = default;
};

/// sum_i coeff_i * S_{ref_i} = 0, coefficients merged per reference.
struct FuncEquation {
  struct Term {
    PolyXQ coeff;
    SeriesRef ref;
    friend bool operator==(const Term&, const Term&) = default;
  };
  std::vector<Term> terms;

  /// Adds coeff to the term for ref, dropping it if it cancels.
  void add(const SeriesRef& ref, const PolyXQ& coeff);
  PolyXQ coeff_of(const SeriesRef& ref) const;
  bool is_trivial() const { return terms.empty(); }

  /// Same relation up to a non-zero integer or monomial multiple.
  bool equivalent(const FuncEquation& other) const;
  /// Order-insensitive equality of the term sets.
  bool same_terms(const FuncEquation& other) const;

  /// `S[-2,-1](x) - S[-1,-1](x) - x^2*q^2*S[0,0](x*q) = 0`.
  std::string to_string() const;
  /// Inverse of to_string. The trailing ` = 0` is optional.
  static FuncEquation parse(std::string_view text);
};

/// Parses `S[a,b](x)`, `S[a,b](x*q)` or `S[a,b](x*q^k)` at the start of text and
/// returns the number of characters consumed.
std::size_t parse_series_ref(std::string_view text, SeriesRef& out);

/// C1 in m1..M1 stepping by d1, C2 in m2..M2 stepping by d2.
struct IndexBox {
  int m1 = 0, M1 = 0, m2 = 0, M2 = 0;
  int d1 = 1, d2 = 1;

  /// Throws std::invalid_argument unless m <= M, d >= 1 and d | (M - m).
  void validate() const;
  bool contains(int c1, int c2) const;
  bool contains(const IndexPair& p) const { return contains(p.first, p.second); }
  /// Lattice points in lexicographic order.
  std::vector<IndexPair> pairs() const;
  int delta1() const { return M1 - m1; }
  int delta2() const { return M2 - m2; }

  friend auto operator<=>(const IndexBox&, const IndexBox&) = default;
};

/// The three primary relations at (c1, c2) in the order T1, T2, T3.
std::array<FuncEquation, 3> primary_equations(const SeriesParams& p, int c1, int c2);

/// Which relation a box equation instantiates, and at which pair.
struct EquationInstance {
  int type = 1;  // 1, 2 or 3
  int c1 = 0;
  int c2 = 0;
  FuncEquation equation;
};

std::pair<int, int> lattice_steps(const SeriesParams& p);

/// All T1/T2/T3 instances whose pairs all lie in the box. T1 block first, then
/// T2, then T3; lexicographic in the seed pair within each block.
std::vector<EquationInstance> enumerate_box_instances(const SeriesParams& p, const IndexBox& box);
std::vector<FuncEquation> enumerate_box(const SeriesParams& p, const IndexBox& box);

/// Widths and heights of the tight rectangles of T1, T2, T3.
struct RectSizes {
  std::array<int, 3> x{};
  std::array<int, 3> y{};
  friend bool operator==(const RectSizes&, const RectSizes&) = default;
};

RectSizes rect_sizes(const SeriesParams& p);

/// Throw std::invalid_argument when d1 does not divide dm1 or d2 does not
/// divide dm2 (or either is negative).
long long count_equations(const SeriesParams& p, int dm1, int dm2);
long long count_series(const SeriesParams& p, int dm1, int dm2);
/// Sufficient condition for a non-trivial annihilator with target size d.
bool feasible(const SeriesParams& p, int dm1, int dm2, int d);

/// Keep unless gcd(B11, B22, B12, K1, K2) > 1.
bool dilation_filter(const SeriesParams& p);

}  // namespace qfe
