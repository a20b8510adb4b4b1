#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qfe/poly.hpp"
#include "qfe/series.hpp"

namespace qfe {

/// Exponents a_1..a_M with b = prod_i (1 - q^i)^{-a_i} + O(q^{M+1}).
/// The result has size M+1 and a[0] = 0. Throws std::invalid_argument unless
/// b[0] = 1.
std::vector<Integer> euler_exponents(const std::vector<Integer>& b);

/// prod_i (1 - q^i)^{-a_i} to q^M, the inverse of euler_exponents.
std::vector<Integer> euler_product(const std::vector<Integer>& a, int M);

struct Period {
  int period = 0;
  /// Indices below offset are exempt; 1 means pure periodicity.
  int offset = 1;
  friend bool operator==(const Period&, const Period&) = default;
};

/// Smallest k <= kmax with a_{i+k} = a_i for every 1 <= i <= M-k.
std::optional<int> detect_period(const std::vector<Integer>& a, int kmax);

/// Like detect_period, but the pattern may start at any offset up to
/// max_offset. Shorter periods win, then smaller offsets.
std::optional<Period> detect_eventual_period(const std::vector<Integer>& a, int kmax,
                                             int max_offset);

struct ProductForm {
  std::vector<Integer> exponents;  // a[1..M], a[0] = 0
  std::optional<Period> period;

  /// (r, a_r) for r = 1..period.
  std::vector<std::pair<int, Integer>> profile() const;
  /// The product as a ProductSpec. Because S = prod (1 - q^i)^{-a_i}, each
  /// factor carries the exponent -a_r. Requires a period.
  ProductSpec spec() const;
};

struct EulerOptions {
  int order = 50;
  int kmax = 24;
  /// Periods starting after the first few exponents; off by default.
  bool eventual = false;
  int max_offset = 8;
};

ProductForm product_form(const std::vector<Integer>& b, const EulerOptions& opt = {});

struct ProductHit {
  int c1 = 0;
  int c2 = 0;
  int x_power = 0;  // x = q^x_power
  ProductForm form;
};

/// Scans (c1, c2) in [-B11, B11] x [-B22, B22] on the lattice of (p.C1, p.C2),
/// substituting x = q^s for each s in x_subs, and keeps the periodic ones.
/// Work is shared among OpenMP threads; output is sorted by (c1, c2, s).
std::vector<ProductHit> product_scan(const SeriesParams& p, const EulerOptions& opt = {},
                                     const std::vector<int>& x_subs = {0});
/// Single-threaded reference for product_scan.
std::vector<ProductHit> product_scan_serial(const SeriesParams& p, const EulerOptions& opt = {},
                                            const std::vector<int>& x_subs = {0});

}  // namespace qfe
