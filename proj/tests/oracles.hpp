#pragma once

// Slow, independent reference computations used only by the tests.

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "qfe/series.hpp"

namespace oracle {

using Integer = mpz_class;
using Dense = std::map<std::pair<int, int>, Integer>;  // (xdeg, qdeg) -> coeff

// Naive double sum, every 1/(1-q^k) expanded as its own geometric series.
inline Dense double_sum(const qfe::SeriesParams& p, int M, int shift, bool symbolic) {
  Dense out;
  for (int m = 0; m <= 60; ++m) {
    for (int n = 0; n <= 60; ++n) {
      const long long xdeg = 1LL * p.D1 * m + 1LL * p.D2 * n;
      const long long e = p.exponent(m, n) + shift * xdeg;
      if (e > M) continue;
      std::vector<Integer> f(M + 1);
      f[static_cast<std::size_t>(e)] = ((m % 2 && p.eps1 < 0) != (n % 2 && p.eps2 < 0)) ? -1 : 1;
      auto geo = [&](int k) {
        std::vector<Integer> g(M + 1);
        for (int i = 0; i <= M; ++i) {
          for (int j = 0; i + j * k <= M; ++j) g[i + j * k] += f[i];
        }
        f = g;
      };
      for (int j = 1; j <= m; ++j) geo(p.K1 * j);
      for (int j = 1; j <= n; ++j) geo(p.K2 * j);
      for (int i = 0; i <= M; ++i) {
        if (f[i] != 0) out[{symbolic ? static_cast<int>(xdeg) : 0, i}] += f[i];
      }
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return out;
}

// Number of partitions of n whose parts satisfy pred, each size used at most
// cap times (cap < 0: unbounded).
inline long count_parts(int n, const std::function<bool(int)>& pred, int cap = -1) {
  std::vector<long> c(n + 1);
  c[0] = 1;
  for (int part = 1; part <= n; ++part) {
    if (!pred(part)) continue;
    std::vector<long> next(n + 1);
    for (int w = 0; w <= n; ++w) {
      for (int k = 0; (cap < 0 || k <= cap) && w + k * part <= n; ++k) next[w + k * part] += c[w];
    }
    c = next;
  }
  return c[n];
}

// Partitions of n (weakly decreasing) visited with a callback.
inline void each_partition(int n, int maxpart, std::vector<int>& cur,
                           const std::function<void(const std::vector<int>&)>& f) {
  if (n == 0) {
    f(cur);
    return;
  }
  for (int k = std::min(n, maxpart); k >= 1; --k) {
    cur.push_back(k);
    each_partition(n - k, k, cur, f);
    cur.pop_back();
  }
}

}  // namespace oracle
