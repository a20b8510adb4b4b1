#include "qfe/euler.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "qfe/contiguous.hpp"

namespace qfe {

std::vector<Integer> euler_exponents(const std::vector<Integer>& b) {
  if (b.empty() || b[0] != 1) throw std::invalid_argument("Euler's algorithm needs b_0 = 1");
  std::vector<Integer> r = b;
  std::vector<Integer> a(b.size());
  for (std::size_t i = 1; i < r.size(); ++i) {
    a[i] = r[i];
    if (a[i] != 0) mul_one_minus_qk_pow(r, static_cast<int>(i), a[i]);
  }
  return a;
}

std::vector<Integer> euler_product(const std::vector<Integer>& a, int M) {
  std::vector<Integer> b(static_cast<std::size_t>(M) + 1);
  b[0] = 1;
  for (std::size_t i = 1; i < a.size() && i <= static_cast<std::size_t>(M); ++i) {
    if (a[i] != 0) mul_one_minus_qk_pow(b, static_cast<int>(i), -a[i]);
  }
  return b;
}

namespace {

bool periodic_from(const std::vector<Integer>& a, int k, int offset) {
  const std::size_t M = a.size() - 1;
  for (std::size_t i = static_cast<std::size_t>(offset); i + static_cast<std::size_t>(k) <= M; ++i) {
    if (a[i] != a[i + static_cast<std::size_t>(k)]) return false;
  }
  return true;
}

}  // namespace

std::optional<int> detect_period(const std::vector<Integer>& a, int kmax) {
  if (kmax < 1) throw std::invalid_argument("kmax must be positive");
  auto p = detect_eventual_period(a, kmax, 1);
  if (!p) return std::nullopt;
  return p->period;
}

std::optional<Period> detect_eventual_period(const std::vector<Integer>& a, int kmax,
                                             int max_offset) {
  if (kmax < 1) throw std::invalid_argument("kmax must be positive");
  if (a.size() < 2) return std::nullopt;
  const int M = static_cast<int>(a.size()) - 1;
  for (int k = 1; k <= std::min(kmax, M); ++k) {
    for (int off = 1; off <= max_offset; ++off) {
      if (off + k > M) break;
      if (periodic_from(a, k, off)) return Period{k, off};
    }
  }
  return std::nullopt;
}

std::vector<std::pair<int, Integer>> ProductForm::profile() const {
  std::vector<std::pair<int, Integer>> out;
  if (!period) return out;
  for (int r = 1; r <= period->period; ++r) {
    const auto i = static_cast<std::size_t>(r + period->offset - 1);
    out.emplace_back(r + period->offset - 1, i < exponents.size() ? exponents[i] : Integer(0));
  }
  return out;
}

ProductSpec ProductForm::spec() const {
  if (!period) throw std::logic_error("no period detected");
  if (period->offset != 1) throw std::logic_error("eventually periodic exponents have no ProductSpec");
  ProductSpec s{period->period, {}};
  for (const auto& [r, e] : profile()) {
    if (e == 0) continue;
    if (!e.fits_sint_p()) throw std::overflow_error("product exponent too large");
    s.factors.push_back({r, -static_cast<int>(e.get_si())});
  }
  return s;
}

ProductForm product_form(const std::vector<Integer>& b, const EulerOptions& opt) {
  ProductForm f;
  f.exponents = euler_exponents(b);
  if (opt.eventual) {
    f.period = detect_eventual_period(f.exponents, opt.kmax, opt.max_offset);
  } else if (auto k = detect_period(f.exponents, opt.kmax)) {
    f.period = Period{*k, 1};
  }
  return f;
}

namespace {

struct ScanTask {
  int c1, c2, s;
};

std::vector<ScanTask> scan_tasks(const SeriesParams& p, const std::vector<int>& x_subs) {
  const auto [d1, d2] = lattice_steps(p);
  auto first = [](int lo, int base, int d) {
    int r = ((base - lo) % d + d) % d;
    return lo + r;
  };
  std::vector<ScanTask> tasks;
  for (int c1 = first(-p.B11, p.C1, d1); c1 <= p.B11; c1 += d1) {
    for (int c2 = first(-p.B22, p.C2, d2); c2 <= p.B22; c2 += d2) {
      for (int s : x_subs) tasks.push_back({c1, c2, s});
    }
  }
  return tasks;
}

std::optional<ProductHit> scan_one(const SeriesParams& p, const ScanTask& t, const EulerOptions& opt) {
  const SeriesParams pc = p.with_c(t.c1, t.c2);
  if (t.s < 0 || !is_admissible(pc, t.s)) return std::nullopt;
  const auto b = eval_series(pc, opt.order, XMode::power(t.s)).q_coefficients();
  if (b[0] != 1) return std::nullopt;
  ProductForm f = product_form(b, opt);
  if (!f.period) return std::nullopt;
  return ProductHit{t.c1, t.c2, t.s, std::move(f)};
}

void sort_hits(std::vector<ProductHit>& hits) {
  std::sort(hits.begin(), hits.end(), [](const ProductHit& a, const ProductHit& b) {
    return std::tie(a.c1, a.c2, a.x_power) < std::tie(b.c1, b.c2, b.x_power);
  });
}

}  // namespace

std::vector<ProductHit> product_scan_serial(const SeriesParams& p, const EulerOptions& opt,
                                            const std::vector<int>& x_subs) {
  std::vector<ProductHit> hits;
  for (const auto& t : scan_tasks(p, x_subs)) {
    if (auto h = scan_one(p, t, opt)) hits.push_back(std::move(*h));
  }
  sort_hits(hits);
  return hits;
}

std::vector<ProductHit> product_scan(const SeriesParams& p, const EulerOptions& opt,
                                     const std::vector<int>& x_subs) {
  const auto tasks = scan_tasks(p, x_subs);
  std::vector<std::optional<ProductHit>> slots(tasks.size());
  const auto n = static_cast<long>(tasks.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    slots[static_cast<std::size_t>(i)] = scan_one(p, tasks[static_cast<std::size_t>(i)], opt);
  }
  std::vector<ProductHit> hits;
  for (auto& s : slots) {
    if (s) hits.push_back(std::move(*s));
  }
  sort_hits(hits);
  return hits;
}

}  // namespace qfe
