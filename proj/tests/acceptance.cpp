// One PASS/FAIL line per acceptance criterion. Exit status is non-zero when a
// criterion fails for any reason other than a listed known conflict.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qfe/contiguous.hpp"
#include "qfe/euler.hpp"
#include "qfe/golden.hpp"
#include "qfe/partitions.hpp"
#include "qfe/search.hpp"
#include "qfe/solver.hpp"

using namespace qfe;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  // set when the only failing check is a documented conflict with the source
  std::string known;
  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

ExtractedSystem solve(const golden::GoldenSystem& g, int* dim = nullptr) {
  const auto mc = assemble(g.params, g.box);
  const auto basis = solve_annihilator(mc, g.keep);
  if (dim) *dim = basis.dimension();
  return extract_system(mc, basis, g.keep);
}

bool same_q_coeffs(const char* params, const ProductSpec& spec, int M) {
  return eval_series(SeriesParams::parse(params), M, XMode::one()).q_coefficients() ==
         expand_product(spec, M).q_coefficients();
}

Outcome c1() {
  Outcome o;
  const auto p = golden::running_params();
  std::vector<std::string> got;
  for (const auto& e : enumerate_box(p, golden::running_box())) got.push_back(e.to_string());
  o.check(got.size() == 16, std::to_string(got.size()) + " equations");
  o.check(got == golden::running_equations(), "equations differ from the printed list");
  o.check(count_equations(p, 3, 2) == 16, "count_equations != 16");
  o.check(count_series(p, 3, 2) == 24, "count_series != 24");
  return o;
}

Outcome c2() {
  Outcome o;
  const auto& g = golden::ag_system();
  int dim = 0;
  const auto sys = solve(g, &dim);
  o.check(dim == 3, "basis dimension " + std::to_string(dim));
  o.check(sys.relation_strings() == g.relations, "relations differ");
  return o;
}

Outcome golden_verified(const golden::GoldenSystem& g, Outcome o) {
  const auto sys = solve(g);
  o.check(sys.equation_strings() == g.equations, g.name + ": equations differ");
  o.check(verify_system(g.params, sys, 25).ok(), g.name + ": residual below q^25");
  const auto u = verify_uniqueness(sys, 25);
  o.check(u.status == UniquenessStatus::Unique, g.name + ": uniqueness " + std::string(to_string(u.status)));
  return o;
}

Outcome c3() { return golden_verified(golden::thm11_system(), {}); }

Outcome c4() {
  return golden_verified(golden::thm41_variant_system(), golden_verified(golden::thm41_system(), {}));
}

Outcome c5() {
  Outcome o;
  o.check(same_q_coeffs("2,2,2,-1,-1,1,1,1,2,1,1,-1",
                        ProductSpec::parse("(q^{2},q^{4},q^{10},q^{12};q^{14})_inf^{-1}"), 50),
          "C=(-1,-1)");
  o.check(same_q_coeffs("2,2,2,0,1,1,1,1,2,1,1,-1",
                        ProductSpec::parse("(q^{2},q^{6},q^{8},q^{12};q^{14})_inf^{-1}"), 50),
          "C=(0,1)");
  o.check(same_q_coeffs("2,2,2,1,1,1,1,1,2,1,1,-1",
                        ProductSpec::parse("(q^{4},q^{6},q^{8},q^{10};q^{14})_inf^{-1}"), 50),
          "C=(1,1)");
  return o;
}

Outcome c6() {
  Outcome o;
  const char* params = "9,6,6,-6,-5,3,1,3,2,1,1,-1";
  o.check(same_q_coeffs(params, ProductSpec{6, {{1, 1}, {5, 1}}}, 50), "series != (q,q^5;q^6)_inf");
  const auto f = product_form(eval_series(SeriesParams::parse(params), 50, XMode::one()).q_coefficients());
  o.check(f.period && *f.period == Period{6, 1}, "no period 6");
  if (f.period) o.check(f.spec() == ProductSpec{6, {{1, 1}, {5, 1}}}, "exponents differ");
  return o;
}

Outcome c7() {
  Outcome o;
  const char* params = "2,1,1,0,0,2,1,1,1,1";
  o.check(same_q_coeffs(params, ProductSpec{4, {{1, -1}, {2, -1}, {3, -1}}}, 50),
          "series != (q^4;q^4)_inf/(q;q)_inf");
  bool found = false;
  for (const auto& h : product_scan(SeriesParams::parse(params))) {
    if (h.c1 != 0 || h.c2 != 0 || h.x_power != 0) continue;
    found = true;
    o.check(h.form.period && h.form.period->period == 4, "period != 4");
    o.check(h.form.spec() == ProductSpec{4, {{1, -1}, {2, -1}, {3, -1}}}, "exponents differ");
  }
  o.check(found, "scan missed (0,0)");
  return o;
}

bool table_matches(const CountTable& t, const char* params, int N) {
  const auto s = eval_series(SeriesParams::parse(params), N, XMode::symbolic());
  for (int m = 0; m <= N; ++m) {
    for (int n = 0; n <= N; ++n) {
      if (Integer(t[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)]) != s.coeff(m, n)) return false;
    }
  }
  return true;
}

Outcome c8() {
  Outcome o;
  long n14 = 0;
  for (int m = 0; m <= 14; ++m) n14 += count_thm11(m, 14);
  long match4 = 0, gap4 = 0;
  for (int m = 0; m <= 4; ++m) {
    match4 += count_bicolored_match(m, 4, Variant::T1);
    gap4 += count_bicolored_gap(m, 4, Variant::T1);
  }
  o.check(match4 == 4, "matching class at n=4: " + std::to_string(match4));
  o.check(gap4 == 4, "gap class at n=4: " + std::to_string(gap4));
  o.check(verify_thm12(25).ok(), "verify_thm12(25)");
  const int N = 30;
  o.check(table_matches(thm11_table(N), "6,2,2,-4,-1,2,1,2,1,1", N), "multiplicity-two vs series");
  o.check(table_matches(bicolored_match_table(N, Variant::T1), "2,1,1,0,0,2,1,1,1,1", N), "match t1 vs series");
  o.check(table_matches(bicolored_match_table(N, Variant::T2), "2,1,1,1,0,2,1,1,1,1", N), "match t2 vs series");
  o.check(table_matches(bicolored_gap_table(N, Variant::T1), "2,1,1,0,0,1,1,1,1,1", N), "gap t1 vs series");
  o.check(table_matches(bicolored_gap_table(N, Variant::T2), "2,1,1,1,0,1,1,1,1,1", N), "gap t2 vs series");
  for (int n = 0; n <= N; ++n) {
    if (count_at_most_3(n) != oracle::count_parts(n, [](int) { return true; }, 3)) {
      o.check(false, "at-most-3 vs oracle at n=" + std::to_string(n));
    }
  }
  const bool rest = o.pass;
  o.check(n14 == 20, "sum_m count_thm11(m,14) = " + std::to_string(n14) + ", expected 20");
  if (rest && n14 == 26) {
    o.known = "the printed list of 20 omits 1+1+12, 2+2+10, 2+6+6, 3+3+8, 4+4+6, 7+7; "
              "26 equals the series coefficient";
  }
  return o;
}

SearchConfig pinned_small() {
  SearchConfig c;
  c.B11 = {1, 3};
  c.B22 = {1, 2};
  c.B12 = {1, 2};
  c.D1 = {1, 2};
  c.D2 = c.K1 = c.K2 = c.gamma = {1, 1};
  c.C1 = {-1, 0};
  c.C2 = {0, 0};
  c.hi1 = 2;
  c.hi2 = 1;
  c.sizes = {2};
  c.keep_cap = 8;
  return c;
}

Outcome c9() {
  Outcome o;
  std::mt19937 rng(20261014);
  std::uniform_int_distribution<int> B(1, 6), C(-3, 3), D(1, 3), g(1, 2), e(0, 1);
  int draws = 0, bad = 0;
  while (draws < 50) {
    SeriesParams p{B(rng), B(rng), B(rng), C(rng), C(rng), D(rng), D(rng), D(rng), D(rng), g(rng),
                   e(rng) ? 1 : -1, e(rng) ? 1 : -1};
    if (!is_admissible(p)) continue;
    try {
      bool ok = true;
      for (const auto& eq : primary_equations(p, p.C1, p.C2)) ok = ok && residual_order(p, eq, 20) == 21;
      bad += !ok;
      ++draws;
    } catch (const std::domain_error&) {
      // some term has negative q-powers; draw again
    }
  }
  o.check(bad == 0, std::to_string(bad) + " of 50 draws leave a residual");

  std::uniform_int_distribution<int> val(-3, 3);
  int trips = 0;
  for (int t = 0; t < 100; ++t) {
    std::vector<Integer> a(31);
    for (int i = 1; i <= 30; ++i) a[static_cast<std::size_t>(i)] = val(rng);
    trips += euler_exponents(euler_product(a, 30)) == a;
  }
  o.check(trips == 100, std::to_string(100 - trips) + " of 100 round trips differ");

  auto cfg = pinned_small();
  cfg.jobs = 1;
  const auto a = run_search(cfg);
  cfg.jobs = 4;
  const auto b = run_search(cfg);
  o.check(a.summary.hits > 0, "pinned search found nothing");
  o.check(a.hits_jsonl() == b.hits_jsonl() && a.failures_jsonl() == b.failures_jsonl(),
          "search output differs between runs");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;  // 0: none stated
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> all = {
      {1, "running example: 16 equations, 24 series", 1, c1},
      {2, "solver golden: 3-dim basis, Andrews' system", 5, c2},
      {3, "four-series system, verified at M=25", 0, c3},
      {4, "two two-series systems, verified at M=25", 0, c4},
      {5, "three mod-14 products to q^50", 10, c5},
      {6, "(9,6,6) series is (q,q^5;q^6)_inf, period 6", 0, c6},
      {7, "S00(1) = (q^4;q^4)/(q;q), period 4", 0, c7},
      {8, "partition classes and their series", 60, c8},
      {9, "residuals, Euler round trips, search determinism", 0, c9},
  };
  int unexpected = 0;
  for (const auto& c : all) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
      o.known.clear();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0 && s >= c.limit_s) {
      o.check(false, "took " + std::to_string(s) + " s");
      o.known.clear();
    }
    std::printf("%s  criterion %d  %-52s %7.3f s", o.pass ? "PASS" : "FAIL", c.id, c.name, s);
    if (!o.pass) std::printf("  [%s]", o.detail.c_str());
    if (!o.pass && !o.known.empty()) std::printf("  known conflict: %s", o.known.c_str());
    std::printf("\n");
    if (!o.pass && o.known.empty()) ++unexpected;
  }
  std::printf("%d unexpected failure(s)\n", unexpected);
  return unexpected == 0 ? 0 : 1;
}
