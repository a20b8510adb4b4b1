#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "qfe/partitions.hpp"
#include "qfe/series.hpp"

using namespace qfe;

namespace {

BicoloredPartition colored(std::initializer_list<std::pair<int, char>> parts) {
  BicoloredPartition p;
  for (auto [s, c] : parts) p.parts.push_back({s, c == 'r' ? Color::Red : Color::Blue});
  std::sort(p.parts.begin(), p.parts.end());
  return p;
}

long total(const CountTable& t, int n) {
  long s = 0;
  for (const auto& row : t) s += row[static_cast<std::size_t>(n)];
  return s;
}

// table[m][n] against [x^m q^n] of the series
void check_against_series(const CountTable& t, const char* params, int N) {
  const auto s = eval_series(SeriesParams::parse(params), N, XMode::symbolic());
  for (int m = 0; m <= N; ++m) {
    for (int n = 0; n <= N; ++n) {
      INFO("m=" << m << " n=" << n);
      CHECK(Integer(t[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)]) == s.coeff(m, n));
    }
  }
}

std::set<std::string> listed(int n, bool (*pred)(const BicoloredPartition&, Variant)) {
  std::set<std::string> out;
  for (const auto& p : distinct_bicolored(n)) {
    if (pred(p, Variant::T1)) out.insert(p.to_string());
  }
  return out;
}

}  // namespace

TEST_CASE("ordinary partitions") {
  CHECK(partitions_of(0).size() == 1);
  for (int n = 0; n <= 20; ++n) {
    const auto ps = partitions_of(n);
    CHECK(static_cast<long>(ps.size()) == oracle::count_parts(n, [](int) { return true; }));
    std::set<std::vector<int>> seen;
    for (const auto& p : ps) {
      CHECK(p.weight() == n);
      CHECK(std::is_sorted(p.parts.begin(), p.parts.end()));
      seen.insert(p.parts);
    }
    CHECK(seen.size() == ps.size());
  }
}

TEST_CASE("distinct bicolored partitions are duplicate free") {
  for (int n = 0; n <= 14; ++n) {
    const auto ps = distinct_bicolored(n);
    std::set<std::string> seen;
    for (const auto& p : ps) {
      CHECK(p.weight() == n);
      seen.insert(p.to_string());
    }
    CHECK(seen.size() == ps.size());
    // two independent colors of distinct parts: prod (1+q^k)^2
    long expect = 0;
    for (int r = 0; r <= n; ++r) {
      expect += oracle::count_parts(r, [](int) { return true; }, 1) *
                oracle::count_parts(n - r, [](int) { return true; }, 1);
    }
    CHECK(static_cast<long>(ps.size()) == expect);
  }
}

TEST_CASE("at most three repetitions") {
  CHECK(count_at_most_3(0) == 1);
  CHECK(count_at_most_3(4) == 4);
  const auto prod = expand_product(ProductSpec::parse("(q^{4};q^{4})_inf^{1} * (q^{1},q^{2},q^{3},q^{4};q^{4})_inf^{-1}"), 40);
  for (int n = 0; n <= 40; ++n) {
    CHECK(count_at_most_3(n) == oracle::count_parts(n, [](int) { return true; }, 3));
    CHECK(Integer(count_at_most_3(n)) == prod.coeff(0, n));
  }
}

TEST_CASE("multiplicity two class") {
  CHECK(count_thm11(0, 0) == 1);
  // 12 with distinct parts (the Rogers-Ramanujan ones) and 14 with a repeat
  long s = 0;
  for (int m = 0; m <= 14; ++m) s += count_thm11(m, 14);
  CHECK(s == 26);
  std::set<std::vector<int>> repeated;
  long distinct = 0;
  for (const auto& p : partitions_of(14)) {
    if (!is_thm11(p)) continue;
    if (std::adjacent_find(p.parts.begin(), p.parts.end()) != p.parts.end()) {
      repeated.insert(p.parts);
    } else {
      ++distinct;
    }
  }
  CHECK(distinct == 12);
  CHECK(repeated.size() == 14);
  for (const std::vector<int>& v : {std::vector<int>{1, 1, 6, 6}, {2, 2, 5, 5}, {1, 1, 3, 9},
                                    {1, 1, 4, 8}, {1, 1, 5, 7}, {2, 2, 4, 6}, {1, 3, 3, 7},
                                    {1, 3, 5, 5}, {7, 7}, {1, 1, 12}}) {
    CHECK(repeated.count(v) == 1);
  }
  CHECK(is_thm11({{1, 1, 4, 4}}));
  CHECK_FALSE(is_thm11({{1, 1, 3, 3}}));
  CHECK_FALSE(is_thm11({{2, 2, 2}}));
  CHECK_FALSE(is_thm11({{2, 3}}));
  CHECK(is_thm11({{1, 3, 3}}));
  const auto t = thm11_table(30);
  for (int m = 0; m <= 6; ++m) CHECK(t[static_cast<std::size_t>(m)][14] == count_thm11(m, 14));
  check_against_series(t, "6,2,2,-4,-1,2,1,2,1,1", 30);
}

TEST_CASE("matching class") {
  CHECK(listed(4, is_bicolored_match) ==
        std::set<std::string>{"b4", "b1+b3", "r2+b2", "r1+b1+b2"});
  CHECK(is_bicolored_match(colored({{5, 'r'}, {5, 'b'}}), Variant::T1));
  CHECK(count_bicolored_match(2, 10, Variant::T1) > 0);
  CHECK_FALSE(is_bicolored_match(colored({{4, 'r'}, {5, 'r'}, {5, 'b'}}), Variant::T1));
  CHECK_FALSE(is_bicolored_match(colored({{1, 'r'}, {2, 'r'}, {2, 'b'}}), Variant::T1));
  CHECK(is_bicolored_match(colored({{1, 'r'}, {2, 'r'}, {2, 'b'}, {3, 'b'}}), Variant::T1));
  // matching r2 to b2 first leaves r1 without a partner; r1-b2, r2-b3 works
  CHECK(is_bicolored_match(colored({{1, 'r'}, {2, 'r'}, {2, 'b'}, {3, 'b'}}), Variant::T2));
  CHECK_FALSE(is_bicolored_match(colored({{1, 'r'}, {2, 'r'}, {3, 'r'}, {2, 'b'}, {3, 'b'}}), Variant::T1));
  CHECK(is_bicolored_match(colored({{1, 'r'}, {2, 'r'}, {1, 'b'}, {3, 'b'}, {2, 'b'}}), Variant::T1));
  CHECK_FALSE(is_bicolored_match(colored({{1, 'r'}, {1, 'b'}}), Variant::T2));
  CHECK(is_bicolored_match(colored({{1, 'r'}, {1, 'b'}}), Variant::T1));
  check_against_series(bicolored_match_table(30, Variant::T1), "2,1,1,0,0,2,1,1,1,1", 30);
  check_against_series(bicolored_match_table(30, Variant::T2), "2,1,1,1,0,2,1,1,1,1", 30);
}

TEST_CASE("gap class") {
  CHECK(listed(4, is_bicolored_gap) == std::set<std::string>{"b4", "r4", "b1+b3", "r2+b2"});
  CHECK_FALSE(is_bicolored_gap(colored({{2, 'r'}, {3, 'r'}, {5, 'b'}}), Variant::T1));
  CHECK(is_bicolored_gap(colored({{3, 'r'}, {5, 'b'}}), Variant::T1));
  CHECK_FALSE(is_bicolored_gap(colored({{4, 'r'}, {5, 'b'}}), Variant::T1));
  CHECK_FALSE(is_bicolored_gap(colored({{3, 'r'}, {4, 'r'}, {6, 'r'}, {8, 'b'}}), Variant::T1));
  CHECK_FALSE(is_bicolored_gap(colored({{2, 'r'}, {4, 'r'}, {5, 'r'}, {7, 'b'}}), Variant::T1));
  CHECK_FALSE(is_bicolored_gap(colored({{2, 'r'}, {3, 'r'}, {3, 'b'}}), Variant::T1));
  CHECK_FALSE(is_bicolored_gap(colored({{1, 'r'}}), Variant::T1));
  CHECK_FALSE(is_bicolored_gap(colored({{3, 'b'}, {4, 'r'}}), Variant::T1));
  CHECK_FALSE(is_bicolored_gap(colored({{3, 'b'}, {5, 'r'}}), Variant::T1));
  CHECK(is_bicolored_gap(colored({{3, 'b'}, {6, 'r'}}), Variant::T1));
  CHECK(is_bicolored_gap(colored({{2, 'r'}}), Variant::T1));
  CHECK_FALSE(is_bicolored_gap(colored({{2, 'r'}}), Variant::T2));
  check_against_series(bicolored_gap_table(30, Variant::T1), "2,1,1,0,0,1,1,1,1,1", 30);
  check_against_series(bicolored_gap_table(30, Variant::T2), "2,1,1,1,0,1,1,1,1,1", 30);
}

TEST_CASE("three classes agree") {
  const auto rep = verify_thm12(25);
  CHECK(rep.ok());
  REQUIRE(rep.rows.size() == 26);
  CHECK(rep.rows[0].at_most_3 == 1);
  CHECK(rep.rows[0].match == 1);
  CHECK(rep.rows[0].gap == 1);
  CHECK(rep.rows[4].at_most_3 == 4);
  CHECK(rep.rows[4].match == 4);
  CHECK(rep.rows[4].gap == 4);
  CHECK(total(bicolored_gap_table(8, Variant::T1), 8) == 16);
}

TEST_CASE("negative arguments") {
  CHECK_THROWS_AS(count_thm11(-1, 3), std::invalid_argument);
  CHECK_THROWS_AS(count_at_most_3(-1), std::invalid_argument);
  CHECK_THROWS_AS(verify_thm12(-1), std::invalid_argument);
}
