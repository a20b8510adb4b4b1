#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qfe/contiguous.hpp"
#include "qfe/golden.hpp"

using namespace qfe;

namespace {

// Numeric value of the left side, or nullopt when some term cannot be
// expanded without negative q-powers.
std::optional<TruncSeries> residual(const SeriesParams& p, const FuncEquation& eq, int M) {
  TruncSeries r(M);
  for (const auto& t : eq.terms) {
    const SeriesParams pc = p.with_c(t.ref.c1, t.ref.c2);
    if (!has_nonnegative_exponents(pc, t.ref.shift) || t.coeff.min_qdeg() < 0) return std::nullopt;
    r += eval_series(pc, M, XMode::symbolic(t.ref.shift)).mul_poly(t.coeff);
  }
  return r;
}

}  // namespace

TEST_CASE("primary relations at a pair") {
  const auto p = golden::running_params();
  const auto eqs = primary_equations(p, -2, -1);
  CHECK(eqs[0].to_string() == "S[-2,-1](x) - S[-1,-1](x) - x^2*q^2*S[0,0](x*q) = 0");
  CHECK(primary_equations(p, 0, 0)[2].to_string() == "S[0,0](x) - S[-2,-1](x*q) = 0");

  const auto t13 = SeriesParams::parse("2,2,2,-1,-1,1,1,1,2,1,1,-1");
  const auto e2 = primary_equations(t13, -1, -1)[1];
  CHECK(e2.coeff_of({0, 0, 1}) == PolyXQ::monomial(1, 1, 1));
  const auto r = residual(t13, e2, 20);
  REQUIRE(r.has_value());
  CHECK(r->is_zero());
}

TEST_CASE("equation text round trip") {
  for (const auto& s : golden::running_equations()) CHECK(FuncEquation::parse(s).to_string() == s);
  const auto e = FuncEquation::parse("-2*S[0,0](x) + (x*q + x^2*q^3)*S[1,0](x*q^2) = 0");
  CHECK(e.coeff_of({0, 0, 0}) == -2);
  CHECK(e.coeff_of({1, 0, 2}) == PolyXQ::parse("x*q + x^2*q^3"));
  CHECK(e.to_string() == "-2*S[0,0](x) + (x*q + x^2*q^3)*S[1,0](x*q^2) = 0");
  CHECK(e.equivalent(FuncEquation::parse("4*x*S[0,0](x) + (-2*x^2*q - 2*x^3*q^3)*S[1,0](x*q^2)")));
  CHECK_FALSE(e.equivalent(FuncEquation::parse("S[0,0](x) + S[1,0](x*q^2)")));
  CHECK_THROWS_AS(FuncEquation::parse("S[0,0](y) = 0"), std::invalid_argument);
}

TEST_CASE("running example box") {
  const auto p = golden::running_params();
  const auto box = golden::running_box();
  const auto inst = enumerate_box_instances(p, box);
  const auto& gold = golden::running_equations();
  REQUIRE(inst.size() == gold.size());
  int blocks[4] = {0, 0, 0, 0};
  for (std::size_t i = 0; i < inst.size(); ++i) {
    CHECK(inst[i].equation.to_string() == gold[i]);
    ++blocks[inst[i].type];
  }
  CHECK(blocks[1] == 4);
  CHECK(blocks[2] == 8);
  CHECK(blocks[3] == 4);
  CHECK(count_equations(p, 3, 2) == 16);
  CHECK(count_series(p, 3, 2) == 24);
  CHECK_FALSE(feasible(p, 3, 2, 3));
  CHECK(enumerate_box(p, {0, 0, 0, 0, 1, 1}).empty());
}

TEST_CASE("lattice steps") {
  CHECK(lattice_steps(SeriesParams::parse("6,2,2,-4,-1,2,1,2,1,1")) == std::pair{2, 1});
  CHECK(lattice_steps(golden::running_params()) == std::pair{1, 1});
  CHECK(lattice_steps(SeriesParams::parse("3,3,3,0,0,3,3,3,3,1")) == std::pair{3, 3});
}

TEST_CASE("rectangle sizes") {
  const RectSizes r = rect_sizes(golden::running_params());
  CHECK(r.x == std::array<int, 3>{2, 0, 2});
  CHECK(r.y == std::array<int, 3>{1, 1, 1});
  // gamma*D1 = B11 and B12 = gamma*D2 give a width-0 and a height-0 rectangle
  const RectSizes d = rect_sizes(SeriesParams::parse("2,2,1,0,0,2,1,1,1,1"));
  CHECK(d.y[0] == 0);
  CHECK(d.x[0] == 1);
  CHECK(count_series(golden::running_params(), 0, 0) == 2);
  CHECK(count_equations(golden::running_params(), 0, 0) == 0);
  CHECK_THROWS_AS(count_equations(SeriesParams::parse("6,2,2,-4,-1,2,1,2,1,1"), 3, 2),
                  std::invalid_argument);
}

TEST_CASE("counting formula agrees with enumeration") {
  const auto t11 = SeriesParams::parse("6,2,2,-4,-1,2,1,2,1,1");
  const IndexBox box{-4, 4, -1, 2, 2, 1};
  const auto eqs = enumerate_box(t11, box);
  CHECK(static_cast<long long>(eqs.size()) == count_equations(t11, 8, 3));
  CHECK(count_series(t11, 8, 3) == 40);

  std::mt19937 rng(99);
  std::uniform_int_distribution<int> B(1, 6), D(1, 3), w(0, 4);
  for (int trial = 0; trial < 200; ++trial) {
    SeriesParams p{B(rng), B(rng), B(rng), 0, 0, D(rng), D(rng), D(rng), D(rng), D(rng), 1, 1};
    const auto [d1, d2] = lattice_steps(p);
    const int a = w(rng), b = w(rng);
    const IndexBox bx{0, a * d1, 0, b * d2, d1, d2};
    CHECK_MESSAGE(static_cast<long long>(enumerate_box(p, bx).size()) ==
                      count_equations(p, a * d1, b * d2),
                  p.to_string());
  }
}

TEST_CASE("dilation filter") {
  CHECK(dilation_filter(golden::running_params()));
  CHECK_FALSE(dilation_filter(SeriesParams::parse("4,2,2,0,0,2,1,2,2,1")));
  CHECK(dilation_filter(SeriesParams::parse("9,6,6,0,-1,3,1,3,2,1,1,-1")));
}

TEST_CASE("contiguous relations vanish numerically") {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<int> B(1, 6), C(-3, 3), D(1, 3), g(1, 2), e(0, 1);
  int checked = 0;
  while (checked < 50) {
    SeriesParams p{B(rng), B(rng), B(rng), C(rng), C(rng), D(rng), D(rng), D(rng), D(rng), g(rng),
                   e(rng) ? 1 : -1, e(rng) ? 1 : -1};
    if (!is_admissible(p)) continue;
    const auto eqs = primary_equations(p, p.C1, p.C2);
    std::vector<TruncSeries> rs;
    for (const auto& eq : eqs) {
      auto r = residual(p, eq, 20);
      if (!r) break;
      rs.push_back(*r);
    }
    if (rs.size() != 3) continue;
    for (const auto& r : rs) CHECK_MESSAGE(r.is_zero(), p.to_string());
    ++checked;
  }
}
