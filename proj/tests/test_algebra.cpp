#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qfe/poly.hpp"
#include "qfe/rational.hpp"
#include "qfe/trunc_series.hpp"

using namespace qfe;

namespace {

PolyXQ random_poly(std::mt19937& rng, int terms = 4) {
  std::uniform_int_distribution<int> xd(0, 3), qd(-2, 4), cd(-5, 5);
  std::vector<PolyXQ::Term> t;
  for (int i = 0; i < terms; ++i) t.push_back({{xd(rng), qd(rng)}, cd(rng)});
  return PolyXQ::from_terms(std::move(t));
}

PolyXQ x() { return PolyXQ::x_pow(1); }
PolyXQ q() { return PolyXQ::q_pow(1); }

}  // namespace

TEST_CASE("monomial products and simple identities") {
  CHECK((x() * q()) * (x() * q() * q()) == PolyXQ::monomial(1, 2, 3));
  const PolyXQ a = 1 + PolyXQ::monomial(1, 2, 2);
  const PolyXQ b = 1 - PolyXQ::monomial(1, 2, 2);
  CHECK(a * b == 1 - PolyXQ::monomial(1, 4, 4));
  std::mt19937 rng(7);
  for (int i = 0; i < 20; ++i) {
    const PolyXQ p = random_poly(rng);
    CHECK((p + (-p)).is_zero());
  }
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(11);
  for (int i = 0; i < 60; ++i) {
    const PolyXQ a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("canonical printing round trips") {
  const PolyXQ p = 1 - PolyXQ::monomial(1, 2, 3);
  CHECK(p.to_string() == "-1*x^2*q^3 + 1");
  CHECK(PolyXQ::parse("-1*x^2*q^3 + 1") == p);
  CHECK((x() * q() + PolyXQ::monomial(1, 2, 3)).to_string(PolyStyle::Compact) == "x*q + x^2*q^3");
  CHECK(PolyXQ::parse("x*q^-2 - 3*x^2") == PolyXQ::monomial(1, 1, -2) - PolyXQ::monomial(3, 2, 0));
  CHECK(PolyXQ().to_string() == "0");
  std::mt19937 rng(3);
  for (int i = 0; i < 50; ++i) {
    const PolyXQ a = random_poly(rng, 6);
    CHECK(PolyXQ::parse(a.to_string()) == a);
    CHECK(PolyXQ::parse(a.to_string(PolyStyle::Compact)) == a);
  }
  CHECK_THROWS_AS(PolyXQ::parse("x^"), std::invalid_argument);
  CHECK_THROWS_AS(PolyXQ::parse("2*y"), std::invalid_argument);
}

TEST_CASE("gcd and exact division") {
  std::mt19937 rng(5);
  for (int i = 0; i < 40; ++i) {
    const PolyXQ a = random_poly(rng, 3), b = random_poly(rng, 3), g = random_poly(rng, 2);
    if (a.is_zero() || g.is_zero()) continue;
    const auto back = divide_exact(a * g, g);
    REQUIRE(back.has_value());
    CHECK(*back == a);
    const PolyXQ d = gcd(a * g, b * g);
    CHECK(divide_exact(a * g, d).has_value());
    CHECK(divide_exact(b * g, d).has_value());
    if (!b.is_zero()) CHECK(divide_exact(d, gcd(g, g)).has_value());
  }
  CHECK_FALSE(divide_exact(1 + x(), 1 + q()).has_value());
  CHECK(gcd(PolyXQ::monomial(6, 1, 2), PolyXQ::monomial(4, 2, 1)) == PolyXQ::monomial(2, 1, 1));
}

TEST_CASE("rational functions") {
  const RatXQ r(x() * x() - 1, x() - 1);
  CHECK(r == RatXQ(x() + 1));
  CHECK(r.reduced().is_polynomial());
  CHECK(r.reduced().num() == x() + 1);
  const RatXQ s(x(), PolyXQ::monomial(-2, 0, 3));
  const RatXQ sr = s.reduced();
  CHECK(sr.den() == 2);
  CHECK(sr.num() == PolyXQ::monomial(-1, 1, -3));
  CHECK(RatXQ(1, x()) + RatXQ(1, x()) == RatXQ(2, x()));
  CHECK_THROWS_AS(RatXQ(1, 0), std::domain_error);
}

TEST_CASE("truncated series arithmetic") {
  const int M = 10;
  // 1/(q;q)_inf and (q;q)_inf to q^10
  TruncSeries inv = TruncSeries::one(M), prod = TruncSeries::one(M);
  for (int k = 1; k <= M; ++k) {
    std::vector<Integer> geo(M + 1);
    for (int j = 0; j <= M; j += k) geo[j] = 1;
    inv = inv * TruncSeries::from_q_coefficients(geo, M);
    prod = prod * TruncSeries::from_poly(1 - PolyXQ::q_pow(k), M);
  }
  CHECK(inv * prod == TruncSeries::one(M));
  CHECK(inv.coeff(0, 10) == 42);

  const auto s = TruncSeries::from_poly(1 + q(), 1);
  CHECK((s * s).to_poly() == 1 + PolyXQ::monomial(2, 0, 1));
  CHECK(inv * TruncSeries::one(M) == inv);
  CHECK_THROWS_AS(TruncSeries(2) * TruncSeries(3), std::invalid_argument);
  CHECK_THROWS_AS(TruncSeries::from_poly(PolyXQ::q_pow(-1), 3), std::invalid_argument);
}

TEST_CASE("x substitution") {
  const auto a = TruncSeries::from_poly(PolyXQ::monomial(1, 2, 2), 6);
  CHECK(a.subst_x(1).to_poly() == PolyXQ::monomial(1, 2, 4));
  CHECK(a.subst_x(0) == a);
  CHECK(a.subst_x(3).is_zero());

  std::mt19937 rng(9);
  for (int i = 0; i < 30; ++i) {
    PolyXQ p = random_poly(rng, 6);
    p = p.shifted(0, 2);
    if (p.min_qdeg() < 0) continue;
    const auto t = TruncSeries::from_poly(p, 8);
    CHECK(t.subst_x(3) == t.subst_x(1).subst_x(2));
    CHECK(t.subst_x(2) == TruncSeries::from_poly(p.subst_x(2), 8));
    // truncation coherence
    const PolyXQ r = random_poly(rng, 3).shifted(0, 2);
    if (r.min_qdeg() < 0) continue;
    CHECK(t * TruncSeries::from_poly(r, 8) == TruncSeries::from_poly(p * r, 8));
  }
}
