#include "qfe/golden.hpp"

namespace qfe::golden {

SeriesParams running_params() { return SeriesParams::parse("4,2,2,-2,-1,2,1,1,1,1"); }

IndexBox running_box() { return {-2, 1, -1, 1, 1, 1}; }

const std::vector<std::string>& running_equations() {
  static const std::vector<std::string> eqs{
      "S[-2,-1](x) - S[-1,-1](x) - x^2*q^2*S[0,0](x*q) = 0",
      "S[-2,0](x) - S[-1,0](x) - x^2*q^2*S[0,1](x*q) = 0",
      "S[-1,-1](x) - S[0,-1](x) - x^2*q^3*S[1,0](x*q) = 0",
      "S[-1,0](x) - S[0,0](x) - x^2*q^3*S[1,1](x*q) = 0",
      "S[-2,-1](x) - S[-2,0](x) - x*q*S[-2,0](x*q) = 0",
      "S[-2,0](x) - S[-2,1](x) - x*q^2*S[-2,1](x*q) = 0",
      "S[-1,-1](x) - S[-1,0](x) - x*q*S[-1,0](x*q) = 0",
      "S[-1,0](x) - S[-1,1](x) - x*q^2*S[-1,1](x*q) = 0",
      "S[0,-1](x) - S[0,0](x) - x*q*S[0,0](x*q) = 0",
      "S[0,0](x) - S[0,1](x) - x*q^2*S[0,1](x*q) = 0",
      "S[1,-1](x) - S[1,0](x) - x*q*S[1,0](x*q) = 0",
      "S[1,0](x) - S[1,1](x) - x*q^2*S[1,1](x*q) = 0",
      "S[0,0](x) - S[-2,-1](x*q) = 0",
      "S[0,1](x) - S[-2,0](x*q) = 0",
      "S[1,0](x) - S[-1,-1](x*q) = 0",
      "S[1,1](x) - S[-1,0](x*q) = 0",
  };
  return eqs;
}

const std::vector<FormSample>& running_form_samples() {
  static const std::vector<FormSample> forms{
      {{-2, -1, 0}, {{1, "1"}, {5, "1"}}},
      {{-1, 0, 0}, {{2, "-1"}, {4, "1"}, {7, "-1"}, {8, "1"}}},
      {{0, 0, 0}, {{4, "-1"}, {9, "-1"}, {10, "1"}, {13, "1"}}},
      {{-2, -1, 1}, {{13, "-1"}}},
      {{-2, 0, 1}, {{5, "-x*q"}, {14, "-1"}}},
      {{0, -1, 1}, {}},
      {{1, -1, 1}, {}},
      {{0, 0, 1}, {{1, "-x^2*q^2"}, {9, "-x*q"}}},
      {{1, 0, 1}, {{3, "-x^2*q^3"}, {11, "-x*q"}}},
      {{0, 1, 1}, {{2, "-x^2*q^2"}, {10, "-x*q^2"}}},
      {{1, 1, 1}, {{4, "-x^2*q^3"}, {12, "-x*q^2"}}},
  };
  return forms;
}

const GoldenSystem& ag_system() {
  static const GoldenSystem g{
      "ag-k3",
      running_params(),
      running_box(),
      {{-2, -1}, {-1, -1}, {0, 0}},
      {
          "S[-2,-1](x) - S[-1,-1](x) - x^2*q^2*S[0,0](x*q) = 0",
          "S[-1,-1](x) - S[0,0](x) - x*q*S[-1,-1](x*q) = 0",
          "S[0,0](x) - S[-2,-1](x*q) = 0",
      },
      {
          "S[-2,-1](x) = S[-2,-1](x*q) + x*q*S[-1,-1](x*q) + x^2*q^2*S[0,0](x*q)",
          "S[-1,-1](x) = S[-2,-1](x*q) + x*q*S[-1,-1](x*q)",
          "S[0,0](x) = S[-2,-1](x*q)",
      }};
  return g;
}

const GoldenSystem& thm11_system() {
  static const GoldenSystem g{
      "thm11",
      SeriesParams::parse("6,2,2,-4,-1,2,1,2,1,1"),
      {-4, 4, -1, 2, 2, 1},
      {{-4, -1}, {-2, -1}, {-2, 0}, {0, 0}},
      {},
      {
          "S[-4,-1](x) = S[-4,-1](x*q) + x*q*S[-2,0](x*q) + x^2*q^2*S[0,0](x*q)",
          "S[-2,-1](x) = S[-4,-1](x*q) + x*q*S[-2,0](x*q)",
          "S[-2,0](x) = S[-4,-1](x*q)",
          "S[0,0](x) = S[-2,-1](x*q)",
      }};
  return g;
}

const GoldenSystem& thm41_system() {
  static const GoldenSystem g{
      "thm41",
      SeriesParams::parse("2,1,1,0,0,2,1,1,1,1"),
      {-2, 2, -1, 1, 1, 1},
      {{0, 0}, {1, 0}},
      {},
      {
          "S[0,0](x) = (1 + x^2*q^2)*S[0,0](x*q) + (x*q + x^2*q^3)*S[1,0](x*q)",
          "S[1,0](x) = S[0,0](x*q) + (x*q + x^2*q^3)*S[1,0](x*q)",
      }};
  return g;
}

const GoldenSystem& thm41_variant_system() {
  static const GoldenSystem g{
      "thm42",
      SeriesParams::parse("2,1,1,0,0,1,1,1,1,1"),
      {-2, 2, -1, 1, 1, 1},
      {{0, 0}, {1, 0}},
      {},
      {
          "S[0,0](x) = S[0,0](x*q) + (x*q + x*q^2)*S[1,0](x*q)",
          "S[1,0](x) = S[0,0](x*q) + x*q*S[1,0](x*q)",
      }};
  return g;
}

const std::vector<const GoldenSystem*>& all_systems() {
  static const std::vector<const GoldenSystem*> all{&ag_system(), &thm11_system(), &thm41_system(),
                                                    &thm41_variant_system()};
  return all;
}

const std::vector<std::pair<int, std::string>>& running_mixed_solution() {
  static const std::vector<std::pair<int, std::string>> v{
      {4, "1"}, {7, "1"}, {12, "-x*q"}, {15, "x*q"}, {16, "-x*q"}};
  return v;
}

}  // namespace qfe::golden
