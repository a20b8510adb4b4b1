#pragma once

// Reference data reproduced by the test suite and by `qfe repro`.

#include <string>
#include <vector>

#include "qfe/contiguous.hpp"
#include "qfe/series.hpp"

namespace qfe::golden {

/// First Andrews-Gordon k=3 double series and its 4x3 index box.
SeriesParams running_params();
IndexBox running_box();
/// The 16 primary relations in that box, T1 block, T2 block, T3 block.
const std::vector<std::string>& running_equations();
/// Coefficient forms of the master combination that are printed in full.
struct FormSample {
  SeriesRef ref;
  std::vector<std::pair<int, std::string>> coeffs;  // (t index, 1-based; coefficient)
};
const std::vector<FormSample>& running_form_samples();

/// A closed system together with the search setting that produces it.
struct GoldenSystem {
  std::string name;
  SeriesParams params;
  IndexBox box;
  std::vector<IndexPair> keep;
  /// Relation form, when that is how the system is displayed.
  std::vector<std::string> relations;
  /// Solved form S(x) = sum f S(x q^gamma).
  std::vector<std::string> equations;
};

/// Andrews' three equations for the first Andrews-Gordon k=3 series.
const GoldenSystem& ag_system();
/// The four-series system behind the multiplicity-two partition theorem.
const GoldenSystem& thm11_system();
/// The two-series system behind the bicolored matching theorem.
const GoldenSystem& thm41_system();
/// Same with D1 = 1 (bicolored gap theorem).
const GoldenSystem& thm41_variant_system();
const std::vector<const GoldenSystem*>& all_systems();

/// Non-zero entries of the one basis vector of the running example that is not
/// a unit vector, keyed by 1-based unknown.
const std::vector<std::pair<int, std::string>>& running_mixed_solution();

}  // namespace qfe::golden
