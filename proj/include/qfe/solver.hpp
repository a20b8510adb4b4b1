#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qfe/contiguous.hpp"
#include "qfe/linalg.hpp"
#include "qfe/rational.hpp"
#include "qfe/series.hpp"

namespace qfe {

/// sum_j t_j * (equation j of enumerate_box), collected by series.
struct MasterCombination {
  SeriesParams params;
  IndexBox box;
  std::vector<FuncEquation> equations;
  /// Every series of the box: all pairs with shift 0, then all with shift gamma.
  std::vector<SeriesRef> refs;
  /// forms[k][j] is the coefficient of t_{j+1} in front of refs[k].
  std::vector<PolyVector> forms;

  int unknowns() const { return static_cast<int>(equations.size()); }
  /// Index of ref in refs, or -1.
  int index_of(const SeriesRef& ref) const;
};

MasterCombination assemble(const SeriesParams& p, const IndexBox& box);

struct AnnihilatorBasis {
  std::vector<PolyVector> vectors;
  /// Unknown (0-based) left free for each vector.
  std::vector<int> free_columns;

  int dimension() const { return static_cast<int>(vectors.size()); }
};

/// Solves "coefficient = 0" for every series whose pair is not kept.
AnnihilatorBasis solve_annihilator(const MasterCombination& mc, const std::vector<IndexPair>& keep);

/// S_lhs(x) = sum f * S_ref(x q^gamma).
struct SystemEquation {
  IndexPair lhs;
  struct Term {
    RatXQ coeff;
    IndexPair pair;
  };
  std::vector<Term> rhs;

  /// `S[0,0](x) = (1 + x^2*q^2)*S[0,0](x*q) + (x*q + x^2*q^3)*S[1,0](x*q)`.
  std::string to_string(int gamma) const;
  /// The same relation with denominators cleared, as a FuncEquation.
  FuncEquation as_relation(int gamma) const;
};

struct ExtractedSystem {
  SeriesParams params;
  std::vector<IndexPair> keep;
  /// One relation per basis vector, restricted to the kept series and made
  /// primitive.
  std::vector<FuncEquation> relations;
  /// Solved form, one equation per kept pair whose S(x) could be isolated.
  std::vector<SystemEquation> equations;
  int rank = 0;
  bool all_polynomial = false;
  bool all_nonnegative = false;

  bool complete() const { return rank == static_cast<int>(keep.size()); }
  std::vector<std::string> equation_strings() const;
  std::vector<std::string> relation_strings() const;
};

/// Substitutes the basis into the kept forms and row reduces. The result is
/// complete() only when every kept S(x) can be isolated; otherwise `rank`
/// reports how many could.
ExtractedSystem extract_system(const MasterCombination& mc, const AnnihilatorBasis& basis,
                               const std::vector<IndexPair>& keep);

struct VerifyReport {
  /// Lowest q-degree of each equation's residual; order+1 when it vanishes.
  std::vector<int> residual_orders;
  int order = 0;
  bool ok() const;
  int min_order() const;
};

/// Lowest q-degree at which the relation fails numerically, or M+1.
/// Throws std::domain_error when a series in it has negative q-powers.
int residual_order(const SeriesParams& p, const FuncEquation& eq, int M);

VerifyReport verify_system(const SeriesParams& p, const ExtractedSystem& sys, int M);
VerifyReport verify_relations(const SeriesParams& p, const std::vector<FuncEquation>& rels, int M);

/// Iterates S_i <- sum f * S_j(x q^gamma) from S_i = 1. Returns the series once
/// two successive iterates agree, nullopt after max_iterations.
std::optional<std::vector<TruncSeries>> fixed_point(const std::vector<SystemEquation>& eqs,
                                                    const std::vector<IndexPair>& keep, int gamma,
                                                    int M, int max_iterations,
                                                    int* iterations = nullptr);

enum class UniquenessStatus { Unique, NotStabilized, Mismatch, PreconditionFailed };
std::string_view to_string(UniquenessStatus s);

struct UniquenessReport {
  UniquenessStatus status = UniquenessStatus::PreconditionFailed;
  int iterations = 0;
  std::string detail;
};

UniquenessReport verify_uniqueness(const ExtractedSystem& sys, int M);

}  // namespace qfe
