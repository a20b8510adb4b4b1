#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qfe/euler.hpp"
#include "qfe/serialize.hpp"
#include "qfe/solver.hpp"

namespace qfe {

struct IntRange {
  int lo = 1;
  int hi = 1;
  std::vector<int> values() const;
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

enum class PruneMode { Strict, Heuristic };

struct SearchConfig {
  IntRange B11{1, 8}, B22{1, 8}, B12{1, 8};
  IntRange D1{1, 4}, D2{1, 4}, K1{1, 4}, K2{1, 4}, gamma{1, 4};
  std::vector<int> eps1{1}, eps2{1};
  /// Seed pair, the corner every keep-set contains.
  IntRange C1{-2, 0}, C2{-1, 0};
  /// Box around the seed in lattice steps: C1 + lo1*d1 .. C1 + hi1*d1, etc.
  int lo1 = 0, hi1 = 3, lo2 = 0, hi2 = 2;
  std::vector<int> sizes{2, 3, 4};
  /// Both counts of the feasibility inequality must stay at or below this.
  long long count_cap = 200;
  PruneMode prune = PruneMode::Heuristic;
  /// Keep-sets tried per candidate and size.
  int keep_cap = 64;
  /// Stop at the first system of a candidate.
  bool first_only = true;
  int verify_order = 30;
  bool euler = false;
  EulerOptions euler_options{};
  /// 0: OpenMP default.
  int jobs = 0;

  /// Throws std::invalid_argument on empty ranges or non-positive caps.
  void validate() const;
  /// Parameter tuples in enumeration order.
  std::vector<SeriesParams> tuples() const;
  IndexBox box_for(const SeriesParams& p) const;

  static SearchConfig from_json(const Json& j);
  Json to_json() const;
};

struct HitRecord {
  SeriesParams params;
  IndexBox box;
  std::vector<IndexPair> keep;
  ExtractedSystem system;
  VerifyReport verify;
  UniquenessReport uniqueness;
  std::vector<ProductHit> products;

  Json to_json() const;
  static HitRecord from_json(const Json& j);
};

/// A candidate or keep-set that did not produce a hit. `stage` is one of
/// dilation, count-cap, infeasible, lattice, no-system, verify, error.
struct FailureRecord {
  SeriesParams params;
  std::vector<IndexPair> keep;
  std::string stage;
  std::string detail;

  Json to_json() const;
  static FailureRecord from_json(const Json& j);
};

struct CandidateResult {
  SeriesParams params;
  std::vector<HitRecord> hits;
  std::vector<FailureRecord> failures;
  int keep_sets_tried = 0;
};

/// Work for one parameter tuple; what every search worker runs.
CandidateResult search_candidate(const SearchConfig& cfg, const SeriesParams& p);

struct SearchSummary {
  long tuples = 0;
  long resumed = 0;
  long skipped = 0;
  long keep_sets = 0;
  long hits = 0;
  long failures = 0;
  Json to_json() const;
};

struct SearchOutcome {
  std::vector<HitRecord> hits;          // by params, then keep-set
  std::vector<FailureRecord> failures;  // by params, then keep-set, then stage
  SearchSummary summary;

  /// One JSON object per line, no timestamps, so equal runs give equal bytes.
  std::string hits_jsonl() const;
  std::string failures_jsonl() const;
};

/// Append-only record of finished tuples: `<base>.partial` holds every
/// result (with a timestamp) as it completes, `<base>.done` the finished keys.
class SearchJournal {
 public:
  explicit SearchJournal(std::filesystem::path base);

  const std::map<SeriesParams, CandidateResult>& completed() const { return completed_; }
  /// Thread-safe.
  void record(const CandidateResult& r);

 private:
  std::filesystem::path base_;
  std::map<SeriesParams, CandidateResult> completed_;
  std::ofstream partial_;
  std::ofstream done_;
  std::mutex mu_;
};

/// Parallel over parameter tuples. Tuples already in the journal are not
/// recomputed.
SearchOutcome run_search(const SearchConfig& cfg, SearchJournal* journal = nullptr);
/// Single-threaded reference with identical output.
SearchOutcome run_search_serial(const SearchConfig& cfg, SearchJournal* journal = nullptr);

/// Writes `<path>` (hits) and `<path minus .jsonl>.failures.jsonl`.
void write_outcome(const SearchOutcome& out, const std::filesystem::path& path);

/// Every verified closed system on d of the box's series, deduplicated.
/// keep_cap < 0 tries every subset.
std::vector<ExtractedSystem> list_all_systems(const SeriesParams& p, const IndexBox& box, int d,
                                              int verify_order = 30, int keep_cap = -1);

/// Size-d subsets of pairs in lexicographic index order, all containing
/// `must` when given; at most cap of them (cap < 0: all).
std::vector<std::vector<IndexPair>> keep_sets(const std::vector<IndexPair>& pairs, int d,
                                              const std::optional<IndexPair>& must, int cap);

}  // namespace qfe
