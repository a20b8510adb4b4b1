#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace qfe {

/// Parts in weakly increasing order.
struct Partition {
  std::vector<int> parts;
  int weight() const;
  int length() const { return static_cast<int>(parts.size()); }
};

/// All partitions of n, each listed once, in lexicographic order of parts.
std::vector<Partition> partitions_of(int n);

enum class Color { Red, Blue };

struct ColoredPart {
  int size = 1;
  Color color = Color::Red;
  /// By size, red before blue on ties.
  friend auto operator<=>(const ColoredPart&, const ColoredPart&) = default;
};

struct BicoloredPartition {
  std::vector<ColoredPart> parts;  // canonical (sorted) order
  int weight() const;
  int length() const { return static_cast<int>(parts.size()); }
  bool has(int size, Color c) const;
  /// `r1+b1+b2`
  std::string to_string() const;
};

/// Bicolored partitions of n in which no colored size repeats, in canonical
/// order. This is the common first condition of both bicolored classes.
std::vector<BicoloredPartition> distinct_bicolored(int n);

enum class Variant { T1, T2 };

/// Multiplicity at most two; sizes present at least two apart; sizes that
/// repeat at least three apart.
bool is_thm11(const Partition& p);

/// Every red b is matched to its own blue b or b+1. T2 also forbids a red 1
/// together with a blue 1.
bool is_bicolored_match(const BicoloredPartition& p, Variant v);

/// No red 1; a blue b excludes red b+1 and red b+2; no successive red parts
/// r_1 < ... < r_k < b directly in front of a blue b have differences
/// 1,2,...,2 (a red b alongside the blue b does not interrupt them).
/// T2 also forbids red 2.
bool is_bicolored_gap(const BicoloredPartition& p, Variant v);

/// counts[m][n] for 0 <= m, n <= N, indexed by number of parts and weight.
using CountTable = std::vector<std::vector<long>>;

CountTable thm11_table(int N);
CountTable bicolored_match_table(int N, Variant v);
CountTable bicolored_gap_table(int N, Variant v);

long count_thm11(int m, int n);
long count_bicolored_match(int m, int n, Variant v);
long count_bicolored_gap(int m, int n, Variant v);

/// Partitions of n in which no part appears more than three times.
long count_at_most_3(int n);

struct Thm12Row {
  int n = 0;
  long at_most_3 = 0;
  long match = 0;
  long gap = 0;
};

struct Thm12Report {
  std::vector<Thm12Row> rows;
  std::optional<int> first_mismatch;
  bool ok() const { return !first_mismatch; }
};

Thm12Report verify_thm12(int N);

}  // namespace qfe
