#include "qfe/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace qfe {

int Partition::weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }

namespace {

void ascending(int n, int min_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back({cur});
    return;
  }
  for (int k = min_part; k <= n; ++k) {
    cur.push_back(k);
    ascending(n - k, k, cur, out);
    cur.pop_back();
  }
}

// sets of distinct positive integers of the given total, ascending
void distinct_sets(int n, int min_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = min_part; k <= n; ++k) {
    cur.push_back(k);
    distinct_sets(n - k, k + 1, cur, out);
    cur.pop_back();
  }
}

const std::vector<std::vector<int>>& distinct_of(int n) {
  static std::vector<std::vector<std::vector<int>>> cache;
  static const auto fill = [](int upto) {
    while (static_cast<int>(cache.size()) <= upto) {
      std::vector<std::vector<int>> sets;
      std::vector<int> cur;
      distinct_sets(static_cast<int>(cache.size()), 1, cur, sets);
      cache.push_back(std::move(sets));
    }
  };
#pragma omp critical(qfe_distinct_cache)
  fill(n);
  return cache[static_cast<std::size_t>(n)];
}

void check_nonneg(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("negative partition size");
}

// Kuhn's augmenting paths: reds on the left, blues on the right.
bool all_reds_matched(const std::vector<int>& reds, const std::vector<int>& blues) {
  std::vector<int> owner(blues.size(), -1);
  std::function<bool(std::size_t, std::vector<bool>&)> augment =
      [&](std::size_t r, std::vector<bool>& seen) {
        for (std::size_t b = 0; b < blues.size(); ++b) {
          if (seen[b] || (blues[b] != reds[r] && blues[b] != reds[r] + 1)) continue;
          seen[b] = true;
          if (owner[b] < 0 || augment(static_cast<std::size_t>(owner[b]), seen)) {
            owner[b] = static_cast<int>(r);
            return true;
          }
        }
        return false;
      };
  for (std::size_t r = 0; r < reds.size(); ++r) {
    std::vector<bool> seen(blues.size(), false);
    if (!augment(r, seen)) return false;
  }
  return true;
}

CountTable table_from(int N, const std::function<bool(const BicoloredPartition&)>& keep) {
  if (N < 0) throw std::invalid_argument("negative bound");
  CountTable t(static_cast<std::size_t>(N) + 1, std::vector<long>(static_cast<std::size_t>(N) + 1));
  for (int n = 0; n <= N; ++n) {
    for (const auto& p : distinct_bicolored(n)) {
      if (keep(p)) ++t[static_cast<std::size_t>(p.length())][static_cast<std::size_t>(n)];
    }
  }
  return t;
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  check_nonneg(0, n);
  std::vector<Partition> out;
  std::vector<int> cur;
  ascending(n, 1, cur, out);
  return out;
}

int BicoloredPartition::weight() const {
  int w = 0;
  for (const auto& p : parts) w += p.size;
  return w;
}

bool BicoloredPartition::has(int size, Color c) const {
  return std::binary_search(parts.begin(), parts.end(), ColoredPart{size, c});
}

std::string BicoloredPartition::to_string() const {
  if (parts.empty()) return "0";
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += "+";
    out += (p.color == Color::Red ? "r" : "b") + std::to_string(p.size);
  }
  return out;
}

std::vector<BicoloredPartition> distinct_bicolored(int n) {
  check_nonneg(0, n);
  std::vector<BicoloredPartition> out;
  for (int red_weight = 0; red_weight <= n; ++red_weight) {
    for (const auto& reds : distinct_of(red_weight)) {
      for (const auto& blues : distinct_of(n - red_weight)) {
        BicoloredPartition p;
        for (int r : reds) p.parts.push_back({r, Color::Red});
        for (int b : blues) p.parts.push_back({b, Color::Blue});
        std::sort(p.parts.begin(), p.parts.end());
        out.push_back(std::move(p));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const BicoloredPartition& a, const BicoloredPartition& b) {
    return a.parts < b.parts;
  });
  return out;
}

bool is_thm11(const Partition& p) {
  std::vector<std::pair<int, int>> sizes;  // (size, multiplicity)
  for (int k : p.parts) {
    if (!sizes.empty() && sizes.back().first == k) {
      ++sizes.back().second;
    } else {
      sizes.emplace_back(k, 1);
    }
  }
  int last_repeat = -100;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i].second > 2) return false;
    if (i > 0 && sizes[i].first - sizes[i - 1].first < 2) return false;
    if (sizes[i].second == 2) {
      if (sizes[i].first - last_repeat < 3) return false;
      last_repeat = sizes[i].first;
    }
  }
  return true;
}

bool is_bicolored_match(const BicoloredPartition& p, Variant v) {
  std::vector<int> reds, blues;
  for (const auto& c : p.parts) (c.color == Color::Red ? reds : blues).push_back(c.size);
  if (std::adjacent_find(reds.begin(), reds.end()) != reds.end()) return false;
  if (std::adjacent_find(blues.begin(), blues.end()) != blues.end()) return false;
  if (v == Variant::T2 && p.has(1, Color::Red) && p.has(1, Color::Blue)) return false;
  return all_reds_matched(reds, blues);
}

bool is_bicolored_gap(const BicoloredPartition& p, Variant v) {
  const auto& ps = p.parts;
  for (std::size_t i = 1; i < ps.size(); ++i) {
    if (ps[i] == ps[i - 1]) return false;
  }
  if (p.has(1, Color::Red)) return false;
  if (v == Variant::T2 && p.has(2, Color::Red)) return false;
  for (std::size_t j = 0; j < ps.size(); ++j) {
    if (ps[j].color != Color::Blue) continue;
    const int b = ps[j].size;
    if (p.has(b + 1, Color::Red) || p.has(b + 2, Color::Red)) return false;
    // red parts just below b, walking back; a red b sits beside the blue b
    // and does not break the run
    std::vector<int> run;
    for (std::size_t i = j; i-- > 0;) {
      if (ps[i].color != Color::Red) break;
      if (ps[i].size != b) run.push_back(ps[i].size);
    }
    // any suffix r_i < ... < r_k < b with differences 1, 2, ..., 2
    int next = b;
    for (std::size_t k = 0; k < run.size(); ++k) {
      if (next - run[k] == 1) return false;
      if (next - run[k] != 2) break;
      next = run[k];
    }
  }
  return true;
}

CountTable thm11_table(int N) {
  if (N < 0) throw std::invalid_argument("negative bound");
  CountTable t(static_cast<std::size_t>(N) + 1, std::vector<long>(static_cast<std::size_t>(N) + 1));
  for (int n = 0; n <= N; ++n) {
    for (const auto& p : partitions_of(n)) {
      if (is_thm11(p)) ++t[static_cast<std::size_t>(p.length())][static_cast<std::size_t>(n)];
    }
  }
  return t;
}

CountTable bicolored_match_table(int N, Variant v) {
  return table_from(N, [v](const BicoloredPartition& p) { return is_bicolored_match(p, v); });
}

CountTable bicolored_gap_table(int N, Variant v) {
  return table_from(N, [v](const BicoloredPartition& p) { return is_bicolored_gap(p, v); });
}

long count_thm11(int m, int n) {
  check_nonneg(m, n);
  long c = 0;
  for (const auto& p : partitions_of(n)) c += p.length() == m && is_thm11(p);
  return c;
}

long count_bicolored_match(int m, int n, Variant v) {
  check_nonneg(m, n);
  long c = 0;
  for (const auto& p : distinct_bicolored(n)) c += p.length() == m && is_bicolored_match(p, v);
  return c;
}

long count_bicolored_gap(int m, int n, Variant v) {
  check_nonneg(m, n);
  long c = 0;
  for (const auto& p : distinct_bicolored(n)) c += p.length() == m && is_bicolored_gap(p, v);
  return c;
}

long count_at_most_3(int n) {
  check_nonneg(0, n);
  long c = 0;
  for (const auto& p : partitions_of(n)) {
    bool ok = true;
    for (std::size_t i = 0; i + 3 < p.parts.size(); ++i) ok = ok && p.parts[i] != p.parts[i + 3];
    c += ok;
  }
  return c;
}

Thm12Report verify_thm12(int N) {
  if (N < 0) throw std::invalid_argument("negative bound");
  Thm12Report rep;
  const CountTable match = bicolored_match_table(N, Variant::T1);
  const CountTable gap = bicolored_gap_table(N, Variant::T1);
  for (int n = 0; n <= N; ++n) {
    Thm12Row row{n, count_at_most_3(n), 0, 0};
    for (int m = 0; m <= N; ++m) {
      row.match += match[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)];
      row.gap += gap[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)];
    }
    if (!rep.first_mismatch && (row.at_most_3 != row.match || row.at_most_3 != row.gap)) {
      rep.first_mismatch = n;
    }
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace qfe
