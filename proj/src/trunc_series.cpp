#include "qfe/trunc_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace qfe {

namespace {

void trim(std::vector<Integer>& row) {
  while (!row.empty() && row.back() == 0) row.pop_back();
}

}  // namespace

TruncSeries::TruncSeries(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("negative truncation order");
  rows_.resize(static_cast<std::size_t>(order) + 1);
}

TruncSeries TruncSeries::one(int order) {
  TruncSeries s(order);
  s.rows_[0].push_back(1);
  return s;
}

TruncSeries TruncSeries::from_poly(const PolyXQ& p, int order) {
  TruncSeries s(order);
  for (const auto& t : p.terms()) {
    if (t.mono.qdeg < 0) {
      throw std::invalid_argument("negative q-degree in truncated series: " + p.to_string());
    }
    if (t.mono.qdeg <= order) s.add_to(t.mono.xdeg, t.mono.qdeg, t.coeff);
  }
  return s;
}

TruncSeries TruncSeries::from_q_coefficients(const std::vector<Integer>& b, int order) {
  TruncSeries s(order);
  for (std::size_t n = 0; n < b.size() && n <= static_cast<std::size_t>(order); ++n) {
    if (b[n] != 0) s.rows_[n].push_back(b[n]);
  }
  return s;
}

Integer TruncSeries::coeff(int xdeg, int qdeg) const {
  if (qdeg < 0 || qdeg > order_ || xdeg < 0) return 0;
  const auto& row = rows_[static_cast<std::size_t>(qdeg)];
  if (static_cast<std::size_t>(xdeg) >= row.size()) return 0;
  return row[static_cast<std::size_t>(xdeg)];
}

void TruncSeries::add_to(int xdeg, int qdeg, const Integer& value) {
  if (qdeg < 0) throw std::invalid_argument("negative q-degree in truncated series");
  if (xdeg < 0) throw std::invalid_argument("negative x-degree in truncated series");
  if (qdeg > order_ || value == 0) return;
  auto& row = rows_[static_cast<std::size_t>(qdeg)];
  if (row.size() <= static_cast<std::size_t>(xdeg)) row.resize(static_cast<std::size_t>(xdeg) + 1);
  row[static_cast<std::size_t>(xdeg)] += value;
  trim(row);
}

bool TruncSeries::is_zero() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const auto& r) { return r.empty(); });
}

bool TruncSeries::is_x_free() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const auto& r) { return r.size() <= 1; });
}

std::optional<int> TruncSeries::lowest_qdeg() const {
  for (std::size_t n = 0; n < rows_.size(); ++n) {
    if (!rows_[n].empty()) return static_cast<int>(n);
  }
  return std::nullopt;
}

int TruncSeries::max_xdeg() const {
  std::size_t m = 0;
  for (const auto& r : rows_) m = std::max(m, r.size());
  return m == 0 ? 0 : static_cast<int>(m) - 1;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& other) {
  if (other.order_ != order_) throw std::invalid_argument("truncation order mismatch");
  for (std::size_t n = 0; n < rows_.size(); ++n) {
    const auto& src = other.rows_[n];
    if (src.empty()) continue;
    auto& dst = rows_[n];
    if (dst.size() < src.size()) dst.resize(src.size());
    for (std::size_t k = 0; k < src.size(); ++k) dst[k] += src[k];
    trim(dst);
  }
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& other) {
  return *this += other.scaled(-1);
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  if (a.order_ != b.order_) throw std::invalid_argument("truncation order mismatch");
  TruncSeries r(a.order_);
  for (std::size_t i = 0; i < a.rows_.size(); ++i) {
    const auto& ra = a.rows_[i];
    if (ra.empty()) continue;
    for (std::size_t j = 0; i + j < a.rows_.size(); ++j) {
      const auto& rb = b.rows_[j];
      if (rb.empty()) continue;
      auto& dst = r.rows_[i + j];
      if (dst.size() < ra.size() + rb.size() - 1) dst.resize(ra.size() + rb.size() - 1);
      for (std::size_t k = 0; k < ra.size(); ++k) {
        if (ra[k] == 0) continue;
        for (std::size_t l = 0; l < rb.size(); ++l) {
          mpz_addmul(dst[k + l].get_mpz_t(), ra[k].get_mpz_t(), rb[l].get_mpz_t());
        }
      }
    }
  }
  for (auto& row : r.rows_) trim(row);
  return r;
}

bool operator==(const TruncSeries& a, const TruncSeries& b) {
  return a.order_ == b.order_ && a.rows_ == b.rows_;
}

TruncSeries TruncSeries::scaled(const Integer& c) const {
  TruncSeries r(order_);
  if (c == 0) return r;
  r.rows_ = rows_;
  for (auto& row : r.rows_) {
    for (auto& v : row) v *= c;
  }
  return r;
}

TruncSeries TruncSeries::mul_poly(const PolyXQ& p) const {
  TruncSeries r(order_);
  for (const auto& t : p.terms()) {
    if (t.mono.qdeg < 0) throw std::invalid_argument("negative q-degree multiplier");
    for (std::size_t n = 0; n + static_cast<std::size_t>(t.mono.qdeg) < rows_.size(); ++n) {
      const auto& src = rows_[n];
      if (src.empty()) continue;
      auto& dst = r.rows_[n + static_cast<std::size_t>(t.mono.qdeg)];
      const auto off = static_cast<std::size_t>(t.mono.xdeg);
      if (dst.size() < src.size() + off) dst.resize(src.size() + off);
      for (std::size_t k = 0; k < src.size(); ++k) {
        mpz_addmul(dst[k + off].get_mpz_t(), src[k].get_mpz_t(), t.coeff.get_mpz_t());
      }
    }
  }
  for (auto& row : r.rows_) trim(row);
  return r;
}

TruncSeries TruncSeries::subst_x(int s) const {
  if (s < 0) throw std::invalid_argument("negative substitution shift");
  if (s == 0) return *this;
  TruncSeries r(order_);
  for (std::size_t n = 0; n < rows_.size(); ++n) {
    const auto& row = rows_[n];
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row[k] == 0) continue;
      const std::size_t m = n + k * static_cast<std::size_t>(s);
      if (m > static_cast<std::size_t>(order_)) break;
      r.add_to(static_cast<int>(k), static_cast<int>(m), row[k]);
    }
  }
  return r;
}

TruncSeries TruncSeries::eval_x(const Integer& c, int s) const {
  if (s < 0) throw std::invalid_argument("negative substitution shift");
  TruncSeries r(order_);
  for (std::size_t n = 0; n < rows_.size(); ++n) {
    const auto& row = rows_[n];
    Integer power = 1;
    for (std::size_t k = 0; k < row.size(); ++k) {
      const std::size_t m = n + k * static_cast<std::size_t>(s);
      if (m > static_cast<std::size_t>(order_)) break;
      if (row[k] != 0) r.add_to(0, static_cast<int>(m), row[k] * power);
      power *= c;
    }
  }
  return r;
}

TruncSeries TruncSeries::truncated(int order) const {
  if (order > order_) throw std::invalid_argument("cannot extend truncation order");
  TruncSeries r(order);
  std::copy(rows_.begin(), rows_.begin() + order + 1, r.rows_.begin());
  return r;
}

std::vector<Integer> TruncSeries::q_coefficients() const {
  if (!is_x_free()) throw std::logic_error("series still depends on x");
  std::vector<Integer> b(rows_.size());
  for (std::size_t n = 0; n < rows_.size(); ++n) {
    if (!rows_[n].empty()) b[n] = rows_[n][0];
  }
  return b;
}

PolyXQ TruncSeries::to_poly() const {
  std::vector<PolyXQ::Term> terms;
  for (std::size_t n = 0; n < rows_.size(); ++n) {
    for (std::size_t k = 0; k < rows_[n].size(); ++k) {
      if (rows_[n][k] != 0) {
        terms.push_back({{static_cast<int>(k), static_cast<int>(n)}, rows_[n][k]});
      }
    }
  }
  return PolyXQ::from_terms(std::move(terms));
}

std::string TruncSeries::to_string() const {
  return to_poly().to_string(PolyStyle::Compact) + " + O(q^" + std::to_string(order_ + 1) + ")";
}

}  // namespace qfe
