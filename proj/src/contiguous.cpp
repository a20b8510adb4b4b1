#include "qfe/contiguous.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace qfe {

std::string SeriesRef::to_string() const {
  std::string out = "S[" + std::to_string(c1) + "," + std::to_string(c2) + "](x";
  if (shift == 1) {
    out += "*q";
  } else if (shift != 0) {
    out += "*q^" + std::to_string(shift);
  }
  return out + ")";
}

void FuncEquation::add(const SeriesRef& ref, const PolyXQ& coeff) {
  if (coeff.is_zero()) return;
  for (auto it = terms.begin(); it != terms.end(); ++it) {
    if (it->ref == ref) {
      it->coeff += coeff;
      if (it->coeff.is_zero()) terms.erase(it);
      return;
    }
  }
  terms.push_back({coeff, ref});
}

PolyXQ FuncEquation::coeff_of(const SeriesRef& ref) const {
  for (const auto& t : terms) {
    if (t.ref == ref) return t.coeff;
  }
  return {};
}

bool FuncEquation::same_terms(const FuncEquation& other) const {
  if (terms.size() != other.terms.size()) return false;
  return std::all_of(terms.begin(), terms.end(),
                     [&](const Term& t) { return other.coeff_of(t.ref) == t.coeff; });
}

bool FuncEquation::equivalent(const FuncEquation& other) const {
  if (terms.size() != other.terms.size()) return false;
  if (terms.empty()) return true;
  const PolyXQ& a0 = terms[0].coeff;
  const PolyXQ b0 = other.coeff_of(terms[0].ref);
  if (b0.is_zero()) return false;
  return std::all_of(terms.begin(), terms.end(), [&](const Term& t) {
    const PolyXQ b = other.coeff_of(t.ref);
    return !b.is_zero() && t.coeff * b0 == b * a0;
  });
}

std::string FuncEquation::to_string() const {
  if (terms.empty()) return "0 = 0";
  std::string out;
  for (const auto& t : terms) {
    const PolyXQ& c = t.coeff;
    bool negative = false;
    std::string factor;
    if (c.is_monomial()) {
      negative = c.terms()[0].coeff < 0;
      const PolyXQ mag = negative ? -c : c;
      if (!mag.is_one()) factor = mag.to_string(PolyStyle::Compact) + "*";
    } else {
      factor = "(" + c.to_string(PolyStyle::Compact) + ")*";
    }
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += factor + t.ref.to_string();
  }
  return out + " = 0";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int read_int(std::string_view s, std::size_t& pos, std::string_view whole) {
  std::size_t end = pos;
  if (end < s.size() && (s[end] == '-' || s[end] == '+')) ++end;
  while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
  int v = 0;
  const char* first = s.data() + pos + (s[pos] == '+' ? 1 : 0);
  auto [ptr, ec] = std::from_chars(first, s.data() + end, v);
  if (ec != std::errc() || ptr != s.data() + end) {
    throw std::invalid_argument("bad integer in series reference: " + std::string(whole));
  }
  pos = end;
  return v;
}

void expect(std::string_view s, std::size_t& pos, std::string_view lit, std::string_view whole) {
  if (s.substr(pos, lit.size()) != lit) {
    throw std::invalid_argument("malformed series reference: " + std::string(whole));
  }
  pos += lit.size();
}

}  // namespace

std::size_t parse_series_ref(std::string_view text, SeriesRef& out) {
  std::size_t pos = 0;
  expect(text, pos, "S[", text);
  out.c1 = read_int(text, pos, text);
  expect(text, pos, ",", text);
  out.c2 = read_int(text, pos, text);
  expect(text, pos, "](x", text);
  out.shift = 0;
  if (pos < text.size() && text[pos] == '*') {
    expect(text, pos, "*q", text);
    out.shift = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      out.shift = read_int(text, pos, text);
    }
  }
  expect(text, pos, ")", text);
  return pos;
}

FuncEquation FuncEquation::parse(std::string_view text) {
  std::string_view body = trim(text);
  if (body.size() >= 3 && body.substr(body.size() - 3) == "= 0") {
    body = trim(body.substr(0, body.size() - 3));
  }
  FuncEquation eq;
  std::size_t pos = 0;
  while (pos < body.size()) {
    const std::size_t at = body.find("S[", pos);
    if (at == std::string_view::npos) {
      throw std::invalid_argument("expected a series reference in: " + std::string(text));
    }
    std::string_view prefix = trim(body.substr(pos, at - pos));
    bool negative = false;
    if (!prefix.empty() && (prefix.front() == '+' || prefix.front() == '-')) {
      negative = prefix.front() == '-';
      prefix = trim(prefix.substr(1));
    }
    PolyXQ coeff(1);
    if (!prefix.empty()) {
      if (prefix.back() != '*') {
        throw std::invalid_argument("expected '*' before series reference: " + std::string(text));
      }
      prefix = trim(prefix.substr(0, prefix.size() - 1));
      if (prefix.size() >= 2 && prefix.front() == '(' && prefix.back() == ')') {
        prefix = prefix.substr(1, prefix.size() - 2);
      }
      coeff = PolyXQ::parse(prefix);
    }
    if (negative) coeff = -coeff;
    SeriesRef ref;
    pos = at + parse_series_ref(body.substr(at), ref);
    eq.add(ref, coeff);
  }
  return eq;
}

void IndexBox::validate() const {
  if (d1 < 1 || d2 < 1) throw std::invalid_argument("lattice steps must be positive");
  if (m1 > M1 || m2 > M2) throw std::invalid_argument("empty index box");
  if ((M1 - m1) % d1 != 0 || (M2 - m2) % d2 != 0) {
    throw std::invalid_argument("lattice steps must divide the box widths");
  }
}

bool IndexBox::contains(int c1, int c2) const {
  return c1 >= m1 && c1 <= M1 && c2 >= m2 && c2 <= M2 && (c1 - m1) % d1 == 0 &&
         (c2 - m2) % d2 == 0;
}

std::vector<IndexPair> IndexBox::pairs() const {
  validate();
  std::vector<IndexPair> out;
  for (int a = m1; a <= M1; a += d1) {
    for (int b = m2; b <= M2; b += d2) out.emplace_back(a, b);
  }
  return out;
}

std::array<FuncEquation, 3> primary_equations(const SeriesParams& p, int c1, int c2) {
  p.validate();
  const int g = p.gamma;
  std::array<FuncEquation, 3> eqs;
  eqs[0].add({c1, c2, 0}, 1);
  eqs[0].add({c1 + p.K1, c2, 0}, -1);
  eqs[0].add({c1 + p.B11 - g * p.D1, c2 + p.B12 - g * p.D2, g},
             PolyXQ::monomial(-p.eps1, p.D1, p.B11 + c1));
  eqs[1].add({c1, c2, 0}, 1);
  eqs[1].add({c1, c2 + p.K2, 0}, -1);
  eqs[1].add({c1 + p.B12 - g * p.D1, c2 + p.B22 - g * p.D2, g},
             PolyXQ::monomial(-p.eps2, p.D2, p.B22 + c2));
  eqs[2].add({c1, c2, 0}, 1);
  eqs[2].add({c1 - g * p.D1, c2 - g * p.D2, g}, -1);
  return eqs;
}

std::pair<int, int> lattice_steps(const SeriesParams& p) {
  p.validate();
  const int d1 = std::gcd(std::gcd(p.K1, p.B11), std::gcd(p.B12, p.gamma * p.D1));
  const int d2 = std::gcd(std::gcd(p.K2, p.B22), std::gcd(p.B12, p.gamma * p.D2));
  return {d1, d2};
}

std::vector<EquationInstance> enumerate_box_instances(const SeriesParams& p,
                                                      const IndexBox& box) {
  const auto seeds = box.pairs();
  std::vector<EquationInstance> out;
  for (int type = 0; type < 3; ++type) {
    for (const auto& [c1, c2] : seeds) {
      auto eqs = primary_equations(p, c1, c2);
      const auto& eq = eqs[static_cast<std::size_t>(type)];
      const bool inside = std::all_of(eq.terms.begin(), eq.terms.end(), [&](const auto& t) {
        return box.contains(t.ref.c1, t.ref.c2);
      });
      if (inside) out.push_back({type + 1, c1, c2, eq});
    }
  }
  return out;
}

std::vector<FuncEquation> enumerate_box(const SeriesParams& p, const IndexBox& box) {
  std::vector<FuncEquation> out;
  for (auto& inst : enumerate_box_instances(p, box)) out.push_back(std::move(inst.equation));
  return out;
}

RectSizes rect_sizes(const SeriesParams& p) {
  p.validate();
  const int g = p.gamma;
  RectSizes r;
  r.x[0] = std::max({p.K1, std::abs(p.B11 - g * p.D1), std::abs(p.K1 - p.B11 + g * p.D1)});
  r.y[0] = std::abs(p.B12 - g * p.D2);
  r.x[1] = std::abs(p.B12 - g * p.D1);
  r.y[1] = std::max({p.K2, std::abs(p.B22 - g * p.D2), std::abs(p.K2 - p.B22 + g * p.D2)});
  r.x[2] = g * p.D1;
  r.y[2] = g * p.D2;
  return r;
}

namespace {

void check_deltas(const SeriesParams& p, int dm1, int dm2) {
  const auto [d1, d2] = lattice_steps(p);
  if (dm1 < 0 || dm2 < 0) throw std::invalid_argument("negative box width");
  if (dm1 % d1 != 0 || dm2 % d2 != 0) {
    throw std::invalid_argument("box widths must be multiples of the lattice steps");
  }
}

}  // namespace

long long count_equations(const SeriesParams& p, int dm1, int dm2) {
  check_deltas(p, dm1, dm2);
  const auto [d1, d2] = lattice_steps(p);
  const RectSizes r = rect_sizes(p);
  long long total = 0;
  for (std::size_t j = 0; j < 3; ++j) {
    if (r.x[j] > dm1 || r.y[j] > dm2) continue;
    total += static_cast<long long>((dm1 - r.x[j]) / d1 + 1) * ((dm2 - r.y[j]) / d2 + 1);
  }
  return total;
}

long long count_series(const SeriesParams& p, int dm1, int dm2) {
  check_deltas(p, dm1, dm2);
  const auto [d1, d2] = lattice_steps(p);
  return 2LL * (dm1 / d1 + 1) * (dm2 / d2 + 1);
}

bool feasible(const SeriesParams& p, int dm1, int dm2, int d) {
  return count_equations(p, dm1, dm2) > count_series(p, dm1, dm2) - 2LL * d;
}

bool dilation_filter(const SeriesParams& p) {
  const int g = std::gcd(std::gcd(std::gcd(p.B11, p.B22), std::gcd(p.B12, p.K1)), p.K2);
  return g == 1;
}

}  // namespace qfe
