#include "qfe/poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace qfe {

namespace {

// Dense univariate polynomials over Z (index = degree) and, on top of them,
// polynomials in x over Z[q]. They back gcd and exact division only.
using UPoly = std::vector<Integer>;
using BPoly = std::vector<UPoly>;

void trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

void trim(BPoly& a) {
  while (!a.empty() && a.back().empty()) a.pop_back();
}

UPoly u_mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

// a -= t * x^shift * b  (x here is the variable of the UPoly)
void u_submul(UPoly& a, const UPoly& t, const UPoly& b, std::size_t shift) {
  UPoly tb = u_mul(t, b);
  if (a.size() < tb.size() + shift) a.resize(tb.size() + shift);
  for (std::size_t i = 0; i < tb.size(); ++i) a[i + shift] -= tb[i];
  trim(a);
}

Integer u_content(const UPoly& a) {
  Integer g = 0;
  for (const auto& c : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void u_divexact(UPoly& a, const Integer& c) {
  for (auto& v : a) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
}

std::optional<UPoly> u_divide_exact(UPoly a, const UPoly& b) {
  if (b.empty()) throw std::domain_error("division by zero polynomial");
  if (a.empty()) return UPoly{};
  if (a.size() < b.size()) return std::nullopt;
  UPoly quot(a.size() - b.size() + 1);
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t k = a.size() - b.size();
    if (!mpz_divisible_p(a.back().get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
    Integer t;
    mpz_divexact(t.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());
    quot[k] = t;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + k] -= t * b[i];
    trim(a);
  }
  if (!a.empty()) return std::nullopt;
  trim(quot);
  return quot;
}

UPoly u_primitive_part(UPoly a) {
  if (a.empty()) return a;
  Integer c = u_content(a);
  if (a.back() < 0) c = -c;
  u_divexact(a, c);
  return a;
}

UPoly u_normalized(UPoly a) {
  if (!a.empty() && a.back() < 0) {
    for (auto& v : a) v = -v;
  }
  return a;
}

// gcd in Z[q] with positive leading coefficient; gcd(0, b) = +-b.
UPoly u_gcd(UPoly a, UPoly b) {
  if (a.empty()) return u_normalized(std::move(b));
  if (b.empty()) return u_normalized(std::move(a));
  Integer cont;
  {
    Integer ca = u_content(a);
    Integer cb = u_content(b);
    mpz_gcd(cont.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  }
  a = u_primitive_part(std::move(a));
  b = u_primitive_part(std::move(b));
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    // primitive pseudo-remainder sequence
    UPoly r = a;
    const Integer lcb = b.back();
    while (!r.empty() && r.size() >= b.size()) {
      const std::size_t k = r.size() - b.size();
      const Integer lcr = r.back();
      for (auto& v : r) v *= lcb;
      for (std::size_t i = 0; i < b.size(); ++i) r[i + k] -= lcr * b[i];
      trim(r);
    }
    a = std::move(b);
    b = u_primitive_part(std::move(r));
  }
  UPoly g = u_primitive_part(std::move(a));
  for (auto& v : g) v *= cont;
  return g;
}

UPoly b_content(const BPoly& a) {
  UPoly g;
  for (const auto& c : a) {
    g = u_gcd(std::move(g), c);
    if (g.size() == 1 && g[0] == 1) break;
  }
  return g;
}

BPoly b_divide_by_coeff(const BPoly& a, const UPoly& c) {
  BPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto d = u_divide_exact(a[i], c);
    if (!d) throw std::logic_error("content division not exact");
    r[i] = std::move(*d);
  }
  trim(r);
  return r;
}

BPoly b_primitive_part(const BPoly& a) {
  if (a.empty()) return a;
  UPoly c = b_content(a);
  if (a.back().back() < 0) {
    for (auto& v : c) v = -v;
  }
  return b_divide_by_coeff(a, c);
}

std::optional<BPoly> b_divide_exact(BPoly a, const BPoly& b) {
  if (b.empty()) throw std::domain_error("division by zero polynomial");
  if (a.empty()) return BPoly{};
  if (a.size() < b.size()) return std::nullopt;
  BPoly quot(a.size() - b.size() + 1);
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t k = a.size() - b.size();
    auto t = u_divide_exact(a.back(), b.back());
    if (!t) return std::nullopt;
    for (std::size_t i = 0; i < b.size(); ++i) u_submul(a[i + k], *t, b[i], 0);
    quot[k] = std::move(*t);
    trim(a);
  }
  if (!a.empty()) return std::nullopt;
  trim(quot);
  return quot;
}

BPoly b_normalized(BPoly a) {
  if (!a.empty() && a.back().back() < 0) {
    for (auto& c : a) {
      for (auto& v : c) v = -v;
    }
  }
  return a;
}

BPoly b_gcd(BPoly a, BPoly b) {
  if (a.empty()) return b_normalized(std::move(b));
  if (b.empty()) return b_normalized(std::move(a));
  const UPoly cont = u_gcd(b_content(a), b_content(b));
  a = b_primitive_part(a);
  b = b_primitive_part(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    BPoly r = a;
    const UPoly lcb = b.back();
    while (!r.empty() && r.size() >= b.size()) {
      const std::size_t k = r.size() - b.size();
      const UPoly lcr = r.back();
      for (auto& c : r) c = u_mul(c, lcb);
      for (std::size_t i = 0; i < b.size(); ++i) u_submul(r[i + k], lcr, b[i], 0);
      trim(r);
    }
    a = std::move(b);
    b = b_primitive_part(r);
  }
  BPoly g = b_primitive_part(a);
  for (auto& c : g) c = u_mul(c, cont);
  trim(g);
  return g;
}

struct Stripped {
  int xoff = 0;
  int qoff = 0;
  BPoly core;
};

Stripped strip(const PolyXQ& p) {
  Stripped s;
  s.xoff = p.min_xdeg();
  s.qoff = p.min_qdeg();
  s.core.assign(static_cast<std::size_t>(p.max_xdeg() - s.xoff + 1), UPoly{});
  for (const auto& t : p.terms()) {
    auto& row = s.core[static_cast<std::size_t>(t.mono.xdeg - s.xoff)];
    const auto j = static_cast<std::size_t>(t.mono.qdeg - s.qoff);
    if (row.size() <= j) row.resize(j + 1);
    row[j] = t.coeff;
  }
  return s;
}

PolyXQ unstrip(const BPoly& core, int xoff, int qoff) {
  std::vector<PolyXQ::Term> terms;
  for (std::size_t i = 0; i < core.size(); ++i) {
    for (std::size_t j = 0; j < core[i].size(); ++j) {
      if (core[i][j] != 0) {
        terms.push_back({{static_cast<int>(i) + xoff, static_cast<int>(j) + qoff}, core[i][j]});
      }
    }
  }
  return PolyXQ::from_terms(std::move(terms));
}

void append_power(std::string& out, char var, int deg, bool& first_factor) {
  if (deg == 0) return;
  if (!first_factor) out += '*';
  first_factor = false;
  out += var;
  if (deg != 1) out += '^' + std::to_string(deg);
}

std::string term_body(const Monomial& m, const Integer& abs_coeff, bool show_unit) {
  std::string out;
  bool first = true;
  const bool constant = m.xdeg == 0 && m.qdeg == 0;
  if (abs_coeff != 1 || show_unit || constant) {
    out = abs_coeff.get_str();
    first = false;
  }
  append_power(out, 'x', m.xdeg, first);
  append_power(out, 'q', m.qdeg, first);
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  PolyXQ parse() {
    std::vector<PolyXQ::Term> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = (get() == '-') ? -1 : 1;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      terms.push_back(parse_term(sign));
      skip_ws();
    }
    return PolyXQ::from_terms(std::move(terms));
  }

 private:
  PolyXQ::Term parse_term(int sign) {
    PolyXQ::Term t{{0, 0}, Integer(sign)};
    bool any = false;
    while (true) {
      skip_ws();
      if (at_end()) break;
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        t.coeff *= Integer(read_digits());
      } else if (c == 'x' || c == 'q') {
        get();
        int deg = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          get();
          deg = read_exponent();
        }
        (c == 'x' ? t.mono.xdeg : t.mono.qdeg) += deg;
      } else {
        break;
      }
      any = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        get();
        continue;
      }
      break;
    }
    if (!any) fail("expected a term");
    if (t.mono.xdeg < 0) fail("negative x degree");
    return t;
  }

  int read_exponent() {
    skip_ws();
    bool braces = false;
    if (!at_end() && peek() == '{') {
      braces = true;
      get();
    }
    int sign = 1;
    if (!at_end() && (peek() == '-' || peek() == '+')) sign = (get() == '-') ? -1 : 1;
    const std::string digits = read_digits();
    if (braces) {
      if (at_end() || get() != '}') fail("unbalanced brace in exponent");
    }
    return sign * std::stoi(digits);
  }

  std::string read_digits() {
    std::string d;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) d += get();
    if (d.empty()) fail("expected digits");
    return d;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }
  [[noreturn]] void fail(const char* what) const {
    throw std::invalid_argument(std::string("cannot parse polynomial '") + std::string(text_) +
                                "': " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

PolyXQ::PolyXQ(long c) : PolyXQ(Integer(c)) {}

PolyXQ::PolyXQ(const Integer& c) {
  if (c != 0) terms_.push_back({{0, 0}, c});
}

PolyXQ PolyXQ::monomial(const Integer& c, int xdeg, int qdeg) {
  if (xdeg < 0) throw std::invalid_argument("negative x degree");
  PolyXQ p;
  if (c != 0) p.terms_.push_back({{xdeg, qdeg}, c});
  return p;
}

PolyXQ PolyXQ::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.mono < b.mono; });
  PolyXQ p;
  for (auto& t : terms) {
    if (t.mono.xdeg < 0) throw std::invalid_argument("negative x degree");
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

PolyXQ PolyXQ::parse(std::string_view text) { return Parser(text).parse(); }

bool PolyXQ::is_one() const {
  return terms_.size() == 1 && terms_[0].mono == Monomial{0, 0} && terms_[0].coeff == 1;
}

Integer PolyXQ::coeff(int xdeg, int qdeg) const {
  const Monomial m{xdeg, qdeg};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& k) { return t.mono < k; });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return 0;
}

int PolyXQ::min_xdeg() const { return terms_.empty() ? 0 : terms_.front().mono.xdeg; }
int PolyXQ::max_xdeg() const { return terms_.empty() ? 0 : terms_.back().mono.xdeg; }

int PolyXQ::min_qdeg() const {
  if (terms_.empty()) return 0;
  int m = terms_.front().mono.qdeg;
  for (const auto& t : terms_) m = std::min(m, t.mono.qdeg);
  return m;
}

int PolyXQ::max_qdeg() const {
  if (terms_.empty()) return 0;
  int m = terms_.front().mono.qdeg;
  for (const auto& t : terms_) m = std::max(m, t.mono.qdeg);
  return m;
}

PolyXQ PolyXQ::operator-() const {
  PolyXQ r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

PolyXQ& PolyXQ::operator+=(const PolyXQ& other) {
  if (other.is_zero()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->mono < b->mono)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->mono < a->mono) {
      merged.push_back(*b++);
    } else {
      Integer s = a->coeff + b->coeff;
      if (s != 0) merged.push_back({a->mono, std::move(s)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

PolyXQ& PolyXQ::operator-=(const PolyXQ& other) { return *this += -other; }

PolyXQ& PolyXQ::operator*=(const PolyXQ& other) {
  *this = *this * other;
  return *this;
}

PolyXQ operator*(const PolyXQ& a, const PolyXQ& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.is_monomial()) {
    const auto& t = b.terms_[0];
    return a.shifted(t.mono.xdeg, t.mono.qdeg).scaled(t.coeff);
  }
  if (a.is_monomial()) return b * a;
  std::vector<PolyXQ::Term> prod;
  prod.reserve(a.size() * b.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      prod.push_back({{s.mono.xdeg + t.mono.xdeg, s.mono.qdeg + t.mono.qdeg}, s.coeff * t.coeff});
    }
  }
  return PolyXQ::from_terms(std::move(prod));
}

PolyXQ PolyXQ::scaled(const Integer& c) const {
  if (c == 0) return {};
  PolyXQ r = *this;
  if (c != 1) {
    for (auto& t : r.terms_) t.coeff *= c;
  }
  return r;
}

PolyXQ PolyXQ::shifted(int dx, int dq) const {
  PolyXQ r = *this;
  for (auto& t : r.terms_) {
    t.mono.xdeg += dx;
    t.mono.qdeg += dq;
    if (t.mono.xdeg < 0) throw std::invalid_argument("shift produces negative x degree");
  }
  return r;
}

PolyXQ PolyXQ::subst_x(int s) const {
  if (s == 0) return *this;
  std::vector<Term> terms = terms_;
  for (auto& t : terms) t.mono.qdeg += s * t.mono.xdeg;
  return from_terms(std::move(terms));
}

PolyXQ PolyXQ::at_x_zero() const {
  PolyXQ r;
  for (const auto& t : terms_) {
    if (t.mono.xdeg == 0) r.terms_.push_back(t);
  }
  return r;
}

bool PolyXQ::has_nonnegative_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coeff > 0; });
}

std::string PolyXQ::to_string(PolyStyle style) const {
  if (terms_.empty()) return "0";
  const bool canonical = style == PolyStyle::Canonical;
  std::string out;
  auto emit = [&](const Term& t) {
    const bool neg = t.coeff < 0;
    Integer abs_coeff = neg ? Integer(-t.coeff) : t.coeff;
    if (out.empty()) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    out += term_body(t.mono, abs_coeff, canonical);
  };
  if (canonical) {
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) emit(*it);
  } else {
    for (const auto& t : terms_) emit(t);
  }
  return out;
}

Integer content(const PolyXQ& p) {
  Integer g = 0;
  for (const auto& t : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

PolyXQ gcd(const PolyXQ& a, const PolyXQ& b) {
  if (a.is_zero() && b.is_zero()) return {};
  auto normalize = [](PolyXQ p) { return p.leading().coeff < 0 ? -p : p; };
  if (a.is_zero()) return normalize(b);
  if (b.is_zero()) return normalize(a);
  const Stripped sa = strip(a);
  const Stripped sb = strip(b);
  const BPoly g = b_gcd(sa.core, sb.core);
  return normalize(unstrip(g, std::min(sa.xoff, sb.xoff), std::min(sa.qoff, sb.qoff)));
}

std::optional<PolyXQ> divide_exact(const PolyXQ& a, const PolyXQ& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return PolyXQ{};
  if (b.is_monomial()) {
    const auto& t = b.terms()[0];
    if (a.min_xdeg() < t.mono.xdeg) return std::nullopt;
    PolyXQ r = a.shifted(-t.mono.xdeg, -t.mono.qdeg);
    if (t.coeff == 1) return r;
    std::vector<PolyXQ::Term> terms = r.terms();
    for (auto& s : terms) {
      if (!mpz_divisible_p(s.coeff.get_mpz_t(), t.coeff.get_mpz_t())) return std::nullopt;
      mpz_divexact(s.coeff.get_mpz_t(), s.coeff.get_mpz_t(), t.coeff.get_mpz_t());
    }
    return PolyXQ::from_terms(std::move(terms));
  }
  const Stripped sa = strip(a);
  const Stripped sb = strip(b);
  if (sa.xoff < sb.xoff) return std::nullopt;
  auto q = b_divide_exact(sa.core, sb.core);
  if (!q) return std::nullopt;
  return unstrip(*q, sa.xoff - sb.xoff, sa.qoff - sb.qoff);
}

}  // namespace qfe
