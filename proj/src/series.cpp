#include "qfe/series.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qfe {

namespace {

// f(n) = B*C(n+1,2) + a*n, a convex sequence on n >= 0.
long long quad(long long B, long long a, long long n) { return B * n * (n + 1) / 2 + a * n; }

long long min_quad(long long B, long long a) {
  long long n = 0;
  while (quad(B, a, n + 1) < quad(B, a, n)) ++n;
  return quad(B, a, n);
}

// Smallest n0 with f(n) >= need for every n >= n0.
long long quad_bound(long long B, long long a, long long need) {
  long long n = 0;
  while (quad(B, a, n) < need || quad(B, a, n + 1) < quad(B, a, n)) ++n;
  return n;
}

struct Linear {
  long long a;  // coefficient of m
  long long b;  // coefficient of n
};

Linear effective_linear(const SeriesParams& p, int shift) {
  return {static_cast<long long>(p.C1) + static_cast<long long>(shift) * p.D1,
          static_cast<long long>(p.C2) + static_cast<long long>(shift) * p.D2};
}

long long eff_exponent(const SeriesParams& p, const Linear& lin, long long m, long long n) {
  return quad(p.B11, lin.a, m) + quad(p.B22, lin.b, n) + static_cast<long long>(p.B12) * m * n;
}

// min over (m,n) in the region of interest of E_eff >= threshold.
bool exponent_at_least(const SeriesParams& p, int shift, long long threshold, bool skip_origin) {
  p.validate();
  const Linear lin = effective_linear(p, shift);
  const long long l1 = min_quad(p.B11, lin.a);
  const long long l2 = min_quad(p.B22, lin.b);
  const long long m0 = quad_bound(p.B11, lin.a, threshold - l2);
  const long long n0 = quad_bound(p.B22, lin.b, threshold - l1);
  for (long long m = 0; m < m0; ++m) {
    for (long long n = 0; n < n0; ++n) {
      if (skip_origin && m == 0 && n == 0) continue;
      if (eff_exponent(p, lin, m, n) < threshold) return false;
    }
  }
  // B12 >= 1 makes E_eff(m,n) >= f1(m) + f2(n), which covers the rest.
  if (!skip_origin && threshold > 0) return false;
  return true;
}

std::vector<Integer> convolve(const std::vector<Integer>& a, const std::vector<Integer>& b,
                              std::size_t len) {
  std::vector<Integer> r(len);
  for (std::size_t i = 0; i < len && i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < len && j < b.size(); ++j) {
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return r;
}

int parse_int(const std::string& s, std::string_view whole) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad integer '" + s + "' in '" + std::string(whole) + "'");
  }
  if (used != s.size()) {
    throw std::invalid_argument("bad integer '" + s + "' in '" + std::string(whole) + "'");
  }
  return v;
}

std::string strip_ws(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c != ' ' && c != '\t' && c != '\n') out += c;
  }
  return out;
}

}  // namespace

void SeriesParams::validate() const {
  if (B11 < 1 || B22 < 1 || B12 < 1) throw std::invalid_argument("B11, B22, B12 must be positive");
  if (D1 < 1 || D2 < 1 || K1 < 1 || K2 < 1 || gamma < 1) {
    throw std::invalid_argument("D1, D2, K1, K2, gamma must be positive");
  }
  if ((eps1 != 1 && eps1 != -1) || (eps2 != 1 && eps2 != -1)) {
    throw std::invalid_argument("eps1, eps2 must be +1 or -1");
  }
}

long long SeriesParams::exponent(long long m, long long n) const {
  return quad(B11, C1, m) + quad(B22, C2, n) + static_cast<long long>(B12) * m * n;
}

SeriesParams SeriesParams::with_c(int c1, int c2) const {
  SeriesParams p = *this;
  p.C1 = c1;
  p.C2 = c2;
  return p;
}

std::string SeriesParams::to_string() const {
  std::ostringstream os;
  os << B11 << ',' << B22 << ',' << B12 << ',' << C1 << ',' << C2 << ',' << D1 << ',' << D2 << ','
     << K1 << ',' << K2 << ',' << gamma << ',' << eps1 << ',' << eps2;
  return os.str();
}

SeriesParams SeriesParams::parse(std::string_view text) {
  std::vector<int> v;
  std::string item;
  const std::string s = strip_ws(text);
  std::istringstream is(s);
  while (std::getline(is, item, ',')) v.push_back(parse_int(item, text));
  if (v.size() != 10 && v.size() != 12) {
    throw std::invalid_argument("expected B11,B22,B12,C1,C2,D1,D2,K1,K2,gamma[,eps1,eps2]: " +
                                std::string(text));
  }
  SeriesParams p{v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8], v[9],
                 v.size() == 12 ? v[10] : 1, v.size() == 12 ? v[11] : 1};
  p.validate();
  return p;
}

bool is_admissible(const SeriesParams& p, int shift) {
  return exponent_at_least(p, shift, 1, true);
}

bool has_nonnegative_exponents(const SeriesParams& p, int shift) {
  return exponent_at_least(p, shift, 0, false);
}

std::vector<Integer> pochhammer_inv_coeffs(int K, int m, int order) {
  if (K < 1 || m < 0 || order < 0) throw std::invalid_argument("bad Pochhammer arguments");
  std::vector<Integer> b(static_cast<std::size_t>(order) + 1);
  b[0] = 1;
  for (long long j = 1; j <= m; ++j) {
    const long long step = K * j;
    if (step > order) break;
    for (long long i = step; i <= order; ++i) b[i] += b[i - step];
  }
  return b;
}

TruncSeries pochhammer_inv(int K, int m, int order) {
  return TruncSeries::from_q_coefficients(pochhammer_inv_coeffs(K, m, order), order);
}

TruncSeries eval_series(const SeriesParams& p, int order, XMode mode) {
  p.validate();
  if (order < 0) throw std::invalid_argument("negative truncation order");
  if (mode.shift < 0) throw std::invalid_argument("negative x shift");
  const bool symbolic = mode.kind == XMode::Kind::Symbolic;
  if (symbolic) {
    if (!has_nonnegative_exponents(p, mode.shift)) {
      throw std::domain_error("series has negative q-exponents: " + p.to_string());
    }
  } else if (!is_admissible(p, mode.shift)) {
    throw std::domain_error("inadmissible parameters under substitution: " + p.to_string());
  }

  const Linear lin = effective_linear(p, mode.shift);
  const long long l2 = min_quad(p.B22, lin.b);
  TruncSeries result(order);
  std::vector<std::vector<Integer>> inv1;
  std::vector<std::vector<Integer>> inv2;
  auto inv = [&](std::vector<std::vector<Integer>>& cache, int K, std::size_t idx) {
    while (cache.size() <= idx) {
      if (cache.empty()) {
        cache.push_back(pochhammer_inv_coeffs(K, 0, order));
      } else {
        std::vector<Integer> next = cache.back();
        const long long step = static_cast<long long>(K) * static_cast<long long>(cache.size());
        for (long long i = step; i <= order; ++i) next[i] += next[i - step];
        cache.push_back(std::move(next));
      }
    }
    return cache[idx];
  };

  for (long long m = 0;; ++m) {
    const long long row_min = quad(p.B11, lin.a, m) + l2;
    const bool past_vertex = quad(p.B11, lin.a, m + 1) >= quad(p.B11, lin.a, m);
    if (row_min > order && past_vertex) break;
    for (long long n = 0;; ++n) {
      const long long e = eff_exponent(p, lin, m, n);
      const bool rising = eff_exponent(p, lin, m, n + 1) >= e;
      if (e > order) {
        if (rising) break;
        continue;
      }
      const auto len = static_cast<std::size_t>(order - e + 1);
      const std::vector<Integer> body =
          convolve(inv(inv1, p.K1, static_cast<std::size_t>(m)),
                   inv(inv2, p.K2, static_cast<std::size_t>(n)), len);
      const bool negative = ((p.eps1 < 0) && (m % 2 == 1)) != ((p.eps2 < 0) && (n % 2 == 1));
      const int xdeg = symbolic ? static_cast<int>(p.D1 * m + p.D2 * n) : 0;
      for (std::size_t j = 0; j < len; ++j) {
        if (body[j] == 0) continue;
        result.add_to(xdeg, static_cast<int>(e + static_cast<long long>(j)),
                      negative ? Integer(-body[j]) : body[j]);
      }
    }
  }
  return result;
}

void mul_one_minus_qk_pow(std::vector<Integer>& b, int k, const Integer& e) {
  if (e == 0 || b.empty()) return;
  if (k < 1) throw std::invalid_argument("product factor index must be positive");
  const std::size_t len = b.size();
  const auto step = static_cast<std::size_t>(k);
  if (step >= len) return;
  if (abs(e) <= 4) {
    const long reps = e.get_si();
    for (long r = 0; r < std::abs(reps); ++r) {
      if (reps > 0) {
        for (std::size_t i = len - 1; i >= step; --i) b[i] -= b[i - step];
      } else {
        for (std::size_t i = step; i < len; ++i) b[i] += b[i - step];
      }
    }
    return;
  }
  // Generalized binomial series: coefficient of q^{kj} is C(e, j) (-1)^j.
  std::vector<Integer> c{Integer(1)};
  for (std::size_t j = 1; j * step < len; ++j) {
    Integer next = c.back() * (e - Integer(static_cast<unsigned long>(j - 1)));
    mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(), static_cast<unsigned long>(j));
    c.push_back(-next);
  }
  const std::vector<Integer> old = b;
  for (std::size_t i = 0; i < len; ++i) {
    Integer acc = 0;
    for (std::size_t j = 0; j < c.size() && j * step <= i; ++j) {
      mpz_addmul(acc.get_mpz_t(), c[j].get_mpz_t(), old[i - j * step].get_mpz_t());
    }
    b[i] = acc;
  }
}

void ProductSpec::validate() const {
  if (modulus < 1) throw std::invalid_argument("product modulus must be positive");
  for (const auto& f : factors) {
    if (f.residue < 1 || f.residue > modulus) {
      throw std::invalid_argument("product residue outside 1..modulus");
    }
  }
}

std::string ProductSpec::to_string() const {
  std::map<int, std::vector<int>> groups;
  for (const auto& f : factors) {
    if (f.exponent != 0) groups[f.exponent].push_back(f.residue);
  }
  if (groups.empty()) return "1";
  std::string out;
  for (auto& [e, residues] : groups) {
    std::sort(residues.begin(), residues.end());
    if (!out.empty()) out += " * ";
    out += '(';
    for (std::size_t i = 0; i < residues.size(); ++i) {
      if (i) out += ',';
      out += "q^{" + std::to_string(residues[i]) + '}';
    }
    out += ";q^{" + std::to_string(modulus) + "})_inf^{" + std::to_string(e) + '}';
  }
  return out;
}

ProductSpec ProductSpec::parse(std::string_view text) {
  const std::string s = strip_ws(text);
  ProductSpec spec;
  if (s == "1") return spec;
  auto power_of_q = [&](const std::string& tok) {
    if (tok == "q") return 1;
    if (tok.size() < 3 || tok[0] != 'q' || tok[1] != '^') {
      throw std::invalid_argument("expected q^{k} in product '" + std::string(text) + "'");
    }
    std::string body = tok.substr(2);
    if (body.front() == '{' && body.back() == '}') body = body.substr(1, body.size() - 2);
    return parse_int(body, text);
  };
  bool have_modulus = false;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != '(') throw std::invalid_argument("expected '(' in product '" + s + "'");
    const std::size_t semi = s.find(';', pos);
    const std::size_t close = s.find(")_inf", pos);
    if (semi == std::string::npos || close == std::string::npos || semi > close) {
      throw std::invalid_argument("malformed product factor in '" + s + "'");
    }
    std::vector<int> residues;
    std::istringstream is(s.substr(pos + 1, semi - pos - 1));
    std::string tok;
    while (std::getline(is, tok, ',')) residues.push_back(power_of_q(tok));
    const int mod = power_of_q(s.substr(semi + 1, close - semi - 1));
    if (have_modulus && mod != spec.modulus) {
      throw std::invalid_argument("mixed moduli in product '" + s + "'");
    }
    spec.modulus = mod;
    have_modulus = true;
    pos = close + 5;
    int e = 1;
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      std::size_t end = pos;
      std::string body;
      if (s[pos] == '{') {
        end = s.find('}', pos);
        if (end == std::string::npos) throw std::invalid_argument("unbalanced brace in product");
        body = s.substr(pos + 1, end - pos - 1);
        pos = end + 1;
      } else {
        while (end < s.size() && s[end] != '*') ++end;
        body = s.substr(pos, end - pos);
        pos = end;
      }
      e = parse_int(body, text);
    }
    for (int r : residues) spec.factors.push_back({r, e});
    if (pos < s.size()) {
      if (s[pos] != '*') throw std::invalid_argument("expected '*' between product factors");
      ++pos;
    }
  }
  std::sort(spec.factors.begin(), spec.factors.end());
  spec.validate();
  return spec;
}

TruncSeries expand_product(const ProductSpec& spec, int order) {
  spec.validate();
  if (order < 0) throw std::invalid_argument("negative truncation order");
  std::vector<Integer> b(static_cast<std::size_t>(order) + 1);
  b[0] = 1;
  for (const auto& f : spec.factors) {
    for (int n = f.residue; n <= order; n += spec.modulus) {
      mul_one_minus_qk_pow(b, n, Integer(f.exponent));
    }
  }
  return TruncSeries::from_q_coefficients(b, order);
}

}  // namespace qfe
