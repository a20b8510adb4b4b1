#include "qfe/solver.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qfe {

namespace {

std::string ref_text(const IndexPair& pr, int shift) { return SeriesRef{pr.first, pr.second, shift}.to_string(); }

PolyXQ lcm(const PolyXQ& a, const PolyXQ& b) {
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  return *divide_exact(a * b, gcd(a, b));
}

int keep_position(const std::vector<IndexPair>& keep, const IndexPair& pr) {
  const auto it = std::find(keep.begin(), keep.end(), pr);
  return it == keep.end() ? -1 : static_cast<int>(it - keep.begin());
}

}  // namespace

int MasterCombination::index_of(const SeriesRef& ref) const {
  if (!box.contains(ref.c1, ref.c2)) return -1;
  if (ref.shift != 0 && ref.shift != params.gamma) return -1;
  const int n2 = box.delta2() / box.d2 + 1;
  const int n1 = box.delta1() / box.d1 + 1;
  const int k = (ref.c1 - box.m1) / box.d1 * n2 + (ref.c2 - box.m2) / box.d2;
  return ref.shift == 0 ? k : k + n1 * n2;
}

MasterCombination assemble(const SeriesParams& p, const IndexBox& box) {
  MasterCombination mc;
  mc.params = p;
  mc.box = box;
  mc.equations = enumerate_box(p, box);
  const auto pairs = box.pairs();
  for (int shift : {0, p.gamma}) {
    for (const auto& [a, b] : pairs) mc.refs.push_back({a, b, shift});
  }
  const std::size_t T = mc.equations.size();
  mc.forms.assign(mc.refs.size(), PolyVector(T));
  for (std::size_t j = 0; j < T; ++j) {
    for (const auto& t : mc.equations[j].terms) {
      const int k = mc.index_of(t.ref);
      if (k < 0) throw std::logic_error("equation leaves the index box");
      mc.forms[static_cast<std::size_t>(k)][j] += t.coeff;
    }
  }
  return mc;
}

AnnihilatorBasis solve_annihilator(const MasterCombination& mc, const std::vector<IndexPair>& keep) {
  for (const auto& pr : keep) {
    if (!mc.box.contains(pr)) throw std::invalid_argument("kept pair outside the index box");
  }
  PolyMatrix rows;
  for (std::size_t k = 0; k < mc.refs.size(); ++k) {
    if (keep_position(keep, mc.refs[k].pair()) >= 0) continue;
    const auto& f = mc.forms[k];
    if (std::all_of(f.begin(), f.end(), [](const PolyXQ& c) { return c.is_zero(); })) continue;
    rows.push_back(f);
  }
  AnnihilatorBasis basis;
  basis.vectors = nullspace(rows, mc.unknowns(), &basis.free_columns);
  return basis;
}

std::string SystemEquation::to_string(int gamma) const {
  std::string out = ref_text(lhs, 0) + " =";
  if (rhs.empty()) return out + " 0";
  bool first = true;
  for (const auto& t : rhs) {
    const std::string ref = ref_text(t.pair, gamma);
    std::string factor;
    bool negative = false;
    if (!t.coeff.is_polynomial()) {
      factor = "(" + t.coeff.to_string(PolyStyle::Compact) + ")*";
    } else if (t.coeff.num().is_monomial()) {
      negative = t.coeff.num().terms()[0].coeff < 0;
      const PolyXQ mag = negative ? -t.coeff.num() : t.coeff.num();
      if (!mag.is_one()) factor = mag.to_string(PolyStyle::Compact) + "*";
    } else {
      factor = "(" + t.coeff.num().to_string(PolyStyle::Compact) + ")*";
    }
    out += first ? (negative ? " -" : " ") : (negative ? " - " : " + ");
    out += factor + ref;
    first = false;
  }
  return out;
}

FuncEquation SystemEquation::as_relation(int gamma) const {
  PolyXQ l(1);
  for (const auto& t : rhs) l = lcm(l, t.coeff.den());
  FuncEquation eq;
  eq.add({lhs.first, lhs.second, 0}, l);
  for (const auto& t : rhs) {
    const PolyXQ scaled = t.coeff.num() * *divide_exact(l, t.coeff.den());
    eq.add({t.pair.first, t.pair.second, gamma}, -scaled);
  }
  return eq;
}

std::vector<std::string> ExtractedSystem::equation_strings() const {
  std::vector<std::string> out;
  for (const auto& e : equations) out.push_back(e.to_string(params.gamma));
  return out;
}

std::vector<std::string> ExtractedSystem::relation_strings() const {
  std::vector<std::string> out;
  for (const auto& r : relations) out.push_back(r.to_string());
  return out;
}

ExtractedSystem extract_system(const MasterCombination& mc, const AnnihilatorBasis& basis,
                               const std::vector<IndexPair>& keep) {
  ExtractedSystem sys;
  sys.params = mc.params;
  sys.keep = keep;
  const int g = mc.params.gamma;
  const std::size_t n = keep.size();
  std::vector<SeriesRef> cols;
  for (int shift : {0, g}) {
    for (const auto& pr : keep) cols.push_back({pr.first, pr.second, shift});
  }
  std::vector<int> col_index;
  for (const auto& r : cols) {
    const int k = mc.index_of(r);
    if (k < 0) throw std::invalid_argument("kept pair outside the index box");
    col_index.push_back(k);
  }

  PolyMatrix rel;
  for (const auto& v : basis.vectors) {
    PolyVector row(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const auto& form = mc.forms[static_cast<std::size_t>(col_index[c])];
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (!v[j].is_zero() && !form[j].is_zero()) row[c] += form[j] * v[j];
      }
    }
    if (std::all_of(row.begin(), row.end(), [](const PolyXQ& c) { return c.is_zero(); })) continue;
    row = make_primitive(std::move(row));
    // different basis vectors can restrict to the same relation
    if (std::find(rel.begin(), rel.end(), row) == rel.end()) rel.push_back(std::move(row));
  }
  // echelon-like order: by first surviving series
  auto lead = [](const PolyVector& r) {
    return std::find_if(r.begin(), r.end(), [](const PolyXQ& c) { return !c.is_zero(); }) - r.begin();
  };
  std::stable_sort(rel.begin(), rel.end(),
                   [&](const PolyVector& a, const PolyVector& b) { return lead(a) < lead(b); });
  for (const auto& row : rel) {
    FuncEquation eq;
    for (std::size_t c = 0; c < cols.size(); ++c) eq.add(cols[c], row[c]);
    sys.relations.push_back(std::move(eq));
  }

  const auto rr = fraction_free_rref(rel, static_cast<int>(cols.size()));
  std::vector<bool> pivot_col(cols.size(), false);
  for (int c : rr.pivots) pivot_col[static_cast<std::size_t>(c)] = true;
  sys.rank = static_cast<int>(
      std::count_if(rr.pivots.begin(), rr.pivots.end(), [&](int c) { return c < static_cast<int>(n); }));
  for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
    const auto c = static_cast<std::size_t>(rr.pivots[i]);
    if (c >= n) break;
    const auto& row = rr.rows[i];
    bool clean = true;
    for (std::size_t k = 0; k < n; ++k) {
      if (k != c && !row[k].is_zero()) clean = false;
    }
    if (!clean) continue;
    SystemEquation e;
    e.lhs = keep[c];
    for (std::size_t k = 0; k < n; ++k) {
      const PolyXQ& a = row[n + k];
      if (a.is_zero()) continue;
      e.rhs.push_back({RatXQ(-a, rr.scale).reduced(), keep[k]});
    }
    sys.equations.push_back(std::move(e));
  }

  sys.all_polynomial = true;
  sys.all_nonnegative = true;
  for (const auto& e : sys.equations) {
    for (const auto& t : e.rhs) {
      if (!t.coeff.is_polynomial()) {
        sys.all_polynomial = false;
        sys.all_nonnegative = false;
      } else if (!t.coeff.num().has_nonnegative_coefficients()) {
        sys.all_nonnegative = false;
      }
    }
  }
  if (!sys.complete()) sys.all_polynomial = sys.all_nonnegative = false;
  return sys;
}

bool VerifyReport::ok() const {
  return std::all_of(residual_orders.begin(), residual_orders.end(),
                     [&](int r) { return r > order; });
}

int VerifyReport::min_order() const {
  if (residual_orders.empty()) return order + 1;
  return *std::min_element(residual_orders.begin(), residual_orders.end());
}

int residual_order(const SeriesParams& p, const FuncEquation& eq, int M) {
  int low = 0;
  for (const auto& t : eq.terms) low = std::min(low, t.coeff.min_qdeg());
  const int k = -low;
  TruncSeries r(M + k);
  for (const auto& t : eq.terms) {
    const SeriesParams pc = p.with_c(t.ref.c1, t.ref.c2);
    if (!has_nonnegative_exponents(pc, t.ref.shift)) {
      throw std::domain_error("series with negative q-powers: " + t.ref.to_string());
    }
    r += eval_series(pc, M + k, XMode::symbolic(t.ref.shift)).mul_poly(t.coeff.shifted(0, k));
  }
  const auto lowest = r.lowest_qdeg();
  return lowest ? *lowest - k : M + 1;
}

VerifyReport verify_relations(const SeriesParams& p, const std::vector<FuncEquation>& rels, int M) {
  VerifyReport rep;
  rep.order = M;
  for (const auto& eq : rels) rep.residual_orders.push_back(residual_order(p, eq, M));
  return rep;
}

VerifyReport verify_system(const SeriesParams& p, const ExtractedSystem& sys, int M) {
  std::vector<FuncEquation> rels;
  for (const auto& e : sys.equations) rels.push_back(e.as_relation(p.gamma));
  return verify_relations(p, rels, M);
}

std::optional<std::vector<TruncSeries>> fixed_point(const std::vector<SystemEquation>& eqs,
                                                    const std::vector<IndexPair>& keep, int gamma,
                                                    int M, int max_iterations, int* iterations) {
  std::vector<const SystemEquation*> by_pos(keep.size(), nullptr);
  for (const auto& e : eqs) {
    const int i = keep_position(keep, e.lhs);
    if (i < 0) throw std::invalid_argument("equation for a pair outside the keep-set");
    by_pos[static_cast<std::size_t>(i)] = &e;
    for (const auto& t : e.rhs) {
      if (!t.coeff.is_polynomial() || t.coeff.num().min_qdeg() < 0) {
        throw std::invalid_argument("fixed-point iteration needs polynomial coefficients");
      }
      if (keep_position(keep, t.pair) < 0) {
        throw std::invalid_argument("right side refers to a pair outside the keep-set");
      }
    }
  }
  if (std::find(by_pos.begin(), by_pos.end(), nullptr) != by_pos.end()) {
    throw std::invalid_argument("every kept pair needs an equation");
  }
  std::vector<TruncSeries> cur(keep.size(), TruncSeries::one(M));
  for (int it = 1; it <= max_iterations; ++it) {
    std::vector<TruncSeries> shifted;
    for (const auto& s : cur) shifted.push_back(s.subst_x(gamma));
    std::vector<TruncSeries> next;
    for (std::size_t i = 0; i < keep.size(); ++i) {
      TruncSeries s(M);
      for (const auto& t : by_pos[i]->rhs) {
        s += shifted[static_cast<std::size_t>(keep_position(keep, t.pair))].mul_poly(t.coeff.num());
      }
      next.push_back(std::move(s));
    }
    if (next == cur) {
      if (iterations) *iterations = it;
      return next;
    }
    cur = std::move(next);
  }
  if (iterations) *iterations = max_iterations;
  return std::nullopt;
}

std::string_view to_string(UniquenessStatus s) {
  switch (s) {
    case UniquenessStatus::Unique: return "unique";
    case UniquenessStatus::NotStabilized: return "not-stabilized";
    case UniquenessStatus::Mismatch: return "mismatch";
    case UniquenessStatus::PreconditionFailed: return "precondition-failed";
  }
  return "?";
}

UniquenessReport verify_uniqueness(const ExtractedSystem& sys, int M) {
  UniquenessReport rep;
  if (!sys.complete()) {
    rep.detail = "system does not isolate every kept series";
    return rep;
  }
  for (const auto& e : sys.equations) {
    PolyXQ at_zero;
    for (const auto& t : e.rhs) {
      if (!t.coeff.is_polynomial() || t.coeff.num().min_qdeg() < 0) {
        rep.detail = "coefficient is not a polynomial in x and q: " + t.coeff.to_string();
        return rep;
      }
      at_zero += t.coeff.num().at_x_zero();
    }
    if (!at_zero.is_one()) {
      rep.detail = "right side of " + ref_text(e.lhs, 0) + " is " + at_zero.to_string() + " at x = 0";
      return rep;
    }
  }
  const int g = sys.params.gamma;
  const int max_it = (M + g - 1) / g + 2;
  auto fp = fixed_point(sys.equations, sys.keep, g, M, max_it, &rep.iterations);
  if (!fp) {
    rep.status = UniquenessStatus::NotStabilized;
    rep.detail = "no fixed point after " + std::to_string(max_it) + " iterations";
    return rep;
  }
  for (std::size_t i = 0; i < sys.keep.size(); ++i) {
    const SeriesParams pc = sys.params.with_c(sys.keep[i].first, sys.keep[i].second);
    if (!has_nonnegative_exponents(pc)) {
      rep.detail = ref_text(sys.keep[i], 0) + " has negative q-powers";
      return rep;
    }
    if (eval_series(pc, M, XMode::symbolic()) != (*fp)[i]) {
      rep.status = UniquenessStatus::Mismatch;
      rep.detail = "fixed point differs from " + ref_text(sys.keep[i], 0);
      return rep;
    }
  }
  rep.status = UniquenessStatus::Unique;
  return rep;
}

}  // namespace qfe
