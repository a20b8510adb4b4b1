#include "qfe/search.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <functional>
#include <sstream>
#include <stdexcept>

#include <omp.h>

namespace qfe {

std::vector<int> IntRange::values() const {
  std::vector<int> out;
  for (int v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

void SearchConfig::validate() const {
  for (const IntRange* r : {&B11, &B22, &B12, &D1, &D2, &K1, &K2, &gamma, &C1, &C2}) {
    if (r->lo > r->hi) throw std::invalid_argument("empty parameter range");
  }
  for (const IntRange* r : {&B11, &B22, &B12, &D1, &D2, &K1, &K2, &gamma}) {
    if (r->lo < 1) throw std::invalid_argument("B, D, K and gamma ranges must be positive");
  }
  for (const auto* e : {&eps1, &eps2}) {
    if (e->empty()) throw std::invalid_argument("empty sign choice");
    for (int v : *e) {
      if (v != 1 && v != -1) throw std::invalid_argument("signs must be +1 or -1");
    }
  }
  if (lo1 > hi1 || lo2 > hi2 || lo1 > 0 || hi1 < 0 || lo2 > 0 || hi2 < 0) {
    throw std::invalid_argument("box offsets must bracket the seed");
  }
  if (sizes.empty()) throw std::invalid_argument("no target sizes");
  for (int d : sizes) {
    if (d < 1) throw std::invalid_argument("target sizes must be positive");
  }
  if (count_cap < 1 || keep_cap < 1 || verify_order < 1) {
    throw std::invalid_argument("caps must be positive");
  }
  if (jobs < 0) throw std::invalid_argument("negative job count");
}

std::vector<SeriesParams> SearchConfig::tuples() const {
  validate();
  std::vector<SeriesParams> out;
  for (int b11 : B11.values())
    for (int b22 : B22.values())
      for (int b12 : B12.values())
        for (int c1 : C1.values())
          for (int c2 : C2.values())
            for (int d1 : D1.values())
              for (int d2 : D2.values())
                for (int k1 : K1.values())
                  for (int k2 : K2.values())
                    for (int g : gamma.values())
                      for (int e1 : eps1)
                        for (int e2 : eps2) {
                          out.push_back({b11, b22, b12, c1, c2, d1, d2, k1, k2, g, e1, e2});
                        }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

IndexBox SearchConfig::box_for(const SeriesParams& p) const {
  const auto [d1, d2] = lattice_steps(p);
  return {p.C1 + lo1 * d1, p.C1 + hi1 * d1, p.C2 + lo2 * d2, p.C2 + hi2 * d2, d1, d2};
}

namespace {

IntRange range_from(const Json& j) {
  if (j.is_number_integer()) return {j.get<int>(), j.get<int>()};
  if (j.is_array() && j.size() == 2) return {j[0].get<int>(), j[1].get<int>()};
  throw std::invalid_argument("range must be an integer or [lo, hi]: " + j.dump());
}

Json range_to(const IntRange& r) { return Json::array({r.lo, r.hi}); }

}  // namespace

SearchConfig SearchConfig::from_json(const Json& j) {
  SearchConfig c;
  static const std::map<std::string, IntRange SearchConfig::*> ranges = {
      {"B11", &SearchConfig::B11}, {"B22", &SearchConfig::B22}, {"B12", &SearchConfig::B12},
      {"D1", &SearchConfig::D1},   {"D2", &SearchConfig::D2},   {"K1", &SearchConfig::K1},
      {"K2", &SearchConfig::K2},   {"gamma", &SearchConfig::gamma}, {"C1", &SearchConfig::C1},
      {"C2", &SearchConfig::C2}};
  for (const auto& [key, value] : j.items()) {
    if (auto it = ranges.find(key); it != ranges.end()) {
      c.*(it->second) = range_from(value);
    } else if (key == "eps1") {
      c.eps1 = value.get<std::vector<int>>();
    } else if (key == "eps2") {
      c.eps2 = value.get<std::vector<int>>();
    } else if (key == "box") {
      const auto b = value.get<std::vector<int>>();
      if (b.size() != 4) throw std::invalid_argument("box must be [lo1, hi1, lo2, hi2]");
      c.lo1 = b[0], c.hi1 = b[1], c.lo2 = b[2], c.hi2 = b[3];
    } else if (key == "sizes") {
      c.sizes = value.get<std::vector<int>>();
    } else if (key == "count_cap") {
      c.count_cap = value.get<long long>();
    } else if (key == "prune") {
      const auto m = value.get<std::string>();
      if (m != "strict" && m != "heuristic") throw std::invalid_argument("prune: strict|heuristic");
      c.prune = m == "strict" ? PruneMode::Strict : PruneMode::Heuristic;
    } else if (key == "keep_cap") {
      c.keep_cap = value.get<int>();
    } else if (key == "first_only") {
      c.first_only = value.get<bool>();
    } else if (key == "verify_order") {
      c.verify_order = value.get<int>();
    } else if (key == "euler") {
      c.euler = value.get<bool>();
    } else if (key == "order") {
      c.euler_options.order = value.get<int>();
    } else if (key == "kmax") {
      c.euler_options.kmax = value.get<int>();
    } else if (key == "jobs") {
      c.jobs = value.get<int>();
    } else {
      throw std::invalid_argument("unknown search config key: " + key);
    }
  }
  c.validate();
  return c;
}

Json SearchConfig::to_json() const {
  return Json{{"B11", range_to(B11)},
              {"B22", range_to(B22)},
              {"B12", range_to(B12)},
              {"C1", range_to(C1)},
              {"C2", range_to(C2)},
              {"D1", range_to(D1)},
              {"D2", range_to(D2)},
              {"K1", range_to(K1)},
              {"K2", range_to(K2)},
              {"gamma", range_to(gamma)},
              {"eps1", eps1},
              {"eps2", eps2},
              {"box", {lo1, hi1, lo2, hi2}},
              {"sizes", sizes},
              {"count_cap", count_cap},
              {"prune", prune == PruneMode::Strict ? "strict" : "heuristic"},
              {"keep_cap", keep_cap},
              {"first_only", first_only},
              {"verify_order", verify_order},
              {"euler", euler},
              {"order", euler_options.order},
              {"kmax", euler_options.kmax},
              {"jobs", jobs}};
}

Json HitRecord::to_json() const {
  Json prods = Json::array();
  for (const auto& h : products) prods.push_back(qfe::to_json(h));
  return Json{{"schema", 1},
              {"params", qfe::to_json(params)},
              {"box", qfe::to_json(box)},
              {"keep", keep_to_json(keep)},
              {"system", qfe::to_json(system)},
              {"verify", qfe::to_json(verify)},
              {"uniqueness", qfe::to_json(uniqueness)},
              {"products", std::move(prods)}};
}

HitRecord HitRecord::from_json(const Json& j) {
  HitRecord h;
  h.params = params_from_json(j.at("params"));
  h.box = box_from_json(j.at("box"));
  h.keep = keep_from_json(j.at("keep"));
  h.system = system_from_json(j.at("system"));
  h.verify.order = j.at("verify").at("order").get<int>();
  h.verify.residual_orders = j.at("verify").at("residual_orders").get<std::vector<int>>();
  const auto status = j.at("uniqueness").at("status").get<std::string>();
  for (auto s : {UniquenessStatus::Unique, UniquenessStatus::NotStabilized,
                 UniquenessStatus::Mismatch, UniquenessStatus::PreconditionFailed}) {
    if (to_string(s) == status) h.uniqueness.status = s;
  }
  h.uniqueness.iterations = j.at("uniqueness").value("iterations", 0);
  h.uniqueness.detail = j.at("uniqueness").value("detail", std::string());
  for (const auto& p : j.value("products", Json::array())) h.products.push_back(product_hit_from_json(p));
  return h;
}

Json FailureRecord::to_json() const {
  return Json{{"schema", 1},
              {"params", qfe::to_json(params)},
              {"keep", keep_to_json(keep)},
              {"stage", stage},
              {"detail", detail}};
}

FailureRecord FailureRecord::from_json(const Json& j) {
  return {params_from_json(j.at("params")), keep_from_json(j.at("keep")),
          j.at("stage").get<std::string>(), j.value("detail", std::string())};
}

Json SearchSummary::to_json() const {
  return Json{{"tuples", tuples},       {"resumed", resumed}, {"skipped", skipped},
              {"keep_sets", keep_sets}, {"hits", hits},       {"failures", failures}};
}

std::vector<std::vector<IndexPair>> keep_sets(const std::vector<IndexPair>& pairs, int d,
                                              const std::optional<IndexPair>& must, int cap) {
  std::vector<std::vector<IndexPair>> out;
  const int n = static_cast<int>(pairs.size());
  if (d < 1 || d > n) return out;
  if (must && std::find(pairs.begin(), pairs.end(), *must) == pairs.end()) return out;
  std::vector<int> idx;
  std::function<bool(int)> rec = [&](int from) {
    if (static_cast<int>(idx.size()) == d) {
      std::vector<IndexPair> ks;
      for (int i : idx) ks.push_back(pairs[static_cast<std::size_t>(i)]);
      if (!must || std::find(ks.begin(), ks.end(), *must) != ks.end()) out.push_back(std::move(ks));
      return cap < 0 || static_cast<int>(out.size()) < cap;
    }
    for (int i = from; i <= n - (d - static_cast<int>(idx.size())); ++i) {
      idx.push_back(i);
      const bool more = rec(i + 1);
      idx.pop_back();
      if (!more) return false;
    }
    return true;
  };
  rec(0);
  return out;
}

namespace {

// Series that can be verified: no negative q-powers in S(x).
std::vector<IndexPair> verifiable_pairs(const SeriesParams& p, const IndexBox& box) {
  std::vector<IndexPair> out;
  for (const auto& pr : box.pairs()) {
    if (has_nonnegative_exponents(p.with_c(pr.first, pr.second))) out.push_back(pr);
  }
  return out;
}

std::optional<ExtractedSystem> try_keep(const MasterCombination& mc,
                                        const std::vector<IndexPair>& keep) {
  const AnnihilatorBasis basis = solve_annihilator(mc, keep);
  if (basis.dimension() == 0) return std::nullopt;
  ExtractedSystem sys = extract_system(mc, basis, keep);
  if (!sys.complete()) return std::nullopt;
  return sys;
}

bool is_skip(const std::string& stage) {
  return stage == "dilation" || stage == "count-cap" || stage == "infeasible" ||
         stage == "inadmissible";
}

}  // namespace

CandidateResult search_candidate(const SearchConfig& cfg, const SeriesParams& p) {
  CandidateResult res;
  res.params = p;
  auto fail = [&](std::vector<IndexPair> keep, std::string stage, std::string detail) {
    res.failures.push_back({p, std::move(keep), std::move(stage), std::move(detail)});
  };
  try {
    if (!dilation_filter(p)) {
      fail({}, "dilation", "gcd(B11,B22,B12,K1,K2) > 1");
      return res;
    }
    const IndexBox box = cfg.box_for(p);
    const long long neq = count_equations(p, box.delta1(), box.delta2());
    const long long nser = count_series(p, box.delta1(), box.delta2());
    if (neq > cfg.count_cap || nser > cfg.count_cap) {
      fail({}, "count-cap", std::to_string(neq) + " equations, " + std::to_string(nser) + " series");
      return res;
    }
    const std::vector<IndexPair> pairs = verifiable_pairs(p, box);
    const IndexPair seed{p.C1, p.C2};
    if (std::find(pairs.begin(), pairs.end(), seed) == pairs.end()) {
      fail({}, "inadmissible", "seed series has negative q-powers");
      return res;
    }
    // heuristic mode only reorders: sizes passing the inequality go first
    std::vector<int> sizes = cfg.sizes;
    std::stable_sort(sizes.begin(), sizes.end(), [&](int a, int b) {
      return feasible(p, box.delta1(), box.delta2(), a) && !feasible(p, box.delta1(), box.delta2(), b);
    });
    const MasterCombination mc = assemble(p, box);
    for (int d : sizes) {
      if (cfg.prune == PruneMode::Strict && !feasible(p, box.delta1(), box.delta2(), d)) {
        fail({}, "infeasible", "d=" + std::to_string(d));
        continue;
      }
      for (const auto& keep : keep_sets(pairs, d, seed, cfg.keep_cap)) {
        ++res.keep_sets_tried;
        auto sys = try_keep(mc, keep);
        if (!sys) continue;
        VerifyReport vr = verify_system(p, *sys, cfg.verify_order);
        if (!vr.ok()) {
          fail(keep, "verify", "residual at q^" + std::to_string(vr.min_order()));
          continue;
        }
        UniquenessReport ur = verify_uniqueness(*sys, cfg.verify_order);
        res.hits.push_back({p, box, keep, std::move(*sys), std::move(vr), std::move(ur), {}});
        if (cfg.first_only) break;
      }
      if (cfg.first_only && !res.hits.empty()) break;
    }
    if (res.hits.empty()) {
      fail({}, "no-system", std::to_string(res.keep_sets_tried) + " keep-sets tried");
    } else if (cfg.euler) {
      const auto products = product_scan_serial(p, cfg.euler_options);
      for (auto& h : res.hits) h.products = products;
    }
  } catch (const std::exception& e) {
    fail({}, "error", e.what());
  }
  return res;
}

std::string SearchOutcome::hits_jsonl() const {
  std::string out;
  for (const auto& h : hits) out += h.to_json().dump() + "\n";
  return out;
}

std::string SearchOutcome::failures_jsonl() const {
  std::string out;
  for (const auto& f : failures) out += f.to_json().dump() + "\n";
  return out;
}

namespace {

Json result_to_json(const CandidateResult& r) {
  Json hits = Json::array();
  for (const auto& h : r.hits) hits.push_back(h.to_json());
  Json fails = Json::array();
  for (const auto& f : r.failures) fails.push_back(f.to_json());
  return Json{{"params", to_json(r.params)},
              {"keep_sets", r.keep_sets_tried},
              {"hits", std::move(hits)},
              {"failures", std::move(fails)}};
}

CandidateResult result_from_json(const Json& j) {
  CandidateResult r;
  r.params = params_from_json(j.at("params"));
  r.keep_sets_tried = j.value("keep_sets", 0);
  for (const auto& h : j.at("hits")) r.hits.push_back(HitRecord::from_json(h));
  for (const auto& f : j.at("failures")) r.failures.push_back(FailureRecord::from_json(f));
  return r;
}

std::filesystem::path with_suffix(const std::filesystem::path& base, const char* suffix) {
  return base.string() + suffix;
}

}  // namespace

SearchJournal::SearchJournal(std::filesystem::path base) : base_(std::move(base)) {
  std::set<std::string> done;
  if (std::ifstream in(with_suffix(base_, ".done")); in) {
    for (std::string line; std::getline(in, line);) {
      if (!line.empty()) done.insert(line);
    }
  }
  if (std::ifstream in(with_suffix(base_, ".partial")); in) {
    for (std::string line; std::getline(in, line);) {
      if (line.empty()) continue;
      Json j;
      try {
        j = Json::parse(line);
      } catch (const Json::parse_error&) {
        continue;  // torn last line
      }
      if (!done.count(j.at("params").get<std::string>())) continue;
      CandidateResult r = result_from_json(j);
      completed_[r.params] = std::move(r);
    }
  }
  partial_.open(with_suffix(base_, ".partial"), std::ios::app);
  done_.open(with_suffix(base_, ".done"), std::ios::app);
  if (!partial_ || !done_) throw std::runtime_error("cannot open journal " + base_.string());
}

void SearchJournal::record(const CandidateResult& r) {
  Json j = result_to_json(r);
  j["time"] = static_cast<long long>(std::time(nullptr));
  std::lock_guard<std::mutex> lock(mu_);
  partial_ << j.dump() << "\n" << std::flush;
  done_ << r.params.to_string() << "\n" << std::flush;
  completed_[r.params] = r;
}

namespace {

SearchOutcome merge(std::vector<CandidateResult> results, long resumed) {
  SearchOutcome out;
  out.summary.tuples = static_cast<long>(results.size());
  out.summary.resumed = resumed;
  for (auto& r : results) {
    out.summary.keep_sets += r.keep_sets_tried;
    for (auto& h : r.hits) out.hits.push_back(std::move(h));
    for (auto& f : r.failures) {
      out.summary.skipped += is_skip(f.stage);
      out.failures.push_back(std::move(f));
    }
  }
  std::stable_sort(out.hits.begin(), out.hits.end(), [](const HitRecord& a, const HitRecord& b) {
    return std::tie(a.params, a.keep) < std::tie(b.params, b.keep);
  });
  std::stable_sort(out.failures.begin(), out.failures.end(),
                   [](const FailureRecord& a, const FailureRecord& b) {
                     return std::tie(a.params, a.keep, a.stage) < std::tie(b.params, b.keep, b.stage);
                   });
  out.summary.hits = static_cast<long>(out.hits.size());
  out.summary.failures = static_cast<long>(out.failures.size());
  return out;
}

SearchOutcome search_impl(const SearchConfig& cfg, SearchJournal* journal, bool parallel) {
  const std::vector<SeriesParams> tuples = cfg.tuples();
  const long n = static_cast<long>(tuples.size());
  std::vector<CandidateResult> slots(tuples.size());
  std::vector<char> have(tuples.size(), 0);
  long resumed = 0;
  if (journal) {
    for (long i = 0; i < n; ++i) {
      auto it = journal->completed().find(tuples[static_cast<std::size_t>(i)]);
      if (it != journal->completed().end()) {
        slots[static_cast<std::size_t>(i)] = it->second;
        have[static_cast<std::size_t>(i)] = 1;
        ++resumed;
      }
    }
  }
  auto work = [&](long i) {
    const auto k = static_cast<std::size_t>(i);
    if (have[k]) return;
    slots[k] = search_candidate(cfg, tuples[k]);
    if (journal) journal->record(slots[k]);
  };
  if (parallel) {
    const int threads = cfg.jobs > 0 ? cfg.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (long i = 0; i < n; ++i) work(i);
  } else {
    for (long i = 0; i < n; ++i) work(i);
  }
  return merge(std::move(slots), resumed);
}

}  // namespace

SearchOutcome run_search(const SearchConfig& cfg, SearchJournal* journal) {
  return search_impl(cfg, journal, true);
}

SearchOutcome run_search_serial(const SearchConfig& cfg, SearchJournal* journal) {
  return search_impl(cfg, journal, false);
}

void write_outcome(const SearchOutcome& out, const std::filesystem::path& path) {
  std::string stem = path.string();
  if (stem.size() > 6 && stem.substr(stem.size() - 6) == ".jsonl") stem.resize(stem.size() - 6);
  std::ofstream hits(path);
  std::ofstream fails(stem + ".failures.jsonl");
  if (!hits || !fails) throw std::runtime_error("cannot write " + path.string());
  hits << out.hits_jsonl();
  fails << out.failures_jsonl();
}

std::vector<ExtractedSystem> list_all_systems(const SeriesParams& p, const IndexBox& box, int d,
                                              int verify_order, int keep_cap) {
  std::vector<ExtractedSystem> out;
  std::set<std::pair<std::vector<IndexPair>, std::vector<std::string>>> seen;
  const MasterCombination mc = assemble(p, box);
  for (const auto& keep : keep_sets(verifiable_pairs(p, box), d, std::nullopt, keep_cap)) {
    auto sys = try_keep(mc, keep);
    if (!sys || !verify_system(p, *sys, verify_order).ok()) continue;
    auto eqs = sys->equation_strings();
    std::sort(eqs.begin(), eqs.end());
    auto k = sys->keep;
    std::sort(k.begin(), k.end());
    if (seen.emplace(std::move(k), std::move(eqs)).second) out.push_back(std::move(*sys));
  }
  return out;
}

}  // namespace qfe
