#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "qfe/golden.hpp"
#include "qfe/search.hpp"

using namespace qfe;

namespace {

// Search restricted to a single parameter tuple.
SearchConfig pinned(const SeriesParams& p, int lo1, int hi1, int lo2, int hi2, int d) {
  SearchConfig c;
  c.B11 = {p.B11, p.B11};
  c.B22 = {p.B22, p.B22};
  c.B12 = {p.B12, p.B12};
  c.C1 = {p.C1, p.C1};
  c.C2 = {p.C2, p.C2};
  c.D1 = {p.D1, p.D1};
  c.D2 = {p.D2, p.D2};
  c.K1 = {p.K1, p.K1};
  c.K2 = {p.K2, p.K2};
  c.gamma = {p.gamma, p.gamma};
  c.eps1 = {p.eps1};
  c.eps2 = {p.eps2};
  c.lo1 = lo1, c.hi1 = hi1, c.lo2 = lo2, c.hi2 = hi2;
  c.sizes = {d};
  c.first_only = false;
  c.keep_cap = 2000;
  return c;
}

const HitRecord* hit_with_keep(const SearchOutcome& out, const std::vector<IndexPair>& keep) {
  for (const auto& h : out.hits) {
    if (h.keep == keep) return &h;
  }
  return nullptr;
}

SearchConfig small_config() {
  SearchConfig c;
  c.B11 = {1, 3};
  c.B22 = {1, 2};
  c.B12 = {1, 2};
  c.D1 = {1, 2};
  c.D2 = {1, 1};
  c.K1 = {1, 1};
  c.K2 = {1, 1};
  c.gamma = {1, 1};
  c.C1 = {-1, 0};
  c.C2 = {0, 0};
  c.hi1 = 2;
  c.hi2 = 1;
  c.sizes = {2};
  c.keep_cap = 8;
  return c;
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("qfe_search_" + std::to_string(::getpid()) + "_" +
            std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("keep-set enumeration") {
  const std::vector<IndexPair> pairs{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  CHECK(keep_sets(pairs, 2, std::nullopt, -1).size() == 6);
  const auto with = keep_sets(pairs, 2, IndexPair{1, 0}, -1);
  REQUIRE(with.size() == 3);
  CHECK(with[0] == std::vector<IndexPair>{{0, 0}, {1, 0}});
  CHECK(with[2] == std::vector<IndexPair>{{1, 0}, {1, 1}});
  CHECK(keep_sets(pairs, 3, std::nullopt, 2).size() == 2);
  CHECK(keep_sets(pairs, 5, std::nullopt, -1).empty());
  CHECK(keep_sets(pairs, 1, IndexPair{7, 7}, -1).empty());
}

TEST_CASE("keep-set text") {
  const auto k = parse_keep("(-2,-1);(-1,-1); (0, 0)");
  CHECK(k == std::vector<IndexPair>{{-2, -1}, {-1, -1}, {0, 0}});
  CHECK(keep_to_string(k) == "(-2,-1);(-1,-1);(0,0)");
  CHECK_THROWS_AS(parse_keep("(1,2);x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_keep(""), std::invalid_argument);
}

TEST_CASE("system json round trip") {
  for (const auto* g : golden::all_systems()) {
    INFO(g->name);
    const auto mc = assemble(g->params, g->box);
    const auto sys = extract_system(mc, solve_annihilator(mc, g->keep), g->keep);
    const auto back = system_from_json(Json::parse(to_json(sys).dump()));
    CHECK(back.params == sys.params);
    CHECK(back.keep == sys.keep);
    CHECK(back.equation_strings() == sys.equation_strings());
    CHECK(back.relation_strings() == sys.relation_strings());
    CHECK(verify_system(back.params, back, 30).ok());
  }
}

TEST_CASE("search finds Andrews' system") {
  const auto& g = golden::ag_system();
  const auto out = run_search(pinned(g.params, 0, 3, 0, 2, 3));
  const auto* h = hit_with_keep(out, g.keep);
  REQUIRE(h != nullptr);
  CHECK(h->system.relation_strings() == g.relations);
  CHECK(h->verify.ok());
  CHECK(h->box == g.box);
}

TEST_CASE("search finds the four-series system") {
  const auto& g = golden::thm11_system();
  const auto out = run_search(pinned(g.params, 0, 4, 0, 3, 4));
  const auto* h = hit_with_keep(out, g.keep);
  REQUIRE(h != nullptr);
  CHECK(h->system.equation_strings() == g.equations);
  CHECK(h->uniqueness.status == UniquenessStatus::Unique);
}

TEST_CASE("search couples the bicolored system with its product") {
  const auto& g = golden::thm41_system();
  auto cfg = pinned(g.params, -2, 2, -1, 1, 2);
  cfg.euler = true;
  const auto out = run_search(cfg);
  const auto* h = hit_with_keep(out, g.keep);
  REQUIRE(h != nullptr);
  CHECK(h->system.equation_strings() == g.equations);
  bool found = false;
  for (const auto& ph : h->products) {
    if (ph.c1 == 0 && ph.c2 == 0 && ph.x_power == 0) {
      found = true;
      REQUIRE(ph.form.period);
      CHECK(ph.form.period->period == 4);
      CHECK(ph.form.spec().to_string() == ProductSpec{4, {{1, -1}, {2, -1}, {3, -1}}}.to_string());
    }
  }
  CHECK(found);
}

TEST_CASE("every hit re-verifies from its serialized form") {
  const auto out = run_search(small_config());
  CHECK(out.summary.hits > 0);
  std::istringstream lines(out.hits_jsonl());
  int n = 0;
  for (std::string line; std::getline(lines, line); ++n) {
    const auto h = HitRecord::from_json(Json::parse(line));
    CHECK(verify_system(h.params, h.system, 30).ok());
  }
  CHECK(n == out.summary.hits);
}

TEST_CASE("search output is deterministic") {
  auto cfg = small_config();
  cfg.jobs = 1;
  const auto a = run_search(cfg);
  cfg.jobs = 4;
  const auto b = run_search(cfg);
  const auto c = run_search_serial(cfg);
  CHECK(a.hits_jsonl() == b.hits_jsonl());
  CHECK(a.failures_jsonl() == b.failures_jsonl());
  CHECK(a.hits_jsonl() == c.hits_jsonl());
  CHECK(a.failures_jsonl() == c.failures_jsonl());

  TempDir dir;
  write_outcome(a, dir.path / "one.jsonl");
  write_outcome(b, dir.path / "two.jsonl");
  CHECK(slurp(dir.path / "one.jsonl") == slurp(dir.path / "two.jsonl"));
  CHECK(slurp(dir.path / "one.failures.jsonl") == slurp(dir.path / "two.failures.jsonl"));
  CHECK(!slurp(dir.path / "one.jsonl").empty());
}

TEST_CASE("journal resumes finished tuples") {
  TempDir dir;
  const auto cfg = small_config();
  SearchOutcome first;
  {
    SearchJournal j(dir.path / "run");
    first = run_search(cfg, &j);
    CHECK(first.summary.resumed == 0);
  }
  SearchJournal j(dir.path / "run");
  CHECK(static_cast<long>(j.completed().size()) == first.summary.tuples);
  const auto again = run_search(cfg, &j);
  CHECK(again.summary.resumed == first.summary.tuples);
  CHECK(again.hits_jsonl() == first.hits_jsonl());
  CHECK(again.failures_jsonl() == first.failures_jsonl());
}

TEST_CASE("filters are recorded as skips") {
  auto cfg = small_config();
  cfg.B11 = {2, 2};
  cfg.B22 = {2, 2};
  cfg.B12 = {2, 2};
  cfg.K1 = {2, 2};
  cfg.K2 = {2, 2};
  const auto out = run_search(cfg);
  CHECK(out.hits.empty());
  CHECK(out.summary.skipped == out.summary.tuples);
  for (const auto& f : out.failures) CHECK(f.stage == "dilation");

  cfg = small_config();
  cfg.count_cap = 5;
  for (const auto& f : run_search(cfg).failures) CHECK(f.stage == "count-cap");

  // the running example violates the inequality, so strict mode skips it
  const auto& g = golden::ag_system();
  auto strict = pinned(g.params, 0, 3, 0, 2, 3);
  strict.prune = PruneMode::Strict;
  const auto s = run_search(strict);
  CHECK(s.hits.empty());
  REQUIRE(s.failures.size() >= 1);
  CHECK(s.failures[0].stage == "infeasible");
}

TEST_CASE("listing every system") {
  const auto& g = golden::ag_system();
  const auto all = list_all_systems(g.params, g.box, 3);
  bool found = false;
  for (const auto& s : all) found = found || (s.keep == g.keep && s.relation_strings() == g.relations);
  CHECK(found);
  std::set<std::vector<IndexPair>> keeps;
  for (const auto& s : all) keeps.insert(s.keep);
  CHECK(keeps.size() == all.size());

  const auto& v = golden::thm41_variant_system();
  found = false;
  for (const auto& s : list_all_systems(v.params, v.box, 2)) {
    found = found || (s.keep == v.keep && s.equation_strings() == v.equations);
  }
  CHECK(found);
}

TEST_CASE("config json") {
  const auto cfg = small_config();
  const auto back = SearchConfig::from_json(cfg.to_json());
  CHECK(back.tuples() == cfg.tuples());
  CHECK(back.to_json() == cfg.to_json());
  CHECK_THROWS_AS(SearchConfig::from_json(Json{{"bogus", 1}}), std::invalid_argument);
  CHECK_THROWS_AS(SearchConfig::from_json(Json{{"B11", Json::array({3, 1})}}), std::invalid_argument);
}
