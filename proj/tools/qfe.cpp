// qfe: command-line front end for the q-difference equation toolkit.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qfe/contiguous.hpp"
#include "qfe/euler.hpp"
#include "qfe/partitions.hpp"
#include "qfe/repro.hpp"
#include "qfe/search.hpp"
#include "qfe/serialize.hpp"
#include "qfe/solver.hpp"

using namespace qfe;

namespace {

bool g_json = false;

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

IndexBox parse_box(const std::string& text, const SeriesParams& p) {
  std::vector<int> v;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) v.push_back(std::stoi(item));
  if (v.size() != 4) throw std::invalid_argument("--box wants m1,M1,m2,M2");
  const auto [d1, d2] = lattice_steps(p);
  IndexBox b{v[0], v[1], v[2], v[3], d1, d2};
  b.validate();
  return b;
}

int default_jobs() {
  if (const char* env = std::getenv("QFE_JOBS")) return std::max(0, std::atoi(env));
  return 0;
}

Json series_json(const TruncSeries& s, bool x_free) {
  Json out = Json::array();
  if (x_free) {
    for (const auto& c : s.q_coefficients()) out.push_back(c.get_str());
    return out;
  }
  for (const auto& t : s.to_poly().terms()) {
    out.push_back({{"x", t.mono.xdeg}, {"q", t.mono.qdeg}, {"c", t.coeff.get_str()}});
  }
  return out;
}

// ---- expand

struct ExpandArgs {
  std::string params, product;
  int order = 20;
  std::optional<int> x_power;
  int shift = 0;
};

int cmd_expand(const ExpandArgs& a) {
  TruncSeries s;
  std::string what;
  if (!a.product.empty()) {
    const auto spec = ProductSpec::parse(a.product);
    s = expand_product(spec, a.order);
    what = spec.to_string();
  } else {
    const auto p = SeriesParams::parse(a.params);
    s = eval_series(p, a.order, a.x_power ? XMode::power(*a.x_power) : XMode::symbolic(a.shift));
    what = p.to_string();
  }
  const bool x_free = !a.product.empty() || a.x_power.has_value();
  if (g_json) {
    emit({{"series", what}, {"order", a.order}, {"coefficients", series_json(s, x_free)}});
  } else {
    std::cout << s.to_string() << "\n";
  }
  return 0;
}

// ---- contiguous

int cmd_contiguous(const std::string& params, const std::string& box_text) {
  const auto p = SeriesParams::parse(params);
  const auto box = parse_box(box_text, p);
  const auto inst = enumerate_box_instances(p, box);
  const long long ne = count_equations(p, box.delta1(), box.delta2());
  const long long ns = count_series(p, box.delta1(), box.delta2());
  if (g_json) {
    Json eqs = Json::array();
    for (const auto& e : inst) {
      eqs.push_back({{"type", e.type}, {"c1", e.c1}, {"c2", e.c2}, {"text", e.equation.to_string()}});
    }
    emit({{"params", p.to_string()}, {"box", to_json(box)}, {"equations", eqs},
          {"count_equations", ne}, {"count_series", ns}});
  } else {
    for (const auto& e : inst) std::cout << "T" << e.type << "  " << e.equation.to_string() << "\n";
    std::cout << ne << " equations, " << ns << " series\n";
  }
  return ne == static_cast<long long>(inst.size()) ? 0 : 1;
}

// ---- solve

int cmd_solve(const std::string& params, const std::string& box_text, const std::string& keep_text,
              int size, int order) {
  const auto p = SeriesParams::parse(params);
  const auto box = parse_box(box_text, p);
  std::vector<ExtractedSystem> systems;
  int dim = -1;
  if (!keep_text.empty()) {
    const auto keep = parse_keep(keep_text);
    const auto mc = assemble(p, box);
    const auto basis = solve_annihilator(mc, keep);
    dim = basis.dimension();
    systems.push_back(extract_system(mc, basis, keep));
  } else {
    if (size < 1) throw std::invalid_argument("solve needs --keep or --size");
    systems = list_all_systems(p, box, size, order);
  }
  bool ok = !systems.empty();
  Json out = Json::array();
  for (const auto& s : systems) {
    const bool verified = s.complete() && verify_system(p, s, order).ok();
    ok = ok && verified;
    if (g_json) {
      Json j = to_json(s);
      j["complete"] = s.complete();
      j["verified"] = verified;
      out.push_back(std::move(j));
      continue;
    }
    std::cout << "keep " << keep_to_string(s.keep) << (s.complete() ? "" : "  (incomplete)")
              << (verified ? "" : "  (not verified)") << "\n";
    for (const auto& r : s.relation_strings()) std::cout << "  " << r << "\n";
    for (const auto& e : s.equation_strings()) std::cout << "  " << e << "\n";
  }
  if (g_json) {
    Json j{{"systems", out}};
    if (dim >= 0) j["basis_dimension"] = dim;
    emit(j);
  } else {
    if (dim >= 0) std::cout << "basis dimension " << dim << "\n";
    if (systems.empty()) std::cout << "no system\n";
  }
  return ok ? 0 : 1;
}

// ---- verify

int cmd_verify(const std::string& file, int order) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot read " + file);
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  std::vector<ExtractedSystem> systems;
  auto take = [&](const Json& j) {
    systems.push_back(system_from_json(j.contains("system") ? j.at("system") : j));
  };
  try {
    take(Json::parse(text));
  } catch (const Json::parse_error&) {
    std::istringstream lines(text);
    for (std::string line; std::getline(lines, line);) {
      if (!line.empty()) take(Json::parse(line));
    }
  }
  bool ok = !systems.empty();
  Json out = Json::array();
  for (const auto& s : systems) {
    const auto v = verify_system(s.params, s, order);
    const auto u = verify_uniqueness(s, order);
    ok = ok && v.ok();
    if (g_json) {
      out.push_back({{"params", s.params.to_string()}, {"keep", keep_to_json(s.keep)},
                     {"verify", to_json(v)}, {"uniqueness", to_json(u)}});
    } else {
      std::cout << s.params.to_string() << "  keep " << keep_to_string(s.keep) << "  residual "
                << (v.ok() ? "none to q^" + std::to_string(order)
                           : "at q^" + std::to_string(v.min_order()))
                << "  uniqueness " << to_string(u.status) << "\n";
    }
  }
  if (g_json) emit({{"results", out}, {"ok", ok}});
  return ok ? 0 : 1;
}

// ---- euler

struct EulerArgs {
  std::string params;
  EulerOptions opt;
  bool scan = false;
  int x_power = 0;
  std::vector<int> subs{0};
};

int cmd_euler(const EulerArgs& a) {
  const auto p = SeriesParams::parse(a.params);
  if (a.scan) {
    const auto hits = product_scan(p, a.opt, a.subs);
    if (g_json) {
      Json out = Json::array();
      for (const auto& h : hits) out.push_back(to_json(h));
      emit({{"params", p.to_string()}, {"hits", out}});
    } else {
      for (const auto& h : hits) {
        std::cout << "S[" << h.c1 << "," << h.c2 << "](q^" << h.x_power << ") = "
                  << (h.form.period->offset == 1 ? h.form.spec().to_string()
                                                 : "period " + std::to_string(h.form.period->period) +
                                                       " from " + std::to_string(h.form.period->offset))
                  << "\n";
      }
      std::cout << hits.size() << " products\n";
    }
    return 0;
  }
  const auto b = eval_series(p, a.opt.order, XMode::power(a.x_power)).q_coefficients();
  const auto f = product_form(b, a.opt);
  if (g_json) {
    Json j = to_json(f);
    Json ex = Json::array();
    for (std::size_t i = 1; i < f.exponents.size(); ++i) ex.push_back(f.exponents[i].get_str());
    j["exponents"] = ex;
    emit(j);
  } else {
    std::cout << "a_1..a_" << a.opt.order << ":";
    for (std::size_t i = 1; i < f.exponents.size(); ++i) std::cout << " " << f.exponents[i];
    std::cout << "\n";
    if (!f.period) {
      std::cout << "no period up to " << a.opt.kmax << "\n";
    } else if (f.period->offset == 1) {
      std::cout << "period " << f.period->period << ": " << f.spec().to_string() << "\n";
    } else {
      std::cout << "period " << f.period->period << " from index " << f.period->offset << "\n";
    }
  }
  return f.period ? 0 : 1;
}

// ---- partitions

int cmd_partitions(const std::string& cls, int N, const std::string& variant) {
  if (N < 0) throw std::invalid_argument("--max must be non-negative");
  const Variant v = variant == "t2" ? Variant::T2 : Variant::T1;
  if (cls == "thm12") {
    const auto rep = verify_thm12(N);
    if (g_json) {
      Json rows = Json::array();
      for (const auto& r : rep.rows) {
        rows.push_back({{"n", r.n}, {"at_most_3", r.at_most_3}, {"match", r.match}, {"gap", r.gap}});
      }
      emit({{"rows", rows}, {"ok", rep.ok()}});
    } else {
      std::cout << "n\tat_most_3\tmatch\tgap\n";
      for (const auto& r : rep.rows) {
        std::cout << r.n << "\t" << r.at_most_3 << "\t" << r.match << "\t" << r.gap << "\n";
      }
    }
    return rep.ok() ? 0 : 1;
  }
  if (cls == "at-most-3") {
    Json rows = Json::array();
    if (!g_json) std::cout << "n\tcount\n";
    for (int n = 0; n <= N; ++n) {
      const long c = count_at_most_3(n);
      if (g_json) {
        rows.push_back({{"n", n}, {"count", c}});
      } else {
        std::cout << n << "\t" << c << "\n";
      }
    }
    if (g_json) emit({{"rows", rows}});
    return 0;
  }
  CountTable t;
  if (cls == "thm11") {
    t = thm11_table(N);
  } else if (cls == "match") {
    t = bicolored_match_table(N, v);
  } else if (cls == "gap") {
    t = bicolored_gap_table(N, v);
  } else {
    throw std::invalid_argument("unknown class: " + cls);
  }
  Json rows = Json::array();
  if (!g_json) std::cout << "n\ttotal\tby_parts\n";
  for (int n = 0; n <= N; ++n) {
    long total = 0;
    std::vector<long> by;
    for (int m = 0; m <= N; ++m) {
      by.push_back(t[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)]);
      total += by.back();
    }
    while (by.size() > 1 && by.back() == 0) by.pop_back();
    if (g_json) {
      rows.push_back({{"n", n}, {"total", total}, {"by_parts", by}});
    } else {
      std::cout << n << "\t" << total << "\t";
      for (std::size_t m = 0; m < by.size(); ++m) std::cout << (m ? "," : "") << by[m];
      std::cout << "\n";
    }
  }
  if (g_json) emit({{"rows", rows}});
  return 0;
}

// ---- search

struct SearchArgs {
  std::string config, out, prune;
  std::optional<int> jobs, keep_cap, verify_order;
  std::vector<int> sizes;
  bool euler = false, all = false, resume = false, serial = false;
};

int cmd_search(const SearchArgs& a) {
  SearchConfig cfg;
  if (!a.config.empty()) {
    std::ifstream in(a.config);
    if (!in) throw std::runtime_error("cannot read " + a.config);
    cfg = SearchConfig::from_json(Json::parse(in));
  }
  cfg.jobs = a.jobs.value_or(cfg.jobs ? cfg.jobs : default_jobs());
  if (a.keep_cap) cfg.keep_cap = *a.keep_cap;
  if (a.verify_order) cfg.verify_order = *a.verify_order;
  if (!a.sizes.empty()) cfg.sizes = a.sizes;
  if (!a.prune.empty()) cfg.prune = a.prune == "strict" ? PruneMode::Strict : PruneMode::Heuristic;
  if (a.euler) cfg.euler = true;
  if (a.all) cfg.first_only = false;
  cfg.validate();
  std::optional<SearchJournal> journal;
  if (a.resume) {
    if (a.out.empty()) throw std::invalid_argument("--resume needs --out");
    journal.emplace(a.out);
  }
  const auto res = a.serial ? run_search_serial(cfg, journal ? &*journal : nullptr)
                            : run_search(cfg, journal ? &*journal : nullptr);
  if (!a.out.empty()) write_outcome(res, a.out);
  if (g_json) {
    emit({{"config", cfg.to_json()}, {"summary", res.summary.to_json()}});
  } else {
    if (a.out.empty()) std::cout << res.hits_jsonl();
    const auto& s = res.summary;
    std::cerr << s.tuples << " tuples (" << s.resumed << " resumed), " << s.skipped
              << " skipped, " << s.keep_sets << " keep-sets, " << s.hits << " hits\n";
  }
  return 0;
}

// ---- repro

int cmd_repro(std::vector<std::string> names, bool list) {
  if (list) {
    for (const auto& a : repro_artifacts()) std::cout << a.name << "\t" << a.description << "\n";
    return 0;
  }
  if (names.empty() || (names.size() == 1 && names[0] == "all")) {
    names.clear();
    for (const auto& a : repro_artifacts()) names.push_back(a.name);
  }
  bool ok = true;
  Json out = Json::array();
  for (const auto& n : names) {
    const auto r = run_repro(n);
    ok = ok && r.pass;
    if (g_json) {
      out.push_back({{"name", r.name}, {"pass", r.pass}, {"lines", r.lines}, {"diff", r.diff}});
      continue;
    }
    std::cout << "== " << r.name << "\n";
    for (const auto& l : r.lines) std::cout << l << "\n";
    for (const auto& l : r.diff) std::cout << l << "\n";
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << "\n";
  }
  if (g_json) emit({{"results", out}, {"ok", ok}});
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Systems of q-difference equations for double series"};
  app.require_subcommand(1);
  app.add_flag("--json", g_json, "machine-readable output")->configurable(false);
  app.fallthrough();
  int rc = 0;

  ExpandArgs ea;
  auto* expand = app.add_subcommand("expand", "series or product to q^M");
  auto* ep = expand->add_option("--params", ea.params, "B11,B22,B12,C1,C2,D1,D2,K1,K2[,gamma,eps1,eps2]");
  auto* epr = expand->add_option("--product", ea.product, "e.g. \"(q^{1},q^{5};q^{6})_inf^{1}\"");
  ep->excludes(epr);
  expand->add_option("--order", ea.order, "truncation order M")->check(CLI::NonNegativeNumber);
  expand->add_option("--x-power", ea.x_power, "substitute x = q^s");
  expand->add_option("--shift", ea.shift, "evaluate S(x q^shift)");
  expand->callback([&] {
    if (ea.params.empty() && ea.product.empty()) throw CLI::RequiredError("--params or --product");
    rc = cmd_expand(ea);
  });

  std::string params, box, keep;
  int order = 30, size = 0;
  auto* contiguous = app.add_subcommand("contiguous", "primary relations inside an index box");
  contiguous->add_option("--params", params)->required();
  contiguous->add_option("--box", box, "m1,M1,m2,M2")->required();
  contiguous->callback([&] { rc = cmd_contiguous(params, box); });

  auto* solve = app.add_subcommand("solve", "closed systems on a keep-set, or all of a size");
  solve->add_option("--params", params)->required();
  solve->add_option("--box", box, "m1,M1,m2,M2")->required();
  auto* ko = solve->add_option("--keep", keep, "\"(a,b);(c,d)\"");
  auto* so = solve->add_option("--size", size, "list every system with this many series");
  ko->excludes(so);
  solve->add_option("--order", order, "verification order");
  solve->callback([&] { rc = cmd_solve(params, box, keep, size, order); });

  std::string file;
  auto* verify = app.add_subcommand("verify", "re-verify a saved system or hit file");
  verify->add_option("file", file)->required()->check(CLI::ExistingFile);
  verify->add_option("--order", order);
  verify->callback([&] { rc = cmd_verify(file, order); });

  EulerArgs eu;
  auto* euler = app.add_subcommand("euler", "infinite product form of S(q^s)");
  euler->add_option("--params", eu.params)->required();
  euler->add_option("--order", eu.opt.order);
  euler->add_option("--kmax", eu.opt.kmax);
  euler->add_flag("--eventual", eu.opt.eventual, "allow a pre-period");
  euler->add_option("--x-power", eu.x_power);
  euler->add_flag("--scan", eu.scan, "scan nearby (C1,C2)");
  euler->add_option("--subs", eu.subs, "x = q^s values for --scan")->delimiter(',');
  euler->callback([&] { rc = cmd_euler(eu); });

  std::string cls = "thm12", variant = "t1";
  int nmax = 25;
  auto* parts = app.add_subcommand("partitions", "partition class counts");
  parts->add_option("--class", cls)->check(CLI::IsMember({"thm11", "match", "gap", "at-most-3", "thm12"}));
  parts->add_option("--variant", variant)->check(CLI::IsMember({"t1", "t2"}));
  parts->add_option("--max", nmax, "largest n");
  parts->callback([&] { rc = cmd_partitions(cls, nmax, variant); });

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "parameter sweep, hits as JSON lines");
  search->add_option("--config", sa.config, "JSON config")->check(CLI::ExistingFile);
  search->add_option("--out", sa.out, "hit file; failures go next to it");
  search->add_option("--jobs", sa.jobs, "worker threads (default $QFE_JOBS)");
  search->add_option("--keep-cap", sa.keep_cap);
  search->add_option("--verify-order", sa.verify_order);
  search->add_option("--sizes", sa.sizes)->delimiter(',');
  search->add_option("--prune", sa.prune)->check(CLI::IsMember({"strict", "heuristic"}));
  search->add_flag("--euler", sa.euler, "product scan on every hit");
  search->add_flag("--all", sa.all, "every system, not just the first per tuple");
  search->add_flag("--resume", sa.resume, "journal next to --out, skip finished tuples");
  search->add_flag("--serial", sa.serial, "single-threaded reference path");
  search->callback([&] { rc = cmd_search(sa); });

  std::vector<std::string> names;
  bool list = false;
  auto* repro = app.add_subcommand("repro", "named reproduction checks");
  repro->add_option("names", names, "artifact names, or all");
  repro->add_flag("--list", list);
  repro->callback([&] { rc = cmd_repro(names, list); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
