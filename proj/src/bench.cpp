#include "dpsimplex/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <map>
#include <sstream>

#include <json.hpp>

#include "dpsimplex/generators.hpp"

namespace dpsimplex::bench {

namespace {

std::string fmt(double v, const char* format) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, v);
  return buf;
}

Row make_row(std::string problem, Rule rule, const SolveResult& r,
             std::uint64_t seed) {
  Row row;
  row.problem = std::move(problem);
  row.rule = to_string(rule);
  row.status = to_string(r.status);
  row.objective = r.objective;
  row.iterations = static_cast<double>(r.iterations);
  row.double_pivots = static_cast<double>(r.double_pivots);
  row.infeasibility = r.infeasibility;
  row.time_ms = r.time_ms;
  row.seed = seed;
  return row;
}

/// Appends one status-"mean" row per rule averaging the given rows
/// (seed carries the sample count). Reporting only; solve failures still
/// surface through the per-run rows.
void append_means(std::vector<Row>& rows, size_t first,
                  std::span<const Rule> rules, const std::string& problem) {
  std::vector<Row> means;
  for (Rule rule : rules) {
    Row mean;
    mean.problem = problem;
    mean.rule = to_string(rule);
    mean.status = "mean";
    mean.objective = std::numeric_limits<double>::quiet_NaN();
    long n = 0;
    for (size_t i = first; i < rows.size(); ++i)
      if (rows[i].rule == mean.rule) {
        mean.iterations += rows[i].iterations;
        mean.double_pivots += rows[i].double_pivots;
        mean.time_ms += rows[i].time_ms;
        ++n;
      }
    if (n == 0) continue;
    mean.iterations /= n;
    mean.double_pivots /= n;
    mean.time_ms /= n;
    mean.infeasibility = 0.0;
    mean.seed = static_cast<std::uint64_t>(n);
    means.push_back(std::move(mean));
  }
  rows.insert(rows.end(), std::make_move_iterator(means.begin()),
              std::make_move_iterator(means.end()));
}

SolveOptions suite_options(const SuiteConfig& cfg, Rule rule,
                           bool default_filter_on) {
  SolveOptions o = cfg.base;
  o.rule = rule;
  if (cfg.ls_filter_mode == 0)
    o.longest.filter = false;
  else if (cfg.ls_filter_mode == 1)
    o.longest.filter = true;
  else
    o.longest.filter = default_filter_on;
  return o;
}

}  // namespace

std::string to_csv(std::span<const Row> rows) {
  std::ostringstream os;
  os << kCsvHeader << "\n";
  for (const Row& r : rows) {
    os << r.problem << ',' << r.rule << ',' << r.status << ','
       << fmt(r.objective, "%.12g") << ',' << fmt(r.iterations, "%.10g")
       << ',' << fmt(r.double_pivots, "%.10g") << ','
       << fmt(r.infeasibility, "%.6g") << ',' << fmt(r.time_ms, "%.3f")
       << ',' << r.seed << "\n";
  }
  return os.str();
}

std::string to_json(std::span<const Row> rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Row& r : rows) {
    arr.push_back({{"problem", r.problem},
                   {"rule", r.rule},
                   {"status", r.status},
                   {"objective", r.objective},
                   {"iterations", r.iterations},
                   {"double_pivots", r.double_pivots},
                   {"infeasibility", r.infeasibility},
                   {"time_ms", r.time_ms},
                   {"seed", r.seed}});
  }
  return arr.dump(2) + "\n";
}

const std::vector<NetlibCase>& netlib_cases() {
  static const std::vector<NetlibCase> cases = {
      {"afiro", -4.64753e+02},  {"sc50a", -6.45751e+01},
      {"sc50b", -7.00000e+01},  {"adlittle", 2.25495e+05},
      {"blend", -3.08121e+01},  {"share2b", -3.58732e+02},
  };
  return cases;
}

GeneralSolve solve_general(const GeneralLP& lp, const SolveOptions& opts,
                           bool use_presolve) {
  GeneralSolve g;
  PresolveResult pre;
  const GeneralLP* model = &lp;
  if (use_presolve) {
    pre = presolve(lp);
    if (pre.infeasible) {
      g.status = SolveStatus::Infeasible;
      g.raw.status = SolveStatus::Infeasible;
      g.raw.message = pre.message;
      return g;
    }
    model = &pre.reduced;
  }
  Conversion conv = to_standard_form(*model);
  SolveResult r = solve(conv.lp, opts);
  g.status = r.status;
  g.iterations = r.iterations;
  g.phase1_iterations = r.phase1_iterations;
  g.double_pivots = r.double_pivots;
  g.time_ms = r.time_ms;
  g.infeasibility = r.infeasibility;
  if (r.status == SolveStatus::Optimal) {
    std::vector<double> x_model = conv.map.recover_point(r.x);
    g.x_original =
        use_presolve ? pre.postsolve(lp, x_model) : std::move(x_model);
    double v = lp.objective_constant;
    for (size_t j = 0; j < lp.columns.size(); ++j)
      v += lp.columns[j].cost * g.x_original[j];
    g.objective = v;
  }
  g.raw = std::move(r);
  return g;
}

std::vector<Row> run_kleeminty(const SuiteConfig& cfg) {
  std::vector<Row> rows;
  std::vector<int> variants =
      cfg.variant == 0 ? std::vector<int>{1, 2, 3} : std::vector<int>{cfg.variant};
  for (int v : variants)
    for (int m : cfg.sizes) {
      KleeMintyInstance inst = klee_minty(v, m);
      for (Rule rule : cfg.rules) {
        SolveResult r = solve(inst.lp, suite_options(cfg, rule, false));
        rows.push_back(make_row(inst.lp.name(), rule, r, 0));
      }
    }
  return rows;
}

std::vector<Row> run_random(const SuiteConfig& cfg) {
  std::vector<Row> rows;
  for (int m : cfg.sizes) {
    const size_t first = rows.size();
    for (int s = 1; s <= cfg.seeds; ++s) {
      RandomDenseInstance inst = random_dense(m, static_cast<std::uint64_t>(s));
      for (Rule rule : cfg.rules) {
        SolveResult r = solve(inst.lp, suite_options(cfg, rule, false));
        rows.push_back(make_row(inst.lp.name(), rule, r, inst.seed));
      }
    }
    append_means(rows, first, cfg.rules,
                 "random-m" + std::to_string(m) + "-mean");
  }
  return rows;
}

std::vector<Row> run_netlib(const SuiteConfig& cfg) {
  namespace fs = std::filesystem;
  std::vector<Row> rows;
  for (const NetlibCase& c : netlib_cases()) {
    std::string found;
    for (const std::string& cand :
         {c.name + ".mps", c.name + ".mps.gz", c.name + ".MPS"}) {
      fs::path p = fs::path(cfg.fixtures_dir) / cand;
      if (fs::exists(p)) {
        found = p.string();
        break;
      }
    }
    if (found.empty()) {
      Row r;
      r.problem = c.name;
      r.status = "missing";
      for (Rule rule : cfg.rules) {
        r.rule = to_string(rule);
        rows.push_back(r);
      }
      continue;
    }
    MpsReadResult mr = read_mps(found);
    for (Rule rule : cfg.rules) {
      GeneralSolve g = solve_general(mr.lp, suite_options(cfg, rule, true),
                                     cfg.presolve_on);
      Row row;
      row.problem = c.name;
      row.rule = to_string(rule);
      row.status = to_string(g.status);
      row.objective = g.objective;
      row.iterations = g.iterations;
      row.double_pivots = g.double_pivots;
      row.infeasibility = g.infeasibility;
      row.time_ms = g.time_ms;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<Row> run_cycling(const SuiteConfig& cfg) {
  namespace fs = std::filesystem;
  std::vector<Row> rows;
  std::vector<fs::path> files;
  if (!cfg.fixtures_dir.empty() && fs::exists(cfg.fixtures_dir))
    for (const auto& e : fs::directory_iterator(cfg.fixtures_dir))
      if (e.path().extension() == ".mps") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const fs::path& p : files) {
    MpsReadResult mr = read_mps(p.string());
    for (Rule rule : cfg.rules) {
      GeneralSolve g = solve_general(mr.lp, suite_options(cfg, rule, false),
                                     cfg.presolve_on);
      Row row;
      row.problem = p.stem().string();
      row.rule = to_string(rule);
      row.status = to_string(g.status);
      row.objective = g.objective;
      row.iterations = g.iterations;
      row.double_pivots = g.double_pivots;
      row.infeasibility = g.infeasibility;
      row.time_ms = g.time_ms;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

CompareReport compare(std::span<const Row> rows, Rule a, Rule b) {
  CompareReport rep;
  rep.rule_a = to_string(a);
  rep.rule_b = to_string(b);
  std::map<std::pair<std::string, std::uint64_t>, ComparePair> pairs;
  for (const Row& r : rows) {
    if (r.status == "mean") continue;  // aggregate reporting rows
    auto key = std::make_pair(r.problem, r.seed);
    ComparePair& p = pairs
                         .try_emplace(key, ComparePair{r.problem, r.seed, -1,
                                                       -1, 0.0, 0.0})
                         .first->second;
    if (r.rule == rep.rule_a) {
      p.iter_a = static_cast<long>(r.iterations);
      p.time_a = r.time_ms;
    } else if (r.rule == rep.rule_b) {
      p.iter_b = static_cast<long>(r.iterations);
      p.time_b = r.time_ms;
    }
  }
  std::vector<double> ia, ib, ta, tb;
  for (auto& [key, p] : pairs) {
    if (p.iter_a < 0 || p.iter_b < 0) rep.mismatched_sets = true;
    if (p.iter_a >= 0) {
      ia.push_back(static_cast<double>(p.iter_a));
      ta.push_back(p.time_a);
    }
    if (p.iter_b >= 0) {
      ib.push_back(static_cast<double>(p.iter_b));
      tb.push_back(p.time_b);
    }
    rep.pairs.push_back(std::move(p));
  }
  rep.median_iter_a = median(ia);
  rep.median_iter_b = median(ib);
  rep.median_time_a = median(ta);
  rep.median_time_b = median(tb);
  if (rep.median_iter_a > 0)
    rep.iteration_improvement_pct =
        (rep.median_iter_a - rep.median_iter_b) / rep.median_iter_a * 100.0;
  if (rep.median_time_a > 0)
    rep.time_improvement_pct =
        (rep.median_time_a - rep.median_time_b) / rep.median_time_a * 100.0;
  return rep;
}

std::string format_compare(const CompareReport& rep) {
  std::ostringstream os;
  os << "problem,seed," << rep.rule_a << "_iters," << rep.rule_b << "_iters,"
     << rep.rule_a << "_ms," << rep.rule_b << "_ms\n";
  for (const ComparePair& p : rep.pairs) {
    os << p.problem << ',' << p.seed << ',' << p.iter_a << ',' << p.iter_b
       << ',' << fmt(p.time_a, "%.3f") << ',' << fmt(p.time_b, "%.3f") << "\n";
  }
  os << "\nmedian iterations: " << rep.rule_a << " " << rep.median_iter_a
     << ", " << rep.rule_b << " " << rep.median_iter_b << " (improvement "
     << fmt(rep.iteration_improvement_pct, "%.1f") << "%)\n";
  os << "median time ms: " << rep.rule_a << " "
     << fmt(rep.median_time_a, "%.3f") << ", " << rep.rule_b << " "
     << fmt(rep.median_time_b, "%.3f") << " (improvement "
     << fmt(rep.time_improvement_pct, "%.1f") << "%)\n";
  if (rep.mismatched_sets)
    os << "warning: measurement sets differ between the two rules\n";
  return os.str();
}

}  // namespace dpsimplex::bench
