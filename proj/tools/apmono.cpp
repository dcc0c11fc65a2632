// apmono: command-line front end.
//
//   apmono count   --group zn|interval --n N --k K (--coloring STR | --file PATH) [--filter all|nondeg|by-d]
//   apmono density --block NAME|BITS|TEMPLATExINNER --k K --r R
//   apmono verify  --suite tables|identities|recursion|periodic|pick|all [--seed S]
//   apmono search  (--min-zn N K | --zero-mono N K | --pattern-free MAXN | --min-pattern N)
//                  [--budget B] [--workers W] [--checkpoint PATH] [--sym NAME] [--mode naive|pruned]
//
// Every command accepts --json. Exit codes: 0 ok, 1 failed verification or
// unproved search, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "apmono/apcount.hpp"
#include "apmono/constructions.hpp"
#include "apmono/kernels.hpp"
#include "apmono/periodic.hpp"
#include "apmono/search.hpp"
#include "apmono/suites.hpp"

using json = nlohmann::ordered_json;
using namespace apmono;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Record {
  std::string command;
  json inputs = json::object();
  json results = json::object();
  std::optional<Ratio> exact;
  bool exhaustive = true;
  json stats = json::object();
  std::vector<std::string> text;
  int exit_code = 0;
};

void emit(const Record& r, bool as_json, double elapsed_ms) {
  if (as_json) {
    json out;
    out["command"] = r.command;
    out["inputs"] = r.inputs;
    out["results"] = r.results;
    out["exact"] = r.exact ? json{{"num", r.exact->num()}, {"den", r.exact->den()}} : json(nullptr);
    out["exhaustive"] = r.exhaustive;
    json stats = r.stats;
    stats["elapsed_ms"] = elapsed_ms;
    out["stats"] = stats;
    std::cout << out.dump(2) << '\n';
    return;
  }
  for (const auto& line : r.text) std::cout << line << '\n';
}

GroupKind parse_group(const std::string& g) {
  if (g == "zn") return GroupKind::Cyclic;
  if (g == "interval") return GroupKind::Interval;
  throw UsageError("--group must be zn or interval");
}

Coloring resolve_coloring(const std::string& spec, GroupKind kind, std::size_t n) {
  Coloring builtin;
  if (lookup_builtin_coloring(spec, builtin)) {
    if (builtin.size() != n)
      throw UsageError(spec + " has length " + std::to_string(builtin.size()) + ", not " + std::to_string(n));
    return builtin.as(kind);
  }
  if (spec == "all-zeros" || spec == "all-red") return Coloring::constant(kind, n, Color::Red);
  if (spec == "all-ones" || spec == "all-blue") return Coloring::constant(kind, n, Color::Blue);
  return parse_coloring(spec, kind, n);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string decimal(const Ratio& r) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(10) << r.to_double();
  return os.str();
}

// ---- count ----

struct CountArgs {
  std::string group = "zn";
  std::size_t n = 0;
  std::size_t k = 0;
  std::string coloring;
  std::string file;
  std::string filter = "all";
};

Record run_count(const CountArgs& a) {
  if (a.coloring.empty() == a.file.empty()) throw UsageError("give exactly one of --coloring and --file");
  if (a.k < 1) throw UsageError("--k must be positive");
  const GroupKind kind = parse_group(a.group);
  Coloring c = a.file.empty() ? resolve_coloring(a.coloring, kind, a.n) : parse_coloring(read_file(a.file), kind, a.n);

  Record r;
  r.command = "count";
  r.inputs = {{"group", a.group}, {"n", a.n}, {"k", a.k}, {"coloring", c.str()}, {"filter", a.filter}};
  std::uint64_t total = 0;
  if (a.filter == "all" || a.filter == "nondeg") {
    if (kind == GroupKind::Cyclic) {
      total = count_mono_cyclic(c, a.k, a.filter == "all" ? MonoFilter::All : MonoFilter::NonDegenerateOnly);
    } else {
      // Increasing progressions in [n] are never degenerate.
      total = count_mono_interval(c, a.k);
    }
  } else if (a.filter == "by-d") {
    std::vector<std::uint64_t> by_d = kind == GroupKind::Cyclic
                                          ? count_mono_cyclic_by_difference(c, a.k)
                                          : kernels::interval_by_difference_parallel(c.bits(), a.k);
    json split = json::object();
    for (std::size_t d = 0; d < by_d.size(); ++d) {
      if (by_d[d] == 0) continue;
      split[std::to_string(d)] = by_d[d];
      r.text.push_back("d=" + std::to_string(d) + ": " + std::to_string(by_d[d]));
      total += by_d[d];
    }
    r.results["by_difference"] = split;
  } else {
    throw UsageError("--filter must be all, nondeg or by-d");
  }
  r.results["count"] = total;
  if (kind == GroupKind::Interval) r.results["total_increasing"] = total_increasing_aps(a.n, a.k);
  r.exact = Ratio(static_cast<std::int64_t>(total));
  r.text.push_back("count: " + std::to_string(total));
  if (kind == GroupKind::Interval) r.text.push_back("total increasing: " + std::to_string(total_increasing_aps(a.n, a.k)));
  return r;
}

// ---- density ----

// NAME, BITS, or TEMPLATE x INNER (e.g. B11xB20, B11x10), nested to the right.
Coloring resolve_block(const std::string& spec) {
  Coloring c;
  if (lookup_builtin_coloring(spec, c)) return c;
  BlockTemplate t({0});
  const auto x = spec.find_first_of("xX");
  if (x != std::string::npos) {
    const std::string head = spec.substr(0, x);
    if (!lookup_builtin_template(head, t)) throw UsageError("unknown template " + head);
    return ltimes(t, resolve_block(spec.substr(x + 1)));
  }
  if (lookup_builtin_template(spec, t)) throw UsageError(spec + " is a template; fill its star first");
  return parse_coloring(spec, GroupKind::Cyclic);
}

struct DensityArgs {
  std::string block;
  std::size_t k = 0;
  long long r = -1;
};

Record run_density(const DensityArgs& a) {
  Coloring block = resolve_block(a.block);
  if (a.r < 0 || static_cast<std::size_t>(a.r) >= block.size())
    throw UsageError("--r must lie in [0, " + std::to_string(block.size()) + ")");
  if (a.k != 4 && a.k != 5) throw UsageError("--k must be 4 or 5");
  const auto r_off = static_cast<std::size_t>(a.r);
  Ratio d = density_upper_bound(block, a.k, r_off);

  Record r;
  r.command = "density";
  r.inputs = {{"block", block.str()}, {"b", block.size()}, {"k", a.k}, {"r", a.r}};
  r.results["density"] = d.str();
  r.results["decimal"] = d.to_double();
  if (r_off != 0) {
    json counts = json::object();
    for (const auto& [idx, cnt] : class_counts(block, a.k, r_off))
      counts[WrapClass::from_index(idx, a.k).str()] = cnt;
    r.results["class_counts"] = counts;
  }
  r.exact = d;
  r.text.push_back("density: " + d.str());
  r.text.push_back("decimal: " + decimal(d));
  return r;
}

// ---- verify ----

Record run_verify(const std::string& suite, std::uint64_t seed) {
  std::vector<suites::Check> checks;
  try {
    checks = suites::run(suite, seed);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Record r;
  r.command = "verify";
  r.inputs = {{"suite", suite}, {"seed", seed}};
  json list = json::array();
  std::size_t failed = 0;
  for (const auto& c : checks) {
    list.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    r.text.push_back(std::string(c.passed ? "PASS " : "FAIL ") + c.name + (c.detail.empty() ? "" : "  [" + c.detail + "]"));
    failed += !c.passed;
  }
  r.results["checks"] = list;
  r.results["failed"] = failed;
  r.text.push_back(failed == 0 ? "all " + std::to_string(checks.size()) + " checks passed"
                               : std::to_string(failed) + " of " + std::to_string(checks.size()) + " checks failed");
  r.exit_code = failed == 0 ? 0 : 1;
  return r;
}

// ---- search ----

struct SearchArgs {
  std::vector<std::size_t> min_zn;
  std::vector<std::size_t> zero_mono;
  std::size_t pattern_free = 0;
  std::size_t min_pattern = 0;
  std::string budget;
  int workers = 0;
  std::string checkpoint;
  std::string sym = "affine+conj";
  std::string mode = "pruned";
  std::string filter = "all";
  std::size_t cap = 0;
};

SearchBudget parse_budget(const std::string& text) {
  SearchBudget b;
  if (text.empty()) return b;
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &pos);
  } catch (const std::exception&) {
    throw UsageError("bad --budget '" + text + "'");
  }
  const std::string unit = text.substr(pos);
  if (unit.empty()) {
    b.max_nodes = v;
  } else if (unit == "s") {
    b.max_time = std::chrono::seconds(v);
  } else if (unit == "m") {
    b.max_time = std::chrono::minutes(v);
  } else if (unit == "h") {
    b.max_time = std::chrono::hours(v);
  } else {
    throw UsageError("--budget takes a node count or a time like 30s, 10m, 2h");
  }
  return b;
}

json coloring_list(const std::vector<Coloring>& cs) {
  json out = json::array();
  for (const auto& c : cs) out.push_back(c.str());
  return out;
}

Record run_min_zn(const SearchArgs& a) {
  CyclicSearchOptions opts;
  opts.sym = SymmetryGroup::parse(a.sym);
  if (a.mode == "naive") {
    opts.mode = SearchMode::Naive;
  } else if (a.mode != "pruned") {
    throw UsageError("--mode must be naive or pruned");
  }
  if (a.filter == "nondeg") {
    opts.filter = MonoFilter::NonDegenerateOnly;
  } else if (a.filter != "all") {
    throw UsageError("--filter must be all or nondeg");
  }
  opts.workers = a.workers;
  opts.cap = a.cap;
  const std::size_t n = a.min_zn[0], k = a.min_zn[1];
  SearchReport rep = exhaustive_min_cyclic(n, k, opts);

  Record r;
  r.command = "search";
  r.inputs = {{"min_zn", {n, k}}, {"symmetry", rep.symmetry.name()}, {"mode", a.mode}, {"filter", a.filter}};
  r.results["minimum"] = rep.minimum_count;
  r.results["density"] = Ratio(static_cast<std::int64_t>(rep.minimum_count), static_cast<std::int64_t>(n * n)).str();
  r.results["witnesses"] = coloring_list(rep.witnesses);
  r.exact = Ratio(static_cast<std::int64_t>(rep.minimum_count));
  r.exhaustive = rep.exhaustive;
  r.stats["nodes_explored"] = rep.nodes_explored;
  r.text.push_back("minimum: " + std::to_string(rep.minimum_count));
  r.text.push_back("orbits attaining it (" + rep.symmetry.name() + "): " + std::to_string(rep.witnesses.size()));
  for (const auto& w : rep.witnesses) r.text.push_back("  " + w.str());
  return r;
}

Record run_zero_mono(const SearchArgs& a) {
  const std::size_t n = a.zero_mono[0], k = a.zero_mono[1];
  const SymmetryGroup sym = SymmetryGroup::parse(a.sym);
  auto orbits = zero_mono_colorings(n, k, sym, a.workers, a.cap);
  Record r;
  r.command = "search";
  r.inputs = {{"zero_mono", {n, k}}, {"symmetry", sym.name()}};
  r.results["orbits"] = orbits.size();
  r.results["representatives"] = coloring_list(orbits);
  r.exact = Ratio(static_cast<std::int64_t>(orbits.size()));
  r.text.push_back("orbits (" + sym.name() + "): " + std::to_string(orbits.size()));
  for (const auto& w : orbits) r.text.push_back("  " + w.str());
  return r;
}

Record run_pattern_free(const SearchArgs& a) {
  const std::size_t limit = a.pattern_free;
  auto reports = pattern_free_max_interval(frame_pattern_set(), limit, a.workers);
  Record r;
  r.command = "search";
  r.inputs = {{"pattern_free", limit}, {"patterns", frame_pattern_set().patterns()}};
  std::size_t max_free = 0;
  std::optional<Coloring> witness;
  std::uint64_t nodes = 0;
  for (const auto& rep : reports) {
    nodes += rep.nodes_explored;
    if (rep.outcome == PatternOutcome::FreeColoringFound) {
      max_free = rep.n;
      witness = rep.witness;
    }
  }
  const bool exists_at_limit = max_free == limit;
  r.results["max_free_n"] = max_free;
  r.results["witness"] = witness ? json(witness->str()) : json(nullptr);
  r.results["free_at_limit"] = exists_at_limit;
  r.exact = Ratio(static_cast<std::int64_t>(max_free));
  r.stats["nodes_explored"] = nodes;
  r.text.push_back("largest n with an F-free coloring of [n]: " + std::to_string(max_free));
  if (witness) r.text.push_back("lex-first witness: " + witness->str());
  if (!exists_at_limit) r.text.push_back("no F-free coloring of [" + std::to_string(limit) + "]");
  return r;
}

Record run_min_pattern(const SearchArgs& a) {
  PatternMinOptions opts;
  opts.budget = parse_budget(a.budget);
  opts.workers = a.workers;
  opts.checkpoint_path = a.checkpoint;
  const std::size_t n = a.min_pattern;
  PatternMinResult res = min_pattern_count_interval(n, frame_pattern_set(), opts);

  Record r;
  r.command = "search";
  r.inputs = {{"min_pattern", n}, {"budget", a.budget}, {"checkpoint", a.checkpoint}};
  json minima = json::object();
  std::uint64_t nodes = 0;
  for (const auto& rep : res.reports) {
    nodes += rep.nodes_explored;
    if (rep.min_count && !rep.budget_exhausted) {
      minima[std::to_string(rep.n)] = *rep.min_count;
      r.text.push_back("[" + std::to_string(rep.n) + "] minimum " + std::to_string(*rep.min_count) +
                       (rep.witness ? "  " + rep.witness->str() : ""));
    }
  }
  r.results["minima"] = minima;
  const auto& last = res.final_report();
  const bool proved = last.n == n && !last.budget_exhausted && last.min_count.has_value();
  r.exhaustive = proved;
  r.stats["nodes_explored"] = nodes;
  if (proved) {
    r.results["minimum"] = *last.min_count;
    r.results["witness"] = last.witness ? json(last.witness->str()) : json(nullptr);
    r.exact = Ratio(static_cast<std::int64_t>(*last.min_count));
    const Ratio constant = Ratio(2 * static_cast<std::int64_t>(*last.min_count),
                                 static_cast<std::int64_t>(total_increasing_aps(n, 5)));
    r.results["constant"] = constant.str();
    r.text.push_back("2*min/total: " + constant.str());
  } else {
    r.results["minimum"] = nullptr;
    r.results["stopped_at"] = last.n;
    r.results["lower_bound"] = last.lower_bound_proved ? json(*last.lower_bound_proved) : json(nullptr);
    std::optional<std::uint64_t> best;
    if (last.witness) best = count_frame_patterns(*last.witness, frame_pattern_set());
    r.results["best_found"] = best ? json(*best) : json(nullptr);
    r.results["best_witness"] = last.witness ? json(last.witness->str()) : json(nullptr);
    r.text.push_back("budget exhausted at [" + std::to_string(last.n) + "]");
    if (last.lower_bound_proved) r.text.push_back("proved lower bound: " + std::to_string(*last.lower_bound_proved));
    if (best) r.text.push_back("best found: " + std::to_string(*best) + "  " + last.witness->str());
    r.exit_code = 1;
  }
  return r;
}

Record run_search(const SearchArgs& a) {
  const int modes = !a.min_zn.empty() + !a.zero_mono.empty() + (a.pattern_free > 0) + (a.min_pattern > 0);
  if (modes != 1) throw UsageError("give exactly one of --min-zn, --zero-mono, --pattern-free, --min-pattern");
  if (!a.min_zn.empty()) return run_min_zn(a);
  if (!a.zero_mono.empty()) return run_zero_mono(a);
  if (a.pattern_free > 0) return run_pattern_free(a);
  return run_min_pattern(a);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monochromatic arithmetic progressions in 2-colorings of Z_n and [n]"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit JSON");

  CountArgs count;
  auto* c = app.add_subcommand("count", "Count monochromatic k-APs in a coloring");
  c->add_option("--group", count.group, "zn or interval")->required();
  c->add_option("--n", count.n, "Size")->required()->check(CLI::PositiveNumber);
  c->add_option("--k", count.k, "Progression length")->required()->check(CLI::PositiveNumber);
  c->add_option("--coloring", count.coloring, "Bits, a built-in name (B20, B22, B74) or all-zeros/all-ones");
  c->add_option("--file", count.file, "File holding the coloring");
  c->add_option("--filter", count.filter, "all, nondeg or by-d");
  c->add_flag("--json", as_json, "Emit JSON");

  DensityArgs density;
  auto* d = app.add_subcommand("density", "Density bound of a periodic coloring");
  d->add_option("--block", density.block, "Built-in name, bits, or TEMPLATExINNER such as B11xB20")->required();
  d->add_option("--k", density.k, "4 or 5")->required();
  d->add_option("--r", density.r, "Offset n mod b")->required();
  d->add_flag("--json", as_json, "Emit JSON");

  std::string suite;
  std::uint64_t seed = suites::kDefaultSeed;
  auto* v = app.add_subcommand("verify", "Run a verification suite");
  v->add_option("--suite", suite, "tables, identities, recursion, periodic, pick or all")->required();
  v->add_option("--seed", seed, "Random seed");
  v->add_flag("--json", as_json, "Emit JSON");

  SearchArgs search;
  auto* s = app.add_subcommand("search", "Exhaustive searches");
  s->add_option("--min-zn", search.min_zn, "N K: minimum count over colorings of Z_N")->expected(2);
  s->add_option("--zero-mono", search.zero_mono, "N K: colorings of Z_N without proper mono K-APs")->expected(2);
  s->add_option("--pattern-free", search.pattern_free, "Largest n <= MAXN with an F-free coloring of [n]")
      ->check(CLI::PositiveNumber);
  s->add_option("--min-pattern", search.min_pattern, "Minimum number of F-pattern 5-APs in [N]")
      ->check(CLI::PositiveNumber);
  s->add_option("--budget", search.budget, "Node count, or time such as 30s, 10m, 2h");
  s->add_option("--workers", search.workers, "Worker threads (0 = OpenMP default)");
  s->add_option("--checkpoint", search.checkpoint, "Resumable progress file for --min-pattern");
  s->add_option("--sym", search.sym, "affine+conj, affine, mult, mult+conj, trans, trans+conj, conj");
  s->add_option("--mode", search.mode, "naive or pruned");
  s->add_option("--filter", search.filter, "all or nondeg (for --min-zn)");
  s->add_option("--cap", search.cap, "Override the size cap");
  s->add_flag("--json", as_json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  Record record;
  try {
    if (*c) record = run_count(count);
    else if (*d) record = run_density(density);
    else if (*v) record = run_verify(suite, seed);
    else record = run_search(search);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  const double elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  emit(record, as_json, elapsed);
  return record.exit_code;
}
