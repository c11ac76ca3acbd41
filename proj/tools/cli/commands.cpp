/*
 * Copyright 2026 The covred Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cli/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "covred/covred.hpp"
#include "json.hpp"

namespace covred::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Domain failure that already produced a payload (degenerate input).
struct DomainFinding {
  std::string message;
};

struct Globals {
  std::string input;
  std::string format = "json";
  std::uint64_t seed = 1;
  std::optional<unsigned> threads;
};

struct Options {
  std::string scope = "family";
  std::vector<std::string> target;
  std::string matrix_method = "new";
  std::string reduct_method = "matrix";

  std::size_t count = 200;
  std::size_t n_min = 1;
  std::size_t n_max = 8;
  std::size_t m_min = 1;
  std::size_t m_max = 5;
  std::string counterexample_dir;

  std::string csv;
  std::string config;
  std::optional<double> tolerance;
  std::optional<double> relative_tolerance;
  std::vector<double> bins;
  double overlap = 0.0;
  bool categorical = false;

  std::vector<std::size_t> bench_n;
  std::vector<std::size_t> bench_m;
  std::size_t reps = 5;
  std::string out_dir = ".";
  std::size_t min_blocks = 4;
  std::size_t max_blocks = 12;
  double density = 0.5;
};

unsigned resolve_threads(const Globals& g) {
  if (g.threads) return *g.threads;
  const char* env = std::getenv("COVRED_THREADS");
  if (env == nullptr || *env == '\0') return 1;
  const std::string_view text(env);
  unsigned value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || value == 0)
    throw UsageError("COVRED_THREADS must be a positive integer, got '" + std::string(text) + "'");
  return value;
}

void require_json(const Globals& g, const char* command) {
  if (g.format != "json") throw UsageError(std::string("--format grid is not available for ") + command);
}

void print_warnings(const Warnings& warnings, std::ostream& err) {
  for (const auto& w : warnings) err << "warning: " << w << '\n';
}

CoverFamily load_input(const Globals& g, std::ostream& err) {
  if (g.input.empty()) throw UsageError("--input is required");
  Warnings warnings;
  auto family = load_cover_file(g.input, &warnings);
  print_warnings(warnings, err);
  return family;
}

json names(const std::vector<std::string>& v) { return json(v); }

json reduct_names(const CoverFamily& f, const ReductSet& r) {
  json out = json::array();
  for (const auto& p : r.reducts) out.push_back(names(f.names_of(p)));
  return out;
}

void cmd_validate(const Globals& g, std::ostream& out, std::ostream& err) {
  require_json(g, "validate");
  const auto f = load_input(g, err);
  json covers = json::array();
  for (const auto& c : f.covers()) {
    json blocks = json::array();
    for (const auto& b : c.blocks()) blocks.push_back(names(f.universe().labels_of(b)));
    covers.push_back(json{{"name", c.name()}, {"blocks", std::move(blocks)}, {"is_partition", is_partition(c)}});
  }
  out << json{{"universe_size", f.n()}, {"covers", std::move(covers)}}.dump() << '\n';
}

const NeighborhoodMap& scoped_map(const CoverFamily& f, const Granulation& g, const std::string& scope) {
  if (scope == "family") return g.family;
  return g.covers[f.require(scope)];
}

void cmd_granulate(const Globals& g, const Options& o, std::ostream& out, std::ostream& err) {
  require_json(g, "granulate");
  const auto f = load_input(g, err);
  const auto gr = granulate(f);
  out << granules_json(f.universe(), scoped_map(f, gr, o.scope));
}

void cmd_approx(const Globals& g, const Options& o, std::ostream& out, std::ostream& err) {
  require_json(g, "approx");
  const auto f = load_input(g, err);
  const auto gr = granulate(f);
  const auto target = f.universe().set_of(o.target);
  out << approximation_json(f.universe(), o.scope, approximate(scoped_map(f, gr, o.scope), target));
}

void cmd_matrix(const Globals& g, const Options& o, std::ostream& out, std::ostream& err) {
  const auto f = load_input(g, err);
  const auto gr = granulate(f);
  const BuildOptions build{resolve_threads(g)};
  const bool grid = g.format == "grid";
  if (o.matrix_method == "new") {
    const auto m = build_matrix(f, gr.covers, build);
    out << (grid ? matrix_grid(f, m) : matrix_json(f, m));
  } else {
    const auto m = build_legacy_matrix(f, gr.covers, gr.family, build);
    out << (grid ? legacy_matrix_grid(f, m) : legacy_matrix_json(f, m));
  }
}

ReductMethod parse_reduct_method(const std::string& name) {
  if (name == "legacy") return ReductMethod::Legacy;
  if (name == "brute") return ReductMethod::Brute;
  return ReductMethod::Matrix;
}

ReductSet reducts_by(ReductMethod method, const CoverFamily& f, const Granulation& gr, const BuildOptions& build) {
  switch (method) {
    case ReductMethod::Matrix:
      return all_reducts(build_matrix(f, gr.covers, build));
    case ReductMethod::Legacy:
      return all_reducts_legacy(build_legacy_matrix(f, gr.covers, gr.family, build));
    case ReductMethod::Brute:
      return brute_force_reducts(f);
  }
  throw std::logic_error("unknown reduct method");
}

void cmd_reducts(const Globals& g, const Options& o, std::ostream& out, std::ostream& err) {
  require_json(g, "reducts");
  const auto f = load_input(g, err);
  const auto gr = granulate(f);
  const auto method = parse_reduct_method(o.reduct_method);
  const auto r = reducts_by(method, f, gr, {resolve_threads(g)});
  out << reducts_json(f, r, method);
  if (r.degenerate)
    throw DomainFinding{"degenerate family: no cover distinguishes any two objects; the only reduct is empty"};
}

void cmd_cross_check(const Globals& g, const Options& o, std::ostream& out, std::ostream&) {
  require_json(g, "cross-check");
  if (o.n_min < 1 || o.n_min > o.n_max) throw UsageError("object range must satisfy 1 <= --n-min <= --n-max");
  if (o.m_min < 1 || o.m_min > o.m_max) throw UsageError("cover range must satisfy 1 <= --m-min <= --m-max");
  if (o.m_max > kBruteForceMaxCovers)
    throw UsageError("--m-max is limited to " + std::to_string(kBruteForceMaxCovers) + " by the exhaustive oracle");
  const BuildOptions build{resolve_threads(g)};

  Rng rng(g.seed);
  std::size_t agreements = 0;
  std::size_t legacy_agreements = 0;
  json counterexamples = json::array();
  for (std::size_t k = 0; k < o.count; ++k) {
    SyntheticSpec spec;
    spec.n = rng.between(o.n_min, o.n_max);
    spec.m = rng.between(o.m_min, o.m_max);
    spec.min_blocks = 1;
    spec.max_blocks = rng.between(1, 4);
    spec.density = 0.15 + 0.7 * rng.unit();
    spec.seed = rng.next();
    const auto f = generate_family(spec);
    const auto gr = granulate(f);
    const auto oracle = brute_force_reducts(f);

    for (ReductMethod method : {ReductMethod::Matrix, ReductMethod::Legacy}) {
      const auto r = reducts_by(method, f, gr, build);
      if (r == oracle) {
        ++(method == ReductMethod::Matrix ? agreements : legacy_agreements);
        continue;
      }
      const std::string document = serialize_family(f);
      counterexamples.push_back(json{{"instance", k},
                                     {"method", to_string(method)},
                                     {"expected", reduct_names(f, oracle)},
                                     {"actual", reduct_names(f, r)},
                                     {"family", json::parse(document)}});
      if (!o.counterexample_dir.empty()) {
        std::filesystem::create_directories(o.counterexample_dir);
        const auto path = std::filesystem::path(o.counterexample_dir) /
                          ("counterexample_" + std::to_string(k) + "_" + std::string(to_string(method)) + ".json");
        std::ofstream(path, std::ios::binary) << document;
      }
    }
  }
  out << json{{"instances", o.count},
              {"agreements", agreements},
              {"legacy_agreements", legacy_agreements},
              {"counterexamples", std::move(counterexamples)}}
             .dump()
      << '\n';
}

void cmd_derive(const Globals& g, const Options& o, std::ostream& out, std::ostream& err) {
  require_json(g, "derive");
  if (o.csv.empty()) throw UsageError("derive needs a CSV table (--csv)");
  TableDerivationConfig config;
  if (!o.config.empty()) config = TableDerivationConfig::from_json(read_text_file(o.config));
  if (o.categorical) config.fallback = Categorical{};
  if (o.tolerance) config.fallback = Tolerance{*o.tolerance, false};
  if (o.relative_tolerance) config.fallback = Tolerance{*o.relative_tolerance, true};
  if (!o.bins.empty()) config.fallback = IntervalBins{o.bins, o.overlap};
  Warnings warnings;
  const auto family = covers_from_table(parse_csv(read_text_file(o.csv)), config, &warnings);
  print_warnings(warnings, err);
  out << serialize_family(family);
}

void cmd_bench(const Globals& g, const Options& o, std::ostream& out, std::ostream& err) {
  require_json(g, "bench");
  if (o.reps < kMinBenchRepetitions)
    throw UsageError("--reps must be at least " + std::to_string(kMinBenchRepetitions));
  if (std::find(o.bench_n.begin(), o.bench_n.end(), 0U) != o.bench_n.end() ||
      std::find(o.bench_m.begin(), o.bench_m.end(), 0U) != o.bench_m.end())
    throw UsageError("--n and --m values must be positive");
  BenchConfig config;
  config.n_values = o.bench_n;
  config.m_values = o.bench_m;
  config.repetitions = o.reps;
  config.seed = g.seed;
  config.min_blocks = o.min_blocks;
  config.max_blocks = o.max_blocks;
  config.density = o.density;
  const auto report = run_bench(config);
  const auto payload = bench_json(report);

  const std::filesystem::path dir(o.out_dir);
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "bench.csv", std::ios::binary) << bench_csv(report);
  std::ofstream(dir / "bench.json", std::ios::binary) << payload;
  err << "wrote " << (dir / "bench.csv").string() << " and " << (dir / "bench.json").string() << '\n';
  out << payload;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Globals g;
  Options o;

  CLI::App app{"Covering rough set attribute reduction", "covred"};
  app.set_version_flag("--version", "covred 0.1.0");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("-i,--input", g.input, "Cover-family JSON document");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "grid"}));
  app.add_option("--seed", g.seed, "Random seed");
  app.add_option("--threads", g.threads, "Worker threads for matrix builds (default: COVRED_THREADS or 1)")
      ->check(CLI::Range(1U, 1024U));

  auto* validate = app.add_subcommand("validate", "Parse and validate a cover family");
  auto* gran = app.add_subcommand("granulate", "Minimal-description granules of a cover or the family");
  gran->add_option("--scope", o.scope, "Cover name or 'family'");
  auto* approx = app.add_subcommand("approx", "Lower and upper approximation of a set of objects");
  approx->add_option("--scope", o.scope, "Cover name or 'family'");
  approx->add_option("--target", o.target, "Object labels, comma separated")->delimiter(',')->required();
  auto* matrix = app.add_subcommand("matrix", "Discernibility matrix");
  matrix->add_option("--method", o.matrix_method)->check(CLI::IsMember({"new", "legacy"}));
  auto* reducts = app.add_subcommand("reducts", "All reducts and the core");
  reducts->add_option("--method", o.reduct_method)->check(CLI::IsMember({"matrix", "legacy", "brute"}));
  auto* cross = app.add_subcommand("cross-check", "Compare reduct methods on random families");
  cross->add_option("--count", o.count, "Number of instances");
  cross->add_option("--n-min", o.n_min);
  cross->add_option("--n-max", o.n_max);
  cross->add_option("--m-min", o.m_min);
  cross->add_option("--m-max", o.m_max);
  cross->add_option("--counterexample-dir", o.counterexample_dir, "Write each counterexample family here");
  auto* derive = app.add_subcommand("derive", "Derive a cover family from a CSV table");
  derive->add_option("--csv", o.csv, "Attribute-value table");
  derive->add_option("--config", o.config, "Per-attribute strategy file (JSON)");
  auto* tol = derive->add_option("--tolerance", o.tolerance, "Absolute tolerance for every attribute");
  auto* rel = derive->add_option("--relative-tolerance", o.relative_tolerance, "Tolerance as a fraction of range");
  auto* bins = derive->add_option("--bins", o.bins, "Bin edges, comma separated")->delimiter(',');
  derive->add_option("--overlap", o.overlap, "Bin overlap fraction");
  auto* cat = derive->add_flag("--categorical", o.categorical, "Equality partition for every attribute");
  tol->excludes(rel, bins, cat);
  rel->excludes(bins, cat);
  bins->excludes(cat);
  auto* bench = app.add_subcommand("bench", "Time the improved and legacy matrix builders");
  bench->add_option("--n", o.bench_n, "Object counts, comma separated")->delimiter(',')->required();
  bench->add_option("--m", o.bench_m, "Cover counts, comma separated")->delimiter(',')->required();
  bench->add_option("--reps", o.reps, "Repetitions per point");
  bench->add_option("--out-dir", o.out_dir, "Directory for bench.csv and bench.json");
  bench->add_option("--min-blocks", o.min_blocks);
  bench->add_option("--max-blocks", o.max_blocks);
  bench->add_option("--density", o.density);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ostringstream payload;
  try {
    if (validate->parsed()) cmd_validate(g, payload, err);
    if (gran->parsed()) cmd_granulate(g, o, payload, err);
    if (approx->parsed()) cmd_approx(g, o, payload, err);
    if (matrix->parsed()) cmd_matrix(g, o, payload, err);
    if (reducts->parsed()) cmd_reducts(g, o, payload, err);
    if (cross->parsed()) cmd_cross_check(g, o, payload, err);
    if (derive->parsed()) cmd_derive(g, o, payload, err);
    if (bench->parsed()) cmd_bench(g, o, payload, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainFinding& f) {
    out << payload.str();
    err << "error: " << f.message << '\n';
    return kExitDomainError;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kExitDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
  out << payload.str();
  return kExitOk;
}

}  // namespace covred::cli
