// Copyright 2026 The barystable Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli/commands.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include "barystable/diagnostics.hpp"
#include "barystable/error.hpp"
#include "barystable/eval_first.hpp"
#include "barystable/eval_second.hpp"
#include "barystable/fp_scaled.hpp"
#include "barystable/node_io.hpp"
#include "barystable/oracle.hpp"
#include "barystable/parallel.hpp"
#include "barystable/weights.hpp"

namespace barystable::cli {
namespace {

std::string dec(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, end);
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

// Header on construction; every row starts with the configuration echo.
class CsvWriter {
 public:
  CsvWriter(std::ostream& out, const RunConfig& cfg, const std::vector<std::string>& columns)
      : out_(out) {
    for (const auto& [name, value] : cfg.echo()) {
      prefix_ += csv_field(value) + ",";
      out_ << name << ",";
    }
    for (std::size_t i = 0; i < columns.size(); ++i) out_ << (i ? "," : "") << columns[i];
    out_ << '\n';
  }

  void row(const std::vector<std::string>& values) {
    out_ << prefix_;
    for (std::size_t i = 0; i < values.size(); ++i) out_ << (i ? "," : "") << csv_field(values[i]);
    out_ << '\n';
  }

 private:
  std::ostream& out_;
  std::string prefix_;
};

// Appends value and its hex form.
void push_double(std::vector<std::string>& row, double value) {
  row.push_back(dec(value));
  row.push_back(format_hex(value));
}

std::vector<std::string> double_columns(std::initializer_list<const char*> names) {
  std::vector<std::string> columns;
  for (const char* name : names) {
    columns.emplace_back(name);
    columns.emplace_back(std::string(name) + "_hex");
  }
  return columns;
}

NodeSet make_nodes(const RunConfig& cfg) {
  if (!cfg.nodes_file.empty()) return load_nodes(cfg.nodes_file);
  return generate_rounded_chebyshev(cfg.n, cfg.oracle_bits);
}

SampleVector make_samples(const RunConfig& cfg, const NodeSet& nodes) {
  if (cfg.function.function) return cfg.function.function->samples(nodes);
  std::vector<double> values = load_values(cfg.function.samples_path);
  if (values.size() != nodes.size()) {
    throw ConfigurationError("samples file '" + cfg.function.samples_path + "' has " +
                             std::to_string(values.size()) + " values, expected " +
                             std::to_string(nodes.size()));
  }
  return SampleVector::from_values(std::move(values));
}

// Output goes to cfg.output when set, else to the given stream.
class OutputTarget {
 public:
  OutputTarget(const std::string& path, std::ostream& fallback) : path_(path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw IoError("cannot open '" + path + "' for writing");
    }
    stream_ = path.empty() ? &fallback : &file_;
  }
  std::ostream& stream() { return *stream_; }
  void finish() {
    stream_->flush();
    if (!*stream_) throw IoError("failed writing '" + (path_.empty() ? "<stdout>" : path_) + "'");
  }

 private:
  std::string path_;
  std::ofstream file_;
  std::ostream* stream_;
};

class Evaluator {
 public:
  Evaluator(const RunConfig& cfg, const NodeSet& nodes, const SampleVector& f)
      : method_(cfg.method),
        summation_(cfg.summation),
        nodes_(nodes),
        f_(f),
        weights_(cfg.method == Method::kFirstNu ? compute_nu(nodes)
                                                : WeightScheme::simplified(nodes.degree())) {}

  double operator()(double t) const {
    switch (method_) {
      case Method::kStable: return eval_stable(t, nodes_, f_, summation_);
      case Method::kSecondNaive: return eval_naive(t, nodes_, f_, weights_, summation_);
      case Method::kFirstSimplified:
      case Method::kFirstNu: return eval_first(t, nodes_, f_, weights_, summation_);
    }
    return std::numeric_limits<double>::quiet_NaN();
  }

 private:
  Method method_;
  SummationMethod summation_;
  const NodeSet& nodes_;
  const SampleVector& f_;
  WeightScheme weights_;
};

void cmd_nodes(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const NodeSet nodes = make_nodes(cfg);
  const std::size_t n = nodes.degree();
  std::ostream* report = &out;
  if (cfg.output.empty()) {
    write_nodes(out, nodes);
    report = &err;
  } else {
    save_nodes(cfg.output, nodes);
  }
  if (!cfg.weights_output.empty()) {
    save_weights(cfg.weights_output, cfg.weights == WeightVariant::kNu
                                         ? compute_nu(nodes)
                                         : WeightScheme::simplified(n));
  }

  std::vector<double> deviation(nodes.size(), 0.0);
  parallel_for(nodes.size(), cfg.threads, [&](std::size_t i) {
    const HiPrec exact = chebyshev_point(i, n, cfg.oracle_bits);
    if (!exact.is_zero()) deviation[i] = relative_error(nodes[i], exact);
  });
  double max_deviation = 0.0;
  for (double d : deviation) max_deviation = std::max(max_deviation, d);

  CsvWriter csv(*report, cfg,
                [] {
                  auto c = double_columns({"max_relative_deviation"});
                  c.emplace_back("deviation_in_2^-52");
                  c.emplace_back("exact_sum_failures");
                  return c;
                }());
  std::vector<std::string> row;
  push_double(row, max_deviation);
  row.push_back(dec(max_deviation / 0x1p-52));
  row.push_back(std::to_string(nodes.exact_sums().failures));
  csv.row(row);
}

void cmd_eval(const RunConfig& cfg, std::ostream& out) {
  const NodeSet nodes = make_nodes(cfg);
  const SampleVector f = make_samples(cfg, nodes);
  const std::vector<double> points = generate_points(cfg.points, nodes);
  const Evaluator evaluate(cfg, nodes, f);
  std::vector<double> values(points.size());
  parallel_for(points.size(), cfg.threads, [&](std::size_t j) { values[j] = evaluate(points[j]); });

  CsvWriter csv(out, cfg, double_columns({"t", "value"}));
  for (std::size_t j = 0; j < points.size(); ++j) {
    std::vector<std::string> row;
    push_double(row, points[j]);
    push_double(row, values[j]);
    csv.row(row);
  }
}

void write_stats(CsvWriter& csv, const ErrorStats& stats, std::vector<std::string> row) {
  row.push_back(std::to_string(stats.count));
  push_double(row, stats.max);
  push_double(row, stats.mean);
  push_double(row, stats.std);
  row.push_back(std::to_string(stats.infinity_count));
  csv.row(row);
}

std::vector<std::string> stats_columns(std::vector<std::string> leading) {
  leading.emplace_back("count");
  for (auto& c : double_columns({"max", "mean", "std"})) leading.push_back(std::move(c));
  leading.emplace_back("infinity_count");
  return leading;
}

void cmd_errors(const RunConfig& cfg, std::ostream& out) {
  const NodeSet nodes = make_nodes(cfg);
  const SampleVector f = make_samples(cfg, nodes);
  const std::vector<double> points = generate_points(cfg.points, nodes);
  const Evaluator evaluate(cfg, nodes, f);
  std::vector<double> errors(points.size());
  parallel_for(points.size(), cfg.threads, [&](std::size_t j) {
    const double t = points[j];
    const HiPrec reference = cfg.reference == Reference::kFunction
                                 ? (*cfg.function.function)(t)
                                 : oracle_interpolant(t, nodes, f);
    const double value = evaluate(t);
    errors[j] = cfg.measure == ErrorMeasure::kRelative ? relative_error(value, reference)
                                                       : absolute_error(value, reference);
  });
  ErrorAccumulator acc;
  for (double e : errors) acc.add(e);
  CsvWriter csv(out, cfg, stats_columns({}));
  write_stats(csv, acc.stats(), {});
}

void cmd_bench_products(const RunConfig& cfg, std::ostream& out) {
  const NodeSet nodes = make_nodes(cfg);
  const std::vector<double> points = generate_points(cfg.points, nodes);
  const ProductOracle oracle(nodes, cfg.oracle_bits);
  std::vector<HiPrec> reference(points.size());
  parallel_for(points.size(), cfg.threads, [&](std::size_t j) { reference[j] = oracle(points[j]); });

  std::vector<std::string> columns = stats_columns({"strategy"});
  columns.emplace_back("degenerate_count");
  columns.emplace_back("seconds");
  CsvWriter csv(out, cfg, columns);

  for (ProductStrategy strategy : cfg.strategies) {
    std::vector<ScaledValue> scaled(points.size());
    std::vector<double> plain(points.size());
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t j = 0; j < points.size(); ++j) {
      switch (strategy) {
        case ProductStrategy::kNaive: plain[j] = naive_product(points[j], nodes); break;
        case ProductStrategy::kScaling: scaled[j] = scaled_product(points[j], nodes); break;
        case ProductStrategy::kLogSum: scaled[j] = logsum_product(points[j], nodes); break;
        case ProductStrategy::kGroupedLogs:
          scaled[j] = grouped_logs_product(points[j], nodes);
          break;
      }
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

    ErrorAccumulator acc;
    std::size_t degenerate = 0;
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (strategy == ProductStrategy::kNaive) {
        if (!std::isfinite(plain[j]) || plain[j] == 0.0) ++degenerate;
        acc.add(relative_error(plain[j], reference[j]));
      } else {
        if (scaled[j].is_zero()) ++degenerate;
        acc.add(relative_error(scaled[j], reference[j]));
      }
    }
    const ErrorStats stats = acc.stats();
    std::vector<std::string> row{std::string(to_string(strategy)), std::to_string(stats.count)};
    push_double(row, stats.max);
    push_double(row, stats.mean);
    push_double(row, stats.std);
    row.push_back(std::to_string(stats.infinity_count));
    row.push_back(std::to_string(degenerate));
    row.push_back(dec(elapsed.count()));
    csv.row(row);
  }
}

void cmd_diagnose(const RunConfig& cfg, std::ostream& out) {
  const NodeSet nodes = make_nodes(cfg);
  const SampleVector f = make_samples(cfg, nodes);
  const std::size_t n = nodes.degree();
  std::vector<std::size_t> ks = cfg.k;
  if (ks.empty()) ks.push_back(n - 1);

  std::vector<std::string> columns{"k"};
  for (auto& c : double_columns({"t", "alpha", "delta", "s", "s_over_n2eps", "sigma_estimate"})) {
    columns.push_back(std::move(c));
  }
  columns.emplace_back("error");
  CsvWriter csv(out, cfg, columns);
  for (std::size_t k : ks) {
    std::vector<std::string> row{std::to_string(k)};
    try {
      if (k < 1 || k >= n) throw DomainError("k must satisfy 1 <= k < n");
      const double t = cfg.t.value_or(nodes[k]);
      const DiagnosticReport r = diagnose(nodes, f, k, t);
      for (double v : {r.t, r.alpha, r.delta, r.s, r.s_over_n2eps, r.sigma_estimate}) {
        push_double(row, v);
      }
      row.emplace_back();
    } catch (const DomainError& e) {
      row.resize(1 + 12);
      row.emplace_back(e.what());
    }
    csv.row(row);
  }
}

void add_common(CLI::App* sub, RunConfig& cfg, std::optional<int>& oracle_bits) {
  sub->add_option("--n", cfg.n, "Polynomial degree (n + 1 nodes)");
  sub->add_option("--nodes-file", cfg.nodes_file, "Read nodes from a node file instead");
  sub->add_option("--oracle-bits", oracle_bits, "Oracle precision in bits (default 106)");
  sub->add_option("-o,--output", cfg.output, "Output path (default stdout)");
  sub->add_option("--threads", cfg.threads, "Worker threads (0 = hardware concurrency)");
}

}  // namespace

void execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  ScopedPrecision precision(cfg.oracle_bits);
  if (cfg.command == Command::kNodes) {
    cmd_nodes(cfg, out, err);
    return;
  }
  OutputTarget target(cfg.output, out);
  switch (cfg.command) {
    case Command::kEval: cmd_eval(cfg, target.stream()); break;
    case Command::kErrors: cmd_errors(cfg, target.stream()); break;
    case Command::kBenchProducts: cmd_bench_products(cfg, target.stream()); break;
    case Command::kDiagnose: cmd_diagnose(cfg, target.stream()); break;
    case Command::kNodes: break;
  }
  target.finish();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app("Barycentric interpolation at Chebyshev points of the second kind", "barystable");
  app.require_subcommand(1);

  RunConfig cfg;
  std::optional<int> oracle_bits;
  std::string method = "stable";
  std::string summation = "naive";
  std::string function = "sin";
  std::string points;
  std::string reference = "interpolant";
  std::string measure = "absolute";
  std::string weights = "nu";
  std::vector<std::string> strategies{"naive", "scaling", "logsum", "grouped-logs"};

  CLI::App* nodes = app.add_subcommand("nodes", "Generate rounded Chebyshev nodes");
  add_common(nodes, cfg, oracle_bits);
  nodes->add_option("--weights-output", cfg.weights_output, "Also write weights to this path");
  nodes->add_option("--weights", weights, "Weights to write: simplified or nu");

  CLI::App* eval = app.add_subcommand("eval", "Evaluate the interpolant at points");
  CLI::App* errors = app.add_subcommand("errors", "Error statistics against the oracle");
  for (CLI::App* sub : {eval, errors}) {
    add_common(sub, cfg, oracle_bits);
    sub->add_option("--method", method,
                    "stable, second-naive, first-simplified or first-nu");
    sub->add_option("--summation", summation, "naive or kahan");
    sub->add_option("--function", function,
                    "sin, sin-scaled:<omega>, runge or samples-file:<path>");
    sub->add_option("--points", points,
                    "grid:<M>, near-nodes:<count>:<radius>, file:<path> or random:<M>:<seed>");
  }
  errors->add_option("--reference", reference, "interpolant or function");
  errors->add_option("--measure", measure, "absolute or relative");

  CLI::App* bench = app.add_subcommand("bench-products", "Accuracy and time of product strategies");
  add_common(bench, cfg, oracle_bits);
  bench->add_option("--strategy", strategies, "naive, scaling, logsum, grouped-logs")
      ->delimiter(',');
  bench->add_option("--points", points, "Point spec (default random:1000:1)");

  CLI::App* diag = app.add_subcommand("diagnose", "Rounding diagnostics of the first formula");
  add_common(diag, cfg, oracle_bits);
  diag->add_option("--function", function, "sin, sin-scaled:<omega>, runge or samples-file:<path>");
  diag->add_option("--k", cfg.k, "Node indices (default n - 1)");
  diag->add_option("--t", cfg.t, "Evaluation point for delta (default x_k)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    CLI::App* chosen = app.get_subcommands().front();
    const std::string name = chosen->get_name();
    if (name == "nodes") cfg.command = Command::kNodes;
    if (name == "eval") cfg.command = Command::kEval;
    if (name == "errors") cfg.command = Command::kErrors;
    if (name == "bench-products") cfg.command = Command::kBenchProducts;
    if (name == "diagnose") cfg.command = Command::kDiagnose;

    cfg.oracle_bits = resolve_oracle_bits(oracle_bits, std::getenv("BARYSTABLE_ORACLE_BITS"));
    cfg.method = parse_method(method);
    cfg.summation = parse_summation(summation);
    cfg.function = FunctionSpec::parse(function);
    if (points.empty()) points = cfg.command == Command::kBenchProducts ? "random:1000:1" : "grid:1000";
    cfg.points = PointSpec::parse(points);
    cfg.reference = parse_reference(reference);
    cfg.measure = parse_measure(measure);
    if (weights == "nu") {
      cfg.weights = WeightVariant::kNu;
    } else if (weights == "simplified") {
      cfg.weights = WeightVariant::kSimplified;
    } else {
      throw ConfigurationError("unknown weights '" + weights + "'");
    }
    for (const std::string& s : strategies) cfg.strategies.push_back(parse_strategy(s));
    cfg.validate();
    execute(cfg, out, err);
    return kExitOk;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ConfigurationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  }
}

}  // namespace barystable::cli
