#include "totind/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "totind/generators.hpp"
#include "totind/io.hpp"

namespace totind::cli {

using nlohmann::json;

int ceiling_from_environment() {
  const char* raw = std::getenv(kCeilingEnv);
  if (raw == nullptr) return kDefaultCeiling;
  char* end = nullptr;
  const long value = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || value < 1 || value > kMaxCanonicalOrder) return kDefaultCeiling;
  return static_cast<int>(value);
}

std::vector<Graph> read_graphs(const std::string& text, InputFormat format) {
  if (format == InputFormat::automatic) {
    format = InputFormat::graph6;
    std::istringstream lines(text);
    for (std::string line; std::getline(lines, line);) {
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      if (line.compare(first, 2, "n ") == 0) format = InputFormat::edge_list;
      break;
    }
  }
  if (format == InputFormat::edge_list) return {parse_edge_list(text)};
  auto graphs = parse_graph6_lines(text);
  if (graphs.empty()) throw ParseError("no graphs in input");
  return graphs;
}

namespace {

std::string set_string(const std::set<int>& xs) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int x : xs) {
    out << (first ? "" : ",") << x;
    first = false;
  }
  out << '}';
  return out.str();
}

void expect(std::vector<FigureCheck>& out, std::string figure, std::string quantity, const std::string& expected,
            const std::string& actual) {
  out.push_back({std::move(figure), std::move(quantity), expected, actual, expected == actual});
}

void expect(std::vector<FigureCheck>& out, const std::string& figure, const std::string& quantity, long expected,
            long actual) {
  expect(out, figure, quantity, std::to_string(expected), std::to_string(actual));
}

}  // namespace

std::vector<FigureCheck> figure_regressions() {
  std::vector<FigureCheck> out;

  {
    const auto g = paper_figure(Figure::four_vertex_five_edge);
    expect(out, "four_vertex_five_edge", "order", 4, g.order());
    expect(out, "four_vertex_five_edge", "size", 5, g.size());
    expect(out, "four_vertex_five_edge", "connected", "true", is_connected(g) ? "true" : "false");
  }
  {
    const auto g = paper_figure(Figure::alpha_figure);
    const auto inv = compute_all(g);
    expect(out, "alpha_figure", "alpha", 3, inv.alpha);
    expect(out, "alpha_figure", "alpha_prime", 1, inv.alpha_prime);
    expect(out, "alpha_figure", "alpha_double_prime", 3, inv.alpha_double_prime);
    expect(out, "alpha_figure", "gamma_prime", 1, inv.gamma_prime.value_or(-1));
    expect(out, "alpha_figure", "n_minus_gamma_prime", 3, inv.n - inv.gamma_prime.value_or(0));
  }
  {
    const auto g = complete_bipartite(2, 3);
    const auto inv = compute_all(g);
    const auto report = verify_relations(g, inv);
    expect(out, "K_2_3", "alpha", 3, inv.alpha);
    expect(out, "K_2_3", "alpha_prime", 2, inv.alpha_prime);
    expect(out, "K_2_3", "alpha_double_prime", 3, inv.alpha_double_prime);
    expect(out, "K_2_3", "main_theorem_bound", 4, main_theorem_bound(inv.n, inv.alpha, inv.alpha_prime));
    expect(out, "K_2_3", "improvement_class", "strictly_better", std::string(to_string(report.improvement)));
    expect(out, "K_2_3", "edge_counts_k3", "{0,1,2}", set_string(observed_edge_counts(g, 3)));
    expect(out, "K_2_3", "edge_counts_k4", "{}", set_string(observed_edge_counts(g, 4)));
  }
  {
    const auto g = complete(3);
    const auto inv = compute_all(g);
    expect(out, "K_3", "alpha", 1, inv.alpha);
    expect(out, "K_3", "alpha_prime", 1, inv.alpha_prime);
    expect(out, "K_3", "alpha_plus_alpha_prime", 2, inv.alpha + inv.alpha_prime);
    expect(out, "K_3", "n_minus_alpha_prime", 2, inv.n - inv.alpha_prime);
    expect(out, "K_3", "improvement_classification", "indeterminate_zero_case",
           std::string(to_string(improvement_classification(inv.n, inv.alpha, inv.alpha_prime))));
  }
  {
    const auto g = complete(5);
    const auto inv = compute_all(g);
    const int bound = main_theorem_bound(inv.n, inv.alpha, inv.alpha_prime);
    expect(out, "K_5", "alpha_double_prime", 3, inv.alpha_double_prime);
    expect(out, "K_5", "main_theorem_bound", 3, bound);
    expect(out, "K_5", "main_theorem_slack", 0, bound - inv.alpha_double_prime);
  }
  return out;
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open input file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<Graph> load_input(const RunConfig& config) {
  if (!config.input) throw ParseError("--input is required for this command");
  return read_graphs(read_file(*config.input), config.input_format);
}

int run_invariants(const RunConfig& config, std::ostream& out) {
  std::vector<std::pair<std::string, InvariantSet>> rows;
  for (const auto& g : load_input(config)) rows.emplace_back(emit_graph6(g), compute_all(g));
  switch (config.output) {
    case OutputFormat::json: {
      json doc = json::array();
      for (const auto& [graph, inv] : rows) doc.push_back({{"graph", graph}, {"invariants", to_json(inv)}});
      out << doc.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv:
      out << invariants_csv(rows);
      break;
    case OutputFormat::table:
      for (const auto& [graph, inv] : rows) out << invariants_table(graph, inv);
      break;
  }
  return kExitOk;
}

int run_verify(const RunConfig& config, std::ostream& out) {
  std::vector<BoundReport> reports;
  for (const auto& g : load_input(config)) reports.push_back(verify_relations(g));
  bool clean = true;
  for (const auto& r : reports) clean = clean && r.all_hold();
  switch (config.output) {
    case OutputFormat::json: {
      json doc = json::array();
      for (const auto& r : reports) doc.push_back(to_json(r));
      out << doc.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv:
      out << checks_csv(reports);
      break;
    case OutputFormat::table:
      for (const auto& r : reports) out << invariants_table(r.graph_id, r.invariants) << checks_table(r);
      break;
  }
  return clean ? kExitOk : kExitViolation;
}

int run_sweep(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const int ceiling = config.allow_large ? std::max(config.ceiling, kDefaultCeiling + 1) : config.ceiling;
  if (config.n_max < 1 || config.n_max > ceiling) {
    err << "error: --n-max must be within 1.." << ceiling
        << (config.allow_large ? "" : " (use --allow-large or " + std::string(kCeilingEnv) + " for more)") << '\n';
    return kExitUsage;
  }
  if (config.n_max > kDefaultCeiling) {
    err << "warning: sweeping order " << config.n_max << " enumerates hundreds of thousands of graphs\n";
  }
  SweepOptions options;
  options.workers = config.workers;
  options.checks = config.checks;
  options.limits.ceiling = ceiling;
  const auto reports = sweep(config.n_max, options);
  bool clean = true;
  for (const auto& r : reports) clean = clean && r.violations.empty();
  switch (config.output) {
    case OutputFormat::json:
      out << to_json(reports).dump(2) << '\n';
      break;
    case OutputFormat::csv:
      out << sweep_csv(reports);
      break;
    case OutputFormat::table:
      out << sweep_table(reports);
      break;
  }
  return clean ? kExitOk : kExitViolation;
}

int run_sharpness(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (!config.degree) {
    err << "error: --degree is required\n";
    return kExitUsage;
  }
  EnumerationLimits limits{config.allow_large ? std::max(config.ceiling, kDefaultCeiling + 1) : config.ceiling};
  const auto all = sharp_graphs_by_degree(config.order, *config.degree, limits);
  const std::optional<std::string> witness = all.empty() ? std::nullopt : std::optional(emit_graph6(all.front()));
  switch (config.output) {
    case OutputFormat::json: {
      json doc{{"n", config.order},
               {"degree", *config.degree},
               {"witness", witness ? json(*witness) : json(nullptr)},
               {"witness_count", all.size()}};
      out << doc.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv:
      out << "n,degree,witness,witness_count\n"
          << config.order << ',' << *config.degree << ',' << witness.value_or("") << ',' << all.size() << '\n';
      break;
    case OutputFormat::table:
      out << "n=" << config.order << " max degree=" << *config.degree << ": ";
      if (witness) {
        out << "witness " << *witness << " (" << all.size() << " sharp graph" << (all.size() == 1 ? "" : "s")
            << ")\n"
            << emit_edge_list(all.front());
      } else {
        out << "none found\n";
      }
      break;
  }
  return kExitOk;
}

int run_figures(const RunConfig& config, std::ostream& out) {
  const auto checks = figure_regressions();
  bool clean = true;
  for (const auto& c : checks) clean = clean && c.ok;
  switch (config.output) {
    case OutputFormat::json: {
      json doc = json::array();
      for (const auto& c : checks) {
        doc.push_back({{"figure", c.figure},
                       {"quantity", c.quantity},
                       {"expected", c.expected},
                       {"actual", c.actual},
                       {"ok", c.ok}});
      }
      out << doc.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv:
      out << "figure,quantity,expected,actual,ok\n";
      for (const auto& c : checks) {
        out << c.figure << ',' << c.quantity << ",\"" << c.expected << "\",\"" << c.actual << "\","
            << (c.ok ? "true" : "false") << '\n';
      }
      break;
    case OutputFormat::table:
      for (const auto& c : checks) {
        out << (c.ok ? "ok    " : "FAIL  ") << std::left;
        out.width(24);
        out << c.figure;
        out.width(28);
        out << c.quantity << "expected " << c.expected << ", got " << c.actual << '\n';
      }
      break;
  }
  return clean ? kExitOk : kExitViolation;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::invariants:
        return run_invariants(config, out);
      case Command::verify:
        return run_verify(config, out);
      case Command::sweep:
        return run_sweep(config, out, err);
      case Command::sharpness:
        return run_sharpness(config, out, err);
      case Command::figures:
        return run_figures(config, out);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const GraphError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace totind::cli
