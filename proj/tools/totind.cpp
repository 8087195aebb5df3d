#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "totind/cli.hpp"

using totind::OutputFormat;
using namespace totind::cli;

int main(int argc, char** argv) {
  CLI::App app{"Exact graph invariants and relation checks for total independence"};
  app.require_subcommand(1);

  RunConfig config;
  config.ceiling = ceiling_from_environment();

  const std::map<std::string, OutputFormat> outputs{
      {"table", OutputFormat::table}, {"json", OutputFormat::json}, {"csv", OutputFormat::csv}};
  const std::map<std::string, InputFormat> inputs{
      {"auto", InputFormat::automatic}, {"g6", InputFormat::graph6}, {"edges", InputFormat::edge_list}};

  app.add_option("--output", config.output, "table, json or csv")
      ->transform(CLI::CheckedTransformer(outputs, CLI::ignore_case))
      ->capture_default_str();

  auto* invariants = app.add_subcommand("invariants", "Compute the six invariants of each input graph");
  auto* verify = app.add_subcommand("verify", "Evaluate every relation on each input graph");
  for (auto* sub : {invariants, verify}) {
    sub->add_option("--input", config.input, "graph file (edge list or graph6 lines)")->required();
    sub->add_option("--format", config.input_format, "auto, g6 or edges")
        ->transform(CLI::CheckedTransformer(inputs, CLI::ignore_case));
    sub->add_option("--output", config.output, "table, json or csv")
        ->transform(CLI::CheckedTransformer(outputs, CLI::ignore_case));
  }

  auto* sweep = app.add_subcommand("sweep", "Check every connected graph up to an order");
  sweep->add_option("--n-max", config.n_max, "largest order swept")->required();
  sweep->add_option("--workers", config.workers, "worker threads")->check(CLI::PositiveNumber);
  sweep->add_option("--checks", config.checks, "comma separated check ids")->delimiter(',');
  sweep->add_flag("--allow-large", config.allow_large, "permit order 9");
  sweep->add_option("--output", config.output, "table, json or csv")
      ->transform(CLI::CheckedTransformer(outputs, CLI::ignore_case));

  auto* sharpness = app.add_subcommand("sharpness", "Find graphs of given order and maximum degree with a sharp bound");
  sharpness->add_option("--n", config.order, "order")->required();
  sharpness->add_option("--degree", config.degree, "maximum degree")->required();
  sharpness->add_flag("--allow-large", config.allow_large, "permit order 9");
  sharpness->add_option("--output", config.output, "table, json or csv")
      ->transform(CLI::CheckedTransformer(outputs, CLI::ignore_case));

  auto* figures = app.add_subcommand("figures", "Reproduce the worked examples");
  figures->add_option("--output", config.output, "table, json or csv")
      ->transform(CLI::CheckedTransformer(outputs, CLI::ignore_case));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*invariants) config.command = Command::invariants;
  if (*verify) config.command = Command::verify;
  if (*sweep) config.command = Command::sweep;
  if (*sharpness) config.command = Command::sharpness;
  if (*figures) config.command = Command::figures;

  return run(config, std::cout, std::cerr);
}
