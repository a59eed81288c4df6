#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "gfo/cli.hpp"
#include "gfo/error.hpp"

namespace {

bool color_from_env() {
  const char* v = std::getenv("GFO_COLOR");
  return v != nullptr && std::string(v) == "1";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gfo: model checker for processes, presentials and continuants"};
  app.require_subcommand(1);

  gfo::cli::RunConfig cfg;
  cfg.color = color_from_env();
  std::string format = "human";
  std::string integration = "identity";
  std::string tolerance = "0";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("inputs", cfg.inputs, "model files (.gfo)")->required();
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"human", "json"}));
  };

  auto* check = app.add_subcommand("check", "verify the axioms of one or more models");
  add_common(check);
  check->add_flag("--complete", cfg.complete,
                  "derive processes for continuants that lack one before checking");
  check->add_option("--integration", integration, "how boundaries must match snapshots")
      ->check(CLI::IsMember({"identity", "valuation"}));
  check->add_option("--tol", tolerance, "numeric change tolerance (rational)");

  auto* query = app.add_subcommand("query", "answer one query against a model");
  add_common(query);
  std::string truthmakers, realizers, realizations, changes;
  std::vector<std::string> classify;
  auto* o_tm = query->add_option("--truthmakers", truthmakers, "elementary proposition");
  auto* o_rz = query->add_option("--realizers", realizers, "function id");
  auto* o_rl = query->add_option("--realizations", realizations, "function id");
  auto* o_ch = query->add_option("--changes", changes, "continuant or process id");
  auto* o_cl = query->add_option("--classify", classify, "<property> <process>")->expected(2);
  query->add_option("--tol", tolerance, "numeric change tolerance (rational)");

  auto* dump = app.add_subcommand("dump", "print the canonical JSON store");
  add_common(dump);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : gfo::cli::kExitUsage;
  }

  cfg.format = format == "json" ? gfo::cli::OutputFormat::Json : gfo::cli::OutputFormat::Human;
  cfg.integration = integration == "valuation" ? gfo::IntegrationMode::Valuation
                                               : gfo::IntegrationMode::Identity;
  try {
    cfg.tolerance = gfo::parse_rational(tolerance);
  } catch (const gfo::Error& e) {
    std::cerr << "--tol: " << e.what() << "\n";
    return gfo::cli::kExitUsage;
  }

  if (check->parsed()) {
    cfg.command = gfo::cli::Command::Check;
  } else if (query->parsed()) {
    cfg.command = gfo::cli::Command::Query;
    if (*o_tm) cfg.query.truthmakers = truthmakers;
    if (*o_rz) cfg.query.realizers = realizers;
    if (*o_rl) cfg.query.realizations = realizations;
    if (*o_ch) cfg.query.changes = changes;
    if (*o_cl) cfg.query.classify = std::make_pair(classify.at(0), classify.at(1));
  } else {
    cfg.command = gfo::cli::Command::Dump;
  }

  auto result = gfo::cli::run(cfg);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
