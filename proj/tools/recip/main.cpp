#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "recip/errors.hpp"

int main(int argc, char** argv) {
  using namespace recip;
  cli::RunConfig cfg;
  std::vector<std::string> fields;
  std::vector<std::string> point;
  std::vector<std::int64_t> grading;
  std::size_t avoid = 0;
  bool json = false;

  CLI::App app{"Reciprocity checks for lattice points of cones with boundary pieces removed"};
  app.add_option("command", cfg.command, "enumerate | reciprocity | cm | separate | shell | colon | lift | schlegel | corpus")
      ->required()
      ->check(CLI::IsMember(cli::commands()));
  app.add_option("input", cfg.input, "input JSON file (not used by corpus)");
  app.add_option("--select", cfg.select, "facet indices of G, e.g. 0,2")->delimiter(',');
  app.add_option("--degree", cfg.degree, "degree bound N")->capture_default_str();
  app.add_option("--field", fields, "Q, F2, F3, ... (repeatable; default Q,F2)")->delimiter(',');
  app.add_option("--grading", grading, "grading covector w1,...,wd")->delimiter(',');
  app.add_option("--seed", cfg.seed, "seed for randomized steps")->capture_default_str();
  app.add_flag("--json", json, "print the report as JSON");
  auto* avoid_opt = app.add_option("--avoid", avoid, "facet to project from (schlegel)");
  app.add_option("--point", point, "homogeneous point p1,...,pd for the shelling line (shell)")->delimiter(',');

  try {
    app.parse(argc, argv);
    if (cfg.command != "corpus" && cfg.input.empty()) throw CLI::RequiredError("input");
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::Exit::input_error;
  }

  try {
    if (!fields.empty()) {
      cfg.fields.clear();
      for (const auto& f : fields) cfg.fields.push_back(FieldSpec::parse(f));
    }
    if (!point.empty()) {
      RatVector p;
      for (const auto& x : point) p.push_back(parse_rational(x));
      cfg.point = p;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::Exit::input_error;
  }
  if (!grading.empty()) cfg.grading = IntVector(grading.begin(), grading.end());
  if (avoid_opt->count() > 0) cfg.avoid = avoid;
  cfg.format = json ? cli::Format::json : cli::Format::text;
  return cli::run(cfg, std::cout, std::cerr);
}
