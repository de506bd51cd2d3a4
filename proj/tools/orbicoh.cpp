#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "orbicoh/cli.hpp"

using namespace orbicoh;

int main(int argc, char** argv) {
  CLI::App app{"Exact cohomology of crystallographic groups Z^n x| G and orbifold invariants"};
  app.set_version_flag("--version", "orbicoh 0.1.0");
  std::string command_text;
  std::string model = "Y1";
  std::size_t max_degree = 0;
  std::string coeff = "Z";
  std::string format_text = "text";
  std::string subgroup;
  std::string source_text = "auto";
  cli::JobSpec spec;

  app.add_option("command", command_text,
                 "cohomology | verify | gerbes | fixed-points | classes | abelianization | compat | brown-check")
      ->required();
  app.add_option("--model", model, "path to a JSON model, or Y1 / Y2")->capture_default_str();
  auto* degree_opt = app.add_option("--max-degree", max_degree, "top degree");
  app.add_option("--coeff", coeff, "Z or F<p>")->capture_default_str();
  app.add_option("--format", format_text, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_flag("--force", spec.force, "assemble E2 even when collapse is not guaranteed");
  auto* subgroup_opt = app.add_option("--subgroup", subgroup, "comma-separated words, G or 1");
  app.add_option("--prime", spec.prime, "prime for the classes command")->capture_default_str();
  app.add_option("--action-source", source_text, "auto, catalog or solver")
      ->check(CLI::IsMember({"auto", "catalog", "solver"}))
      ->capture_default_str();
  app.add_option("--bound", spec.group_bound, "largest group order accepted")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    auto command = cli::parse_command(command_text);
    if (!command) {
      std::cerr << "error: unknown command '" << command_text << "'\n";
      return 2;
    }
    spec.command = *command;
    spec.model = model;
    if (degree_opt->count()) spec.max_degree = max_degree;
    if (subgroup_opt->count()) spec.subgroup = subgroup;
    if (coeff != "Z") {
      if (coeff.size() < 2 || coeff[0] != 'F') {
        std::cerr << "error: coefficients must be Z or F<p>\n";
        return 2;
      }
      try {
        std::size_t used = 0;
        spec.coeff_prime = std::stol(coeff.substr(1), &used);
        if (used != coeff.size() - 1) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        std::cerr << "error: coefficients must be Z or F<p>\n";
        return 2;
      }
    }
    static const std::map<std::string, ActionSource> sources{
        {"auto", ActionSource::Auto}, {"catalog", ActionSource::Catalog}, {"solver", ActionSource::Solver}};
    spec.action_source = sources.at(source_text);
    const auto format = format_text == "json" ? cli::Format::Json : cli::Format::Text;
    std::cout << cli::emit_report(cli::run_command(spec), format);
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
