#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "orbicoh/compatible_action.hpp"
#include "orbicoh/error.hpp"
#include "orbicoh/orbifold.hpp"
#include "orbicoh/resolution.hpp"

namespace orbicoh::cli {

enum class Command { Cohomology, Verify, Gerbes, FixedPoints, Classes, Abelianization, Compat, BrownCheck };

std::optional<Command> parse_command(const std::string& name);
std::string command_name(Command c);

struct JobSpec {
  Command command = Command::Cohomology;
  std::string model = "Y1";                 // path, "Y1" or "Y2"
  std::optional<std::size_t> max_degree;    // per-command default when unset
  long coeff_prime = 0;                     // 0 = integers
  bool force = false;
  std::optional<std::string> subgroup;      // word in generator names
  long prime = 2;                           // for classes
  ActionSource action_source = ActionSource::Auto;
  std::size_t group_bound = kDefaultGroupBound;
};

struct ReportDocument {
  nlohmann::json input;
  nlohmann::json result;
  std::vector<std::string> lines;
  std::vector<std::string> warnings;
  double elapsed_ms = 0;
};

/// Model from a JSON document {"n", "generators", optional "generator_names",
/// "name", "blocks"}. Throws Malformed (with a JSON pointer), NotUnimodular,
/// BoundExceeded.
OrbifoldModel parse_input(const nlohmann::json& doc, std::size_t bound = kDefaultGroupBound);
/// Built-in name or a path to a JSON file.
OrbifoldModel load_model(const std::string& source, std::size_t bound = kDefaultGroupBound);
/// Inverse of parse_input.
nlohmann::json model_to_json(const OrbifoldModel& model);

/// A subgroup from comma-separated words such as "t^2" or "s1*s2"; "G" is the
/// whole group and "1" the trivial subgroup.
Subgroup parse_subgroup(const OrbifoldModel& model, const std::string& words);

nlohmann::json to_json(const FinAbGroup& g);

ReportDocument run_command(const JobSpec& spec);

enum class Format { Text, Json };
/// Text lists `lines` then warnings; JSON holds input, result, warnings and a
/// timing block.
std::string emit_report(const ReportDocument& doc, Format format);

/// 0 ok, 1 computational error, 2 input error.
int exit_code_for(ErrorKind kind);

}  // namespace orbicoh::cli
