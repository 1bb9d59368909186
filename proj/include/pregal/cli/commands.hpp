#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "pregal/error.hpp"

namespace pregal::cli {

inline constexpr int schema_version = 1;
inline constexpr std::string_view toolkit_version = "0.3.0";

/// A parsed command line: option name (without dashes) -> values. Flags
/// carry the single value "true".
struct Invocation {
  std::string command;
  std::map<std::string, std::vector<std::string>> options;
};

struct OptionSpec {
  std::string name;
  std::string help;
  enum Kind { Single, Multi, Flag } kind = Single;
  bool required = false;
};
struct CommandSpec {
  std::string name;
  std::string help;
  std::vector<OptionSpec> options;
};
const std::vector<CommandSpec>& command_specs();

/// Runs the command and returns the full report (schema_version,
/// toolkit_version, command, arguments, input_digest, bounds, result).
/// Throws Error.
nlohmann::json run(const Invocation& inv);

/// {"error": {"kind", "message", ["line", "column"]}}
nlohmann::json error_report(const Error& e);
int exit_code(ErrorKind kind);

/// FNV-1a, 64 bit, as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view bytes);

/// Canonical text form of a report: sorted keys, two-space indent, trailing newline.
std::string render(const nlohmann::json& report);

}  // namespace pregal::cli
