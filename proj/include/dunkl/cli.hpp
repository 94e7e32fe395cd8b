#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dunkl/params.hpp"

namespace dunkl::cli {

enum ExitCode : int { kSuccess = 0, kInvalidInput = 1, kVerificationFailed = 2, kIoFailure = 3 };

/// Bad flag or config value; the message names the violated invariant.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Command { spectrum, density, thermo, verify };
enum class OutputFormat { csv, svg, both };
enum class FigureId { fig1, fig2, fig3, fig4, fig5, fig6, fig7 };

std::string_view to_string(FigureId id) noexcept;
std::optional<FigureId> parse_figure(std::string_view text);

/// Command each figure belongs to.
Command figure_command(FigureId id) noexcept;

struct RunConfig {
  Command command = Command::verify;
  std::vector<double> r_list{1.0, 1.5, 2.0};
  double mu = 0.5;
  std::vector<Parity> parities{Parity::even, Parity::odd};
  int n_max = 10;
  double tau_min = 1.0;
  double tau_max = 10.0;
  int tau_steps = 91;
  std::filesystem::path output_dir = ".";
  OutputFormat format = OutputFormat::both;
  std::optional<FigureId> figure;
};

/// Defaults of a command, overlaid with a figure preset when one is given.
RunConfig preset(Command command, std::optional<FigureId> figure);

/// Flat `key=value` lines; `#` starts a comment.
std::map<std::string, std::string> parse_config_text(const std::string& text);

/// Applies `key=value` settings (flag names without dashes) on top of `config`.
void apply_settings(RunConfig& config, const std::map<std::string, std::string>& settings);

/// Throws InvalidInput if an invariant of RunConfig is violated.
void validate(const RunConfig& config);

/// Builds a RunConfig from argv: defaults, figure preset, config file, flags.
/// Returns std::nullopt after printing help.
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out);

/// Executes a validated configuration; returns an ExitCode.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run with the documented exit codes.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dunkl::cli
