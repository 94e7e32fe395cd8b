#include "dunkl/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "dunkl/errors.hpp"
#include "dunkl/series_io.hpp"
#include "dunkl/spectrum.hpp"
#include "dunkl/thermo.hpp"
#include "dunkl/verify.hpp"

namespace dunkl::cli {

namespace {

constexpr const char* kSettingKeys[] = {"r",        "mu",         "parity", "tau-min", "tau-max",
                                        "tau-steps", "n-max",     "figure", "out",     "format"};

constexpr double kDensityHalfWidth = 4.0;
constexpr int kDensityPoints = 401;

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

double parse_double(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  double v = 0.0;
  const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || res.ec != std::errc() || res.ptr != t.data() + t.size() || !std::isfinite(v))
    throw InvalidInput("invalid number for " + key + ": '" + text + "'");
  return v;
}

int parse_int(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  int v = 0;
  const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || res.ec != std::errc() || res.ptr != t.data() + t.size())
    throw InvalidInput("invalid integer for " + key + ": '" + text + "'");
  return v;
}

std::string_view command_name(Command c) {
  switch (c) {
    case Command::spectrum: return "spectrum";
    case Command::density: return "density";
    case Command::thermo: return "thermo";
    case Command::verify: return "verify";
  }
  return "?";
}

thermo::Observable figure_observable(FigureId id) {
  switch (id) {
    case FigureId::fig3: return thermo::Observable::Z;
    case FigureId::fig4: return thermo::Observable::F;
    case FigureId::fig5: return thermo::Observable::S;
    case FigureId::fig6: return thermo::Observable::U;
    default: return thermo::Observable::C;
  }
}

std::string observable_title(thermo::Observable obs) {
  switch (obs) {
    case thermo::Observable::Z: return "Partition function";
    case thermo::Observable::F: return "Helmholtz free energy";
    case thermo::Observable::S: return "Entropy";
    case thermo::Observable::U: return "Mean energy";
    case thermo::Observable::C: return "Heat capacity";
  }
  return "";
}

std::string observable_axis(thermo::Observable obs) {
  switch (obs) {
    case thermo::Observable::Z: return "Z";
    case thermo::Observable::F: return "F / m";
    case thermo::Observable::S: return "S / k_B";
    case thermo::Observable::U: return "U / m";
    case thermo::Observable::C: return "C / k_B";
  }
  return "";
}

std::string join_numbers(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += io::format_number(v[i]);
  }
  return s;
}

std::string r_label(double r) { return thermo::config_label({OscillatorParams::reduced(r, 0.0), Parity::even}); }

class Emitter {
 public:
  Emitter(const RunConfig& config, std::ostream& out) : config_(config), out_(out) {}

  void emit(const SeriesTable& table, const std::string& base, io::FigureSpec spec) {
    spec.value_columns = table.width() - 1;
    spec.metadata.insert(spec.metadata.begin(),
                         {{"command", std::string(command_name(config_.command))},
                          {"r", join_numbers(config_.r_list)},
                          {"mu", io::format_number(config_.mu)}});
    if (config_.format != OutputFormat::svg) write(base + ".csv", [&](const auto& p) { io::emit_csv(table, p); });
    if (config_.format != OutputFormat::csv) write(base + ".svg", [&](const auto& p) { io::emit_svg(table, spec, p); });
  }

 private:
  template <class F>
  void write(const std::string& name, F&& f) {
    const auto path = config_.output_dir / name;
    f(path);
    out_ << "wrote " << path.string() << '\n';
  }

  const RunConfig& config_;
  std::ostream& out_;
};

std::string base_name(const RunConfig& config, const std::string& fallback) {
  return config.figure ? std::string(to_string(*config.figure)) : fallback;
}

void run_spectrum(const RunConfig& config, Emitter& emitter) {
  for (double r : config.r_list) {
    const auto params = OscillatorParams::reduced(r, config.mu);
    const auto table = spectrum::spectrum_table(config.n_max, params);
    io::FigureSpec spec{base_name(config, "spectrum"), "Energy spectra versus node number (r = " +
                                                           io::format_number(r) + ")",
                        "n", "E / m", 0, {{"n_max", std::to_string(config.n_max)}}};
    emitter.emit(table, config.figure ? base_name(config, "") : "spectrum_" + r_label(r), spec);
    if (config.figure) break;
  }
}

void run_density(const RunConfig& config, Emitter& emitter) {
  const auto grid = thermo::linspace(-kDensityHalfWidth, kDensityHalfWidth, kDensityPoints);
  for (double r : config.r_list) {
    const auto params = OscillatorParams::reduced(r, config.mu);
    for (Parity parity : config.parities) {
      SeriesTable table;
      table.columns.push_back({"xi", ""});
      for (int n = 0; n <= config.n_max; ++n) table.columns.push_back({"rho_n" + std::to_string(n), ""});
      for (double xi : grid) {
        std::vector<double> row{xi};
        for (int n = 0; n <= config.n_max; ++n)
          row.push_back(spectrum::reduced_probability_density(n, params, parity, xi));
        table.rows.push_back(std::move(row));
      }
      const std::string suffix = std::string(to_string(parity));
      io::FigureSpec spec{base_name(config, "density"),
                          "Reduced probability densities (" + suffix + " parity)",
                          "xi = x sqrt(m omega)",
                          "rho",
                          0,
                          {{"parity", suffix},
                           {"normalization", "integral of psi^2 |x|^(2 mu) dx = 1, density per unit xi"}}};
      const std::string base =
          config.figure ? base_name(config, "") + "_" + suffix : "density_" + r_label(r) + "_" + suffix;
      emitter.emit(table, base, spec);
    }
    if (config.figure) break;
  }
}

void run_thermo(const RunConfig& config, Emitter& emitter) {
  std::vector<thermo::ThermoConfig> configs;
  for (Parity parity : config.parities)
    for (double r : config.r_list) configs.push_back({OscillatorParams::reduced(r, config.mu), parity});
  const auto scan =
      thermo::thermo_scan(std::move(configs), thermo::linspace(config.tau_min, config.tau_max, config.tau_steps));

  std::vector<thermo::Observable> observables;
  if (config.figure) {
    observables.push_back(figure_observable(*config.figure));
  } else {
    observables = {thermo::Observable::Z, thermo::Observable::F, thermo::Observable::S, thermo::Observable::U,
                   thermo::Observable::C};
  }
  for (auto obs : observables)
    for (Parity parity : config.parities) {
      const std::string suffix = std::string(to_string(parity));
      io::FigureSpec spec{base_name(config, "thermo"),
                          observable_title(obs) + " versus reduced temperature (" + suffix + " parity)",
                          "tau = k_B T / m",
                          observable_axis(obs),
                          0,
                          {{"parity", suffix},
                           {"tau", io::format_number(config.tau_min) + ".." + io::format_number(config.tau_max) +
                                       " (" + std::to_string(config.tau_steps) + " points)"}}};
      const std::string base = config.figure ? base_name(config, "") + "_" + suffix
                                             : "thermo_" + std::string(thermo::observable_name(obs)) + "_" + suffix;
      emitter.emit(scan.table(obs, parity), base, spec);
    }
}

}  // namespace

std::string_view to_string(FigureId id) noexcept {
  constexpr std::string_view names[] = {"fig1", "fig2", "fig3", "fig4", "fig5", "fig6", "fig7"};
  return names[static_cast<int>(id)];
}

std::optional<FigureId> parse_figure(std::string_view text) {
  for (int i = 0; i < 7; ++i)
    if (to_string(static_cast<FigureId>(i)) == text) return static_cast<FigureId>(i);
  return std::nullopt;
}

Command figure_command(FigureId id) noexcept {
  switch (id) {
    case FigureId::fig1: return Command::density;
    case FigureId::fig2: return Command::spectrum;
    default: return Command::thermo;
  }
}

RunConfig preset(Command command, std::optional<FigureId> figure) {
  RunConfig c;
  c.command = command;
  if (command == Command::density) c.n_max = 2;
  if (!figure) return c;
  c.figure = figure;
  c.mu = 0.5;
  c.parities = {Parity::even, Parity::odd};
  switch (*figure) {
    case FigureId::fig1:
      c.r_list = {1.0};
      c.n_max = 2;
      break;
    case FigureId::fig2:
      c.r_list = {1.0};
      c.n_max = 10;
      break;
    default:
      c.r_list = {1.0, 1.5, 2.0};
      c.tau_min = 1.0;
      c.tau_max = 10.0;
      c.tau_steps = 91;
      break;
  }
  return c;
}

std::map<std::string, std::string> parse_config_text(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw InvalidInput("config line " + std::to_string(number) + ": expected key=value");
    std::string key = trim(std::string_view(t).substr(0, eq));
    if (key.starts_with("--")) key.erase(0, 2);
    out[key] = trim(std::string_view(t).substr(eq + 1));
  }
  return out;
}

void apply_settings(RunConfig& config, const std::map<std::string, std::string>& settings) {
  for (const auto& [key, value] : settings) {
    if (std::find(std::begin(kSettingKeys), std::end(kSettingKeys), key) == std::end(kSettingKeys))
      throw InvalidInput("unknown setting '" + key + "'");
    if (key == "r") {
      config.r_list.clear();
      std::string item;
      std::istringstream in(value);
      while (std::getline(in, item, ',')) config.r_list.push_back(parse_double("r", item));
    } else if (key == "mu") {
      config.mu = parse_double(key, value);
    } else if (key == "parity") {
      if (value == "even") config.parities = {Parity::even};
      else if (value == "odd") config.parities = {Parity::odd};
      else if (value == "both") config.parities = {Parity::even, Parity::odd};
      else throw InvalidInput("parity must be one of even, odd, both");
    } else if (key == "tau-min") {
      config.tau_min = parse_double(key, value);
    } else if (key == "tau-max") {
      config.tau_max = parse_double(key, value);
    } else if (key == "tau-steps") {
      config.tau_steps = parse_int(key, value);
    } else if (key == "n-max") {
      config.n_max = parse_int(key, value);
    } else if (key == "figure") {
      config.figure = parse_figure(value);
      if (!config.figure) throw InvalidInput("figure must be one of fig1..fig7");
    } else if (key == "out") {
      config.output_dir = value;
    } else if (key == "format") {
      if (value == "csv") config.format = OutputFormat::csv;
      else if (value == "svg") config.format = OutputFormat::svg;
      else if (value == "both") config.format = OutputFormat::both;
      else throw InvalidInput("format must be one of csv, svg, both");
    }
  }
}

void validate(const RunConfig& config) {
  if (config.r_list.empty()) throw InvalidInput("r list must not be empty");
  for (double r : config.r_list)
    if (!(r > 0.0)) throw InvalidInput("every r = omega/m must be positive");
  if (!(config.mu > -0.5)) throw InvalidInput("mu must exceed -1/2");
  if (config.parities.empty()) throw InvalidInput("at least one parity is required");
  if (config.n_max < 0) throw InvalidInput("n-max must be non-negative");
  if (config.command == Command::thermo) {
    if (!(config.tau_min > 0.0)) throw InvalidInput("tau grid must be positive");
    if (config.tau_steps < 2 || !(config.tau_max > config.tau_min))
      throw InvalidInput("tau grid must be strictly increasing (tau-max > tau-min, tau-steps >= 2)");
  }
  if (config.figure && figure_command(*config.figure) != config.command)
    throw InvalidInput(std::string(to_string(*config.figure)) + " belongs to the " +
                       std::string(command_name(figure_command(*config.figure))) + " command");
}

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out) {
  CLI::App app{"Spectra, wavefunctions and thermodynamics of relativistic Dunkl oscillators"};
  app.require_subcommand(1);

  struct Flags {
    std::vector<std::string> r;
    std::string mu, parity, tau_min, tau_max, tau_steps, n_max, figure, out, format, config;
  } flags;

  std::vector<CLI::App*> subs;
  for (Command c : {Command::spectrum, Command::density, Command::thermo, Command::verify}) {
    auto* sub = app.add_subcommand(std::string(command_name(c)));
    sub->add_option("--r", flags.r, "oscillator ratios omega/m")->delimiter(',');
    sub->add_option("--mu", flags.mu, "Wigner parameter (> -1/2)");
    sub->add_option("--parity", flags.parity, "even, odd or both");
    sub->add_option("--tau-min", flags.tau_min, "lowest reduced temperature");
    sub->add_option("--tau-max", flags.tau_max, "highest reduced temperature");
    sub->add_option("--tau-steps", flags.tau_steps, "number of grid points");
    sub->add_option("--n-max", flags.n_max, "highest node number");
    sub->add_option("--figure", flags.figure, "figure preset fig1..fig7");
    sub->add_option("--out", flags.out, "output directory");
    sub->add_option("--format", flags.format, "csv, svg or both");
    sub->add_option("--config", flags.config, "key=value settings file (flags win)");
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream err;
    const int code = app.exit(e, out, err);
    if (code == 0) return std::nullopt;
    throw InvalidInput(err.str().empty() ? e.what() : trim(err.str()));
  }

  Command command = Command::verify;
  CLI::App* selected = nullptr;
  for (std::size_t i = 0; i < subs.size(); ++i)
    if (subs[i]->parsed()) {
      command = static_cast<Command>(i);
      selected = subs[i];
    }

  std::map<std::string, std::string> settings;
  if (!flags.config.empty()) {
    std::ifstream in(flags.config);
    if (!in) throw InvalidInput("cannot read config file " + flags.config);
    std::stringstream buf;
    buf << in.rdbuf();
    settings = parse_config_text(buf.str());
  }
  auto given = [&](const char* name) { return selected->get_option(name)->count() > 0; };
  if (given("--r")) {
    std::string joined;
    for (std::size_t i = 0; i < flags.r.size(); ++i) joined += (i ? "," : "") + flags.r[i];
    settings["r"] = joined;
  }
  const std::pair<const char*, std::string*> scalar_flags[] = {
      {"mu", &flags.mu},         {"parity", &flags.parity}, {"tau-min", &flags.tau_min},
      {"tau-max", &flags.tau_max}, {"tau-steps", &flags.tau_steps}, {"n-max", &flags.n_max},
      {"figure", &flags.figure}, {"out", &flags.out},       {"format", &flags.format}};
  for (const auto& [name, value] : scalar_flags)
    if (given((std::string("--") + name).c_str())) settings[name] = *value;

  std::optional<FigureId> figure;
  if (auto it = settings.find("figure"); it != settings.end()) {
    figure = parse_figure(it->second);
    if (!figure) throw InvalidInput("figure must be one of fig1..fig7");
  }
  RunConfig config = preset(command, figure);
  apply_settings(config, settings);
  validate(config);
  return config;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  validate(config);
  if (config.command == Command::verify) {
    const auto results = verify::run_checks(verify::invariant_checks());
    verify::print_table(results, out);
    return verify::all_passed(results) ? kSuccess : kVerificationFailed;
  }

  std::error_code ec;
  std::filesystem::create_directories(config.output_dir, ec);
  if (ec) throw IoError("cannot create output directory " + config.output_dir.string() + ": " + ec.message());

  if (config.command == Command::thermo && !thermo::closed_form_valid(config.tau_min))
    err << "warning: closed-form thermodynamics is an asymptotic expansion; values below tau = 1 are unreliable\n";

  Emitter emitter(config, out);
  switch (config.command) {
    case Command::spectrum: run_spectrum(config, emitter); break;
    case Command::density: run_density(config, emitter); break;
    case Command::thermo: run_thermo(config, emitter); break;
    case Command::verify: break;
  }
  return kSuccess;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  try {
    const auto config = parse_args(argc, argv, out);
    if (!config) return kSuccess;
    return run(*config, out, err);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kIoFailure;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "I/O error: " << e.what() << '\n';
    return kIoFailure;
  } catch (const ConvergenceError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const ConsistencyError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kVerificationFailed;
  }
}

}  // namespace dunkl::cli
