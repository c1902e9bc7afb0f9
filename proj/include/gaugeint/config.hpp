// Config-driven run front end shared by the CLI binary and its tests.
// Config files are single structured text files: [section] headers with
// key = value lines; '#' starts a comment.  Runs are reproducible: the same
// config and seed give byte-identical outputs.
#pragma once

#include <gaugeint/report.hpp>

#include <iosfwd>
#include <map>

namespace gaugeint {

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

class Config {
 public:
  static Config parse_file(const std::string& path);
  static Config parse_string(const std::string& text,
                             const std::string& name = "<config>");

  bool has(const std::string& section, const std::string& key) const;
  std::string get(const std::string& section, const std::string& key) const;
  std::string get_or(const std::string& section, const std::string& key,
                     const std::string& fallback) const;
  double number(const std::string& section, const std::string& key) const;
  double number_or(const std::string& section, const std::string& key,
                   double fallback) const;
  long integer_or(const std::string& section, const std::string& key,
                  long fallback) const;

  // Diagnostics carry file:line context.
  [[noreturn]] void fail(const std::string& section, const std::string& key,
                         const std::string& message) const;

 private:
  struct Entry {
    std::string value;
    int line = 0;
  };
  std::string name_;
  std::map<std::string, std::map<std::string, Entry>> sections_;
};

struct RunSettings {
  std::string command;     // integrate | demo | partition | check
  std::string demo_id;     // optional; may come from [demo] id
  std::string config_path; // empty allowed for check
  std::string out_dir;     // empty: use [run] out, falling back to "out"
  std::optional<std::uint64_t> seed;  // overrides [run] seed
};

// Executes one run: writes output files under out_dir and logs progress.
// Returns the process exit code: 0 success/converged, 2 NonConvergent
// (expected for the counterexample configs), 1 error.
int run_command(const RunSettings& settings, std::ostream& log);

// The `check` command: a quick property sweep over the core identities.
bool run_quick_checks(std::uint64_t seed, std::ostream& log);

// Exposed for tests.
Integrand integrand_from_config(const Config& cfg);
Gauge gauge_from_config(const Config& cfg, const std::string& section);

}  // namespace gaugeint
