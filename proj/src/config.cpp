#include <gaugeint/config.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

namespace gaugeint {

namespace {

std::string trim(const std::string& s) {
  const auto lo = s.find_first_not_of(" \t\r");
  if (lo == std::string::npos) return {};
  const auto hi = s.find_last_not_of(" \t\r");
  return s.substr(lo, hi - lo + 1);
}

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  std::string cleaned = text;
  for (char& c : cleaned)
    if (c == ',') c = ' ';
  std::istringstream in(cleaned);
  double x;
  while (in >> x) out.push_back(x);
  return out;
}

// Vector literals look like (0.5, -1); several may follow one another.
std::vector<Vector> parse_vector_list(const std::string& text, int dim) {
  std::vector<Vector> out;
  std::size_t pos = 0;
  while ((pos = text.find('(', pos)) != std::string::npos) {
    const std::size_t end = text.find(')', pos);
    if (end == std::string::npos)
      throw ConfigError("unbalanced '(' in vector list");
    const std::vector<double> nums =
        parse_number_list(text.substr(pos + 1, end - pos - 1));
    if (static_cast<int>(nums.size()) != dim)
      throw ConfigError("vector literal has " + std::to_string(nums.size()) +
                        " entries, expected " + std::to_string(dim));
    Vector v(dim);
    for (int i = 0; i < dim; ++i) v[i] = nums[static_cast<std::size_t>(i)];
    out.push_back(std::move(v));
    pos = end + 1;
  }
  return out;
}

void write_file(const std::string& dir, const std::string& name,
                const std::string& content) {
  std::filesystem::create_directories(dir);
  const std::filesystem::path path = std::filesystem::path(dir) / name;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

}  // namespace

Config Config::parse_string(const std::string& text, const std::string& name) {
  Config cfg;
  cfg.name_ = name;
  std::istringstream in(text);
  std::string line;
  std::string section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError(name + ":" + std::to_string(lineno) +
                          ": malformed section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section.empty())
        throw ConfigError(name + ":" + std::to_string(lineno) +
                          ": empty section name");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(name + ":" + std::to_string(lineno) +
                        ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw ConfigError(name + ":" + std::to_string(lineno) + ": empty key");
    cfg.sections_[section][key] = Entry{value, lineno};
  }
  return cfg;
}

Config Config::parse_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_string(buf.str(), path);
}

bool Config::has(const std::string& section, const std::string& key) const {
  const auto s = sections_.find(section);
  return s != sections_.end() && s->second.count(key) > 0;
}

std::string Config::get(const std::string& section,
                        const std::string& key) const {
  const auto s = sections_.find(section);
  if (s != sections_.end()) {
    const auto k = s->second.find(key);
    if (k != s->second.end()) return k->second.value;
  }
  throw ConfigError(name_ + ": missing required key '" + key +
                    "' in section [" + section + "]");
}

std::string Config::get_or(const std::string& section, const std::string& key,
                           const std::string& fallback) const {
  return has(section, key) ? get(section, key) : fallback;
}

double Config::number(const std::string& section,
                      const std::string& key) const {
  const std::string raw = get(section, key);
  try {
    std::size_t used = 0;
    const double v = std::stod(raw, &used);
    if (used != raw.size()) throw std::invalid_argument(raw);
    return v;
  } catch (const std::exception&) {
    fail(section, key, "expected a number, got '" + raw + "'");
  }
}

double Config::number_or(const std::string& section, const std::string& key,
                         double fallback) const {
  return has(section, key) ? number(section, key) : fallback;
}

long Config::integer_or(const std::string& section, const std::string& key,
                        long fallback) const {
  if (!has(section, key)) return fallback;
  const double v = number(section, key);
  if (v != std::floor(v)) fail(section, key, "expected an integer");
  return static_cast<long>(v);
}

void Config::fail(const std::string& section, const std::string& key,
                  const std::string& message) const {
  int line = 0;
  const auto s = sections_.find(section);
  if (s != sections_.end()) {
    const auto k = s->second.find(key);
    if (k != s->second.end()) line = k->second.line;
  }
  throw ConfigError(name_ + ":" + std::to_string(line) + ": [" + section +
                    "] " + key + ": " + message);
}

Integrand integrand_from_config(const Config& cfg) {
  const std::string family = cfg.get("integrand", "family");
  if (family == "pathological_derivative")
    return Integrand::pathological_derivative();
  const int dim = static_cast<int>(cfg.integer_or("integrand", "dim", 1));
  if (family == "constant") {
    const auto vals = parse_vector_list(cfg.get("integrand", "value"), dim);
    if (vals.size() != 1)
      cfg.fail("integrand", "value", "expected exactly one vector literal");
    return Integrand::constant(vals.front());
  }
  if (family == "step") {
    std::vector<double> breaks;
    if (cfg.has("integrand", "breakpoints"))
      breaks = parse_number_list(cfg.get("integrand", "breakpoints"));
    const auto vals = parse_vector_list(cfg.get("integrand", "values"), dim);
    try {
      return Integrand::from_step(
          StepVectorFunction(dim, std::move(breaks), vals));
    } catch (const std::invalid_argument& e) {
      cfg.fail("integrand", "values", e.what());
    }
  }
  cfg.fail("integrand", "family",
           "unknown family '" + family +
               "' (expected step | constant | pathological_derivative)");
}

Gauge gauge_from_config(const Config& cfg, const std::string& section) {
  const std::string kind = cfg.get_or(section, "kind", "constant");
  if (kind == "constant")
    return Gauge::constant(cfg.number_or(section, "c", 0.1));
  if (kind == "step") {
    std::vector<double> breaks;
    if (cfg.has(section, "breakpoints"))
      breaks = parse_number_list(cfg.get(section, "breakpoints"));
    std::vector<double> vals = parse_number_list(cfg.get(section, "values"));
    try {
      return Gauge::step(std::move(breaks), std::move(vals));
    } catch (const std::invalid_argument& e) {
      cfg.fail(section, "values", e.what());
    }
  }
  if (kind == "power-floor")
    return Gauge::power_floor(cfg.number_or(section, "c", 0.5),
                              cfg.number_or(section, "p", 1.0),
                              cfg.number_or(section, "floor", 1e-6));
  cfg.fail(section, "kind",
           "unknown gauge kind '" + kind +
               "' (expected constant | step | power-floor)");
}

namespace {

IntegralKind kind_from_config(const Config& cfg) {
  const std::string kind = cfg.get_or("integral", "kind", "mcshane");
  if (kind == "mcshane") return IntegralKind::McShane;
  if (kind == "henstock") return IntegralKind::Henstock;
  if (kind == "birkhoff") return IntegralKind::Birkhoff;
  cfg.fail("integral", "kind", "unknown kind '" + kind + "'");
}

std::optional<GaugeSchedule> schedule_from_config(const Config& cfg,
                                                  const Integrand& f,
                                                  double tol) {
  const std::string name = cfg.get_or("gauge", "schedule", "auto");
  const int iters =
      static_cast<int>(cfg.integer_or("gauge", "iterations", 40));
  if (name == "auto") return std::nullopt;
  if (name == "constant")
    return GaugeSchedule::constant_halving(
        iters, cfg.number_or("gauge", "scale", 1.0));
  if (name == "dyadic-step") return GaugeSchedule::dyadic_step(iters);
  if (name == "step-adapted") {
    if (!f.step())
      cfg.fail("gauge", "schedule",
               "step-adapted needs a step integrand");
    return GaugeSchedule::step_adapted(f.step()->breakpoints, iters);
  }
  if (name == "singular") return GaugeSchedule::singular_geometric(tol, iters);
  cfg.fail("gauge", "schedule", "unknown schedule '" + name + "'");
}

int cmd_integrate(const Config& cfg, const RunSettings& s, std::ostream& log) {
  const Integrand f = integrand_from_config(cfg);
  const IntegralKind kind = kind_from_config(cfg);
  const std::string mode = cfg.get_or("integral", "mode", "vector");
  if (mode != "vector" && mode != "set")
    cfg.fail("integral", "mode", "expected vector | set");

  IntegrateOptions opt;
  opt.tol = cfg.number_or("integral", "tol", 1e-6);
  if (!(opt.tol > 0.0)) cfg.fail("integral", "tol", "tol must be > 0");
  opt.schedule = schedule_from_config(cfg, f, opt.tol);
  const long directions = cfg.integer_or("grid", "directions", 0);
  if (directions > 0)
    opt.grid = make_direction_grid(f.dim(), directions);
  if (cfg.has("adversary", "score")) {
    const std::string score = cfg.get("adversary", "score");
    if (score != "positive-part")
      cfg.fail("adversary", "score", "only positive-part is supported");
    if (f.dim() != 1)
      cfg.fail("adversary", "score", "positive-part needs a scalar integrand");
    opt.tag_score = [g = f](double t) { return std::max(g(t)[0], 0.0); };
    opt.score_samples =
        static_cast<int>(cfg.integer_or("adversary", "samples", 17));
  }

  IntegralResult result;
  if (mode == "set") {
    result = kind == IntegralKind::McShane
                 ? mcshane_integrate(determined(f), opt)
                 : kind == IntegralKind::Henstock
                       ? henstock_integrate(determined(f), opt)
                       : birkhoff_integrate(determined(f), opt);
  } else {
    result = kind == IntegralKind::McShane
                 ? mcshane_integrate(f, opt)
                 : kind == IntegralKind::Henstock ? henstock_integrate(f, opt)
                                                  : birkhoff_integrate(f, opt);
  }

  write_file(s.out_dir, "convergence.csv", convergence_csv(result));
  write_file(s.out_dir, "result.json", result_json(result));
  log << "integrate " << to_string(kind) << " (" << mode << " mode): "
      << (result.converged ? "converged" : "NonConvergent") << " after "
      << result.iterations.size() << " iterations\n";
  return result.converged ? 0 : 2;
}

int cmd_demo(const Config& cfg, const RunSettings& s, std::ostream& log) {
  std::string id = s.demo_id;
  if (id.empty()) id = cfg.get_or("demo", "id", "");
  if (id.empty())
    throw ConfigError("demo: no id given (argument or [demo] id)");
  const bool randomized = id == "e_over_t" || id == "transfer_roundtrip";
  if (randomized && !s.seed && !cfg.has("run", "seed"))
    throw ConfigError("demo " + id +
                      ": a seed is required (--seed or [run] seed)");
  const std::uint64_t seed =
      s.seed.value_or(static_cast<std::uint64_t>(
          cfg.integer_or("run", "seed", 1)));

  DemoReport report;
  if (id == "e_over_t") {
    const int trials =
        static_cast<int>(cfg.integer_or("demo", "trials", 100));
    const Gauge base = cfg.has("gauge", "kind")
                           ? gauge_from_config(cfg, "gauge")
                           : Gauge::constant(0.1);
    report = demo_e_over_t(trials, base, seed);
  } else if (id == "orthonormal_h") {
    const int n = static_cast<int>(cfg.integer_or("demo", "n", 25));
    const long m = cfg.integer_or("demo", "m", 10L * n);
    report = demo_orthonormal_H(
        n, uniform_partition(static_cast<int>(m), TagRule::Mid));
  } else if (id == "derivative_henstock") {
    report = demo_derivative_henstock(cfg.number_or("demo", "tol", 1e-3));
  } else if (id == "transfer_roundtrip") {
    const int cases = static_cast<int>(cfg.integer_or("demo", "cases", 50));
    report = demo_transfer_roundtrip(seed, cases);
  } else {
    throw ConfigError("demo: unknown id '" + id + "'");
  }

  write_file(s.out_dir, "demo_" + id + ".txt", demo_text(report));
  write_file(s.out_dir, "demo_" + id + ".csv", demo_csv(report));
  log << demo_text(report);
  return report.pass ? 0 : 1;
}

int cmd_partition(const Config& cfg, const RunSettings& s, std::ostream& log) {
  const Gauge gauge = gauge_from_config(cfg, "gauge");
  const bool perron = cfg.get_or("partition", "perron", "true") == "true";
  const int max_depth =
      static_cast<int>(cfg.integer_or("partition", "max_depth", 60));
  const TaggedPartition p = cousin_partition(gauge, perron, max_depth);
  write_file(s.out_dir, "partition.csv", partition_csv(p));
  log << "partition: " << p.size() << " intervals from " << gauge.describe()
      << (perron ? " (Perron tags)" : " (free tags)") << "\n";
  return 0;
}

}  // namespace

bool run_quick_checks(std::uint64_t seed, std::ostream& log) {
  Rng rng(seed);
  bool all = true;
  auto report = [&](const char* name, bool ok) {
    log << (ok ? "[PASS] " : "[FAIL] ") << name << "\n";
    all = all && ok;
  };

  {  // support identity s(u, conv{0,x}) = <u,x>^+
    bool ok = true;
    for (int i = 0; i < 1000 && ok; ++i) {
      const int d = 1 + static_cast<int>(rng.below(8));
      const Vector u = rng.vector(d, -3.0, 3.0);
      const Vector x = rng.vector(d, -3.0, 3.0);
      ok = std::abs(support(u, Segment(x)) - std::max(u.dot(x), 0.0)) <= 1e-12;
    }
    report("support identity on random segments", ok);
  }
  {  // d_H(G(t),G(t')) <= ||g(t) - g(t')||
    bool ok = true;
    for (int i = 0; i < 1000 && ok; ++i) {
      const int d = 1 + static_cast<int>(rng.below(8));
      const Vector x = rng.vector(d, -3.0, 3.0);
      const Vector y = rng.vector(d, -3.0, 3.0);
      ok = hausdorff_segments(x, y) <= (x - y).norm() + 1e-12;
    }
    report("segment Hausdorff bounded by endpoint distance", ok);
  }
  {  // embedding linearity on random segment pairs
    bool ok = true;
    const auto grid = make_direction_grid(2, 180);
    for (int i = 0; i < 200 && ok; ++i) {
      const Vector x = rng.vector(2, -2.0, 2.0);
      const Vector y = rng.vector(2, -2.0, 2.0);
      const SupportVector lhs =
          embed(Zonotope(2, {x, y}), grid);
      const SupportVector rhs =
          minkowski_add(embed(Segment(x), grid), embed(Segment(y), grid));
      ok = (lhs.values - rhs.values).cwiseAbs().maxCoeff() <= 1e-12;
    }
    report("embedding turns Minkowski sums into pointwise sums", ok);
  }
  {  // grid Hausdorff encloses the exact segment distance
    bool ok = true;
    const auto grid = make_direction_grid(2, 360);
    for (int i = 0; i < 200 && ok; ++i) {
      const Vector x = rng.vector(2, -2.0, 2.0);
      const Vector y = rng.vector(2, -2.0, 2.0);
      const auto h = hausdorff_grid(embed(Segment(x), grid),
                                    embed(Segment(y), grid));
      const double exact = hausdorff_segments(x, y);
      ok = h.distance <= exact + 1e-12 &&
           exact <= h.distance + h.error_bound + 1e-12;
    }
    report("grid Hausdorff interval encloses the exact distance", ok);
  }
  {  // cousin partitions are delta-fine
    bool ok = true;
    for (int i = 0; i < 50 && ok; ++i) {
      Rng sub(rng.bits());
      const Gauge g = random_step_gauge(sub);
      const bool perron = (i % 2) == 0;
      const TaggedPartition p = cousin_partition(g, perron);
      ok = is_delta_fine(p, g);
    }
    report("cousin partitions pass is_delta_fine", ok);
  }
  {  // breakpoint tie rule shared across piecewise types
    const std::vector<double> breaks{0.5};
    const Gauge g = Gauge::step(breaks, {0.2, 0.05});
    const ScalarStepFunction w(breaks, {1.0, 0.0});
    Vector a(1), b(1);
    a[0] = 3.0;
    b[0] = -1.0;
    const StepVectorFunction f(1, breaks, {a, b});
    const bool ok = g(0.5) == 0.2 && w(0.5) == 1.0 && f(0.5)[0] == 3.0;
    report("left-piece tie rule is shared at breakpoints", ok);
  }
  return all;
}

int run_command(const RunSettings& settings, std::ostream& log) {
  try {
    if (settings.command == "check") {
      const bool ok = run_quick_checks(settings.seed.value_or(1), log);
      return ok ? 0 : 1;
    }
    if (settings.config_path.empty())
      throw ConfigError(settings.command + ": --config is required");
    Config cfg = Config::parse_file(settings.config_path);

    RunSettings s = settings;
    if (!s.seed && cfg.has("run", "seed"))
      s.seed = static_cast<std::uint64_t>(cfg.integer_or("run", "seed", 1));
    if (s.out_dir.empty())  // --out takes precedence over [run] out
      s.out_dir = cfg.get_or("run", "out", "out");

    if (settings.command == "integrate") return cmd_integrate(cfg, s, log);
    if (settings.command == "demo") return cmd_demo(cfg, s, log);
    if (settings.command == "partition") return cmd_partition(cfg, s, log);
    throw ConfigError("unknown command '" + settings.command + "'");
  } catch (const ConfigError& e) {
    log << "config error: " << e.what() << "\n";
    return 1;
  } catch (const DepthExceeded& e) {
    log << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    log << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace gaugeint
