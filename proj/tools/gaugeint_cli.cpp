// Command-line front end: config-driven integration runs, paper demos,
// partition generation and the quick property sweep.
#include <gaugeint/config.hpp>

#include <CLI11.hpp>

#include <iostream>

int run_main(int argc, char** argv);

int main(int argc, char** argv) {
  try {
    return run_main(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

int run_main(int argc, char** argv) {
  CLI::App app{"gauge integrals of vector functions and determined "
               "multifunctions"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;  // empty means: take [run] out from the config
  std::uint64_t seed = 0;
  bool seed_set = false;

  auto add_common = [&](CLI::App* cmd, bool config_required) {
    auto* c = cmd->add_option("--config", config_path,
                              "path to the run config file");
    if (config_required) c->required();
    cmd->add_option("--out", out_dir,
                    "output directory (default: [run] out from the config)");
    cmd->add_option("--seed", seed, "seed override for randomized commands")
        ->each([&](const std::string&) { seed_set = true; });
  };

  CLI::App* integrate =
      app.add_subcommand("integrate", "run one gauge-integration loop");
  add_common(integrate, true);

  std::string demo_id;
  CLI::App* demo = app.add_subcommand("demo", "run a named demo");
  demo->add_option("id", demo_id,
                   "demo id: e_over_t | orthonormal_h | derivative_henstock "
                   "| transfer_roundtrip");
  add_common(demo, true);

  CLI::App* partition =
      app.add_subcommand("partition", "emit a delta-fine tagged partition");
  add_common(partition, true);

  CLI::App* check =
      app.add_subcommand("check", "run the quick property sweep");
  add_common(check, false);

  CLI11_PARSE(app, argc, argv);

  gaugeint::RunSettings settings;
  settings.config_path = config_path;
  settings.out_dir = out_dir;
  settings.demo_id = demo_id;
  if (seed_set) settings.seed = seed;
  if (integrate->parsed()) settings.command = "integrate";
  if (demo->parsed()) settings.command = "demo";
  if (partition->parsed()) settings.command = "partition";
  if (check->parsed()) settings.command = "check";

  return gaugeint::run_command(settings, std::cout);
}
