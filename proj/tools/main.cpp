#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ssig/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "Synthesizes stationary stochastic signals whose autocorrelation matches a "
      "target while the sample values honor distribution constraints."};
  app.require_subcommand(1);

  std::string config_path;
  std::vector<std::string> overrides;

  CLI::App* generate = app.add_subcommand(
      "generate", "Run one synthesis and write signal/trace/quantile outputs");
  generate->add_option("config", config_path, "JSON config file")->required();
  generate->add_option("overrides", overrides,
                       "config overrides as dotted key=value pairs, e.g. run.seed=7");

  CLI::App* benchmark = app.add_subcommand(
      "benchmark", "Compare modes under a shared budget and/or run a scaling sweep");
  benchmark->add_option("config", config_path, "JSON config file")->required();
  benchmark->add_option("overrides", overrides,
                        "config overrides as dotted key=value pairs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // --help exits cleanly; usage errors are config-class
  }

  return generate->parsed() ? ssig::cmd_generate(config_path, overrides)
                            : ssig::cmd_benchmark(config_path, overrides);
}
