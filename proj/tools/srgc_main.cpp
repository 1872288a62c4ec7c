#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "srgc/cli.hpp"
#include "srgc/config.hpp"
#include "srgc/csv.hpp"

int main(int argc, char** argv) {
  CLI::App app{"scaled relative graph toolkit and nonsmooth circuit solver"};
  app.require_subcommand(0, 1);

  bool emit_default = false;
  std::string emit_out;
  app.add_flag("--emit-default-config", emit_default,
               "print a fully populated default config and exit");
  app.add_option("--out", emit_out,
                 "output path for --emit-default-config (default: stdout)");

  srgc::CliOptions opt;
  std::string element_name, experiment;

  auto* samp = app.add_subcommand(
      "srg-sample", "sample an element's scaled relative graph to CSV");
  samp->add_option("element", element_name,
                   "identity, tunnel, tunnel-inverse, transistor, or "
                   "leaky-transistor")
      ->required();
  samp->add_option("--config", opt.config_path, "config file (default: built-in)");
  samp->add_option("--out", opt.out_path, "cloud CSV path (default: srg_cloud.csv)");
  samp->add_option("--seed", opt.seed, "sampler seed (default: 1)");
  samp->add_option("--n", opt.n, "number of graph-point pairs (default: 100000)");

  auto* chk = app.add_subcommand(
      "check-stepsizes", "validate configured stepsizes against their window");
  chk->add_option("--config", opt.config_path, "config file (default: built-in)");

  auto* slv = app.add_subcommand("solve", "run a quasi-static circuit sweep");
  slv->add_option("experiment", experiment,
                  "leaky-ppa, amplifier, or tunnel-amplifier")
      ->required();
  slv->add_option("--config", opt.config_path, "config file (default: built-in)");
  slv->add_option("--out", opt.out_path, "sweep CSV path (default: sweep.csv)");
  slv->add_option("--trace-out", opt.trace_out,
                  "also write the final sample's iteration trace CSV");
  slv->add_flag("--dump-iterates", opt.dump_iterates,
                "include iterate components in the trace CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (emit_default) {
    const std::string text = srgc::emit_config(srgc::RunConfig{});
    if (emit_out.empty()) {
      std::fputs(text.c_str(), stdout);
      return 0;
    }
    try {
      auto out = srgc::open_output(emit_out);
      out << text;
    } catch (const srgc::io_error& e) {
      std::fprintf(stderr, "error: %s\n", e.what());
      return 3;
    }
    return 0;
  }

  if (samp->parsed()) return srgc::cmd_srg_sample(element_name, opt);
  if (chk->parsed()) return srgc::cmd_check_stepsizes(opt);
  if (slv->parsed()) return srgc::cmd_solve(experiment, opt);

  std::fputs(app.help().c_str(), stdout);
  return 2;
}
