#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "srgc/srgc.hpp"

namespace {

using namespace srgc;

std::string config_path(const std::string& name) {
  return std::string(SRGC_CONFIG_DIR) + "/" + name;
}

// Runs the installed binary through the shell; returns the process exit
// code, or -1 if it did not exit normally.
int run_cli(const std::string& args) {
  const std::string cmd =
      std::string(SRGC_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return (rc >= 0 && WIFEXITED(rc)) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  EXPECT_TRUE(in.good()) << path;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string first_line(const std::string& text) {
  return text.substr(0, text.find('\n'));
}

std::size_t count_lines(const std::string& text) {
  std::size_t n = 0;
  for (char c : text)
    if (c == '\n') ++n;
  return n;
}

void expect_config_error(const std::string& text, const std::string& needle) {
  std::istringstream in(text);
  try {
    parse_config(in);
    FAIL() << "expected config_error for: " << text;
  } catch (const config_error& e) {
    EXPECT_NE(std::string(e.what()).find(needle), std::string::npos)
        << "message '" << e.what() << "' lacks '" << needle << "'";
  }
}

std::string write_temp_config(const RunConfig& cfg, const std::string& name) {
  const std::string path = testing::TempDir() + name;
  std::ofstream out(path);
  out << emit_config(cfg);
  return path;
}

TEST(ConfigFormat, DefaultsSurviveARoundTrip) {
  const RunConfig def;
  std::istringstream in(emit_config(def));
  EXPECT_TRUE(parse_config(in) == def);
}

TEST(ConfigFormat, AwkwardValuesSurviveARoundTrip) {
  RunConfig cfg;
  cfg.v_plus = 1.0 / 3.0;
  cfg.v_in_amplitude = 0.1;
  cfg.t_end = 2.7182818284590452;
  cfg.n_samples = 7;
  cfg.alpha_r = 110.0 / 111.0;
  cfg.leakage_r = 1e-3;
  cfg.gamma = 1.0 / 180.0;
  cfg.eps = 5e-13;
  cfg.max_iter = 123456789;
  cfg.method = "ppa";
  cfg.tunnel_inverse = true;
  cfg.warm_start = true;

  std::istringstream in(emit_config(cfg));
  const RunConfig back = parse_config(in);
  EXPECT_TRUE(back == cfg);
  EXPECT_EQ(back.gamma, 1.0 / 180.0);
  EXPECT_EQ(emit_config(back), emit_config(cfg));
}

TEST(ConfigFormat, ToleratesCommentsAndWhitespace) {
  std::istringstream in(
      "# leading comment\n"
      "\n"
      "  [solver]  \n"
      "gamma=0.25# inline comment\n"
      "   tau =  12   \n"
      "\tmethod\t=\tcpa\n"
      "[circuit]\n"
      "n_samples = 3\n"
      "n_samples = 4\n");  // last assignment wins
  const RunConfig cfg = parse_config(in);
  EXPECT_EQ(cfg.gamma, 0.25);
  EXPECT_EQ(cfg.tau, 12.0);
  EXPECT_EQ(cfg.method, "cpa");
  EXPECT_EQ(cfg.n_samples, 4u);
  EXPECT_EQ(cfg.v_plus, 5.0);  // untouched keys keep defaults
}

TEST(ConfigFormat, RejectsMalformedInputWithLineNumbers) {
  expect_config_error("[boiler]\n", "line 1");
  expect_config_error("[boiler]\n", "unknown section");
  expect_config_error("# ok\n[solver]\nturbo = 1\n", "line 3");
  expect_config_error("[solver]\nturbo = 1\n", "unknown key 'turbo'");
  expect_config_error("[circuit]\ngamma = 1\n", "unknown key 'gamma'");
  expect_config_error("gamma = 1\n", "unknown key");  // key before any section
  expect_config_error("[solver]\ngamma\n", "expected key = value");
  expect_config_error("[solver\n", "unterminated section");
  expect_config_error("[solver]\ngamma = fast\n", "non-numeric");
  expect_config_error("[solver]\ngamma =\n", "non-numeric");
  expect_config_error("[solver]\ngamma = inf\n", "finite");
  expect_config_error("[solver]\ngamma = nan\n", "finite");
  expect_config_error("[solver]\nmax_iter = -5\n", "nonnegative integer");
  expect_config_error("[solver]\nmax_iter = 1e3\n", "nonnegative integer");
  expect_config_error("[solver]\nwarm_start = yes\n", "true or false");
  expect_config_error("[solver]\nmethod = newton\n", "ppa or cpa");
  expect_config_error("[solver]\ngamma = 0.1 0.2\n", "non-numeric");

  EXPECT_THROW(parse_config_file("/no/such/dir/x.cfg"), config_error);
}

TEST(ShippedConfigs, ParseToTheBenchmarkValues) {
  const RunConfig fig4 = parse_config_file(config_path("fig4.cfg"));
  EXPECT_EQ(fig4.method, "ppa");
  EXPECT_EQ(fig4.gamma, 10.0);
  EXPECT_EQ(fig4.leakage_r, 10.0);
  EXPECT_EQ(fig4.alpha_r, 110.0 / 111.0);
  EXPECT_EQ(fig4.alpha_f, 10.0 / 11.0);
  EXPECT_EQ(fig4.n_samples, 200u);
  EXPECT_EQ(fig4.t_end, 1.0);

  const RunConfig fig5 = parse_config_file(config_path("fig5.cfg"));
  EXPECT_EQ(fig5.method, "cpa");
  EXPECT_EQ(fig5.gamma, 0.001);
  EXPECT_EQ(fig5.tau, 700.0);
  EXPECT_EQ(fig5.lambda, 1.0);
  EXPECT_EQ(fig5.r_c, 150.0);
  EXPECT_EQ(fig5.r_e, 30.0);
  EXPECT_EQ(fig5.leakage_r, 100.0);
  EXPECT_FALSE(fig5.tunnel_inverse);
  EXPECT_EQ(fig5.n_samples, 500u);

  const RunConfig fig7 = parse_config_file(config_path("fig7.cfg"));
  EXPECT_EQ(fig7.gamma, 1.0 / 180.0);
  EXPECT_EQ(fig7.tau, 160.0);
  EXPECT_EQ(fig7.lambda, 0.25);
  EXPECT_TRUE(fig7.tunnel_inverse);
  EXPECT_EQ(fig7.r1, 100.0);
  EXPECT_EQ(fig7.r2, 900.0);
  EXPECT_EQ(fig7.vbar, 5.0);
  EXPECT_EQ(fig7.r_e, 100.0);
}

TEST(ShippedConfigs, StepsizesSitInsideTheirWindows) {
  const RunConfig fig4 = parse_config_file(config_path("fig4.cfg"));
  EXPECT_GT(fig4.gamma, ppa_stepsize_floor(fig4.leakage_r));

  const RunConfig fig5 = parse_config_file(config_path("fig5.cfg"));
  const MonotoneWindow mono =
      cpa_window_monotone(std::min(fig5.r_e, fig5.r_c), fig5.leakage_r);
  EXPECT_TRUE(mono.contains(fig5.gamma, fig5.tau, fig5.lambda));

  const RunConfig fig7 = parse_config_file(config_path("fig7.cfg"));
  const SemiWindow semi = cpa_window_semi(fig7.leakage_r);
  EXPECT_TRUE(semi.contains(fig7.gamma, fig7.tau, fig7.lambda));
}

TEST(CliProcess, HelpAndUsageExitCodes) {
  EXPECT_EQ(run_cli("--help"), 0);
  EXPECT_EQ(run_cli(""), 2);                     // no subcommand: usage
  EXPECT_EQ(run_cli("--no-such-flag"), 2);
  EXPECT_EQ(run_cli("srg-sample"), 2);           // missing element
  EXPECT_EQ(run_cli("srg-sample frobnicator --n 10"), 2);
  EXPECT_EQ(run_cli("solve perpetual-motion"), 2);
  EXPECT_EQ(run_cli("srg-sample identity --n 0"), 2);
  EXPECT_EQ(run_cli("solve amplifier --config /no/such/file.cfg"), 2);
}

TEST(CliProcess, EmitDefaultConfigRoundTrips) {
  const std::string path = testing::TempDir() + "default.cfg";
  ASSERT_EQ(run_cli("--emit-default-config --out " + path), 0);
  EXPECT_TRUE(parse_config_file(path) == RunConfig{});
  EXPECT_EQ(run_cli("--emit-default-config"), 0);  // stdout variant
  EXPECT_EQ(run_cli("--emit-default-config --out /no/such/dir/x.cfg"), 3);
}

TEST(CliProcess, SrgSampleIsByteStableAndAnnotated) {
  const std::string a = testing::TempDir() + "cloud_a.csv";
  const std::string b = testing::TempDir() + "cloud_b.csv";
  ASSERT_EQ(run_cli("srg-sample transistor --n 2000 --seed 9 --out " + a), 0);
  ASSERT_EQ(run_cli("srg-sample transistor --n 2000 --seed 9 --out " + b), 0);
  const std::string text_a = slurp(a);
  EXPECT_EQ(text_a, slurp(b));
  EXPECT_EQ(first_line(text_a), "re,im");
  EXPECT_NE(text_a.find("# includes_infinity=true"), std::string::npos);

  const std::string c = testing::TempDir() + "cloud_c.csv";
  ASSERT_EQ(run_cli("srg-sample tunnel --n 500 --out " + c), 0);
  EXPECT_NE(slurp(c).find("# includes_infinity=false"), std::string::npos);

  EXPECT_EQ(run_cli("srg-sample identity --n 10 --out /no/such/dir/c.csv"), 3);
}

TEST(CliProcess, SolveWritesTheSweepCsv) {
  const std::string out = testing::TempDir() + "fig5_sweep.csv";
  ASSERT_EQ(run_cli("solve amplifier --config " + config_path("fig5.cfg") +
                    " --out " + out),
            0);
  const std::string text = slurp(out);
  EXPECT_EQ(first_line(text), "t,i_C,i_E,v1,v2,iters,status");
  EXPECT_EQ(count_lines(text), 501u);  // header + one row per sample
  EXPECT_NE(text.find(",converged"), std::string::npos);
  EXPECT_EQ(text.find("v_tunnel"), std::string::npos);
}

TEST(CliProcess, TunnelSolveAddsTheBranchColumnAndTrace) {
  const std::string out = testing::TempDir() + "fig7_sweep.csv";
  const std::string trace = testing::TempDir() + "fig7_trace.csv";
  ASSERT_EQ(run_cli("solve tunnel-amplifier --config " +
                    config_path("fig7.cfg") + " --out " + out +
                    " --trace-out " + trace),
            0);
  EXPECT_EQ(first_line(slurp(out)), "t,i_C,i_E,v1,v2,v_tunnel,iters,status");
  EXPECT_EQ(first_line(slurp(trace)), "k,rel_step");
}

TEST(CliProcess, DumpIteratesWidensTheTrace) {
  RunConfig cfg = parse_config_file(config_path("fig5.cfg"));
  cfg.n_samples = 3;
  const std::string path = write_temp_config(cfg, "fig5_small.cfg");
  const std::string out = testing::TempDir() + "small_sweep.csv";
  const std::string trace = testing::TempDir() + "small_trace.csv";
  ASSERT_EQ(run_cli("solve amplifier --config " + path + " --out " + out +
                    " --trace-out " + trace + " --dump-iterates"),
            0);
  // CPA stacks (i, v) into one four-component iterate.
  EXPECT_EQ(first_line(slurp(trace)), "k,rel_step,x0,x1,x2,x3");
}

TEST(CliProcess, ExperimentAndConfigMustAgree) {
  EXPECT_EQ(run_cli("solve tunnel-amplifier --config " +
                    config_path("fig5.cfg")),
            2);
  EXPECT_EQ(run_cli("solve amplifier --config " + config_path("fig7.cfg")), 2);
  EXPECT_EQ(run_cli("solve leaky-ppa --config " + config_path("fig5.cfg")), 2);
  EXPECT_EQ(run_cli("solve amplifier --config " + config_path("fig4.cfg")), 2);
}

TEST(CliProcess, StepsizeOutsideItsWindowFailsTheRun) {
  RunConfig cfg = parse_config_file(config_path("fig7.cfg"));
  cfg.gamma = 0.001;  // below the semimonotone window (and the branch solve)
  const std::string path = write_temp_config(cfg, "fig7_bad_gamma.cfg");
  const std::string out = testing::TempDir() + "bad_gamma_sweep.csv";
  EXPECT_EQ(run_cli("check-stepsizes --config " + path), 1);
  EXPECT_EQ(run_cli("solve tunnel-amplifier --config " + path + " --out " + out),
            1);
}

TEST(CliProcess, CheckStepsizesAcceptsTheShippedConfigs) {
  EXPECT_EQ(run_cli("check-stepsizes --config " + config_path("fig4.cfg")), 0);
  EXPECT_EQ(run_cli("check-stepsizes --config " + config_path("fig5.cfg")), 0);
  EXPECT_EQ(run_cli("check-stepsizes --config " + config_path("fig7.cfg")), 0);
  EXPECT_EQ(run_cli("check-stepsizes --config /no/such/file.cfg"), 2);
}

}  // namespace
