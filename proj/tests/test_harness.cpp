#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "infostab/harness.hpp"

using namespace infostab;
using namespace infostab::harness;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(INFOSTAB_BIN) + " " + args + " > cli_stdout.txt 2> cli_stderr.txt";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

CsvTable parse_csv(const std::string& text) {
  CsvTable table;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (line.back() == ',') cells.push_back("");
    if (first) {
      table.header = cells;
      first = false;
    } else {
      table.rows.push_back(cells);
    }
  }
  return table;
}

}  // namespace

TEST_CASE("config text round trip is lossless") {
  ExperimentConfig config;
  config.alpha = -1.0;
  config.family = "power";
  config.a = 2.0;
  config.b = 5.0;
  config.eps = 1e-3;
  config.noise_seed = 42;
  config.samples = 5000;
  config.margin = 1e-4;
  config.deviation_margin = 1e-3;
  config.domain = "closed";
  config.f0 = 0.0;
  config.f1 = -3.0;

  const std::string text = config.to_kv_text();
  const ExperimentConfig back = parse_config_text(text, "inline");
  CHECK(back.to_kv_text() == text);
  CHECK(back.alpha == config.alpha);
  CHECK(back.deviation_margin == config.deviation_margin);
  CHECK(back.f1 == config.f1);
}

TEST_CASE("config validation produces field-level errors") {
  CHECK_THROWS_WITH_AS(parse_config_text("alpha = 2\nfamily = banana\n", "inline"),
                       doctest::Contains("family"), Error);
  CHECK_THROWS_WITH_AS(parse_config_text("alpha = nope\n", "inline"),
                       doctest::Contains("alpha"), Error);
  CHECK_THROWS_WITH_AS(parse_config_text("unknown_key = 3\n", "inline"),
                       doctest::Contains("unknown_key"), Error);
  CHECK_THROWS_AS(parse_config_text("alpha = 0.9995\n", "inline"), Error);
  // log family requires alpha = 0
  CHECK_THROWS_AS(parse_config_text("alpha = 2\nfamily = log\n", "inline"), Error);
}

TEST_CASE("gen_instance marks exact instances and bounds realized noise") {
  ExperimentConfig config;
  config.alpha = 2.0;
  config.eps = 0.0;
  auto instance = gen_instance(config);
  CHECK(instance.manifest["exact"] == true);

  config.eps = 1e-2;
  config.noise_kind = "uniform";
  instance = gen_instance(config);
  CHECK(instance.manifest["exact"] == false);
  const auto exact = config.exact_solution();
  double worst = 0.0;
  for (int i = 1; i < 10000; ++i) {
    const double x = i / 10000.0;
    worst = std::max(worst, std::fabs(instance.f.eval(x) - exact.eval(x)));
  }
  CHECK(worst <= 1e-2);
}

TEST_CASE("sweep constants: alpha = 0 row, blanks, relation residual, negative max") {
  const auto grid = sweep_grid(-2.0, 2.0, 9, false);
  const auto csv = sweep_constants(grid);
  const auto table = parse_csv(csv);
  REQUIRE(table.header == std::vector<std::string>{"alpha", "k_alpha", "t_alpha",
                                                   "kt_relation_residual"});
  bool saw_zero = false;
  for (const auto& row : table.rows) {
    REQUIRE(row.size() == 4);
    const double a = std::stod(row[0]);
    if (a == 0.0) {
      saw_zero = true;
      CHECK(std::stod(row[1]) == 63.0);
      CHECK(row[2].empty());
      CHECK(row[3].empty());
    }
    if (a > 0.0) {
      CHECK(!row[2].empty());
      CHECK(std::stod(row[3]) <= 1e-12);
    }
    if (a < 0.0) CHECK(row[2].empty());
  }
  CHECK(saw_zero);

  // Guard-band alphas are skipped, not emitted.
  const auto near_one = sweep_constants({1.0, 1.0001, 2.0});
  CHECK(parse_csv(near_one).rows.size() == 1);

  double max_k = 0.0;
  for (const auto& row : parse_csv(sweep_constants(sweep_grid(-30.0, -1e-6, 2000, true))).rows) {
    max_k = std::max(max_k, std::stod(row[1]));
  }
  CHECK(max_k <= 15.0 + 1e-9);
  CHECK(max_k >= 14.99);
}

TEST_CASE("run_one produces a scored, sandwiched item") {
  ExperimentConfig config;
  config.alpha = -1.0;
  config.a = 2.0;
  config.b = 5.0;
  config.eps = 1e-3;
  config.samples = 6000;
  const json item = run_one(config);
  CHECK(item["status"] == "pass");
  CHECK(item["certificate"]["pass"] == true);
  CHECK(item["scoring"]["err_a"].get<double>() <= 1e-2);
  CHECK(item["oracle_vs_constructive"]["sandwich_holds"] == true);
  CHECK(item["utilization"].get<double>() < 1.0);
}

TEST_CASE("batch isolates per-config errors and stays deterministic") {
  spit("cfg_good.conf", "alpha = 2\nfamily = power\na = 3\nb = -2\neps = 1e-3\nsamples = 3000\n");
  spit("cfg_guard.conf", "alpha = 0.9995\n");
  spit("cfg_bad.conf", "alpha = oops\n");

  const std::vector<std::string> paths{"cfg_good.conf", "cfg_guard.conf", "cfg_bad.conf"};
  json s1 = run_batch_paths(paths);
  CHECK(s1["n_pass"] == 1);
  CHECK(s1["n_error"] == 2);
  CHECK(s1["n_fail"] == 0);
  CHECK(s1["pass_rate"] == 1.0);
  CHECK(s1["items"][1]["error"].get<std::string>().find("AlphaNearOne") != std::string::npos);
  CHECK(s1["items"][2]["status"] == "error");

  json s2 = run_batch_paths(paths);
  s1.erase("timestamp_unix_ms");
  s2.erase("timestamp_unix_ms");
  CHECK(s1.dump() == s2.dump());

  for (const auto& p : paths) std::remove(p.c_str());
}

TEST_CASE("cli: constants subcommand writes csv") {
  REQUIRE(run_cli("constants --alpha-min -2 --alpha-max 3 --count 11 --out cli_constants.csv") == 0);
  const auto table = parse_csv(slurp("cli_constants.csv"));
  CHECK(table.rows.size() >= 10);
  std::remove("cli_constants.csv");
}

TEST_CASE("cli: certify pass and fail exit codes") {
  CHECK(run_cli("certify --alpha 2 --input power:3,-2 --samples 4000 --report cli_cert.json") == 0);
  const json cert = json::parse(slurp("cli_cert.json"));
  CHECK(cert["pass"] == true);
  CHECK(cert["domain"] == "open");
  CHECK(cert["candidate"]["kind"] == "power");
  // Exactly the certificate fields, snake_case.
  const std::vector<std::string> expected{"alpha",  "bound",   "candidate", "domain",
                                          "eps_hat", "k_alpha", "margin",    "pass",
                                          "samples", "seed",    "sup_deviation"};
  std::vector<std::string> keys;
  for (auto it = cert.begin(); it != cert.end(); ++it) keys.push_back(it.key());
  CHECK(keys == expected);

  // A closed-domain instance with an inconsistent left endpoint must fail
  // with exit code 2.
  CHECK(run_cli("certify --alpha -1 --input power:2,5 --domain closed --f0 0.1 --f1 -3 "
                "--samples 4000") == 2);
  // Guard-band alpha is an error, exit code 1.
  CHECK(run_cli("certify --alpha 1.0001 --input power:2,5") == 1);
  std::remove("cli_cert.json");
}

TEST_CASE("cli: residual, extract, oracle-fit, entropy, recursive") {
  CHECK(run_cli("residual --alpha 0 --input log:2,-1 --samples 2000 --report cli_res.json") == 0);
  CHECK(json::parse(slurp("cli_res.json"))["eps_hat"].get<double>() <= 1e-9);

  CHECK(run_cli("extract --alpha -1 --input power:2,5 --report cli_ext.json") == 0);
  const json ext = json::parse(slurp("cli_ext.json"));
  CHECK(ext["candidate"]["a"].get<double>() == doctest::Approx(2.0));
  CHECK(ext["diagnostics"]["alt_centering_deviation"].get<double>() > 1.0);

  CHECK(run_cli("oracle-fit --alpha 2 --input power:1,4 --eps 1e-3 --report cli_fit.json") == 0);
  const json fit = json::parse(slurp("cli_fit.json"));
  CHECK(fit["sandwich_holds"] == true);

  CHECK(run_cli("entropy --p 0.5,0.25,0.125,0.125 --alpha 2") == 0);
  const json ent = json::parse(slurp("cli_stdout.txt"));
  CHECK(ent["shannon_bits"].get<double>() == doctest::Approx(1.75));

  CHECK(run_cli("recursive --alpha 2 --p 0.2,0.3,0.5") == 0);
  const json rec = json::parse(slurp("cli_stdout.txt"));
  CHECK(rec["abs_difference"].get<double>() <= 1e-12);

  for (const char* p : {"cli_res.json", "cli_ext.json", "cli_fit.json"}) std::remove(p);
}

TEST_CASE("cli: gen and batch round trip") {
  spit("cli_gen.conf",
       "alpha = -1\nfamily = power\na = 2\nb = 5\neps = 1e-3\nsamples = 3000\ndump = cli_dump.csv\n");
  REQUIRE(run_cli("gen --config cli_gen.conf --manifest cli_manifest.json") == 0);
  const json manifest = json::parse(slurp("cli_manifest.json"));
  CHECK(manifest["truth"]["a"] == 2.0);
  CHECK(manifest["exact"] == false);
  const std::string dump1 = slurp("cli_dump.csv");
  REQUIRE(run_cli("gen --config cli_gen.conf --manifest cli_manifest.json") == 0);
  CHECK(slurp("cli_dump.csv") == dump1);  // byte-identical regeneration

  REQUIRE(run_cli("batch --configs cli_gen.conf cli_gen.conf --out cli_batch.json") == 0);
  const json batch = json::parse(slurp("cli_batch.json"));
  CHECK(batch["n_pass"] == 2);
  CHECK(batch["items"][0]["certificate"]["pass"] == true);

  for (const char* p : {"cli_gen.conf", "cli_manifest.json", "cli_dump.csv", "cli_batch.json",
                        "cli_stdout.txt", "cli_stderr.txt"})
    std::remove(p);
}

TEST_CASE("cli: entropy and recursive accept csv rows") {
  spit("cli_p.csv", "0.5,0.5\n0.5,0.25,0.125,0.125\n");
  REQUIRE(run_cli("entropy --csv cli_p.csv --alpha 2") == 0);
  const json rows = json::parse(slurp("cli_stdout.txt"));
  REQUIRE(rows.is_array());
  REQUIRE(rows.size() == 2);
  CHECK(rows[0]["shannon_bits"].get<double>() == doctest::Approx(1.0));
  CHECK(rows[1]["shannon_bits"].get<double>() == doctest::Approx(1.75));

  REQUIRE(run_cli("recursive --alpha -1 --csv cli_p.csv") == 0);
  const json rec = json::parse(slurp("cli_stdout.txt"));
  REQUIRE(rec.size() == 2);
  CHECK(rec[1]["abs_difference"].get<double>() <= 1e-12);
  std::remove("cli_p.csv");
}

TEST_CASE("input specs parse builtin forms and csv tables") {
  const Alpha two(2.0);
  const auto p = parse_input_spec("power:2,5", two);
  CHECK(p.eval(0.5) == doctest::Approx(2.0 * 0.25 + 5.0 * 0.25 - 5.0));
  const auto l = parse_input_spec("log:2,-1", two);
  CHECK(l.eval(0.5) == doctest::Approx(2.0 * std::log(0.5) - 1.0));

  store_tabulated_csv(tabulate(p, 0.1, 0.9, 65), "cli_tab.csv");
  const auto t1 = parse_input_spec("tab:cli_tab.csv", two);
  const auto t2 = parse_input_spec("cli_tab.csv", two);
  CHECK(t1.eval(0.5) == t2.eval(0.5));
  CHECK(t1.eval(0.5) == doctest::Approx(p.eval(0.5)));
  std::remove("cli_tab.csv");

  CHECK_THROWS_AS(parse_input_spec("spline:1,2", two), Error);
  CHECK_THROWS_AS(parse_input_spec("power:1", two), Error);
}

TEST_CASE("reductions are invariant under the worker cap") {
  const Alpha alpha(-1.0);
  const auto f = UnitIntervalFunction::perturbed(UnitIntervalFunction::power(2.0, 5.0, alpha),
                                                 PerturbationSpec(1e-3, NoiseKind::UniformIID, 3));
  const OpenTriangleSampler sampler(6000, 1e-4, 3);
  setenv("INFOSTAB_WORKERS", "1", 1);
  const auto r1 = equation::sup_residual(f, alpha, sampler);
  setenv("INFOSTAB_WORKERS", "7", 1);
  const auto r7 = equation::sup_residual(f, alpha, sampler);
  unsetenv("INFOSTAB_WORKERS");
  CHECK(r1.eps_hat == r7.eps_hat);
  CHECK(r1.argmax_x == r7.argmax_x);
  CHECK(r1.p99 == r7.p99);
}

TEST_CASE("cli: certify honors config files with flag overrides") {
  spit("cli_cfg.conf",
       "alpha = 2\nfamily = power\na = 3\nb = -2\neps = 0\nsamples = 3000\nout = cli_cfg_cert.json\n");
  REQUIRE(run_cli("certify --config cli_cfg.conf") == 0);
  json cert = json::parse(slurp("cli_cfg_cert.json"));
  CHECK(cert["eps_hat"].get<double>() <= 1e-9);

  // The flag overrides the file's eps; everything else stays.
  REQUIRE(run_cli("certify --config cli_cfg.conf --eps 1e-3 --noise-seed 4") == 0);
  cert = json::parse(slurp("cli_cfg_cert.json"));
  CHECK(cert["eps_hat"].get<double>() > 1e-4);
  CHECK(cert["samples"] == 3000);
  CHECK(cert["pass"] == true);
  for (const char* p : {"cli_cfg.conf", "cli_cfg_cert.json"}) std::remove(p);
}

TEST_CASE("system-certify cli emits per-n rows") {
  REQUIRE(run_cli("system-certify --alpha 2 --eps 1e-3 --n-max 4 --samples 1500 "
                  "--slack-samples 1500 --report cli_sys.json") == 0);
  const json report = json::parse(slurp("cli_sys.json"));
  CHECK(report["pass"] == true);
  REQUIRE(report["rows"].size() == 2);
  CHECK(report["rows"][0]["n"] == 3);
  CHECK(report["rows"][0]["pass"] == true);
  std::remove("cli_sys.json");
}
