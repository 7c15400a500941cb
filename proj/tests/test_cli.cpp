// Drives the installed CLI binary end to end: subcommands, config file
// resolution, output formats, and the documented exit codes.

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#ifndef SIEVEKERNEL_CLI_PATH
#error "SIEVEKERNEL_CLI_PATH must be defined by the build"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
  const std::string cmd =
      env + " " + std::string(SIEVEKERNEL_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (size_t got = fread(buf.data(), 1, buf.size(), pipe))
    out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("constants command") {
  const RunResult r = run_cli("constants");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("alpha") != std::string::npos);
  CHECK(r.out.find("0.9606831") != std::string::npos);
  CHECK(r.out.find("threshold_inv_eps,63,") != std::string::npos);
  CHECK(r.out.find("threshold_strict_inv_eps,58,") != std::string::npos);
  CHECK(r.out.find("jr_upper,") != std::string::npos);
  CHECK(r.out.find("41/50") != std::string::npos);
  CHECK(r.out.find("81/100") != std::string::npos);
  // determinism: byte-identical across runs
  CHECK(run_cli("constants").out == r.out);
}

TEST_CASE("cn table command") {
  const RunResult r = run_cli("table cn --n-max 6 --m 200");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("n,c_n,c_n_rounded_up_2dp") != std::string::npos);
  CHECK(r.out.find("2,0.32") != std::string::npos);
  CHECK(r.out.find(",0.33\n") != std::string::npos);
  CHECK(r.out.find("# m = 200") != std::string::npos);
}

TEST_CASE("markdown format") {
  const RunResult r = run_cli("table cn --n-max 4 --m 200 --format markdown");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("| n | c_n | c_n_rounded_up_2dp |") != std::string::npos);
}

TEST_CASE("eval command") {
  const RunResult taylor = run_cli("eval --n 2 --s 3 --method taylor");
  CHECK(taylor.exit_code == 0);
  CHECK(taylor.out.find("0.072131774") != std::string::npos);

  const RunResult oracle = run_cli("eval --n 1 --s 2 --method oracle");
  CHECK(oracle.exit_code == 0);
  CHECK(oracle.out.find("= 0.5\n") != std::string::npos);

  const RunResult maj = run_cli("eval --n 4 --s 6.01 --method majorant --m 200");
  CHECK(maj.exit_code == 0);
  CHECK(maj.out.find("= 0\n") != std::string::npos);

  const RunResult bad = run_cli("eval --n 0 --s 2 --method taylor");
  CHECK(bad.exit_code == 1);
  const RunResult bad2 = run_cli("eval --n 2 --s 1.5 --method taylor");
  CHECK(bad2.exit_code == 1);
}

TEST_CASE("tau divergence exits 2") {
  const RunResult r = run_cli("table tau --eps 1/50 --n-max 20 --m 200");
  CHECK(r.exit_code == 2);
}

TEST_CASE("eps scan flags divergent rows") {
  const RunResult r = run_cli("table eps-scan --eps-list 57,100 --n-max 40 --m 200");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("57,,,,,divergent") != std::string::npos);
  CHECK(r.out.find("100,") != std::string::npos);
  CHECK(r.out.find(",yes") != std::string::npos);
}

TEST_CASE("config file and environment resolution") {
  const std::string path = "/tmp/sievekernel_test_config.txt";
  {
    std::ofstream f(path);
    f << "m = 200\nn_max = 5\n";
  }
  const RunResult r = run_cli("table cn --config " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("# m = 200") != std::string::npos);
  CHECK(r.out.find("# n_max = 5") != std::string::npos);

  const RunResult env = run_cli("table cn", "SIEVEKERNEL_CONFIG=" + path);
  CHECK(env.exit_code == 0);
  CHECK(env.out.find("# m = 200") != std::string::npos);

  // flags override the file
  const RunResult over = run_cli("table cn --config " + path + " --n-max 4");
  CHECK(over.out.find("# n_max = 4") != std::string::npos);
  std::remove(path.c_str());

  const RunResult missing = run_cli("table cn --config /tmp/does_not_exist_skc");
  CHECK(missing.exit_code == 1);
}

TEST_CASE("output file") {
  const std::string path = "/tmp/sievekernel_test_out.csv";
  const RunResult r = run_cli("table cn --n-max 4 --m 200 --out " + path);
  CHECK(r.exit_code == 0);
  std::ifstream f(path);
  REQUIRE(f.good());
  std::string first;
  std::getline(f, first);
  CHECK(first.rfind("# tool", 0) == 0);
  f.close();
  std::remove(path.c_str());
}

TEST_CASE("bad flags exit 1") {
  CHECK(run_cli("table cn --m 99").exit_code == 1);
  CHECK(run_cli("nonsense").exit_code == 1);
  CHECK(run_cli("eval --n 2 --s 3 --method bogus").exit_code == 1);
}
