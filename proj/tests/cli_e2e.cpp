// End-to-end checks of the zetaspan binary: exit-code contract, byte-stable
// payloads, header behavior, formats. The tool path comes from the build.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef ZETASPAN_CLI_PATH
#error "ZETASPAN_CLI_PATH must be defined by the build"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run(const std::string& args, const std::string& env = "") {
  const std::string out_path = std::string(ZETASPAN_CLI_PATH) + ".stdout";
  const std::string err_path = std::string(ZETASPAN_CLI_PATH) + ".stderr";
  const std::string cmd = env + " " + std::string(ZETASPAN_CLI_PATH) + " " +
                          args + " >" + out_path + " 2>" + err_path;
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WEXITSTATUS(status);
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return r;
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run("table --disc -4 --bound 10 --no-header").exit_code == 0);
  CHECK(run("verify --disc -4 --bound 100 --suite reduced-global --no-header")
            .exit_code == 0);
  // a normative divergence under a literal variant
  CHECK(run("verify --disc -4 --suite reduced-global --variant "
            "literal-present-odd --no-header")
            .exit_code == 1);
  // config and usage errors
  CHECK(run("verify --disc 10").exit_code == 2);  // 10 = 2 mod 4
  CHECK(run("verify --disc -4 --suite nonsense").exit_code == 2);
  CHECK(run("verify --disc -4 --suite ''").exit_code == 2);
  CHECK(run("verify --disc -4 --variant bogus").exit_code == 2);
  CHECK(run("table").exit_code == 2);  // neither --disc nor --d
  CHECK(run("table --disc -4 --d -1").exit_code == 2);
  CHECK(run("table --disc -4 --bound 0").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("--help").exit_code == 0);
}

TEST_CASE("documented divergence is reported with its counterexample") {
  const auto r = run(
      "verify --disc -4 --suite reduced-global --variant literal-present-odd "
      "--no-header");
  REQUIRE(r.exit_code == 1);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["pass"] == false);
  CHECK(j["records"][0]["counterexample"]["label"] == "21");
  CHECK(j["records"][0]["counterexample"]["left_card"] == "3");
  CHECK(j["records"][0]["counterexample"]["right_card"] == "1");
}

TEST_CASE("table rows") {
  const auto r = run("table --disc -4 --bound 10 --format csv --no-header");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("n,ideal_count,character,zeta_conv_character\n") == 0);
  CHECK(r.out.find("\n5,2,1,2\n") != std::string::npos);
  CHECK(r.out.find("1,1,1,1\n") != std::string::npos);
  CHECK(r.out.find("\n3,0,-1,0\n") != std::string::npos);
}

TEST_CASE("json payloads carry integers as decimal strings") {
  const auto r = run("table --disc -4 --bound 12 --no-header");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["bound"].is_string());
  for (const auto& row : j["rows"]) {
    CHECK(row["n"].is_string());
    CHECK(row["ideal_count"].is_string());
    CHECK(row["character"].is_string());
    CHECK(row["zeta_conv_character"].is_string());
  }
}

TEST_CASE("byte-identical payloads for identical configs") {
  const std::string args = "fidelity --disc -4 --bound 120 --no-header";
  const auto a = run(args);
  const auto b = run(args);
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.err.empty());

  // the header goes to stderr only, and never changes the payload
  const auto c = run("fidelity --disc -4 --bound 120");
  CHECK(c.out == a.out);
  CHECK(c.err.find("# zetaspan fidelity") == 0);

  // --out writes exactly the stdout bytes
  const std::string out_file = std::string(ZETASPAN_CLI_PATH) + ".payload";
  const auto d = run("fidelity --disc -4 --bound 120 --no-header --out " + out_file);
  REQUIRE(d.exit_code == 0);
  CHECK(slurp(out_file) == a.out);
  std::remove(out_file.c_str());
}

TEST_CASE("jobs flag and environment fallback") {
  const auto one = run("table --disc -4 --bound 300 --format csv --no-header");
  const auto two = run("table --disc -4 --bound 300 --format csv --no-header --jobs 2");
  REQUIRE(two.exit_code == 0);
  CHECK(one.out == two.out);

  const auto env = run("table --disc -4 --bound 300 --format csv --no-header",
                       "ZETASPAN_JOBS=3");
  CHECK(env.out == one.out);
  CHECK(run("table --disc -4 --bound 10", "ZETASPAN_JOBS=nope").exit_code == 2);
  CHECK(run("table --disc -4 --bound 10 --jobs 0").exit_code == 2);
}

TEST_CASE("verify all suites on a small field") {
  const auto r = run("verify --d 2 --bound 150 --suite all --no-header");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["discriminant"] == "8");
  bool saw_reduction = false;
  for (const auto& rec : j["records"]) {
    CHECK(rec["verdict"] == "Confirmed");
    if (rec["construction"] == "reduction") saw_reduction = true;
  }
  CHECK(saw_reduction);
}
