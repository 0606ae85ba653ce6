#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <string>
#include <sys/wait.h>

#ifndef FIBTAB_CLI_PATH
#define FIBTAB_CLI_PATH "./fibtab"
#endif

namespace {

struct run_result {
  int exit_code = -1;
  std::string out;
};

// Runs `sh -c cmd` and captures stdout.
run_result run(const std::string& cmd) {
  run_result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

const std::string cli = FIBTAB_CLI_PATH;
const std::string worked = "2^3 7^1 1^1 5^4 6^3 4^2 3^4";

}  // namespace

TEST_CASE("insert then uninsert round-trips through the CLI") {
  auto r = run(cli + " insert --k 5 '" + worked + "' --json 2>/dev/null | " + cli + " uninsert");
  CHECK(r.exit_code == 0);
  CHECK(r.out == worked + "\n");
}

TEST_CASE("CLI output is byte-identical across runs") {
  auto a = run(cli + " insert --k 5 '" + worked + "'");
  auto b = run(cli + " insert --k 5 '" + worked + "'");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("shape: 2 2 1_4 2\n", 0) == 0);
}

TEST_CASE("stats prints the reference statistics") {
  auto r = run(cli + " stats --k 5 '" + worked + "'");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "color=11 vert=30 split_P=8 split_Q=4 spin=11\n");
}

TEST_CASE("grow reports the top-right corner word") {
  auto r = run(cli + " grow --k 5 '" + worked + "'");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("[2 2 1_4 2]") != std::string::npos);
}

TEST_CASE("evacuate and unevacuate round-trip over JSON pipes") {
  const std::string p_json =
      R"({"k":5,"columns":[{"double":{"top_h":4,"top":3,"bottom":7}},)"
      R"({"double":{"top_h":2,"top":4,"bottom":6}},{"single":{"h":4,"label":5}},)"
      R"({"double":{"top_h":1,"top":1,"bottom":2}}]})";
  auto r = run("printf '%s' '" + p_json + "' | " + cli + " evacuate --json | " + cli +
               " unevacuate --json");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"top_h\":4") != std::string::npos);
  auto again = run("printf '%s' '" + r.out.substr(0, r.out.size() - 1) + "' | " + cli +
                   " render");
  CHECK(again.exit_code == 0);
  CHECK(again.out.rfind("shape: 2 2 1_4 2\n", 0) == 0);
}

TEST_CASE("class lists the eight reference permutations") {
  auto r = run(cli + " class --k 5 '4^3 5^1 2^1 1^4 3^2'");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "2^1 4^3 1^4 5^1 3^2\n"
        "2^1 4^3 5^1 1^4 3^2\n"
        "2^1 5^1 4^3 1^4 3^2\n"
        "4^3 2^1 1^4 5^1 3^2\n"
        "4^3 2^1 5^1 1^4 3^2\n"
        "4^3 5^1 2^1 1^4 3^2\n"
        "5^1 2^1 4^3 1^4 3^2\n"
        "5^1 4^3 2^1 1^4 3^2\n");
}

TEST_CASE("enumerate counts words and tableaux") {
  CHECK(run(cli + " enumerate --k 2 --rank 3 --count").out == "12\n");
  CHECK(run(cli + " enumerate --k 2 --shape 2 --standard --count").out == "2\n");
  CHECK(run(cli + " enumerate --k 2 --shape 2 --path --count").out == "2\n");
  CHECK(run(cli + " enumerate --k 2 --perms 2 --count").out == "8\n");
}

TEST_CASE("verify succeeds at small bounds") {
  auto r = run(cli + " verify --k 2 --n 3 --rank 4");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("usage and parse errors exit with 2") {
  CHECK(run(cli + " insert --k 2 '1^3' 2>/dev/null").exit_code == 2);
  CHECK(run(cli + " insert --k 2 '1^1 1^1' 2>/dev/null").exit_code == 2);
  CHECK(run(cli + " insert '1^1' 2>/dev/null").exit_code == 2);  // --k missing
  CHECK(run(cli + " nonsense 2>/dev/null").exit_code == 2);
  CHECK(run("printf 'junk' | " + cli + " render 2>/dev/null").exit_code == 2);
  CHECK(run(cli + " class --k 2 '2^1 1^2' --fiber --max-states 1 2>/dev/null").exit_code == 2);
}
