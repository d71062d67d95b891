#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "parhyp/cli.hpp"

using json = nlohmann::json;

namespace {

std::string cli_path() {
  const char* p = std::getenv("PARHYP_CLI");
  REQUIRE(p != nullptr);
  return p;
}

std::string data_path(const std::string& name) {
  const char* d = std::getenv("PARHYP_DATA");
  REQUIRE(d != nullptr);
  return std::string(d) + "/" + name;
}

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = cli_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

// In-process dispatch used where streams matter.
int run_direct(const std::vector<std::string>& args, std::string* out) {
  std::ostringstream o, e;
  int code = parhyp::run_command(args, o, e);
  if (out) *out = o.str();
  return code;
}

}  // namespace

TEST_CASE("circuits subcommand lists normalized circuits") {
  RunResult r = run("circuits " + data_path("example-k2n4.json"));
  REQUIRE(r.code == 0);
  json doc = json::parse(r.out);
  REQUIRE(doc["circuits"].size() == 4);
  CHECK(doc["circuits"][0]["indices"] == json({1, 2, 3}));
  CHECK(doc["circuits"][0]["lambda"] == json({1, 1, -1}));
  CHECK(doc["circuits"][2]["lambda"] == json({2, -1, -1}));
}

TEST_CASE("good-prime verdicts and exit codes") {
  RunResult bad = run("good-prime -p 2 " + data_path("example-k2n4.json"));
  CHECK(bad.code == 2);
  json doc = json::parse(bad.out);
  CHECK(doc["good"] == false);
  CHECK(doc["certificate"].get<std::string>().find("{3,4}") !=
        std::string::npos);
  RunResult good = run("good-prime -p 5 " + data_path("example-k2n4.json"));
  CHECK(good.code == 0);
  CHECK(json::parse(good.out)["good"] == true);
}

TEST_CASE("solve emits a verified solution document") {
  RunResult r = run("solve -p 5 " + data_path("example-k1n3.json"));
  REQUIRE(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["verified"] == true);
  CHECK(doc["A"] == json({2, 2, 2}));
  REQUIRE(doc["solution"].size() == 3);
  for (auto& [key, poly] : doc["solution"].items()) {
    CHECK(poly.size() == 3);  // three linear terms per coordinate
    for (auto& term : poly) {
      int deg = 0;
      for (auto& e : term["exp"]) deg += e.get<int>();
      CHECK(deg <= 12);
    }
  }
}

TEST_CASE("output is byte-identical across runs") {
  std::string a, b;
  std::vector<std::string> args = {"solve", "-p", "7",
                                   data_path("example-k1n3.json")};
  CHECK(run_direct(args, &a) == 0);
  CHECK(run_direct(args, &b) == 0);
  CHECK(a == b);
  CHECK(!a.empty());
}

TEST_CASE("solve then verify round-trips through a file") {
  std::string sol_file = "cli_roundtrip_solution.json";
  RunResult s = run("solve -p 5 -o " + sol_file + " " +
                    data_path("example-k1n3.json"));
  REQUIRE(s.code == 0);
  RunResult v = run("verify -p 5 --solution " + sol_file + " " +
                    data_path("example-k1n3.json"));
  CHECK(v.code == 0);
  CHECK(json::parse(v.out)["passed"] == true);
  RunResult vs = run("verify -p 5 --mode sampled --seed 9 --samples 10 "
                     "--solution " + sol_file + " " +
                     data_path("example-k1n3.json"));
  CHECK(vs.code == 0);
  // corrupt one coefficient and watch verification fail with exit 1
  json doc;
  {
    std::ifstream in(sol_file);
    in >> doc;
  }
  doc["solution"]["1"][0]["coeff"] =
      (doc["solution"]["1"][0]["coeff"].get<int>() + 1) % 5;
  {
    std::ofstream out(sol_file);
    out << doc.dump();
  }
  RunResult bad = run("verify -p 5 --solution " + sol_file + " " +
                      data_path("example-k1n3.json"));
  CHECK(bad.code == 1);
  CHECK(json::parse(bad.out)["passed"] == false);
  std::remove(sol_file.c_str());
}

TEST_CASE("solve honors expansion point and labels") {
  RunResult r = run("solve -p 5 --q 1 --l 2 " + data_path("example-k1n3.json"));
  REQUIRE(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["q"] == json({1}));
  CHECK(doc["l"] == json({2}));
  CHECK(doc["verified"] == true);
}

TEST_CASE("hamiltonian dump") {
  RunResult r = run("hamiltonian -p 7 --x 1,2,4 " +
                    data_path("example-k1n3.json"));
  REQUIRE(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["basis"] == json({"1", "2", "3"}));
  REQUIRE(doc["matrices"].size() == 3);
  for (auto& [name, m] : doc["matrices"].items()) {
    REQUIRE(m.size() == 3);
    for (auto& row : m) REQUIRE(row.size() == 3);
  }
  // discriminant point is a config error
  RunResult bad = run("hamiltonian -p 7 --x 1,1,4 " +
                      data_path("example-k1n3.json"));
  CHECK(bad.code == 2);
}

TEST_CASE("count subcommand checks the point-count identity") {
  RunResult r = run("count -p 5 --x 0,1,2 " + data_path("example-k1n3.json"));
  REQUIRE(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["match"] == true);
  CHECK(doc["points"].get<int>() > 0);
  CHECK(doc["integrals"].size() == 3);
  CHECK(doc["solution_values"].size() == 3);
  RunResult c3 = run("count -p 7 --x 0,2,5 " +
                     data_path("example-kappa3.json"));
  CHECK(c3.code == 0);
  CHECK(json::parse(c3.out)["match"] == true);
}

TEST_CASE("bethe subcommand reports eigen data and orthogonality") {
  RunResult r = run("bethe -p 7 --x 1,2,4 " + data_path("example-k1n3.json"));
  REQUIRE(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["orthogonality"] == "pass");
  for (auto& s : doc["solutions"]) {
    CHECK(s["t0"].size() == 1);
    CHECK(s["eigenvalues"].size() == 3);
    CHECK(s["vector"].size() == 3);
  }
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run("frobnicate").code == 2);
  CHECK(run("solve " + data_path("example-k1n3.json")).code == 2);  // no -p
  CHECK(run("solve -p 6 " + data_path("example-k1n3.json")).code == 2);
  CHECK(run("solve -p 5 /nonexistent.json").code == 2);
  CHECK(run("bethe -p 7 --x 1,1,4 " + data_path("example-k1n3.json")).code ==
        2);  // on the discriminant
}

TEST_CASE("malformed arrangement files are rejected") {
  std::string f = "cli_bad_family.json";
  {
    std::ofstream out(f);
    out << "{\"k\":1,\"n\":2,\"b\":[[1]],\"a\":[-1,-1],\"kappa\":2}";
  }
  CHECK(run("circuits " + f).code == 2);
  std::remove(f.c_str());
}
