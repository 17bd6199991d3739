#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

// Runs the workbench binary through the shell, capturing stdout (append
// "2>&1" to the arguments to fold stderr in).
RunResult run_cli(const std::string& args, const std::string& env = "") {
  std::string cmd = env.empty() ? "" : env + " ";
  cmd += CZLAB_BIN;
  cmd += " " + args;
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string tmp_json(const char* tag) {
  return "/tmp/czlab_cli_" + std::to_string(getpid()) + "_" + tag + ".json";
}

}  // namespace

TEST_CASE("eval prints canonical values") {
  auto r = run_cli("eval \"(2,3)*(1,4)\"");
  CHECK(r.status == 0);
  CHECK(r.out == "(2,6)\n");
  auto b = run_cli("eval \"rpre (singleton (0,0)) (0,0) == up (0,0)\"");
  CHECK(b.status == 0);
  CHECK(b.out == "true\n");
  auto reg = run_cli("eval \"up (0,0) & down (0,0)\"");
  CHECK(reg.status == 0);
  CHECK(reg.out == "{x in [0,0]; y in [0,0]; d in [0,0]}\n");
}

TEST_CASE("eval enumerates regions in the display window") {
  auto bare = run_cli("eval \"up (3,3)\" --window");
  CHECK(bare.status == 0);
  CHECK(bare.out.find("points in -8..8,-8..8 (12):\n") != std::string::npos);
  CHECK(bare.out.find("(-8,-8)\n") != std::string::npos);
  CHECK(bare.out.find("(3,3)\n") != std::string::npos);
  auto sized = run_cli("eval \"up (3,3)\" --window -10..10,-10..10");
  CHECK(sized.status == 0);
  CHECK(sized.out.find("points in -10..10,-10..10 (14):\n") !=
        std::string::npos);
  // Elements and booleans ignore the flag.
  auto elem = run_cli("eval \"(1,1)*(1,1)\" --window");
  CHECK(elem.status == 0);
  CHECK(elem.out == "(1,1)\n");
}

TEST_CASE("single checks run with parameters") {
  auto r = run_cli("check axioms --params window=4");
  CHECK(r.status == 0);
  CHECK(r.out.find("axioms: PASS (window=4)") != std::string::npos);
  CHECK(r.out.find("1/1 checks passed\n") != std::string::npos);
}

TEST_CASE("the full suite passes and reports thirteen checks") {
  auto r = run_cli("check all");
  CHECK(r.status == 0);
  CHECK(r.out.find("13/13 checks passed\n") != std::string::npos);
  CHECK(r.out.rfind("axioms: PASS", 0) == 0);
  CHECK(r.out.find("lemma-3-5: PASS") != std::string::npos);
}

TEST_CASE("json reports are byte-identical across job counts and golden") {
  std::string p1 = tmp_json("j1"), p8 = tmp_json("j8");
  auto r1 = run_cli("check all --jobs 1 --json " + p1);
  auto r8 = run_cli("check all --jobs 8 --json " + p8);
  REQUIRE(r1.status == 0);
  REQUIRE(r8.status == 0);
  std::string t1 = slurp(p1), t8 = slurp(p8);
  CHECK(t1 == t8);
  std::string golden = slurp(std::string(CZLAB_GOLDEN_DIR) +
                             "/check_all.json");
  CHECK(t1 == golden);
  std::remove(p1.c_str());
  std::remove(p8.c_str());
}

TEST_CASE("json schema carries seed, params, and zeroed timing") {
  std::string path = tmp_json("single");
  auto r = run_cli("check axioms --params window=4 --seed 7 --json " + path);
  REQUIRE(r.status == 0);
  auto doc = nlohmann::json::parse(slurp(path));
  CHECK(doc.at("schema") == 1);
  CHECK(doc.at("seed") == 7);
  REQUIRE(doc.at("reports").size() == 1);
  const auto& rep = doc.at("reports")[0];
  CHECK(rep.at("check_id") == "axioms");
  CHECK(rep.at("verdict") == "PASS");
  CHECK(rep.at("params").at("window") == "4");
  CHECK(rep.at("elapsed_ms") == 0);
  std::remove(path.c_str());
}

TEST_CASE("mutation self-test fails with a replayable witness") {
  auto r = run_cli("check axioms --mutate 2>&1");
  CHECK(r.status == 1);
  CHECK(r.out.find("axioms: FAIL") != std::string::npos);
  CHECK(r.out.find("witness: ") != std::string::npos);
  CHECK(r.out.find("0/1 checks passed\n") != std::string::npos);
  auto all = run_cli("check all --mutate 2>&1");
  CHECK(all.status == 1);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("check nope 2>&1").status == 2);
  CHECK(run_cli("eval \"(2,\" 2>&1").status == 2);
  CHECK(run_cli("eval \"(2,\" 2>&1").out.find("error: 1:4:") !=
        std::string::npos);
  CHECK(run_cli("check axioms --params window=-3 2>&1").status == 2);
  CHECK(run_cli("check axioms --params bogus=1 2>&1").status == 2);
  CHECK(run_cli("check axioms --params noequals 2>&1").status == 2);
  CHECK(run_cli("check all --params window=4 2>&1").status == 2);
  CHECK(run_cli("isolated tau9 --window 0..1,0..1 2>&1").status == 2);
  CHECK(run_cli("isolated tauB --window 5..1,0..1 2>&1").status == 2);
  CHECK(run_cli("witness shift tauB SIDEWAYS --at \"(1,1)\" --by \"(0,1)\" "
                "2>&1").status == 2);
  CHECK(run_cli("witness shift tauB LEFT --at \"(1,1)\" --by \"(0,1)\" "
                "--k 0 2>&1").status == 2);
  CHECK(run_cli("2>&1").status == 2);
}

TEST_CASE("resource caps exit 3") {
  CHECK(run_cli("check axioms --params window=2000 2>&1").status == 3);
  CHECK(run_cli("eval E --window -9999..9999,-9999..9999 2>&1",
                "CZLAB_MAX_POINTS=10").status == 3);
  CHECK(run_cli("isolated tauB --window -9999..9999,-9999..9999 2>&1",
                "CZLAB_MAX_POINTS=10").status == 3);
  // The cap itself is validated strictly.
  CHECK(run_cli("eval E --window 2>&1", "CZLAB_MAX_POINTS=abc").status == 2);
  CHECK(run_cli("eval E --window 2>&1", "CZLAB_MAX_POINTS=0").status == 2);
  // A generous cap admits the same window the default allows.
  CHECK(run_cli("eval \"singleton (0,0)\" --window",
                "CZLAB_MAX_POINTS=1000000").status == 0);
}

TEST_CASE("isolated listings match the closed forms") {
  auto wb = run_cli("isolated tauB --window -2..2,-2..2");
  CHECK(wb.status == 0);
  CHECK(wb.out.find("count: 15\n") != std::string::npos);
  CHECK(wb.out.find("(0,2)\n") != std::string::npos);
  CHECK(wb.out.find("(1,") == std::string::npos);
  auto t1 = run_cli("isolated tau1 --window -5..5,-5..5");
  CHECK(t1.status == 0);
  CHECK(t1.out == "count: 0\n");
  auto wd = run_cli("isolated tauBd --window -2..2,-2..2");
  CHECK(wd.status == 0);
  CHECK(wd.out.find("count: 15\n") != std::string::npos);
}

TEST_CASE("shift witnesses render verdicts with certificates") {
  auto bad = run_cli(
      "witness shift tauB LEFT --at \"(1,1)\" --by \"(0,1)\" --k 1");
  CHECK(bad.status == 0);
  CHECK(bad.out.find("family: tauB\n") != std::string::npos);
  CHECK(bad.out.find("side: LEFT\n") != std::string::npos);
  CHECK(bad.out.find("at: (1,1)\n") != std::string::npos);
  CHECK(bad.out.find("by: (0,1)\n") != std::string::npos);
  CHECK(bad.out.find("verdict: discontinuous\n") != std::string::npos);
  CHECK(bad.out.find("first failing level: 1\n") != std::string::npos);
  CHECK(bad.out.find("certificate: {") != std::string::npos);
  auto good = run_cli(
      "witness shift tauB RIGHT --at \"(1,1)\" --by \"(2,0)\"");
  CHECK(good.status == 0);
  CHECK(good.out.find("verdict: continuous-up-to 6\n") != std::string::npos);
  CHECK(good.out.find(
            "witness: n(1)=1 n(2)=2 n(3)=3 n(4)=4 n(5)=5 n(6)=6\n") !=
        std::string::npos);
}

TEST_CASE("solve prints the symbolic solution region") {
  auto two = run_cli(
      "solve --left \"(0,2)\" --right \"(3,0)\" --target \"(0,0)\"");
  CHECK(two.status == 0);
  CHECK(two.out == "{x in [-inf,2]; y in [-inf,3]; d in [-1,-1]}\n");
  auto right = run_cli("solve --right \"(3,0)\" --target \"(0,0)\"");
  CHECK(right.status == 0);
  CHECK(right.out == "{x in [-inf,0]; y in [-inf,3]; d in [-3,-3]}\n");
  auto left = run_cli("solve --left \"(0,2)\" --target \"(0,0)\"");
  CHECK(left.status == 0);
  CHECK(left.out == "{x in [-inf,2]; y in [-inf,0]; d in [2,2]}\n");
  auto none = run_cli("solve --target \"(4,-4)\"");
  CHECK(none.status == 0);
  CHECK(none.out == "{x in [4,4]; y in [-4,-4]; d in [8,8]}\n");
}
