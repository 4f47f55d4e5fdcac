#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "demazure/cli_app.hpp"
#include "demazure/crystal.hpp"

using namespace demazure;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& contents) {
    char name[] = "/tmp/demazure-test-XXXXXX";
    int fd = mkstemp(name);
    REQUIRE(fd >= 0);
    close(fd);
    path = name;
    std::ofstream f(path);
    f << contents;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("demazure command") {
  RunResult r = run({"demazure", "--s", "1", "--t", "1", "--wn", "-2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("size: 6") != std::string::npos);
  CHECK(r.out.find("formula: 6") != std::string::npos);
  CHECK(r.out.find("agreement: PASS") != std::string::npos);

  RunResult r2 = run({"demazure", "--s", "0", "--t", "1", "--wn", "+1"});
  CHECK(r2.code == 0);
  CHECK(r2.out.find("size: 1") != std::string::npos);

  RunResult r3 = run({"demazure", "--s", "1", "--t", "0", "--word", "1,1"});
  CHECK(r3.code == 2);
  CHECK(r3.err.find("REDUCED_WORD_REQUIRED") != std::string::npos);

  // identical invocations produce byte-identical output
  RunResult again = run({"demazure", "--s", "1", "--t", "1", "--wn", "-2"});
  CHECK(again.out == r.out);
}

TEST_CASE("word flag accepts json arrays and render draws the extremal") {
  RunResult a = run({"demazure", "--s", "1", "--t", "1", "--word", "[0,1]"});
  RunResult b = run({"demazure", "--s", "1", "--t", "1", "--word", "0,1"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  RunResult r = run({"demazure", "--s", "1", "--t", "1", "--wn", "-2",
                     "--render", "ascii"});
  CHECK(r.code == 0);
  CHECK(r.out.find("extremal element") != std::string::npos);
  CHECK(r.out.find("wall 0") != std::string::npos);

  RunResult j = run({"demazure", "--s", "1", "--t", "1", "--wn", "-2",
                     "--render", "json"});
  CHECK(j.out.find("\"walls\"") != std::string::npos);
}

TEST_CASE("character command") {
  RunResult r = run({"character", "--s", "0", "--t", "1", "--wn", "-2"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "0,1 | 0,0 | 1\n"
        "0,1 | 0,1 | 1\n"
        "0,1 | 1,1 | 1\n"
        "0,1 | 2,1 | 1\n");
}

TEST_CASE("graph command") {
  RunResult dot = run({"graph", "--s", "0", "--t", "1", "--depth", "2",
                       "--format", "dot"});
  CHECK(dot.code == 0);
  CHECK(dot.out.find("digraph crystal {") != std::string::npos);
  CHECK(dot.out.find("[label=1]") != std::string::npos);

  RunResult js = run({"graph", "--s", "0", "--t", "1", "--depth", "3",
                      "--format", "json"});
  CHECK(js.code == 0);
  CrystalGraph g = import_graph_json(js.out);
  CHECK(g.nodes.size() == 5);
}

TEST_CASE("extremal command") {
  RunResult r = run({"extremal", "--d", "1,1", "--maxlen", "0"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "w | v_w | dim\n"
        "e | 0,0 | 0\n");

  RunResult r2 = run({"extremal", "--d", "1,1", "--maxlen", "2"});
  CHECK(r2.code == 0);
  CHECK(r2.out.find("r_0 r_1 | 3,1 | 0") != std::string::npos);

  RunResult bad = run({"extremal", "--d", "1,1,1", "--maxlen", "1"});
  CHECK(bad.code == 2);
}

TEST_CASE("quiver-check command") {
  TempFile rep(R"({
    "graph": {"vertices": 2, "edges": [[0,1],[0,1]]},
    "v": [0,1], "d": [0,1],
    "t": {"1": [[1]]}})");
  RunResult r = run({"quiver-check", "--rep", rep.path, "--wn", "-1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("moment residual zero: v0=yes v1=yes") != std::string::npos);
  CHECK(r.out.find("nilpotency order: 1") != std::string::npos);
  CHECK(r.out.find("stable: yes") != std::string::npos);
  CHECK(r.out.find("demazure member (w = r_1): true") != std::string::npos);

  RunResult plus = run({"quiver-check", "--rep", rep.path, "--wn", "+1"});
  CHECK(plus.code == 0);
  CHECK(plus.out.find("demazure member (w = r_0): false") != std::string::npos);

  TempFile cycle(R"({
    "graph": {"vertices": 2, "edges": [[0,1],[0,1]]},
    "v": [1,1], "d": [0,0],
    "x": {"0": [[1]], "1": [[1]]}})");
  RunResult r2 = run({"quiver-check", "--rep", cycle.path});
  CHECK(r2.code == 0);
  CHECK(r2.out.find("nilpotency order: none") != std::string::npos);

  TempFile bad(R"({
    "graph": {"vertices": 2, "edges": [[0,1],[0,1]]},
    "v": [1,1], "d": [1,1],
    "x": {"0": [[1]], "2": [[1]], "1": [[1]], "3": [[1]]},
    "t": {"0": [[1]], "1": [[1]]}})");
  RunResult r3 = run({"quiver-check", "--rep", bad.path, "--wn", "-1"});
  CHECK(r3.code == 2);
  CHECK(r3.err.find("NOT_A_VARIETY_POINT") != std::string::npos);

  TempFile malformed("{");
  CHECK(run({"quiver-check", "--rep", malformed.path}).code == 2);

  CHECK(run({"quiver-check", "--rep", rep.path, "--s", "9", "--t", "9"}).code ==
        2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"demazure", "--s", "1", "--t", "1"}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
}
