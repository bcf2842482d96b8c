#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = clusterx::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

const std::string kParityStart = R"({"matrix": [[0, 2, 0], [-2, 0, 1], [0, -1, 0]]})";
const std::string kParityTarget = R"({"matrix": [[0, -2, 1], [2, 0, 0], [-1, 0, 0]]})";

}  // namespace

TEST_CASE("mutate") {
  auto r = run({"mutate", "-", "--word", "2"}, kParityStart);
  CHECK(r.code == 0);
  CHECK(r.out == "[[0,-2,2],[2,0,-1],[-2,1,0]]\n");
  CHECK(run({"mutate", "-"}, kParityStart).out == "[[0,2,0],[-2,0,1],[0,-1,0]]\n");
  CHECK(run({"mutate", "-", "--word", "2,2"}, kParityStart).out == "[[0,2,0],[-2,0,1],[0,-1,0]]\n");
  CHECK(run({"mutate", kParityStart, "-w", "[2]", "--format", "json"}).out.find("\"matrix\"") != std::string::npos);
  const auto q = run({"mutate", R"({"n": 2, "arrows": [{"from": 1, "to": 2, "v": [2, 1]}]})", "-w", "1", "--format",
                      "json"});
  CHECK(q.code == 0);
  CHECK(q.out.find("\"from\": 2") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({"mutate", "-"}, "{not json").code == 2);
  CHECK(run({"mutate", "-", "-w", "x"}, kParityStart).code == 2);
  CHECK(run({"mutate", "-"}, R"({"matrix": [[0, 1], [1, 0]]})").code == 3);
  CHECK(run({"mutate", "-", "-w", "4"}, kParityStart).code == 3);
  CHECK(run({"mutate", "/nonexistent/file.json"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"explore", "--type", "A2", "--max-seeds", "0"}).code == 2);
  CHECK(run({"explore", "--type", "nope"}).code == 3);
  CHECK(run({"autgroup", "--type", "markov", "--max-seeds", "40"}).code == 4);
  CHECK(run({"verify", "nope"}).code == 3);
  CHECK(run({"mutate", "--type", "A2", "--format", "dot"}).code == 3);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("explore summaries") {
  CHECK(run({"explore", "--type", "A2"}).out == "labeled=10 clusters=5 variables=5 complete=true positive=true\n");
  CHECK(run({"explore", "--type", "G2"}).out.find("clusters=8 variables=8 complete=true") != std::string::npos);
  const auto m = run({"explore", "--type", "markov", "--max-seeds", "100"});
  CHECK(m.code == 0);
  CHECK(m.out.find("complete=false") != std::string::npos);
  CHECK(run({"explore", "--type", "A2", "--format", "dot"}).out.find("0 -- 1") != std::string::npos);
  CHECK(run({"explore", "--type", "A2", "--format", "json"}).out.find("\"seeds\"") != std::string::npos);
}

TEST_CASE("autgroup reports") {
  const auto b = run({"autgroup", "--type", "B2"});
  CHECK(b.code == 0);
  CHECK(b.out.rfind("order=6\n", 0) == 0);
  CHECK(b.out.find("(T1T2)^3 = 1") != std::string::npos);
  const auto g = run({"autgroup", "--type", "G2"});
  CHECK(g.out.rfind("order=8\n", 0) == 0);
  CHECK(g.out.find("(T1T2)^4 = 1") != std::string::npos);
  CHECK(run({"autgroup", "--type", "A1"}).out.rfind("order=2\n", 0) == 0);
  CHECK(run({"autgroup", "--type", "B2", "--format", "json"}).out.find("\"composition\"") != std::string::npos);
}

TEST_CASE("certify verdicts") {
  const auto c = run({"certify", kParityStart, kParityTarget});
  CHECK(c.code == 0);
  CHECK(c.out.rfind("verdict=certified pattern=EEE/EEO/EOE\n", 0) == 0);
  CHECK(run({"certify", kParityStart, kParityTarget, "--format", "json"}).out.find("\"justifications\"") != std::string::npos);
  CHECK(run({"certify", kParityStart, kParityStart}).out == "verdict=reached word=[]\n");
  CHECK(run({"certify", "type:B2", R"({"matrix": [[0, -2], [1, 0]]})"}).out == "verdict=reached word=[1]\n");
  CHECK(run({"certify", "type:B2", "type:G2"}).out.rfind("verdict=certified pattern=EE/OE\n", 0) == 0);
  CHECK(run({"certify", "type:B2", R"({"matrix": [[0, 2], [-3, 0]]})"}).out == "verdict=unreachable states=2\n");
  CHECK(run({"certify", "type:markov", R"({"matrix": [[0, 4, -4], [-4, 0, 4], [4, -4, 0]]})", "--max-seeds", "50"})
            .out.rfind("verdict=", 0) == 0);
  CHECK(run({"certify", "type:A2", "type:A3"}).code == 3);
}

TEST_CASE("similar") {
  CHECK(run({"similar", "type:A3", "type:A3"}).out == "sigma=() epsilon=+1\nsigma=(1 3) epsilon=-1\n");
  CHECK(run({"similar", "type:B2", "type:G2"}).out == "none\n");
  CHECK(run({"similar", "type:B2", "type:C2", "--format", "json"}).out.find("\"similar\": true") != std::string::npos);
}

TEST_CASE("verify suites") {
  const auto r = run({"verify", "lemma312"});
  CHECK(r.code == 0);
  CHECK(r.out == "lemma312: pass 1000/1000\n");
  const auto l = run({"verify", "laurent"});
  CHECK(l.code == 0);
  CHECK(l.out.rfind("laurent: pass 4/4\n", 0) == 0);
  CHECK(run({"verify", "thm314-b2"}).out.rfind("thm314-b2: pass", 0) == 0);
  CHECK(run({"verify", "closure", "--trials", "100"}).out.rfind("closure: pass 100/100", 0) == 0);
}

TEST_CASE("expand") {
  const auto r = run({"expand", "--type", "A2", "-w", "1,2"});
  CHECK(r.code == 0);
  CHECK(r.out == "matrix=[[0,1],[-1,0]]\nx1 = 1 + x2 / (x1)\nx2 = 1 + x1 + x2 / (x1*x2)\n");
  CHECK(run({"expand", "--type", "A2", "-w", "1", "--format", "json"}).out.find("\"cluster\"") != std::string::npos);
}

TEST_CASE("determinism and output files") {
  const auto a = run({"verify", "word-transport", "--rng-seed", "7"});
  const auto b = run({"verify", "word-transport", "--rng-seed", "7"});
  CHECK(a.out == b.out);
  CHECK(run({"explore", "--type", "A3", "--format", "json"}).out == run({"explore", "--type", "A3", "--format", "json"}).out);

  const std::string path = "clusterx_cli_test_output.dot";
  const auto w = run({"explore", "--type", "B2", "--format", "dot", "--output", path});
  CHECK(w.code == 0);
  CHECK(w.out.empty());
  std::ifstream file(path);
  std::stringstream content;
  content << file.rdbuf();
  CHECK(content.str() == run({"explore", "--type", "B2", "--format", "dot"}).out);
  std::remove(path.c_str());
}
