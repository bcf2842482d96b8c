#include <doctest.h>

#include "cluster/errors.hpp"
#include "cluster/io.hpp"
#include "helpers.hpp"

using namespace th;
using io::Json;

TEST_CASE("parsing matrices") {
  const auto in = io::parse_input(R"({"matrix": [[0, 2, 0], [-2, 0, 1], [0, -1, 0]]})");
  CHECK(in.matrix == parity_start());
  CHECK_FALSE(in.quiver);
  CHECK(io::parse_input(R"({"matrix": [[0, "12345678901234567890"], ["-12345678901234567890", 0]]})")
            .matrix(0, 1) == Integer("12345678901234567890"));
  CHECK_THROWS_AS(io::parse_input(R"({"matrix": [[0, 1], [1, 0]]})"), NotSkewSymmetrizable);
  CHECK_THROWS_AS(io::parse_input(R"({"matrix": [[0, 1.5], [-1, 0]]})"), ParseError);
  CHECK_THROWS_AS(io::parse_input(R"({"matrix": 3})"), ParseError);
  CHECK_THROWS_AS(io::parse_input("[1, 2"), ParseError);
  CHECK_THROWS_AS(io::parse_input("[]"), ParseError);
}

TEST_CASE("parsing quivers") {
  const auto in = io::parse_input(
      R"({"n": 3, "arrows": [{"from": 1, "to": 2, "v": [2, 1]}, {"from": 1, "to": 3, "v": [4, 1]},
                             {"from": 3, "to": 2, "v": [1, 2]}], "d": [1, 2, 4]})");
  REQUIRE(in.quiver);
  CHECK(*in.quiver == valued_triangle());
  CHECK(in.matrix == matrix_from_quiver(valued_triangle()));
  const auto no_d = io::parse_input(R"({"n": 2, "arrows": [{"from": 1, "to": 2, "v": [3, 1]}]})");
  CHECK(no_d.quiver->symmetrizer() == std::vector<Integer>{1, 3});
  CHECK_THROWS_AS(io::parse_input(R"({"n": 2, "arrows": [{"from": 1, "to": 3, "v": [1, 1]}]})"), InvalidInput);
  CHECK_THROWS_AS(io::parse_input(R"({"n": 2, "arrows": [{"from": 1, "to": 2, "v": [2, 1]}], "d": [1, 1]})"),
                  InvalidInput);
  CHECK_THROWS_AS(io::parse_input(R"({"n": 2, "arrows": [{"from": 1, "to": 2}]})"), ParseError);
  CHECK_THROWS_AS(io::parse_input(R"({"n": 2})"), ParseError);
  CHECK_THROWS_AS(io::parse_input(R"({"n": 2, "arrows": [{"from": 1, "to": 2, "v": [1, 1]},
                                                         {"from": 1, "to": 2, "v": [1, 1]}]})"),
                  InvalidInput);
}

TEST_CASE("quiver and matrix round trips") {
  const auto j = io::quiver_to_json(valued_triangle());
  CHECK(j["d"] == Json::array({1, 2, 4}));
  CHECK(j["arrows"][0]["from"] == 1);
  CHECK(*io::parse_input_json(j).quiver == valued_triangle());
  CHECK(io::parse_input_json(io::matrix_to_json(parity_start())).matrix == parity_start());
  CHECK(io::matrix_to_json(parity_start()).dump() == R"({"matrix":[[0,2,0],[-2,0,1],[0,-1,0]]})");
}

TEST_CASE("laurent json") {
  const auto f = mul(c(2, 1) + t(2, 1) + t(2, 2), mono({-1, -1}));
  const auto j = io::laurent_to_json(f);
  CHECK(j.dump() == R"([{"e":[-1,-1],"c":"1"},{"e":[0,-1],"c":"1"},{"e":[-1,0],"c":"1"}])");
  CHECK(io::laurent_from_json(j, 2) == f);
  const auto big = mono({3, 0}, 1) * c(2, 1) + LaurentPoly::constant(2, Integer("-98765432109876543210"));
  CHECK(io::laurent_from_json(io::laurent_to_json(big), 2) == big);
  CHECK_THROWS_AS(io::laurent_from_json(Json::parse(R"([{"e":[1],"c":"1"}])"), 2), ParseError);
  CHECK_THROWS_AS(io::laurent_from_json(Json::parse(R"([{"e":[1,0],"c":"x"}])"), 2), ParseError);
}

TEST_CASE("graph export") {
  const auto g = explore(initial_seed(a2()));
  const auto j = io::graph_to_json(g);
  CHECK(j["complete"] == true);
  CHECK(j["seeds"].size() == 10);
  CHECK(j["edges"].size() == 10);
  CHECK(j["seeds"][1]["word"] == Json::array({1}));
  CHECK(io::laurent_from_json(j["seeds"][1]["cluster"][0], 2) == g.seed(1).cluster[0]);

  const auto dot = io::graph_to_dot(g);
  CHECK(dot.rfind("graph mutation_class {\n", 0) == 0);
  CHECK(dot.find("  0 -- 1 [label=\"1\"];") != std::string::npos);
  CHECK(dot.find("x1") == std::string::npos);
  const auto verbose = io::graph_to_dot(g, true);
  CHECK(verbose.find("1 [label=\"1\\n1 + x2 / (x1)\\nx2\"];") != std::string::npos);
}

TEST_CASE("certificate json round trip") {
  const auto cert = *certify_unreachable(parity_start(), parity_target());
  const auto j = io::certificate_to_json(cert);
  CHECK(j["pattern"][1][2] == "O");
  CHECK(j["justifications"].size() == 18);
  CHECK(j["justifications"][0] == Json{{"k", 1}, {"i", 1}, {"j", 2}, {"reason", "negated"}});
  const auto back = io::certificate_from_json(j);
  CHECK(verify_certificate(back));
  CHECK(back.pattern == cert.pattern);
  auto tampered = j;
  tampered["justifications"].erase(tampered["justifications"].size() - 1);
  CHECK_FALSE(verify_certificate(io::certificate_from_json(tampered)));
  tampered = j;
  tampered["target"] = tampered["start"];
  CHECK_FALSE(verify_certificate(io::certificate_from_json(tampered)));
  tampered["justifications"][3]["reason"] = "because";
  CHECK_THROWS_AS(io::certificate_from_json(tampered), ParseError);
}

TEST_CASE("group json") {
  const auto t = automorphism_group(quiver_from_matrix(b2()));
  const auto j = io::group_to_json(t);
  CHECK(j["order"] == 6);
  CHECK(j["composition"].size() == 6);
  CHECK(j["elements"][j["identity"].get<std::size_t>()]["text"] == Json::array({"x1", "x2"}));
  const auto& rel = j["relations"];
  CHECK(std::find(rel.begin(), rel.end(), "(T1T2)^3 = 1") != rel.end());
}
