#include "catch_amalgamated.hpp"

#include "support/oracles.hpp"
#include "ybe/io.hpp"
#include "ybe/ybe.hpp"

using namespace ybe;
using Catch::Matchers::ContainsSubstring;

namespace {
  std::string data(std::string const& name) {
    return oracle::read_file(std::string(YBE_DATA) + "/" + name);
  }
}  // namespace

TEST_CASE("solution files round trip", "[io]") {
  for (auto const& S : {five_point_degenerate(), clamped_successor(3),
                        projection_solution(1), chain_with_twin(4)}) {
    auto const text = io::print_solution(S);
    auto const back = io::parse_solution(text);
    CHECK(back == S);
    CHECK(io::print_solution(back) == text);
  }
  auto const list = sample_solutions(3, 10, 1);
  CHECK(io::parse_solution_list(io::print_solution_list(list)) == list);
  CHECK(io::parse_solution_list(io::print_solution_list({})).empty());
}

TEST_CASE("shipped data files", "[io]") {
  auto const five = io::parse_input(data("five_point.json"));
  REQUIRE(five.solution);
  CHECK(*five.solution == five_point_degenerate());
  CHECK(five.label(2) == "c");
  CHECK(io::parse_solution(data("clamped_successor_4.json")) == clamped_successor(4));
  CHECK(io::parse_solution(data("swap_3.json")) == projection_solution(3));
  CHECK(io::parse_solution(data("singleton.json")).size() == 1);

  auto const alg = io::parse_input(data("two_ops_6.json"));
  CHECK(alg.algebra.size() == 6);
  CHECK(alg.algebra.number_of_ops() == 2);
  CHECK(alg.algebra.op(1).curry_side() == CurrySide::right);
  CHECK(alg.label(3) == "3");
  CHECK(io::print_algebra(alg.algebra) == data("two_ops_6.json"));
}

TEST_CASE("algebra files", "[io]") {
  auto const in = io::parse_input(R"({"n": 2, "labels": ["p", "q"],
      "ops": [{"name": "f", "table": [[0, 1], [1, 1]]},
              {"name": "g", "curry": "right", "table": [[1, 1], [0, 0]]},
              {"name": "h", "curry": "left", "table": [[0, 0], [0, 0]]}]})");
  CHECK_FALSE(in.solution);
  CHECK(in.algebra.number_of_ops() == 3);
  CHECK(in.algebra.op(0).curry_side() == CurrySide::left);
  CHECK(apply(in.algebra, 1, 1, 0) == 0);
  CHECK(in.labels == std::vector<std::string>{"p", "q"});
  auto const again = io::parse_input(io::print_algebra(in.algebra, in.labels));
  CHECK(again.labels == in.labels);
  for (std::size_t o = 0; o < 3; ++o) {
    CHECK(again.algebra.op(o).table() == in.algebra.op(o).table());
  }
}

TEST_CASE("malformed input is reported precisely", "[io]") {
  auto fails_with = [](std::string const& text, std::string const& msg) {
    CAPTURE(text);
    CHECK_THROWS_WITH(io::parse_input(text), ContainsSubstring(msg));
    CHECK_THROWS_AS(io::parse_input(text), InvalidInput);
  };
  fails_with("{", "malformed JSON");
  fails_with("[1, 2]", "expected a JSON object");
  fails_with(R"({"sigma": []})", "\"n\"");
  fails_with(R"({"n": 0, "sigma": [], "tau": []})", "\"n\"");
  fails_with(R"({"n": 2, "sigma": [[0, 1], [1, 0]]})", "missing \"tau\"");
  fails_with(R"({"n": 2, "sigma": [[0, 1], [1, 0]], "tau": [[0, 1]]})",
             "tau: expected an array of 2 rows");
  fails_with(R"({"n": 2, "sigma": [[0, 1], [1, 0, 1]], "tau": [[0, 1], [0, 1]]})",
             "sigma[1]: expected an array of 2 integers");
  fails_with(R"({"n": 2, "sigma": [[0, 1], [1, 2]], "tau": [[0, 1], [0, 1]]})",
             "sigma[1][1]: entry 2 out of range [0, 2)");
  fails_with(R"({"n": 2, "sigma": [[0, 1], [1, -1]], "tau": [[0, 1], [0, 1]]})",
             "sigma[1][1]: entry -1 out of range");
  fails_with(R"({"n": 2, "sigma": [[0, 1], [1, "x"]], "tau": [[0, 1], [0, 1]]})",
             "sigma[1][1]: expected an integer");
  fails_with(R"({"n": 2, "labels": ["a", "a"], "sigma": [[0, 1], [1, 0]], "tau": [[0, 1], [0, 1]]})",
             "duplicate");
  fails_with(R"({"n": 2, "labels": ["a"], "sigma": [[0, 1], [1, 0]], "tau": [[0, 1], [0, 1]]})",
             "\"labels\"");
  fails_with(R"({"n": 1, "ops": [{"name": "f", "curry": "up", "table": [[0]]}]})",
             "ops[0].curry");
  fails_with(R"({"n": 1, "ops": [{"table": [[0]]}]})", "ops[0]");
  fails_with(R"({"n": 1, "ops": [{"name": "f", "table": [[0]]}, {"name": "f", "table": [[0]]}]})",
             "duplicate operation name");
  fails_with(R"({"n": 1})", "\"ops\"");
  CHECK_THROWS_WITH(
      io::parse_solution_list(R"([{"n": 1, "sigma": [[0]], "tau": [[0]]}, {"n": 1, "sigma": [[1]], "tau": [[0]]}])"),
      ContainsSubstring("[1]: sigma[0][0]"));
}
