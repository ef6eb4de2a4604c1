#include "tcat/text.hpp"

#include <doctest.h>

using namespace tcat;

TEST_CASE("diagram text round trip") {
  CHECK(parse_diagram("-") == YoungDiagram());
  CHECK(parse_diagram("") == YoungDiagram());
  CHECK(parse_diagram("3,2,1") == YoungDiagram({3, 2, 1}));
  CHECK(parse_diagram("3.2.1") == YoungDiagram({3, 2, 1}));
  CHECK(format_diagram(YoungDiagram({3, 1})) == "3.1");
  CHECK_THROWS_AS(parse_diagram("2,3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_diagram("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_diagram("a"), std::invalid_argument);
}

TEST_CASE("tuple text round trip") {
  DiagramTuple x = parse_tuple("-|1;1|-", 0);
  CHECK(x.inner_left == YoungDiagram({1}));
  CHECK(x.inner_right == YoungDiagram({1}));
  CHECK(x.left[0].empty());
  CHECK(format_tuple(x) == "-|1;1|-");
  // display order: left section lists λ_t,...,λ_0
  DiagramTuple y = parse_tuple("2.1,3|1;-|-,1.1", 1);
  CHECK(y.left[1] == YoungDiagram({2, 1}));
  CHECK(y.left[0] == YoungDiagram({3}));
  CHECK(y.right[0].empty());
  CHECK(y.right[1] == YoungDiagram({1, 1}));
  CHECK(format_tuple(y) == "2.1,3|1;-|-,1.1");
  for (const auto& z : all_tuples(1, 3)) CHECK(parse_tuple(format_tuple(z), 1) == z);
  CHECK_THROWS_AS(parse_tuple("-|1;1", 0), std::invalid_argument);
  CHECK_THROWS_AS(parse_tuple("-|1;1|-", 1), std::invalid_argument);
  CHECK_THROWS_AS(parse_tuple("-|1|-", 0), std::invalid_argument);
}

TEST_CASE("degree vector text round trip") {
  DegreeVector v = parse_degree("0|1;1|0", 0);
  CHECK(v.l == 1);
  CHECK(v.m == 1);
  CHECK(format_degree(v) == "0|1;1|0");
  DegreeVector w = parse_degree("2,0|1;0|3,4", 1);
  CHECK(w.left[1] == 2);
  CHECK(w.left[0] == 0);
  CHECK(w.right[0] == 3);
  CHECK(w.right[1] == 4);
  CHECK(format_degree(w) == "2,0|1;0|3,4");
  CHECK_THROWS_AS(parse_degree("x|1;1|0", 0), std::invalid_argument);
  CHECK_THROWS_AS(parse_degree("0|-1;1|0", 0), std::invalid_argument);
}
