#include "doctest.h"

#include <stdexcept>

#include "pam/render.hpp"

using namespace pam;

TEST_CASE("single arc") {
  CHECK(render_arc_diagram(parse_matching("11")) == "+-+\n1 2\n");
}

TEST_CASE("three mutually crossing arcs") {
  CHECK(render_arc_diagram(parse_matching("123123")) ==
        "+-----+\n"
        "| +---|-+\n"
        "| | +-|-|-+\n"
        "1 2 3 4 5 6\n");
}

TEST_CASE("two disjoint arcs") {
  CHECK(render_arc_diagram(parse_matching("1122")) ==
        "+-+\n"
        "| | +-+\n"
        "1 2 3 4\n");
}

TEST_CASE("wide labels and determinism") {
  std::vector<Edge> edges;
  for (int k = 0; k < 5; ++k) edges.push_back({2 * k + 1, 2 * k + 2});
  const Matching m = Matching::from_edges(edges);
  const std::string a = render_arc_diagram(m);
  CHECK(a == render_arc_diagram(m));
  CHECK(a.substr(a.rfind("1  2")) == "1  2  3  4  5  6  7  8  9  10\n");
  CHECK(render_arc_diagram(Matching{}) == "(empty matching)\n");
}

TEST_CASE("width limit") {
  std::vector<Edge> edges;
  for (int k = 0; k < kRenderMaxEdges + 1; ++k) edges.push_back({2 * k + 1, 2 * k + 2});
  try {
    render_arc_diagram(Matching::from_edges(edges));
    FAIL("expected length_error");
  } catch (const std::length_error& e) {
    CHECK(std::string(e.what()).find("comma format") != std::string::npos);
  }
  edges.pop_back();
  CHECK_NOTHROW(render_arc_diagram(Matching::from_edges(edges)));
}
