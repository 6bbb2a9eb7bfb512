#include <catch_amalgamated.hpp>

#include <array>

#include "arith/error.hpp"
#include "arith/reduction.hpp"
#include "arith/structures.hpp"

using namespace arith;

namespace {

Multigraph from_edges(std::size_t n, std::initializer_list<std::array<long, 3>> edges) {
  BigMatrix m(n, BigVector(n));
  for (const auto& [i, j, mult] : edges) m[i - 1][j - 1] = m[j - 1][i - 1] = mult;
  return Multigraph::from_matrix(m);
}

Multigraph bridged_seven() {
  return from_edges(7, {{1, 2, 1}, {2, 3, 1}, {2, 4, 1}, {3, 4, 1}, {1, 4, 1}, {1, 5, 1}, {5, 6, 1},
                        {5, 7, 1}, {6, 7, 1}});
}

}  // namespace

TEST_CASE("reduce_graph on complete multigraphs", "[reduction]") {
  CHECK(reduce_graph(Multigraph::complete(4, 1), 0, 1) == Multigraph::complete(3, 2));
  for (std::size_t n = 3; n <= 6; ++n)
    for (long m = 1; m <= 5; ++m)
      for (long s = 1; s <= 5; ++s)
        for (std::size_t i : {std::size_t{0}, n - 1})
          CHECK(reduce_graph(Multigraph::complete(n, m), i, s) == Multigraph::complete(n - 1, m * m + s * m));
}

TEST_CASE("reduce_graph on the bridged seven-vertex graph", "[reduction]") {
  const Multigraph expected = from_edges(6, {{1, 2, 2}, {1, 3, 3}, {2, 3, 2}, {1, 4, 1}, {3, 4, 1}, {4, 5, 2},
                                             {4, 6, 2}, {5, 6, 2}});
  CHECK(reduce_graph(bridged_seven(), 0, 2) == expected);
}

TEST_CASE("smoothing an interior path vertex", "[reduction]") {
  for (std::size_t n = 3; n <= 7; ++n)
    for (std::size_t i = 1; i + 1 < n; ++i) CHECK(reduce_graph(Multigraph::path(n), i, 1) == Multigraph::path(n - 1));
}

TEST_CASE("reduce_graph argument checks", "[reduction]") {
  auto kind_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Internal;
  };
  CHECK(kind_of([] { reduce_graph(Multigraph::complete(2, 1), 0, 1); }) == ErrorKind::TooFewVertices);
  CHECK(kind_of([] { reduce_graph(Multigraph::complete(3, 1), 3, 1); }) == ErrorKind::IndexOutOfRange);
  CHECK(kind_of([] { reduce_graph(Multigraph::complete(3, 1), 0, 0); }) == ErrorKind::Input);
}

TEST_CASE("reduce_structure on the bridged seven-vertex example", "[reduction]") {
  const Multigraph g = bridged_seven();
  const ArithStructure s = d_from_r(g, make_vector({2, 1, 1, 2, 1, 1, 1}));
  const ReducedStructure out = reduce_structure(g, s, 0);
  CHECK(out.structure.r == make_vector({1, 1, 2, 1, 1, 1}));
  CHECK(out.step.s == 2);
  CHECK(out.step.g == 1);
  CHECK(out.step.removed_vertex == 0);
  CHECK(verify(out.graph, out.structure));
}

TEST_CASE("the K4 chain", "[reduction]") {
  const Multigraph k4 = Multigraph::complete(4, 1);
  const ArithStructure s{make_vector({6, 3, 2, 1}), make_vector({1, 3, 5, 11})};

  const ReducedStructure first = reduce_structure(k4, s, 0);
  CHECK(first.graph == Multigraph::complete(3, 2));
  CHECK(first.structure.r == make_vector({3, 2, 1}));
  CHECK(first.structure.d == make_vector({2, 4, 10}));

  const ReducedStructure second = reduce_structure(first.graph, first.structure, 0);
  CHECK(second.graph == Multigraph::complete(2, 8));
  CHECK(second.structure.r == make_vector({2, 1}));
  CHECK(second.structure.d == make_vector({4, 16}));
  CHECK(second.step.s == 2);

  const std::size_t order[] = {0, 0};
  const auto chain = reduce_chain(k4, s, order);
  REQUIRE(chain.size() == 2);
  CHECK(chain[0].structure == first.structure);
  CHECK(chain[1].structure == second.structure);
  CHECK(chain[1].graph == second.graph);
}

TEST_CASE("reduce_chain on a path", "[reduction]") {
  // d_2 = 2 on the all-ones structure, so the first step doubles the (3,4) edge.
  const Multigraph p4 = Multigraph::path(4);
  const ArithStructure ones = d_from_r(p4, BigVector(4, BigInt(1)));
  const std::size_t order[] = {1, 1};
  const auto chain = reduce_chain(p4, ones, order);
  REQUIRE(chain.size() == 2);
  CHECK(chain[0].graph == from_edges(3, {{1, 2, 1}, {2, 3, 2}}));
  CHECK(chain[0].structure.d == make_vector({1, 3, 2}));
  CHECK(chain[1].graph == Multigraph::complete(2, 2));
  CHECK(chain[1].structure.r == make_vector({1, 1}));
  CHECK(chain[1].structure.d == make_vector({2, 2}));

  CHECK(reduce_chain(Multigraph::complete(2, 1), {make_vector({1, 1}), make_vector({1, 1})}, {}).empty());
}

TEST_CASE("reduce_structure rejects non-structures", "[reduction]") {
  const ArithStructure bad{make_vector({1, 1, 1}), make_vector({1, 1, 1})};
  try {
    (void)reduce_structure(Multigraph::complete(3, 1), bad, 0);
    FAIL("expected InvalidStructure");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidStructure);
  }
}
