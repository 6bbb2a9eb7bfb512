#include <catch_amalgamated.hpp>

#include <algorithm>

#include "arith/bounds.hpp"
#include "arith/error.hpp"
#include "arith/structures.hpp"
#include "oracles.hpp"

using namespace arith;

namespace {

Multigraph bridged_seven() {
  BigMatrix m(7, BigVector(7));
  const int edges[][2] = {{1, 2}, {2, 3}, {2, 4}, {3, 4}, {4, 1}, {5, 1}, {5, 6}, {5, 7}, {6, 7}};
  for (const auto& e : edges) m[e[0] - 1][e[1] - 1] = m[e[1] - 1][e[0] - 1] = 1;
  return Multigraph::from_matrix(m);
}

std::vector<BigVector> r_vectors(const EnumerationResult& result) {
  std::vector<BigVector> out;
  for (const auto& s : result.structures) out.push_back(s.r);
  return out;
}

}  // namespace

TEST_CASE("d_from_r on the worked examples", "[structures]") {
  CHECK(d_from_r(bridged_seven(), make_vector({2, 1, 1, 2, 1, 1, 1})).d == make_vector({2, 5, 3, 2, 4, 2, 2}));
  CHECK(d_from_r(Multigraph::complete(4, 1), make_vector({6, 3, 2, 1})).d == make_vector({1, 3, 5, 11}));

  const Multigraph g = bridged_seven();
  const ArithStructure laplacian = d_from_r(g, BigVector(7, BigInt(1)));
  for (std::size_t i = 0; i < 7; ++i) CHECK(laplacian.d[i] == g.degree(i));
}

TEST_CASE("d_from_r reports the failing vertex", "[structures]") {
  const Multigraph g = Multigraph::path(3);
  try {
    (void)d_from_r(g, make_vector({2, 1, 1}));
    FAIL("expected NotDivisible");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotDivisible);
    REQUIRE(e.vertex());
    CHECK(*e.vertex() == 0);
  }
  CHECK_THROWS_AS(d_from_r(g, make_vector({1, 1})), Error);
  try {
    (void)d_from_r(Multigraph::complete(3, 1), make_vector({2, 2, 2}));
    FAIL("expected GcdNotOne");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::GcdNotOne);
  }
  try {
    (void)d_from_r(g, make_vector({1, 0, 1}));
    FAIL("expected Input");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Input);
  }
}

TEST_CASE("verify", "[structures]") {
  CHECK(verify(Multigraph::complete(2, 8), {make_vector({1, 2}), make_vector({16, 4})}));
  CHECK(verify(Multigraph::complete(2, 3), {make_vector({1, 3}), make_vector({9, 1})}));
  CHECK_FALSE(verify(Multigraph::complete(3, 1), {make_vector({2, 2, 2}), make_vector({1, 1, 1})}));
  CHECK_FALSE(verify(Multigraph::complete(2, 3), {make_vector({1, 3}), make_vector({9, 2})}));
  CHECK_THROWS_AS(verify(Multigraph::complete(2, 3), {make_vector({1, 3}), make_vector({9})}), Error);
  CHECK(residuals(Multigraph::complete(2, 3), {make_vector({1, 3}), make_vector({9, 2})}) ==
        make_vector({0, 3}));
}

TEST_CASE("generalized laplacian", "[structures]") {
  CHECK(generalized_laplacian(Multigraph::complete(2, 1), make_vector({1, 1})) ==
        BigMatrix{make_vector({-1, 1}), make_vector({1, -1})});
  CHECK(generalized_laplacian(Multigraph::complete(2, 3), make_vector({9, 1})) ==
        BigMatrix{make_vector({-9, 3}), make_vector({3, -1})});
}

TEST_CASE("nullspace rank check", "[structures]") {
  const auto k3 = nullspace_rank_check(generalized_laplacian(Multigraph::complete(3, 1), make_vector({1, 2, 5})));
  CHECK(k3.rank == 2);
  REQUIRE(k3.generator);
  CHECK(*k3.generator == make_vector({3, 2, 1}));

  const auto zero = nullspace_rank_check({make_vector({0, 0}), make_vector({0, 0})});
  CHECK(zero.rank == 0);
  CHECK_FALSE(zero.generator);

  const auto id = nullspace_rank_check({make_vector({1, 0, 0}), make_vector({0, 1, 0}), make_vector({0, 0, 1})});
  CHECK(id.rank == 3);
  CHECK_FALSE(id.generator);

  CHECK_THROWS_AS(nullspace_rank_check({make_vector({1, 0}), make_vector({0})}), Error);
}

TEST_CASE("brute force on small graphs", "[structures][brute]") {
  const EnumerationResult p3 = enumerate_brute(Multigraph::path(3), {4, 1});
  CHECK(r_vectors(p3) == std::vector<BigVector>{make_vector({1, 1, 1}), make_vector({1, 2, 1})});
  CHECK(p3.complete);
  CHECK(p3.method == "brute");

  const EnumerationResult three_k2 = enumerate_brute(Multigraph::complete(2, 3), {3, 1});
  CHECK(r_vectors(three_k2) ==
        std::vector<BigVector>{make_vector({1, 1}), make_vector({1, 3}), make_vector({3, 1})});

  const Multigraph k3 = Multigraph::complete(3, 1);
  const EnumerationResult k3_result = enumerate_brute(k3, {3, 1});
  const auto classes = unordered_classes(k3, k3_result.structures);
  REQUIRE(classes.size() == 3);
  CHECK(std::any_of(classes.begin(), classes.end(),
                    [](const ArithStructure& s) { return s.r == make_vector({3, 2, 1}); }));
  CHECK(k3_result.count() == 10);
}

TEST_CASE("brute force matches the unpruned oracle", "[structures][brute]") {
  const std::vector<Multigraph> graphs{
      Multigraph::path(4),  Multigraph::cycle(4),  Multigraph::complete(3, 2),
      Multigraph::from_matrix({{0, 2, 1}, {2, 0, 0}, {1, 0, 0}}),
      Multigraph::from_matrix({{0, 1, 1, 0}, {1, 0, 1, 1}, {1, 1, 0, 2}, {0, 1, 2, 0}})};
  for (const auto& g : graphs) {
    const long box = 30;
    const EnumerationResult fast = enumerate_brute(g, {box, 1});
    auto expected = oracle::structures(g, box);
    std::sort(expected.begin(), expected.end());
    CHECK(r_vectors(fast) == expected);
  }
}

TEST_CASE("brute force certification flag", "[structures][brute]") {
  const Multigraph k3 = Multigraph::complete(3, 1);
  const EnumerationResult small = enumerate_brute(k3, {2, 1});
  CHECK_FALSE(small.complete);
  CHECK(small.count() == 4);
  REQUIRE(small.certified_bound);
  CHECK(*small.certified_bound == 3);
  CHECK(enumerate_brute(k3, {3, 1}).complete);
}

TEST_CASE("brute force is independent of the thread count", "[structures][brute]") {
  const Multigraph g = Multigraph::complete(3, 4);
  const EnumerationResult one = enumerate_brute(g, {100, 1});
  const EnumerationResult four = enumerate_brute(g, {100, 4});
  CHECK(one.structures == four.structures);
}

TEST_CASE("brute force rejects bad input", "[structures][brute]") {
  CHECK_THROWS_AS(enumerate_brute(Multigraph::path(3), {0, 1}), Error);
  const Multigraph split = Multigraph::from_matrix({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
  try {
    (void)enumerate_brute(split, {5, 1});
    FAIL("expected Disconnected");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Disconnected);
  }
  const EnumerationResult single = enumerate_brute(Multigraph::from_matrix({{0}}), {5, 1});
  CHECK(single.count() == 0);
}

TEST_CASE("paths give Catalan numbers", "[structures][brute]") {
  for (unsigned long n = 2; n <= 5; ++n) {
    const Multigraph g = Multigraph::path(n);
    const BigInt bound = certified_r_bound(g);
    const EnumerationResult result = enumerate_brute(g, {bound.get_si(), 1});
    CHECK(result.complete);
    CHECK(BigInt(static_cast<unsigned long>(result.count())) == oracle::catalan(n - 1));
  }
}

TEST_CASE("unordered classes need mK_n", "[structures]") {
  CHECK_THROWS_AS(unordered_classes(Multigraph::path(3), {}), Error);
}
