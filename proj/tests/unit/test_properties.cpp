#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "arith/bounds.hpp"
#include "arith/egyptian.hpp"
#include "arith/io.hpp"
#include "arith/mkn.hpp"
#include "arith/reduction.hpp"
#include "arith/structures.hpp"
#include "oracles.hpp"

using namespace arith;

namespace {

constexpr std::uint64_t kSeed = 0x5eed'1234;
constexpr long kBoxCap = 60;

struct Sample {
  Multigraph graph;
  EnumerationResult result;
};

// Random connected graphs with their structures up to a small box.
std::vector<Sample> samples(std::size_t count) {
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<std::size_t> size(2, 5);
  std::vector<Sample> out;
  while (out.size() < count) {
    const std::size_t n = size(rng);
    Multigraph g = oracle::random_connected(rng, n, n <= 3 ? 3 : 2);
    // a small lift budget; graphs that exceed it get an uncertified box
    const BigInt cert = certified_r_bound(g, graph_r_bounds(g, 200'000));
    const long box = cert <= kBoxCap ? cert.get_si() : kBoxCap;
    EnumerationResult r = enumerate_brute(g, {box, 1});
    out.push_back({std::move(g), std::move(r)});
  }
  return out;
}

const std::vector<Sample>& corpus() {
  static const std::vector<Sample> c = samples(40);
  return c;
}

BigInt degree_sum(const Multigraph& g) {
  BigInt total = 0;
  for (std::size_t i = 0; i < g.size(); ++i) total += g.degree(i);
  return total;
}

}  // namespace

TEST_CASE("every found structure verifies and has a nullspace generator", "[properties]") {
  for (const auto& [g, result] : corpus()) {
    for (const auto& s : result.structures) {
      REQUIRE(verify(g, s));
      const auto check = nullspace_rank_check(generalized_laplacian(g, s.d));
      CHECK(check.rank == g.size() - 1);
      REQUIRE(check.generator);
      CHECK(*check.generator == s.r);
    }
  }
}

TEST_CASE("reductions of found structures verify", "[properties]") {
  for (const auto& [g, result] : corpus()) {
    if (g.size() < 3) continue;
    for (const auto& s : result.structures) {
      for (std::size_t i = 0; i < g.size(); ++i) {
        const ReducedStructure red = reduce_structure(g, s, i);
        REQUIRE(verify(red.graph, red.structure));
        CHECK(red.step.s == s.d[i]);
        CHECK(red.graph.is_connected());
        for (const auto& d : red.structure.d) CHECK(d > 0);
      }
    }
  }
}

TEST_CASE("reduce_graph follows the multiplicity rule", "[properties]") {
  std::mt19937_64 rng(kSeed + 1);
  std::uniform_int_distribution<std::size_t> size(3, 7);
  std::uniform_int_distribution<long> scale(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = size(rng);
    const Multigraph g = oracle::random_connected(rng, n, 3);
    const std::size_t i = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    const long s = scale(rng);
    const Multigraph h = reduce_graph(g, i, s);
    REQUIRE(h.size() == n - 1);
    CHECK(h.is_connected());
    auto old = [&](std::size_t k) { return k < i ? k : k + 1; };
    for (std::size_t j = 0; j < n - 1; ++j) {
      CHECK(h.multiplicity(j, j) == 0);
      for (std::size_t k = j + 1; k < n - 1; ++k) {
        const BigInt expected =
            g.multiplicity(i, old(j)) * g.multiplicity(i, old(k)) + s * g.multiplicity(old(j), old(k));
        CHECK(h.multiplicity(j, k) == expected);
        CHECK(h.multiplicity(k, j) == expected);
      }
    }
    // every edge of G - v_i is scaled by s and each pair of v_i's edges adds one
    const BigInt deg = g.degree(i);
    BigInt pairs = 0;
    for (std::size_t j = 0; j < n; ++j) pairs += g.multiplicity(i, j) * g.multiplicity(i, j);
    CHECK(h.edge_count() == s * (g.edge_count() - deg) + (deg * deg - pairs) / 2);
  }
}

TEST_CASE("found structures respect the r1 bound and the degree bound", "[properties]") {
  for (const auto& [g, result] : corpus()) {
    const BigRational r1 = r1_bound(g.size(), g.edge_count());
    for (const auto& s : result.structures) {
      const auto top = std::max_element(s.r.begin(), s.r.end());
      CHECK(BigRational(*top) <= r1);
      for (std::size_t i = 0; i < s.r.size(); ++i)
        if (s.r[i] == *top) {
          CHECK(s.d[i] <= g.degree(i));
          CHECK(s.d[i] <= g.edge_count());
        }
    }
    if (result.complete)
      CHECK(BigInt(static_cast<unsigned long>(result.count())) <= general_bound(g.size(), g.edge_count()).value);
  }
}

TEST_CASE("brute count on mK_2 is sigma_0(m^2)", "[properties]") {
  for (long m = 1; m <= 50; ++m) {
    const EnumerationResult result = enumerate_brute(Multigraph::complete(2, m), {m, 1});
    CHECK(result.complete);
    CHECK(BigInt(static_cast<unsigned long>(result.count())) == divisor_count(BigInt(m) * m));
  }
}

TEST_CASE("unit fraction bijection round trips", "[properties]") {
  for (std::size_t n = 2; n <= 5; ++n) {
    for (long m = 1; m <= 4; ++m) {
      INFO("n=" << n << " m=" << m);
      // the recursive search on 5 vertices is minutes past m = 1; the unit
      // fraction side below still covers those cells in both directions
      const EnumerationResult dec = n == 5 && m > 1 ? EnumerationResult{} : enumerate_dec_mkn(n, m);
      for (const auto& s : dec.structures) {
        const UnitFractionRep rep = structure_to_fractions(m, s);
        REQUIRE(is_valid(rep));
        CHECK(fractions_to_structure(rep) == s);
      }
      for (const auto& rep : enumerate_unit_fractions(n, 1, m)) {
        const ArithStructure s = fractions_to_structure(rep);
        CHECK(verify(Multigraph::complete(n, m), s));
        CHECK(structure_to_fractions(m, s) == rep);
      }
    }
  }
}

TEST_CASE("json round trips", "[properties]") {
  std::mt19937_64 rng(kSeed + 2);
  for (int trial = 0; trial < 100; ++trial) {
    const Multigraph g = oracle::random_connected(rng, 2 + trial % 6, 1000);
    CHECK(graph_from_json(parse_json(graph_to_json(g).dump(), "t")).graph == g);
  }
  for (const auto& [g, result] : corpus())
    for (const auto& s : result.structures) {
      const StructureInput back = structure_from_json(parse_json(to_json(s).dump(), "t"));
      CHECK(back.r == s.r);
      CHECK(back.d == s.d);
    }
}

TEST_CASE("handshake on random graphs", "[properties]") {
  std::mt19937_64 rng(kSeed + 3);
  for (int trial = 0; trial < 200; ++trial) {
    const Multigraph g = oracle::random_connected(rng, 2 + trial % 8, 5);
    CHECK(degree_sum(g) == 2 * g.edge_count());
    CHECK(g.is_connected());
  }
}
