#include "arith/reduction.hpp"

#include <string>

#include "arith/error.hpp"

namespace arith {

Multigraph reduce_graph(const Multigraph& g, std::size_t i, const BigInt& s) {
  const std::size_t n = g.size();
  if (n < 3) throw Error(ErrorKind::TooFewVertices, "reduction needs at least 3 vertices");
  if (i >= n) {
    throw Error(ErrorKind::IndexOutOfRange, "vertex index " + std::to_string(i + 1) +
                                                " out of range 1.." + std::to_string(n));
  }
  if (s < 1) throw Error(ErrorKind::Input, "reduction scaling s must be positive");

  BigMatrix out(n - 1, BigVector(n - 1));
  for (std::size_t j = 0, jj = 0; j < n; ++j) {
    if (j == i) continue;
    for (std::size_t k = 0, kk = 0; k < n; ++k) {
      if (k == i) continue;
      if (j != k) out[jj][kk] = g.multiplicity(i, j) * g.multiplicity(i, k) + s * g.multiplicity(j, k);
      ++kk;
    }
    ++jj;
  }
  return Multigraph::from_matrix(out);
}

ReducedStructure reduce_structure(const Multigraph& g, const ArithStructure& s, std::size_t i) {
  const std::size_t n = g.size();
  if (n < 3) throw Error(ErrorKind::TooFewVertices, "reduction needs at least 3 vertices");
  if (i >= n) {
    throw Error(ErrorKind::IndexOutOfRange, "vertex index " + std::to_string(i + 1) +
                                                " out of range 1.." + std::to_string(n));
  }
  if (!verify(g, s)) {
    throw Error(ErrorKind::InvalidStructure, "structure does not verify on the input graph");
  }

  const BigInt& di = s.d[i];
  Multigraph reduced = reduce_graph(g, i, di);

  BigVector rest;
  rest.reserve(n - 1);
  for (std::size_t j = 0; j < n; ++j)
    if (j != i) rest.push_back(s.r[j]);
  const BigInt common = gcd_of(rest);

  ArithStructure out;
  out.r.reserve(n - 1);
  out.d.reserve(n - 1);
  for (std::size_t j = 0; j < n; ++j) {
    if (j == i) continue;
    out.r.push_back(s.r[j] / common);
    const BigInt& dij = g.multiplicity(i, j);
    out.d.push_back(di * s.d[j] - dij * dij);
  }

  // The closed form for d' must agree with d recovered from r' on G'.
  const ArithStructure recovered = d_from_r(reduced, out.r);
  if (recovered.d != out.d) {
    throw Error(ErrorKind::Internal, "reduced d " + to_string(out.d) +
                                         " disagrees with recovered d " + to_string(recovered.d));
  }

  return ReducedStructure{std::move(reduced), std::move(out), ReductionStep{i, di, common}};
}

std::vector<ReducedStructure> reduce_chain(const Multigraph& g, const ArithStructure& s,
                                           std::span<const std::size_t> order) {
  std::vector<ReducedStructure> chain;
  chain.reserve(order.size());
  const Multigraph* graph = &g;
  const ArithStructure* current = &s;
  for (std::size_t i : order) {
    chain.push_back(reduce_structure(*graph, *current, i));
    graph = &chain.back().graph;
    current = &chain.back().structure;
  }
  return chain;
}

}  // namespace arith
