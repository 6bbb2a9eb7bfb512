#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "arith/bigint.hpp"
#include "arith/multigraph.hpp"
#include "arith/structures.hpp"

namespace arith {

struct ReductionStep {
  std::size_t removed_vertex = 0;  // 0-based index in the graph it was removed from
  BigInt s;                        // scaling; d_i of the removed vertex
  BigInt g;                        // common factor divided out of the surviving r
};

struct ReducedStructure {
  Multigraph graph;
  ArithStructure structure;
  ReductionStep step;
};

/// G(v_i, s): drop v_i, and join surviving v_j, v_k by
/// delta_ij * delta_ik + s * delta_jk edges. Survivors keep their order.
/// Throws TooFewVertices (n < 3), IndexOutOfRange, Input (s < 1).
Multigraph reduce_graph(const Multigraph& g, std::size_t i, const BigInt& s);

/// Pushes a structure down to G(v_i, d_i): r' is r without r_i divided by the
/// gcd of what remains, and d'_j = d_i d_j - delta_ij^2. Throws
/// InvalidStructure, TooFewVertices, IndexOutOfRange; Internal if the closed
/// form for d' disagrees with d recovered from r'.
ReducedStructure reduce_structure(const Multigraph& g, const ArithStructure& s, std::size_t i);

/// Applies reduce_structure repeatedly. `order` holds indices into the graph
/// current at each step. Empty for an empty order.
std::vector<ReducedStructure> reduce_chain(const Multigraph& g, const ArithStructure& s,
                                           std::span<const std::size_t> order);

}  // namespace arith
