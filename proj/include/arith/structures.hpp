#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arith/bigint.hpp"
#include "arith/multigraph.hpp"

namespace arith {

/// An arithmetical structure (r, d): positive vectors with gcd(r) = 1 and
/// r_i * d_i = sum_{j != i} r_j * delta_ij at every vertex.
struct ArithStructure {
  BigVector r;
  BigVector d;

  friend bool operator==(const ArithStructure&, const ArithStructure&) = default;
};

/// Lexicographic order on r (then d), the canonical output order.
bool canonical_less(const ArithStructure& a, const ArithStructure& b);

struct EnumerationResult {
  std::vector<ArithStructure> structures;
  bool complete = true;
  std::string method;
  double elapsed_seconds = 0.0;
  /// Search box used by the brute-force method (max over vertices), if any.
  std::optional<BigInt> r_max;
  /// Sound upper bound on every r-value, when one was established.
  std::optional<BigInt> certified_bound;

  std::size_t count() const noexcept { return structures.size(); }
};

/// Recovers d from r. Throws LengthMismatch, Input (non-positive entry),
/// NotDivisible (vertex attached) or GcdNotOne.
ArithStructure d_from_r(const Multigraph& g, std::span<const BigInt> r);

/// True iff every equation r_i d_i = sum_j r_j delta_ij holds, all entries are
/// positive and gcd(r) = 1. Throws LengthMismatch.
bool verify(const Multigraph& g, const ArithStructure& s);

/// Per-vertex residual r_i d_i - sum_{j != i} r_j delta_ij.
BigVector residuals(const Multigraph& g, const ArithStructure& s);

/// Matrix with -d_i on the diagonal and delta_ij off it.
BigMatrix generalized_laplacian(const Multigraph& g, std::span<const BigInt> d);

struct NullspaceResult {
  std::size_t rank = 0;
  /// Primitive integer generator (positive first nonzero entry) when the
  /// null space has dimension exactly one.
  std::optional<BigVector> generator;
};

/// Exact rank over Q by fraction-free (Bareiss) elimination.
NullspaceResult nullspace_rank_check(const BigMatrix& m);

struct BruteOptions {
  std::int64_t r_max = 0;
  unsigned threads = 1;
};

/// Exhaustive search over r-vectors with every entry <= r_max. Completeness
/// is certified when r_max reaches a proven bound on the r-values of G.
/// Per-vertex lift bounds shrink the search box when they are available.
/// Throws Disconnected, Input (r_max < 1), TooLarge (weighted neighbour sums
/// beyond 62 bits).
EnumerationResult enumerate_brute(const Multigraph& g, const BruteOptions& options);

/// Canonical sorted-descending copies of r, deduplicated, with d recomputed
/// to match. Used to compare ordered enumerations of mK_n against A_dec.
/// Throws Input unless g is mK_n.
std::vector<ArithStructure> unordered_classes(const Multigraph& g,
                                              std::span<const ArithStructure> structures);

}  // namespace arith
