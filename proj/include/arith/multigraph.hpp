#pragma once

#include <cstddef>
#include <vector>

#include "arith/bigint.hpp"

namespace arith {

/// Loopless undirected multigraph stored as a dense, symmetric matrix of
/// edge multiplicities with a zero diagonal.
///
/// Vertex indices are 0-based here; file formats and CLI output use 1-based
/// labels. Values are immutable after construction.
class Multigraph {
 public:
  /// Builds a graph from a square multiplicity matrix. Diagonal entries
  /// (loops) are dropped: a loop only shifts d at its vertex, so the set of
  /// structures is unchanged. Throws NotSquare / NotSymmetric, and Input for
  /// negative entries or an empty matrix.
  static Multigraph from_matrix(const BigMatrix& matrix);

  /// mK_n: every pair of distinct vertices joined by `m` edges.
  static Multigraph complete(std::size_t n, const BigInt& m);
  static Multigraph path(std::size_t n);
  static Multigraph cycle(std::size_t n);

  std::size_t size() const noexcept { return n_; }

  const BigInt& multiplicity(std::size_t i, std::size_t j) const;

  /// Number of edges counted with multiplicity.
  BigInt edge_count() const;
  BigInt degree(std::size_t i) const;
  bool is_connected() const;

  /// Row i as a vector (entry i is zero).
  BigVector row(std::size_t i) const;
  BigMatrix to_matrix() const;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  Multigraph(std::size_t n, BigVector delta) : n_(n), delta_(std::move(delta)) {}

  std::size_t n_ = 0;
  BigVector delta_;  // row-major n*n
};

/// True when any diagonal entry of the (square) matrix is nonzero.
bool has_loops(const BigMatrix& matrix);

/// Copy of the matrix with its diagonal zeroed.
BigMatrix strip_loops(BigMatrix matrix);

}  // namespace arith
