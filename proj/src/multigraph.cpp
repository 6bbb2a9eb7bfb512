#include "arith/multigraph.hpp"

#include <string>

#include "arith/error.hpp"

namespace arith {

namespace {

void check_index(std::size_t i, std::size_t n) {
  if (i >= n) {
    throw Error(ErrorKind::IndexOutOfRange,
                "vertex index " + std::to_string(i + 1) + " out of range 1.." + std::to_string(n));
  }
}

}  // namespace

bool has_loops(const BigMatrix& matrix) {
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    if (i < matrix[i].size() && matrix[i][i] != 0) return true;
  }
  return false;
}

BigMatrix strip_loops(BigMatrix matrix) {
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    if (i < matrix[i].size()) matrix[i][i] = 0;
  }
  return matrix;
}

Multigraph Multigraph::from_matrix(const BigMatrix& matrix) {
  const std::size_t n = matrix.size();
  if (n == 0) throw Error(ErrorKind::Input, "graph must have at least one vertex");
  for (const auto& row : matrix) {
    if (row.size() != n) throw Error(ErrorKind::NotSquare, "multiplicity matrix is not square");
  }
  BigVector delta(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (matrix[i][j] < 0) {
        throw Error(ErrorKind::Input, "negative edge multiplicity at (" + std::to_string(i + 1) +
                                          "," + std::to_string(j + 1) + ")");
      }
      if (matrix[i][j] != matrix[j][i]) {
        throw Error(ErrorKind::NotSymmetric, "multiplicity matrix is not symmetric at (" +
                                                 std::to_string(i + 1) + "," +
                                                 std::to_string(j + 1) + ")");
      }
      if (i != j) delta[i * n + j] = matrix[i][j];
    }
  }
  return Multigraph(n, std::move(delta));
}

Multigraph Multigraph::complete(std::size_t n, const BigInt& m) {
  if (n < 2) throw Error(ErrorKind::TooSmall, "mK_n needs n >= 2");
  if (m < 1) throw Error(ErrorKind::TooSmall, "mK_n needs m >= 1");
  BigVector delta(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) delta[i * n + j] = m;
  return Multigraph(n, std::move(delta));
}

Multigraph Multigraph::path(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::TooSmall, "a path needs at least 2 vertices");
  BigVector delta(n * n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    delta[i * n + i + 1] = 1;
    delta[(i + 1) * n + i] = 1;
  }
  return Multigraph(n, std::move(delta));
}

Multigraph Multigraph::cycle(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::TooSmall, "a cycle needs at least 3 vertices");
  Multigraph g = path(n);
  g.delta_[n - 1] = 1;
  g.delta_[(n - 1) * n] = 1;
  return g;
}

const BigInt& Multigraph::multiplicity(std::size_t i, std::size_t j) const {
  check_index(i, n_);
  check_index(j, n_);
  return delta_[i * n_ + j];
}

BigInt Multigraph::edge_count() const {
  BigInt total = 0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) total += delta_[i * n_ + j];
  return total;
}

BigInt Multigraph::degree(std::size_t i) const {
  check_index(i, n_);
  BigInt total = 0;
  for (std::size_t j = 0; j < n_; ++j) total += delta_[i * n_ + j];
  return total;
}

bool Multigraph::is_connected() const {
  std::vector<bool> seen(n_, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w = 0; w < n_; ++w) {
      if (!seen[w] && delta_[v * n_ + w] > 0) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n_;
}

BigVector Multigraph::row(std::size_t i) const {
  check_index(i, n_);
  return BigVector(delta_.begin() + static_cast<std::ptrdiff_t>(i * n_),
                   delta_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_));
}

BigMatrix Multigraph::to_matrix() const {
  BigMatrix out;
  out.reserve(n_);
  for (std::size_t i = 0; i < n_; ++i) out.push_back(row(i));
  return out;
}

}  // namespace arith
