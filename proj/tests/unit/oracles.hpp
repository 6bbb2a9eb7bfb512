#pragma once

// Slow, obviously-correct reference implementations used only by tests.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "arith/bigint.hpp"
#include "arith/multigraph.hpp"
#include "arith/structures.hpp"

namespace oracle {

using arith::BigInt;
using arith::BigRational;
using arith::BigVector;

inline BigInt catalan(unsigned long n) {
  BigInt c = 1;
  for (unsigned long k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

inline BigVector divisors(unsigned long m) {
  BigVector out;
  for (unsigned long d = 1; d <= m; ++d)
    if (m % d == 0) out.emplace_back(d);
  return out;
}

// Non-decreasing x with sum 1/x_i = target, by rational arithmetic.
inline void egyptian(std::size_t k, const BigRational& target, const BigInt& lo, BigVector& prefix,
                     std::vector<BigVector>& out) {
  if (target <= 0) return;
  if (k == 1) {
    const BigRational inv = 1 / target;
    if (inv.get_den() == 1 && inv.get_num() >= lo) {
      prefix.push_back(inv.get_num());
      out.push_back(prefix);
      prefix.pop_back();
    }
    return;
  }
  for (BigInt x = lo;; ++x) {
    const BigRational unit(1, x);
    if (unit * static_cast<unsigned long>(k) < target) break;
    if (unit >= target) continue;
    prefix.push_back(x);
    BigRational rest = target - unit;
    rest.canonicalize();
    egyptian(k - 1, rest, x, prefix, out);
    prefix.pop_back();
  }
}

inline std::vector<BigVector> egyptian(std::size_t n, long a, long m) {
  std::vector<BigVector> out;
  BigVector prefix;
  BigRational target(a, m);
  target.canonicalize();
  egyptian(n, target, BigInt(1), prefix, out);
  return out;
}

// Every r in [1, box]^n that satisfies the divisibility conditions.
inline std::vector<BigVector> structures(const arith::Multigraph& g, long box) {
  const std::size_t n = g.size();
  std::vector<BigVector> out;
  BigVector r(n, BigInt(1));
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      if (arith::gcd_of(r) != 1) return;
      for (std::size_t v = 0; v < n; ++v) {
        BigInt sum = 0;
        for (std::size_t w = 0; w < n; ++w)
          if (w != v) sum += g.multiplicity(v, w) * r[w];
        if (sum % r[v] != 0 || sum == 0) return;
      }
      out.push_back(r);
      return;
    }
    for (long x = 1; x <= box; ++x) {
      r[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

// Random connected multigraph: a random spanning tree plus extra edges.
inline arith::Multigraph random_connected(std::mt19937_64& rng, std::size_t n, long max_mult) {
  arith::BigMatrix m(n, BigVector(n));
  std::uniform_int_distribution<long> mult(1, max_mult);
  for (std::size_t v = 1; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> parent(0, v - 1);
    const std::size_t p = parent(rng);
    m[v][p] = m[p][v] = mult(rng);
  }
  std::bernoulli_distribution extra(0.3);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (m[i][j] == 0 && extra(rng)) m[i][j] = m[j][i] = mult(rng);
  return arith::Multigraph::from_matrix(m);
}

}  // namespace oracle
