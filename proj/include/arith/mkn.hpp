#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "arith/bigint.hpp"
#include "arith/structures.hpp"

namespace arith {

/// A_dec(MK_2): coprime divisor pairs r_1 >= r_2 of M, in canonical order.
/// Counting both orders gives sigma_0(M^2).
std::vector<ArithStructure> enumerate_mk2(const BigInt& multiplicity);

/// Tries to extend a structure `tail` on (m^2 + d1*m)K_{n-1}, scaled by g, to a
/// non-increasing structure on mK_n whose first vertex has d_1 = d1. Accepts
/// iff r_1 = m*g*sum(tail)/d1 is an integer no smaller than the scaled tail,
/// every d_j on mK_n is integral, and the full vector is primitive.
/// Throws Input when d1 is outside [1, (n-1)m] or tail has the wrong length.
std::optional<ArithStructure> lift_check(std::size_t n, const BigInt& m, const BigInt& d1,
                                         std::span<const BigInt> tail, const BigInt& g);

struct MknStats {
  std::size_t lift_checks = 0;
  std::size_t accepted = 0;
  /// Structures reached from more than one (d1, g, tail) branch.
  std::size_t duplicates = 0;
  std::size_t memo_entries = 0;
};

/// A_dec(mK_n) by lifting: for each d1 in [1, (n-1)m] take A_dec of
/// (m^2 + d1*m)K_{n-1} (recursively, memoised by (size, multiplicity)), scale
/// by each divisor g of m and keep the lifts that pass lift_check. The top
/// level d1 loop runs on `threads` workers.
EnumerationResult enumerate_dec_mkn(std::size_t n, const BigInt& m, unsigned threads = 1,
                                    MknStats* stats = nullptr);

}  // namespace arith
