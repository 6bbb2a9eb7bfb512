#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "arith/bigint.hpp"
#include "arith/structures.hpp"

namespace arith {

/// 1/x_1 + ... + 1/x_n = a/m with x_1 <= ... <= x_n.
struct UnitFractionRep {
  BigInt a;
  BigInt m;
  BigVector x;

  friend bool operator==(const UnitFractionRep&, const UnitFractionRep&) = default;
};

/// Checks ordering, positivity and the exact sum by integer cross-multiplication.
bool is_valid(const UnitFractionRep& rep);

/// Every non-decreasing n-term representation of a/m, in lexicographic order.
/// Top-level x_1 branches are shared out across `threads` workers.
std::vector<UnitFractionRep> enumerate_unit_fractions(std::size_t n, const BigInt& a,
                                                      const BigInt& m, unsigned threads = 1);

/// f_n(a, m): number of such representations, without materialising them.
BigInt f_n_count(std::size_t n, const BigInt& a, const BigInt& m, unsigned threads = 1);

/// x = sort(d + m). Throws InvalidStructure unless s verifies on mK_n.
UnitFractionRep structure_to_fractions(const BigInt& m, const ArithStructure& s);

/// r = q / gcd(q) with q_i = prod_{j != i} x_j, and d_i = x_i - m.
/// Throws Input unless rep is valid with a = 1, DegenerateRep if some x_i <= m.
ArithStructure fractions_to_structure(const UnitFractionRep& rep);

}  // namespace arith
