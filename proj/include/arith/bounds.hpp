#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "arith/bigint.hpp"
#include "arith/multigraph.hpp"
#include "arith/real.hpp"

namespace arith {

inline constexpr long kDefaultPrecisionBits = 128;
/// Precision escalation stops here and reports the floor as unresolved.
inline constexpr long kMaxPrecisionBits = 1L << 14;
/// Trial division is attempted up to this bound on the smallest cofactor.
inline constexpr unsigned long kTrialDivisionLimit = 1'000'000UL;  // sqrt(10^12)

struct PrimePower {
  BigInt prime;
  unsigned long exponent = 0;
};

/// Trial-division factorization. Throws TooLarge when a cofactor above
/// 10^12 is left that might be composite.
std::vector<PrimePower> factorize(const BigInt& m);
BigInt divisor_count(const BigInt& m);
/// All positive divisors, ascending.
BigVector divisors(const BigInt& m);

/// ln f(x) for f(x) = x^(1.538 ln 2 / ln ln x), from ln x. Works on intervals
/// so callers get rigorous enclosures. Throws DomainError unless ln x > 1.
Interval nicolas_log_f(const Interval& log_x, mpfr_prec_t precision);
Real nicolas_log_f(const Real& log_x);

/// Floor of a real-valued bound, with the evidence behind it.
struct FloorEvaluation {
  BigInt value;
  long precision_bits = kDefaultPrecisionBits;
  /// Pre-floor value lies within 2^-20 of an integer.
  bool boundary_flag = false;
  /// Floor is certain: the enclosure did not straddle an integer and, when
  /// flagged, stayed the same after a precision doubling.
  bool resolved = true;
  /// False when the closed form is outside its domain and an exact fallback
  /// was reported instead.
  bool formula_applicable = true;
  std::string log_f_argument;  // ln of f's argument, decimal
  std::string log_f;           // ln f(argument), decimal
  std::string note;
};

/// n!/2 * E^(2^(n-2)-1) * f(E^(2^(n-1))). For n = 2, E = 1 the log-log is
/// undefined and the exact count sigma_0(1) = 1 is returned instead.
FloorEvaluation general_bound(std::size_t n, const BigInt& edges,
                              long precision_bits = kDefaultPrecisionBits);

/// E^(3*2^(n-2)-2) / (n-1)!, exactly.
BigRational r1_bound(std::size_t n, const BigInt& edges);

/// Bound on #A_dec(mK_n):
/// (n-1)!/2 * prod_{k=0}^{n-4} (n-k)^(2^(n-3-k)-1) * m^(2^(n-2)-1)
///   * (f(m^(2^(n-1)) * prod_{k=3}^{n} k^(2^(k-2))) + 1).
/// n = 2 reports the exact (sigma_0(m^2) + 1) / 2.
FloorEvaluation mkn_bound(std::size_t n, const BigInt& m,
                          long precision_bits = kDefaultPrecisionBits);

struct BoundReport {
  std::size_t n = 0;
  BigInt edges;
  std::optional<BigInt> m;
  FloorEvaluation general;
  BigRational r1;
  std::optional<FloorEvaluation> mkn;
};

BoundReport bound_report_for_edges(std::size_t n, const BigInt& edges, long precision_bits);
BoundReport bound_report_for_mkn(std::size_t n, const BigInt& m, long precision_bits);

/// Per-vertex upper bounds on r-values over A(G), from iterating the vertex
/// reduction on G itself. If v_i carries the largest r-value then d_i <= deg v_i,
/// the reduced structure lives on G(v_i, d_i), and its common factor divides
/// d_i and every delta_ij. Lifting every structure of every such G(v_i, s)
/// back to G and keeping those that satisfy the divisibility conditions covers
/// A(G), so the per-vertex maxima of the lifted set are bounds. Returns nullopt
/// when the work (about n operations per lift) exceeds `budget`.
/// G must be connected with n >= 2.
std::optional<BigVector> graph_r_bounds(const Multigraph& g, std::size_t budget = 20'000'000);

/// Smallest proven bound on every r-value of G: min of floor(r1_bound) and the
/// per-vertex lift bounds when they fit the budget.
BigInt certified_r_bound(const Multigraph& g);
/// Same, reusing per-vertex bounds already computed by graph_r_bounds.
BigInt certified_r_bound(const Multigraph& g, const std::optional<BigVector>& per_vertex);

}  // namespace arith
