#include "arith/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <set>
#include <string>

#include "arith/error.hpp"
#include "arith/reduction.hpp"

namespace arith {

std::string Real::to_string(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, value_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

BigInt Real::floor() const {
  BigInt z;
  mpfr_get_z(z.get_mpz_t(), value_, MPFR_RNDD);
  return z;
}

// ---------------------------------------------------------------------------
// Divisors

std::vector<PrimePower> factorize(const BigInt& m) {
  if (m < 1) throw Error(ErrorKind::Input, "can only factor positive integers");
  std::vector<PrimePower> out;
  BigInt rest = m;
  auto take = [&](unsigned long p) {
    if (!mpz_divisible_ui_p(rest.get_mpz_t(), p)) return;
    PrimePower pp{BigInt(p), 0};
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++pp.exponent;
    }
    out.push_back(std::move(pp));
  };
  take(2);
  unsigned long p = 3;
  for (; p <= kTrialDivisionLimit; p += 2) {
    if (rest == 1 || BigInt(p) * p > rest) break;
    take(p);
  }
  if (rest > 1) {
    const bool exhausted = BigInt(p) * p > rest;
    if (!exhausted && mpz_probab_prime_p(rest.get_mpz_t(), 40) == 0) {
      throw Error(ErrorKind::TooLarge,
                  "cannot factor " + m.get_str() + " within the trial-division budget");
    }
    out.push_back({rest, 1});
  }
  return out;
}

BigInt divisor_count(const BigInt& m) {
  BigInt count = 1;
  for (const auto& pp : factorize(m)) count *= pp.exponent + 1;
  return count;
}

BigVector divisors(const BigInt& m) {
  BigVector out{BigInt(1)};
  for (const auto& pp : factorize(m)) {
    const std::size_t base = out.size();
    BigInt power = 1;
    for (unsigned long e = 1; e <= pp.exponent; ++e) {
      power *= pp.prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Log-space evaluation

namespace {

// 1.538 * ln 2, enclosed.
Interval nicolas_constant(mpfr_prec_t prec) {
  Interval c{Real(prec), Real(prec)};
  mpfr_const_log2(c.lo.get(), MPFR_RNDD);
  mpfr_mul_ui(c.lo.get(), c.lo.get(), 1538, MPFR_RNDD);
  mpfr_div_ui(c.lo.get(), c.lo.get(), 1000, MPFR_RNDD);
  mpfr_const_log2(c.hi.get(), MPFR_RNDU);
  mpfr_mul_ui(c.hi.get(), c.hi.get(), 1538, MPFR_RNDU);
  mpfr_div_ui(c.hi.get(), c.hi.get(), 1000, MPFR_RNDU);
  return c;
}

// Adds weight * ln(k) to the interval, where weight = 2^shift.
void add_weighted_log(Interval& acc, const BigInt& k, unsigned long shift, mpfr_prec_t prec) {
  Real t(prec);
  mpfr_set_z(t.get(), k.get_mpz_t(), MPFR_RNDD);
  mpfr_log(t.get(), t.get(), MPFR_RNDD);
  mpfr_mul_2ui(t.get(), t.get(), shift, MPFR_RNDD);
  mpfr_add(acc.lo.get(), acc.lo.get(), t.get(), MPFR_RNDD);
  mpfr_set_z(t.get(), k.get_mpz_t(), MPFR_RNDU);
  mpfr_log(t.get(), t.get(), MPFR_RNDU);
  mpfr_mul_2ui(t.get(), t.get(), shift, MPFR_RNDU);
  mpfr_add(acc.hi.get(), acc.hi.get(), t.get(), MPFR_RNDU);
}

// Terms of ln x = sum weight * ln(base).
struct LogTerm {
  BigInt base;
  unsigned long shift;  // weight = 2^shift
};

Interval log_of(const std::vector<LogTerm>& terms, mpfr_prec_t prec) {
  Interval acc{Real(prec), Real(prec)};
  for (const auto& t : terms) add_weighted_log(acc, t.base, t.shift, prec);
  return acc;
}

bool near_integer(const Real& v) {
  Real frac(v.precision());
  mpfr_frac(frac.get(), v.get(), MPFR_RNDN);
  if (mpfr_sgn(frac.get()) < 0) mpfr_add_ui(frac.get(), frac.get(), 1, MPFR_RNDN);
  const double f = frac.to_double();
  const double eps = std::ldexp(1.0, -20);
  return f < eps || f > 1.0 - eps;
}

struct Enclosure {
  BigInt floor_lo;
  BigInt floor_hi;
  bool near = false;
  std::string log_x;
  std::string log_f;
};

// Encloses prefactor * (f(x) + addend) for ln x given by `terms`.
Enclosure enclose(const BigInt& prefactor, const std::vector<LogTerm>& terms, unsigned long addend,
                  mpfr_prec_t prec) {
  const Interval lx = log_of(terms, prec);
  const Interval lf = nicolas_log_f(lx, prec);
  Interval v{Real(prec), Real(prec)};
  mpfr_exp(v.lo.get(), lf.lo.get(), MPFR_RNDD);
  mpfr_exp(v.hi.get(), lf.hi.get(), MPFR_RNDU);
  mpfr_add_ui(v.lo.get(), v.lo.get(), addend, MPFR_RNDD);
  mpfr_add_ui(v.hi.get(), v.hi.get(), addend, MPFR_RNDU);
  mpfr_mul_z(v.lo.get(), v.lo.get(), prefactor.get_mpz_t(), MPFR_RNDD);
  mpfr_mul_z(v.hi.get(), v.hi.get(), prefactor.get_mpz_t(), MPFR_RNDU);
  Enclosure e;
  e.floor_lo = v.lo.floor();
  e.floor_hi = v.hi.floor();
  e.near = near_integer(v.lo) || near_integer(v.hi) || e.floor_lo != e.floor_hi;
  e.log_x = lx.lo.to_string(30);
  e.log_f = lf.lo.to_string(30);
  return e;
}

// Bits needed to hold the integer part, plus guard bits.
mpfr_prec_t working_precision(long requested, const BigInt& prefactor,
                              const std::vector<LogTerm>& terms) {
  double log_x = 0;
  for (const auto& t : terms) log_x += std::ldexp(std::log(t.base.get_d()), static_cast<int>(t.shift));
  const double log_f = log_x > 1 ? 1.538 * std::log(2.0) * log_x / std::log(log_x) : 0.0;
  const double bits = static_cast<double>(mpz_sizeinbase(prefactor.get_mpz_t(), 2)) +
                      log_f / std::log(2.0) + 2;
  if (bits > 1e7) throw Error(ErrorKind::TooLarge, "bound has more than 10^7 bits");
  return std::max<mpfr_prec_t>(requested, static_cast<mpfr_prec_t>(bits) + 64);
}

FloorEvaluation evaluate_floor(const BigInt& prefactor, const std::vector<LogTerm>& terms,
                               unsigned long addend, long requested_bits) {
  if (requested_bits < MPFR_PREC_MIN) throw Error(ErrorKind::Input, "precision too small");
  FloorEvaluation out;
  std::optional<BigInt> previous;
  for (long bits = requested_bits; bits <= kMaxPrecisionBits; bits *= 2) {
    const mpfr_prec_t prec = working_precision(bits, prefactor, terms);
    const Enclosure e = enclose(prefactor, terms, addend, prec);
    out.value = e.floor_lo;
    out.precision_bits = prec;
    out.log_f_argument = e.log_x;
    out.log_f = e.log_f;
    out.boundary_flag = e.near;
    if (e.floor_lo == e.floor_hi) {
      if (!e.near) {
        out.resolved = true;
        return out;
      }
      if (previous && *previous == e.floor_lo) {
        out.resolved = true;
        return out;
      }
      previous = e.floor_lo;
    }
  }
  out.resolved = false;
  out.note = "floor not resolved below " + std::to_string(kMaxPrecisionBits) + " bits";
  return out;
}

BigInt power(const BigInt& base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

constexpr std::size_t kMaxBoundVertices = 24;

void check_bound_n(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::Input, "bounds need n >= 2");
  if (n > kMaxBoundVertices) {
    throw Error(ErrorKind::TooLarge, "bounds are only evaluated for n <= " +
                                         std::to_string(kMaxBoundVertices));
  }
}

}  // namespace

Interval nicolas_log_f(const Interval& log_x, mpfr_prec_t prec) {
  if (mpfr_cmp_ui(log_x.lo.get(), 1) <= 0) {
    throw Error(ErrorKind::DomainError, "ln x must exceed 1 for ln ln x to be positive");
  }
  const Interval c = nicolas_constant(prec);
  Interval out{Real(prec), Real(prec)};
  Real lnln(prec);
  mpfr_log(lnln.get(), log_x.hi.get(), MPFR_RNDU);
  mpfr_mul(out.lo.get(), c.lo.get(), log_x.lo.get(), MPFR_RNDD);
  mpfr_div(out.lo.get(), out.lo.get(), lnln.get(), MPFR_RNDD);
  mpfr_log(lnln.get(), log_x.lo.get(), MPFR_RNDD);
  mpfr_mul(out.hi.get(), c.hi.get(), log_x.hi.get(), MPFR_RNDU);
  mpfr_div(out.hi.get(), out.hi.get(), lnln.get(), MPFR_RNDU);
  return out;
}

Real nicolas_log_f(const Real& log_x) {
  if (mpfr_cmp_ui(log_x.get(), 1) <= 0) {
    throw Error(ErrorKind::DomainError, "ln x must exceed 1 for ln ln x to be positive");
  }
  const mpfr_prec_t prec = log_x.precision();
  Real c(prec), lnln(prec), out(prec);
  mpfr_const_log2(c.get(), MPFR_RNDN);
  mpfr_mul_ui(c.get(), c.get(), 1538, MPFR_RNDN);
  mpfr_div_ui(c.get(), c.get(), 1000, MPFR_RNDN);
  mpfr_log(lnln.get(), log_x.get(), MPFR_RNDN);
  mpfr_mul(out.get(), c.get(), log_x.get(), MPFR_RNDN);
  mpfr_div(out.get(), out.get(), lnln.get(), MPFR_RNDN);
  return out;
}

FloorEvaluation general_bound(std::size_t n, const BigInt& edges, long precision_bits) {
  check_bound_n(n);
  if (edges < 1) throw Error(ErrorKind::Input, "edge count must be positive");
  if (edges == 1) {
    if (n != 2) throw Error(ErrorKind::DomainError, "a connected graph on n >= 3 vertices has >= 2 edges");
    FloorEvaluation out;
    out.value = divisor_count(1);
    out.precision_bits = precision_bits;
    out.formula_applicable = false;
    out.note = "ln ln of f's argument is undefined for E = 1; reporting sigma_0(1)";
    return out;
  }
  const BigInt prefactor = factorial(n) / 2 * power(edges, (1UL << (n - 2)) - 1);
  return evaluate_floor(prefactor, {{edges, static_cast<unsigned long>(n - 1)}}, 0, precision_bits);
}

BigRational r1_bound(std::size_t n, const BigInt& edges) {
  check_bound_n(n);
  if (edges < 1) throw Error(ErrorKind::Input, "edge count must be positive");
  BigRational q(power(edges, 3 * (1UL << (n - 2)) - 2), factorial(n - 1));
  q.canonicalize();
  return q;
}

FloorEvaluation mkn_bound(std::size_t n, const BigInt& m, long precision_bits) {
  check_bound_n(n);
  if (m < 1) throw Error(ErrorKind::Input, "m must be positive");
  if (n == 2) {
    FloorEvaluation out;
    out.value = (divisor_count(m * m) + 1) / 2;
    out.precision_bits = precision_bits;
    out.formula_applicable = false;
    out.note = "n = 2 is counted exactly as (sigma_0(m^2) + 1) / 2";
    return out;
  }
  BigInt prefactor = factorial(n - 1) / 2;
  for (std::size_t k = 0; k + 4 <= n; ++k) {
    prefactor *= power(BigInt(static_cast<unsigned long>(n - k)), (1UL << (n - 3 - k)) - 1);
  }
  prefactor *= power(m, (1UL << (n - 2)) - 1);

  std::vector<LogTerm> terms;
  if (m > 1) terms.push_back({m, static_cast<unsigned long>(n - 1)});
  for (std::size_t k = 3; k <= n; ++k)
    terms.push_back({BigInt(static_cast<unsigned long>(k)), static_cast<unsigned long>(k - 2)});
  return evaluate_floor(prefactor, terms, 1, precision_bits);
}

BoundReport bound_report_for_edges(std::size_t n, const BigInt& edges, long precision_bits) {
  BoundReport report;
  report.n = n;
  report.edges = edges;
  report.general = general_bound(n, edges, precision_bits);
  report.r1 = r1_bound(n, edges);
  return report;
}

BoundReport bound_report_for_mkn(std::size_t n, const BigInt& m, long precision_bits) {
  check_bound_n(n);
  const BigInt edges = m * static_cast<unsigned long>(n * (n - 1) / 2);
  BoundReport report = bound_report_for_edges(n, edges, precision_bits);
  report.m = m;
  report.mkn = mkn_bound(n, m, precision_bits);
  return report;
}

// ---------------------------------------------------------------------------
// Per-graph r bounds

namespace {

struct BudgetExceeded {};

using RSet = std::set<BigVector>;

// A(G) as a set of r-vectors, built by lifting A(G(v_i, s)) for every vertex
// i and s <= deg v_i: the vertex carrying the largest r-value has d_i <= deg v_i,
// and the common factor of the remaining r_j divides both s and every delta_ij.
class ReductionLift {
 public:
  explicit ReductionLift(std::size_t budget) : budget_(budget) {}

  std::shared_ptr<const RSet> structures(const Multigraph& g) {
    const std::size_t n = g.size();
    BigVector key;
    key.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) key.push_back(g.multiplicity(i, j));
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    charge(n * n);
    auto out = std::make_shared<RSet>();
    if (n == 2) {
      // Coprime pairs of divisors of the edge multiplicity, both orders.
      const BigVector divs = divisors(g.multiplicity(0, 1));
      for (const auto& x : divs)
        for (const auto& y : divs)
          if (gcd(x, y) == 1) out->insert({x, y});
    } else {
      for (std::size_t i = 0; i < n; ++i) lift_at(g, i, *out);
    }
    memo_.emplace(std::move(key), out);
    return out;
  }

 private:
  void lift_at(const Multigraph& g, std::size_t i, RSet& out) {
    const std::size_t n = g.size();
    const BigVector row = g.row(i);
    const BigInt row_gcd = gcd_of(row);
    const BigInt deg = g.degree(i);
    if (deg > BigInt(static_cast<unsigned long>(budget_))) throw BudgetExceeded{};
    BigVector r(n);
    BigInt num;
    for (BigInt s = 1; s <= deg; ++s) {
      const auto sub = structures(reduce_graph(g, i, s));
      for (const auto& scale : divisors(gcd(s, row_gcd))) {
        for (const auto& rp : *sub) {
          charge(n);
          num = 0;
          BigInt top = 0;
          for (std::size_t j = 0, jj = 0; j < n; ++j) {
            if (j == i) continue;
            r[j] = scale * rp[jj++];
            num += row[j] * r[j];
            if (r[j] > top) top = r[j];
          }
          if (!mpz_divisible_p(num.get_mpz_t(), s.get_mpz_t())) continue;
          r[i] = num / s;
          if (r[i] < top || gcd(r[i], scale) != 1) continue;
          if (divides_everywhere(g, r)) out.insert(r);
        }
      }
    }
  }

  void charge(std::size_t units) {
    spent_ += units;
    if (spent_ > budget_) throw BudgetExceeded{};
  }

  static bool divides_everywhere(const Multigraph& g, const BigVector& r) {
    BigInt sum;
    for (std::size_t j = 0; j < g.size(); ++j) {
      sum = 0;
      for (std::size_t k = 0; k < g.size(); ++k)
        if (k != j) sum += g.multiplicity(j, k) * r[k];
      if (!mpz_divisible_p(sum.get_mpz_t(), r[j].get_mpz_t())) return false;
    }
    return true;
  }

  std::size_t budget_;
  std::size_t spent_ = 0;
  std::map<BigVector, std::shared_ptr<const RSet>> memo_;
};

}  // namespace

std::optional<BigVector> graph_r_bounds(const Multigraph& g, std::size_t budget) {
  if (g.size() < 2) return std::nullopt;
  if (!g.is_connected()) throw Error(ErrorKind::Disconnected, "graph is not connected");
  try {
    ReductionLift lift(budget);
    const auto all = lift.structures(g);
    BigVector best(g.size(), BigInt(0));
    for (const auto& r : *all)
      for (std::size_t j = 0; j < r.size(); ++j)
        if (r[j] > best[j]) best[j] = r[j];
    return best;
  } catch (const BudgetExceeded&) {
    return std::nullopt;
  } catch (const Error& e) {
    // Factoring a reduced multiplicity may be out of reach.
    if (e.kind() != ErrorKind::TooLarge) throw;
    return std::nullopt;
  }
}

BigInt certified_r_bound(const Multigraph& g) { return certified_r_bound(g, graph_r_bounds(g)); }

BigInt certified_r_bound(const Multigraph& g, const std::optional<BigVector>& per_vertex) {
  if (g.size() < 2) return 0;
  std::optional<BigInt> best;
  if (g.size() <= kMaxBoundVertices) {
    const BigRational q = r1_bound(g.size(), g.edge_count());
    best = floor_div(q.get_num(), q.get_den());
  }
  if (per_vertex) {
    const BigInt top = *std::max_element(per_vertex->begin(), per_vertex->end());
    if (!best || top < *best) best = top;
  }
  if (!best) throw Error(ErrorKind::TooLarge, "no r bound is available for this graph");
  return *best;
}

}  // namespace arith
