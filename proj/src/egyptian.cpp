#include "arith/egyptian.hpp"

#include <algorithm>
#include <string>

#include "arith/error.hpp"
#include "arith/multigraph.hpp"
#include "arith/parallel.hpp"

namespace arith {

bool is_valid(const UnitFractionRep& rep) {
  if (rep.a < 1 || rep.m < 1 || rep.x.empty()) return false;
  for (std::size_t i = 0; i < rep.x.size(); ++i) {
    if (rep.x[i] < 1) return false;
    if (i > 0 && rep.x[i] < rep.x[i - 1]) return false;
  }
  // a * prod x == m * sum_i prod_{j != i} x_j
  BigInt product = 1;
  for (const auto& v : rep.x) product *= v;
  BigInt cofactor_sum = 0;
  for (const auto& v : rep.x) cofactor_sum += product / v;
  return rep.a * product == rep.m * cofactor_sum;
}

namespace {

using Visit = std::function<void(const BigVector&)>;

// Remaining target num/den (lowest terms, positive), `k` terms left, each at
// least `lo_bound`. The search is the usual one: 1/x < num/den forces
// x > den/num, and x being the smallest of k terms forces x <= k*den/num.
class FractionSearch {
 public:
  explicit FractionSearch(const Visit& visit) : visit_(visit) {}

  void run(std::size_t k, const BigInt& num, const BigInt& den, const BigInt& lo_bound,
           BigVector& prefix) {
    if (k == 1) {
      if (num == 1 && den >= lo_bound) {
        prefix.push_back(den);
        visit_(prefix);
        prefix.pop_back();
      }
      return;
    }
    BigInt lo = floor_div(den, num) + 1;
    if (lo < lo_bound) lo = lo_bound;
    const BigInt hi = floor_div(den * static_cast<unsigned long>(k), num);
    if (k == 2) {
      // 1/x + 1/y = num/den with y = den*x / (num*x - den), y >= x.
      BigInt rem, y;
      for (BigInt x = lo; x <= hi; ++x) {
        rem = num * x - den;
        y = den * x;
        if (!mpz_divisible_p(y.get_mpz_t(), rem.get_mpz_t())) continue;
        mpz_divexact(y.get_mpz_t(), y.get_mpz_t(), rem.get_mpz_t());
        prefix.push_back(x);
        prefix.push_back(y);
        visit_(prefix);
        prefix.pop_back();
        prefix.pop_back();
      }
      return;
    }
    BigInt next_num, next_den, g;
    for (BigInt x = lo; x <= hi; ++x) {
      step(num, den, x, next_num, next_den, g);
      prefix.push_back(x);
      run(k - 1, next_num, next_den, x, prefix);
      prefix.pop_back();
    }
  }

  // num/den - 1/x in lowest terms.
  static void step(const BigInt& num, const BigInt& den, const BigInt& x, BigInt& next_num,
                   BigInt& next_den, BigInt& g) {
    next_num = num * x - den;
    next_den = den * x;
    mpz_gcd(g.get_mpz_t(), next_num.get_mpz_t(), next_den.get_mpz_t());
    if (g != 1) {
      mpz_divexact(next_num.get_mpz_t(), next_num.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(next_den.get_mpz_t(), next_den.get_mpz_t(), g.get_mpz_t());
    }
  }

 private:
  const Visit& visit_;
};

void check_args(std::size_t n, const BigInt& a, const BigInt& m) {
  if (n < 1) throw Error(ErrorKind::Input, "need at least one term");
  if (a < 1 || m < 1) throw Error(ErrorKind::Input, "a and m must be positive");
}

struct Target {
  BigInt num;
  BigInt den;
};

Target lowest_terms(const BigInt& a, const BigInt& m) {
  const BigInt g = gcd(a, m);
  return {a / g, m / g};
}

// Number of independent x_1 branches the search is split into; 1 when serial.
std::size_t task_count(std::size_t n, const Target& t, unsigned threads) {
  if (n == 1 || threads <= 1) return 1;
  const BigInt lo = floor_div(t.den, t.num) + 1;
  const BigInt hi = floor_div(t.den * static_cast<unsigned long>(n), t.num);
  if (hi < lo) return 1;
  const BigInt span = hi - lo + 1;
  if (!span.fits_ulong_p()) throw Error(ErrorKind::TooLarge, "x_1 range too large to split");
  return span.get_ui();
}

// Runs the search as `tasks` branches (see task_count); make_visit(task)
// yields the visitor for one branch.
template <class MakeVisit>
void search_split(std::size_t n, const Target& t, std::size_t tasks, unsigned threads,
                  MakeVisit&& make_visit) {
  if (tasks == 1) {
    const Visit visit = make_visit(0);
    FractionSearch search(visit);
    BigVector prefix;
    search.run(n, t.num, t.den, BigInt(1), prefix);
    return;
  }
  const BigInt lo = floor_div(t.den, t.num) + 1;
  parallel_for(tasks, threads, [&](std::size_t task) {
    const Visit visit = make_visit(task);
    FractionSearch search(visit);
    const BigInt x = lo + static_cast<unsigned long>(task);
    BigInt next_num, next_den, g;
    FractionSearch::step(t.num, t.den, x, next_num, next_den, g);
    BigVector prefix{x};
    search.run(n - 1, next_num, next_den, x, prefix);
  });
}

}  // namespace

std::vector<UnitFractionRep> enumerate_unit_fractions(std::size_t n, const BigInt& a,
                                                      const BigInt& m, unsigned threads) {
  check_args(n, a, m);
  const Target target = lowest_terms(a, m);
  const std::size_t tasks = task_count(n, target, threads);
  std::vector<std::vector<BigVector>> buckets(tasks);
  search_split(n, target, tasks, threads, [&](std::size_t t) {
    return Visit([&buckets, t](const BigVector& x) { buckets[t].push_back(x); });
  });
  // Branches are in x_1 order and each is searched lexicographically.
  std::vector<UnitFractionRep> out;
  for (auto& bucket : buckets)
    for (auto& x : bucket) out.push_back(UnitFractionRep{a, m, std::move(x)});
  return out;
}

BigInt f_n_count(std::size_t n, const BigInt& a, const BigInt& m, unsigned threads) {
  check_args(n, a, m);
  const Target target = lowest_terms(a, m);
  const std::size_t tasks = task_count(n, target, threads);
  std::vector<unsigned long> counts(tasks, 0);
  search_split(n, target, tasks, threads, [&](std::size_t t) {
    return Visit([&counts, t](const BigVector&) { ++counts[t]; });
  });
  BigInt total = 0;
  for (unsigned long c : counts) total += c;
  return total;
}

UnitFractionRep structure_to_fractions(const BigInt& m, const ArithStructure& s) {
  if (m < 1) throw Error(ErrorKind::Input, "m must be positive");
  if (s.r.size() < 2) throw Error(ErrorKind::InvalidStructure, "mK_n needs n >= 2");
  const Multigraph g = Multigraph::complete(s.r.size(), m);
  if (!verify(g, s)) throw Error(ErrorKind::InvalidStructure, "structure does not verify on mK_n");
  UnitFractionRep rep{BigInt(1), m, {}};
  rep.x.reserve(s.d.size());
  for (const auto& d : s.d) rep.x.push_back(d + m);
  std::sort(rep.x.begin(), rep.x.end());
  return rep;
}

ArithStructure fractions_to_structure(const UnitFractionRep& rep) {
  if (rep.a != 1) throw Error(ErrorKind::Input, "only representations of 1/m correspond to structures");
  if (!is_valid(rep)) throw Error(ErrorKind::Input, "not a valid unit fraction representation");
  for (const auto& x : rep.x) {
    if (x <= rep.m) {
      throw Error(ErrorKind::DegenerateRep, "term " + x.get_str() + " is not larger than m = " +
                                                rep.m.get_str());
    }
  }
  BigInt product = 1;
  for (const auto& x : rep.x) product *= x;
  ArithStructure s;
  s.r.reserve(rep.x.size());
  s.d.reserve(rep.x.size());
  for (const auto& x : rep.x) {
    s.r.push_back(product / x);
    s.d.push_back(x - rep.m);
  }
  const BigInt common = gcd_of(s.r);
  for (auto& r : s.r) r /= common;
  if (!verify(Multigraph::complete(rep.x.size(), rep.m), s)) {
    throw Error(ErrorKind::Internal, "null-space generator does not verify on mK_n");
  }
  return s;
}

}  // namespace arith
