#include "arith/mkn.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <utility>

#include "arith/bounds.hpp"
#include "arith/error.hpp"
#include "arith/parallel.hpp"

namespace arith {

std::vector<ArithStructure> enumerate_mk2(const BigInt& multiplicity) {
  if (multiplicity < 1) throw Error(ErrorKind::Input, "multiplicity must be positive");
  const BigVector divs = divisors(multiplicity);
  std::vector<ArithStructure> out;
  for (std::size_t i = 0; i < divs.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const BigInt& r1 = divs[i];
      const BigInt& r2 = divs[j];
      if (gcd(r1, r2) != 1) continue;
      out.push_back({{r1, r2}, {multiplicity * r2 / r1, multiplicity * r1 / r2}});
    }
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

namespace {

struct Tail {
  BigVector r;  // non-increasing
  BigInt sum;
};

using TailList = std::vector<Tail>;

// Builds r = (m*g*sum/d1, g*tail) into `r` and reports whether it is a
// primitive structure on mK_n. `tail_sum` is sum(tail).
bool lift_vector(const BigInt& m, const BigInt& d1, std::span<const BigInt> tail,
                 const BigInt& tail_sum, const BigInt& g, BigVector& r, BigInt& scratch) {
  // r_1 >= g*tail_1  <=>  m*sum >= d1*tail_1 (g cancels).
  scratch = m * tail_sum;
  if (scratch < d1 * tail.front()) return false;
  scratch *= g;
  if (!mpz_divisible_p(scratch.get_mpz_t(), d1.get_mpz_t())) return false;
  r.resize(tail.size() + 1);
  mpz_divexact(r[0].get_mpz_t(), scratch.get_mpz_t(), d1.get_mpz_t());
  for (std::size_t j = 0; j < tail.size(); ++j) r[j + 1] = g * tail[j];
  // r_j d_j = m (S - r_j) needs r_j | m*S.
  scratch = m * (r[0] + g * tail_sum);
  for (const auto& v : r)
    if (!mpz_divisible_p(scratch.get_mpz_t(), v.get_mpz_t())) return false;
  return gcd_of(r) == 1;
}

ArithStructure with_degrees(const BigInt& m, BigVector r) {
  BigInt total = 0;
  for (const auto& v : r) total += v;
  BigVector d(r.size());
  for (std::size_t j = 0; j < r.size(); ++j) d[j] = m * (total - r[j]) / r[j];
  return {std::move(r), std::move(d)};
}

class DecEnumerator {
 public:
  explicit DecEnumerator(MknStats* stats) : stats_(stats) {}

  std::shared_ptr<const TailList> dec(std::size_t k, const BigInt& m) {
    const auto key = std::make_pair(k, m);
    {
      std::lock_guard lock(memo_mutex_);
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    auto result = std::make_shared<TailList>();
    if (k == 2) {
      for (auto& s : enumerate_mk2(m)) {
        BigInt sum = s.r[0] + s.r[1];
        result->push_back({std::move(s.r), std::move(sum)});
      }
    } else {
      std::set<BigVector> found;
      const BigInt top = m * static_cast<unsigned long>(k - 1);
      for (BigInt d1 = 1; d1 <= top; ++d1) {
        for (auto& r : lift_branch(k, m, d1)) {
          if (!found.insert(std::move(r)).second) ++duplicates_;
        }
      }
      for (const auto& r : found) {
        BigInt sum = 0;
        for (const auto& v : r) sum += v;
        result->push_back({r, std::move(sum)});
      }
    }
    std::lock_guard lock(memo_mutex_);
    return memo_.emplace(key, std::move(result)).first->second;
  }

  // All lifts to mK_k with first-vertex degree d1.
  std::vector<BigVector> lift_branch(std::size_t k, const BigInt& m, const BigInt& d1) {
    const BigInt reduced = m * m + d1 * m;
    const auto tails = dec(k - 1, reduced);
    const BigVector scales = divisors(m);
    std::vector<BigVector> out;
    BigVector r;
    BigInt scratch;
    std::size_t checks = 0;
    for (const auto& g : scales) {
      for (const auto& tail : *tails) {
        ++checks;
        if (lift_vector(m, d1, tail.r, tail.sum, g, r, scratch)) out.push_back(r);
      }
    }
    lift_checks_ += checks;
    accepted_ += out.size();
    return out;
  }

  void finish(std::size_t top_level_duplicates) {
    if (!stats_) return;
    stats_->lift_checks = lift_checks_;
    stats_->accepted = accepted_;
    stats_->duplicates = duplicates_ + top_level_duplicates;
    std::lock_guard lock(memo_mutex_);
    stats_->memo_entries = memo_.size();
  }

 private:
  MknStats* stats_;
  std::mutex memo_mutex_;
  std::map<std::pair<std::size_t, BigInt>, std::shared_ptr<const TailList>> memo_;
  std::atomic<std::size_t> lift_checks_{0};
  std::atomic<std::size_t> accepted_{0};
  std::atomic<std::size_t> duplicates_{0};
};

}  // namespace

std::optional<ArithStructure> lift_check(std::size_t n, const BigInt& m, const BigInt& d1,
                                         std::span<const BigInt> tail, const BigInt& g) {
  if (n < 3) throw Error(ErrorKind::Input, "lifting needs n >= 3");
  if (m < 1 || g < 1) throw Error(ErrorKind::Input, "m and g must be positive");
  if (d1 < 1 || d1 > m * static_cast<unsigned long>(n - 1)) {
    throw Error(ErrorKind::Input, "d1 must lie in [1, (n-1)m]");
  }
  if (tail.size() != n - 1) throw Error(ErrorKind::LengthMismatch, "tail must have n-1 entries");
  if (!std::is_sorted(tail.begin(), tail.end(), std::greater<>())) {
    throw Error(ErrorKind::Input, "tail must be non-increasing");
  }
  BigInt sum = 0;
  for (const auto& v : tail) {
    if (v < 1) throw Error(ErrorKind::Input, "tail entries must be positive");
    sum += v;
  }
  BigVector r;
  BigInt scratch;
  if (!lift_vector(m, d1, tail, sum, g, r, scratch)) return std::nullopt;
  return with_degrees(m, std::move(r));
}

EnumerationResult enumerate_dec_mkn(std::size_t n, const BigInt& m, unsigned threads,
                                    MknStats* stats) {
  const auto started = std::chrono::steady_clock::now();
  if (n < 2) throw Error(ErrorKind::Input, "mK_n needs n >= 2");
  if (m < 1) throw Error(ErrorKind::Input, "m must be positive");

  EnumerationResult result;
  result.method = "recursive";
  result.complete = true;

  if (n == 2) {
    result.structures = enumerate_mk2(m);
  } else {
    DecEnumerator enumerator(stats);
    const BigInt top = m * static_cast<unsigned long>(n - 1);
    if (!top.fits_ulong_p()) throw Error(ErrorKind::TooLarge, "(n-1)m does not fit in 64 bits");
    const std::size_t branches = top.get_ui();
    std::vector<std::vector<BigVector>> per_branch(branches);
    parallel_for(branches, threads, [&](std::size_t t) {
      per_branch[t] = enumerator.lift_branch(n, m, BigInt(static_cast<unsigned long>(t + 1)));
    });
    std::set<BigVector> found;
    std::size_t duplicates = 0;
    for (auto& branch : per_branch)
      for (auto& r : branch)
        if (!found.insert(std::move(r)).second) ++duplicates;
    enumerator.finish(duplicates);
    result.structures.reserve(found.size());
    for (const auto& r : found) result.structures.push_back(with_degrees(m, r));
    std::sort(result.structures.begin(), result.structures.end(), canonical_less);
  }

  result.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return result;
}

}  // namespace arith
