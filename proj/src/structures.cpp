#include "arith/structures.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>
#include <string>

#include "arith/bounds.hpp"
#include "arith/error.hpp"
#include "arith/parallel.hpp"

namespace arith {

bool canonical_less(const ArithStructure& a, const ArithStructure& b) {
  if (a.r != b.r) return std::lexicographical_compare(a.r.begin(), a.r.end(), b.r.begin(), b.r.end());
  return std::lexicographical_compare(a.d.begin(), a.d.end(), b.d.begin(), b.d.end());
}

namespace {

void check_length(const Multigraph& g, std::size_t len, const char* what) {
  if (len != g.size()) {
    throw Error(ErrorKind::LengthMismatch, std::string(what) + " has length " + std::to_string(len) +
                                               ", graph has " + std::to_string(g.size()) +
                                               " vertices");
  }
}

BigInt neighbour_sum(const Multigraph& g, std::span<const BigInt> r, std::size_t i) {
  BigInt sum = 0;
  for (std::size_t j = 0; j < g.size(); ++j)
    if (j != i) sum += r[j] * g.multiplicity(i, j);
  return sum;
}

}  // namespace

ArithStructure d_from_r(const Multigraph& g, std::span<const BigInt> r) {
  check_length(g, r.size(), "r");
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] < 1) {
      throw Error(ErrorKind::Input, "r_" + std::to_string(i + 1) + " must be positive", i);
    }
  }
  ArithStructure s;
  s.r.assign(r.begin(), r.end());
  s.d.resize(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    const BigInt sum = neighbour_sum(g, r, i);
    if (!mpz_divisible_p(sum.get_mpz_t(), r[i].get_mpz_t())) {
      throw Error(ErrorKind::NotDivisible,
                  "r_" + std::to_string(i + 1) + " = " + r[i].get_str() +
                      " does not divide its neighbour sum " + sum.get_str(),
                  i);
    }
    s.d[i] = sum / r[i];
  }
  if (gcd_of(r) != 1) {
    throw Error(ErrorKind::GcdNotOne, "gcd(r) = " + gcd_of(r).get_str() + " is not 1");
  }
  return s;
}

BigVector residuals(const Multigraph& g, const ArithStructure& s) {
  check_length(g, s.r.size(), "r");
  check_length(g, s.d.size(), "d");
  BigVector out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = s.r[i] * s.d[i] - neighbour_sum(g, s.r, i);
  return out;
}

bool verify(const Multigraph& g, const ArithStructure& s) {
  check_length(g, s.r.size(), "r");
  check_length(g, s.d.size(), "d");
  for (std::size_t i = 0; i < g.size(); ++i)
    if (s.r[i] < 1 || s.d[i] < 1) return false;
  if (gcd_of(s.r) != 1) return false;
  const BigVector res = residuals(g, s);
  return std::all_of(res.begin(), res.end(), [](const BigInt& v) { return v == 0; });
}

BigMatrix generalized_laplacian(const Multigraph& g, std::span<const BigInt> d) {
  check_length(g, d.size(), "d");
  BigMatrix m = g.to_matrix();
  for (std::size_t i = 0; i < g.size(); ++i) m[i][i] = -d[i];
  return m;
}

NullspaceResult nullspace_rank_check(const BigMatrix& input) {
  const std::size_t rows = input.size();
  const std::size_t cols = rows;
  for (const auto& row : input) {
    if (row.size() != cols) throw Error(ErrorKind::NotSquare, "matrix is not square");
  }
  BigMatrix a = input;
  std::vector<std::size_t> pivot_cols;
  BigInt prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t p = rank;
    while (p < rows && a[p][col] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        a[i][j] = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    pivot_cols.push_back(col);
    ++rank;
  }

  NullspaceResult result;
  result.rank = rank;
  if (cols == 0 || cols - rank != 1) return result;

  std::size_t free_col = 0;
  for (std::size_t c = 0, k = 0; c < cols; ++c) {
    if (k < pivot_cols.size() && pivot_cols[k] == c) {
      ++k;
    } else {
      free_col = c;
      break;
    }
  }

  std::vector<BigRational> x(cols, BigRational(0));
  x[free_col] = 1;
  for (std::size_t k = rank; k-- > 0;) {
    const std::size_t pc = pivot_cols[k];
    BigRational acc = 0;
    for (std::size_t j = pc + 1; j < cols; ++j) acc += BigRational(a[k][j]) * x[j];
    x[pc] = -acc / BigRational(a[k][pc]);
  }

  BigInt denom_lcm = 1;
  for (const auto& v : x) mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), v.get_den_mpz_t());
  BigVector gen(cols);
  for (std::size_t i = 0; i < cols; ++i) gen[i] = x[i].get_num() * (denom_lcm / x[i].get_den());
  const BigInt common = gcd_of(gen);
  for (auto& v : gen) v /= common;
  const auto first = std::find_if(gen.begin(), gen.end(), [](const BigInt& v) { return v != 0; });
  if (first != gen.end() && *first < 0)
    for (auto& v : gen) v = -v;
  result.generator = std::move(gen);
  return result;
}

namespace {

using i64 = std::int64_t;
using i128 = __int128;

// Inverse of a modulo m for gcd(a, m) = 1, m >= 1.
template <class W>
W mod_inverse(W a, W m) {
  if (a == 1 || m == 1) return m == 1 ? 0 : 1;
  W old_r = a, r = m, old_s = 1, s = 0;
  while (r != 0) {
    const W q = old_r / r;
    W t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  W inv = old_s % m;
  if (inv < 0) inv += m;
  return inv;
}

template <class W>
W gcd_w(W a, W b) {
  while (b != 0) {
    const W t = a % b;
    a = b;
    b = t;
  }
  return a;
}

struct Neighbour {
  std::size_t vertex;
  i64 mult;
};

// Vertex order and the constraints each position closes. A vertex whose
// neighbours are all assigned except the one being placed forces a
// congruence on the new value.
constexpr i128 kSumCap = i128{1} << 100;

struct SearchPlan {
  std::size_t n = 0;
  std::vector<i64> box;
  std::vector<std::vector<Neighbour>> adj;
  std::vector<std::size_t> order;
  std::vector<std::vector<Neighbour>> forcing;
  std::vector<bool> closes_self;
  // Largest possible weighted neighbour sum, for picking the word size.
  i128 max_sum = 0;
  // For small boxes: per distinct multiplicity mu and modulus q <= max box,
  // gcd(mu, q) and the inverse of mu/gcd modulo q/gcd.
  std::vector<i64> mults;
  std::vector<std::vector<std::pair<i64, i64>>> inverse_table;

  SearchPlan(const Multigraph& g, std::vector<i64> boxes) : n(g.size()), box(std::move(boxes)) {
    adj.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      i128 sum = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || g.multiplicity(i, j) == 0) continue;
        const i64 mult = to_int64(g.multiplicity(i, j));
        adj[i].push_back({j, mult});
        sum = std::min<i128>(sum + static_cast<i128>(mult) * box[j], kSumCap);
      }
      max_sum = std::max(max_sum, sum);
    }
    build_order(g);
    build_inverse_table();
  }

  void build_inverse_table() {
    constexpr i64 kTableLimit = 1 << 16;
    constexpr std::size_t kMaxMults = 4;
    const i64 top = *std::max_element(box.begin(), box.end());
    for (const auto& row : adj)
      for (const auto& nb : row)
        if (nb.mult != 1 && std::find(mults.begin(), mults.end(), nb.mult) == mults.end())
          mults.push_back(nb.mult);
    if (top > kTableLimit || mults.size() > kMaxMults) {
      mults.clear();
      return;
    }
    for (const i64 mu : mults) {
      std::vector<std::pair<i64, i64>> table(static_cast<std::size_t>(top) + 1, {1, 0});
      for (i64 q = 2; q <= top; ++q) {
        const i64 gg = std::gcd(mu, q);
        const i64 m = q / gg;
        table[q] = {gg, m == 1 ? 0 : mod_inverse<i64>((mu / gg) % m, m)};
      }
      inverse_table.push_back(std::move(table));
    }
  }

  // (gcd(mu, q), inverse) from the table, or nullptr when not tabulated.
  const std::pair<i64, i64>* lookup(i64 mu, i64 q) const {
    for (std::size_t t = 0; t < mults.size(); ++t)
      if (mults[t] == mu) return &inverse_table[t][static_cast<std::size_t>(q)];
    return nullptr;
  }

  void build_order(const Multigraph& g) {
    std::vector<bool> placed(n, false);
    std::vector<std::size_t> placed_neighbours(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t best = n;
      for (std::size_t v = 0; v < n; ++v) {
        if (placed[v]) continue;
        if (best == n) {
          best = v;
          continue;
        }
        // Prefer vertices that close the most constraints, then small boxes,
        // then high degree.
        const auto key = [&](std::size_t u) {
          return std::make_tuple(placed_neighbours[u], -box[u], g.degree(u));
        };
        if (key(v) > key(best)) best = v;
      }
      placed[best] = true;
      order.push_back(best);
      for (const auto& nb : adj[best]) ++placed_neighbours[nb.vertex];
    }

    std::vector<std::size_t> position(n);
    for (std::size_t k = 0; k < n; ++k) position[order[k]] = k;
    forcing.resize(n);
    closes_self.assign(n, false);
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t w = order[k];
      bool all_before = true;
      for (const auto& nb : adj[w]) {
        const std::size_t v = nb.vertex;
        if (position[v] > k) {
          all_before = false;
          continue;
        }
        // v was placed earlier; does w complete v's neighbourhood?
        bool completes = true;
        for (const auto& nb2 : adj[v])
          if (nb2.vertex != w && position[nb2.vertex] > k) completes = false;
        if (completes) forcing[k].push_back({v, nb.mult});
      }
      closes_self[k] = all_before;
    }
  }
};

// Depth-first search over r in plan order, with neighbour sums held in W.
// Forced congruences are combined by CRT so the search only steps through
// admissible residues.
template <class W>
class BruteSearch {
 public:
  explicit BruteSearch(const SearchPlan& plan) : p_(plan) {}

  void run_first_range(i64 lo, i64 hi, std::vector<std::vector<i64>>& out) const {
    std::vector<i64> r(p_.n, 0);
    const std::size_t v = p_.order[0];
    for (i64 x = lo; x <= hi; ++x) {
      r[v] = x;
      if (p_.closes_self[0] && !self_divides(v, r)) continue;
      descend(1, r, out);
    }
  }

 private:
  W neighbour_sum(std::size_t v, const std::vector<i64>& r) const {
    W s = 0;
    for (const auto& nb : p_.adj[v]) s += static_cast<W>(nb.mult) * r[nb.vertex];
    return s;
  }

  bool self_divides(std::size_t v, const std::vector<i64>& r) const {
    return neighbour_sum(v, r) % r[v] == 0;
  }

  bool consistent(std::size_t k, const std::vector<i64>& r) const {
    for (const auto& nb : p_.forcing[k])
      if (neighbour_sum(nb.vertex, r) % r[nb.vertex] != 0) return false;
    return true;
  }

  void descend(std::size_t k, std::vector<i64>& r, std::vector<std::vector<i64>>& out) const {
    if (k == p_.n) {
      i64 g = 0;
      for (i64 x : r) g = std::gcd(g, x);
      if (g == 1) out.push_back(r);
      return;
    }
    const std::size_t w = p_.order[k];
    const W box = p_.box[w];

    // Each forcing vertex gives x == c (mod m).
    constexpr std::size_t kInline = 16;
    W cs[kInline], ms[kInline];
    std::size_t count = 0, widest = 0;
    for (const auto& [v, mult] : p_.forcing[k]) {
      const W rv = r[v];
      if (rv == 1) continue;
      // r_v | S + mult * x  <=>  mult * x == -S (mod r_v); r[w] is 0 here.
      const W s = neighbour_sum(v, r);
      const W a = mult % rv;
      const W b = (rv - s % rv) % rv;
      W m = rv, c = b;
      if (a != 1) {
        if (const auto* hit = p_.lookup(mult, static_cast<i64>(rv))) {
          const W gg = hit->first;
          if (b % gg != 0) return;
          m = rv / gg;
          c = (b / gg) * hit->second % m;
        } else {
          const W gg = gcd_w(a, rv);
          if (b % gg != 0) return;
          m = rv / gg;
          c = m == 1 ? 0 : (b / gg) * mod_inverse(a / gg, m) % m;
        }
      }
      if (m == 1) continue;
      if (count == kInline) {
        // Rare: fall back to checking the remaining vertices after placement.
        break;
      }
      cs[count] = c;
      ms[count] = m;
      if (count == 0 || m > ms[widest]) widest = count;
      ++count;
    }
    const bool all_listed = count < kInline;

    const auto place = [&](i64 x) {
      r[w] = x;
      for (std::size_t j = 0; j < count; ++j)
        if (j != widest && static_cast<W>(x) % ms[j] != cs[j]) return;
      if (!all_listed && !consistent(k, r)) return;
      if (p_.closes_self[k] && !self_divides(w, r)) return;
      descend(k + 1, r, out);
    };

    if (count == 0) {
      for (i64 x = 1; x <= static_cast<i64>(box); ++x) place(x);
      r[w] = 0;
      return;
    }

    // Step through the widest progression when it is short; otherwise merge
    // all congruences by CRT first.
    W residue = cs[widest], modulus = ms[widest];
    if (box / modulus > 16) {
      for (std::size_t j = 0; j < count && modulus <= box; ++j) {
        if (j == widest) continue;
        const W g2 = gcd_w(modulus, ms[j]);
        W diff = cs[j] - residue;
        if (diff % g2 != 0) return;
        const W m_over = ms[j] / g2;
        if (m_over > 1) {
          diff = (diff / g2) % m_over;
          if (diff < 0) diff += m_over;
          const W t = diff * mod_inverse((modulus / g2) % m_over, m_over) % m_over;
          residue += modulus * t;
          modulus *= m_over;
        }
      }
    }
    const i64 start = static_cast<i64>(residue == 0 ? modulus : residue);
    const i64 step = static_cast<i64>(std::min<W>(modulus, box + 1));
    for (i64 x = start; x <= static_cast<i64>(box); x += step) place(x);
    r[w] = 0;
  }

  const SearchPlan& p_;
};

template <class W>
void run_search(const SearchPlan& plan, unsigned threads,
                std::vector<std::vector<std::vector<i64>>>& partial) {
  const BruteSearch<W> search(plan);
  const i64 first_box = plan.box[plan.order[0]];
  const std::size_t tasks = threads <= 1 ? 1 : std::min<i64>(first_box, 16 * threads);
  partial.assign(tasks, {});
  parallel_for(tasks, threads, [&](std::size_t t) {
    const i64 lo = 1 + static_cast<i64>(t) * first_box / static_cast<i64>(tasks);
    const i64 hi = static_cast<i64>(t + 1) * first_box / static_cast<i64>(tasks);
    search.run_first_range(lo, hi, partial[t]);
  });
}

}  // namespace

EnumerationResult enumerate_brute(const Multigraph& g, const BruteOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  if (options.r_max < 1) throw Error(ErrorKind::Input, "r_max must be at least 1");
  if (!g.is_connected()) throw Error(ErrorKind::Disconnected, "graph is not connected");

  EnumerationResult result;
  result.method = "brute";
  result.r_max = from_int64(options.r_max);
  if (g.size() == 1) {
    // A single vertex has d = 0, which is not a positive integer.
    result.complete = true;
    return result;
  }

  const std::optional<BigVector> vertex_bounds = graph_r_bounds(g);
  const BigInt certified = certified_r_bound(g, vertex_bounds);
  result.certified_bound = certified;
  result.complete = from_int64(options.r_max) >= certified;

  std::vector<i64> box(g.size(), options.r_max);
  if (vertex_bounds) {
    for (std::size_t v = 0; v < g.size(); ++v)
      if ((*vertex_bounds)[v] < box[v]) box[v] = (*vertex_bounds)[v].get_si();
  }
  const SearchPlan plan(g, box);
  std::vector<std::vector<std::vector<i64>>> partial;
  // Products mult * x and CRT intermediates stay below max_sum * box.
  const i128 largest = std::max<i128>(plan.max_sum, *std::max_element(box.begin(), box.end()));
  if (largest < (i128{1} << 31)) {
    run_search<i64>(plan, options.threads, partial);
  } else if (largest >= (i128{1} << 62)) {
    throw Error(ErrorKind::TooLarge, "r_max and multiplicities too large for the search");
  } else {
    run_search<i128>(plan, options.threads, partial);
  }

  for (const auto& chunk : partial) {
    for (const auto& rv : chunk) {
      BigVector r(rv.size());
      for (std::size_t i = 0; i < rv.size(); ++i) r[i] = from_int64(rv[i]);
      result.structures.push_back(d_from_r(g, r));
    }
  }
  std::sort(result.structures.begin(), result.structures.end(), canonical_less);
  result.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return result;
}

std::vector<ArithStructure> unordered_classes(const Multigraph& g,
                                              std::span<const ArithStructure> structures) {
  if (g.size() >= 2 && g != Multigraph::complete(g.size(), g.multiplicity(0, 1))) {
    throw Error(ErrorKind::Input, "unordered classes are only defined on mK_n");
  }
  std::set<BigVector> seen;
  for (const auto& s : structures) {
    BigVector r = s.r;
    std::sort(r.begin(), r.end(), std::greater<>());
    seen.insert(std::move(r));
  }
  std::vector<ArithStructure> out;
  out.reserve(seen.size());
  for (const auto& r : seen) out.push_back(d_from_r(g, r));
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace arith
