#pragma once

// Graded Betti numbers of the edge ideal of the incomparability graph, i.e.
// of the initial ideal of a tree's cut ideal, through Hochster's formula
//   beta_{i,j} = sum_{|F| = j} dim H~_{j-i-2}(Ind(Gamma[F])).

#include <cutbetti/combinations.hpp>
#include <cutbetti/common.hpp>
#include <cutbetti/incomparability_graph.hpp>
#include <cutbetti/simplicial.hpp>
#include <cutbetti/small_graph.hpp>
#include <cutbetti/subgraph_count.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <exception>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cutbetti {

struct Budget {
  std::uint64_t max_subsets = 50'000'000;
  std::size_t max_faces = 1'000'000;
  unsigned threads = 1;
};

enum class Route { Enumerate, Census };

inline std::string to_string(Route r) { return r == Route::Enumerate ? "enumerate" : "census"; }

/// beta_{i,j} of the ideal (not the quotient ring), i >= 0, j >= 2.
class BettiTable {
 public:
  BettiTable(int m, Coefficients coeff, Route route) : m_(m), coeff_(coeff), route_(route) {}

  int ground_size() const { return m_; }
  const Coefficients& coefficients() const { return coeff_; }
  Route route() const { return route_; }
  const std::map<std::pair<int, int>, BigInt>& entries() const { return entries_; }

  BigInt get(int i, int j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? BigInt(0) : it->second;
  }

  void add(int i, int j, const BigInt& v) {
    if (v == 0) return;
    if (i < 0 || j < i + 2) throw VerificationFailure("Betti entry outside the edge-ideal range");
    entries_[{i, j}] += v;
  }

  /// Total Betti numbers of the ideal, indexed by homological degree i.
  std::vector<BigInt> totals() const {
    std::vector<BigInt> t;
    for (const auto& [ij, v] : entries_) {
      if (static_cast<std::size_t>(ij.first) >= t.size()) t.resize(static_cast<std::size_t>(ij.first) + 1);
      t[static_cast<std::size_t>(ij.first)] += v;
    }
    return t;
  }

  /// Betti diagram of the quotient ring: a "total:" row, then one row per
  /// strand. Column c >= 1 holds beta_{c-1, c+r}(I) in row r; column 0 is the
  /// ring itself.
  std::string to_m2() const {
    const auto tot = totals();
    const std::size_t cols = tot.size() + 1;
    int rows = 1;
    for (const auto& [ij, v] : entries_) rows = std::max(rows, ij.second - ij.first);
    std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(rows) + 1,
                                                std::vector<std::string>(cols, "."));
    cells[0][0] = "1";
    cells[1][0] = "1";
    for (std::size_t c = 1; c < cols; ++c) cells[0][c] = tot[c - 1].str();
    for (const auto& [ij, v] : entries_)
      cells[static_cast<std::size_t>(ij.second - ij.first)][static_cast<std::size_t>(ij.first) + 1] = v.str();
    // Columns are at least as wide as their index, as in Macaulay2's layout.
    std::vector<std::size_t> width(cols, 0);
    for (std::size_t c = 0; c < cols; ++c) width[c] = std::to_string(c).size();
    for (const auto& row : cells)
      for (std::size_t c = 0; c < cols; ++c) width[c] = std::max(width[c], row[c].size());
    std::ostringstream os;
    for (std::size_t r = 0; r < cells.size(); ++r) {
      std::string label = r == 0 ? "total:" : std::to_string(r - 1) + ":";
      os << std::string(6 - std::min<std::size_t>(6, label.size()), ' ') << label;
      for (std::size_t c = 0; c < cols; ++c)
        os << ' ' << std::string(width[c] - cells[r][c].size(), ' ') << cells[r][c];
      os << '\n';
    }
    return os.str();
  }

  friend bool operator==(const BettiTable& a, const BettiTable& b) {
    return a.m_ == b.m_ && a.entries_ == b.entries_;
  }

 private:
  int m_;
  Coefficients coeff_;
  Route route_;
  std::map<std::pair<int, int>, BigInt> entries_;
};

namespace detail {

inline std::uint64_t induced_code(const std::vector<std::uint64_t>& f) {
  const int k = static_cast<int>(f.size());
  std::uint64_t code = 0;
  int bit = 0;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b, ++bit)
      if (incomparable(f[static_cast<std::size_t>(a)], f[static_cast<std::size_t>(b)]))
        code |= std::uint64_t{1} << SmallGraph::pair_shift(k, bit);
  return code;
}

// Homology profiles shared between workers, keyed by isomorphism class.
class HomologyMemo {
 public:
  HomologyMemo(Coefficients coeff, std::size_t max_faces) : coeff_(coeff), max_faces_(max_faces) {}

  HomologyProfile get(const CanonicalForm& cls) {
    {
      std::lock_guard lock(mu_);
      if (auto it = memo_.find(cls.key); it != memo_.end()) return it->second;
    }
    auto profile = reduced_homology(independence_complex(cls.representative, max_faces_), coeff_);
    std::lock_guard lock(mu_);
    return memo_.try_emplace(cls.key, std::move(profile)).first->second;
  }

  std::size_t size() const {
    std::lock_guard lock(mu_);
    return memo_.size();
  }

 private:
  Coefficients coeff_;
  std::size_t max_faces_;
  mutable std::mutex mu_;
  std::map<CanonicalKey, HomologyProfile> memo_;
};

inline void check_pair_budget(int m, int j, const Budget& budget) {
  const BigInt total = binomial(std::uint64_t{1} << m, static_cast<std::uint64_t>(j));
  if (total > budget.max_subsets)
    throw SizeLimitExceeded("Hochster enumeration needs C(" + std::to_string(std::uint64_t{1} << m) + ", " +
                            std::to_string(j) + ") = " + total.str() + " subsets, budget is " +
                            std::to_string(budget.max_subsets));
}

}  // namespace detail

/// Single Betti number by enumerating all j-subsets of vertices.
inline BigInt betti_pair(int m, int i, int j, const Coefficients& coeff = Coefficients::rationals(),
                         const Budget& budget = {}) {
  if (m < 0 || m > IncGraph::kMaxGroundSize) throw SizeLimitExceeded("ground size out of range");
  if (i < 0 || j < 0) throw InvalidInput("Betti indices must be nonnegative");
  if (j > kMaxCanonicalVertices) throw SizeLimitExceeded("betti_pair supports j <= 8");
  const int dim = j - i - 2;
  if (dim < 0 || j < 2) return 0;
  detail::check_pair_budget(m, j, budget);

  const std::uint64_t n = std::uint64_t{1} << m;
  detail::HomologyMemo memo(coeff, budget.max_faces);
  const unsigned workers = std::max(1U, budget.threads);
  std::vector<BigInt> partial(workers, 0);

  auto work = [&](unsigned w) {
    std::unordered_map<std::uint64_t, std::size_t> by_code;  // labelled induced graph -> rank
    std::uint64_t sum = 0;
    for (std::uint64_t top = w; top < n; top += workers)
      for_each_subset_with_max(top, j, [&](const std::vector<std::uint64_t>& f) {
        const std::uint64_t code = detail::induced_code(f);
        auto it = by_code.find(code);
        if (it == by_code.end()) {
          const auto cls = canonical_form(SmallGraph::from_code(j, code));
          it = by_code.emplace(code, memo.get(cls).rank(dim)).first;
        }
        sum += it->second;
      });
    partial[w] = sum;
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
          try {
            work(w);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
    }
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  return std::accumulate(partial.begin(), partial.end(), BigInt(0));
}

namespace detail {

// Vertex permutations of the incomparability graph induced by permuting the
// ground set, each optionally followed by complementation.
inline std::vector<std::vector<std::uint32_t>> boolean_lattice_symmetries(int m) {
  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 0);
  const std::uint32_t n = 1U << m;
  const std::uint32_t full = n - 1;
  std::vector<std::vector<std::uint32_t>> maps;
  do {
    std::vector<std::uint32_t> img(n);
    for (std::uint32_t x = 0; x < n; ++x) {
      std::uint32_t y = 0;
      for (int b = 0; b < m; ++b)
        if ((x >> b) & 1U) y |= 1U << perm[static_cast<std::size_t>(b)];
      img[x] = y;
    }
    std::vector<std::uint32_t> comp(n);
    for (std::uint32_t x = 0; x < n; ++x) comp[x] = full & ~img[x];
    maps.push_back(std::move(img));
    maps.push_back(std::move(comp));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return maps;
}

}  // namespace detail

inline constexpr int kMaxFullTableGroundSize = 4;

/// Complete Betti table by Hochster's formula over all vertex subsets, with
/// homology memoised per orbit under the symmetries of the Boolean lattice.
inline BettiTable betti_full(int m, const Coefficients& coeff = Coefficients::rationals(), const Budget& budget = {}) {
  if (m < 0) throw InvalidInput("ground size must be nonnegative");
  if (m > kMaxFullTableGroundSize)
    throw SizeLimitExceeded("betti_full enumerates all 2^(2^m) vertex subsets; m = " + std::to_string(m) +
                            " exceeds the limit of " + std::to_string(kMaxFullTableGroundSize));
  const std::uint32_t n = 1U << m;
  const auto symmetries = detail::boolean_lattice_symmetries(m);
  // orbit representative -> (dimension, rank) pairs
  std::unordered_map<std::uint32_t, std::vector<std::pair<int, std::size_t>>> memo;
  BettiTable table(m, coeff, Route::Enumerate);
  std::map<std::pair<int, int>, std::uint64_t> acc;

  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const int j = std::popcount(mask);
    if (j < 2) continue;
    std::uint32_t rep = ~0U;
    for (const auto& sigma : symmetries) {
      std::uint32_t img = 0;
      for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1)
        img |= 1U << sigma[static_cast<std::size_t>(std::countr_zero(rest))];
      rep = std::min(rep, img);
    }
    auto it = memo.find(rep);
    if (it == memo.end()) {
      std::vector<std::uint64_t> verts;
      for (std::uint32_t rest = rep; rest != 0; rest &= rest - 1) verts.push_back(static_cast<std::uint64_t>(std::countr_zero(rest)));
      SmallGraph g(static_cast<int>(verts.size()));
      for (std::size_t a = 0; a < verts.size(); ++a)
        for (std::size_t b = a + 1; b < verts.size(); ++b)
          if (incomparable(verts[a], verts[b])) g.add_edge(static_cast<int>(a), static_cast<int>(b));
      const auto h = reduced_homology(independence_complex(g, budget.max_faces), coeff);
      std::vector<std::pair<int, std::size_t>> nz;
      for (int d = -1; d <= h.top_dimension(); ++d)
        if (h.rank(d) != 0) nz.emplace_back(d, h.rank(d));
      it = memo.emplace(rep, std::move(nz)).first;
    }
    for (auto [d, r] : it->second) acc[{j - d - 2, j}] += r;
  }
  for (const auto& [ij, v] : acc) table.add(ij.first, ij.second, v);
  return table;
}

enum class CensusSource { ClosedForms, BruteForce };

/// beta_{i,j} as sum over j-vertex classes H of (#induced copies of H) times
/// dim H~_{j-i-2}(Ind(H)).
inline BigInt betti_via_census(int m, int i, int j, const Coefficients& coeff = Coefficients::rationals(),
                               CensusSource source = CensusSource::ClosedForms, const Budget& budget = {}) {
  if (i < 0 || j < 0) throw InvalidInput("Betti indices must be nonnegative");
  const int dim = j - i - 2;
  if (dim < 0 || j < 2) return 0;
  if (j > kMaxPatternVertices) throw SizeLimitExceeded("census route supports j <= 5");
  if (m < 0) throw InvalidInput("ground size must be nonnegative");
  std::map<CanonicalKey, BigInt> counts;
  if (source == CensusSource::BruteForce) counts = census_bruteforce(m, j, budget.max_subsets);
  BigInt total = 0;
  for (const auto& cls : isomorphism_classes(j)) {
    const auto rank = reduced_homology(independence_complex(cls.representative), coeff).rank(dim);
    if (rank == 0) continue;
    const BigInt count = source == CensusSource::BruteForce
                             ? counts.at(cls.key)
                             : closed_form(cls.representative).evaluate_integer(static_cast<unsigned>(m));
    total += count * rank;
  }
  return total;
}

}  // namespace cutbetti
