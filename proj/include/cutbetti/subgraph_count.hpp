#pragma once

// Induced-subgraph counts in the incomparability graph: a brute-force census
// and exact closed forms sum_b c_b * b^m obtained by inclusion-exclusion over
// the column patterns of the occurrence.

#include <cutbetti/combinations.hpp>
#include <cutbetti/common.hpp>
#include <cutbetti/incomparability_graph.hpp>
#include <cutbetti/small_graph.hpp>

#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cutbetti {

/// An exact exponential sum sum_b c_b * b^m with rational coefficients.
class ClosedForm {
 public:
  using Terms = std::map<std::uint64_t, Rational, std::greater<>>;

  ClosedForm() = default;

  /// (sum coef_i * base_i^m) / divisor
  static ClosedForm from_integers(std::initializer_list<std::pair<long long, std::uint64_t>> terms,
                                  long long divisor = 1) {
    if (divisor <= 0) throw InvalidInput("closed-form divisor must be positive");
    ClosedForm f;
    for (auto [c, b] : terms) f.add_term(b, Rational(c, divisor));
    return f;
  }

  void add_term(std::uint64_t base, const Rational& coef) {
    if (coef == 0) return;
    auto& c = terms_[base];
    c += coef;
    if (c == 0) terms_.erase(base);
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  ClosedForm& operator+=(const ClosedForm& o) {
    for (const auto& [b, c] : o.terms_) add_term(b, c);
    return *this;
  }
  friend ClosedForm operator+(ClosedForm a, const ClosedForm& b) { return a += b; }
  friend ClosedForm operator*(const Rational& s, const ClosedForm& f) {
    ClosedForm r;
    for (const auto& [b, c] : f.terms_) r.add_term(b, s * c);
    return r;
  }
  friend ClosedForm operator-(const ClosedForm& a, const ClosedForm& b) { return a + Rational(-1) * b; }
  friend bool operator==(const ClosedForm&, const ClosedForm&) = default;

  Rational evaluate(unsigned m) const {
    Rational v = 0;
    for (const auto& [b, c] : terms_) v += c * Rational(pow_big(b, m));
    return v;
  }

  /// Evaluates and insists the value is an integer.
  BigInt evaluate_integer(unsigned m) const {
    const Rational v = evaluate(m);
    if (boost::multiprecision::denominator(v) != 1)
      throw VerificationFailure("closed form " + to_string() + " is not integral at " + std::to_string(m));
    return boost::multiprecision::numerator(v);
  }

  struct Normalized {
    std::vector<std::pair<BigInt, std::uint64_t>> terms;  // (integer coefficient, base), base descending
    BigInt divisor = 1;
  };

  /// Integer coefficients over one positive divisor, in lowest terms.
  Normalized normalized() const {
    Normalized n;
    BigInt lcm = 1;
    for (const auto& [b, c] : terms_) lcm = boost::multiprecision::lcm(lcm, BigInt(boost::multiprecision::denominator(c)));
    for (const auto& [b, c] : terms_)
      n.terms.emplace_back(boost::multiprecision::numerator(c) * (lcm / boost::multiprecision::denominator(c)), b);
    n.divisor = lcm;
    return n;
  }

  /// E.g. "(4^m - 2*3^m + 2^m)/2".
  std::string to_string(std::string_view var = "m") const {
    if (terms_.empty()) return "0";
    const auto n = normalized();
    std::string s;
    bool first = true;
    for (const auto& [c, b] : n.terms) {
      BigInt mag = c < 0 ? BigInt(-c) : c;
      if (first)
        s += c < 0 ? "-" : "";
      else
        s += c < 0 ? " - " : " + ";
      std::string power = b == 1 ? "1" : std::to_string(b) + "^" + std::string(var);
      if (mag == 1)
        s += power;
      else
        s += mag.str() + (b == 1 ? "" : "*" + power);
      first = false;
    }
    if (n.divisor != 1) s = "(" + s + ")/" + n.divisor.str();
    return s;
  }

 private:
  Terms terms_;
};

/// Per-class counts of induced k-vertex subgraphs of the incomparability graph
/// on m ground elements. Every class on k vertices appears, possibly with 0.
inline std::map<CanonicalKey, BigInt> census_bruteforce(int m, int k, std::uint64_t max_subsets = 50'000'000) {
  if (k < 1 || k > 6) throw InvalidInput("census: pattern size must be 1..6");
  if (m < 0 || m > 20) throw SizeLimitExceeded("census: ground size out of range");
  const std::uint64_t n = std::uint64_t{1} << m;
  const BigInt total = binomial(n, static_cast<std::uint64_t>(k));
  if (total > max_subsets)
    throw SizeLimitExceeded("census: C(" + std::to_string(n) + ", " + std::to_string(k) + ") = " + total.str() +
                            " subsets exceeds the budget of " + std::to_string(max_subsets));
  const int pairs = k * (k - 1) / 2;
  std::vector<std::uint64_t> by_code(std::size_t{1} << pairs, 0);
  for_each_subset(n, k, [&](const std::vector<std::uint64_t>& f) {
    std::uint64_t code = 0;
    int bit = 0;
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b, ++bit)
        if (incomparable(f[static_cast<std::size_t>(a)], f[static_cast<std::size_t>(b)]))
          code |= std::uint64_t{1} << SmallGraph::pair_shift(k, bit);
    ++by_code[code];
  });
  std::map<CanonicalKey, BigInt> out;
  for (const auto& cls : isomorphism_classes(k)) out[cls.key] = 0;
  for (std::uint64_t code = 0; code < by_code.size(); ++code)
    if (by_code[code] != 0) out[canonical_form(SmallGraph::from_code(k, code)).key] += by_code[code];
  return out;
}

inline constexpr int kMaxPatternVertices = 5;

/// Closed form in m for the number of induced copies of `pattern`.
///
/// A labelled occurrence assigns to each ground coordinate one of the 2^k
/// column patterns. An edge uv needs a column with (u,v) = (1,0) and one with
/// (0,1); a non-edge needs exactly one of those two witness types, expanded
/// as [no (1,0)] + [no (0,1)] - 2 [neither]. The "at least one" constraints
/// are expanded by inclusion-exclusion, each term a power of the number of
/// still-allowed column patterns. Dividing by |Aut| gives unlabelled counts.
inline ClosedForm closed_form(const SmallGraph& pattern) {
  const int k = pattern.vertex_count();
  if (k < 1) throw InvalidInput("closed_form: pattern has no vertices");
  if (k > kMaxPatternVertices)
    throw SizeLimitExceeded("closed_form: patterns must have 1.." + std::to_string(kMaxPatternVertices) + " vertices");
  const int columns = 1 << k;
  auto witness = [&](int u, int v) {
    std::uint64_t w = 0;
    for (int c = 0; c < columns; ++c)
      if (((c >> u) & 1) && !((c >> v) & 1)) w |= std::uint64_t{1} << c;
    return w;
  };
  const std::uint64_t all = columns == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << columns) - 1;

  // allowed-column mask -> signed multiplicity
  std::unordered_map<std::uint64_t, long long> state{{all, 1}};
  auto step = [&state](auto&& branch) {
    std::unordered_map<std::uint64_t, long long> next;
    for (const auto& [mask, c] : state) branch(mask, c, next);
    for (auto it = next.begin(); it != next.end();) it = it->second == 0 ? next.erase(it) : std::next(it);
    state = std::move(next);
  };

  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v) {
      const std::uint64_t wuv = witness(u, v);
      const std::uint64_t wvu = witness(v, u);
      if (pattern.adjacent(u, v)) {
        for (std::uint64_t req : {wuv, wvu})
          step([req](std::uint64_t mask, long long c, auto& next) {
            next[mask] += c;
            next[mask & ~req] -= c;
          });
      } else {
        step([wuv, wvu](std::uint64_t mask, long long c, auto& next) {
          next[mask & ~wuv] += c;
          next[mask & ~wvu] += c;
          next[mask & ~(wuv | wvu)] -= 2 * c;
        });
      }
    }

  const auto aut = canonical_form(pattern).automorphisms;
  std::map<std::uint64_t, long long> by_base;
  for (const auto& [mask, c] : state) by_base[static_cast<std::uint64_t>(std::popcount(mask))] += c;
  ClosedForm f;
  for (const auto& [b, c] : by_base) f.add_term(b, Rational(c, static_cast<long long>(aut)));
  return f;
}

struct CensusMismatch {
  int k = 0;
  int m = 0;
  CanonicalKey key;
  BigInt closed_form_value;
  BigInt census_value;
};

struct ClosedFormReport {
  int max_m = 0;
  int max_k = 0;
  std::size_t comparisons = 0;
  std::vector<CensusMismatch> mismatches;
  std::vector<std::string> partition_failures;  // class counts not summing to C(2^m, k)

  bool passed() const { return mismatches.empty() && partition_failures.empty(); }
};

/// Compares closed_form against census_bruteforce for every class on
/// 1..max_k vertices and every m in 1..max_m.
inline ClosedFormReport verify_closed_forms(int max_m, int max_k, std::uint64_t max_subsets = 50'000'000) {
  if (max_k > kMaxPatternVertices) throw SizeLimitExceeded("verify_closed_forms: max_k must be at most 5");
  ClosedFormReport rep{max_m, max_k, 0, {}, {}};
  for (int k = 1; k <= max_k; ++k) {
    std::map<CanonicalKey, ClosedForm> forms;
    for (const auto& cls : isomorphism_classes(k)) forms.emplace(cls.key, closed_form(cls.representative));
    for (int m = 1; m <= max_m; ++m) {
      const auto census = census_bruteforce(m, k, max_subsets);
      BigInt sum = 0;
      for (const auto& [key, form] : forms) {
        const BigInt predicted = form.evaluate_integer(static_cast<unsigned>(m));
        const BigInt& actual = census.at(key);
        ++rep.comparisons;
        sum += predicted;
        if (predicted != actual) rep.mismatches.push_back({k, m, key, predicted, actual});
      }
      const BigInt expected = binomial(std::uint64_t{1} << m, static_cast<std::uint64_t>(k));
      if (sum != expected)
        rep.partition_failures.push_back("k=" + std::to_string(k) + " m=" + std::to_string(m) + ": " + sum.str() +
                                         " != " + expected.str());
    }
  }
  return rep;
}

}  // namespace cutbetti
