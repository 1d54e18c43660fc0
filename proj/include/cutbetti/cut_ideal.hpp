#pragma once

// Cut-ideal binomials of a tree, the incomparability weight order, normal
// forms, and a Buchberger-criterion certificate for the quadratic basis.

#include <cutbetti/common.hpp>
#include <cutbetti/tree.hpp>

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace cutbetti {

/// A monomial in the cut variables r_X, X a subset of the m tree edges.
class CutMonomial {
 public:
  using Exponents = std::map<std::uint64_t, std::uint32_t>;

  explicit CutMonomial(int width) : width_(width) {
    if (width < 0 || width > EdgeSubset::kMaxWidth) throw InvalidInput("monomial width out of range");
  }

  static CutMonomial variable(const EdgeSubset& x, std::uint32_t exponent = 1) {
    CutMonomial r(x.width());
    r.multiply(x, exponent);
    return r;
  }

  static CutMonomial product(const EdgeSubset& x, const EdgeSubset& y) {
    CutMonomial r = variable(x);
    r.multiply(y);
    return r;
  }

  int width() const { return width_; }
  std::uint64_t degree() const { return degree_; }
  const Exponents& exponents() const { return exps_; }
  bool is_one() const { return exps_.empty(); }

  std::uint32_t exponent(const EdgeSubset& x) const {
    auto it = exps_.find(x.bits());
    return it == exps_.end() ? 0 : it->second;
  }

  std::vector<EdgeSubset> support() const {
    std::vector<EdgeSubset> s;
    for (const auto& [b, e] : exps_) s.emplace_back(b, width_);
    return s;
  }

  void multiply(const EdgeSubset& x, std::uint32_t exponent = 1) {
    check_width(x.width());
    if (exponent == 0) return;
    auto& e = exps_[x.bits()];
    if (e > std::numeric_limits<std::uint32_t>::max() - exponent)
      throw SizeLimitExceeded("monomial exponent overflow");
    e += exponent;
    degree_ += exponent;
  }

  /// Removes `exponent` copies of r_x; the caller guarantees divisibility.
  void divide(const EdgeSubset& x, std::uint32_t exponent = 1) {
    auto it = exps_.find(x.bits());
    if (it == exps_.end() || it->second < exponent) throw InvalidInput("monomial not divisible");
    it->second -= exponent;
    degree_ -= exponent;
    if (it->second == 0) exps_.erase(it);
  }

  CutMonomial operator*(const CutMonomial& o) const {
    check_width(o.width_);
    CutMonomial r = *this;
    for (const auto& [b, e] : o.exps_) r.multiply(EdgeSubset(b, width_), e);
    return r;
  }

  bool divides(const CutMonomial& o) const {
    for (const auto& [b, e] : exps_) {
      auto it = o.exps_.find(b);
      if (it == o.exps_.end() || it->second < e) return false;
    }
    return true;
  }

  /// o / this, requires divides(o).
  CutMonomial quotient_of(const CutMonomial& o) const {
    CutMonomial r = o;
    for (const auto& [b, e] : exps_) r.divide(EdgeSubset(b, width_), e);
    return r;
  }

  CutMonomial lcm(const CutMonomial& o) const {
    check_width(o.width_);
    CutMonomial r = *this;
    for (const auto& [b, e] : o.exps_) {
      auto cur = exponent(EdgeSubset(b, width_));
      if (e > cur) r.multiply(EdgeSubset(b, width_), e - cur);
    }
    return r;
  }

  bool coprime(const CutMonomial& o) const {
    for (const auto& [b, e] : exps_)
      if (o.exps_.contains(b)) return false;
    return true;
  }

  /// True when the support is totally ordered by inclusion.
  bool support_is_chain() const {
    for (auto i = exps_.begin(); i != exps_.end(); ++i)
      for (auto j = std::next(i); j != exps_.end(); ++j)
        if (!EdgeSubset(i->first, width_).comparable(EdgeSubset(j->first, width_))) return false;
    return true;
  }

  /// Bit patterns of the variables with multiplicity, largest first.
  std::vector<std::uint64_t> sorted_descending() const {
    std::vector<std::uint64_t> v;
    v.reserve(degree_);
    for (auto it = exps_.rbegin(); it != exps_.rend(); ++it) v.insert(v.end(), it->second, it->first);
    return v;
  }

  std::string to_string() const {
    if (exps_.empty()) return "1";
    std::string s;
    for (const auto& [b, e] : exps_) {
      if (!s.empty()) s += '*';
      s += "r" + EdgeSubset(b, width_).to_string();
      if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
  }

  friend bool operator==(const CutMonomial&, const CutMonomial&) = default;

 private:
  void check_width(int w) const {
    if (w != width_) throw InvalidInput("mixed edge-subset widths in one monomial");
  }

  int width_;
  std::uint64_t degree_ = 0;
  Exponents exps_;
};

/// Image of a monomial under r_X -> prod_{e in X} s_e * prod_{e not in X} t_e.
struct PhiImage {
  std::vector<std::uint64_t> s_exponents;
  std::vector<std::uint64_t> t_exponents;
  friend bool operator==(const PhiImage&, const PhiImage&) = default;
};

inline PhiImage phi(const CutMonomial& mono) {
  const auto m = static_cast<std::size_t>(mono.width());
  PhiImage img{std::vector<std::uint64_t>(m, 0), std::vector<std::uint64_t>(m, 0)};
  for (const auto& [bits, e] : mono.exponents())
    for (std::size_t i = 0; i < m; ++i) ((bits >> i) & 1U ? img.s_exponents : img.t_exponents)[i] += e;
  return img;
}

/// Number of subsets of the m-set incomparable with x.
inline std::uint64_t weight(const EdgeSubset& x) {
  const int m = x.width();
  const int k = x.size();
  return (std::uint64_t{1} << m) - (std::uint64_t{1} << k) - (std::uint64_t{1} << (m - k)) + 1;
}

inline BigInt total_weight(const CutMonomial& mono) {
  BigInt w = 0;
  for (const auto& [b, e] : mono.exponents()) w += BigInt(weight(EdgeSubset(b, mono.width()))) * e;
  return w;
}

/// Degree, then total weight, then the descending-sorted variable lists
/// compared lexicographically.
inline std::strong_ordering compare(const CutMonomial& a, const CutMonomial& b) {
  if (a.width() != b.width()) throw InvalidInput("compare: monomials of different widths");
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  const BigInt wa = total_weight(a);
  const BigInt wb = total_weight(b);
  if (wa != wb) return wa < wb ? std::strong_ordering::less : std::strong_ordering::greater;
  const auto la = a.sorted_descending();
  const auto lb = b.sorted_descending();
  return std::lexicographical_compare_three_way(la.begin(), la.end(), lb.begin(), lb.end());
}

/// lead - trail with lead strictly larger in the weight order.
class CutBinomial {
 public:
  CutBinomial(CutMonomial a, CutMonomial b) : lead_(std::move(a)), trail_(std::move(b)) {
    if (lead_.degree() != trail_.degree()) throw InvalidInput("binomial must be homogeneous");
    auto c = compare(lead_, trail_);
    if (c == 0) throw InvalidInput("binomial with equal terms");
    if (c < 0) std::swap(lead_, trail_);
  }

  const CutMonomial& lead() const { return lead_; }
  const CutMonomial& trail() const { return trail_; }

  std::string to_string() const { return lead_.to_string() + " - " + trail_.to_string(); }

 private:
  CutMonomial lead_;
  CutMonomial trail_;
};

inline void check_ground_size(int m, int max_m, const char* what) {
  if (m < 0) throw InvalidInput(std::string(what) + ": negative edge count");
  if (m > max_m)
    throw SizeLimitExceeded(std::string(what) + ": edge count " + std::to_string(m) +
                            " exceeds the limit of " + std::to_string(max_m));
}

/// r_X r_Y - r_{X|Y} r_{X&Y} for every unordered incomparable pair, ordered by
/// (X, Y) with X < Y numerically.
inline std::vector<CutBinomial> groebner_basis(int m, int max_m = 8) {
  check_ground_size(m, max_m, "groebner_basis");
  std::vector<CutBinomial> basis;
  const std::uint64_t n = std::uint64_t{1} << m;
  for (std::uint64_t x = 0; x < n; ++x)
    for (std::uint64_t y = x + 1; y < n; ++y) {
      EdgeSubset X(x, m);
      EdgeSubset Y(y, m);
      if (X.comparable(Y)) continue;
      basis.emplace_back(CutMonomial::product(X, Y), CutMonomial::product(X | Y, X & Y));
    }
  return basis;
}

namespace detail {

// One union/intersection rewrite at a chosen incomparable pair.
inline void stack_pair(CutMonomial& mono, const EdgeSubset& x, const EdgeSubset& y) {
  mono.divide(x);
  mono.divide(y);
  mono.multiply(x | y);
  mono.multiply(x & y);
}

inline std::vector<std::pair<EdgeSubset, EdgeSubset>> incomparable_pairs(const CutMonomial& mono) {
  std::vector<std::pair<EdgeSubset, EdgeSubset>> pairs;
  const auto s = mono.support();
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!s[i].comparable(s[j])) pairs.emplace_back(s[i], s[j]);
  return pairs;
}

}  // namespace detail

/// Rewrites incomparable pairs X, Y to X|Y, X&Y until the support is a chain.
inline CutMonomial normal_form(CutMonomial mono) {
  for (;;) {
    auto pairs = detail::incomparable_pairs(mono);
    if (pairs.empty()) return mono;
    detail::stack_pair(mono, pairs.front().first, pairs.front().second);
  }
}

/// Same rewriting with the pair chosen uniformly at random at every step.
template <class Rng>
CutMonomial normal_form(CutMonomial mono, Rng& rng) {
  for (;;) {
    auto pairs = detail::incomparable_pairs(mono);
    if (pairs.empty()) return mono;
    std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
    const auto& [x, y] = pairs[pick(rng)];
    detail::stack_pair(mono, x, y);
  }
}

struct CertificationFailure {
  std::size_t first;   // basis indices
  std::size_t second;
  std::string residue;
};

struct CertificationReport {
  int edge_count = 0;
  std::size_t basis_size = 0;
  std::size_t s_pairs = 0;
  std::size_t coprime_pairs = 0;   // leading terms share no variable
  std::size_t reduced_to_zero = 0;
  bool leads_ordered = true;       // lead > trail for every element
  bool phi_preserved = true;       // phi(lead) == phi(trail)
  std::vector<CertificationFailure> failures;

  bool passed() const {
    return leads_ordered && phi_preserved && failures.empty() && reduced_to_zero == s_pairs;
  }
};

namespace detail {

// Reduces lhs - rhs modulo the basis, always using the first basis element
// whose leading term divides the current leading term. Returns the residue as
// text when it is nonzero.
inline std::optional<std::string> reduce_binomial(CutMonomial lhs, CutMonomial rhs,
                                                  const std::vector<CutBinomial>& basis) {
  for (;;) {
    if (lhs == rhs) return std::nullopt;
    if (compare(lhs, rhs) < 0) std::swap(lhs, rhs);
    const CutBinomial* hit = nullptr;
    for (const auto& g : basis)
      if (g.lead().divides(lhs)) {
        hit = &g;
        break;
      }
    if (hit == nullptr) return lhs.to_string() + " - " + rhs.to_string();
    lhs = hit->lead().quotient_of(lhs) * hit->trail();
  }
}

}  // namespace detail

/// Checks every S-polynomial of the quadratic basis reduces to zero and that
/// every element lies in the kernel of phi.
inline CertificationReport certify_groebner(int m, int max_m = 5) {
  check_ground_size(m, max_m, "certify_groebner");
  const auto basis = groebner_basis(m, max_m);
  CertificationReport rep;
  rep.edge_count = m;
  rep.basis_size = basis.size();
  for (const auto& g : basis) {
    if (compare(g.lead(), g.trail()) <= 0) rep.leads_ordered = false;
    if (phi(g.lead()) != phi(g.trail())) rep.phi_preserved = false;
  }
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a + 1; b < basis.size(); ++b) {
      ++rep.s_pairs;
      const auto& f = basis[a];
      const auto& g = basis[b];
      if (f.lead().coprime(g.lead())) ++rep.coprime_pairs;
      const CutMonomial l = f.lead().lcm(g.lead());
      // S(f, g) = (l / lead f) * trail f - (l / lead g) * trail g
      auto residue = detail::reduce_binomial(f.lead().quotient_of(l) * f.trail(),
                                             g.lead().quotient_of(l) * g.trail(), basis);
      if (residue)
        rep.failures.push_back({a, b, *residue});
      else
        ++rep.reduced_to_zero;
    }
  return rep;
}

}  // namespace cutbetti
