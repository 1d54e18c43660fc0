#pragma once

// Independence complexes of small graphs and their reduced simplicial
// homology over Z, Q and prime fields.

#include <cutbetti/common.hpp>
#include <cutbetti/linalg.hpp>
#include <cutbetti/small_graph.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace cutbetti {

/// Coefficient ring for homology: Z, Q, or F_p.
class Coefficients {
 public:
  enum class Kind { Integers, Rationals, Prime };

  static Coefficients integers() { return Coefficients(Kind::Integers, 0); }
  static Coefficients rationals() { return Coefficients(Kind::Rationals, 0); }
  static Coefficients prime(std::int64_t p) {
    if (p < 2 || p > 1'000'000'007) throw InvalidInput("unsupported field characteristic");
    for (std::int64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) throw InvalidInput("characteristic " + std::to_string(p) + " is not prime");
    return Coefficients(Kind::Prime, p);
  }

  /// Accepts "z", "q", or a prime such as "2".
  static Coefficients parse(const std::string& s) {
    if (s == "z" || s == "Z") return integers();
    if (s == "q" || s == "Q") return rationals();
    try {
      std::size_t pos = 0;
      long long p = std::stoll(s, &pos);
      if (pos == s.size()) return prime(p);
    } catch (const std::logic_error&) {
    }
    throw InvalidInput("unknown coefficient choice '" + s + "' (expected z, q or a prime)");
  }

  Kind kind() const { return kind_; }
  std::int64_t characteristic() const { return p_; }

  std::string name() const {
    switch (kind_) {
      case Kind::Integers: return "z";
      case Kind::Rationals: return "q";
      case Kind::Prime: return std::to_string(p_);
    }
    return "?";
  }

  friend bool operator==(const Coefficients&, const Coefficients&) = default;

 private:
  Coefficients(Kind k, std::int64_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::int64_t p_;
};

/// A simplicial complex on vertices 0..n-1 (n <= 32), faces as bitmasks
/// grouped by cardinality. faces(0) holds the empty face unless the complex
/// is void.
class SimplicialComplex {
 public:
  explicit SimplicialComplex(int vertex_count) : n_(vertex_count) {
    if (vertex_count < 0 || vertex_count > 32) throw SizeLimitExceeded("complex on more than 32 vertices");
  }

  /// Downward closure of the given faces.
  static SimplicialComplex from_facets(int vertex_count, const std::vector<std::uint32_t>& facets,
                                       std::size_t max_faces = 1'000'000) {
    SimplicialComplex c(vertex_count);
    std::vector<std::uint32_t> all;
    for (auto f : facets) {
      if (vertex_count < 32 && (f >> vertex_count) != 0) throw InvalidInput("facet vertex out of range");
      for (std::uint32_t s = f;; s = (s - 1) & f) {
        all.push_back(s);
        if (all.size() > 4 * max_faces) {
          std::sort(all.begin(), all.end());
          all.erase(std::unique(all.begin(), all.end()), all.end());
          if (all.size() > max_faces) throw SizeLimitExceeded("face-count cap exceeded");
        }
        if (s == 0) break;
      }
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    if (all.size() > max_faces) throw SizeLimitExceeded("face-count cap exceeded");
    for (auto f : all) c.add_face(f);
    return c;
  }

  int vertex_count() const { return n_; }

  /// Faces with `size` vertices (dimension size-1), sorted.
  const std::vector<std::uint32_t>& faces(int size) const {
    static const std::vector<std::uint32_t> none;
    return size >= 0 && static_cast<std::size_t>(size) < by_size_.size()
               ? by_size_[static_cast<std::size_t>(size)]
               : none;
  }

  int max_face_size() const { return static_cast<int>(by_size_.size()) - 1; }
  bool is_void() const { return by_size_.empty(); }

  std::size_t face_count() const {
    std::size_t c = 0;
    for (const auto& v : by_size_) c += v.size();
    return c;
  }

  bool contains(std::uint32_t face) const {
    const auto& v = faces(std::popcount(face));
    return std::binary_search(v.begin(), v.end(), face);
  }

  /// Every subset of a face is a face.
  bool is_downward_closed() const {
    for (const auto& v : by_size_)
      for (auto f : v)
        for (std::uint32_t rest = f; rest != 0; rest &= rest - 1)
          if (!contains(f & ~(rest & (~rest + 1)))) return false;
    return true;
  }

  void add_face(std::uint32_t f) {
    const auto s = static_cast<std::size_t>(std::popcount(f));
    if (by_size_.size() <= s) by_size_.resize(s + 1);
    auto& v = by_size_[s];
    auto it = std::lower_bound(v.begin(), v.end(), f);
    if (it == v.end() || *it != f) v.insert(it, f);
  }

  /// Boundary map from faces of `size` vertices to faces of size-1, the
  /// coefficient of the face missing the t-th smallest vertex being (-1)^t.
  Matrix<std::int64_t> boundary(int size) const {
    const auto& cols = faces(size);
    const auto& rows = faces(size - 1);
    Matrix<std::int64_t> d(rows.size(), cols.size());
    if (size <= 0) return d;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      int t = 0;
      for (std::uint32_t rest = cols[j]; rest != 0; rest &= rest - 1, ++t) {
        const std::uint32_t low = rest & (~rest + 1);
        const auto it = std::lower_bound(rows.begin(), rows.end(), cols[j] & ~low);
        d(static_cast<std::size_t>(it - rows.begin()), j) = (t % 2 == 0) ? 1 : -1;
      }
    }
    return d;
  }

 private:
  int n_;
  std::vector<std::vector<std::uint32_t>> by_size_;
};

/// Faces are the independent vertex sets of g (the empty set included).
inline SimplicialComplex independence_complex(const SmallGraph& g, std::size_t max_faces = 1'000'000) {
  const int k = g.vertex_count();
  SimplicialComplex c(k);
  std::size_t count = 0;
  // Extend `face` with vertices >= next that are non-adjacent to all of it.
  auto grow = [&](auto&& self, std::uint32_t face, std::uint32_t allowed, int next) -> void {
    if (++count > max_faces)
      throw SizeLimitExceeded("independence complex exceeds the face-count cap of " +
                              std::to_string(max_faces));
    c.add_face(face);
    for (int v = next; v < k; ++v)
      if ((allowed >> v) & 1U) self(self, face | (std::uint32_t{1} << v), allowed & ~g.row(v), v + 1);
  };
  const std::uint32_t all = k == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << k) - 1;
  grow(grow, 0, all, 0);
  return c;
}

/// Reduced homology ranks (and torsion over Z), dimension -1 upwards.
class HomologyProfile {
 public:
  HomologyProfile() = default;
  HomologyProfile(std::vector<std::size_t> ranks, std::vector<std::vector<BigInt>> torsion)
      : ranks_(std::move(ranks)), torsion_(std::move(torsion)) {
    torsion_.resize(ranks_.size());
  }

  std::size_t rank(int dim) const {
    const int idx = dim + 1;
    return idx >= 0 && static_cast<std::size_t>(idx) < ranks_.size() ? ranks_[static_cast<std::size_t>(idx)] : 0;
  }

  const std::vector<BigInt>& torsion(int dim) const {
    static const std::vector<BigInt> none;
    const int idx = dim + 1;
    return idx >= 0 && static_cast<std::size_t>(idx) < torsion_.size() ? torsion_[static_cast<std::size_t>(idx)]
                                                                       : none;
  }

  bool torsion_free() const {
    return std::all_of(torsion_.begin(), torsion_.end(), [](const auto& t) { return t.empty(); });
  }

  /// Largest dimension with nonzero rank or torsion, -2 when all vanish.
  int top_dimension() const {
    for (int i = static_cast<int>(ranks_.size()) - 1; i >= 0; --i)
      if (ranks_[static_cast<std::size_t>(i)] != 0 || !torsion_[static_cast<std::size_t>(i)].empty()) return i - 1;
    return -2;
  }

  /// Alternating sum of ranks, sum_d (-1)^d rank H~_d.
  long long euler_characteristic() const {
    long long chi = 0;
    for (std::size_t i = 0; i < ranks_.size(); ++i) {
      const int d = static_cast<int>(i) - 1;
      chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(ranks_[i]);
    }
    return chi;
  }

  bool operator==(const HomologyProfile& o) const {
    const int top = std::max(top_dimension(), o.top_dimension());
    for (int d = -1; d <= top; ++d)
      if (rank(d) != o.rank(d) || torsion(d) != o.torsion(d)) return false;
    return true;
  }

 private:
  std::vector<std::size_t> ranks_;
  std::vector<std::vector<BigInt>> torsion_;
};

/// Reduced Euler characteristic from face counts: sum_d (-1)^d f_d with the
/// empty face counted in dimension -1.
inline long long reduced_euler_characteristic(const SimplicialComplex& c) {
  long long chi = 0;
  for (int s = 0; s <= c.max_face_size(); ++s)
    chi += ((s - 1) % 2 == 0 ? 1 : -1) * static_cast<long long>(c.faces(s).size());
  return chi;
}

/// True when every composite of consecutive boundary maps vanishes.
inline bool boundaries_compose_to_zero(const SimplicialComplex& c) {
  for (int s = 2; s <= c.max_face_size(); ++s)
    if (!(c.boundary(s - 1) * c.boundary(s)).is_zero()) return false;
  return true;
}

inline HomologyProfile reduced_homology(const SimplicialComplex& c,
                                        const Coefficients& coeff = Coefficients::integers()) {
  if (c.is_void()) return {};
  const int top = c.max_face_size();
  // rank_of[s] = rank of the boundary map out of faces of size s.
  std::vector<std::size_t> rank_of(static_cast<std::size_t>(top) + 2, 0);
  std::vector<std::vector<BigInt>> torsion_below(static_cast<std::size_t>(top) + 2);
  for (int s = 1; s <= top; ++s) {
    const auto d = c.boundary(s);
    if (d.rows() == 0 || d.cols() == 0) continue;
    switch (coeff.kind()) {
      case Coefficients::Kind::Integers: {
        auto inv = invariant_factors(d);
        rank_of[static_cast<std::size_t>(s)] = inv.size();
        for (auto& f : inv)
          if (f > 1) torsion_below[static_cast<std::size_t>(s)].push_back(f);
        break;
      }
      case Coefficients::Kind::Rationals:
        rank_of[static_cast<std::size_t>(s)] = rank_rational(d);
        break;
      case Coefficients::Kind::Prime:
        rank_of[static_cast<std::size_t>(s)] = rank_mod_p(d, coeff.characteristic());
        break;
    }
  }
  std::vector<std::size_t> ranks(static_cast<std::size_t>(top) + 1);
  std::vector<std::vector<BigInt>> torsion(static_cast<std::size_t>(top) + 1);
  for (int s = 0; s <= top; ++s) {
    const auto idx = static_cast<std::size_t>(s);
    ranks[idx] = c.faces(s).size() - rank_of[idx] - rank_of[idx + 1];
    torsion[idx] = std::move(torsion_below[idx + 1]);
  }
  return {std::move(ranks), std::move(torsion)};
}

struct HomologyEntry {
  CanonicalForm graph_class;
  HomologyProfile profile;
};

/// Homology of the independence complex of every graph on 1..max_k vertices,
/// keyed by isomorphism class.
inline std::map<CanonicalKey, HomologyEntry> homology_table(int max_k,
                                                           const Coefficients& coeff = Coefficients::integers()) {
  if (max_k > 6) throw SizeLimitExceeded("homology_table supports at most 6 vertices");
  std::map<CanonicalKey, HomologyEntry> out;
  for (int k = 1; k <= max_k; ++k)
    for (auto& cls : isomorphism_classes(k)) {
      auto profile = reduced_homology(independence_complex(cls.representative), coeff);
      out.emplace(cls.key, HomologyEntry{std::move(cls), std::move(profile)});
    }
  return out;
}

}  // namespace cutbetti
