#pragma once

// Exact dense integer linear algebra: Smith normal form, rank over Q by
// fraction-free elimination, and rank over prime fields.

#include <cutbetti/common.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cutbetti {

/// Raised by checked 64-bit arithmetic; callers retry with BigInt.
class ArithmeticOverflow : public Error {
 public:
  ArithmeticOverflow() : Error("64-bit arithmetic overflow") {}
};

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  template <class U>
  Matrix<U> cast() const {
    Matrix<U> out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(r, c) = U((*this)(r, c));
    return out;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const T& v) { return v == T(0); });
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InvalidInput("matrix shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
      }
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

namespace detail {

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow();
  return r;
}
inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow();
  return r;
}
inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow();
  return r;
}
inline std::int64_t neg(std::int64_t a) { return sub(0, a); }
inline std::int64_t magnitude(std::int64_t a) { return a < 0 ? neg(a) : a; }

inline BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt sub(const BigInt& a, const BigInt& b) { return a - b; }
inline BigInt add(const BigInt& a, const BigInt& b) { return a + b; }
inline BigInt neg(const BigInt& a) { return -a; }
inline BigInt magnitude(const BigInt& a) { return boost::multiprecision::abs(a); }

// row_dst -= q * row_src (rows of m), mirrored into the row transform.
template <class T>
void row_axpy(Matrix<T>& m, std::size_t dst, std::size_t src, const T& q) {
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (m(src, c) != T(0)) m(dst, c) = sub(m(dst, c), mul(q, m(src, c)));
}
template <class T>
void col_axpy(Matrix<T>& m, std::size_t dst, std::size_t src, const T& q) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (m(r, src) != T(0)) m(r, dst) = sub(m(r, dst), mul(q, m(r, src)));
}

}  // namespace detail

template <class T>
struct SmithDecomposition {
  std::vector<T> invariants;  // nonzero diagonal entries, positive, each dividing the next
  Matrix<T> diagonal;         // D
  Matrix<T> left;             // U, unimodular
  Matrix<T> right;            // V, unimodular; U * A * V == D
};

/// Smith normal form by repeated smallest-magnitude pivoting. With
/// `track_transforms` the unimodular U and V are accumulated as well.
template <class T>
SmithDecomposition<T> smith_normal_form(Matrix<T> a, bool track_transforms = false) {
  using detail::magnitude;
  const std::size_t R = a.rows();
  const std::size_t C = a.cols();
  Matrix<T> u = track_transforms ? Matrix<T>::identity(R) : Matrix<T>();
  Matrix<T> v = track_transforms ? Matrix<T>::identity(C) : Matrix<T>();
  auto swap_rows = [&](std::size_t x, std::size_t y) {
    a.swap_rows(x, y);
    if (track_transforms) u.swap_rows(x, y);
  };
  auto swap_cols = [&](std::size_t x, std::size_t y) {
    a.swap_cols(x, y);
    if (track_transforms) v.swap_cols(x, y);
  };
  auto row_op = [&](std::size_t dst, std::size_t src, const T& q) {
    detail::row_axpy(a, dst, src, q);
    if (track_transforms) detail::row_axpy(u, dst, src, q);
  };
  auto col_op = [&](std::size_t dst, std::size_t src, const T& q) {
    detail::col_axpy(a, dst, src, q);
    if (track_transforms) detail::col_axpy(v, dst, src, q);
  };

  std::vector<T> inv;
  for (std::size_t t = 0; t < std::min(R, C); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::optional<std::pair<std::size_t, std::size_t>> best;
    T best_mag = T(0);
    for (std::size_t i = t; i < R; ++i)
      for (std::size_t j = t; j < C; ++j)
        if (a(i, j) != T(0)) {
          T mg = magnitude(a(i, j));
          if (!best || mg < best_mag) {
            best = {i, j};
            best_mag = mg;
          }
        }
    if (!best) break;
    swap_rows(t, best->first);
    swap_cols(t, best->second);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < R; ++i)
        if (a(i, t) != T(0)) {
          row_op(i, t, T(a(i, t) / a(t, t)));
          if (a(i, t) != T(0)) clean = false;
        }
      for (std::size_t j = t + 1; j < C; ++j)
        if (a(t, j) != T(0)) {
          col_op(j, t, T(a(t, j) / a(t, t)));
          if (a(t, j) != T(0)) clean = false;
        }
      if (!clean) {
        // A remainder smaller than the pivot is left in row or column t.
        std::size_t bi = t;
        std::size_t bj = t;
        T mg = magnitude(a(t, t));
        for (std::size_t i = t + 1; i < R; ++i)
          if (a(i, t) != T(0) && magnitude(a(i, t)) < mg) {
            mg = magnitude(a(i, t));
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < C; ++j)
          if (a(t, j) != T(0) && magnitude(a(t, j)) < mg) {
            mg = magnitude(a(t, j));
            bi = t;
            bj = j;
          }
        swap_rows(t, bi);
        swap_cols(t, bj);
        continue;
      }
      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < R && !bad_row; ++i)
        for (std::size_t j = t + 1; j < C; ++j)
          if (a(i, j) % a(t, t) != T(0)) {
            bad_row = i;
            break;
          }
      if (!bad_row) break;
      row_op(t, *bad_row, T(-1));
    }
    if (a(t, t) < T(0)) {
      for (std::size_t c = 0; c < C; ++c) a(t, c) = detail::neg(a(t, c));
      if (track_transforms)
        for (std::size_t c = 0; c < R; ++c) u(t, c) = detail::neg(u(t, c));
    }
    inv.push_back(a(t, t));
  }
  return {std::move(inv), std::move(a), std::move(u), std::move(v)};
}

/// Invariant factors of an integer matrix; retries in BigInt on overflow.
inline std::vector<BigInt> invariant_factors(const Matrix<std::int64_t>& a) {
  std::vector<BigInt> out;
  try {
    for (auto v : smith_normal_form(a).invariants) out.emplace_back(v);
  } catch (const ArithmeticOverflow&) {
    out = smith_normal_form(a.cast<BigInt>()).invariants;
  }
  return out;
}

/// Rank over Q by Bareiss fraction-free elimination.
template <class T>
std::size_t rank_bareiss(Matrix<T> a) {
  const std::size_t R = a.rows();
  const std::size_t C = a.cols();
  std::size_t rank = 0;
  T prev = T(1);
  for (std::size_t col = 0; col < C && rank < R; ++col) {
    std::size_t piv = rank;
    while (piv < R && a(piv, col) == T(0)) ++piv;
    if (piv == R) continue;
    a.swap_rows(rank, piv);
    for (std::size_t i = rank + 1; i < R; ++i) {
      for (std::size_t j = col + 1; j < C; ++j)
        a(i, j) = detail::sub(detail::mul(a(rank, col), a(i, j)), detail::mul(a(i, col), a(rank, j))) / prev;
      a(i, col) = T(0);
    }
    prev = a(rank, col);
    ++rank;
  }
  return rank;
}

inline std::size_t rank_rational(const Matrix<std::int64_t>& a) {
  try {
    return rank_bareiss(a);
  } catch (const ArithmeticOverflow&) {
    return rank_bareiss(a.cast<BigInt>());
  }
}

/// Rank over the prime field F_p.
inline std::size_t rank_mod_p(const Matrix<std::int64_t>& src, std::int64_t p) {
  const std::size_t R = src.rows();
  const std::size_t C = src.cols();
  Matrix<std::int64_t> a(R, C);
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j) a(i, j) = ((src(i, j) % p) + p) % p;
  auto inverse = [p](std::int64_t x) {
    std::int64_t r = 1;
    std::int64_t e = p - 2;
    while (e > 0) {
      if (e & 1) r = r * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return r;
  };
  std::size_t rank = 0;
  for (std::size_t col = 0; col < C && rank < R; ++col) {
    std::size_t piv = rank;
    while (piv < R && a(piv, col) == 0) ++piv;
    if (piv == R) continue;
    a.swap_rows(rank, piv);
    const std::int64_t iv = inverse(a(rank, col));
    for (std::size_t j = col; j < C; ++j) a(rank, j) = a(rank, j) * iv % p;
    for (std::size_t i = rank + 1; i < R; ++i) {
      const std::int64_t f = a(i, col);
      if (f == 0) continue;
      for (std::size_t j = col; j < C; ++j) a(i, j) = ((a(i, j) - f * a(rank, j)) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace cutbetti
