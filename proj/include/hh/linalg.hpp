#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hh/error.hpp"

namespace hh {

using Rational = mpq_class;
using Integer = mpz_class;
using Vector = std::vector<Rational>;

/// Parses an exact rational literal: an optionally signed integer or "p/q".
/// Anything else (decimals, exponents, whitespace, q = 0) is a ParseError.
inline Rational parse_rational(std::string_view text) {
  // optional sign on numerator and denominator, e.g. "-3", "4/-2"
  auto integer = [&](std::string_view s) {
    std::string_view body = s;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
    if (body.empty() || !std::all_of(body.begin(), body.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw Error(ErrorKind::ParseError, "not an exact rational literal: '" + std::string(text) + "'");
    Integer z(std::string(body), 10);
    return s.front() == '-' ? Integer(-z) : z;
  };
  const auto slash = text.find('/');
  const Integer num = integer(text.substr(0, slash));
  const Integer den = slash == std::string_view::npos ? Integer(1) : integer(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) {
  Rational c(q);
  c.canonicalize();
  return c.get_str(10);
}

inline bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

/// Dense row-major matrix over the rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
      for (const auto& x : row) {
        data_.push_back(x);
        data_.back().canonicalize();
      }
    }
  }

  static RationalMatrix identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static RationalMatrix from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    RationalMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        m(r, c) = rows[r][c];
        m(r, c).canonicalize();
      }
    }
    return m;
  }

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] Vector row(std::size_t r) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }

  [[nodiscard]] bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x == 0; });
  }

  [[nodiscard]] RationalMatrix transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  [[nodiscard]] Vector apply(const Vector& v) const {
    Vector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) {
        if (v[c] != 0 && (*this)(r, c) != 0) out[r] += (*this)(r, c) * v[c];
      }
    }
    return out;
  }

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    RationalMatrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& x = a(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (b(k, j) != 0) p(i, j) += x * b(k, j);
        }
      }
    }
    return p;
  }

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend std::ostream& operator<<(std::ostream& os, const RationalMatrix& m) {
    os << '[';
    for (std::size_t r = 0; r < m.rows_; ++r) {
      os << (r ? ", [" : "[");
      for (std::size_t c = 0; c < m.cols_; ++c) os << (c ? ", " : "") << to_string(m(r, c));
      os << ']';
    }
    return os << ']';
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Rank by fraction-free (Bareiss) elimination: rows are cleared of
/// denominators first, then every intermediate entry stays an integer minor.
inline std::size_t rank(const RationalMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < cols; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
  }
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

inline std::size_t kernel_dim(const RationalMatrix& m) { return m.cols() - rank(m); }

struct RowEchelon {
  RationalMatrix reduced;            // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;   // pivot column of each row
};

/// Reduced row echelon form over the rationals. Pivots are the first nonzero
/// column of the remaining rows, scanned row-major.
inline RowEchelon rref(const RationalMatrix& m) {
  RationalMatrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    }
    const Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) {
        if (a(r, j) != 0) a(i, j) -= f * a(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  RationalMatrix out(r, a.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  return {std::move(out), std::move(pivots)};
}

/// Basis of the right kernel {x : m x = 0}, one vector per free column in
/// increasing column order.
inline std::vector<Vector> kernel_basis(const RationalMatrix& m) {
  const auto [red, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -red(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// One solution of m x = b, if any.
inline std::optional<Vector> solve(const RationalMatrix& m, const Vector& b) {
  RationalMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const auto [red, pivots] = rref(aug);
  Vector x(m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == m.cols()) return std::nullopt;
    x[pivots[i]] = red(i, m.cols());
  }
  return x;
}

/// Incrementally built row space. Each stored row has a unit pivot and zeros
/// in the pivot columns of all rows stored before it, so reducing a vector
/// against the rows in insertion order yields a canonical residual.
class RowSpace {
 public:
  explicit RowSpace(std::size_t dim = 0) : dim_(dim) {}

  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] std::size_t rank() const noexcept { return rows_.size(); }
  [[nodiscard]] const std::vector<Vector>& rows() const noexcept { return rows_; }
  [[nodiscard]] const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  [[nodiscard]] Vector reduce(Vector v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Rational f = v[pivots_[k]];
      if (f == 0) continue;
      const Vector& row = rows_[k];
      for (std::size_t j = 0; j < dim_; ++j) {
        if (row[j] != 0) v[j] -= f * row[j];
      }
    }
    return v;
  }

  [[nodiscard]] bool contains(const Vector& v) const { return is_zero(reduce(v)); }

  /// Adds v; returns false when v was already in the span.
  bool insert(const Vector& v) {
    Vector w = reduce(v);
    std::size_t p = 0;
    while (p < dim_ && w[p] == 0) ++p;
    if (p == dim_) return false;
    const Rational inv = 1 / w[p];
    for (auto& x : w) {
      if (x != 0) x *= inv;
    }
    rows_.push_back(std::move(w));
    pivots_.push_back(p);
    return true;
  }

  /// Fully reduced basis: every pivot column is zero in every other row.
  [[nodiscard]] std::vector<Vector> reduced_rows() const {
    std::vector<Vector> out = rows_;
    for (std::size_t k = out.size(); k-- > 0;) {
      for (std::size_t i = 0; i < out.size(); ++i) {
        if (i == k) continue;
        const Rational f = out[i][pivots_[k]];
        if (f == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
          if (out[k][j] != 0) out[i][j] -= f * out[k][j];
        }
      }
    }
    return out;
  }

 private:
  std::size_t dim_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace hh
