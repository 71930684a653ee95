#pragma once

// Exact integer linear algebra over arbitrary-precision integers.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace toric_gfan {

using Integer = mpz_class;
using Rational = mpq_class;
using LatticeVector = std::vector<Integer>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix from_rows(const std::vector<LatticeVector>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("IntMatrix: ragged rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static IntMatrix from_rows(const std::vector<LatticeVector>& rows) {
    if (rows.empty()) throw std::invalid_argument("IntMatrix: cannot infer width of empty row list");
    return from_rows(rows, rows.front().size());
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  LatticeVector row(std::size_t i) const {
    return LatticeVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                         data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  LatticeVector column(std::size_t j) const {
    LatticeVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  std::vector<LatticeVector> row_list() const {
    std::vector<LatticeVector> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }

  IntMatrix transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  // row[target] -= factor * row[source]
  void subtract_row_multiple(std::size_t target, std::size_t source, const Integer& factor) {
    if (factor == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(target, j) -= factor * (*this)(source, j);
  }

  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix: dimension mismatch in product");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  LatticeVector operator*(const LatticeVector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("IntMatrix: dimension mismatch in product");
    LatticeVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

// ---------------------------------------------------------------------------
// Vector helpers

inline Integer dot(const LatticeVector& a, const LatticeVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool is_zero(const LatticeVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

inline Integer content(const LatticeVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

/// Divides by the gcd of the coordinates; the zero vector is returned unchanged.
inline LatticeVector primitive(LatticeVector v) {
  Integer g = content(v);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

inline LatticeVector add(const LatticeVector& a, const LatticeVector& b) {
  LatticeVector out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

inline LatticeVector subtract(const LatticeVector& a, const LatticeVector& b) {
  LatticeVector out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

inline LatticeVector negate(LatticeVector v) {
  for (auto& x : v) x = -x;
  return v;
}

inline LatticeVector scale(LatticeVector v, const Integer& k) {
  for (auto& x : v) x *= k;
  return v;
}

inline LatticeVector make_vector(std::initializer_list<long> xs) {
  LatticeVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline std::string to_string(const LatticeVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

// ---------------------------------------------------------------------------
// Hermite normal form

struct HermiteForm {
  IntMatrix H;  // row Hermite normal form of the input
  IntMatrix U;  // unimodular transform, U * A == H
  std::vector<std::size_t> pivot_columns;
};

/// Row-style Hermite normal form: H is in row echelon form with positive
/// pivots and every entry above a pivot reduced into [0, pivot).
inline HermiteForm hermite_form(const IntMatrix& A) {
  IntMatrix H = A;
  IntMatrix U = IntMatrix::identity(A.rows());
  std::vector<std::size_t> pivots;
  std::size_t p = 0;
  for (std::size_t col = 0; col < H.cols() && p < H.rows(); ++col) {
    bool has_pivot = false;
    while (true) {
      std::size_t best = H.rows();
      for (std::size_t k = p; k < H.rows(); ++k) {
        if (H(k, col) == 0) continue;
        if (best == H.rows() || abs(H(k, col)) < abs(H(best, col))) best = k;
      }
      if (best == H.rows()) break;
      has_pivot = true;
      H.swap_rows(p, best);
      U.swap_rows(p, best);
      bool cleared = true;
      for (std::size_t i = p + 1; i < H.rows(); ++i) {
        if (H(i, col) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), H(i, col).get_mpz_t(), H(p, col).get_mpz_t());
        H.subtract_row_multiple(i, p, q);
        U.subtract_row_multiple(i, p, q);
        if (H(i, col) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (!has_pivot) continue;
    if (H(p, col) < 0) {
      H.negate_row(p);
      U.negate_row(p);
    }
    for (std::size_t i = 0; i < p; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), H(i, col).get_mpz_t(), H(p, col).get_mpz_t());
      H.subtract_row_multiple(i, p, q);
      U.subtract_row_multiple(i, p, q);
    }
    pivots.push_back(col);
    ++p;
  }
  return {std::move(H), std::move(U), std::move(pivots)};
}

inline std::pair<IntMatrix, IntMatrix> hnf(const IntMatrix& A) {
  auto f = hermite_form(A);
  return {std::move(f.H), std::move(f.U)};
}

inline std::size_t rank(const IntMatrix& A) { return hermite_form(A).pivot_columns.size(); }

inline std::size_t rank(const std::vector<LatticeVector>& rows, std::size_t cols) {
  if (rows.empty()) return 0;
  return rank(IntMatrix::from_rows(rows, cols));
}

/// Fraction-free (Bareiss) determinant.
inline Integer determinant(const IntMatrix& A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = A.rows();
  if (n == 0) return 1;
  IntMatrix M = A;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && M(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      M.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        M(i, j) = M(i, j) * M(k, k) - M(i, k) * M(k, j);
        mpz_divexact(M(i, j).get_mpz_t(), M(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    prev = M(k, k);
  }
  return sign * M(n - 1, n - 1);
}

/// For n-1 rows of length n: the vector of signed maximal minors, orthogonal
/// to every row. Zero iff the rows are dependent.
inline LatticeVector orthogonal_vector(const std::vector<LatticeVector>& rows, std::size_t n) {
  if (rows.size() + 1 != n) throw std::invalid_argument("orthogonal_vector: need n-1 rows");
  LatticeVector out(n);
  for (std::size_t skip = 0; skip < n; ++skip) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      std::size_t c = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == skip) continue;
        minor(i, c++) = rows[i][j];
      }
    }
    Integer d = determinant(minor);
    out[skip] = (skip % 2 == 0) ? d : Integer(-d);
  }
  return out;
}

/// Basis of the saturated lattice {x in Z^cols : A x = 0}, in Hermite form.
inline std::vector<LatticeVector> kernel_basis(const IntMatrix& A) {
  const std::size_t n = A.cols();
  if (A.rows() == 0) return IntMatrix::identity(n).row_list();
  auto f = hermite_form(A.transposed());
  const std::size_t r = f.pivot_columns.size();
  std::vector<LatticeVector> basis;
  for (std::size_t i = r; i < n; ++i) basis.push_back(f.U.row(i));
  if (basis.empty()) return basis;
  auto g = hermite_form(IntMatrix::from_rows(basis, n));
  std::vector<LatticeVector> out;
  for (std::size_t i = 0; i < g.pivot_columns.size(); ++i) out.push_back(g.H.row(i));
  return out;
}

inline std::vector<LatticeVector> kernel_basis(const std::vector<LatticeVector>& rows, std::size_t cols) {
  if (rows.empty()) return IntMatrix::identity(cols).row_list();
  return kernel_basis(IntMatrix::from_rows(rows, cols));
}

/// Rows of the Hermite form: a basis of the row lattice.
inline std::vector<LatticeVector> row_lattice_basis(const std::vector<LatticeVector>& rows, std::size_t cols) {
  if (rows.empty()) return {};
  auto f = hermite_form(IntMatrix::from_rows(rows, cols));
  std::vector<LatticeVector> out;
  for (std::size_t i = 0; i < f.pivot_columns.size(); ++i) out.push_back(f.H.row(i));
  return out;
}

namespace detail {

inline void for_each_subset(std::size_t n, std::size_t k, const auto& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

/// gcd of the maximal minors of the matrix whose rows are `rays`; this is the
/// index of the lattice they span inside its saturation.
inline Integer cone_index(const std::vector<LatticeVector>& rays) {
  if (rays.empty()) return 1;
  const std::size_t k = rays.size();
  const std::size_t n = rays.front().size();
  if (k > n) throw std::invalid_argument("cone_index: rays are linearly dependent");
  Integer g = 0;
  detail::for_each_subset(n, k, [&](const std::vector<std::size_t>& cols) {
    IntMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) m(i, j) = rays[i][cols[j]];
    g = gcd(g, determinant(m));
  });
  if (g == 0) throw std::invalid_argument("cone_index: rays are linearly dependent");
  return g;
}

/// Solves A x = b over Q; nullopt when inconsistent. Free variables are set to 0.
inline std::optional<std::vector<Rational>> solve_rational(const IntMatrix& A, const LatticeVector& b) {
  const std::size_t m = A.rows(), n = A.cols();
  std::vector<std::vector<Rational>> aug(m, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = A(i, j);
    aug[i][n] = b[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t piv = r;
    while (piv < m && aug[piv][c] == 0) ++piv;
    if (piv == m) continue;
    std::swap(aug[piv], aug[r]);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || aug[i][c] == 0) continue;
      Rational f = aug[i][c] / aug[r][c];
      for (std::size_t j = c; j <= n; ++j) aug[i][j] -= f * aug[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i)
    if (aug[i][n] != 0) return std::nullopt;
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = aug[i][n] / aug[i][pivot_col[i]];
  return x;
}

}  // namespace toric_gfan
