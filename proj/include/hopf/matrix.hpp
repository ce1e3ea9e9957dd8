#pragma once

// Dense exact matrices over a field parameter F (RatField or ZpField) and the
// elimination kernels everything else stands on: rank, right null space,
// solve, inverse, kronecker product.
//
// Over Q the forward elimination is fraction-free Bareiss on the
// denominator-cleared integer matrix (single exact division per step keeps
// entries at subdeterminant size); the reduced form is then finished with
// rational back-substitution. Over Z/p plain Gauss-Jordan is already exact.
//
// Pivoting is "first nonzero row", never by magnitude: results are
// deterministic functions of the input.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "field.hpp"

namespace hopf {

template <class F>
using Vec = std::vector<typename F::Elem>;

template <class F>
struct Matrix {
  using K = typename F::Elem;

  F fld{};
  int rows = 0, cols = 0;
  std::vector<K> a;

  Matrix() = default;
  Matrix(F f, int r, int c) : fld(f), rows(r), cols(c), a((size_t)r * c, f.zero()) {}

  K& at(int i, int j) { return a[(size_t)i * cols + j]; }
  const K& at(int i, int j) const { return a[(size_t)i * cols + j]; }

  static Matrix identity(F f, int n) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
  }

  bool operator==(const Matrix& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }

  Matrix transpose() const {
    Matrix t(fld, cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols != y.rows) throw field_error("matrix product shape mismatch");
    Matrix r(x.fld, x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
      for (int k = 0; k < x.cols; ++k) {
        const K& xv = x.at(i, k);
        if (xv.is_zero()) continue;
        for (int j = 0; j < y.cols; ++j) {
          const K& yv = y.at(k, j);
          if (!yv.is_zero()) r.at(i, j) += xv * yv;
        }
      }
    return r;
  }

  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw field_error("matrix sum shape mismatch");
    Matrix r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
    return r;
  }
  friend Matrix operator-(const Matrix& x, const Matrix& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw field_error("matrix diff shape mismatch");
    Matrix r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
    return r;
  }

  Vec<F> apply(const Vec<F>& v) const {  // matrix * column vector
    if ((int)v.size() != cols) throw field_error("matrix apply shape mismatch");
    Vec<F> r(rows, fld.zero());
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
    return r;
  }

  bool is_zero() const {
    for (const K& x : a)
      if (!x.is_zero()) return false;
    return true;
  }
};

template <class F>
struct RrefResult {
  Matrix<F> r;                // reduced row echelon form
  std::vector<int> pivots;    // pivot column per pivot row
  int rank = 0;
};

namespace detail {

// Fraction-free forward elimination (Bareiss) over Z after clearing row
// denominators. Returns row echelon over Z; caller finishes over Q.
inline void bareiss_forward(std::vector<std::vector<mpz_class>>& m, std::vector<int>& pivots) {
  const int rows = (int)m.size();
  const int cols = rows ? (int)m[0].size() : 0;
  mpz_class prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) { pr = i; break; }
    if (pr < 0) continue;
    if (pr != r) std::swap(m[pr], m[r]);
    // the update runs on every lower row, also when m[i][c] = 0: the
    // rescale by m[r][c]/prev keeps entries at minor size and divisions exact
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        mpz_class t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = t;
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    pivots.push_back(c);
    ++r;
  }
}

}  // namespace detail

// Reduced row echelon form with deterministic pivoting.
template <class F>
RrefResult<F> rref(const Matrix<F>& m) {
  RrefResult<F> out;
  if constexpr (F::is_rational) {
    // clear denominators rowwise, Bareiss over Z, then rational finish
    std::vector<std::vector<mpz_class>> z((size_t)m.rows, std::vector<mpz_class>((size_t)m.cols));
    for (int i = 0; i < m.rows; ++i) {
      mpz_class l = 1;
      for (int j = 0; j < m.cols; ++j) {
        mpz_class d = m.at(i, j).denominator();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        l = l / g * d;
      }
      for (int j = 0; j < m.cols; ++j) {
        const Rat& q = m.at(i, j);
        z[i][j] = q.numerator() * (l / q.denominator());
      }
    }
    std::vector<int> pivots;
    detail::bareiss_forward(z, pivots);
    out.pivots = pivots;
    out.rank = (int)pivots.size();
    // back substitution over Q into RREF
    Matrix<F> r(m.fld, m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
      for (int j = 0; j < m.cols; ++j) r.at(i, j) = Rat::raw(mpq_class(z[i][j]));
    for (int pi = out.rank - 1; pi >= 0; --pi) {
      int pc = pivots[pi];
      Rat inv = r.at(pi, pc).inverse();
      for (int j = pc; j < m.cols; ++j) r.at(pi, j) = r.at(pi, j) * inv;
      for (int i = 0; i < pi; ++i) {
        Rat f = r.at(i, pc);
        if (f.is_zero()) continue;
        for (int j = pc; j < m.cols; ++j) r.at(i, j) = r.at(i, j) - f * r.at(pi, j);
      }
    }
    out.r = std::move(r);
  } else {
    Matrix<F> r = m;
    int rr = 0;
    for (int c = 0; c < m.cols && rr < m.rows; ++c) {
      int pr = -1;
      for (int i = rr; i < m.rows; ++i)
        if (!r.at(i, c).is_zero()) { pr = i; break; }
      if (pr < 0) continue;
      if (pr != rr)
        for (int j = 0; j < m.cols; ++j) std::swap(r.at(pr, j), r.at(rr, j));
      auto inv = r.at(rr, c).inverse();
      for (int j = c; j < m.cols; ++j) r.at(rr, j) *= inv;
      for (int i = 0; i < m.rows; ++i) {
        if (i == rr) continue;
        auto f = r.at(i, c);
        if (f.is_zero()) continue;
        for (int j = c; j < m.cols; ++j) r.at(i, j) -= f * r.at(rr, j);
      }
      out.pivots.push_back(c);
      ++rr;
    }
    out.rank = rr;
    out.r = std::move(r);
  }
  return out;
}

template <class F>
int rank(const Matrix<F>& m) {
  return rref(m).rank;
}

// Basis of the right null space {v : m v = 0}. Count = cols - rank.
template <class F>
std::vector<Vec<F>> kernel(const Matrix<F>& m) {
  auto e = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : e.pivots) is_pivot[c] = true;
  std::vector<Vec<F>> basis;
  for (int c = 0; c < m.cols; ++c) {
    if (is_pivot[c]) continue;
    Vec<F> v(m.cols, m.fld.zero());
    v[c] = m.fld.one();
    for (int pi = 0; pi < e.rank; ++pi) v[e.pivots[pi]] = -e.r.at(pi, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Solve m x = b; empty optional when inconsistent.
template <class F>
std::pair<bool, Vec<F>> solve(const Matrix<F>& m, const Vec<F>& b) {
  if ((int)b.size() != m.rows) throw field_error("solve shape mismatch");
  Matrix<F> aug(m.fld, m.rows, m.cols + 1);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b[i];
  }
  auto e = rref(aug);
  Vec<F> x(m.cols, m.fld.zero());
  for (int pi = 0; pi < e.rank; ++pi) {
    if (e.pivots[pi] == m.cols) return {false, {}};  // pivot in RHS column
    x[e.pivots[pi]] = e.r.at(pi, m.cols);
  }
  return {true, std::move(x)};
}

// Inverse; {false, _} when singular.
template <class F>
std::pair<bool, Matrix<F>> inverse(const Matrix<F>& m) {
  if (m.rows != m.cols) throw field_error("inverse of non-square matrix");
  int n = m.rows;
  Matrix<F> aug(m.fld, n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = m.fld.one();
  }
  auto e = rref(aug);
  if (e.rank < n || e.pivots[n - 1] >= n) return {false, Matrix<F>()};
  Matrix<F> inv(m.fld, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = e.r.at(i, n + j);
  return {true, std::move(inv)};
}

// (a kron b)[(i*rows_b + k), (j*cols_b + l)] = a[i,j] * b[k,l]
template <class F>
Matrix<F> kronecker(const Matrix<F>& x, const Matrix<F>& y) {
  Matrix<F> r(x.fld, x.rows * y.rows, x.cols * y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) {
      const auto& v = x.at(i, j);
      if (v.is_zero()) continue;
      for (int k = 0; k < y.rows; ++k)
        for (int l = 0; l < y.cols; ++l)
          if (!y.at(k, l).is_zero()) r.at(i * y.rows + k, j * y.cols + l) = v * y.at(k, l);
    }
  return r;
}

// Column-stack a list of vectors.
template <class F>
Matrix<F> columns(F fld, const std::vector<Vec<F>>& vs, int dim) {
  Matrix<F> m(fld, dim, (int)vs.size());
  for (int j = 0; j < (int)vs.size(); ++j) {
    if ((int)vs[j].size() != dim) throw field_error("columns: vector length mismatch");
    for (int i = 0; i < dim; ++i) m.at(i, j) = vs[j][i];
  }
  return m;
}

template <class F>
bool vec_is_zero(const Vec<F>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

template <class F>
Vec<F> vec_sub(const Vec<F>& a, const Vec<F>& b) {
  Vec<F> r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

template <class F>
Vec<F> vec_add(const Vec<F>& a, const Vec<F>& b) {
  Vec<F> r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

template <class F>
Vec<F> vec_scale(const Vec<F>& a, const typename F::Elem& c) {
  Vec<F> r = a;
  for (auto& x : r) x *= c;
  return r;
}

}  // namespace hopf
