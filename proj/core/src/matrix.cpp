#include "sdc/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace sdc {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Felt{1};
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Felt>>& rows) {
  if (rows.empty()) return {};
  Matrix m((int)rows.size(), (int)rows[0].size());
  for (int i = 0; i < m.rows(); ++i) {
    if ((int)rows[i].size() != m.cols())
      throw std::invalid_argument("matrix: ragged rows");
    for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

void Matrix::swap_rows(int i, int j) {
  if (i == j) return;
  for (int c = 0; c < cols_; ++c)
    std::swap(a_[(std::size_t)i * cols_ + c], a_[(std::size_t)j * cols_ + c]);
}

Rref rref(const Field& f, Matrix a) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int sel = -1;
    for (int i = r; i < a.rows(); ++i)
      if (!f.is_zero(a(i, c))) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    a.swap_rows(sel, r);
    Felt s = f.inv(a(r, c));
    for (int j = c; j < a.cols(); ++j) a(r, j) = f.mul(a(r, j), s);
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || f.is_zero(a(i, c))) continue;
      Felt fac = a(i, c);
      for (int j = c; j < a.cols(); ++j)
        a(i, j) = f.sub(a(i, j), f.mul(fac, a(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots), r};
}

int rank(const Field& f, const Matrix& a) { return rref(f, a).rank; }

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

Matrix mat_mul(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix: shape mismatch");
  Matrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      Felt aik = a(i, k);
      if (f.is_zero(aik)) continue;
      for (int j = 0; j < b.cols(); ++j)
        c(i, j) = f.add(c(i, j), f.mul(aik, b(k, j)));
    }
  return c;
}

bool is_zero_matrix(const Matrix& a) {
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a(i, j) != Felt{}) return false;
  return true;
}

bool in_row_space(const Field& f, const Rref& r, std::span<const Felt> v) {
  std::vector<Felt> w(v.begin(), v.end());
  for (int i = 0; i < r.rank; ++i) {
    Felt c = w[r.pivot_cols[i]];
    if (f.is_zero(c)) continue;
    for (int j = 0; j < r.m.cols(); ++j)
      w[j] = f.sub(w[j], f.mul(c, r.m(i, j)));
  }
  return std::all_of(w.begin(), w.end(), [](Felt x) { return x == Felt{}; });
}

Matrix parity_from_generator(const Field& f, const Matrix& g) {
  Rref r = rref(f, g);
  if (r.rank != g.rows())
    throw std::runtime_error("parity_check: generator matrix is rank deficient");
  int n = g.cols(), k = g.rows();
  std::vector<bool> is_pivot(n, false);
  for (int c : r.pivot_cols) is_pivot[c] = true;
  Matrix h(n - k, n);
  int hr = 0;
  for (int c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    h(hr, c) = Felt{1};
    for (int i = 0; i < k; ++i) h(hr, r.pivot_cols[i]) = f.neg(r.m(i, c));
    ++hr;
  }
  return h;
}

std::vector<Felt> kernel_vector(const Field& f, const Matrix& a) {
  Rref r = rref(f, a);
  if (r.rank >= a.cols())
    throw std::invalid_argument("kernel_vector: matrix has full column rank");
  std::vector<bool> is_pivot(a.cols(), false);
  for (int c : r.pivot_cols) is_pivot[c] = true;
  int free_col = 0;
  while (is_pivot[free_col]) ++free_col;
  std::vector<Felt> x(a.cols());
  x[free_col] = Felt{1};
  for (int i = 0; i < r.rank; ++i)
    x[r.pivot_cols[i]] = f.neg(r.m(i, free_col));
  return x;
}

std::optional<std::vector<Felt>> solve(const Field& f, const Matrix& a,
                                       std::span<const Felt> b) {
  if ((int)b.size() != a.rows()) throw std::invalid_argument("solve: shape mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  Rref r = rref(f, std::move(aug));
  std::vector<Felt> x(a.cols());
  for (int i = 0; i < r.rank; ++i) {
    if (r.pivot_cols[i] == a.cols()) return std::nullopt;  // inconsistent
    x[r.pivot_cols[i]] = r.m(i, a.cols());
  }
  return x;
}

}  // namespace sdc
