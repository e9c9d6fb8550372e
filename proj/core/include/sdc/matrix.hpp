#pragma once

#include <span>
#include <vector>

#include "sdc/galois.hpp"

namespace sdc {

/// Dense row-major matrix over a field.  Storage only; operations take the
/// Field explicitly.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(int n);
  static Matrix from_rows(const std::vector<std::vector<Felt>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Felt& operator()(int r, int c) { return a_[(std::size_t)r * cols_ + c]; }
  const Felt& operator()(int r, int c) const { return a_[(std::size_t)r * cols_ + c]; }
  std::span<const Felt> row(int r) const {
    return {a_.data() + (std::size_t)r * cols_, (std::size_t)cols_};
  }
  void swap_rows(int i, int j);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Felt> a_;
};

struct Rref {
  Matrix m;
  std::vector<int> pivot_cols;
  int rank = 0;
};

Rref rref(const Field& f, Matrix a);
int rank(const Field& f, const Matrix& a);
Matrix transpose(const Matrix& a);
Matrix mat_mul(const Field& f, const Matrix& a, const Matrix& b);
bool is_zero_matrix(const Matrix& a);

/// True iff v lies in the row space described by an Rref.
bool in_row_space(const Field& f, const Rref& r, std::span<const Felt> v);

/// Parity-check matrix H with G*H^T = 0 and rank(H) = n - k; G must have
/// full row rank.
Matrix parity_from_generator(const Field& f, const Matrix& g);

/// A nonzero kernel vector of a (rows x cols) matrix with rank < cols.
std::vector<Felt> kernel_vector(const Field& f, const Matrix& a);

/// Solves A x = b; nullopt when inconsistent.
std::optional<std::vector<Felt>> solve(const Field& f, const Matrix& a,
                                       std::span<const Felt> b);

}  // namespace sdc
