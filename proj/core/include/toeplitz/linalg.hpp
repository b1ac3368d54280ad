#pragma once

#include <optional>
#include <vector>

#include "toeplitz/gaussian_rational.hpp"
#include "toeplitz/poly.hpp"

namespace toeplitz {

/// Dense exact matrix over Q(i), row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n);
  /// Lower-triangular k x k Toeplitz compression of an analytic symbol:
  /// entry (i, j) = coefficient of z^(i-j) in phi.
  static Matrix toeplitz_compression(const Poly& phi, std::size_t k);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  GaussianRational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const GaussianRational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Matrix adjoint() const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  std::vector<GaussianRational> apply(const std::vector<GaussianRational>& x) const;
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> a_;
};

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(Matrix& m);
std::size_t rank(Matrix m);
/// Basis of {x : m x = 0}.
std::vector<std::vector<GaussianRational>> nullspace(const Matrix& m);
/// Unique solution of m x = b for square nonsingular m; nullopt when singular.
std::optional<std::vector<GaussianRational>> solve(const Matrix& m, const std::vector<GaussianRational>& b);

}  // namespace toeplitz
