#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace dianorm {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major storage. The universal carrier type;
/// column vectors are represented as n x 1 matrices.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);  // zero-filled
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(const std::vector<Complex>& diag);
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);
  static ComplexMatrix column(const std::vector<Complex>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return entries_.size(); }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  const std::vector<Complex>& entries() const { return entries_; }
  std::vector<Complex>& entries() { return entries_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  Complex trace() const;

  bool is_finite() const;
  double max_abs() const;

  ComplexMatrix col(std::size_t j) const;
  void set_col(std::size_t j, const ComplexMatrix& v);

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex scalar);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex scalar, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, Complex scalar);

/// a† b for column vectors.
Complex dot(const ComplexMatrix& a, const ComplexMatrix& b);

/// Euclidean norm of a column vector.
double vec_norm(const ComplexMatrix& v);

/// k-th canonical basis column vector of length n.
ComplexMatrix unit_basis(std::size_t n, std::size_t k);

/// sqrt(sum |a_ij|^2), computed entrywise.
double entrywise_frobenius(const ComplexMatrix& a);

/// Frobenius norm of a - b.
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// x† x, exploiting hermiticity of the result.
ComplexMatrix gram(const ComplexMatrix& x);

/// x x†.
ComplexMatrix gram_right(const ComplexMatrix& x);

}  // namespace dianorm
