#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "torsig/rational.hpp"

namespace torsig {

/// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  /// All rows must have equal length; `cols` is only consulted when `rows` is empty.
  static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols = 0);
  static RatMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols = 0);
  static RatMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Rational> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  RatVector row_vector(std::size_t i) const { return {data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_}; }
  std::vector<RatVector> row_vectors() const;

  RatMatrix transpose() const;
  RatMatrix operator*(const RatMatrix& rhs) const;
  RatVector operator*(const RatVector& x) const;

  void swap_rows(std::size_t a, std::size_t b);

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form together with its pivot columns.
struct Echelon {
  RatMatrix reduced;
  std::vector<std::size_t> pivots;
};

Echelon rref(RatMatrix m);
std::size_t rank(const RatMatrix& m);
std::size_t rank(const std::vector<IntVector>& rows, std::size_t cols);
std::size_t rank(const std::vector<RatVector>& rows, std::size_t cols);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
Integer dot(std::span<const Integer> a, std::span<const Integer> b);
Rational dot(std::span<const Rational> a, std::span<const Integer> b);

/// Divides out the gcd of the entries. Throws ZeroVector on v == 0.
IntVector primitive(const IntVector& v);
/// The primitive integer vector on the ray through v (positive multiple).
IntVector primitive(const RatVector& v);

Rational determinant(RatMatrix m);
/// Fraction-free (Bareiss) determinant for square integer matrices given by rows.
Integer determinant(const std::vector<IntVector>& rows);

/// One exact solution of m·x = b, with free variables set to zero, or
/// nullopt when the system is inconsistent.
std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b);

/// Kernel basis; one vector per free column of the echelon form.
std::vector<RatVector> nullspace(const RatMatrix& m);

/// Dual basis under the standard inner product, within the span of `basis`.
/// When the vectors span a proper subspace W, the duals are taken in W, so
/// <basis_i, dual_j> = delta_ij still holds. Throws NotABasis on dependence.
std::vector<RatVector> dual_basis(const std::vector<RatVector>& basis);

RatMatrix inverse(const RatMatrix& m);

/// A basis of the integer kernel {x in Z^n : A x = 0}. The result is
/// saturated: it generates ker(A) intersected with Z^n.
std::vector<IntVector> integer_kernel_basis(const std::vector<IntVector>& rows, std::size_t n);

/// A lattice basis of span(vectors) intersected with Z^n.
std::vector<IntVector> saturated_basis(const std::vector<RatVector>& vectors, std::size_t n);

}  // namespace torsig
