#pragma once

#include <cstddef>
#include <vector>

#include "torusrec/rational.hpp"

namespace torusrec {

using IntVec = std::vector<BigInt>;

/// Dense matrix of arbitrary-precision integers. All normal-form routines in
/// this header are exact; there is no overflow by construction.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);
  /// row[dst] += f * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& f);
  void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& f);

  IntMatrix transposed() const;
  bool operator==(const IntMatrix& other) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<BigInt> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// U * A * V == D with U, V unimodular and D diagonal, nonnegative, each
/// nonzero diagonal entry dividing the next.
struct SNFDecomposition {
  IntMatrix U;  // rows(A) x rows(A)
  IntMatrix D;  // rows(A) x cols(A)
  IntMatrix V;  // cols(A) x cols(A)
  std::vector<BigInt> invariant_factors;  // nonzero diagonal of D
};

SNFDecomposition snf(const IntMatrix& A);

/// Exact determinant (Bareiss fraction-free elimination).
BigInt determinant(const IntMatrix& A);

std::size_t rank(const IntMatrix& A);

/// Z-basis of { x in Z^cols : A x = 0 }, returned as rows. The basis is
/// saturated: every integer kernel vector is an integer combination of it.
std::vector<IntVec> integer_kernel(const IntMatrix& A);

/// Lattice basis (row-style Hermite form) generated by the given rows.
/// Canonical: pivots positive, entries above pivots reduced.
std::vector<IntVec> hermite_row_basis(const std::vector<IntVec>& generators);

/// True iff x lies in the integer span of the (Hermite-reduced) basis rows.
bool in_lattice(const std::vector<IntVec>& basis, const IntVec& x);

/// Dense rational matrix, just enough exact solving for the pipeline.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

/// Z-basis of the integer kernel { x in Z^cols : A x = 0 } of a rational
/// matrix (rows are scaled by their denominator lcm, which leaves the kernel
/// unchanged).
std::vector<IntVec> rational_kernel_lattice(const RatMatrix& A);

/// Solves A x = b for square nonsingular A. Throws std::domain_error if
/// singular.
std::vector<Rational> solve_linear(const RatMatrix& A, const std::vector<Rational>& b);

RatMatrix inverse(const RatMatrix& A);

}  // namespace torusrec
