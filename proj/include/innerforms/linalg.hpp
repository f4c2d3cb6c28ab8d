#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "innerforms/rational.hpp"

namespace innerforms {

/// Dense exact matrix over ℚ, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols);

  static RationalMatrix identity(int n);
  static RationalMatrix zero(int n) { return RationalMatrix(n, n); }

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Rational& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rational& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  RationalMatrix transposed() const;

  /// Copies `block` with its top-left corner at (row, col).
  void set_block(int row, int col, const RationalMatrix& block);

  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(const Rational& s, const RationalMatrix& a);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

  /// Rows of "r/s" strings.
  std::vector<std::vector<std::string>> to_strings() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

RationalMatrix block_diagonal(const std::vector<RationalMatrix>& blocks);

/// Σ c_i X^i for coefficients c_0, c_1, ...
RationalMatrix evaluate_polynomial(const std::vector<Rational>& coeffs, const RationalMatrix& x);

RationalMatrix power(const RationalMatrix& x, int k);

/// Kronecker product a ⊗ b.
RationalMatrix kronecker(const RationalMatrix& a, const RationalMatrix& b);

/// Exact rank by fraction-free (Bareiss) elimination after clearing denominators row by row.
int rank(const RationalMatrix& a);

/// Bareiss rank over ℤ; the argument is consumed.
int bareiss_rank(std::vector<std::vector<BigInt>> rows);

/// Exact determinant of a small integer matrix via Bareiss in 64-bit arithmetic.
std::int64_t determinant_i64(std::vector<std::vector<std::int64_t>> a);

/// Rank of a small integer matrix (exact, via BigInt Bareiss).
int rank_i64(const std::vector<std::vector<std::int64_t>>& a);

}  // namespace innerforms
