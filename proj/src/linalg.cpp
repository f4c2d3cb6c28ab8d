#include "innerforms/linalg.hpp"

#include <utility>

#include "innerforms/error.hpp"

namespace innerforms {

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, Rational(0)) {
  if (rows < 0 || cols < 0) throw Error(ErrorCode::InvalidArgument, "negative matrix dimension");
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

void RationalMatrix::set_block(int row, int col, const RationalMatrix& block) {
  if (row + block.rows() > rows_ || col + block.cols() > cols_) {
    throw Error(ErrorCode::InvalidArgument, "block does not fit");
  }
  for (int i = 0; i < block.rows(); ++i) {
    for (int j = 0; j < block.cols(); ++j) (*this)(row + i, col + j) = block(i, j);
  }
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::InvalidArgument, "shape mismatch in +");
  RationalMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::InvalidArgument, "shape mismatch in -");
  RationalMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::InvalidArgument, "shape mismatch in *");
  RationalMatrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols_; ++j) {
        if (b(k, j) != 0) c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

RationalMatrix operator*(const Rational& s, const RationalMatrix& a) {
  RationalMatrix c = a;
  for (auto& x : c.data_) x *= s;
  return c;
}

std::vector<std::vector<std::string>> RationalMatrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out[i].push_back(to_string((*this)(i, j)));
  }
  return out;
}

RationalMatrix block_diagonal(const std::vector<RationalMatrix>& blocks) {
  int n = 0;
  for (const auto& b : blocks) n += b.rows();
  RationalMatrix out(n, n);
  int at = 0;
  for (const auto& b : blocks) {
    out.set_block(at, at, b);
    at += b.rows();
  }
  return out;
}

RationalMatrix evaluate_polynomial(const std::vector<Rational>& coeffs, const RationalMatrix& x) {
  const int n = x.rows();
  RationalMatrix acc(n, n);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * x;
    for (int i = 0; i < n; ++i) acc(i, i) += *it;
  }
  return acc;
}

RationalMatrix power(const RationalMatrix& x, int k) {
  RationalMatrix result = RationalMatrix::identity(x.rows());
  RationalMatrix base = x;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

RationalMatrix kronecker(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (int k = 0; k < b.rows(); ++k) {
        for (int l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
      }
    }
  }
  return out;
}

int bareiss_rank(std::vector<std::vector<BigInt>> m) {
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(m.front().size());
  BigInt prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i) {
      if (m[i][c] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[r], m[pivot]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]);
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

int rank(const RationalMatrix& a) {
  std::vector<std::vector<BigInt>> rows(a.rows(), std::vector<BigInt>(a.cols()));
  for (int i = 0; i < a.rows(); ++i) {
    BigInt scale = 1;
    for (int j = 0; j < a.cols(); ++j) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), a(i, j).get_den_mpz_t());
    for (int j = 0; j < a.cols(); ++j) rows[i][j] = a(i, j).get_num() * (scale / a(i, j).get_den());
  }
  return bareiss_rank(std::move(rows));
}

std::int64_t determinant_i64(std::vector<std::vector<std::int64_t>> a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  std::int64_t prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i) {
        if (a[i][k] != 0) {
          swap_row = i;
          break;
        }
      }
      if (swap_row < 0) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

int rank_i64(const std::vector<std::vector<std::int64_t>>& a) {
  std::vector<std::vector<BigInt>> rows;
  rows.reserve(a.size());
  for (const auto& row : a) {
    std::vector<BigInt> r;
    r.reserve(row.size());
    for (auto x : row) r.emplace_back(static_cast<long>(x));
    rows.push_back(std::move(r));
  }
  return bareiss_rank(std::move(rows));
}

}  // namespace innerforms
