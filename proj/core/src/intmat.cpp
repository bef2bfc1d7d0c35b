#include "torusrec/intmat.hpp"

#include <algorithm>
#include <stdexcept>

namespace torusrec {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, BigInt(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out.at(i, i) = 1;
  return out;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t r = 0; r < rows_; ++r) at(r, j) = -at(r, j);
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const BigInt& f) {
  for (std::size_t c = 0; c < cols_; ++c) at(dst, c) += f * at(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const BigInt& f) {
  for (std::size_t r = 0; r < rows_; ++r) at(r, dst) += f * at(r, src);
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

bool IntMatrix::operator==(const IntMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return out;
}

namespace {

// Locates the entry of smallest nonzero absolute value in D[s.., s..].
bool find_pivot(const IntMatrix& D, std::size_t s, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  BigInt best;
  for (std::size_t i = s; i < D.rows(); ++i)
    for (std::size_t j = s; j < D.cols(); ++j) {
      const BigInt& v = D.at(i, j);
      if (v == 0) continue;
      BigInt a = abs(v);
      if (!found || a < best) {
        found = true;
        best = a;
        pi = i;
        pj = j;
      }
    }
  return found;
}

}  // namespace

SNFDecomposition snf(const IntMatrix& A) {
  const std::size_t m = A.rows(), n = A.cols();
  SNFDecomposition out;
  out.U = IntMatrix::identity(m);
  out.V = IntMatrix::identity(n);
  out.D = A;
  IntMatrix& U = out.U;
  IntMatrix& D = out.D;
  IntMatrix& V = out.V;

  const std::size_t nmin = std::min(m, n);
  for (std::size_t s = 0; s < nmin; ++s) {
    std::size_t pi = s, pj = s;
    if (!find_pivot(D, s, pi, pj)) break;  // trailing block is zero

    for (;;) {
      find_pivot(D, s, pi, pj);
      if (pi != s) {
        D.swap_rows(s, pi);
        U.swap_rows(s, pi);
      }
      if (pj != s) {
        D.swap_cols(s, pj);
        V.swap_cols(s, pj);
      }

      bool clean = true;
      for (std::size_t i = s + 1; i < m; ++i) {
        if (D.at(i, s) == 0) continue;
        BigInt f = D.at(i, s) / D.at(s, s);  // truncated; remainder < |pivot|
        if (f != 0) {
          D.add_row_multiple(i, s, -f);
          U.add_row_multiple(i, s, -f);
        }
        if (D.at(i, s) != 0) clean = false;
      }
      for (std::size_t j = s + 1; j < n; ++j) {
        if (D.at(s, j) == 0) continue;
        BigInt f = D.at(s, j) / D.at(s, s);
        if (f != 0) {
          D.add_col_multiple(j, s, -f);
          V.add_col_multiple(j, s, -f);
        }
        if (D.at(s, j) != 0) clean = false;
      }
      if (!clean) continue;  // smaller remainders become the next pivot

      // Divisibility fixup: the pivot must divide every trailing entry.
      bool divides = true;
      std::size_t bi = 0;
      for (std::size_t i = s + 1; i < m && divides; ++i)
        for (std::size_t j = s + 1; j < n; ++j)
          if (D.at(i, j) % D.at(s, s) != 0) {
            divides = false;
            bi = i;
            break;
          }
      if (!divides) {
        D.add_row_multiple(s, bi, 1);
        U.add_row_multiple(s, bi, 1);
        continue;
      }
      break;
    }

    if (D.at(s, s) < 0) {
      D.negate_row(s);
      U.negate_row(s);
    }
  }

  for (std::size_t s = 0; s < nmin; ++s)
    if (D.at(s, s) != 0) out.invariant_factors.push_back(D.at(s, s));
  return out;
}

BigInt determinant(const IntMatrix& A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = A.rows();
  if (n == 0) return 1;
  IntMatrix M = A;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M.at(k, k) == 0) {
      std::size_t swap = k;
      for (std::size_t i = k + 1; i < n; ++i)
        if (M.at(i, k) != 0) {
          swap = i;
          break;
        }
      if (swap == k) return 0;
      M.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt num = M.at(i, j) * M.at(k, k) - M.at(i, k) * M.at(k, j);
        mpz_divexact(M.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = M.at(k, k);
  }
  return sign > 0 ? M.at(n - 1, n - 1) : BigInt(-M.at(n - 1, n - 1));
}

std::size_t rank(const IntMatrix& A) { return snf(A).invariant_factors.size(); }

std::vector<IntVec> integer_kernel(const IntMatrix& A) {
  SNFDecomposition d = snf(A);
  const std::size_t n = A.cols();
  const std::size_t r = d.invariant_factors.size();
  std::vector<IntVec> basis;
  basis.reserve(n - r);
  for (std::size_t j = r; j < n; ++j) {
    IntVec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = d.V.at(i, j);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<IntVec> hermite_row_basis(const std::vector<IntVec>& generators) {
  std::vector<IntVec> M;
  for (const auto& g : generators) {
    bool nonzero = false;
    for (const auto& v : g)
      if (v != 0) nonzero = true;
    if (nonzero) M.push_back(g);
  }
  if (M.empty()) return M;
  const std::size_t n = M[0].size();
  for (const auto& row : M)
    if (row.size() != n) throw std::invalid_argument("ragged generator rows");

  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < M.size(); ++c) {
    std::size_t pivot = M.size();
    for (std::size_t i = r; i < M.size(); ++i)
      if (M[i][c] != 0) {
        if (pivot == M.size() || abs(M[i][c]) < abs(M[pivot][c])) pivot = i;
      }
    if (pivot == M.size()) continue;
    std::swap(M[r], M[pivot]);

    for (std::size_t i = r + 1; i < M.size(); ++i) {
      if (M[i][c] == 0) continue;
      BigInt g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), M[r][c].get_mpz_t(),
                 M[i][c].get_mpz_t());
      BigInt ar = M[r][c] / g, ai = M[i][c] / g;
      for (std::size_t j = 0; j < n; ++j) {
        BigInt top = x * M[r][j] + y * M[i][j];
        BigInt bot = -ai * M[r][j] + ar * M[i][j];
        M[r][j] = top;
        M[i][j] = bot;
      }
    }
    if (M[r][c] < 0)
      for (auto& v : M[r]) v = -v;
    for (std::size_t i = 0; i < r; ++i) {
      if (M[i][c] == 0) continue;
      BigInt f;
      mpz_fdiv_q(f.get_mpz_t(), M[i][c].get_mpz_t(), M[r][c].get_mpz_t());
      if (f == 0) continue;
      for (std::size_t j = 0; j < n; ++j) M[i][j] -= f * M[r][j];
    }
    ++r;
  }
  M.resize(r);
  return M;
}

bool in_lattice(const std::vector<IntVec>& basis, const IntVec& x) {
  if (basis.empty()) {
    for (const auto& v : x)
      if (v != 0) return false;
    return true;
  }
  const std::size_t n = basis[0].size();
  IntVec res = x;
  std::size_t row = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot_row = basis.size();
    if (row < basis.size() && basis[row][c] != 0) pivot_row = row;
    if (res[c] != 0) {
      if (pivot_row == basis.size()) return false;
      if (res[c] % basis[pivot_row][c] != 0) return false;
      BigInt f = res[c] / basis[pivot_row][c];
      for (std::size_t j = 0; j < n; ++j) res[j] -= f * basis[pivot_row][j];
    }
    if (pivot_row != basis.size()) ++row;
  }
  for (const auto& v : res)
    if (v != 0) return false;
  return true;
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

std::vector<IntVec> rational_kernel_lattice(const RatMatrix& A) {
  IntMatrix scaled(A.rows(), A.cols());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    BigInt l(1);
    for (std::size_t j = 0; j < A.cols(); ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), A.at(i, j).get_den().get_mpz_t());
    for (std::size_t j = 0; j < A.cols(); ++j) {
      Rational v = A.at(i, j) * Rational(l);
      scaled.at(i, j) = v.get_num();  // v is integral by construction
    }
  }
  return integer_kernel(scaled);
}

std::vector<Rational> solve_linear(const RatMatrix& A, const std::vector<Rational>& b) {
  if (A.rows() != A.cols() || b.size() != A.rows())
    throw std::invalid_argument("solve_linear shape mismatch");
  const std::size_t n = A.rows();
  RatMatrix M = A;
  std::vector<Rational> rhs = b;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = n;
    for (std::size_t i = k; i < n; ++i)
      if (M.at(i, k) != 0) {
        pivot = i;
        break;
      }
    if (pivot == n) throw std::domain_error("singular linear system");
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(M.at(k, j), M.at(pivot, j));
      std::swap(rhs[k], rhs[pivot]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (M.at(i, k) == 0) continue;
      Rational f = M.at(i, k) / M.at(k, k);
      for (std::size_t j = k; j < n; ++j) M.at(i, j) -= f * M.at(k, j);
      rhs[i] -= f * rhs[k];
    }
  }
  std::vector<Rational> x(n, Rational(0));
  for (std::size_t k = n; k-- > 0;) {
    Rational acc = rhs[k];
    for (std::size_t j = k + 1; j < n; ++j) acc -= M.at(k, j) * x[j];
    x[k] = acc / M.at(k, k);
  }
  return x;
}

RatMatrix inverse(const RatMatrix& A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = A.rows();
  RatMatrix out(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<Rational> e(n, Rational(0));
    e[c] = 1;
    std::vector<Rational> col = solve_linear(A, e);
    for (std::size_t i = 0; i < n; ++i) out.at(i, c) = col[i];
  }
  return out;
}

}  // namespace torusrec
