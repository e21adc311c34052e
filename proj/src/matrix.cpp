#include "pseudoh/matrix.hpp"

#include <algorithm>
#include <limits>

#include "pseudoh/kernels.hpp"

namespace pseudoh {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) throw InputError("bad rational '" + text + "'");
  if (q.get_den() == 0) throw InputError("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

RatMatrix::RatMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {
  if (rows < 0 || cols < 0) throw InputError("negative matrix shape");
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::diagonal(const std::vector<int>& d) {
  RatMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return m;
}

RatMatrix RatMatrix::from_signed_perm(const SignedPerm& f) {
  RatMatrix m(f.size(), f.size());
  for (int a = 0; a < f.size(); ++a) m(f.perm[a], a) = f.sign[a];
  return m;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols_ != o.rows_) throw InputError("matrix shape mismatch in product");
  RatMatrix out(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int l = 0; l < cols_; ++l) {
      const Rational& a = (*this)(i, l);
      if (sgn(a) == 0) continue;
      for (int j = 0; j < o.cols_; ++j)
        if (sgn(o(l, j)) != 0) out(i, j) += a * o(l, j);
    }
  return out;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix shape mismatch in sum");
  RatMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
  return out;
}

RatMatrix RatMatrix::operator-() const { return scaled(-1); }

RatMatrix RatMatrix::scaled(const Rational& c) const {
  RatMatrix out = *this;
  for (auto& x : out.data_) x *= c;
  return out;
}

bool RatMatrix::operator==(const RatMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool RatMatrix::is_integral() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q.get_den() == 1; });
}

bool RatMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

int RatMatrix::rank() const {
  RatMatrix m = *this;
  int rank = 0;
  for (int c = 0; c < cols_ && rank < rows_; ++c) {
    int piv = -1;
    for (int r = rank; r < rows_; ++r)
      if (sgn(m(r, c)) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < cols_; ++j) std::swap(m(piv, j), m(rank, j));
    for (int r = rank + 1; r < rows_; ++r) {
      if (sgn(m(r, c)) == 0) continue;
      Rational f = m(r, c) / m(rank, c);
      for (int j = c; j < cols_; ++j) m(r, j) -= f * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

std::optional<RatMatrix> RatMatrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  const int n = rows_;
  RatMatrix m = *this;
  RatMatrix inv = identity(n);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (sgn(m(r, c)) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return std::nullopt;
    for (int j = 0; j < n; ++j) {
      std::swap(m(piv, j), m(c, j));
      std::swap(inv(piv, j), inv(c, j));
    }
    Rational d = m(c, c);
    for (int j = 0; j < n; ++j) {
      m(c, j) /= d;
      inv(c, j) /= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || sgn(m(r, c)) == 0) continue;
      Rational f = m(r, c);
      for (int j = 0; j < n; ++j) {
        m(r, j) -= f * m(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

RatMatrix block_diagonal(const std::vector<RatMatrix>& blocks) {
  int rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  RatMatrix out(rows, cols);
  int r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) out(r0 + i, c0 + j) = b(i, j);
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

RatMatrix kronecker(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

IntMatrix::IntMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}

IntMatrix IntMatrix::from_signed_perm(const SignedPerm& f) {
  IntMatrix m(f.size(), f.size());
  for (int a = 0; a < f.size(); ++a) m(f.perm[a], a) = f.sign[a];
  return m;
}

std::optional<IntMatrix> IntMatrix::from_rational(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      const Rational& q = m(i, j);
      if (q.get_den() != 1 || !q.get_num().fits_sint_p()) return std::nullopt;
      long v = q.get_num().get_si();
      if (v > std::numeric_limits<std::int32_t>::max() || v < std::numeric_limits<std::int32_t>::min())
        return std::nullopt;
      out(i, j) = static_cast<std::int32_t>(v);
    }
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::int64_t IntMatrix::max_abs() const {
  std::int64_t m = 0;
  for (std::int32_t x : data_) m = std::max<std::int64_t>(m, x < 0 ? -static_cast<std::int64_t>(x) : x);
  return m;
}

std::optional<IntMatrix> checked_mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix shape mismatch in product");
  // |entry| <= k * max|a| * max|b| must fit in int32
  __int128 bound = static_cast<__int128>(a.cols()) * a.max_abs() * b.max_abs();
  if (bound > std::numeric_limits<std::int32_t>::max()) return std::nullopt;
  IntMatrix c(a.rows(), b.cols());
  kernels::gemm_i32()(a.data(), b.data(), c.data(), a.rows(), a.cols(), b.cols());
  return c;
}

}  // namespace pseudoh
