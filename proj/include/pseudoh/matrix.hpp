#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pseudoh/module.hpp"

namespace pseudoh {

using Rational = mpq_class;

std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols);

  static RatMatrix identity(int n);
  static RatMatrix diagonal(const std::vector<int>& d);
  static RatMatrix from_signed_perm(const SignedPerm& f);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rational& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  RatMatrix transpose() const;
  RatMatrix operator*(const RatMatrix& o) const;
  RatMatrix operator+(const RatMatrix& o) const;
  RatMatrix operator-() const;
  RatMatrix scaled(const Rational& c) const;
  bool operator==(const RatMatrix& o) const;

  bool is_integral() const;
  bool is_zero() const;
  int rank() const;
  std::optional<RatMatrix> inverse() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

RatMatrix block_diagonal(const std::vector<RatMatrix>& blocks);
RatMatrix kronecker(const RatMatrix& a, const RatMatrix& b);

// Integer matrix backed by the dispatched int32 kernel.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols);

  static IntMatrix from_signed_perm(const SignedPerm& f);
  static std::optional<IntMatrix> from_rational(const RatMatrix& m);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::int32_t& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  std::int32_t operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const std::int32_t* data() const { return data_.data(); }
  std::int32_t* data() { return data_.data(); }

  IntMatrix transpose() const;
  std::int64_t max_abs() const;
  bool operator==(const IntMatrix& o) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int32_t> data_;
};

// Product when the int32 kernel cannot overflow; nullopt otherwise.
std::optional<IntMatrix> checked_mul(const IntMatrix& a, const IntMatrix& b);

}  // namespace pseudoh
