#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nefgl/rational.hpp"

namespace nefgl {

// Dense exact matrix, row-major.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RatMatrix transpose() const;
  bool is_zero() const;

  friend bool operator==(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const Rational& s, const RatMatrix& a);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RationalVector operator*(const RatMatrix& a, const RationalVector& x);
Rational dot(const RationalVector& a, const RationalVector& b);
RatMatrix outer(const RationalVector& a, const RationalVector& b);

Rational determinant(const RatMatrix& a);
std::size_t rank(const RatMatrix& a);
// Throws PreconditionError if singular.
RatMatrix inverse(const RatMatrix& a);
// Returns a solution of a*x = rhs, or nullopt when inconsistent. Free
// variables (if any) are set to zero.
std::optional<RationalVector> solve(const RatMatrix& a, const RationalVector& rhs);

}  // namespace nefgl
