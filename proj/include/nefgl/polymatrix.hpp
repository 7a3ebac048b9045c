#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nefgl/linalg.hpp"
#include "nefgl/multipoly.hpp"

namespace nefgl {

// Square matrix of polynomials in nvars variables.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t size, std::size_t nvars);

  static PolyMatrix identity(std::size_t size, std::size_t nvars);
  static PolyMatrix constant(const RatMatrix& a, std::size_t nvars);
  static PolyMatrix diagonal(const std::vector<MultiPoly>& d);
  // m m^T in size variables.
  static PolyMatrix outer_mm(std::size_t size);

  std::size_t size() const { return size_; }
  std::size_t nvars() const { return nvars_; }
  MultiPoly& operator()(std::size_t i, std::size_t j) { return data_[i * size_ + j]; }
  const MultiPoly& operator()(std::size_t i, std::size_t j) const { return data_[i * size_ + j]; }

  bool is_symmetric() const;
  int degree() const;
  PolyMatrix transpose() const;
  PolyMatrix derivative(std::size_t var) const;
  RatMatrix eval(const RationalVector& m) const;
  PolyMatrix substitute(const std::vector<MultiPoly>& images) const;
  PolyMatrix homogeneous_part(unsigned d) const;

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(const MultiPoly& s, const PolyMatrix& a);
  friend PolyMatrix operator*(const Rational& s, const PolyMatrix& a);

 private:
  std::size_t size_ = 0;
  std::size_t nvars_ = 0;
  std::vector<MultiPoly> data_;
};

std::vector<MultiPoly> operator*(const PolyMatrix& a, const std::vector<MultiPoly>& x);

MultiPoly determinant(const PolyMatrix& a);
PolyMatrix adjugate(const PolyMatrix& a);

// Matrix of rational functions sharing one denominator.
struct RationalMatrixFunction {
  PolyMatrix numerators;
  MultiPoly denominator;

  static RationalMatrixFunction from_poly(const PolyMatrix& p);
  std::size_t size() const { return numerators.size(); }
  std::size_t nvars() const { return numerators.nvars(); }
  bool is_polynomial() const { return denominator.is_constant(); }
  // Entrywise value; throws DomainError where the denominator vanishes.
  RatMatrix eval(const RationalVector& m) const;
};

// Equality of the represented functions (cross-multiplied).
bool same_function(const RationalMatrixFunction& a, const RationalMatrixFunction& b);

// Divides out every common factor of `factor` shared by the denominator and
// all numerators, then makes the denominator's leading coefficient one.
RationalMatrixFunction cancel_factor(RationalMatrixFunction r, const MultiPoly& factor);

}  // namespace nefgl
