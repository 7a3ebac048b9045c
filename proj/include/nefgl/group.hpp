#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <string>

#include "nefgl/linalg.hpp"
#include "nefgl/polymatrix.hpp"

namespace nefgl {

// Invertible (n+1)x(n+1) rational matrix g = [[A, b], [c^T, d]] acting on
// R^n by the homography m -> (Am + b)/(c^T m + d).
class GroupElement {
 public:
  // Throws PreconditionError if det(matrix) == 0.
  explicit GroupElement(RatMatrix matrix);

  static GroupElement identity(std::size_t n);
  static GroupElement affine(const RatMatrix& a, const RationalVector& b);
  // diag(I, lambda).
  static GroupElement jorgensen(std::size_t n, const Rational& lambda);
  // [[I, 0], [c^T, 1]].
  static GroupElement g_c(const RationalVector& c);
  // [[I + b c^T, b], [c^T, 1]].
  static GroupElement g_bc(const RationalVector& b, const RationalVector& c);
  // [[I, 0], [c^T, lambda]].
  static GroupElement h(const RationalVector& c, const Rational& lambda);

  std::size_t n() const { return m_.rows() - 1; }
  const RatMatrix& matrix() const { return m_; }
  RatMatrix A() const;
  RationalVector b() const;
  RationalVector c() const;
  const Rational& d() const { return m_(n(), n()); }
  Rational det() const { return determinant(m_); }

  GroupElement inverse() const;
  friend GroupElement operator*(const GroupElement& x, const GroupElement& y);
  friend bool operator==(const GroupElement& x, const GroupElement& y) { return x.m_ == y.m_; }

 private:
  RatMatrix m_;
};

enum class GroupRegion { G0, HPlus, HMinus, H0, TildeOther, NotTilde };

std::string to_string(GroupRegion r);

// (Am + b)/(c^T m + d); DomainError on the hyperplane c^T m + d = 0.
RationalVector homography_eval(const GroupElement& g, const RationalVector& m);
RatMatrix homography_jacobian(const GroupElement& g, const RationalVector& m);
// Inverse of the Jacobian of h_g as rational functions of m. The result is
// cancelled to lowest terms; for every g the denominator reduces to 1.
RationalMatrixFunction symbolic_jacobian_inverse(const GroupElement& g);
// c^T m + d as a polynomial.
MultiPoly pole_form(const GroupElement& g);

GroupRegion classify_region(const GroupElement& g);

// g0 = [[A, b], [0, d]] with d > 0 written as affine * Jorgensen.
struct AffineJorgensen {
  GroupElement affine;
  GroupElement jorgensen;
};
AffineJorgensen decompose_affine_jorgensen(const GroupElement& g0);

enum class RankOneBranch { ZeroBlock, PositiveSchur, NegativeSchurShift, NegativeSchurScale, SingularShift, InverseRow };

std::string to_string(RankOneBranch b);

// g = g_{u,v} * g0 with g_{u,v} = [[I + u v^T, u], [v^T, 1]] and g0 in G0.
struct RankOneFactorization {
  RationalVector u;
  RationalVector v;
  GroupElement g0;
  RankOneBranch branch;
};
// Requires c != 0.
RankOneFactorization decompose_rank_one(const GroupElement& g);

struct RankOneFactorizationF {
  Eigen::VectorXd u;
  Eigen::VectorXd v;
  Eigen::MatrixXd g0;
};
// Floating-point branch for rank(A) = n - 1 and d = 0, through the singular
// value decomposition of A. Throws DecompositionError if the numerical rank
// is ambiguous or the input is outside this branch.
RankOneFactorizationF decompose_rank_one_float(const Eigen::MatrixXd& g);
Eigen::MatrixXd g_uv_float(const Eigen::VectorXd& u, const Eigen::VectorXd& v);

// For g = g_{b,c} and the transposition (i j), returns g_{Pb, Pc}.
GroupElement permutation_conjugate(const GroupElement& g_bc, std::size_t i, std::size_t j);

Eigen::MatrixXd to_eigen(const RatMatrix& m);

}  // namespace nefgl
