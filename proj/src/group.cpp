#include "nefgl/group.hpp"

#include <cmath>

#include "nefgl/error.hpp"

namespace nefgl {

GroupElement::GroupElement(RatMatrix matrix) : m_(std::move(matrix)) {
  if (m_.rows() != m_.cols() || m_.rows() < 2) throw DimensionError("group element must be (n+1)x(n+1) with n >= 1");
  if (sgn(determinant(m_)) == 0) throw PreconditionError("group element is singular");
}

GroupElement GroupElement::identity(std::size_t n) { return GroupElement(RatMatrix::identity(n + 1)); }

GroupElement GroupElement::affine(const RatMatrix& a, const RationalVector& b) {
  std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw DimensionError("affine block shapes disagree");
  RatMatrix m(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j);
    m(i, n) = b[i];
  }
  m(n, n) = 1;
  return GroupElement(m);
}

GroupElement GroupElement::jorgensen(std::size_t n, const Rational& lambda) {
  RatMatrix m = RatMatrix::identity(n + 1);
  m(n, n) = lambda;
  return GroupElement(m);
}

GroupElement GroupElement::g_c(const RationalVector& c) { return h(c, 1); }

GroupElement GroupElement::g_bc(const RationalVector& b, const RationalVector& c) {
  std::size_t n = b.size();
  if (c.size() != n) throw DimensionError("b and c differ in length");
  RatMatrix m = RatMatrix::identity(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) += b[i] * c[j];
    m(i, n) = b[i];
    m(n, i) = c[i];
  }
  return GroupElement(m);
}

GroupElement GroupElement::h(const RationalVector& c, const Rational& lambda) {
  std::size_t n = c.size();
  RatMatrix m = RatMatrix::identity(n + 1);
  for (std::size_t i = 0; i < n; ++i) m(n, i) = c[i];
  m(n, n) = lambda;
  return GroupElement(m);
}

RatMatrix GroupElement::A() const {
  std::size_t k = n();
  RatMatrix a(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) a(i, j) = m_(i, j);
  return a;
}

RationalVector GroupElement::b() const {
  RationalVector v(n());
  for (std::size_t i = 0; i < n(); ++i) v[i] = m_(i, n());
  return v;
}

RationalVector GroupElement::c() const {
  RationalVector v(n());
  for (std::size_t i = 0; i < n(); ++i) v[i] = m_(n(), i);
  return v;
}

GroupElement GroupElement::inverse() const { return GroupElement(nefgl::inverse(m_)); }

GroupElement operator*(const GroupElement& x, const GroupElement& y) {
  if (x.n() != y.n()) throw DimensionError("group elements act on different dimensions");
  return GroupElement(x.m_ * y.m_);
}

std::string to_string(GroupRegion r) {
  switch (r) {
    case GroupRegion::G0: return "G0";
    case GroupRegion::HPlus: return "H+G0";
    case GroupRegion::HMinus: return "H-G0";
    case GroupRegion::H0: return "H0G0";
    case GroupRegion::TildeOther: return "tilde-other";
    case GroupRegion::NotTilde: return "not-tilde";
  }
  return "?";
}

std::string to_string(RankOneBranch b) {
  switch (b) {
    case RankOneBranch::ZeroBlock: return "zero-block";
    case RankOneBranch::PositiveSchur: return "positive-schur";
    case RankOneBranch::NegativeSchurShift: return "negative-schur-shift";
    case RankOneBranch::NegativeSchurScale: return "negative-schur-scale";
    case RankOneBranch::SingularShift: return "singular-shift";
    case RankOneBranch::InverseRow: return "inverse-row";
  }
  return "?";
}

MultiPoly pole_form(const GroupElement& g) { return MultiPoly::linear(g.c(), g.d()); }

RationalVector homography_eval(const GroupElement& g, const RationalVector& m) {
  if (m.size() != g.n()) throw DimensionError("point dimension does not match group element");
  Rational l = dot(g.c(), m) + g.d();
  if (sgn(l) == 0) throw DomainError("point lies on the pole hyperplane");
  RationalVector y = g.A() * m;
  RationalVector b = g.b();
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = (y[i] + b[i]) / l;
  return y;
}

RatMatrix homography_jacobian(const GroupElement& g, const RationalVector& m) {
  if (m.size() != g.n()) throw DimensionError("point dimension does not match group element");
  Rational l = dot(g.c(), m) + g.d();
  if (sgn(l) == 0) throw DomainError("point lies on the pole hyperplane");
  RationalVector num = g.A() * m;
  RationalVector b = g.b();
  for (std::size_t i = 0; i < num.size(); ++i) num[i] += b[i];
  RatMatrix j = l * g.A() - outer(num, g.c());
  return (1 / (l * l)) * j;
}

RationalMatrixFunction symbolic_jacobian_inverse(const GroupElement& g) {
  std::size_t n = g.n();
  MultiPoly l = pole_form(g);
  RatMatrix a = g.A();
  RationalVector b = g.b();
  RationalVector c = g.c();
  // Jacobian numerator N = l*A - (Am + b) c^T, so J = N / l^2 and
  // J^{-1} = l^2 adj(N) / det(N).
  PolyMatrix num(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = a(i, j);
    MultiPoly affine_i = MultiPoly::linear(row, b[i]);
    for (std::size_t j = 0; j < n; ++j) num(i, j) = a(i, j) * l - c[j] * affine_i;
  }
  RationalMatrixFunction r{(l * l) * adjugate(num), determinant(num)};
  r = cancel_factor(std::move(r), l);
  if (!r.is_polynomial()) throw Error("jacobian inverse did not reduce to a polynomial");
  return r;
}

GroupRegion classify_region(const GroupElement& g) {
  RationalVector c = g.c();
  bool c_zero = true;
  for (const auto& x : c)
    if (sgn(x) != 0) c_zero = false;
  if (c_zero) return sgn(g.d()) > 0 ? GroupRegion::G0 : GroupRegion::NotTilde;
  RankOneFactorization f = decompose_rank_one(g);
  int eps = sgn(dot(f.v, f.u) + 1);
  if (eps == 0) return GroupRegion::H0;
  return eps > 0 ? GroupRegion::HPlus : GroupRegion::HMinus;
}

AffineJorgensen decompose_affine_jorgensen(const GroupElement& g0) {
  for (const auto& x : g0.c())
    if (sgn(x) != 0) throw PreconditionError("element is not block upper triangular");
  if (sgn(g0.d()) <= 0) throw PreconditionError("corner entry must be positive");
  RationalVector b = g0.b();
  for (auto& x : b) x /= g0.d();
  return {GroupElement::affine(g0.A(), b), GroupElement::jorgensen(g0.n(), g0.d())};
}

namespace {

GroupElement finish(const GroupElement& g, const RationalVector& u, const RationalVector& v) {
  GroupElement g0 = GroupElement::g_bc(u, v).inverse() * g;
  for (const auto& x : g0.c())
    if (sgn(x) != 0) throw Error("rank-one factorization left a nonzero bottom row");
  if (sgn(g0.d()) <= 0) throw Error("rank-one factorization produced a non-positive corner");
  return g0;
}

}  // namespace

RankOneFactorization decompose_rank_one(const GroupElement& g) {
  std::size_t n = g.n();
  RatMatrix a = g.A();
  RationalVector b = g.b();
  RationalVector c = g.c();
  const Rational& d = g.d();
  if (sgn(dot(c, c)) == 0) throw PreconditionError("rank-one factorization needs c != 0");

  auto make = [&](RationalVector u, RationalVector v, RankOneBranch br) {
    GroupElement g0 = finish(g, u, v);
    return RankOneFactorization{std::move(u), std::move(v), std::move(g0), br};
  };

  if (n == 1 && sgn(a(0, 0)) == 0) return make({b[0]}, {-1 / b[0]}, RankOneBranch::ZeroBlock);

  std::size_t r = rank(a);
  if (r == n) {
    RatMatrix ainv = inverse(a);
    Rational s = d - dot(c, ainv * b);
    if (sgn(s) > 0) return make(RationalVector(n), ainv.transpose() * c, RankOneBranch::PositiveSchur);
    if (sgn(d) > 0) {
      RationalVector u = b;
      for (auto& x : u) x /= d;
      RatMatrix a1 = a - outer(u, c);
      return make(u, inverse(a1).transpose() * c, RankOneBranch::NegativeSchurShift);
    }
    if (sgn(d) == 0) {
      Rational cc = dot(c, c);
      mpz_class lam = mpz_class(1 / cc) + 1;
      RationalVector u = a * c;
      for (auto& x : u) x *= lam;
      RatMatrix a1 = a - outer(u, c);
      return make(u, inverse(a1).transpose() * c, RankOneBranch::NegativeSchurScale);
    }
  } else if (r + 1 == n && sgn(d) > 0) {
    RationalVector u = b;
    for (auto& x : u) x /= d;
    RatMatrix a1 = a - outer(u, c);
    return make(u, inverse(a1).transpose() * c, RankOneBranch::SingularShift);
  }

  // Remaining cases: read the factorization off the bottom row (c'^T, d')
  // of g^{-1}, which equals (-v^T, 1 + v^T u) / d1. Take d1 = 1.
  RatMatrix inv = nefgl::inverse(g.matrix());
  RationalVector cp(n);
  for (std::size_t i = 0; i < n; ++i) cp[i] = inv(n, i);
  Rational dp = inv(n, n);
  Rational scale = (1 - dp) / dot(cp, cp);
  RationalVector u = cp, v = cp;
  for (auto& x : u) x *= scale;
  for (auto& x : v) x = -x;
  return make(u, v, RankOneBranch::InverseRow);
}

Eigen::MatrixXd g_uv_float(const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
  Eigen::Index n = u.size();
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n + 1, n + 1);
  m.topLeftCorner(n, n) += u * v.transpose();
  m.topRightCorner(n, 1) = u;
  m.bottomLeftCorner(1, n) = v.transpose();
  return m;
}

RankOneFactorizationF decompose_rank_one_float(const Eigen::MatrixXd& g) {
  Eigen::Index n = g.rows() - 1;
  if (g.cols() != g.rows() || n < 1) throw DimensionError("group element must be square with n >= 1");
  Eigen::MatrixXd a = g.topLeftCorner(n, n);
  Eigen::VectorXd b = g.topRightCorner(n, 1);
  Eigen::VectorXd c = g.bottomLeftCorner(1, n).transpose();
  double d = g(n, n);
  double scale = g.cwiseAbs().maxCoeff();
  const double tol = 1e-10;
  if (c.norm() <= tol * scale) throw DecompositionError("c vanishes numerically");
  if (std::abs(d) > tol * scale) throw DecompositionError("corner entry is not zero");

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::VectorXd sigma = svd.singularValues();
  double top = sigma(0);
  if (sigma(n - 1) > tol * top) throw DecompositionError("A is numerically invertible");
  if (n > 1 && sigma(n - 2) <= 1e-6 * top) throw DecompositionError("numerical rank of A is ambiguous");
  Eigen::MatrixXd uu = svd.matrixU();
  Eigen::MatrixXd vv = svd.matrixV();

  // In the rotated frame A is diag(sigma_1, ..., sigma_{n-1}, 0).
  Eigen::VectorXd bp = uu.transpose() * b;
  Eigen::VectorXd cp = vv.transpose() * c;
  if (std::abs(bp(n - 1)) <= tol * scale || std::abs(cp(n - 1)) <= tol * scale)
    throw DecompositionError("element is numerically singular");
  double lambda = bp(n - 1);
  Eigen::VectorXd up = Eigen::VectorXd::Zero(n);
  up(n - 1) = lambda;
  Eigen::VectorXd vp = Eigen::VectorXd::Zero(n);
  vp(n - 1) = -1.0 / lambda;

  Eigen::MatrixXd dmat = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i + 1 < n; ++i) dmat(i, i) = sigma(i);
  Eigen::MatrixXd g0p = Eigen::MatrixXd::Zero(n + 1, n + 1);
  g0p.topLeftCorner(n, n) = dmat - up * cp.transpose();
  g0p.topRightCorner(n, 1) = bp;
  g0p(n, n) = bp(n - 1) / lambda;

  Eigen::MatrixXd left = Eigen::MatrixXd::Identity(n + 1, n + 1);
  left.topLeftCorner(n, n) = uu;
  Eigen::MatrixXd right = Eigen::MatrixXd::Identity(n + 1, n + 1);
  right.topLeftCorner(n, n) = vv.transpose();
  return {uu * up, uu * vp, left * g0p * right};
}

GroupElement permutation_conjugate(const GroupElement& g_bc, std::size_t i, std::size_t j) {
  std::size_t n = g_bc.n();
  if (i >= n || j >= n) throw DimensionError("transposition index out of range");
  RationalVector b = g_bc.b();
  RationalVector c = g_bc.c();
  if (!(GroupElement::g_bc(b, c) == g_bc)) throw PreconditionError("element is not of the form g_{b,c}");
  std::swap(b[i], b[j]);
  std::swap(c[i], c[j]);
  return GroupElement::g_bc(b, c);
}

Eigen::MatrixXd to_eigen(const RatMatrix& m) {
  Eigen::MatrixXd r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).get_d();
  return r;
}

}  // namespace nefgl
