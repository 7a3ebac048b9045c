#include "nefgl/polymatrix.hpp"

#include "nefgl/error.hpp"

namespace nefgl {

PolyMatrix::PolyMatrix(std::size_t size, std::size_t nvars)
    : size_(size), nvars_(nvars), data_(size * size, MultiPoly(nvars)) {}

PolyMatrix PolyMatrix::identity(std::size_t size, std::size_t nvars) {
  PolyMatrix m(size, nvars);
  for (std::size_t i = 0; i < size; ++i) m(i, i) = MultiPoly(nvars, Rational(1));
  return m;
}

PolyMatrix PolyMatrix::constant(const RatMatrix& a, std::size_t nvars) {
  if (a.rows() != a.cols()) throw DimensionError("constant matrix must be square");
  PolyMatrix m(a.rows(), nvars);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = MultiPoly(nvars, a(i, j));
  return m;
}

PolyMatrix PolyMatrix::diagonal(const std::vector<MultiPoly>& d) {
  if (d.empty()) throw DimensionError("empty diagonal");
  PolyMatrix m(d.size(), d[0].nvars());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

PolyMatrix PolyMatrix::outer_mm(std::size_t size) {
  PolyMatrix m(size, size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j)
      m(i, j) = MultiPoly::variable(size, i) * MultiPoly::variable(size, j);
  return m;
}

bool PolyMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < size_; ++i)
    for (std::size_t j = i + 1; j < size_; ++j)
      if (!((*this)(i, j) == (*this)(j, i))) return false;
  return true;
}

int PolyMatrix::degree() const {
  int d = -1;
  for (const auto& p : data_) d = std::max(d, p.degree());
  return d;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(size_, nvars_);
  for (std::size_t i = 0; i < size_; ++i)
    for (std::size_t j = 0; j < size_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

PolyMatrix PolyMatrix::derivative(std::size_t var) const {
  PolyMatrix d(size_, nvars_);
  for (std::size_t k = 0; k < data_.size(); ++k) d.data_[k] = data_[k].derivative(var);
  return d;
}

RatMatrix PolyMatrix::eval(const RationalVector& m) const {
  RatMatrix r(size_, size_);
  for (std::size_t i = 0; i < size_; ++i)
    for (std::size_t j = 0; j < size_; ++j) r(i, j) = (*this)(i, j).eval(m);
  return r;
}

PolyMatrix PolyMatrix::substitute(const std::vector<MultiPoly>& images) const {
  std::size_t target = images.empty() ? nvars_ : images[0].nvars();
  PolyMatrix r(size_, target);
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k].substitute(images);
  return r;
}

PolyMatrix PolyMatrix::homogeneous_part(unsigned d) const {
  PolyMatrix r(size_, nvars_);
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k].homogeneous_part(d);
  return r;
}

static void check_same(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.size() != b.size() || a.nvars() != b.nvars()) throw DimensionError("polynomial matrices differ in shape");
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.size_ == b.size_ && a.nvars_ == b.nvars_ && a.data_ == b.data_;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  check_same(a, b);
  PolyMatrix r = a;
  for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] += b.data_[k];
  return r;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
  check_same(a, b);
  PolyMatrix r = a;
  for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] -= b.data_[k];
  return r;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  check_same(a, b);
  std::size_t n = a.size_;
  PolyMatrix r(n, a.nvars_);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!b(k, j).is_zero()) r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

PolyMatrix operator*(const MultiPoly& s, const PolyMatrix& a) {
  PolyMatrix r = a;
  for (auto& p : r.data_) p = s * p;
  return r;
}

PolyMatrix operator*(const Rational& s, const PolyMatrix& a) {
  PolyMatrix r = a;
  for (auto& p : r.data_) p *= s;
  return r;
}

std::vector<MultiPoly> operator*(const PolyMatrix& a, const std::vector<MultiPoly>& x) {
  if (x.size() != a.size()) throw DimensionError("matrix-vector shape mismatch");
  std::vector<MultiPoly> y(a.size(), MultiPoly(a.nvars()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

namespace {

PolyMatrix minor_of(const PolyMatrix& a, std::size_t row, std::size_t col) {
  std::size_t n = a.size();
  PolyMatrix m(n - 1, a.nvars());
  for (std::size_t i = 0, r = 0; i < n; ++i) {
    if (i == row) continue;
    for (std::size_t j = 0, c = 0; j < n; ++j) {
      if (j == col) continue;
      m(r, c++) = a(i, j);
    }
    ++r;
  }
  return m;
}

}  // namespace

MultiPoly determinant(const PolyMatrix& a) {
  std::size_t n = a.size();
  if (n == 0) return MultiPoly(a.nvars(), Rational(1));
  if (n == 1) return a(0, 0);
  if (n == 2) return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  MultiPoly det(a.nvars());
  for (std::size_t j = 0; j < n; ++j) {
    if (a(0, j).is_zero()) continue;
    MultiPoly t = a(0, j) * determinant(minor_of(a, 0, j));
    if (j % 2) det -= t;
    else det += t;
  }
  return det;
}

PolyMatrix adjugate(const PolyMatrix& a) {
  std::size_t n = a.size();
  PolyMatrix adj(n, a.nvars());
  if (n == 1) {
    adj(0, 0) = MultiPoly(a.nvars(), Rational(1));
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      MultiPoly c = determinant(minor_of(a, i, j));
      adj(j, i) = (i + j) % 2 ? -c : c;
    }
  return adj;
}

RationalMatrixFunction RationalMatrixFunction::from_poly(const PolyMatrix& p) {
  return {p, MultiPoly(p.nvars(), Rational(1))};
}

RatMatrix RationalMatrixFunction::eval(const RationalVector& m) const {
  Rational den = denominator.eval(m);
  if (sgn(den) == 0) throw DomainError("denominator vanishes at evaluation point");
  return (1 / den) * numerators.eval(m);
}

bool same_function(const RationalMatrixFunction& a, const RationalMatrixFunction& b) {
  if (a.size() != b.size() || a.nvars() != b.nvars()) return false;
  if (a.denominator == b.denominator) return a.numerators == b.numerators;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (!(a.numerators(i, j) * b.denominator == b.numerators(i, j) * a.denominator)) return false;
  return true;
}

RationalMatrixFunction cancel_factor(RationalMatrixFunction r, const MultiPoly& factor) {
  if (factor.degree() > 0) {
    while (!r.denominator.is_constant()) {
      auto den = divide_exact(r.denominator, factor);
      if (!den) break;
      PolyMatrix nums(r.size(), r.nvars());
      bool ok = true;
      for (std::size_t i = 0; i < r.size() && ok; ++i)
        for (std::size_t j = 0; j < r.size() && ok; ++j) {
          auto q = divide_exact(r.numerators(i, j), factor);
          if (!q) ok = false;
          else nums(i, j) = *q;
        }
      if (!ok) break;
      r.numerators = nums;
      r.denominator = *den;
    }
  }
  Rational lead = r.denominator.leading_term().second;
  if (lead != 1) {
    r.numerators = (1 / lead) * r.numerators;
    r.denominator *= 1 / lead;
  }
  return r;
}

}  // namespace nefgl
