#include "nefgl/transform.hpp"

#include "nefgl/error.hpp"
#include "nefgl/series.hpp"

namespace nefgl {

VarianceSpec::VarianceSpec(PolyMatrix v, std::string domain_)
    : n(v.size()), V(std::move(v)), domain(std::move(domain_)) {
  if (n == 0) throw DimensionError("variance matrix must be non-empty");
  if (V.nvars() != n) throw DimensionError("variance entries must be polynomials in n variables");
  if (!V.is_symmetric()) throw PreconditionError("variance matrix is not symmetric");
}

namespace {

// l^D * p(y / l) for deg p <= D, where y are the numerator forms of h_g.
class Homogenizer {
 public:
  Homogenizer(std::vector<MultiPoly> y, MultiPoly l) : y_(std::move(y)), l_(std::move(l)) {
    ypow_.resize(y_.size());
    for (std::size_t i = 0; i < y_.size(); ++i) ypow_[i].emplace_back(l_.nvars(), Rational(1));
    lpow_.emplace_back(l_.nvars(), Rational(1));
  }

  MultiPoly operator()(const MultiPoly& p, unsigned degree) {
    MultiPoly r(l_.nvars());
    for (const auto& [e, c] : p.terms()) {
      MultiPoly t(l_.nvars(), c);
      for (std::size_t i = 0; i < y_.size(); ++i)
        if (e[i]) t = t * ypow(i, e[i]);
      unsigned rest = degree - e.total_degree();
      if (rest) t = t * lpow(rest);
      r += t;
    }
    return r;
  }

  const MultiPoly& lpow(unsigned k) {
    while (lpow_.size() <= k) lpow_.push_back(lpow_.back() * l_);
    return lpow_[k];
  }

 private:
  const MultiPoly& ypow(std::size_t i, unsigned k) {
    while (ypow_[i].size() <= k) ypow_[i].push_back(ypow_[i].back() * y_[i]);
    return ypow_[i][k];
  }

  std::vector<MultiPoly> y_;
  MultiPoly l_;
  std::vector<std::vector<MultiPoly>> ypow_;
  std::vector<MultiPoly> lpow_;
};

}  // namespace

RationalMatrixFunction transform_variance(const GroupElement& g, const RationalMatrixFunction& v) {
  std::size_t n = g.n();
  if (v.size() != n || v.nvars() != n)
    throw DimensionError("variance dimension " + std::to_string(v.size()) + " does not match group dimension " +
                         std::to_string(n));
  MultiPoly l = pole_form(g);
  PolyMatrix jinv = symbolic_jacobian_inverse(g).numerators;
  RatMatrix a = g.A();
  RationalVector b = g.b();
  std::vector<MultiPoly> y;
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = a(i, j);
    y.push_back(MultiPoly::linear(row, b[i]));
  }
  Homogenizer hom(y, l);
  unsigned dn = static_cast<unsigned>(std::max(0, v.numerators.degree()));
  unsigned dq = static_cast<unsigned>(std::max(0, v.denominator.degree()));
  PolyMatrix w(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      w(i, j) = hom(v.numerators(i, j), dn);
      if (j != i) w(j, i) = v.numerators(i, j) == v.numerators(j, i) ? w(i, j) : hom(v.numerators(j, i), dn);
    }
  PolyMatrix num = jinv * w * jinv.transpose();
  if (dq) num = hom.lpow(dq) * num;
  MultiPoly den = hom.lpow(dn + 1) * hom(v.denominator, dq);
  return cancel_factor({num, den}, l);
}

RationalMatrixFunction transform_variance(const GroupElement& g, const PolyMatrix& v) {
  return transform_variance(g, RationalMatrixFunction::from_poly(v));
}

std::optional<PolyMatrix> lower_to_polymatrix(const RationalMatrixFunction& r) {
  const MultiPoly& q = r.denominator;
  if (q.is_zero()) throw PreconditionError("zero denominator");
  if (q.is_constant()) return (1 / q.constant_term()) * r.numerators;
  PolyMatrix out(r.size(), r.nvars());
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j) {
      const MultiPoly& p = r.numerators(i, j);
      if (p.is_zero()) continue;
      int k = p.degree() - q.degree();
      if (k < 0) return std::nullopt;
      MultiPoly x;
      try {
        x = series_solve_vanishing_div(q, p, k).to_poly();
      } catch (const InconsistentError&) {
        return std::nullopt;
      }
      if (!(q * x == p)) return std::nullopt;
      out(i, j) = x;
    }
  return out;
}

MultiPoly transform_variance_cubic_n1(const GroupElement& g, const MultiPoly& v) {
  if (g.n() != 1 || v.nvars() != 1) throw DimensionError("cubic action is defined for n = 1");
  if (v.degree() > 3) throw PreconditionError("variance has degree above 3");
  const RatMatrix& m = g.matrix();
  Homogenizer hom({MultiPoly::linear({m(0, 0)}, m(0, 1))}, MultiPoly::linear({m(1, 0)}, m(1, 1)));
  return hom(v, 3);
}

PolyMatrix transform_closed_form_gc(const RationalVector& c, ClosedFormPart part,
                                    const std::vector<RatMatrix>& payload) {
  std::size_t n = c.size();
  MultiPoly l = MultiPoly::linear(c, 1);
  PolyMatrix p = PolyMatrix::identity(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p(i, j) += c[j] * MultiPoly::variable(n, i);
  switch (part) {
    case ClosedFormPart::RankOne:
      return l * PolyMatrix::outer_mm(n);
    case ClosedFormPart::Linear: {
      if (payload.size() != n) throw DimensionError("linear part needs n coefficient matrices");
      PolyMatrix bm(n, n);
      for (std::size_t k = 0; k < n; ++k) bm = bm + MultiPoly::variable(n, k) * PolyMatrix::constant(payload[k], n);
      return p * bm * p.transpose();
    }
    case ClosedFormPart::Constant:
      if (payload.size() != 1) throw DimensionError("constant part needs one matrix");
      return l * (p * PolyMatrix::constant(payload[0], n) * p.transpose());
  }
  throw PreconditionError("unknown part");
}

std::optional<SymmetryWitness> check_prop34_symmetry(const PolyMatrix& v) {
  std::size_t n = v.size();
  std::vector<PolyMatrix> dv;
  for (std::size_t j = 0; j < n; ++j) dv.push_back(v.derivative(j));
  // f(x, y)_i = sum_j (V x)_j (d_j V y)_i; on basis vectors
  // f(e_a, e_b)_i = sum_j V_ja d_j V_ib.
  auto f = [&](std::size_t i, std::size_t a, std::size_t b) {
    MultiPoly s(n);
    for (std::size_t j = 0; j < n; ++j)
      if (!v(j, a).is_zero() && !dv[j](i, b).is_zero()) s += v(j, a) * dv[j](i, b);
    return s;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        MultiPoly diff = f(i, a, b) - f(i, b, a);
        if (!diff.is_zero()) return SymmetryWitness{i, a, b, diff};
      }
  return std::nullopt;
}

std::optional<SimpleQuadratic> simple_quadratic_decomposition(const PolyMatrix& v) {
  std::size_t n = v.size();
  if (v.degree() > 2) return std::nullopt;
  PolyMatrix q = v.homogeneous_part(2);
  ExponentVector e11(n);
  e11[0] = 2;
  Rational a = q(0, 0).coefficient(e11);
  if (!(q == a * PolyMatrix::outer_mm(n))) return std::nullopt;
  RatMatrix c(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c(i, j) = v(i, j).constant_term();
  return SimpleQuadratic{a, v.homogeneous_part(1), c};
}

bool check_cubic_condition(const PolyMatrix& v, const RationalVector& c) {
  std::size_t n = v.size();
  if (c.size() != n) throw DimensionError("c has the wrong length");
  auto sq = simple_quadratic_decomposition(v);
  if (!sq) throw PreconditionError("not simple quadratic");
  MultiPoly cm = MultiPoly::linear(c, 0);
  // c^T B(m) c and c^T C c
  MultiPoly cbc(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cbc += (c[i] * c[j]) * sq->B(i, j);
  Rational ccc = dot(c, sq->C * c);
  PolyMatrix mm = PolyMatrix::outer_mm(n);
  PolyMatrix expr = (sq->a * cm) * mm + cbc * mm + (ccc * cm) * mm;
  return expr == PolyMatrix(n, n);
}

}  // namespace nefgl
