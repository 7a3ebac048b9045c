#include "nefgl/recover.hpp"

#include "nefgl/error.hpp"
#include "nefgl/lagrange.hpp"

namespace nefgl {

SeriesVector phi_prime_from_variance(const PolyMatrix& v, int max_degree) {
  std::size_t n = v.size();
  if (v.nvars() != n) throw DimensionError("variance must be a polynomial matrix in n variables");
  MultiPoly det = determinant(v);
  if (det.is_zero()) throw NotLatticeTypeError("variance is singular");
  std::vector<MultiPoly> m;
  for (std::size_t i = 0; i < n; ++i) m.push_back(MultiPoly::variable(n, i));
  std::vector<MultiPoly> num = adjugate(v) * m;
  SeriesVector out;
  for (std::size_t i = 0; i < n; ++i) {
    try {
      out.push_back(series_solve_vanishing_div(det, num[i], max_degree));
    } catch (const InconsistentError&) {
      throw NotLatticeTypeError("V^{-1} m is not analytic at 0");
    }
    if (out.back().constant_term() != 1)
      throw NotLatticeTypeError("phi'(0) = " + out.back().constant_term().get_str() + " in component " +
                                std::to_string(i + 1) + ", expected 1");
  }
  return out;
}

TruncSeries integrate_phi(const SeriesVector& phi_prime) {
  std::size_t n = phi_prime.size();
  if (n == 0) throw DimensionError("empty gradient");
  int d = phi_prime[0].max_degree();
  for (const auto& p : phi_prime) d = std::min(d, p.max_degree());
  TruncSeries phi(n, d + 1);
  std::vector<bool> set(phi.size(), false);
  const SeriesLayout& lay = phi.layout();
  for (std::size_t i = 0; i < n; ++i) {
    TruncSeries part = phi_prime[i].truncate(d).integrate(i);
    for (std::size_t idx = 1; idx < part.size(); ++idx) {
      if (lay.exponent(idx)[i] == 0) continue;
      if (!set[idx]) {
        phi[idx] = part[idx];
        set[idx] = true;
      } else if (phi[idx] != part[idx]) {
        throw InconsistentError("phi' is not a gradient: mixed partials disagree at z^" +
                                MultiPoly::monomial(lay.exponent(idx), 1).to_string('z'));
      }
    }
  }
  return phi;
}

SeriesVector solve_K(const TruncSeries& phi) {
  std::size_t n = phi.nvars();
  SeriesVector out;
  for (std::size_t i = 0; i < n; ++i) {
    TruncSeries t = -phi.derivative(i);
    t[0] += 1;
    if (sgn(t[0]) != 0) throw PreconditionError("d phi / d z_i must equal 1 at the origin");
    const SeriesLayout& lay = t.layout();
    for (std::size_t idx = 1; idx < t.size(); ++idx)
      if (sgn(t[idx]) != 0) t[idx] /= lay.degree(idx);
    out.push_back(std::move(t));
  }
  return out;
}

MeasureTable recover_measure(const PolyMatrix& v, int max_degree) {
  if (max_degree < 0) throw PreconditionError("max degree must be non-negative");
  std::size_t n = v.size();
  MeasureTable table;
  table.n = n;
  table.max_degree = max_degree;
  SeriesVector dphi = phi_prime_from_variance(v, max_degree);
  TruncSeries phi = integrate_phi(dphi).truncate(max_degree + 1);
  SeriesVector g;
  for (const auto& k : solve_K(phi)) g.push_back(series_exp(k.truncate(max_degree)));
  TruncSeries f = series_exp(phi.truncate(max_degree)) * jacobian_factor(g);
  auto layout = SeriesLayout::get(n, max_degree);
  for (std::size_t idx = 0; idx < layout->size(); ++idx) {
    ExponentVector k = layout->exponent(idx);
    int kd = layout->degree(idx);
    TruncSeries gk = TruncSeries::constant(n, kd, 1);
    for (std::size_t i = 0; i < n; ++i)
      if (k[i]) gk = gk * g[i].truncate(kd).pow(k[i]);
    table.mu[k] = TruncSeries::product_coefficient(f.truncate(kd), gk, k);
  }
  for (std::size_t i = 0; i < n && max_degree >= 1; ++i) {
    const Rational& mu = table.mu[ExponentVector::unit(n, i)];
    if (sgn(mu) <= 0)
      table.warnings.push_back("mu at e_" + std::to_string(i + 1) + " is " + mu.get_str() +
                               "; the mean map is not locally invertible there");
  }
  return table;
}

}  // namespace nefgl
