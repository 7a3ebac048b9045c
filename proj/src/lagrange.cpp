#include "nefgl/lagrange.hpp"

#include "nefgl/error.hpp"

namespace nefgl {

namespace {

void check_problem(const SeriesVector& g) {
  if (g.empty()) throw DimensionError("empty functional equation");
  for (const auto& gi : g) {
    if (gi.nvars() != g.size()) throw DimensionError("g must have one component per variable");
    if (sgn(gi.constant_term()) == 0) throw PreconditionError("g_i(0) must be nonzero");
  }
}

}  // namespace

SeriesVector solve_functional_equation(const SeriesVector& g) {
  check_problem(g);
  std::size_t n = g.size();
  int d = g[0].max_degree();
  for (const auto& gi : g) d = std::min(d, gi.max_degree());
  SeriesVector h(n, TruncSeries(n, d));
  // Each pass fixes one more degree.
  for (int it = 0; it <= d; ++it) {
    SeriesVector next;
    for (std::size_t i = 0; i < n; ++i) {
      TruncSeries gi = series_compose(g[i].truncate(d), h);
      next.push_back(gi.shift(i).truncate(d));
    }
    h = std::move(next);
  }
  return h;
}

TruncSeries jacobian_factor(const SeriesVector& g) {
  check_problem(g);
  std::size_t n = g.size();
  int d = g[0].max_degree();
  for (const auto& gi : g) d = std::min(d, gi.max_degree());
  if (d == 0) return TruncSeries::constant(n, 0, 1);
  SeriesMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    TruncSeries inv = series_inverse(g[i]);
    for (std::size_t j = 0; j < n; ++j) {
      TruncSeries t = (inv * g[i].derivative(j)).shift(i);
      t = t.truncate(std::min(t.max_degree(), g[i].max_degree()));
      TruncSeries entry = -t;
      if (i == j) entry[0] += 1;
      m[i].push_back(std::move(entry));
    }
  }
  return series_det(m);
}

Rational lagrange_coefficient(const LagrangeProblem& p, const ExponentVector& k) {
  check_problem(p.g);
  std::size_t n = p.g.size();
  if (k.size() != n) throw DimensionError("exponent length does not match problem dimension");
  int kd = static_cast<int>(k.total_degree());
  int d = p.g0.max_degree();
  for (const auto& gi : p.g) d = std::min(d, gi.max_degree());
  if (kd > d) throw PreconditionError("|k| exceeds the truncation degree");
  if (kd == 0) return p.g0.constant_term();
  TruncSeries gk = TruncSeries::constant(n, kd, 1);
  SeriesVector gt;
  for (std::size_t i = 0; i < n; ++i) {
    gt.push_back(p.g[i].truncate(kd));
    if (k[i]) gk = gk * gt[i].pow(k[i]);
  }
  TruncSeries f = p.g0.truncate(kd) * jacobian_factor(gt);
  return TruncSeries::product_coefficient(f, gk, k);
}

}  // namespace nefgl
