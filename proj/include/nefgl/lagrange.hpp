#pragma once

#include "nefgl/series.hpp"

namespace nefgl {

// Data for h = diag(w) g(h): g_i(0) != 0 for every i, g0 an arbitrary series.
struct LagrangeProblem {
  SeriesVector g;
  TruncSeries g0;
};

// Fixed-point iteration h <- diag(w) g(h); exact through the truncation degree.
SeriesVector solve_functional_equation(const SeriesVector& g);
// det(I - [z_i / g_i * dg_i/dz_j]).
TruncSeries jacobian_factor(const SeriesVector& g);
// [z^k](g0 * g^k * D(g)).
Rational lagrange_coefficient(const LagrangeProblem& p, const ExponentVector& k);

}  // namespace nefgl
