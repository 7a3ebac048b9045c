#include <doctest.h>

#include <nefgl/error.hpp>
#include <nefgl/lagrange.hpp>
#include <nefgl/parse.hpp>
#include <nefgl/random_cases.hpp>

#include "helpers.hpp"

using namespace nefgl;
using testing::Q;

namespace {

TruncSeries S(const std::string& s, std::size_t n, int d) { return series_parse(s, n, d); }

// h_i = w_i g_i(h), iterated until nothing changes.
SeriesVector fixed_point_oracle(const SeriesVector& g) {
  std::size_t n = g.size();
  int d = g[0].max_degree();
  SeriesVector h(n, TruncSeries(n, d));
  for (;;) {
    SeriesVector next(n);
    for (std::size_t i = 0; i < n; ++i) next[i] = series_compose(g[i], h).shift(i).truncate(d);
    if (next == h) return h;
    h = next;
  }
}

}  // namespace

TEST_SUITE("lagrange") {

TEST_CASE("functional equation") {
  SeriesVector h = solve_functional_equation({S("exp(z1)", 1, 4)});
  CHECK(h[0] == S("z1 + z1^2 + 3/2*z1^3 + 8/3*z1^4", 1, 4));

  SeriesVector id = solve_functional_equation({TruncSeries::constant(2, 3, 1), TruncSeries::constant(2, 3, 1)});
  CHECK(id[0] == S("z1", 2, 3));
  CHECK(id[1] == S("z2", 2, 3));

  SeriesVector g{S("1 + z2", 2, 3), S("1 + z1", 2, 3)};
  SeriesVector h2 = solve_functional_equation(g);
  for (std::size_t i = 0; i < 2; ++i) {
    TruncSeries rhs = series_compose(g[i], h2).shift(i).truncate(3);
    CHECK((h2[i] - rhs).is_zero());
  }
  CHECK(h2 == fixed_point_oracle(g));
}

TEST_CASE("jacobian factor") {
  CHECK(jacobian_factor({TruncSeries::constant(2, 3, 1), TruncSeries::constant(2, 3, 1)}) ==
        TruncSeries::constant(2, 3, 1));
  CHECK(jacobian_factor({S("exp(z1)", 1, 5)}).truncate(4) == S("1 - z1", 1, 4));
  for (std::size_t n = 1; n <= 3; ++n) {
    int d = 4;
    TruncSeries s(n, d);
    for (std::size_t i = 0; i < n; ++i) s += TruncSeries::variable(n, d, i);
    TruncSeries one_s = TruncSeries::constant(n, d, 1) + s;
    SeriesVector g(n, one_s);
    TruncSeries dg = jacobian_factor(g);
    CHECK(dg.truncate(d - 1) == series_inverse(one_s).truncate(d - 1));
  }
  CHECK_THROWS_AS(jacobian_factor({S("z1", 1, 3)}), PreconditionError);
}

TEST_CASE("coefficients") {
  LagrangeProblem p{{S("exp(z1)", 1, 6)}, S("3 + z1", 1, 6)};
  CHECK(lagrange_coefficient(p, {0}) == 3);
  CHECK_THROWS_AS(lagrange_coefficient(p, {7}), PreconditionError);

  // Tree function: [w^k] h = k^{k-1}/k!.
  LagrangeProblem tree{{S("exp(z1)", 1, 6)}, S("z1", 1, 6)};
  SeriesVector h = fixed_point_oracle({S("exp(z1)", 1, 6)});
  Rational fact = 1;
  for (unsigned k = 1; k <= 6; ++k) {
    fact *= k;
    Rational kk = 1;
    for (unsigned i = 1; i < k; ++i) kk *= k;
    CHECK(lagrange_coefficient(tree, {k}) == kk / fact);
    CHECK(h[0].coefficient({k}) == kk / fact);
  }
}

TEST_CASE("two-sided identity on random problems") {
  CaseGenerator gen(67);
  for (int t = 0; t < 20; ++t) {
    std::size_t n = 1 + t % 3;
    int d = n == 3 ? 3 : 4;
    SeriesVector g;
    for (std::size_t i = 0; i < n; ++i) {
      MultiPoly p = gen.polynomial(n, 2);
      p += MultiPoly(n, gen.nonzero_rational() - p.constant_term());
      g.push_back(TruncSeries::from_poly(p, d));
    }
    TruncSeries g0 = TruncSeries::from_poly(gen.polynomial(n, 2), d);
    SeriesVector h = fixed_point_oracle(g);
    TruncSeries direct = series_compose(g0, h);
    LagrangeProblem p{g, g0};
    for (std::size_t idx = 0; idx < direct.size(); ++idx) {
      ExponentVector k = direct.layout().exponent(idx);
      CHECK(lagrange_coefficient(p, k) == direct[idx]);
    }
  }
}

}
