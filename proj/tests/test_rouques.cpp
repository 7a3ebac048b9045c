#include <doctest.h>

#include <cmath>
#include <map>
#include <numbers>

#include <nefgl/error.hpp>
#include <nefgl/rouques.hpp>

#include "helpers.hpp"

using namespace nefgl;
using testing::P;
using testing::Q;

namespace {

const double kPi = std::numbers::pi;

// Coefficients of (1 - sum p_i z_i)^{-lambda} through the Euler-operator recurrence.
std::map<std::vector<unsigned>, double> negbin_table(const std::vector<double>& p, double lambda, unsigned kmax) {
  std::map<std::vector<unsigned>, double> a;
  a[{0, 0}] = 1;
  for (unsigned d = 1; d <= kmax; ++d)
    for (unsigned k1 = 0; k1 <= d; ++k1) {
      std::vector<unsigned> k{k1, d - k1};
      double s = 0;
      for (std::size_t i = 0; i < 2; ++i) {
        if (k[i] == 0) continue;
        auto prev = k;
        --prev[i];
        s += p[i] * a[prev];
      }
      a[k] = s * (d - 1 + lambda) / d;
    }
  return a;
}

}  // namespace

TEST_SUITE("rouques") {

TEST_CASE("log gamma") {
  double lf = 0;
  for (int k = 1; k <= 170; ++k) {
    CHECK(std::abs(log_gamma(k + 1.0) - (lf += std::log(k))) < 1e-12 * std::max(1.0, lf));
  }
  for (double x : {0.1, 0.5, 1.5, 3.3, 10.25, 40.0})
    CHECK(log_gamma(x) == doctest::Approx(std::log(std::tgamma(x))).epsilon(1e-13));
}

TEST_CASE("tilted Gaussian density") {
  Semigroup g = Semigroup::gaussian();
  CHECK(continuous_density(g, {1, {0}}, 0) == doctest::Approx(1 / std::sqrt(2 * kPi)).epsilon(1e-15));
  CHECK(continuous_density(g, {1, {0}}, 0) == doctest::Approx(0.398942).epsilon(1e-6));
  double lambda = 1, c = 1, x = 1, s = lambda + c * x;
  double closed = lambda / (std::sqrt(2 * kPi) * std::pow(s, 1.5)) * std::exp(-x * x / (2 * s));
  CHECK(continuous_density(g, {lambda, {c}}, x) == doctest::Approx(closed).epsilon(1e-14));
  CHECK(continuous_density(g, {lambda, {c}}, x) == doctest::Approx(0.109848).epsilon(1e-5));
  CHECK(continuous_density(g, {1, {1}}, -2) == 0);
}

TEST_CASE("tilted Gamma density") {
  Semigroup g = Semigroup::gamma();
  CHECK(continuous_density(g, {1, {-1}}, 2) == 0);
  CHECK(continuous_density(g, {1, {-1}}, 1) == 0);
  CHECK(continuous_density(g, {2, {0}}, 3) == doctest::Approx(3.0 / std::tgamma(2.0)));
  CHECK_THROWS_AS(continuous_density(g, {0, {1}}, 1), PreconditionError);
  CHECK_THROWS_AS(discrete_mass(g, {1, {1}}, {1}), PreconditionError);
}

TEST_CASE("tilted Poisson mass") {
  Semigroup p = Semigroup::poisson();
  for (unsigned k = 0; k < 10; ++k)
    CHECK(discrete_mass(p, {2.5, {0}}, {k}) ==
          doctest::Approx(std::exp(-2.5) * std::pow(2.5, k) / std::tgamma(k + 1.0)).epsilon(1e-13));
  CHECK(discrete_mass(p, {1, {1}}, {2}) == doctest::Approx(1.5 * std::exp(-3.0)).epsilon(1e-14));
  CHECK(discrete_mass(p, {1, {1}}, {2}) == doctest::Approx(0.074681).epsilon(1e-5));
  CHECK(discrete_mass(p, {1, {-1}}, {3}) == 0);
}

TEST_CASE("negative binomial masses") {
  std::vector<double> pw{0.2, 0.3};
  Semigroup nb = Semigroup::negative_binomial(pw);
  for (double lambda : {0.5, 1.0, 2.7}) {
    auto table = negbin_table(pw, lambda, 12);
    for (const auto& [k, v] : table) CHECK(semigroup_mass(nb, lambda, k) == doctest::Approx(v).epsilon(1e-12));
  }
  CHECK_THROWS_AS(Semigroup::negative_binomial({0.6, 0.5}), PreconditionError);
  CHECK_THROWS_AS(Semigroup::negative_binomial({0.0, 0.5}), PreconditionError);
}

TEST_CASE("convolution identity") {
  Semigroup p = Semigroup::poisson();
  CHECK(convolution_identity_residual(p, {1, {0.5}}, {3}) < 1e-12);
  for (unsigned k = 0; k < 8; ++k) CHECK(convolution_identity_residual(p, {1.7, {0}}, {k}) < 1e-12);
  for (double c : {0.3, 1.0, -0.2})
    for (unsigned k = 0; k < 12; ++k) CHECK(convolution_identity_residual(p, {2, {c}}, {k}) < 1e-12);

  Semigroup nb = Semigroup::negative_binomial({0.2, 0.3});
  CHECK(convolution_identity_residual(nb, {1.5, {0.2, 0.1}}, {3, 2}) < 1e-12);

  for (double x : {-1.0, 0.5, 1.0, 2.0}) CHECK(gaussian_convolution_residual(1, 1, x) < 1e-6);
}

TEST_CASE("normalization") {
  Semigroup p = Semigroup::poisson();
  for (double c : {0.0, 0.2, 0.5}) {
    double s = normalization_sum(p, {1, {c}}, 200);
    CHECK(s <= 1 + 1e-12);
    CHECK(s >= 1 - 1e-8);
  }
  // Near c = 1 the tail decays too slowly for K = 200.
  double slow = normalization_sum(p, {1, {0.9}}, 200);
  CHECK(slow < 1 - 1e-8);
  CHECK(slow > 0.99);
}

TEST_CASE("cumulant equation") {
  Semigroup counting = Semigroup::poisson(PoissonGenerator::Counting);
  CumulantCheck chk = cumulant_equation_check(counting, {1, {0.3}}, {-2}, 200);
  CHECK(chk.residual < 1e-8);
  CHECK(std::abs(chk.z - std::exp(-2 + 0.3 * chk.z)) < 1e-8);

  CumulantCheck flat = cumulant_equation_check(counting, {1.5, {0}}, {-1}, 100);
  CHECK(flat.residual < 1e-12);

  Semigroup nb = Semigroup::negative_binomial({0.2, 0.3});
  CumulantCheck nbc = cumulant_equation_check(nb, {1, {0.2, 0.1}}, {-1, -1}, 120);
  CHECK(nbc.residual < 1e-6);

  CHECK_THROWS_AS(truncated_cumulant(counting, {1, {0.3}}, {2}, 100), DivergenceError);
}

TEST_CASE("named variances") {
  CHECK(transformed_variance_named(SemigroupKind::Gamma, Q(1), Q(1)) == P("m1^2*(1 + m1)", 1));
  CHECK(transformed_variance_named(SemigroupKind::Poisson, Q(3), Q(0)) == P("m1", 1));
  CHECK(transformed_variance_named(SemigroupKind::Poisson, Q(2), Q(1)) == P("m1*(1 + 1/2*m1)^2", 1));
  CHECK_THROWS_AS(transformed_variance_named(SemigroupKind::Gaussian, Q(1), Q(1)), PreconditionError);
}

TEST_CASE("sampled variance matches the predicted variance") {
  MomentCheck mc = monte_carlo_variance_check(1, 0.3, 20000, 42);
  CHECK(mc.pass);
  CHECK(std::abs(mc.sample_variance - mc.predicted_variance) < 5 * mc.standard_error);
}

}
