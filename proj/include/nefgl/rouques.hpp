#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nefgl/multipoly.hpp"

namespace nefgl {

enum class SemigroupKind { Gaussian, Gamma, Poisson, NegBinomial };

// Poisson generator: Probability uses e^{-l} l^k / k!, Counting uses l^k / k!.
enum class PoissonGenerator { Probability, Counting };

// Convolution semigroup (mu_lambda) with density or mass f(lambda, .).
struct Semigroup {
  SemigroupKind kind = SemigroupKind::Poisson;
  std::size_t n = 1;
  std::vector<double> p;
  PoissonGenerator generator = PoissonGenerator::Probability;

  static Semigroup gaussian();
  static Semigroup gamma();
  static Semigroup poisson(PoissonGenerator gen = PoissonGenerator::Probability);
  // Requires p_i > 0 and sum p_i < 1.
  static Semigroup negative_binomial(std::vector<double> p);

  bool discrete() const { return kind == SemigroupKind::Poisson || kind == SemigroupKind::NegBinomial; }
  std::string name() const;
};

struct HElement {
  double lambda;
  std::vector<double> c;
};

// std::lgamma; accurate to a few ulps on (0, 1e4).
double log_gamma(double x);

double semigroup_density(const Semigroup& s, double lambda, double x);
double semigroup_mass(const Semigroup& s, double lambda, const std::vector<unsigned>& k);
// Cumulant function k_{mu_lambda}(theta) in closed form.
double semigroup_cumulant(const Semigroup& s, double lambda, const std::vector<double>& theta);

// lambda / (lambda + c x) f(lambda + c x, x) 1(lambda + c x > 0). The raw
// forms accept any real lambda; lambda = 0 is the unit mass at the origin.
double tilted_density_raw(const Semigroup& s, double lambda, double c, double x);
double tilted_mass_raw(const Semigroup& s, double lambda, const std::vector<double>& c,
                       const std::vector<unsigned>& k);
double continuous_density(const Semigroup& s, const HElement& h, double x);
double discrete_mass(const Semigroup& s, const HElement& h, const std::vector<unsigned>& k);

// |p_k(lambda, c) 1(<c,k> >= 0) - sum_{k' <= k} p_{k'}(lambda, 0) p_{k-k'}(<c,k'>, c)|.
double convolution_identity_residual(const Semigroup& s, const HElement& h, const std::vector<unsigned>& k);
// Same identity for the Gaussian density, integrating over R numerically.
double gaussian_convolution_residual(double lambda, double c, double x);

// log sum_{|k| <= K} p_k(lambda, c) e^{<k, theta>}; throws DivergenceError when
// the last shells do not decay.
double truncated_cumulant(const Semigroup& s, const HElement& h, const std::vector<double>& theta, unsigned kmax);

struct CumulantCheck {
  double z;
  double lhs;
  double rhs;
  double residual;
};
// z = k_{mu_{1,c}}(theta); lhs = k_{mu_{lambda,c}}(theta),
// rhs = k_{mu_lambda}(theta + c z).
CumulantCheck cumulant_equation_check(const Semigroup& s, const HElement& h, const std::vector<double>& theta,
                                      unsigned kmax);

double normalization_sum(const Semigroup& s, const HElement& h, unsigned kmax);

// Variance function of F(mu_{lambda,c}) for Gamma and Poisson.
MultiPoly transformed_variance_named(SemigroupKind kind, const Rational& lambda, const Rational& c);

struct MomentCheck {
  double sample_mean;
  double sample_variance;
  double predicted_variance;
  double standard_error;
  bool pass;
};
// Draws from p(lambda, c) for the Poisson semigroup and compares the sample
// variance with m (1 + c m / lambda)^2 at the sample mean.
MomentCheck monte_carlo_variance_check(double lambda, double c, std::size_t samples, std::uint64_t seed);

}  // namespace nefgl
