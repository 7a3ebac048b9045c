#include "nefgl/rouques.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "nefgl/error.hpp"

namespace nefgl {

namespace {

constexpr double kPi = 3.14159265358979323846;

double dot(const std::vector<double>& c, const std::vector<unsigned>& k) {
  double s = 0;
  for (std::size_t i = 0; i < c.size(); ++i) s += c[i] * k[i];
  return s;
}

void check_dims(const Semigroup& s, const std::vector<double>& c, std::size_t k) {
  if (c.size() != s.n || k != s.n) throw DimensionError("semigroup dimension mismatch");
}

// All k in N^n with |k| = d.
std::vector<std::vector<unsigned>> shell(std::size_t n, unsigned d) {
  std::vector<std::vector<unsigned>> out;
  for (const auto& e : monomials_of_degree(n, d)) out.push_back(e.data());
  return out;
}

}  // namespace

Semigroup Semigroup::gaussian() { return {SemigroupKind::Gaussian, 1, {}, PoissonGenerator::Probability}; }

Semigroup Semigroup::gamma() { return {SemigroupKind::Gamma, 1, {}, PoissonGenerator::Probability}; }

Semigroup Semigroup::poisson(PoissonGenerator gen) { return {SemigroupKind::Poisson, 1, {}, gen}; }

Semigroup Semigroup::negative_binomial(std::vector<double> p) {
  if (p.empty()) throw DimensionError("negative binomial needs at least one weight");
  double total = 0;
  for (double x : p) {
    if (!(x > 0)) throw PreconditionError("negative binomial weights must be positive");
    total += x;
  }
  if (!(total < 1)) throw PreconditionError("negative binomial weights must sum to less than 1");
  std::size_t n = p.size();
  return {SemigroupKind::NegBinomial, n, std::move(p), PoissonGenerator::Probability};
}

std::string Semigroup::name() const {
  switch (kind) {
    case SemigroupKind::Gaussian: return "gaussian";
    case SemigroupKind::Gamma: return "gamma";
    case SemigroupKind::Poisson: return generator == PoissonGenerator::Probability ? "poisson" : "poisson-counting";
    case SemigroupKind::NegBinomial: return "negbin";
  }
  return "?";
}

double log_gamma(double x) { return std::lgamma(x); }

double semigroup_density(const Semigroup& s, double lambda, double x) {
  if (!(lambda > 0)) throw PreconditionError("lambda must be positive");
  switch (s.kind) {
    case SemigroupKind::Gaussian:
      return std::exp(-x * x / (2 * lambda)) / std::sqrt(2 * kPi * lambda);
    case SemigroupKind::Gamma:
      if (x <= 0) return 0;
      return std::exp((lambda - 1) * std::log(x) - log_gamma(lambda));
    default:
      throw PreconditionError("semigroup is discrete");
  }
}

double semigroup_mass(const Semigroup& s, double lambda, const std::vector<unsigned>& k) {
  if (k.size() != s.n) throw DimensionError("lattice point has the wrong dimension");
  if (lambda == 0) return std::all_of(k.begin(), k.end(), [](unsigned v) { return v == 0; }) ? 1.0 : 0.0;
  if (!(lambda > 0)) throw PreconditionError("lambda must be positive");
  switch (s.kind) {
    case SemigroupKind::Poisson: {
      double lg = k[0] * std::log(lambda) - log_gamma(k[0] + 1.0);
      if (s.generator == PoissonGenerator::Probability) lg -= lambda;
      return std::exp(lg);
    }
    case SemigroupKind::NegBinomial: {
      unsigned total = std::accumulate(k.begin(), k.end(), 0u);
      double lg = log_gamma(lambda + total) - log_gamma(lambda);
      for (std::size_t i = 0; i < k.size(); ++i) lg += k[i] * std::log(s.p[i]) - log_gamma(k[i] + 1.0);
      return std::exp(lg);
    }
    default:
      throw PreconditionError("semigroup is continuous");
  }
}

double semigroup_cumulant(const Semigroup& s, double lambda, const std::vector<double>& theta) {
  if (theta.size() != s.n) throw DimensionError("theta has the wrong dimension");
  switch (s.kind) {
    case SemigroupKind::Gaussian:
      return lambda * theta[0] * theta[0] / 2;
    case SemigroupKind::Gamma:
      if (!(theta[0] < 0)) throw DomainError("gamma cumulant needs theta < 0");
      return -lambda * std::log(-theta[0]);
    case SemigroupKind::Poisson:
      return s.generator == PoissonGenerator::Probability ? lambda * std::expm1(theta[0])
                                                          : lambda * std::exp(theta[0]);
    case SemigroupKind::NegBinomial: {
      double t = 0;
      for (std::size_t i = 0; i < s.n; ++i) t += s.p[i] * std::exp(theta[i]);
      if (!(t < 1)) throw DomainError("theta outside the negative binomial domain");
      return -lambda * std::log1p(-t);
    }
  }
  return 0;
}

double tilted_density_raw(const Semigroup& s, double lambda, double c, double x) {
  if (s.discrete()) throw PreconditionError("semigroup is discrete");
  double shifted = lambda + c * x;
  if (!(shifted > 0)) return 0;
  return lambda / shifted * semigroup_density(s, shifted, x);
}

double tilted_mass_raw(const Semigroup& s, double lambda, const std::vector<double>& c,
                       const std::vector<unsigned>& k) {
  if (!s.discrete()) throw PreconditionError("semigroup is continuous");
  check_dims(s, c, k.size());
  if (lambda == 0) return semigroup_mass(s, 0, k);
  double shifted = lambda + dot(c, k);
  if (!(shifted > 0)) return 0;
  return lambda / shifted * semigroup_mass(s, shifted, k);
}

double continuous_density(const Semigroup& s, const HElement& h, double x) {
  if (!(h.lambda > 0)) throw PreconditionError("lambda must be positive");
  if (h.c.size() != 1) throw DimensionError("continuous semigroups are one-dimensional");
  return tilted_density_raw(s, h.lambda, h.c[0], x);
}

double discrete_mass(const Semigroup& s, const HElement& h, const std::vector<unsigned>& k) {
  if (!(h.lambda > 0)) throw PreconditionError("lambda must be positive");
  return tilted_mass_raw(s, h.lambda, h.c, k);
}

double convolution_identity_residual(const Semigroup& s, const HElement& h, const std::vector<unsigned>& k) {
  check_dims(s, h.c, k.size());
  double ck = dot(h.c, k);
  double lhs = ck >= 0 ? discrete_mass(s, h, k) : 0.0;
  std::vector<double> zero(s.n, 0.0);
  double rhs = 0;
  // Enumerate 0 <= k' <= k componentwise.
  std::vector<unsigned> kp(s.n, 0), rest(s.n);
  for (;;) {
    for (std::size_t i = 0; i < s.n; ++i) rest[i] = k[i] - kp[i];
    rhs += tilted_mass_raw(s, h.lambda, zero, kp) * tilted_mass_raw(s, dot(h.c, kp), h.c, rest);
    std::size_t i = 0;
    while (i < s.n && kp[i] == k[i]) kp[i++] = 0;
    if (i == s.n) break;
    ++kp[i];
  }
  return std::abs(lhs - rhs);
}

double gaussian_convolution_residual(double lambda, double c, double x) {
  Semigroup g = Semigroup::gaussian();
  double lhs = c * x > 0 ? tilted_density_raw(g, lambda, c, x) : 0.0;
  auto integrand = [&](double y) {
    return tilted_density_raw(g, lambda, 0, y) * tilted_density_raw(g, c * y, c, x - y);
  };
  double rhs = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      integrand, -std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(), 15, 1e-13);
  return std::abs(lhs - rhs);
}

double truncated_cumulant(const Semigroup& s, const HElement& h, const std::vector<double>& theta, unsigned kmax) {
  if (theta.size() != s.n) throw DimensionError("theta has the wrong dimension");
  double total = 0;
  std::vector<double> shells;
  for (unsigned d = 0; d <= kmax; ++d) {
    double sd = 0;
    for (const auto& k : shell(s.n, d)) {
      double w = discrete_mass(s, h, k);
      if (w != 0) sd += std::exp(std::log(w) + dot(theta, k));
    }
    shells.push_back(sd);
    total += sd;
  }
  if (!std::isfinite(total) || total <= 0) throw DivergenceError("truncated transform is not finite");
  // The tail must have died out: the last shells carry negligible mass.
  double tail = shells.back() + (kmax >= 1 ? shells[kmax - 1] : 0.0);
  if (tail > 1e-12 * total) throw DivergenceError("truncated sum has not converged; increase K or lower theta");
  return std::log(total);
}

CumulantCheck cumulant_equation_check(const Semigroup& s, const HElement& h, const std::vector<double>& theta,
                                      unsigned kmax) {
  double z = truncated_cumulant(s, {1.0, h.c}, theta, kmax);
  double lhs = h.lambda == 1.0 ? z : truncated_cumulant(s, h, theta, kmax);
  std::vector<double> shifted(theta);
  for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] += h.c[i] * z;
  double rhs = semigroup_cumulant(s, h.lambda, shifted);
  return {z, lhs, rhs, std::abs(lhs - rhs)};
}

double normalization_sum(const Semigroup& s, const HElement& h, unsigned kmax) {
  double total = 0;
  for (unsigned d = 0; d <= kmax; ++d)
    for (const auto& k : shell(s.n, d)) total += discrete_mass(s, h, k);
  return total;
}

MultiPoly transformed_variance_named(SemigroupKind kind, const Rational& lambda, const Rational& c) {
  if (sgn(lambda) <= 0) throw PreconditionError("lambda must be positive");
  MultiPoly m = MultiPoly::variable(1, 0);
  MultiPoly l = MultiPoly::linear({c}, lambda);
  switch (kind) {
    case SemigroupKind::Gamma:
      return (1 / (lambda * lambda * lambda)) * (m * m * l);
    case SemigroupKind::Poisson:
      return (1 / (lambda * lambda)) * (m * l * l);
    default:
      throw PreconditionError("no named variance for this semigroup");
  }
}

MomentCheck monte_carlo_variance_check(double lambda, double c, std::size_t samples, std::uint64_t seed) {
  if (!(c >= 0 && c < 1)) throw PreconditionError("moment check needs 0 <= c < 1");
  Semigroup s = Semigroup::poisson();
  HElement h{lambda, {c}};
  std::vector<double> cdf;
  double acc = 0;
  for (unsigned k = 0; acc < 1 - 1e-15 && k < 100000; ++k) {
    acc += discrete_mass(s, h, {k});
    cdf.push_back(acc);
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, acc);
  double sum = 0, sum2 = 0;
  std::vector<double> draws(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    double u = unif(rng);
    double x = static_cast<double>(std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
    draws[i] = x;
    sum += x;
  }
  double mean = sum / samples;
  double m4 = 0;
  for (double x : draws) {
    double d = x - mean;
    sum2 += d * d;
    m4 += d * d * d * d;
  }
  double var = sum2 / (samples - 1);
  m4 /= samples;
  double predicted = mean * (1 + c * mean / lambda) * (1 + c * mean / lambda);
  double slope = (1 + c * mean / lambda) * (1 + 3 * c * mean / lambda);
  double se_var = std::sqrt(std::max(m4 - var * var, 0.0) / samples);
  double se_pred = std::abs(slope) * std::sqrt(var / samples);
  double se = std::sqrt(se_var * se_var + se_pred * se_pred);
  return {mean, var, predicted, se, std::abs(var - predicted) <= 5 * se};
}

}  // namespace nefgl
