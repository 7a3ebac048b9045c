#pragma once

#include <map>
#include <string>
#include <vector>

#include "nefgl/polymatrix.hpp"
#include "nefgl/series.hpp"

namespace nefgl {

// phi'(z) with V(m) phi'(m) = m, i.e. phi'_i = (adj(V) m)_i / det V, valid
// through max_degree. Throws NotLatticeTypeError unless phi'(0) = (1,...,1).
SeriesVector phi_prime_from_variance(const PolyMatrix& v, int max_degree);
// phi with grad phi = phi_prime and phi(0) = 0; throws InconsistentError if
// phi_prime is not a gradient.
TruncSeries integrate_phi(const SeriesVector& phi_prime);
// K_i = sum_k [z^k](1 - d phi/d z_i) / |k| z^k, valid one degree below phi.
SeriesVector solve_K(const TruncSeries& phi);

struct MeasureTable {
  std::size_t n = 0;
  int max_degree = 0;
  std::map<ExponentVector, Rational> mu;
  std::vector<std::string> warnings;
};

// mu_k = [z^k](e^phi G^k D(G)) with G = exp(K), for |k| <= max_degree.
MeasureTable recover_measure(const PolyMatrix& v, int max_degree);

}  // namespace nefgl
