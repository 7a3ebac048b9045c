#pragma once

#include <cstdint>
#include <functional>
#include <random>

#include "nefgl/group.hpp"
#include "nefgl/multipoly.hpp"

namespace nefgl {

// Seeded generator for exact test cases with small rational entries.
class CaseGenerator {
 public:
  explicit CaseGenerator(std::uint64_t seed) : rng_(seed) {}

  int uniform_int(int lo, int hi);
  double uniform(double lo, double hi);
  // p/q with |p| <= max_num, 1 <= q <= max_den.
  Rational small_rational(int max_num = 3, int max_den = 3);
  Rational nonzero_rational(int max_num = 3, int max_den = 3);
  RationalVector vector(std::size_t n, int max_num = 3, int max_den = 3);
  RationalVector nonzero_vector(std::size_t n);
  GroupElement group_element(std::size_t n);
  // Random polynomial of total degree <= d in n variables.
  MultiPoly polynomial(std::size_t n, unsigned d, int max_num = 3, int max_den = 2);
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// Repeatedly halves entries while `fails` stays true; returns the smallest
// failing element found.
GroupElement shrink_group(const GroupElement& g, const std::function<bool(const GroupElement&)>& fails);

}  // namespace nefgl
