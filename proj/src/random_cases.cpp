#include "nefgl/random_cases.hpp"

#include "nefgl/error.hpp"

namespace nefgl {

int CaseGenerator::uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

double CaseGenerator::uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

Rational CaseGenerator::small_rational(int max_num, int max_den) {
  return make_rational(uniform_int(-max_num, max_num), uniform_int(1, max_den));
}

Rational CaseGenerator::nonzero_rational(int max_num, int max_den) {
  for (;;) {
    Rational q = small_rational(max_num, max_den);
    if (sgn(q) != 0) return q;
  }
}

RationalVector CaseGenerator::vector(std::size_t n, int max_num, int max_den) {
  RationalVector v(n);
  for (auto& x : v) x = small_rational(max_num, max_den);
  return v;
}

RationalVector CaseGenerator::nonzero_vector(std::size_t n) {
  for (;;) {
    RationalVector v = vector(n);
    for (const auto& x : v)
      if (sgn(x) != 0) return v;
  }
}

GroupElement CaseGenerator::group_element(std::size_t n) {
  for (;;) {
    RatMatrix m(n + 1, n + 1);
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = 0; j <= n; ++j) m(i, j) = small_rational();
    if (sgn(determinant(m)) != 0) return GroupElement(m);
  }
}

MultiPoly CaseGenerator::polynomial(std::size_t n, unsigned d, int max_num, int max_den) {
  MultiPoly p(n);
  for (unsigned t = 0; t <= d; ++t)
    for (const auto& e : monomials_of_degree(n, t))
      if (uniform_int(0, 2) != 0) p.add_term(e, small_rational(max_num, max_den));
  return p;
}

GroupElement shrink_group(const GroupElement& g, const std::function<bool(const GroupElement&)>& fails) {
  GroupElement best = g;
  bool improved = true;
  while (improved) {
    improved = false;
    std::size_t size = best.n() + 1;
    for (std::size_t i = 0; i < size && !improved; ++i)
      for (std::size_t j = 0; j < size && !improved; ++j) {
        const Rational& x = best.matrix()(i, j);
        if (sgn(x) == 0) continue;
        // Halve the numerator toward zero, keeping the denominator.
        mpz_class num = x.get_num() / 2;
        RatMatrix m = best.matrix();
        m(i, j) = Rational(num, x.get_den());
        m(i, j).canonicalize();
        if (sgn(determinant(m)) == 0) continue;
        GroupElement cand(m);
        bool still = false;
        try {
          still = fails(cand);
        } catch (const Error&) {
          still = false;
        }
        if (still) {
          best = cand;
          improved = true;
        }
      }
  }
  return best;
}

}  // namespace nefgl
