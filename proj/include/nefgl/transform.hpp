#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nefgl/group.hpp"
#include "nefgl/polymatrix.hpp"

namespace nefgl {

struct VarianceSpec {
  std::size_t n = 0;
  PolyMatrix V;
  std::string domain;

  // Validates shape and symmetry.
  VarianceSpec(PolyMatrix v, std::string domain);
};

// T_g(V)(m) = (c^T m + d)^{-1} J^{-1} V(h_g(m)) J^{-T}, J the Jacobian of h_g,
// cancelled to lowest terms in powers of c^T m + d.
RationalMatrixFunction transform_variance(const GroupElement& g, const RationalMatrixFunction& v);
RationalMatrixFunction transform_variance(const GroupElement& g, const PolyMatrix& v);

// Exact lowering when the denominator divides every numerator.
std::optional<PolyMatrix> lower_to_polymatrix(const RationalMatrixFunction& r);

// (cm + d)^3 V((am + b)/(cm + d)) for a scalar V of degree <= 3.
MultiPoly transform_variance_cubic_n1(const GroupElement& g, const MultiPoly& v);

enum class ClosedFormPart { RankOne, Linear, Constant };

// Image under T_{g_c} of one summand of V = a m m^T + B(m) + C, without the
// scalar a. `payload` is unused for RankOne, holds B_1..B_n for Linear
// (B(m) = sum_i m_i B_i) and holds C alone for Constant.
PolyMatrix transform_closed_form_gc(const RationalVector& c, ClosedFormPart part,
                                    const std::vector<RatMatrix>& payload);

struct SymmetryWitness {
  std::size_t component;
  std::size_t a;
  std::size_t b;
  MultiPoly difference;
};

// Checks that V'(m)(V(m)x, y) is symmetric in (x, y); the first asymmetric
// basis pair is returned as a witness.
std::optional<SymmetryWitness> check_prop34_symmetry(const PolyMatrix& v);

// V = a m m^T + B(m) + C with B linear and C constant.
struct SimpleQuadratic {
  Rational a;
  PolyMatrix B;
  RatMatrix C;
};
std::optional<SimpleQuadratic> simple_quadratic_decomposition(const PolyMatrix& v);

// a c^T m m m^T + m c^T B(m) c m^T + c^T m m c^T C c m^T == 0. Throws
// PreconditionError if V is not simple quadratic.
bool check_cubic_condition(const PolyMatrix& v, const RationalVector& c);

}  // namespace nefgl
