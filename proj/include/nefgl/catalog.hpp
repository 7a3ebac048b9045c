#pragma once

#include <string>
#include <vector>

#include "nefgl/group.hpp"
#include "nefgl/transform.hpp"

namespace nefgl {

enum class CasalisType { I, II, III, IV, V };

struct CasalisTag {
  CasalisType type;
  std::size_t k = 0;  // used by I (0..n) and IV (1..n)
};

std::string to_string(const CasalisTag& t);
// Accepts "I", "II", "III", "IV", "V" with k, or the forms "I_2", "IV_1".
CasalisTag parse_casalis_tag(const std::string& family, std::size_t k);

VarianceSpec casalis_representative(const CasalisTag& tag, std::size_t n);
// All 2n + 4 simple quadratic representatives in dimension n.
std::vector<std::pair<CasalisTag, VarianceSpec>> casalis_catalog(std::size_t n);

struct MorrisFamily {
  std::string name;
  MultiPoly variance;
  std::string domain;
};
// Normal, Poisson, Gamma, Binomial, NegBinomial, Hyperbolic.
std::vector<MorrisFamily> morris_representatives();

enum class CubicOrbit { X3, X2, XXp1, X2p1 };

std::string to_string(CubicOrbit o);
// Root pattern of the binary cubic Y^3 V(X/Y) for a nonzero V of degree <= 3.
CubicOrbit classify_cubic_orbit_n1(const MultiPoly& v);

struct Fingerprint {
  int degree;
  std::vector<unsigned> real_root_multiplicities;
  unsigned complex_pairs;
  int leading_sign;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};
// Degree, root pattern of Y^2 V(X/Y) and sign of the m^2 coefficient for a
// scalar V of degree <= 2.
Fingerprint morris_fingerprint(const MultiPoly& v);

struct Witness {
  GroupElement g;
  PolyMatrix source;
  PolyMatrix expected;
  PolyMatrix actual;
  bool matches;
};

// g_c with c = (1, ..., 1) carries V_II onto V_III.
Witness witness_II_to_III(std::size_t n);

struct ChainWitness {
  GroupElement g_bc;
  GroupElement g1;
  GroupElement g2;
  std::vector<PolyMatrix> stages;
  PolyMatrix expected;
  bool matches;
};

// V_{I,k} -> m m^T + diag(0, m_2..m_k, c1 m1 I_{n-k}) through
// T_{g2} T_{g1} T_{g_bc} with c = (c1, 0, ..., 0), b = -e1 / c1.
ChainWitness witness_Ik_chain(std::size_t n, std::size_t k, const Rational& c1);

}  // namespace nefgl
