#include "nefgl/catalog.hpp"

#include "nefgl/error.hpp"

namespace nefgl {

std::string to_string(const CasalisTag& t) {
  switch (t.type) {
    case CasalisType::I: return "I_" + std::to_string(t.k);
    case CasalisType::II: return "II";
    case CasalisType::III: return "III";
    case CasalisType::IV: return "IV_" + std::to_string(t.k);
    case CasalisType::V: return "V";
  }
  return "?";
}

CasalisTag parse_casalis_tag(const std::string& family, std::size_t k) {
  std::string base = family;
  auto us = family.find('_');
  if (us != std::string::npos) {
    base = family.substr(0, us);
    try {
      k = std::stoul(family.substr(us + 1));
    } catch (const std::exception&) {
      throw PreconditionError("bad family index in '" + family + "'");
    }
  }
  if (base == "I") return {CasalisType::I, k};
  if (base == "II") return {CasalisType::II, 0};
  if (base == "III") return {CasalisType::III, 0};
  if (base == "IV") return {CasalisType::IV, k};
  if (base == "V") return {CasalisType::V, 0};
  throw PreconditionError("unknown family '" + family + "'");
}

namespace {

std::string orthant(std::size_t k, std::size_t n) {
  if (k == 0) return "R^" + std::to_string(n);
  std::string s = "(0,inf)^" + std::to_string(k);
  if (k < n) s += " x R^" + std::to_string(n - k);
  return s;
}

}  // namespace

VarianceSpec casalis_representative(const CasalisTag& tag, std::size_t n) {
  if (n == 0) throw DimensionError("dimension must be positive");
  auto m = [n](std::size_t i) { return MultiPoly::variable(n, i); };
  MultiPoly one(n, Rational(1));
  std::vector<MultiPoly> diag(n, MultiPoly(n));
  switch (tag.type) {
    case CasalisType::I: {
      if (tag.k > n) throw PreconditionError("type I needs 0 <= k <= n");
      for (std::size_t i = 0; i < n; ++i) diag[i] = i < tag.k ? m(i) : one;
      return VarianceSpec(PolyMatrix::diagonal(diag), orthant(tag.k, n));
    }
    case CasalisType::II:
      for (std::size_t i = 0; i < n; ++i) diag[i] = m(i);
      return VarianceSpec(PolyMatrix::diagonal(diag) - PolyMatrix::outer_mm(n),
                          "interior of conv(0, e_1, ..., e_" + std::to_string(n) + ")");
    case CasalisType::III:
      for (std::size_t i = 0; i < n; ++i) diag[i] = m(i);
      return VarianceSpec(PolyMatrix::outer_mm(n) + PolyMatrix::diagonal(diag), orthant(n, n));
    case CasalisType::IV: {
      if (tag.k < 1 || tag.k > n) throw PreconditionError("type IV needs 1 <= k <= n");
      for (std::size_t i = 1; i < n; ++i) diag[i] = i < tag.k ? m(i) : m(0);
      return VarianceSpec(PolyMatrix::outer_mm(n) + PolyMatrix::diagonal(diag), orthant(tag.k, n));
    }
    case CasalisType::V: {
      MultiPoly last = one;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        diag[i] = m(i);
        last += m(i);
      }
      diag[n - 1] = last;
      return VarianceSpec(PolyMatrix::outer_mm(n) + PolyMatrix::diagonal(diag),
                          n == 1 ? std::string("R") : orthant(n - 1, n - 1) + " x R");
    }
  }
  throw PreconditionError("unknown family");
}

std::vector<std::pair<CasalisTag, VarianceSpec>> casalis_catalog(std::size_t n) {
  std::vector<std::pair<CasalisTag, VarianceSpec>> out;
  std::vector<CasalisTag> tags;
  for (std::size_t k = 0; k <= n; ++k) tags.push_back({CasalisType::I, k});
  tags.push_back({CasalisType::II, 0});
  tags.push_back({CasalisType::III, 0});
  for (std::size_t k = 1; k <= n; ++k) tags.push_back({CasalisType::IV, k});
  tags.push_back({CasalisType::V, 0});
  for (const auto& t : tags) out.emplace_back(t, casalis_representative(t, n));
  return out;
}

std::vector<MorrisFamily> morris_representatives() {
  MultiPoly m = MultiPoly::variable(1, 0);
  MultiPoly one(1, Rational(1));
  return {
      {"Normal", one, "R"},
      {"Poisson", m, "(0,inf)"},
      {"Gamma", m * m, "(0,inf)"},
      {"Binomial", m - m * m, "(0,1)"},
      {"NegBinomial", m + m * m, "(0,inf)"},
      {"Hyperbolic", m * m + one, "R"},
  };
}

std::string to_string(CubicOrbit o) {
  switch (o) {
    case CubicOrbit::X3: return "X^3";
    case CubicOrbit::X2: return "X^2";
    case CubicOrbit::XXp1: return "X(X+1)";
    case CubicOrbit::X2p1: return "X^2+1";
  }
  return "?";
}

CubicOrbit classify_cubic_orbit_n1(const MultiPoly& v) {
  if (v.nvars() != 1) throw DimensionError("cubic classification is for n = 1");
  if (v.is_zero()) throw PreconditionError("zero variance");
  if (v.degree() > 3) throw PreconditionError("variance has degree above 3");
  // Binary cubic a3 X^3 + a2 X^2 Y + a1 X Y^2 + a0 Y^3.
  Rational a[4];
  for (unsigned k = 0; k < 4; ++k) a[k] = v.coefficient(ExponentVector{k});
  const Rational &a0 = a[0], &a1 = a[1], &a2 = a[2], &a3 = a[3];
  Rational disc = a2 * a2 * a1 * a1 - 4 * a3 * a1 * a1 * a1 - 4 * a2 * a2 * a2 * a0 - 27 * a3 * a3 * a0 * a0 +
                  18 * a3 * a2 * a1 * a0;
  if (sgn(disc) > 0) return CubicOrbit::XXp1;
  if (sgn(disc) < 0) return CubicOrbit::X2p1;
  // Repeated root; it is a triple root exactly when the Hessian covariant
  // vanishes.
  bool hessian_zero = sgn(a2 * a2 - 3 * a3 * a1) == 0 && sgn(a2 * a1 - 9 * a3 * a0) == 0 &&
                      sgn(a1 * a1 - 3 * a2 * a0) == 0;
  return hessian_zero ? CubicOrbit::X3 : CubicOrbit::X2;
}

Fingerprint morris_fingerprint(const MultiPoly& v) {
  if (v.nvars() != 1) throw DimensionError("fingerprint is for n = 1");
  if (v.is_zero() || v.degree() > 2) throw PreconditionError("fingerprint needs a nonzero variance of degree <= 2");
  Rational a0 = v.coefficient(ExponentVector{0u});
  Rational a1 = v.coefficient(ExponentVector{1u});
  Rational a2 = v.coefficient(ExponentVector{2u});
  Fingerprint f{v.degree(), {}, 0, sgn(a2)};
  int disc = sgn(a1 * a1 - 4 * a2 * a0);
  if (disc > 0) f.real_root_multiplicities = {1, 1};
  else if (disc == 0) f.real_root_multiplicities = {2};
  else f.complex_pairs = 1;
  return f;
}

Witness witness_II_to_III(std::size_t n) {
  GroupElement g = GroupElement::g_c(RationalVector(n, Rational(1)));
  PolyMatrix source = casalis_representative({CasalisType::II, 0}, n).V;
  PolyMatrix expected = casalis_representative({CasalisType::III, 0}, n).V;
  auto lowered = lower_to_polymatrix(transform_variance(g, source));
  PolyMatrix actual = lowered ? *lowered : PolyMatrix(n, n);
  return {g, source, expected, actual, lowered && *lowered == expected};
}

ChainWitness witness_Ik_chain(std::size_t n, std::size_t k, const Rational& c1) {
  if (k < 1 || k > n) throw PreconditionError("chain needs 1 <= k <= n");
  if (sgn(c1) >= 0) throw PreconditionError("chain needs c1 < 0");
  RationalVector c(n), b(n);
  c[0] = c1;
  b[0] = -1 / c1;
  GroupElement gbc = GroupElement::g_bc(b, c);
  GroupElement g1 = GroupElement::jorgensen(n, abs(c1));
  RationalVector e1(n);
  e1[0] = 1;
  GroupElement g2 = GroupElement::affine(RatMatrix::identity(n), e1);

  std::vector<PolyMatrix> stages;
  PolyMatrix cur = casalis_representative({CasalisType::I, k}, n).V;
  for (const GroupElement* g : {&gbc, &g1, &g2}) {
    auto lowered = lower_to_polymatrix(transform_variance(*g, cur));
    if (!lowered) throw Error("chain stage did not lower to a polynomial matrix");
    cur = *lowered;
    stages.push_back(cur);
  }
  std::vector<MultiPoly> diag(n, MultiPoly(n));
  for (std::size_t i = 1; i < n; ++i)
    diag[i] = i < k ? MultiPoly::variable(n, i) : c1 * MultiPoly::variable(n, 0);
  PolyMatrix expected = PolyMatrix::outer_mm(n) + PolyMatrix::diagonal(diag);
  return {gbc, g1, g2, stages, expected, cur == expected};
}

}  // namespace nefgl
