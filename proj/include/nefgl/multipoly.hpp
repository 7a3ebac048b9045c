#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nefgl/rational.hpp"

namespace nefgl {

// Exponent of a monomial. Ordered graded-lexicographically: total degree
// first, then lexicographically on the exponent tuple.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t n) : e_(n, 0) {}
  ExponentVector(std::initializer_list<unsigned> e) : e_(e) {}
  explicit ExponentVector(std::vector<unsigned> e) : e_(std::move(e)) {}

  static ExponentVector unit(std::size_t n, std::size_t i);

  std::size_t size() const { return e_.size(); }
  unsigned operator[](std::size_t i) const { return e_[i]; }
  unsigned& operator[](std::size_t i) { return e_[i]; }
  const std::vector<unsigned>& data() const { return e_; }
  unsigned total_degree() const;
  bool divides(const ExponentVector& other) const;

  friend ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);
  friend ExponentVector operator-(const ExponentVector& a, const ExponentVector& b);
  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b);

 private:
  std::vector<unsigned> e_;
};

// All exponent vectors in n variables with total degree exactly d, ascending.
std::vector<ExponentVector> monomials_of_degree(std::size_t n, unsigned d);

class MultiPoly {
 public:
  using Terms = std::map<ExponentVector, Rational>;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t nvars) : n_(nvars) {}
  MultiPoly(std::size_t nvars, const Rational& c);

  static MultiPoly variable(std::size_t nvars, std::size_t i);
  static MultiPoly monomial(const ExponentVector& e, const Rational& c);
  // Sum_i coeffs[i] * m_i + constant.
  static MultiPoly linear(const RationalVector& coeffs, const Rational& constant);

  std::size_t nvars() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Degree of the zero polynomial is -1.
  int degree() const;
  int low_degree() const;
  Rational coefficient(const ExponentVector& e) const;
  Rational constant_term() const;
  MultiPoly homogeneous_part(unsigned d) const;
  const std::pair<const ExponentVector, Rational>& leading_term() const;

  void add_term(const ExponentVector& e, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& s);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(const MultiPoly& a);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  MultiPoly pow(unsigned k) const;
  MultiPoly derivative(std::size_t i) const;
  Rational eval(const RationalVector& point) const;
  double eval(const std::vector<double>& point) const;
  // Substitute m_i -> images[i]; images share a common variable count.
  MultiPoly substitute(const std::vector<MultiPoly>& images) const;

  // Descending graded-lex order, e.g. "-m1^2 + 3/2*m1*m2 + 1".
  std::string to_string(char var = 'm') const;

 private:
  std::size_t n_ = 0;
  Terms terms_;
};

Rational poly_eval(const MultiPoly& p, const RationalVector& point);

// Exact quotient p/q, or nullopt when q does not divide p.
std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& q);

}  // namespace nefgl
