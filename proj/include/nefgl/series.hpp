#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "nefgl/multipoly.hpp"

namespace nefgl {

// Monomials in n variables of total degree <= D, stored in ascending
// graded-lex order. The layout for a smaller D is a prefix of the layout for
// a larger one, so truncation is a resize.
class SeriesLayout {
 public:
  static std::shared_ptr<const SeriesLayout> get(std::size_t n, int max_degree);

  std::size_t nvars() const { return n_; }
  int max_degree() const { return max_degree_; }
  std::size_t size() const { return degree_.size(); }
  std::size_t count_up_to(int d) const;
  ExponentVector exponent(std::size_t idx) const;
  int degree(std::size_t idx) const { return degree_[idx]; }
  const unsigned char* raw(std::size_t idx) const { return &flat_[idx * n_]; }
  std::size_t index(const ExponentVector& e) const;
  std::size_t index_of_sum(std::size_t a, std::size_t b) const;

  SeriesLayout(std::size_t n, int max_degree);

 private:
  std::size_t rank(const unsigned* e, unsigned total) const;

  std::size_t n_;
  int max_degree_;
  std::vector<unsigned char> flat_;
  std::vector<int> degree_;
  std::vector<std::size_t> offset_;
  std::vector<std::vector<std::size_t>> binom_;
};

// Truncated power series: coefficients of z^k for |k| <= D. Binary
// operations truncate to the smaller D.
class TruncSeries {
 public:
  TruncSeries() = default;
  TruncSeries(std::size_t n, int max_degree);

  static TruncSeries constant(std::size_t n, int max_degree, const Rational& c);
  static TruncSeries variable(std::size_t n, int max_degree, std::size_t i);
  static TruncSeries from_poly(const MultiPoly& p, int max_degree);

  std::size_t nvars() const { return layout_->nvars(); }
  int max_degree() const { return layout_->max_degree(); }
  const SeriesLayout& layout() const { return *layout_; }
  std::size_t size() const { return coeffs_.size(); }
  const Rational& operator[](std::size_t idx) const { return coeffs_[idx]; }
  Rational& operator[](std::size_t idx) { return coeffs_[idx]; }
  Rational coefficient(const ExponentVector& e) const;
  void set_coefficient(const ExponentVector& e, const Rational& c);
  const Rational& constant_term() const { return coeffs_[0]; }
  bool is_zero() const;
  int low_degree() const;

  TruncSeries truncate(int max_degree) const;
  MultiPoly to_poly() const;

  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);
  TruncSeries& operator*=(const Rational& s);
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator-(TruncSeries a) { return a *= Rational(-1); }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(const Rational& s, TruncSeries a) { return a *= s; }
  friend bool operator==(const TruncSeries& a, const TruncSeries& b);

  // Coefficient of z^e in a*b without forming the product.
  static Rational product_coefficient(const TruncSeries& a, const TruncSeries& b,
                                      const ExponentVector& e);

  TruncSeries pow(unsigned k) const;
  // Valid through D-1.
  TruncSeries derivative(std::size_t i) const;
  // z_i * s, valid through D+1.
  TruncSeries shift(std::size_t i) const;
  // Antiderivative in z_i with no constant, valid through D+1.
  TruncSeries integrate(std::size_t i) const;

 private:
  std::shared_ptr<const SeriesLayout> layout_;
  std::vector<Rational> coeffs_;
};

using SeriesVector = std::vector<TruncSeries>;
using SeriesMatrix = std::vector<std::vector<TruncSeries>>;

TruncSeries series_exp(const TruncSeries& s);
TruncSeries series_log1p(const TruncSeries& s);
// 1/s for s with nonzero constant term.
TruncSeries series_inverse(const TruncSeries& s);
// outer(inner_1, ..., inner_n); every inner series must have zero constant term.
TruncSeries series_compose(const TruncSeries& outer, const SeriesVector& inner);
TruncSeries series_det(const SeriesMatrix& m);
// Unique x with q*x == p through degree D + low_degree(q). Throws
// InconsistentError when no such x exists.
TruncSeries series_solve_vanishing_div(const MultiPoly& q, const MultiPoly& p, int max_degree);

}  // namespace nefgl
