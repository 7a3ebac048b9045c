#include "nefgl/series.hpp"

#include <map>
#include <mutex>

#include "nefgl/error.hpp"
#include "nefgl/linalg.hpp"

namespace nefgl {

namespace {

constexpr std::size_t kMaxVars = 16;

}  // namespace

SeriesLayout::SeriesLayout(std::size_t n, int max_degree) : n_(n), max_degree_(max_degree) {
  if (n == 0 || n > kMaxVars) throw DimensionError("series dimension must be in 1..16");
  if (max_degree < 0 || max_degree > 255) throw PreconditionError("truncation degree must be in 0..255");
  std::size_t top = static_cast<std::size_t>(max_degree) + n + 2;
  binom_.assign(top + 1, std::vector<std::size_t>(top + 1, 0));
  for (std::size_t a = 0; a <= top; ++a) {
    binom_[a][0] = 1;
    for (std::size_t b = 1; b <= a; ++b) binom_[a][b] = binom_[a - 1][b - 1] + binom_[a - 1][b];
  }
  offset_.resize(max_degree + 2);
  for (int t = 0; t <= max_degree + 1; ++t) offset_[t] = t == 0 ? 0 : binom_[t - 1 + n][n];
  for (int t = 0; t <= max_degree; ++t)
    for (const auto& e : monomials_of_degree(n, t)) {
      for (std::size_t i = 0; i < n; ++i) flat_.push_back(static_cast<unsigned char>(e[i]));
      degree_.push_back(t);
    }
}

std::shared_ptr<const SeriesLayout> SeriesLayout::get(std::size_t n, int max_degree) {
  static std::mutex mu;
  static std::map<std::pair<std::size_t, int>, std::shared_ptr<const SeriesLayout>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{n, max_degree}];
  if (!slot) slot = std::make_shared<SeriesLayout>(n, max_degree);
  return slot;
}

std::size_t SeriesLayout::count_up_to(int d) const {
  if (d < 0) return 0;
  return offset_[std::min(d, max_degree_) + 1];
}

ExponentVector SeriesLayout::exponent(std::size_t idx) const {
  ExponentVector e(n_);
  for (std::size_t i = 0; i < n_; ++i) e[i] = flat_[idx * n_ + i];
  return e;
}

std::size_t SeriesLayout::rank(const unsigned* e, unsigned total) const {
  // Compositions below e in lex order, summed position by position with the
  // hockey-stick identity.
  std::size_t r = 0;
  unsigned rem = total;
  for (std::size_t i = 0; i + 1 < n_; ++i) {
    std::size_t m = n_ - i - 1;
    r += binom_[rem + m][m] - binom_[rem - e[i] + m][m];
    rem -= e[i];
  }
  return r;
}

std::size_t SeriesLayout::index(const ExponentVector& e) const {
  if (e.size() != n_) throw DimensionError("exponent length does not match series dimension");
  unsigned t = e.total_degree();
  if (static_cast<int>(t) > max_degree_) throw PreconditionError("monomial beyond truncation degree");
  return offset_[t] + rank(e.data().data(), t);
}

std::size_t SeriesLayout::index_of_sum(std::size_t a, std::size_t b) const {
  unsigned sum[kMaxVars];
  const unsigned char* ea = raw(a);
  const unsigned char* eb = raw(b);
  for (std::size_t i = 0; i < n_; ++i) sum[i] = ea[i] + eb[i];
  unsigned t = degree_[a] + degree_[b];
  return offset_[t] + rank(sum, t);
}

TruncSeries::TruncSeries(std::size_t n, int max_degree)
    : layout_(SeriesLayout::get(n, max_degree)), coeffs_(layout_->size()) {}

TruncSeries TruncSeries::constant(std::size_t n, int max_degree, const Rational& c) {
  TruncSeries s(n, max_degree);
  s.coeffs_[0] = c;
  return s;
}

TruncSeries TruncSeries::variable(std::size_t n, int max_degree, std::size_t i) {
  TruncSeries s(n, max_degree);
  if (max_degree >= 1) s.set_coefficient(ExponentVector::unit(n, i), 1);
  return s;
}

TruncSeries TruncSeries::from_poly(const MultiPoly& p, int max_degree) {
  TruncSeries s(p.nvars(), max_degree);
  for (const auto& [e, c] : p.terms())
    if (static_cast<int>(e.total_degree()) <= max_degree) s.coeffs_[s.layout_->index(e)] = c;
  return s;
}

Rational TruncSeries::coefficient(const ExponentVector& e) const {
  if (static_cast<int>(e.total_degree()) > max_degree())
    throw PreconditionError("coefficient requested beyond truncation degree");
  return coeffs_[layout_->index(e)];
}

void TruncSeries::set_coefficient(const ExponentVector& e, const Rational& c) {
  coeffs_[layout_->index(e)] = c;
}

bool TruncSeries::is_zero() const {
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

int TruncSeries::low_degree() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return layout_->degree(i);
  return -1;
}

TruncSeries TruncSeries::truncate(int max_degree) const {
  if (max_degree > this->max_degree()) throw PreconditionError("cannot raise truncation degree");
  TruncSeries s(nvars(), max_degree);
  for (std::size_t i = 0; i < s.coeffs_.size(); ++i) s.coeffs_[i] = coeffs_[i];
  return s;
}

MultiPoly TruncSeries::to_poly() const {
  MultiPoly p(nvars());
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) p.add_term(layout_->exponent(i), coeffs_[i]);
  return p;
}

static void check_dims(const TruncSeries& a, const TruncSeries& b) {
  if (a.nvars() != b.nvars()) throw DimensionError("series have different variable counts");
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  check_dims(*this, o);
  if (o.max_degree() < max_degree()) *this = truncate(o.max_degree());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
  check_dims(*this, o);
  if (o.max_degree() < max_degree()) *this = truncate(o.max_degree());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

TruncSeries& TruncSeries::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  check_dims(a, b);
  int d = std::min(a.max_degree(), b.max_degree());
  TruncSeries r(a.nvars(), d);
  const SeriesLayout& lay = *r.layout_;
  std::vector<std::size_t> nb;
  for (std::size_t j = 0; j < r.coeffs_.size(); ++j)
    if (sgn(b.coeffs_[j]) != 0) nb.push_back(j);
  mpq_class t;
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    int room = d - lay.degree(i);
    for (std::size_t j : nb) {
      if (lay.degree(j) > room) break;
      mpq_mul(t.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
      r.coeffs_[lay.index_of_sum(i, j)] += t;
    }
  }
  return r;
}

bool operator==(const TruncSeries& a, const TruncSeries& b) {
  return a.nvars() == b.nvars() && a.max_degree() == b.max_degree() && a.coeffs_ == b.coeffs_;
}

Rational TruncSeries::product_coefficient(const TruncSeries& a, const TruncSeries& b,
                                          const ExponentVector& e) {
  check_dims(a, b);
  Rational sum = 0;
  const SeriesLayout& lay = *a.layout_;
  std::size_t n = a.nvars();
  std::size_t limit = a.layout_->count_up_to(static_cast<int>(e.total_degree()));
  for (std::size_t i = 0; i < limit; ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    const unsigned char* ei = lay.raw(i);
    ExponentVector rest(n);
    bool fits = true;
    for (std::size_t k = 0; k < n && fits; ++k) {
      if (ei[k] > e[k]) fits = false;
      else rest[k] = e[k] - ei[k];
    }
    if (fits) sum += a.coeffs_[i] * b.coefficient(rest);
  }
  return sum;
}

TruncSeries TruncSeries::pow(unsigned k) const {
  TruncSeries result = constant(nvars(), max_degree(), 1);
  TruncSeries base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

TruncSeries TruncSeries::derivative(std::size_t i) const {
  if (max_degree() < 1) throw PreconditionError("derivative of a degree-0 truncation carries no information");
  TruncSeries r(nvars(), max_degree() - 1);
  for (std::size_t idx = 0; idx < coeffs_.size(); ++idx) {
    if (sgn(coeffs_[idx]) == 0) continue;
    ExponentVector e = layout_->exponent(idx);
    if (e[i] == 0) continue;
    Rational c = coeffs_[idx] * e[i];
    --e[i];
    r.set_coefficient(e, c);
  }
  return r;
}

TruncSeries TruncSeries::shift(std::size_t i) const {
  TruncSeries r(nvars(), max_degree() + 1);
  for (std::size_t idx = 0; idx < coeffs_.size(); ++idx) {
    if (sgn(coeffs_[idx]) == 0) continue;
    ExponentVector e = layout_->exponent(idx);
    ++e[i];
    r.set_coefficient(e, coeffs_[idx]);
  }
  return r;
}

TruncSeries TruncSeries::integrate(std::size_t i) const {
  TruncSeries r(nvars(), max_degree() + 1);
  for (std::size_t idx = 0; idx < coeffs_.size(); ++idx) {
    if (sgn(coeffs_[idx]) == 0) continue;
    ExponentVector e = layout_->exponent(idx);
    ++e[i];
    r.set_coefficient(e, coeffs_[idx] / e[i]);
  }
  return r;
}

TruncSeries series_exp(const TruncSeries& s) {
  if (sgn(s.constant_term()) != 0) throw PreconditionError("exp requires a series without constant term");
  TruncSeries result = TruncSeries::constant(s.nvars(), s.max_degree(), 1);
  TruncSeries power = result;
  Rational fact = 1;
  for (int j = 1; j <= s.max_degree(); ++j) {
    power = power * s;
    fact *= j;
    result += (1 / fact) * power;
  }
  return result;
}

TruncSeries series_log1p(const TruncSeries& s) {
  if (sgn(s.constant_term()) != 0) throw PreconditionError("log1p requires a series without constant term");
  TruncSeries result(s.nvars(), s.max_degree());
  TruncSeries power = TruncSeries::constant(s.nvars(), s.max_degree(), 1);
  for (int j = 1; j <= s.max_degree(); ++j) {
    power = power * s;
    result += make_rational(j % 2 ? 1 : -1, j) * power;
  }
  return result;
}

TruncSeries series_inverse(const TruncSeries& s) {
  const Rational& c0 = s.constant_term();
  if (sgn(c0) == 0) throw PreconditionError("series inverse requires a nonzero constant term");
  // 1/s = (1/c0) * sum_j (-t)^j with t = s/c0 - 1.
  TruncSeries t = (1 / c0) * s;
  t[0] = 0;
  t *= Rational(-1);
  TruncSeries result = TruncSeries::constant(s.nvars(), s.max_degree(), 1);
  TruncSeries power = result;
  for (int j = 1; j <= s.max_degree(); ++j) {
    power = power * t;
    result += power;
  }
  return (1 / c0) * result;
}

TruncSeries series_compose(const TruncSeries& outer, const SeriesVector& inner) {
  std::size_t n = outer.nvars();
  if (inner.size() != n) throw DimensionError("composition needs one inner series per outer variable");
  if (inner.empty()) return outer;
  std::size_t target = inner[0].nvars();
  int d = outer.max_degree();
  for (const auto& s : inner) {
    if (s.nvars() != target) throw DimensionError("inner series disagree on variable count");
    if (sgn(s.constant_term()) != 0) throw PreconditionError("inner series must have zero constant term");
    d = std::min(d, s.max_degree());
  }
  SeriesVector in;
  for (const auto& s : inner) in.push_back(s.truncate(d));
  const SeriesLayout& lay = outer.layout();
  std::size_t count = lay.count_up_to(d);
  // Powers of the inner series indexed like the outer monomials; each is
  // built from its parent with one exponent lowered.
  std::vector<TruncSeries> powers(count);
  powers[0] = TruncSeries::constant(target, d, 1);
  TruncSeries result(target, d);
  if (sgn(outer[0]) != 0) result[0] = outer[0];
  std::vector<bool> needed(count, false);
  for (std::size_t idx = count; idx-- > 1;) {
    if (sgn(outer[idx]) != 0) needed[idx] = true;
    if (!needed[idx]) continue;
    ExponentVector e = lay.exponent(idx);
    std::size_t i = 0;
    while (e[i] == 0) ++i;
    --e[i];
    needed[lay.index(e)] = true;
  }
  for (std::size_t idx = 1; idx < count; ++idx) {
    if (!needed[idx]) continue;
    ExponentVector e = lay.exponent(idx);
    std::size_t i = 0;
    while (e[i] == 0) ++i;
    --e[i];
    powers[idx] = powers[lay.index(e)] * in[i];
    if (sgn(outer[idx]) != 0) result += outer[idx] * powers[idx];
  }
  return result;
}

TruncSeries series_det(const SeriesMatrix& m) {
  std::size_t n = m.size();
  if (n == 0) throw DimensionError("determinant of empty matrix");
  for (const auto& row : m)
    if (row.size() != n) throw DimensionError("determinant of non-square matrix");
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  TruncSeries det;
  bool first = true;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    SeriesMatrix minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<TruncSeries> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    TruncSeries t = m[0][j] * series_det(minor);
    if (j % 2) t = -t;
    if (first) det = t;
    else det += t;
    first = false;
  }
  if (first) {
    int d = m[0][0].max_degree();
    for (const auto& row : m)
      for (const auto& s : row) d = std::min(d, s.max_degree());
    return TruncSeries(m[0][0].nvars(), d);
  }
  return det;
}

namespace {

MultiPoly truncate_poly(const MultiPoly& p, int max_degree) {
  MultiPoly r(p.nvars());
  for (const auto& [e, c] : p.terms())
    if (static_cast<int>(e.total_degree()) <= max_degree) r.add_term(e, c);
  return r;
}

}  // namespace

TruncSeries series_solve_vanishing_div(const MultiPoly& q, const MultiPoly& p, int max_degree) {
  if (q.nvars() != p.nvars()) throw DimensionError("numerator and denominator differ in variable count");
  if (q.is_zero()) throw PreconditionError("division by the zero polynomial");
  std::size_t n = q.nvars();
  int e0 = q.low_degree();
  MultiPoly qlow = q.homogeneous_part(e0);
  int top = max_degree + e0;
  MultiPoly residual = truncate_poly(p, top);
  if (residual.low_degree() >= 0 && residual.low_degree() < e0)
    throw InconsistentError("numerator has terms below the order of the denominator");
  auto layout = SeriesLayout::get(n, top);
  TruncSeries x(n, max_degree);
  for (int d = 0; d <= max_degree; ++d) {
    auto unknowns = monomials_of_degree(n, d);
    std::size_t row0 = layout->count_up_to(d + e0 - 1);
    std::size_t rows = layout->count_up_to(d + e0) - row0;
    RatMatrix a(rows, unknowns.size());
    for (std::size_t j = 0; j < unknowns.size(); ++j)
      for (const auto& [e, c] : qlow.terms()) a(layout->index(e + unknowns[j]) - row0, j) = c;
    RationalVector rhs(rows);
    for (const auto& [e, c] : residual.terms())
      if (static_cast<int>(e.total_degree()) == d + e0) rhs[layout->index(e) - row0] = c;
    auto sol = solve(a, rhs);
    if (!sol) throw InconsistentError("division is inconsistent at degree " + std::to_string(d));
    MultiPoly xd(n);
    for (std::size_t j = 0; j < unknowns.size(); ++j) {
      xd.add_term(unknowns[j], (*sol)[j]);
      x.set_coefficient(unknowns[j], (*sol)[j]);
    }
    if (!xd.is_zero()) residual = truncate_poly(residual - q * xd, top);
  }
  return x;
}

}  // namespace nefgl
