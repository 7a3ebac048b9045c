#include "nefgl/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "nefgl/error.hpp"

namespace nefgl {

ExponentVector ExponentVector::unit(std::size_t n, std::size_t i) {
  ExponentVector e(n);
  e[i] = 1;
  return e;
}

unsigned ExponentVector::total_degree() const {
  return std::accumulate(e_.begin(), e_.end(), 0u);
}

bool ExponentVector::divides(const ExponentVector& other) const {
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

ExponentVector operator-(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b) {
  if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
  return a.e_ <=> b.e_;
}

std::vector<ExponentVector> monomials_of_degree(std::size_t n, unsigned d) {
  std::vector<ExponentVector> out;
  if (n == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  ExponentVector e(n);
  // Enumerate compositions of d into n parts in ascending lex order.
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (unsigned v = 0; v <= left; ++v) {
      e[i] = v;
      self(self, i + 1, left - v);
    }
  };
  rec(rec, 0, d);
  return out;
}

MultiPoly::MultiPoly(std::size_t nvars, const Rational& c) : n_(nvars) {
  if (sgn(c) != 0) terms_.emplace(ExponentVector(nvars), c);
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw DimensionError("variable index out of range");
  MultiPoly p(nvars);
  p.terms_.emplace(ExponentVector::unit(nvars, i), Rational(1));
  return p;
}

MultiPoly MultiPoly::monomial(const ExponentVector& e, const Rational& c) {
  MultiPoly p(e.size());
  p.add_term(e, c);
  return p;
}

MultiPoly MultiPoly::linear(const RationalVector& coeffs, const Rational& constant) {
  MultiPoly p(coeffs.size(), constant);
  for (std::size_t i = 0; i < coeffs.size(); ++i) p.add_term(ExponentVector::unit(coeffs.size(), i), coeffs[i]);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.total_degree() == 0);
}

int MultiPoly::degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.total_degree());
}

int MultiPoly::low_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.total_degree());
}

Rational MultiPoly::coefficient(const ExponentVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::constant_term() const { return coefficient(ExponentVector(n_)); }

MultiPoly MultiPoly::homogeneous_part(unsigned d) const {
  MultiPoly p(n_);
  for (const auto& [e, c] : terms_)
    if (e.total_degree() == d) p.terms_.emplace_hint(p.terms_.end(), e, c);
  return p;
}

const std::pair<const ExponentVector, Rational>& MultiPoly::leading_term() const {
  if (terms_.empty()) throw PreconditionError("leading term of zero polynomial");
  return *terms_.rbegin();
}

void MultiPoly::add_term(const ExponentVector& e, const Rational& c) {
  if (e.size() != n_) throw DimensionError("exponent length does not match variable count");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

static void check_same(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars() != b.nvars()) throw DimensionError("polynomials have different variable counts");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_same(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_same(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

MultiPoly operator-(const MultiPoly& a) {
  MultiPoly r = a;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  check_same(a, b);
  MultiPoly r(a.n_);
  Rational t;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      t = ca * cb;
      r.add_term(ea + eb, t);
    }
  return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return a.n_ == b.n_ && a.terms_ == b.terms_;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result(n_, Rational(1));
  MultiPoly base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::derivative(std::size_t i) const {
  if (i >= n_) throw DimensionError("derivative variable out of range");
  MultiPoly r(n_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    ExponentVector f = e;
    --f[i];
    r.add_term(f, c * e[i]);
  }
  return r;
}

Rational MultiPoly::eval(const RationalVector& point) const {
  if (point.size() != n_) throw DimensionError("evaluation point has wrong dimension");
  Rational sum = 0;
  mpq_class term, power;
  for (const auto& [e, c] : terms_) {
    term = c;
    for (std::size_t i = 0; i < n_; ++i) {
      if (e[i] == 0) continue;
      mpz_pow_ui(power.get_num_mpz_t(), point[i].get_num_mpz_t(), e[i]);
      mpz_pow_ui(power.get_den_mpz_t(), point[i].get_den_mpz_t(), e[i]);
      term *= power;
    }
    sum += term;
  }
  return sum;
}

double MultiPoly::eval(const std::vector<double>& point) const {
  if (point.size() != n_) throw DimensionError("evaluation point has wrong dimension");
  double sum = 0;
  for (const auto& [e, c] : terms_) {
    double term = c.get_d();
    for (std::size_t i = 0; i < n_; ++i)
      for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
    sum += term;
  }
  return sum;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
  if (images.size() != n_) throw DimensionError("substitution needs one image per variable");
  std::size_t target = images.empty() ? 0 : images[0].nvars();
  for (const auto& im : images)
    if (im.nvars() != target) throw DimensionError("substitution images disagree on variable count");
  std::vector<std::vector<MultiPoly>> powers(n_);
  for (std::size_t i = 0; i < n_; ++i) powers[i].emplace_back(target, Rational(1));
  MultiPoly r(target);
  for (const auto& [e, c] : terms_) {
    MultiPoly t(target, c);
    for (std::size_t i = 0; i < n_; ++i) {
      while (powers[i].size() <= e[i]) powers[i].push_back(powers[i].back() * images[i]);
      if (e[i]) t = t * powers[i][e[i]];
    }
    r += t;
  }
  return r;
}

std::string MultiPoly::to_string(char var) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << '-';
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool is_const = e.total_degree() == 0;
    bool wrote = false;
    if (is_const || mag != 1) {
      out << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) out << '*';
      out << var << (i + 1);
      if (e[i] > 1) out << '^' << e[i];
      wrote = true;
    }
  }
  return out.str();
}

Rational poly_eval(const MultiPoly& p, const RationalVector& point) { return p.eval(point); }

std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& q) {
  check_same(p, q);
  if (q.is_zero()) throw PreconditionError("division by the zero polynomial");
  const auto& [lq_e, lq_c] = q.leading_term();
  MultiPoly rem = p;
  MultiPoly quot(p.nvars());
  while (!rem.is_zero()) {
    const auto& [lr_e, lr_c] = rem.leading_term();
    if (!lq_e.divides(lr_e)) return std::nullopt;
    MultiPoly t = MultiPoly::monomial(lr_e - lq_e, lr_c / lq_c);
    quot += t;
    rem -= t * q;
  }
  return quot;
}

}  // namespace nefgl
