#include "nefgl/parse.hpp"

#include <cctype>
#include <string>

#include "nefgl/error.hpp"

namespace nefgl {

namespace {

struct PolyRing {
  using Value = MultiPoly;
  std::size_t n;
  Value constant(const Rational& c) const { return MultiPoly(n, c); }
  Value variable(std::size_t i) const { return MultiPoly::variable(n, i); }
  Value pow(const Value& v, unsigned k) const { return v.pow(k); }
  Value call(const std::string& name, const Value&, std::size_t pos) const {
    throw ParseError("unknown function '" + name + "'", pos);
  }
};

struct SeriesRing {
  using Value = TruncSeries;
  std::size_t n;
  int d;
  Value constant(const Rational& c) const { return TruncSeries::constant(n, d, c); }
  Value variable(std::size_t i) const { return TruncSeries::variable(n, d, i); }
  Value pow(const Value& v, unsigned k) const { return v.pow(k); }
  Value call(const std::string& name, const Value& arg, std::size_t pos) const {
    try {
      if (name == "exp") return series_exp(arg);
      if (name == "log1p") return series_log1p(arg);
    } catch (const PreconditionError& e) {
      throw ParseError(e.what(), pos);
    }
    throw ParseError("unknown function '" + name + "'", pos);
  }
};

template <class Ring>
class Parser {
 public:
  using Value = typename Ring::Value;

  Parser(std::string_view text, Ring ring) : text_(text), ring_(ring) {}

  Value parse() {
    Value v = expr();
    skip();
    if (pos_ != text_.size()) throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
    return v;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Value expr() {
    Value v = signed_term();
    for (;;) {
      if (accept('+')) v += signed_term();
      else if (accept('-')) v -= signed_term();
      else return v;
    }
  }

  Value signed_term() {
    if (accept('-')) return -signed_term();
    if (accept('+')) return signed_term();
    return term();
  }

  Value term() {
    Value v = factor();
    while (accept('*')) {
      if (accept('-')) v = v * -factor();
      else v = v * factor();
    }
    return v;
  }

  Value factor() {
    Value b = base();
    if (accept('^')) {
      skip();
      if (pos_ < text_.size() && text_[pos_] == '-') throw ParseError("negative exponent", pos_);
      b = ring_.pow(b, static_cast<unsigned>(integer("exponent")));
    }
    return b;
  }

  unsigned long integer(const char* what) {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError(std::string("expected ") + what, start);
    std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 9) throw ParseError(std::string(what) + " too large", start);
    return std::stoul(digits);
  }

  Value base() {
    skip();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string num(text_.substr(start, pos_ - start));
      std::size_t save = pos_;
      if (accept('/')) {
        skip();
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          std::size_t ds = pos_;
          unsigned long den = integer("denominator");
          if (den == 0) throw ParseError("zero denominator", ds);
          num += "/" + std::to_string(den);
        } else {
          throw ParseError("expected denominator", pos_);
        }
      } else {
        pos_ = save;
      }
      Rational q(num);
      q.canonicalize();
      return ring_.constant(q);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string word(text_.substr(start, pos_ - start));
      if ((word[0] == 'm' || word[0] == 'z') && word.size() > 1 &&
          word.find_first_not_of("0123456789", 1) == std::string::npos) {
        unsigned long idx = std::stoul(word.substr(1));
        if (idx == 0 || idx > ring_.n) throw ParseError("unknown variable '" + word + "'", start);
        return ring_.variable(idx - 1);
      }
      skip();
      if (pos_ < text_.size() && text_[pos_] == '(') {
        ++pos_;
        Value arg = expr();
        if (!accept(')')) throw ParseError("expected ')'", pos_);
        return ring_.call(word, arg, start);
      }
      throw ParseError("unknown variable '" + word + "'", start);
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
  }

  std::string_view text_;
  Ring ring_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly poly_parse(std::string_view text, std::size_t nvars) {
  return Parser<PolyRing>(text, PolyRing{nvars}).parse();
}

TruncSeries series_parse(std::string_view text, std::size_t nvars, int max_degree) {
  return Parser<SeriesRing>(text, SeriesRing{nvars, max_degree}).parse();
}

}  // namespace nefgl
