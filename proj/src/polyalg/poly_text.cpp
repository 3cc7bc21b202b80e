#include "pluri/poly_text.hpp"

#include <cctype>

#include "pluri/error.hpp"

namespace pluri {

std::string to_text(const HoloPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    if (!out.empty()) out += " + ";
    out += c.to_string();
    for (int v = 0; v < p.num_vars(); ++v)
      if (e[v] > 0) out += " z" + std::to_string(v + 1) + "^" + std::to_string(e[v]);
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view s, int nv) : s_(s), nv_(nv) {}

  HoloPoly run() {
    HoloPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::Parse, "polynomial text, offset " + std::to_string(pos_ + 1) + ": " + msg);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  bool at_factor_start() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 'z' || c == 'i' || c == '*';
  }

  HoloPoly expr() {
    HoloPoly acc(nv_);
    bool neg = false;
    if (accept('-')) neg = true;
    else accept('+');
    HoloPoly t = term();
    acc += neg ? -t : t;
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else break;
    }
    return acc;
  }

  HoloPoly term() {
    HoloPoly acc = power();
    while (at_factor_start()) {
      accept('*');
      acc *= power();
    }
    return acc;
  }

  HoloPoly power() {
    HoloPoly base = factor();
    if (accept('^')) {
      skip();
      const unsigned e = static_cast<unsigned>(integer().get_ui());
      base = base.pow(e);
    }
    return base;
  }

  mpz_class integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a digit");
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  // integer, p/q, or decimal
  mpq_class rational() {
    skip();
    const std::size_t start = pos_;
    mpz_class num = integer();
    if (pos_ < s_.size() && s_[pos_] == '.') {
      ++pos_;
      const std::size_t fs = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string digits(s_.substr(fs, pos_ - fs));
      if (digits.empty()) fail("expected digits after '.'");
      mpz_class den = 1;
      for (std::size_t k = 0; k < digits.size(); ++k) den *= 10;
      mpq_class q(num * den + mpz_class(digits), den);
      q.canonicalize();
      return q;
    }
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      mpz_class den = integer();
      if (den == 0) {
        pos_ = start;
        fail("zero denominator");
      }
      mpq_class q(num, den);
      q.canonicalize();
      return q;
    }
    return mpq_class(num);
  }

  HoloPoly factor() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpq_class q = rational();
      GaussianRational v(q);
      skip();
      if (pos_ < s_.size() && s_[pos_] == 'i' && !(pos_ + 1 < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_ + 1])))) {
        ++pos_;
        v = GaussianRational(0, q);
      }
      return HoloPoly::constant(nv_, v);
    }
    if (c == 'i') {
      ++pos_;
      return HoloPoly::constant(nv_, GaussianRational::imag_unit());
    }
    if (c == 'z') {
      ++pos_;
      const long idx = integer().get_si();
      if (idx < 1 || idx > nv_) fail("variable z" + std::to_string(idx) + " not declared");
      return HoloPoly::variable(nv_, static_cast<int>(idx - 1));
    }
    if (c == '(') {
      ++pos_;
      HoloPoly first = expr();
      if (accept(',')) {
        HoloPoly second = expr();
        if (!accept(')')) fail("expected ')'");
        if (!first.is_constant() || !second.is_constant() || !first.constant_term().is_real() ||
            !second.constant_term().is_real())
          fail("coefficient pair must hold two real rationals");
        return HoloPoly::constant(
            nv_, GaussianRational(first.constant_term().re(), second.constant_term().re()));
      }
      if (!accept(')')) fail("expected ')'");
      return first;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  int nv_;
  std::size_t pos_ = 0;
};

}  // namespace

HoloPoly parse_poly(std::string_view text, int num_vars) {
  std::size_t k = 0;
  while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
  if (text.substr(k) == "0") return HoloPoly(num_vars);
  return Parser(text, num_vars).run();
}

}  // namespace pluri
