#include "toeplitz/literal.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "toeplitz/errors.hpp"

namespace toeplitz {

namespace {

class Cursor {
 public:
  Cursor(std::string_view text, std::size_t base) : text_(text), base_(base) {}

  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  char take() { return text_[pos_++]; }
  bool accept(char c) {
    if (peek() != c || done()) return false;
    ++pos_;
    return true;
  }
  void skip_space() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void error(const std::string& expected) const { throw ParseError(base_ + pos_, expected); }
  std::size_t pos() const { return pos_; }

  std::string digits() {
    std::string out;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) out.push_back(take());
    return out;
  }

 private:
  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

// Unsigned rational magnitude INT [ "/" POSINT ], or nullopt if no digits.
std::optional<mpq_class> magnitude(Cursor& c) {
  const std::string num = c.digits();
  if (num.empty()) return std::nullopt;
  mpq_class out{mpz_class(num)};
  if (c.accept('/')) {
    const std::string den = c.digits();
    if (den.empty()) c.error("positive integer denominator");
    const mpz_class d(den);
    if (d == 0) c.error("nonzero denominator");
    out /= d;
  }
  out.canonicalize();
  return out;
}

GaussianRational complex_at(std::string_view text, std::size_t base) {
  Cursor c(text, base);
  if (c.done()) c.error("complex literal");
  mpq_class re = 0;
  mpq_class im = 0;

  if (c.accept('+')) {
    // "+[RAT]i": imaginary part with no real part
    const auto mag = magnitude(c);
    if (!c.accept('i')) c.error("'i'");
    if (!c.done()) c.error("end of literal");
    return {0, mag ? *mag : mpq_class(1)};
  }
  const bool neg = c.accept('-');
  const auto first = magnitude(c);
  if (c.accept('i')) {
    im = first ? *first : mpq_class(1);
    if (neg) im = -im;
  } else if (c.done()) {
    if (!first) c.error("digits or 'i'");
    re = neg ? mpq_class(-*first) : *first;
  } else {
    if (!first) c.error("digits or 'i'");
    re = neg ? mpq_class(-*first) : *first;
    bool im_neg = false;
    if (c.accept('-')) {
      im_neg = true;
    } else if (!c.accept('+')) {
      c.error("'+', '-' or end of literal");
    }
    const auto second = magnitude(c);
    if (!c.accept('i')) c.error("'i'");
    im = second ? *second : mpq_class(1);
    if (im_neg) im = -im;
  }
  if (!c.done()) c.error("end of literal");
  return {re, im};
}

}  // namespace

GaussianRational parse_complex_literal(std::string_view text) { return complex_at(text, 0); }

Poly parse_poly_literal(std::string_view text) {
  Cursor c(text, 0);
  c.skip_space();
  if (!c.accept('[')) c.error("'['");
  std::vector<GaussianRational> coeffs;
  c.skip_space();
  if (c.accept(']')) {
    c.skip_space();
    if (!c.done()) c.error("end of input");
    return {};
  }
  while (true) {
    c.skip_space();
    const bool quoted = c.accept('"');
    const std::size_t start = c.pos();
    while (!c.done()) {
      const char ch = c.peek();
      if (quoted ? ch == '"' : (ch == ',' || ch == ']' || std::isspace(static_cast<unsigned char>(ch)))) break;
      c.take();
    }
    const std::size_t end = c.pos();
    if (quoted && !c.accept('"')) c.error("closing '\"'");
    if (end == start) c.error("complex literal");
    coeffs.push_back(complex_at(text.substr(start, end - start), start));
    c.skip_space();
    if (c.accept(',')) continue;
    if (c.accept(']')) break;
    c.error("',' or ']'");
  }
  c.skip_space();
  if (!c.done()) c.error("end of input");
  return Poly(std::move(coeffs));
}

std::string emit_poly_literal(const Poly& p) {
  std::string out = "[";
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k) out += ", ";
    out += '"' + p[k].to_string() + '"';
  }
  return out + "]";
}

}  // namespace toeplitz
