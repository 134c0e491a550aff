#pragma once

#include <cctype>
#include <cstdlib>
#include <string>
#include <string_view>

#include "asymptotica/nonarch/laurent.hpp"

namespace asymptotica::nonarch {

/// Text form `3 + 1*r^1 - 2*r^2`, increasing exponents, `r` standing for rho.
/// The constant term is written bare; zero renders as `0`.
template <typename Scalar>
std::string render(const LaurentSeries<Scalar>& a) {
  using Traits = ScalarTraits<Scalar>;
  if (a.isZero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : a.coefficients()) {
    const bool negative = Traits::sign(c) < 0;
    const Scalar magnitude = negative ? Scalar(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += Traits::render(magnitude);
    if (e != 0) out += "*r^" + std::to_string(e);
    first = false;
  }
  return out;
}

namespace detail {

/// Exact rational value of a decimal literal such as `12.5e-3`.
inline Rational parseDecimalExact(const std::string& s) {
  const auto epos = s.find_first_of("eE");
  const std::string mantissa = s.substr(0, epos);
  long exponent = epos == std::string::npos ? 0 : std::stol(s.substr(epos + 1));
  std::string digits;
  for (char ch : mantissa) {
    if (ch == '.') continue;
    digits += ch;
  }
  const auto dot = mantissa.find('.');
  if (dot != std::string::npos) exponent -= static_cast<long>(mantissa.size() - dot - 1);
  if (digits.empty()) digits = "0";
  mpz_class num(digits, 10), ten(10), scale;
  mpz_pow_ui(scale.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(std::labs(exponent)));
  Rational r = exponent >= 0 ? Rational(num * scale) : Rational(num, scale);
  r.canonicalize();
  return r;
}

template <typename Scalar>
Scalar parseCoefficient(std::string_view text) {
  const std::string s(text);
  if constexpr (ScalarTraits<Scalar>::exact) {
    if (s.find_first_of(".eE") != std::string::npos) return parseDecimalExact(s);
    Rational r(s, 10);
    r.canonicalize();
    return r;
  } else {
    const auto slash = s.find('/');
    if (slash != std::string::npos)
      return std::strtod(s.substr(0, slash).c_str(), nullptr) /
             std::strtod(s.substr(slash + 1).c_str(), nullptr);
    return std::strtod(s.c_str(), nullptr);
  }
}

}  // namespace detail

/// Inverse of `render`. Accepts the canonical sum-of-monomials form only; the
/// general expression grammar lives in the harness.
template <typename Scalar>
LaurentSeries<Scalar> parseLaurent(std::string_view text, int truncation = kDefaultTruncation) {
  typename LaurentSeries<Scalar>::Coefficients coefficients;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const char* what) { throw SyntaxError(what, pos); };
  skip();
  if (pos == text.size()) fail("empty Laurent literal");
  bool firstTerm = true;
  while (true) {
    skip();
    if (pos == text.size()) break;
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    } else if (!firstTerm) {
      fail("expected '+' or '-'");
    }
    const std::size_t start = pos;
    while (pos < text.size() &&
           (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.' ||
            text[pos] == '/' || text[pos] == 'e' || text[pos] == 'E' ||
            ((text[pos] == '-' || text[pos] == '+') && pos > start &&
             (text[pos - 1] == 'e' || text[pos - 1] == 'E'))))
      ++pos;
    if (pos == start) fail("expected a coefficient");
    Scalar c = detail::parseCoefficient<Scalar>(text.substr(start, pos - start));
    if (sign < 0) c = -c;
    int exponent = 0;
    skip();
    if (pos < text.size() && text[pos] == '*') {
      ++pos;
      skip();
      if (pos >= text.size() || text[pos] != 'r') fail("expected 'r'");
      ++pos;
      skip();
      if (pos >= text.size() || text[pos] != '^') fail("expected '^'");
      ++pos;
      skip();
      const std::size_t es = pos;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == es) fail("expected an integer exponent");
      exponent = std::stoi(std::string(text.substr(es, pos - es)));
    }
    coefficients[exponent] += c;
    firstTerm = false;
  }
  return {std::move(coefficients), truncation};
}

}  // namespace asymptotica::nonarch
