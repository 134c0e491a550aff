#pragma once

#include <cmath>
#include <optional>
#include <sstream>
#include <string>

#include <gmpxx.h>

namespace asymptotica::nonarch {

using Rational = mpq_class;

/// Per-coefficient-domain hooks used by the Laurent and rational-function templates.
template <typename Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr const char* name = "exact";

  static bool negligible(const Rational& c) { return sgn(c) == 0; }
  static int sign(const Rational& c) { return sgn(c); }
  static double toDouble(const Rational& c) { return c.get_d(); }
  static Rational fromInt(long v) { return Rational(v); }

  /// Exact square root of a positive rational, if it is a perfect square.
  static std::optional<Rational> sqrt(const Rational& c) {
    if (sgn(c) <= 0) return std::nullopt;
    if (mpz_perfect_square_p(c.get_num_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(c.get_den_mpz_t()) == 0) return std::nullopt;
    mpz_class num, den;
    mpz_sqrt(num.get_mpz_t(), c.get_num_mpz_t());
    mpz_sqrt(den.get_mpz_t(), c.get_den_mpz_t());
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  static bool nearlyEqual(const Rational& a, const Rational& b, double) { return a == b; }

  static std::string render(const Rational& c) { return c.get_str(); }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr const char* name = "float";
  /// Coefficients below this magnitude are dropped when canonicalizing.
  static constexpr double normalizationThreshold = 1e-300;

  static bool negligible(double c) { return std::abs(c) < normalizationThreshold; }
  static int sign(double c) { return (c > 0) - (c < 0); }
  static double toDouble(double c) { return c; }
  static double fromInt(long v) { return static_cast<double>(v); }

  static std::optional<double> sqrt(double c) {
    if (!(c > 0)) return std::nullopt;
    return std::sqrt(c);
  }

  static bool nearlyEqual(double a, double b, double relTol) {
    const double scale = std::max({std::abs(a), std::abs(b), 1.0});
    return std::abs(a - b) <= relTol * scale;
  }

  static std::string render(double c) {
    std::ostringstream os;
    os.precision(17);
    os << c;
    return os.str();
  }
};

}  // namespace asymptotica::nonarch
