#pragma once

#include <optional>

#include "asymptotica/nonarch/laurent.hpp"
#include "asymptotica/nonarch/scale_class.hpp"

namespace asymptotica::nonarch {

/// gamma = alpha + beta i with real Laurent parts.
template <typename Scalar>
struct ComplexLaurent {
  LaurentSeries<Scalar> re;
  LaurentSeries<Scalar> im;

  int truncation() const { return std::min(re.truncation(), im.truncation()); }
  bool isZero() const { return re.isZero() && im.isZero(); }

  ComplexLaurent conjugate() const { return {re, -im}; }

  /// alpha^2 + beta^2. Its valuation is 2 min(val alpha, val beta): leading squares never cancel.
  LaurentSeries<Scalar> normSquared() const { return re * re + im * im; }

  friend ComplexLaurent operator+(const ComplexLaurent& a, const ComplexLaurent& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexLaurent operator-(const ComplexLaurent& a, const ComplexLaurent& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ComplexLaurent operator*(const ComplexLaurent& a, const ComplexLaurent& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const ComplexLaurent&, const ComplexLaurent&) = default;
};

template <typename Scalar>
ComplexLaurent<Scalar> invert(const ComplexLaurent<Scalar>& a) {
  if (a.isZero()) throw DivisionByZero("cannot invert zero");
  const auto inv = invert(a.normSquared());
  return {a.re * inv, -(a.im * inv)};
}

template <typename Scalar>
struct ComplexDecomposition {
  LaurentSeries<Scalar> alpha;
  LaurentSeries<Scalar> beta;
  /// Modulus, or empty when alpha^2 + beta^2 has no square root in the model.
  std::optional<LaurentSeries<Scalar>> modulus;
};

template <typename Scalar>
ComplexDecomposition<Scalar> complexDecompose(const ComplexLaurent<Scalar>& gamma) {
  ComplexDecomposition<Scalar> out{gamma.re, gamma.im, std::nullopt};
  if (gamma.isZero()) {
    out.modulus = LaurentSeries<Scalar>::zero(gamma.truncation());
    return out;
  }
  try {
    out.modulus = sqrtPositive(gamma.normSquared());
  } catch (const NoSquareRoot&) {
  }
  return out;
}

template <typename Scalar>
ScaleClass classify(const ComplexLaurent<Scalar>& gamma) {
  if (gamma.isZero()) throw ZeroHasNoClass("zero has no scale class");
  const int v = gamma.normSquared().valuation();
  // v is even; |gamma| has valuation v / 2.
  return classifyValuation(v / 2);
}

/// Componentwise standard part.
template <typename Scalar>
std::pair<ExtendedReal<Scalar>, ExtendedReal<Scalar>> standardPart(const ComplexLaurent<Scalar>& g) {
  return {standardPart(g.re), standardPart(g.im)};
}

template <typename Scalar>
Ordering compare(const ComplexLaurent<Scalar>&, const ComplexLaurent<Scalar>&) {
  throw Unordered("complex numbers admit no field ordering");
}

}  // namespace asymptotica::nonarch
