#pragma once

#include <random>

#include "asymptotica/nonarch/laurent.hpp"
#include "asymptotica/nonarch/rational_function.hpp"

namespace testing_support {

using asymptotica::nonarch::LaurentSeries;
using asymptotica::nonarch::Rational;

inline Rational randomRational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline Rational randomNonzeroRational(std::mt19937_64& rng) {
  Rational r;
  do r = randomRational(rng);
  while (sgn(r) == 0);
  return r;
}

/// Nonzero series with valuation in [minVal, maxVal] and a handful of higher terms.
inline LaurentSeries<Rational> randomSeries(std::mt19937_64& rng, int minVal = -3, int maxVal = 3,
                                            int truncation = 16) {
  std::uniform_int_distribution<int> val(minVal, maxVal), extra(0, 4), gap(1, 5);
  const int m = val(rng);
  LaurentSeries<Rational>::Coefficients c;
  c[m] = randomNonzeroRational(rng);
  int e = m;
  for (int i = extra(rng); i > 0; --i) {
    e += gap(rng);
    c[e] = randomRational(rng);
  }
  return {std::move(c), truncation};
}

inline LaurentSeries<double> toDouble(const LaurentSeries<Rational>& a) {
  LaurentSeries<double>::Coefficients c;
  for (const auto& [e, v] : a.coefficients()) c[e] = v.get_d();
  return {std::move(c), a.truncation()};
}

}  // namespace testing_support
