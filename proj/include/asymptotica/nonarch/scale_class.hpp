#pragma once

#include "asymptotica/nonarch/laurent.hpp"

namespace asymptotica::nonarch {

/// Infinitesimal / finite / infinitely large.
enum class Magnitude { Infinitesimal, FiniteAppreciable, InfinitelyLarge };

/// The rho-scale family, as a partition of the nonzero numbers:
///   RhoNull                 |x| < rho^n for all n
///   RhoInfinitesimalProper  |x| <= rho^(1/n) for some n
///   RhoConstant             rho^(1/n) < |x| < rho^(-1/n) for all n
///   RhoFiniteOnly           rho-finite but neither of the two above
///   RhoModerateOnly         rho-moderate but not rho-finite
enum class RhoScale { RhoNull, RhoInfinitesimalProper, RhoConstant, RhoFiniteOnly, RhoModerateOnly };

struct ScaleClass {
  Magnitude magnitude;
  RhoScale rho;

  bool isRhoModerate() const { return true; }
  bool isRhoFinite() const { return rho != RhoScale::RhoModerateOnly; }

  friend bool operator==(const ScaleClass&, const ScaleClass&) = default;
};

const char* label(Magnitude m);
const char* label(RhoScale r);

inline std::ostream& operator<<(std::ostream& os, Magnitude m) { return os << label(m); }
inline std::ostream& operator<<(std::ostream& os, RhoScale r) { return os << label(r); }

/// Scale class of a number whose modulus has valuation `m`.
///
/// With |x| = c rho^m (1 + o(1)), c > 0, each defining inequality against rho^(+-1/n) or
/// rho^(+-n) reduces to comparing m with that exponent:
///   - |x| <= rho^(-n) for n = max(1, -m): every nonzero x is rho-moderate.
///   - |x| < rho^n fails at n = m + 1: no nonzero x is rho-null.
///   - |x| < rho^(-1/n) for all n  <=>  m >= 0   (m < 0 beats every -1/n).
///   - |x| <= rho^(1/n) for some n  <=>  m >= 1  (m = 0 leaves c > rho^(1/n)).
///   - rho^(1/n) < |x| < rho^(-1/n) for all n  <=>  m = 0.
/// So rho-finite = {m >= 0} is exactly I_rho united with C_rho and RhoFiniteOnly is empty
/// in this model; likewise the infinitesimal/finite/large split is m >= 1 / m = 0 / m <= -1.
ScaleClass classifyValuation(int m);

template <typename Scalar>
ScaleClass classify(const LaurentSeries<Scalar>& a) {
  if (a.isZero()) throw ZeroHasNoClass("zero has no scale class");
  return classifyValuation(a.valuation());
}

}  // namespace asymptotica::nonarch
