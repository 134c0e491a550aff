#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "asymptotica/errors.hpp"
#include "asymptotica/nonarch/scalar_traits.hpp"

namespace asymptotica::nonarch {

/// Default truncation order K: terms with exponent > K are not represented.
inline constexpr int kDefaultTruncation = 16;

/// Truncated formal Laurent series  sum_{e=m}^{K} c_e rho^e  in the positive infinitesimal rho.
///
/// The value is known through exponent `truncation()` (the certified-through exponent);
/// everything above it is an unknown O(rho^{K+1}). Zero carries no coefficients and
/// reports valuation K+1, which is what the arithmetic below needs for bookkeeping.
/// Values are immutable.
template <typename Scalar>
class LaurentSeries {
 public:
  using Traits = ScalarTraits<Scalar>;
  using Coefficients = std::map<int, Scalar>;

  LaurentSeries() : LaurentSeries(Coefficients{}, kDefaultTruncation) {}

  LaurentSeries(Coefficients coefficients, int truncation)
      : coefficients_(std::move(coefficients)), truncation_(truncation) {
    std::erase_if(coefficients_, [&](const auto& kv) {
      return kv.first > truncation_ || Traits::negligible(kv.second);
    });
  }

  static LaurentSeries zero(int truncation = kDefaultTruncation) { return {{}, truncation}; }

  static LaurentSeries constant(const Scalar& c, int truncation = kDefaultTruncation) {
    return {{{0, c}}, truncation};
  }

  static LaurentSeries monomial(const Scalar& c, int exponent,
                                int truncation = kDefaultTruncation) {
    return {{{exponent, c}}, truncation};
  }

  /// The infinitesimal rho itself.
  static LaurentSeries rho(int truncation = kDefaultTruncation) {
    return monomial(Traits::fromInt(1), 1, truncation);
  }

  bool isZero() const { return coefficients_.empty(); }
  int truncation() const { return truncation_; }
  int valuation() const { return isZero() ? truncation_ + 1 : coefficients_.begin()->first; }
  const Coefficients& coefficients() const { return coefficients_; }

  Scalar coefficient(int exponent) const {
    auto it = coefficients_.find(exponent);
    return it == coefficients_.end() ? Scalar(0) : it->second;
  }

  /// Coefficient at the valuation. Zero for the zero series.
  Scalar leading() const { return isZero() ? Scalar(0) : coefficients_.begin()->second; }

  int sign() const { return isZero() ? 0 : Traits::sign(leading()); }

  LaurentSeries truncated(int truncation) const {
    return {coefficients_, std::min(truncation, truncation_)};
  }

  /// rho^shift * this.
  LaurentSeries shifted(int shift) const {
    Coefficients out;
    for (const auto& [e, c] : coefficients_) out.emplace(e + shift, c);
    return {std::move(out), truncation_ + shift};
  }

  LaurentSeries operator-() const {
    Coefficients out;
    for (const auto& [e, c] : coefficients_) out.emplace(e, -c);
    return {std::move(out), truncation_};
  }

  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    const int k = std::min(a.truncation_, b.truncation_);
    Coefficients out;
    for (const auto& [e, c] : a.coefficients_)
      if (e <= k) out[e] += c;
    for (const auto& [e, c] : b.coefficients_)
      if (e <= k) out[e] += c;
    return {std::move(out), k};
  }

  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
    return a + (-b);
  }

  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    const int k = std::min(a.truncation_ + b.valuation(), b.truncation_ + a.valuation());
    Coefficients out;
    for (const auto& [ea, ca] : a.coefficients_) {
      for (const auto& [eb, cb] : b.coefficients_) {
        if (ea + eb > k) break;
        out[ea + eb] += ca * cb;
      }
    }
    return {std::move(out), k};
  }

  friend LaurentSeries operator*(const Scalar& s, const LaurentSeries& a) {
    return constant(s, a.truncation_ - a.valuation()) * a;
  }

  /// Structural equality: same truncation and same coefficients.
  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
    return a.truncation_ == b.truncation_ && a.coefficients_ == b.coefficients_;
  }

 private:
  Coefficients coefficients_;
  int truncation_;
};

/// True when `a` and `b` agree on every exponent both of them represent.
/// Exact coefficients must match; float coefficients within `relTol`.
template <typename Scalar>
bool agreeThrough(const LaurentSeries<Scalar>& a, const LaurentSeries<Scalar>& b,
                  double relTol = 1e-12) {
  using Traits = ScalarTraits<Scalar>;
  const int k = std::min(a.truncation(), b.truncation());
  std::map<int, std::pair<Scalar, Scalar>> both;
  for (const auto& [e, c] : a.coefficients())
    if (e <= k) both[e].first = c;
  for (const auto& [e, c] : b.coefficients())
    if (e <= k) both[e].second = c;
  for (const auto& [e, pr] : both)
    if (!Traits::nearlyEqual(pr.first, pr.second, relTol)) return false;
  return true;
}

/// Multiplicative inverse: valuation shift followed by the geometric-series recurrence.
/// A series known through K with valuation m yields an inverse known through K - 2m.
template <typename Scalar>
LaurentSeries<Scalar> invert(const LaurentSeries<Scalar>& a) {
  if (a.isZero()) throw DivisionByZero("cannot invert zero");
  const int m = a.valuation();
  const int k = a.truncation() - 2 * m;
  const int terms = k + m;  // exponents -m .. k of the result
  const Scalar lead = a.leading();
  typename LaurentSeries<Scalar>::Coefficients out;
  std::vector<Scalar> b(static_cast<std::size_t>(std::max(terms + 1, 0)));
  for (int j = 0; j <= terms; ++j) {
    Scalar acc = j == 0 ? Scalar(1) : Scalar(0);
    for (int i = 1; i <= j; ++i) acc -= a.coefficient(m + i) * b[static_cast<std::size_t>(j - i)];
    b[static_cast<std::size_t>(j)] = acc / lead;
    out.emplace(j - m, b[static_cast<std::size_t>(j)]);
  }
  return {std::move(out), k};
}

template <typename Scalar>
LaurentSeries<Scalar> operator/(const LaurentSeries<Scalar>& a, const LaurentSeries<Scalar>& b) {
  return a * invert(b);
}

/// Integer power; negative exponents go through `invert`.
template <typename Scalar>
LaurentSeries<Scalar> pow(const LaurentSeries<Scalar>& a, int exponent) {
  if (exponent < 0) return pow(invert(a), -exponent);
  if (exponent == 0) return LaurentSeries<Scalar>::constant(Scalar(1), a.truncation());
  auto result = a;
  for (int i = 1; i < exponent; ++i) result = result * a;
  return result;
}

/// Positive square root in the integer-exponent model.
///
/// Positivity is equivalent to being a nonzero square in a real-closed field, but integer
/// exponents only reach the squares of even valuation. In exact mode the leading
/// coefficient must also be a rational square.
template <typename Scalar>
LaurentSeries<Scalar> sqrtPositive(const LaurentSeries<Scalar>& a) {
  using Traits = ScalarTraits<Scalar>;
  if (a.sign() <= 0) throw NotPositive("square root requires a positive argument");
  const int m = a.valuation();
  if (m % 2 != 0)
    throw NoSquareRoot("odd valuation " + std::to_string(m) +
                       ": no square root in the integer-exponent model");
  auto root = Traits::sqrt(a.leading());
  if (!root) throw NoSquareRoot("leading coefficient is not a square in the coefficient domain");
  const int half = m / 2;
  const int k = a.truncation() - half;
  const int terms = k - half;
  std::vector<Scalar> b(static_cast<std::size_t>(terms + 1));
  typename LaurentSeries<Scalar>::Coefficients out;
  b[0] = *root;
  out.emplace(half, b[0]);
  const Scalar twice = Scalar(2) * b[0];
  for (int j = 1; j <= terms; ++j) {
    Scalar acc = a.coefficient(m + j);
    for (int i = 1; i < j; ++i)
      acc -= b[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j - i)];
    b[static_cast<std::size_t>(j)] = acc / twice;
    out.emplace(half + j, b[static_cast<std::size_t>(j)]);
  }
  return {std::move(out), k};
}

enum class Ordering { Less, Equal, Greater };

inline const char* label(Ordering o) {
  switch (o) {
    case Ordering::Less: return "less";
    case Ordering::Equal: return "equal";
    case Ordering::Greater: return "greater";
  }
  return "?";
}

inline std::ostream& operator<<(std::ostream& os, Ordering o) { return os << label(o); }

/// a > b iff the leading coefficient of a - b is positive. Equality means equality through
/// the common certified exponent.
template <typename Scalar>
Ordering compare(const LaurentSeries<Scalar>& a, const LaurentSeries<Scalar>& b) {
  const int s = (a - b).sign();
  return s > 0 ? Ordering::Greater : (s < 0 ? Ordering::Less : Ordering::Equal);
}

/// Standard part: a real, or +-infinity for infinitely large values.
template <typename Scalar>
struct ExtendedReal {
  Scalar value{};
  int infinity = 0;  ///< 0 finite, +1 for +inf, -1 for -inf

  bool isFinite() const { return infinity == 0; }
  double toDouble() const {
    if (infinity != 0) return infinity * std::numeric_limits<double>::infinity();
    return ScalarTraits<Scalar>::toDouble(value);
  }
};

template <typename Scalar>
ExtendedReal<Scalar> standardPart(const LaurentSeries<Scalar>& a) {
  if (!a.isZero() && a.valuation() < 0) return {Scalar(0), a.sign()};
  return {a.coefficient(0), 0};
}

/// Unique decomposition a = r + dx with r real and dx infinitesimal.
template <typename Scalar>
std::pair<Scalar, LaurentSeries<Scalar>> asymptoticSplit(const LaurentSeries<Scalar>& a) {
  if (!a.isZero() && a.valuation() < 0) throw NotFinite("asymptoticSplit needs a finite number");
  const Scalar r = a.coefficient(0);
  return {r, a - LaurentSeries<Scalar>::constant(r, a.truncation())};
}

}  // namespace asymptotica::nonarch
