#pragma once

#include <vector>

#include "asymptotica/nonarch/laurent.hpp"

namespace asymptotica::nonarch {

/// Polynomial coefficients, lowest degree first. Trailing zeros are stripped.
template <typename Scalar>
using Polynomial = std::vector<Scalar>;

namespace detail {

template <typename Scalar>
void trim(Polynomial<Scalar>& p) {
  while (!p.empty() && ScalarTraits<Scalar>::negligible(p.back())) p.pop_back();
}

template <typename Scalar>
Polynomial<Scalar> multiply(const Polynomial<Scalar>& a, const Polynomial<Scalar>& b) {
  if (a.empty() || b.empty()) return {};
  Polynomial<Scalar> out(a.size() + b.size() - 1, Scalar(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

template <typename Scalar>
Polynomial<Scalar> subtract(const Polynomial<Scalar>& a, const Polynomial<Scalar>& b) {
  Polynomial<Scalar> out(std::max(a.size(), b.size()), Scalar(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

/// Quotient and remainder of a / b (b nonzero).
template <typename Scalar>
std::pair<Polynomial<Scalar>, Polynomial<Scalar>> divmod(Polynomial<Scalar> a,
                                                         const Polynomial<Scalar>& b) {
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  Polynomial<Scalar> q(a.size() - b.size() + 1, Scalar(0));
  for (std::size_t k = q.size(); k-- > 0;) {
    const Scalar f = a[k + b.size() - 1] / b.back();
    q[k] = f;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= f * b[j];
  }
  a.resize(b.size() - 1);
  trim(a);
  trim(q);
  return {q, a};
}

template <typename Scalar>
Polynomial<Scalar> gcd(Polynomial<Scalar> a, Polynomial<Scalar> b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace detail

/// Element P(x)/Q(x) of R(x) ordered by "eventually positive": P/Q > 0 iff
/// lead(P) and lead(Q) have the same sign.
///
/// Stored with a monic denominator; in exact mode numerator and denominator are coprime.
template <typename Scalar>
class RationalFunction {
 public:
  using Traits = ScalarTraits<Scalar>;

  RationalFunction(Polynomial<Scalar> numerator, Polynomial<Scalar> denominator)
      : num_(std::move(numerator)), den_(std::move(denominator)) {
    detail::trim(num_);
    detail::trim(den_);
    if (den_.empty()) throw InvalidElement("rational function with zero denominator");
    if constexpr (Traits::exact) {
      if (!num_.empty()) {
        auto g = detail::gcd(num_, den_);
        if (g.size() > 1) {
          num_ = detail::divmod(num_, g).first;
          den_ = detail::divmod(den_, g).first;
        }
      }
    }
    const Scalar lead = den_.back();
    for (auto& c : num_) c /= lead;
    for (auto& c : den_) c /= lead;
    if (num_.empty()) den_ = {Scalar(1)};
  }

  /// The constant c, via the canonical embedding of the scalars.
  static RationalFunction constant(const Scalar& c) { return {{c}, {Scalar(1)}}; }
  /// The identity x.
  static RationalFunction identity() { return {{Scalar(0), Scalar(1)}, {Scalar(1)}}; }

  const Polynomial<Scalar>& numerator() const { return num_; }
  const Polynomial<Scalar>& denominator() const { return den_; }
  bool isZero() const { return num_.empty(); }

  /// Sign under the leading-coefficient order.
  int sign() const { return isZero() ? 0 : Traits::sign(num_.back()) * Traits::sign(den_.back()); }

  double evaluate(double x) const {
    auto horner = [x](const Polynomial<Scalar>& p) {
      double acc = 0;
      for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + Traits::toDouble(*it);
      return acc;
    };
    return horner(num_) / horner(den_);
  }

  friend RationalFunction operator-(const RationalFunction& f, const RationalFunction& g) {
    return {detail::subtract(detail::multiply(f.num_, g.den_), detail::multiply(g.num_, f.den_)),
            detail::multiply(f.den_, g.den_)};
  }

 private:
  Polynomial<Scalar> num_;
  Polynomial<Scalar> den_;
};

template <typename Scalar>
Ordering rationalCompare(const RationalFunction<Scalar>& f, const RationalFunction<Scalar>& g) {
  const int s = (f - g).sign();
  return s > 0 ? Ordering::Greater : (s < 0 ? Ordering::Less : Ordering::Equal);
}

/// Substitute x = 1/rho and expand through rho^truncation. Order preserving.
template <typename Scalar>
LaurentSeries<Scalar> rationalToLaurent(const RationalFunction<Scalar>& f,
                                        int truncation = kDefaultTruncation) {
  if (f.isZero()) return LaurentSeries<Scalar>::zero(truncation);
  const auto& p = f.numerator();
  const auto& q = f.denominator();
  const int degP = static_cast<int>(p.size()) - 1;
  const int degQ = static_cast<int>(q.size()) - 1;
  // Working order high enough that the final truncation is the binding one.
  const int work = truncation + 2 * (degP + degQ) + 2;
  auto toSeries = [work](const Polynomial<Scalar>& poly) {
    typename LaurentSeries<Scalar>::Coefficients c;
    for (std::size_t i = 0; i < poly.size(); ++i)
      if (!ScalarTraits<Scalar>::negligible(poly[i])) c.emplace(-static_cast<int>(i), poly[i]);
    return LaurentSeries<Scalar>(std::move(c), work);
  };
  return (toSeries(p) / toSeries(q)).truncated(truncation);
}

}  // namespace asymptotica::nonarch
