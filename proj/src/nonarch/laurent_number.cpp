#include "asymptotica/nonarch/laurent_number.hpp"

#include <type_traits>

#include "asymptotica/nonarch/laurent_text.hpp"

namespace asymptotica::nonarch {

namespace {

template <typename T>
struct IsComplex : std::false_type {};
template <typename S>
struct IsComplex<ComplexLaurent<S>> : std::true_type {};

template <typename Op>
LaurentNumber binary(const LaurentNumber& a, const LaurentNumber& b, Op op) {
  return std::visit(
      [&](const auto& x, const auto& y) -> LaurentNumber {
        using X = std::decay_t<decltype(x)>;
        using Y = std::decay_t<decltype(y)>;
        if constexpr (std::is_same_v<X, Y>) {
          return LaurentNumber(op(x, y));
        } else {
          throw DomainMismatch("operands have different coefficient domains or scalar kinds");
        }
      },
      a.storage(), b.storage());
}

template <typename S>
std::string renderExtended(const ExtendedReal<S>& v) {
  if (v.infinity > 0) return "+inf";
  if (v.infinity < 0) return "-inf";
  return ScalarTraits<S>::render(v.value);
}

}  // namespace

const char* label(CoeffDomain d) { return d == CoeffDomain::Exact ? "exact" : "float"; }

CoeffDomain parseCoeffDomain(const std::string& s) {
  if (s == "exact") return CoeffDomain::Exact;
  if (s == "float") return CoeffDomain::Float;
  throw ConfigError("unknown coefficient domain '" + s + "' (expected exact|float)");
}

LaurentNumber LaurentNumber::constant(const Rational& c, const FieldContext& ctx) {
  if (ctx.domain == CoeffDomain::Exact)
    return LaurentNumber(LaurentSeries<Rational>::constant(c, ctx.truncation));
  return LaurentNumber(LaurentSeries<double>::constant(c.get_d(), ctx.truncation));
}

LaurentNumber LaurentNumber::constant(double c, const FieldContext& ctx) {
  if (ctx.domain == CoeffDomain::Exact)
    return LaurentNumber(LaurentSeries<Rational>::constant(Rational(c), ctx.truncation));
  return LaurentNumber(LaurentSeries<double>::constant(c, ctx.truncation));
}

LaurentNumber LaurentNumber::rho(const FieldContext& ctx) {
  if (ctx.domain == CoeffDomain::Exact) return LaurentNumber(LaurentSeries<Rational>::rho(ctx.truncation));
  return LaurentNumber(LaurentSeries<double>::rho(ctx.truncation));
}

LaurentNumber LaurentNumber::parse(const std::string& text, const FieldContext& ctx) {
  if (ctx.domain == CoeffDomain::Exact)
    return LaurentNumber(parseLaurent<Rational>(text, ctx.truncation));
  return LaurentNumber(parseLaurent<double>(text, ctx.truncation));
}

CoeffDomain LaurentNumber::domain() const {
  return (storage_.index() % 2 == 0) ? CoeffDomain::Exact : CoeffDomain::Float;
}

ScalarKind LaurentNumber::kind() const {
  return storage_.index() < 2 ? ScalarKind::Real : ScalarKind::Complex;
}

bool LaurentNumber::isZero() const {
  return std::visit([](const auto& x) { return x.isZero(); }, storage_);
}

int LaurentNumber::valuation() const {
  return std::visit(
      [](const auto& x) -> int {
        if constexpr (IsComplex<std::decay_t<decltype(x)>>::value)
          return x.normSquared().valuation() / 2;
        else
          return x.valuation();
      },
      storage_);
}

int LaurentNumber::truncation() const {
  return std::visit([](const auto& x) { return x.truncation(); }, storage_);
}

LaurentNumber operator+(const LaurentNumber& a, const LaurentNumber& b) {
  return binary(a, b, [](const auto& x, const auto& y) { return x + y; });
}

LaurentNumber operator-(const LaurentNumber& a, const LaurentNumber& b) {
  return binary(a, b, [](const auto& x, const auto& y) { return x - y; });
}

LaurentNumber operator*(const LaurentNumber& a, const LaurentNumber& b) {
  return binary(a, b, [](const auto& x, const auto& y) { return x * y; });
}

LaurentNumber operator/(const LaurentNumber& a, const LaurentNumber& b) {
  return binary(a, b, [](const auto& x, const auto& y) { return x * invert(y); });
}

LaurentNumber operator-(const LaurentNumber& a) {
  return std::visit(
      [](const auto& x) -> LaurentNumber {
        if constexpr (IsComplex<std::decay_t<decltype(x)>>::value)
          return LaurentNumber(std::decay_t<decltype(x)>{-x.re, -x.im});
        else
          return LaurentNumber(-x);
      },
      a.storage());
}

LaurentNumber invert(const LaurentNumber& a) {
  return std::visit([](const auto& x) { return LaurentNumber(invert(x)); }, a.storage());
}

LaurentNumber pow(const LaurentNumber& a, int exponent) {
  if (exponent < 0) return pow(invert(a), -exponent);
  return std::visit(
      [&](const auto& x) -> LaurentNumber {
        using X = std::decay_t<decltype(x)>;
        if (exponent == 0) {
          if constexpr (IsComplex<X>::value)
            return LaurentNumber(X{decltype(x.re)::constant(1, x.truncation()),
                                   decltype(x.re)::zero(x.truncation())});
          else
            return LaurentNumber(X::constant(1, x.truncation()));
        }
        X result = x;
        for (int i = 1; i < exponent; ++i) result = result * x;
        return LaurentNumber(result);
      },
      a.storage());
}

LaurentNumber sqrtPositive(const LaurentNumber& a) {
  return std::visit(
      [](const auto& x) -> LaurentNumber {
        if constexpr (IsComplex<std::decay_t<decltype(x)>>::value)
          throw Unordered("sqrtPositive needs a real, positive argument");
        else
          return LaurentNumber(sqrtPositive(x));
      },
      a.storage());
}

Ordering compare(const LaurentNumber& a, const LaurentNumber& b) {
  return std::visit(
      [](const auto& x, const auto& y) -> Ordering {
        using X = std::decay_t<decltype(x)>;
        using Y = std::decay_t<decltype(y)>;
        if constexpr (IsComplex<X>::value || IsComplex<Y>::value) {
          throw Unordered("complex numbers admit no field ordering");
        } else if constexpr (!std::is_same_v<X, Y>) {
          throw DomainMismatch("operands have different coefficient domains");
        } else {
          return compare(x, y);
        }
      },
      a.storage(), b.storage());
}

ScaleClass classify(const LaurentNumber& a) {
  return std::visit([](const auto& x) { return classify(x); }, a.storage());
}

LaurentNumber standardPartNumber(const LaurentNumber& a) {
  return std::visit(
      [](const auto& x) -> LaurentNumber {
        using X = std::decay_t<decltype(x)>;
        if constexpr (IsComplex<X>::value) {
          const auto [re, im] = standardPart(x);
          if (!re.isFinite() || !im.isFinite()) throw NotFinite("standard part is infinite");
          using R = decltype(x.re);
          return LaurentNumber(X{R::constant(re.value, x.truncation()),
                                 R::constant(im.value, x.truncation())});
        } else {
          const auto st = standardPart(x);
          if (!st.isFinite()) throw NotFinite("standard part is infinite");
          return LaurentNumber(X::constant(st.value, x.truncation()));
        }
      },
      a.storage());
}

std::string renderStandardPart(const LaurentNumber& a) {
  return std::visit(
      [](const auto& x) -> std::string {
        if constexpr (IsComplex<std::decay_t<decltype(x)>>::value) {
          const auto [re, im] = standardPart(x);
          return renderExtended(re) + " + " + renderExtended(im) + " i";
        } else {
          return renderExtended(standardPart(x));
        }
      },
      a.storage());
}

std::string render(const LaurentNumber& a) {
  return std::visit(
      [](const auto& x) -> std::string {
        if constexpr (IsComplex<std::decay_t<decltype(x)>>::value)
          return "(" + render(x.re) + ") + (" + render(x.im) + ") i";
        else
          return render(x);
      },
      a.storage());
}

}  // namespace asymptotica::nonarch
