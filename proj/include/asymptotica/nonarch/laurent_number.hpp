#pragma once

#include <string>
#include <variant>

#include "asymptotica/nonarch/complex_laurent.hpp"
#include "asymptotica/nonarch/laurent.hpp"
#include "asymptotica/nonarch/scale_class.hpp"

namespace asymptotica::nonarch {

enum class CoeffDomain { Exact, Float };
enum class ScalarKind { Real, Complex };

const char* label(CoeffDomain d);
CoeffDomain parseCoeffDomain(const std::string& s);

/// Session settings for runtime-typed arithmetic. Passed explicitly; there is no global.
struct FieldContext {
  CoeffDomain domain = CoeffDomain::Exact;
  int truncation = kDefaultTruncation;
};

/// A Laurent number whose coefficient domain and scalar kind are decided at run time
/// (REPL, config files). Mixing domains is a `DomainMismatch`.
class LaurentNumber {
 public:
  using Storage = std::variant<LaurentSeries<Rational>, LaurentSeries<double>,
                               ComplexLaurent<Rational>, ComplexLaurent<double>>;

  LaurentNumber(Storage s) : storage_(std::move(s)) {}  // NOLINT(google-explicit-constructor)

  static LaurentNumber constant(const Rational& c, const FieldContext& ctx);
  static LaurentNumber constant(double c, const FieldContext& ctx);
  static LaurentNumber rho(const FieldContext& ctx);
  static LaurentNumber parse(const std::string& text, const FieldContext& ctx);

  CoeffDomain domain() const;
  ScalarKind kind() const;
  const Storage& storage() const { return storage_; }

  bool isZero() const;
  int valuation() const;
  int truncation() const;

  friend bool operator==(const LaurentNumber&, const LaurentNumber&) = default;

 private:
  Storage storage_;
};

LaurentNumber operator+(const LaurentNumber& a, const LaurentNumber& b);
LaurentNumber operator-(const LaurentNumber& a, const LaurentNumber& b);
LaurentNumber operator*(const LaurentNumber& a, const LaurentNumber& b);
LaurentNumber operator/(const LaurentNumber& a, const LaurentNumber& b);
LaurentNumber operator-(const LaurentNumber& a);
LaurentNumber invert(const LaurentNumber& a);
LaurentNumber pow(const LaurentNumber& a, int exponent);
LaurentNumber sqrtPositive(const LaurentNumber& a);
Ordering compare(const LaurentNumber& a, const LaurentNumber& b);
ScaleClass classify(const LaurentNumber& a);

/// Standard part as a constant of the same domain; throws `NotFinite` for infinite values.
LaurentNumber standardPartNumber(const LaurentNumber& a);
/// Standard part as text: `3`, `+inf`, `-inf`, or `a + b i` for complex values.
std::string renderStandardPart(const LaurentNumber& a);

std::string render(const LaurentNumber& a);

}  // namespace asymptotica::nonarch
