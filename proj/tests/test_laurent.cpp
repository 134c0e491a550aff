#include <cmath>

#include "asymptotica/nonarch/complex_laurent.hpp"
#include "asymptotica/nonarch/laurent.hpp"
#include "asymptotica/nonarch/laurent_number.hpp"
#include "asymptotica/nonarch/laurent_text.hpp"
#include "asymptotica/nonarch/rational_function.hpp"
#include "asymptotica/nonarch/scale_class.hpp"
#include "doctest.h"
#include "random_laurent.hpp"

using namespace asymptotica;
using namespace asymptotica::nonarch;
using testing_support::randomNonzeroRational;
using testing_support::randomRational;
using testing_support::randomSeries;

using Q = LaurentSeries<Rational>;
using F = LaurentSeries<double>;

namespace {

Q q(std::initializer_list<std::pair<const int, Rational>> terms, int k = kDefaultTruncation) {
  return Q(Q::Coefficients(terms), k);
}

Q one(int k = kDefaultTruncation) { return Q::constant(1, k); }

}  // namespace

TEST_CASE("arithmetic examples") {
  CHECK((q({{0, 1}, {1, 1}}) + q({{0, 2}, {1, -1}})) == Q::constant(3));

  const auto r = Q::rho();
  const auto product = r * invert(r);
  CHECK(agreeThrough(product, one()));
  CHECK(product.coefficients().size() == 1);

  // Hand long multiplication: (1+r)(1-r+r^2-r^3) = 1 - r^4, which is 1 through K = 3.
  const auto lhs = q({{0, 1}, {1, 1}}, 3);
  const auto rhs = q({{0, 1}, {1, -1}, {2, 1}, {3, -1}}, 3);
  const auto full = q({{0, 1}, {1, 1}}, 10) * q({{0, 1}, {1, -1}, {2, 1}, {3, -1}}, 10);
  CHECK(full.coefficient(4) == -1);
  CHECK(full.coefficient(1) == 0);
  CHECK(lhs * rhs == Q::constant(1, 3));
}

TEST_CASE("mixed domains are rejected at run time") {
  FieldContext exact{CoeffDomain::Exact, 16}, flt{CoeffDomain::Float, 16};
  const auto a = LaurentNumber::rho(exact);
  const auto b = LaurentNumber::rho(flt);
  CHECK_THROWS_AS(a + b, DomainMismatch);
  CHECK_THROWS_AS(a * b, DomainMismatch);
  CHECK_NOTHROW(a + a);
}

TEST_CASE("invert") {
  CHECK(invert(Q::rho()).coefficients() == Q::Coefficients{{-1, 1}});
  CHECK(invert(Q::rho()).valuation() == -1);

  const auto geometric = invert(q({{0, 1}, {1, -1}}));
  CHECK(geometric.truncation() == kDefaultTruncation);
  for (int k = 0; k <= kDefaultTruncation; ++k) CHECK(geometric.coefficient(k) == 1);
  // Multiply back: the residual carries no represented term.
  CHECK((geometric * q({{0, 1}, {1, -1}}) - one()).isZero());

  const auto half = invert(Q::monomial(2, 2));
  CHECK(half.coefficients() == Q::Coefficients{{-2, Rational(1, 2)}});

  CHECK_THROWS_AS(invert(Q::zero()), DivisionByZero);
}

TEST_CASE("sqrtPositive") {
  CHECK(sqrtPositive(Q::monomial(1, 2)) == Q::monomial(1, 1, 15));

  const auto a = q({{0, 1}, {1, 1}});
  const auto s = sqrtPositive(a);
  CHECK(s.coefficient(0) == 1);
  CHECK(s.coefficient(1) == Rational(1, 2));
  CHECK(s.coefficient(2) == Rational(-1, 8));
  CHECK(s.coefficient(3) == Rational(1, 16));
  CHECK((s * s - a).isZero());
  CHECK(compare(s, Q::zero()) == Ordering::Greater);

  CHECK_THROWS_AS(sqrtPositive(Q::rho()), NoSquareRoot);
  CHECK_THROWS_AS(sqrtPositive(-Q::monomial(1, 2)), NotPositive);
  CHECK_THROWS_AS(sqrtPositive(Q::zero()), NotPositive);
  // No rational square root of 2.
  CHECK_THROWS_AS(sqrtPositive(Q::constant(2)), NoSquareRoot);
  CHECK(std::abs(sqrtPositive(F::constant(2)).coefficient(0) - std::sqrt(2.0)) < 1e-15);
}

TEST_CASE("compare") {
  const auto r = Q::rho();
  for (int n : {1, 2, 7, 1000}) {
    CHECK(compare(r, Q::constant(Rational(1, n))) == Ordering::Less);
    CHECK(compare(invert(r), Q::constant(n)) == Ordering::Greater);
  }
  CHECK(compare(q({{0, 3}, {1, 1}}), Q::constant(3)) == Ordering::Greater);
  CHECK(compare(Q::constant(3), Q::constant(3)) == Ordering::Equal);

  ComplexLaurent<Rational> z{Q::rho(), Q::rho()};
  CHECK_THROWS_AS(compare(z, z), Unordered);
}

TEST_CASE("standard part and asymptotic split") {
  CHECK(standardPart(q({{0, 3}, {1, 1}, {2, -2}})).value == 3);
  const auto inf = standardPart(q({{-1, 1}, {0, 5}}));
  CHECK(inf.infinity == 1);
  CHECK(standardPart(-q({{-1, 1}, {0, 5}})).infinity == -1);
  CHECK(standardPart(Q::rho()).value == 0);
  CHECK(standardPart(Q::rho()).isFinite());

  auto [r1, d1] = asymptoticSplit(q({{0, 3}, {1, 1}}));
  CHECK(r1 == 3);
  CHECK(d1 == Q::rho());
  auto [r2, d2] = asymptoticSplit(Q::constant(7));
  CHECK(r2 == 7);
  CHECK(d2.isZero());
  auto [r3, d3] = asymptoticSplit(q({{2, 1}, {3, -1}}));
  CHECK(r3 == 0);
  CHECK(d3 == q({{2, 1}, {3, -1}}));
  CHECK_THROWS_AS(asymptoticSplit(invert(Q::rho())), NotFinite);
}

TEST_CASE("classify") {
  const auto c1 = classify(Q::rho());
  CHECK(c1.magnitude == Magnitude::Infinitesimal);
  CHECK(c1.rho == RhoScale::RhoInfinitesimalProper);

  const auto c2 = classify(q({{0, 7}, {1, 1}}));
  CHECK(c2.magnitude == Magnitude::FiniteAppreciable);
  CHECK(c2.rho == RhoScale::RhoConstant);

  const auto c3 = classify(Q::monomial(1, -3));
  CHECK(c3.magnitude == Magnitude::InfinitelyLarge);
  CHECK(c3.isRhoModerate());
  CHECK_FALSE(c3.isRhoFinite());

  CHECK_THROWS_AS(classify(Q::zero()), ZeroHasNoClass);
}

TEST_CASE("classify agrees with the defining inequalities against rho^(+-n) and rho^(+-1/n)") {
  // |x| ~ c rho^m compared with rho^p for rational p = a/b: raise both sides to the b-th
  // power, giving rho^(m b) against rho^a, which compare() decides exactly.
  auto lessThanPower = [](int m, int a, int b) {
    // Is c rho^m < rho^(a/b) with c = 7 (any fixed positive c gives the same answer)?
    const auto lhs = pow(Q::monomial(7, m, 64), b);
    const auto rhs = Q::monomial(1, a, 64);
    return compare(lhs, rhs) == Ordering::Less;
  };
  for (int m = -4; m <= 4; ++m) {
    bool moderate = false, null = true, rhoFinite = true, rhoInfinitesimal = false,
         rhoConstant = true;
    for (int n = 1; n <= 6; ++n) {
      moderate = moderate || lessThanPower(m, -n, 1);
      null = null && lessThanPower(m, n, 1);
      rhoFinite = rhoFinite && lessThanPower(m, -1, n);
      rhoInfinitesimal = rhoInfinitesimal || lessThanPower(m, 1, n);
      rhoConstant = rhoConstant && !lessThanPower(m, 1, n) && lessThanPower(m, -1, n);
    }
    const auto cls = classifyValuation(m);
    CAPTURE(m);
    CHECK(moderate == cls.isRhoModerate());
    CHECK_FALSE(null);
    CHECK(cls.isRhoFinite() == rhoFinite);
    CHECK((cls.rho == RhoScale::RhoInfinitesimalProper) == rhoInfinitesimal);
    CHECK((cls.rho == RhoScale::RhoConstant) == rhoConstant);
  }
}

TEST_CASE("complexDecompose") {
  ComplexLaurent<Rational> g{q({{0, 1}, {1, 1}}), q({{1, 2}})};
  const auto d = complexDecompose(g);
  CHECK(d.alpha == q({{0, 1}, {1, 1}}));
  CHECK(d.beta == q({{1, 2}}));

  ComplexLaurent<Rational> real{q({{0, -3}, {2, 1}}), Q::zero()};
  const auto dr = complexDecompose(real);
  CHECK(dr.beta.isZero());
  REQUIRE(dr.modulus.has_value());
  CHECK(agreeThrough(*dr.modulus, -real.re));

  ComplexLaurent<double> diag{F::rho(), F::rho()};
  const auto dd = complexDecompose(diag);
  REQUIRE(dd.modulus.has_value());
  CHECK(dd.modulus->valuation() == 1);
  CHECK(std::abs(dd.modulus->coefficient(1) - std::sqrt(2.0)) < 1e-15);
  // Square back.
  CHECK(agreeThrough(*dd.modulus * *dd.modulus, diag.normSquared()));

  // In exact mode sqrt(2) is not representable.
  ComplexLaurent<Rational> diagQ{Q::rho(), Q::rho()};
  CHECK_FALSE(complexDecompose(diagQ).modulus.has_value());
  CHECK(classify(diagQ).magnitude == Magnitude::Infinitesimal);
}

TEST_CASE("rational functions") {
  using RF = RationalFunction<Rational>;
  const auto x = RF::identity();
  for (int n : {1, 5, 1000000}) {
    CHECK(rationalCompare(x, RF::constant(n)) == Ordering::Greater);
    CHECK(rationalCompare(RF({1}, {0, 1}), RF::constant(Rational(1, n))) == Ordering::Less);
    CHECK(rationalCompare(RF({1}, {0, 1}), RF::constant(0)) == Ordering::Greater);
  }
  // (x^2+1)/x^2 - 1 = 1/x^2 > 0.
  CHECK(rationalCompare(RF({1, 0, 1}, {0, 0, 1}), RF::constant(1)) == Ordering::Greater);

  CHECK_THROWS_AS(RF({1}, {0}), InvalidElement);

  // gcd reduction: (x^2-1)/(x-1) = x+1
  const RF reduced({-1, 0, 1}, {-1, 1});
  CHECK(reduced.denominator().size() == 1);
  CHECK(reduced.numerator() == Polynomial<Rational>{1, 1});

  CHECK(rationalToLaurent(x) == Q::monomial(1, -1));
  // Long division: 1/(x-1) = (1/x) / (1 - 1/x) = sum_{k>=1} rho^k.
  const auto geo = rationalToLaurent(RF({1}, {-1, 1}));
  CHECK(geo.coefficient(0) == 0);
  for (int k = 1; k <= kDefaultTruncation; ++k) CHECK(geo.coefficient(k) == 1);
  CHECK(rationalToLaurent(RF::constant(Rational(5, 3))) == Q::constant(Rational(5, 3)));
}

TEST_CASE("property: field axioms to truncation (exact)") {
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 1000; ++i) {
    const auto a = randomSeries(rng), b = randomSeries(rng), c = randomSeries(rng);
    REQUIRE(agreeThrough((a + b) + c, a + (b + c)));
    REQUIRE(agreeThrough((a * b) * c, a * (b * c)));
    REQUIRE(agreeThrough(a * (b + c), a * b + a * c));
    REQUIRE(agreeThrough(a * invert(a), one()));
  }
}

namespace {

/// a * b agrees with `expected` coefficientwise, relative to the magnitude |a| * |b| of the
/// terms that were summed (cancellation-aware).
bool productAgrees(const F& a, const F& b, const F& expected, double relTol) {
  auto absolute = [](const F& x) {
    F::Coefficients c;
    for (const auto& [e, v] : x.coefficients()) c[e] = std::abs(v);
    return F(std::move(c), x.truncation());
  };
  const auto product = a * b;
  const auto scale = absolute(a) * absolute(b);
  for (int e = product.valuation(); e <= std::min(product.truncation(), expected.truncation()); ++e)
    if (std::abs(product.coefficient(e) - expected.coefficient(e)) >
        relTol * std::max(scale.coefficient(e), 1e-300))
      return false;
  return true;
}

}  // namespace

TEST_CASE("property: field axioms to truncation (float)") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 1000; ++i) {
    const auto a = testing_support::toDouble(randomSeries(rng));
    const auto b = testing_support::toDouble(randomSeries(rng));
    const auto c = testing_support::toDouble(randomSeries(rng));
    REQUIRE(agreeThrough((a + b) + c, a + (b + c), 1e-12));
    REQUIRE(agreeThrough(a * (b + c), a * b + a * c, 1e-12));
    REQUIRE(productAgrees(a, invert(a), F::constant(1), 1e-12));
  }
}

TEST_CASE("property: order axioms") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 1000; ++i) {
    auto a = randomSeries(rng), b = randomSeries(rng);
    const int outcomes = (compare(a, b) == Ordering::Less) + (compare(a, b) == Ordering::Equal) +
                         (compare(a, b) == Ordering::Greater);
    REQUIRE(outcomes == 1);
    REQUIRE(compare(a, b) == (compare(b, a) == Ordering::Less      ? Ordering::Greater
                              : compare(b, a) == Ordering::Greater ? Ordering::Less
                                                                   : Ordering::Equal));
    if (a.sign() < 0) a = -a;
    if (b.sign() < 0) b = -b;
    REQUIRE(compare(a + b, Q::zero()) == Ordering::Greater);
    REQUIRE(compare(a * b, Q::zero()) == Ordering::Greater);
  }
}

TEST_CASE("property: standard part is a ring morphism on finite numbers") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    const auto a = randomSeries(rng, 0, 3), b = randomSeries(rng, 0, 3);
    REQUIRE(standardPart(a + b).value == standardPart(a).value + standardPart(b).value);
    REQUIRE(standardPart(a * b).value == standardPart(a).value * standardPart(b).value);
  }
}

TEST_CASE("property: asymptotic split is unique") {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 500; ++i) {
    const auto a = randomSeries(rng, 0, 3);
    const auto [r, dx] = asymptoticSplit(a);
    REQUIRE(classify(dx.isZero() ? Q::rho() : dx).magnitude == Magnitude::Infinitesimal);
    Rational other = randomRational(rng);
    if (other == r) other += 1;
    const auto diff = a - Q::constant(other);
    REQUIRE(classify(diff).magnitude != Magnitude::Infinitesimal);
  }
}

TEST_CASE("property: classify partitions nonzero numbers") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    const auto a = randomSeries(rng, -5, 5);
    const auto c = classify(a);
    const int mags = (c.magnitude == Magnitude::Infinitesimal) +
                     (c.magnitude == Magnitude::FiniteAppreciable) +
                     (c.magnitude == Magnitude::InfinitelyLarge);
    REQUIRE(mags == 1);
    REQUIRE(c.rho != RhoScale::RhoNull);
    REQUIRE(c.rho != RhoScale::RhoFiniteOnly);
    REQUIRE((c.magnitude == Magnitude::Infinitesimal) ==
            (c.rho == RhoScale::RhoInfinitesimalProper));
    REQUIRE((c.magnitude == Magnitude::FiniteAppreciable) == (c.rho == RhoScale::RhoConstant));
  }
}

TEST_CASE("property: rationalToLaurent is an order embedding") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> deg(0, 3);
  auto randomPoly = [&](bool nonzero) {
    Polynomial<Rational> p(static_cast<std::size_t>(deg(rng) + 1));
    for (auto& c : p) c = randomRational(rng);
    if (nonzero) p.back() = randomNonzeroRational(rng);
    return p;
  };
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    const RationalFunction<Rational> f(randomPoly(false), randomPoly(true));
    const RationalFunction<Rational> g(randomPoly(false), randomPoly(true));
    REQUIRE(rationalCompare(f, g) == compare(rationalToLaurent(f), rationalToLaurent(g)));
    ++checked;
  }
  CHECK(checked == 200);
}

TEST_CASE("text round trip") {
  CHECK(render(q({{0, 3}, {1, 1}, {2, -2}})) == "3 + 1*r^1 - 2*r^2");
  CHECK(render(Q::zero()) == "0");
  CHECK(render(q({{-1, Rational(-1, 2)}})) == "-1/2*r^-1");
  CHECK(parseLaurent<Rational>("3 + 1*r^1 - 2*r^2") == q({{0, 3}, {1, 1}, {2, -2}}));
  CHECK(parseLaurent<Rational>("0.25*r^3") == q({{3, Rational(1, 4)}}));
  CHECK_THROWS_AS(parseLaurent<Rational>("3 +"), SyntaxError);

  std::mt19937_64 rng(9);
  for (int i = 0; i < 300; ++i) {
    const auto a = randomSeries(rng, -4, 4);
    REQUIRE(parseLaurent<Rational>(render(a)) == a);
  }
}
