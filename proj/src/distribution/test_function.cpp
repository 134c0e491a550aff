#include "asymptotica/distribution/test_function.hpp"

#include <algorithm>
#include <cmath>

#include "asymptotica/errors.hpp"
#include "asymptotica/numerics/quadrature.hpp"

namespace asymptotica::distribution {

namespace {

using Poly = std::vector<double>;

double horner(const Poly& p, double x) {
  double s = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) s = s * x + *it;
  return s;
}

Poly add(Poly a, const Poly& b) {
  if (b.size() > a.size()) a.resize(b.size(), 0.0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

Poly diff(const Poly& p) {
  if (p.size() <= 1) return {};
  Poly r(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) r[i - 1] = i * p[i];
  return r;
}

/// scale * Q(s) (1 - s^2)^(-q) exp(-1/(1 - s^2)), s = (x - center)/r.
class BumpImpl : public TestFunction::Impl {
 public:
  BumpImpl(Poly Q, int q, double scale, double r, double center)
      : Q_(std::move(Q)), q_(q), scale_(scale), r_(r), c_(center) {}

  double value(double x) const override {
    const double s = (x - c_) / r_;
    if (!(std::abs(s) < 1.0)) return 0.0;
    const double u = 1.0 - s * s;
    return scale_ * horner(Q_, s) * std::exp(-q_ * std::log(u) - 1.0 / u);
  }

  std::shared_ptr<const Impl> derivative() const override {
    // d/ds [Q u^-q E] = u^-(q+2) E [Q' u^2 + 2 q s u Q - 2 s Q],  u = 1 - s^2.
    const Poly u{1.0, 0.0, -1.0};
    Poly next = mul(diff(Q_), mul(u, u));
    next = add(next, mul(Poly{0.0, 2.0 * q_}, mul(u, Q_)));
    next = add(next, mul(Poly{0.0, -2.0}, Q_));
    return std::make_shared<BumpImpl>(std::move(next), q_ + 2, scale_ / r_, r_, c_);
  }

  Interval support() const override { return {c_ - r_, c_ + r_}; }

 private:
  Poly Q_;
  int q_;
  double scale_, r_, c_;
};

class StepImpl : public TestFunction::Impl {
 public:
  explicit StepImpl(mollifier::GridFunction g) : g_(std::move(g)) {}
  double value(double x) const override { return g_.slope(x); }
  std::shared_ptr<const Impl> derivative() const override {
    throw NumericError("a piecewise-linear test function has only one derivative");
  }
  Interval support() const override { return {g_.lo(), g_.hi()}; }
  std::vector<double> breakpoints() const override { return g_.x(); }

 private:
  mollifier::GridFunction g_;
};

class SampledImpl : public TestFunction::Impl {
 public:
  explicit SampledImpl(mollifier::GridFunction g) : g_(std::move(g)) {}
  double value(double x) const override { return g_(x); }
  std::shared_ptr<const Impl> derivative() const override { return std::make_shared<StepImpl>(g_); }
  Interval support() const override { return {g_.lo(), g_.hi()}; }
  std::vector<double> breakpoints() const override { return g_.x(); }

 private:
  mollifier::GridFunction g_;
};

class AffineImpl : public TestFunction::Impl {
 public:
  AffineImpl(std::shared_ptr<const Impl> inner, double a, double b, double c)
      : inner_(std::move(inner)), a_(a), b_(b), c_(c) {}
  double value(double t) const override { return c_ * inner_->value(a_ * t + b_); }
  std::shared_ptr<const Impl> derivative() const override {
    return std::make_shared<AffineImpl>(inner_->derivative(), a_, b_, c_ * a_);
  }
  Interval support() const override {
    const Interval s = inner_->support();
    const double p = (s.lo - b_) / a_, q = (s.hi - b_) / a_;
    return {std::min(p, q), std::max(p, q)};
  }
  std::vector<double> breakpoints() const override {
    std::vector<double> r;
    for (double p : inner_->breakpoints()) r.push_back((p - b_) / a_);
    std::sort(r.begin(), r.end());
    return r;
  }

 private:
  std::shared_ptr<const Impl> inner_;
  double a_, b_, c_;
};

class SmoothedImpl : public TestFunction::Impl {
 public:
  SmoothedImpl(mollifier::GridFunction phi, std::shared_ptr<const Impl> tau)
      : phi_(std::move(phi)), tau_(std::move(tau)) {}

  double value(double x) const override {
    const Interval s = tau_->support();
    const double lo = std::max(phi_.lo(), x - s.hi), hi = std::min(phi_.hi(), x - s.lo);
    if (!(lo < hi)) return 0.0;
    std::vector<double> cuts(phi_.x());
    for (double p : tau_->breakpoints()) cuts.push_back(x - p);
    return numerics::integrate([&](double t) { return phi_(t) * tau_->value(x - t); }, lo, hi, cuts);
  }
  std::shared_ptr<const Impl> derivative() const override {
    return std::make_shared<SmoothedImpl>(phi_, tau_->derivative());
  }
  Interval support() const override {
    const Interval s = tau_->support();
    return {s.lo + phi_.lo(), s.hi + phi_.hi()};
  }

 private:
  mollifier::GridFunction phi_;
  std::shared_ptr<const Impl> tau_;
};

class LinearImpl : public TestFunction::Impl {
 public:
  explicit LinearImpl(std::vector<std::pair<double, std::shared_ptr<const Impl>>> terms)
      : terms_(std::move(terms)) {}
  double value(double x) const override {
    double s = 0.0;
    for (const auto& [c, f] : terms_) s += c * f->value(x);
    return s;
  }
  std::shared_ptr<const Impl> derivative() const override {
    std::vector<std::pair<double, std::shared_ptr<const Impl>>> d;
    for (const auto& [c, f] : terms_) d.emplace_back(c, f->derivative());
    return std::make_shared<LinearImpl>(std::move(d));
  }
  Interval support() const override {
    Interval r = terms_.front().second->support();
    for (const auto& t : terms_) {
      const Interval s = t.second->support();
      r.lo = std::min(r.lo, s.lo);
      r.hi = std::max(r.hi, s.hi);
    }
    return r;
  }
  std::vector<double> breakpoints() const override {
    std::vector<double> r;
    for (const auto& t : terms_) {
      const auto b = t.second->breakpoints();
      r.insert(r.end(), b.begin(), b.end());
    }
    std::sort(r.begin(), r.end());
    return r;
  }

 private:
  std::vector<std::pair<double, std::shared_ptr<const Impl>>> terms_;
};

}  // namespace

TestFunction::TestFunction(std::shared_ptr<const Impl> impl, std::string id)
    : impl_(std::move(impl)), id_(std::move(id)) {}

TestFunction TestFunction::bump(std::vector<double> poly, double radius, double center, std::string id) {
  if (!(radius > 0)) throw InvalidElement("bump radius must be positive");
  if (poly.empty()) poly = {0.0};
  // Rewrite p(x - center) as P(s) with x - center = r s.
  double rp = 1.0;
  for (double& c : poly) {
    c *= rp;
    rp *= radius;
  }
  return TestFunction(std::make_shared<BumpImpl>(std::move(poly), 0, 1.0, radius, center), std::move(id));
}

TestFunction TestFunction::sampled(mollifier::GridFunction g, std::string id) {
  return TestFunction(std::make_shared<SampledImpl>(std::move(g)), std::move(id));
}

TestFunction TestFunction::smoothed(mollifier::GridFunction phi, const TestFunction& tau) {
  return TestFunction(std::make_shared<SmoothedImpl>(std::move(phi), tau.impl_), "smoothed(" + tau.id() + ")");
}

TestFunction TestFunction::linear(std::vector<std::pair<double, TestFunction>> terms, std::string id) {
  if (terms.empty()) throw InvalidElement("linear combination needs at least one term");
  std::vector<std::pair<double, std::shared_ptr<const Impl>>> t;
  for (auto& [c, f] : terms) t.emplace_back(c, f.impl_);
  return TestFunction(std::make_shared<LinearImpl>(std::move(t)), std::move(id));
}

TestFunction TestFunction::derivative(int k) const {
  if (k < 0) throw InvalidElement("derivative order must be >= 0");
  std::shared_ptr<const Impl> d = impl_;
  for (int i = 0; i < k; ++i) d = d->derivative();
  return TestFunction(std::move(d), k == 0 ? id_ : id_ + "^(" + std::to_string(k) + ")");
}

TestFunction TestFunction::affine(double a, double b, double c) const {
  if (a == 0.0) throw InvalidElement("affine map needs a nonzero slope");
  return TestFunction(std::make_shared<AffineImpl>(impl_, a, b, c), id_);
}

std::vector<TestFunction> defaultPanel() {
  return {
      TestFunction::bump({1.0}, 1.0, 0.1, "bump_r1_c0.1"),
      TestFunction::bump({1.0}, 1.5, 0.3, "bump_r1.5_c0.3"),
      TestFunction::bump({1.0, 1.0}, 1.2, -0.2, "bump_linear"),
      TestFunction::bump({2.0, 0.0, -1.0, 0.5}, 2.0, 0.1, "bump_cubic"),
  };
}

}  // namespace asymptotica::distribution
