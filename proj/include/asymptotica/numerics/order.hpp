#pragma once

#include <utility>
#include <vector>

namespace asymptotica::numerics {

constexpr double kDefaultFloor = 1e-13;

/// Fitted order of a quantity measured at several epsilons: log|value| ~ slope log eps + intercept.
struct OrderEstimate {
  std::vector<std::pair<double, double>> samples;
  double slope = 0.0;
  double intercept = 0.0;
  double rSquared = 0.0;
  int excludedAtFloor = 0;
  bool inconclusive = false;

  int usable() const { return static_cast<int>(samples.size()) - excludedAtFloor; }
};

/// Least squares in log-log coordinates. Samples with |value| <= floor are dropped and
/// counted; fewer than three usable samples leaves the estimate inconclusive.
OrderEstimate fitSlope(const std::vector<std::pair<double, double>>& samples,
                       double floor = kDefaultFloor);

/// Decades spanned by the epsilons of a sample list.
double decadesSpanned(const std::vector<std::pair<double, double>>& samples);

}  // namespace asymptotica::numerics
