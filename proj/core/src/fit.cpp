#include "maninlab/fit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "maninlab/error.hpp"

namespace maninlab {

FitResult fit_exponents(std::span<const FitSample> samples, double window) {
  if (!(window > 0 && window <= 1)) throw Error(ErrorKind::invalid_argument, "fit window must lie in (0, 1]");
  std::vector<FitSample> usable;
  for (const auto& s : samples)
    if (s.n > 0 && s.t > std::numbers::e) usable.push_back(s);
  if (usable.size() < kMinFitSamples) {
    throw Error(ErrorKind::invalid_argument, "fit needs at least " + std::to_string(kMinFitSamples) +
                                                 " samples with N > 0 and T > e, got " + std::to_string(usable.size()));
  }
  auto take = static_cast<std::size_t>(std::ceil(window * static_cast<double>(usable.size())));
  take = std::clamp<std::size_t>(take, 3, usable.size());
  const std::size_t first = usable.size() - take;

  Eigen::MatrixXd design(static_cast<Eigen::Index>(take), 3);
  Eigen::VectorXd rhs(static_cast<Eigen::Index>(take));
  for (std::size_t i = 0; i < take; ++i) {
    const auto& s = usable[first + i];
    const double lt = std::log(s.t);
    const auto r = static_cast<Eigen::Index>(i);
    design(r, 0) = 1.0;
    design(r, 1) = lt;
    design(r, 2) = std::log(lt);
    rhs(r) = std::log(s.n);
  }
  Eigen::Vector3d coef = design.colPivHouseholderQr().solve(rhs);
  FitResult out;
  out.c_hat = std::exp(coef(0));
  out.a_hat = coef(1);
  out.b_hat = coef(2) + 1.0;
  out.residual = (design * coef - rhs).norm();
  out.used = take;
  return out;
}

FitResult fit_exponents(const CountSeries& series, double window) {
  std::vector<FitSample> samples;
  for (const auto& s : series.samples) samples.push_back({s.t, static_cast<double>(s.n)});
  return fit_exponents(samples, window);
}

}  // namespace maninlab
