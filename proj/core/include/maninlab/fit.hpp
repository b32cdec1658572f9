#pragma once

#include <cstddef>
#include <span>

#include "maninlab/enumerate.hpp"

namespace maninlab {

struct FitSample {
  double t = 0;
  double n = 0;
};

// N ~ c T^a (log T)^(b-1).
struct FitResult {
  double a_hat = 0;
  double b_hat = 0;
  double c_hat = 0;
  double residual = 0;  // Euclidean norm of the log-residuals
  std::size_t used = 0;  // samples in the tail window

  friend bool operator==(const FitResult&, const FitResult&) = default;
};

inline constexpr std::size_t kMinFitSamples = 6;

// Least squares on the last window fraction of the usable samples (N > 0,
// T > e); at least three points enter the fit.
FitResult fit_exponents(std::span<const FitSample> samples, double window = 0.5);
FitResult fit_exponents(const CountSeries& series, double window = 0.5);

}  // namespace maninlab
