#include <cmath>

#include "maninlab/enumerate.hpp"
#include "maninlab/error.hpp"

namespace maninlab {

void validate(const CountSeries& s) {
  for (std::size_t i = 1; i < s.samples.size(); ++i) {
    if (!(s.samples[i].t > s.samples[i - 1].t)) throw Error(ErrorKind::invalid_argument, "series heights must increase");
    if (s.samples[i].n < s.samples[i - 1].n) throw Error(ErrorKind::invalid_argument, "series counts must not decrease");
  }
  for (const auto& x : s.samples)
    if (!(x.t > 0)) throw Error(ErrorKind::invalid_argument, "series heights must be positive");
}

std::vector<double> sample_schedule(double t_max) {
  if (!(t_max > 2)) throw Error(ErrorKind::invalid_argument, "series needs t_max > 2");
  std::vector<double> ts;
  for (double t = 1.5; t <= t_max; t = std::max(t + 1.0, std::floor(1.3 * t) + 0.5)) ts.push_back(t);
  return ts;
}

CountSeries series_from_tally(const HeightTally& tally, std::span<const double> ts) {
  CountSeries s;
  for (double t : ts) s.samples.push_back({t, tally.count_below(t)});
  return s;
}

CountSeries count_series(const VarietySpec& spec, double t_max, const HeightSpec& h, const CensusOptions& opts) {
  auto ts = sample_schedule(t_max);
  HeightTally tally = tally_points(spec, ts.back(), h, opts);
  return series_from_tally(tally, ts);
}

}  // namespace maninlab
