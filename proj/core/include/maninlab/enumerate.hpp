#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "maninlab/height.hpp"
#include "maninlab/variety.hpp"

namespace maninlab {

// A: literal scan of every canonical-sign vector in the box |x_i| < T.
// B: closed forms, inclusion-exclusion and solving one coordinate from an
//    equation; a specialised counter for the Pfaffian model under max norm.
enum class Engine { box_scan, pruned };

std::string_view to_string(Engine e) noexcept;
Engine parse_engine(std::string_view s);

struct CensusOptions {
  Engine engine = Engine::pruned;
  unsigned threads = 1;
};

// Point counts keyed by height level: the height itself for the max norm, the
// weighted sum of squares for the Euclidean norm.
class HeightTally {
 public:
  HeightTally() = default;
  HeightTally(Norm norm, std::vector<std::uint64_t> by_level);

  Norm norm() const noexcept { return norm_; }
  const std::vector<std::uint64_t>& by_level() const noexcept { return by_level_; }
  // Number of points of height < t; t must not exceed the tally's range.
  std::uint64_t count_below(double t) const;
  std::uint64_t total() const;

  friend bool operator==(const HeightTally&, const HeightTally&) = default;

 private:
  Norm norm_ = Norm::max;
  std::vector<std::uint64_t> by_level_;
};

// Largest integer coordinate allowed by H < t, and the largest level below t.
std::int64_t box_radius(double t);
std::uint64_t level_limit(double t, Norm norm);

HeightTally tally_points(const VarietySpec& spec, double t_max, const HeightSpec& h, const CensusOptions& opts = {});
std::uint64_t enumerate_points(const VarietySpec& spec, double t, const HeightSpec& h, const CensusOptions& opts = {});

// Number of vectors engine A visits for t.
double box_scan_cost(const VarietySpec& spec, double t);

struct CountSample {
  double t = 0;
  std::uint64_t n = 0;

  friend bool operator==(const CountSample&, const CountSample&) = default;
};

struct CountSeries {
  std::vector<CountSample> samples;

  friend bool operator==(const CountSeries&, const CountSeries&) = default;
};

void validate(const CountSeries& s);

// 1.5, 2.5, ..., t_{k+1} = max(t_k + 1, floor(1.3 t_k) + 0.5) while <= t_max.
std::vector<double> sample_schedule(double t_max);
CountSeries series_from_tally(const HeightTally& tally, std::span<const double> ts);
CountSeries count_series(const VarietySpec& spec, double t_max, const HeightSpec& h, const CensusOptions& opts = {});

}  // namespace maninlab
