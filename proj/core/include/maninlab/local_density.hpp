#pragma once

#include <cstdint>

#include "maninlab/int_matrix.hpp"
#include "maninlab/variety.hpp"

namespace maninlab {

struct LocalDensity {
  std::int64_t p = 0;
  std::uint64_t count = 0;  // points of the affine chart over F_p
  std::size_t dim = 0;
  Rational density;         // count / p^dim

  friend bool operator==(const LocalDensity& x, const LocalDensity& y) {
    return x.p == y.p && x.count == y.count && x.dim == y.dim && x.density == y.density;
  }
};

inline constexpr std::uint64_t kDefaultDensityBudget = 100'000'000;

bool is_prime(std::int64_t p) noexcept;

// Sets the chart coordinate to 1 and scans the remaining ones over F_p.
// Rejects with budget_exceeded when p^(#scanned coordinates) exceeds budget.
LocalDensity local_density(const VarietySpec& spec, std::int64_t p, std::uint64_t budget = kDefaultDensityBudget);

}  // namespace maninlab
