#include "maninlab/local_density.hpp"

#include <vector>

#include "maninlab/error.hpp"

namespace maninlab {

bool is_prime(std::int64_t p) noexcept {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

LocalDensity local_density(const VarietySpec& spec, std::int64_t p, std::uint64_t budget) {
  validate(spec);
  if (!is_prime(p)) throw Error(ErrorKind::invalid_argument, std::to_string(p) + " is not prime");
  if (!spec.affine_chart) throw Error(ErrorKind::invalid_argument, "variety '" + spec.name + "' has no affine chart");
  const std::size_t n = spec.coordinates();
  const std::size_t chart = *spec.affine_chart;

  Integer required = 1;
  for (std::size_t i = 0; i + 1 < n; ++i) required *= p;
  if (required > Integer(std::to_string(budget))) {
    throw Error(ErrorKind::budget_exceeded,
                "local density needs " + required.get_str() + " evaluations, budget is " + std::to_string(budget));
  }

  std::vector<std::int64_t> x(n, 0);
  x[chart] = 1;
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < n; ++i)
    if (i != chart) free.push_back(i);

  std::uint64_t count = 0;
  for (;;) {
    bool ok = true;
    for (const auto& e : spec.equations)
      if (e.evaluate_mod(x, p) != 0) {
        ok = false;
        break;
      }
    if (ok)
      for (const auto& e : spec.inequations)
        if (e.evaluate_mod(x, p) == 0) {
          ok = false;
          break;
        }
    if (ok) ++count;

    std::size_t i = 0;
    for (; i < free.size(); ++i) {
      if (++x[free[i]] < p) break;
      x[free[i]] = 0;
    }
    if (i == free.size()) break;
  }

  Integer denom = 1;
  for (std::size_t i = 0; i < spec.dim_U; ++i) denom *= p;
  Rational density(Integer(std::to_string(count)), denom);
  density.canonicalize();
  return {p, count, spec.dim_U, density};
}

}  // namespace maninlab
