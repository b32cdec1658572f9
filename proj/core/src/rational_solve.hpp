#pragma once

#include <optional>
#include <vector>

#include <gmpxx.h>

namespace maninlab::detail {

using QMatrix = std::vector<std::vector<mpq_class>>;

// Exact Gauss-Jordan solve of a x = b. Returns nullopt when inconsistent;
// free variables are set to zero when the system is underdetermined.
std::optional<std::vector<mpq_class>> solve_rational(QMatrix a, std::vector<mpq_class> b);

}  // namespace maninlab::detail
