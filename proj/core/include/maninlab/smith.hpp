#pragma once

#include <cstddef>
#include <vector>

#include "maninlab/int_matrix.hpp"

namespace maninlab {

// U * source * V = D, U and V unimodular, D diagonal with d_1 | d_2 | ... | d_rank.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  IntMatrix source;
  IntMatrix U_inverse;
  std::size_t rank = 0;

  std::vector<Integer> diagonal() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

// Columns form a Z-basis of {x : a x = 0}.
IntMatrix integer_kernel(const IntMatrix& a);

std::size_t matrix_rank(const IntMatrix& a);

}  // namespace maninlab
