#pragma once

#include <cstddef>

#include "maninlab/root_system.hpp"

namespace maninlab {

// Sum of the positive roots of PGL_2n that are not fixed by the involution
// defining PSp_2n, restricted to the split torus and written in the basis
// alpha~_i = alpha_{i,i+1} + beta_{i,i+1}, i = 1..n-1.
struct RestrictedSum {
  WeightInRootBasis coefficients;
  bool involution_compatible = false;  // -sigma maps the non-fixed positive roots into the positive roots
  std::size_t fixed_roots = 0;         // |Phi_0 cap Phi^+|
  std::size_t moved_roots = 0;         // |Phi_1 cap Phi^+|
};

RestrictedSum restricted_sum_details(int n);
WeightInRootBasis restricted_sum_psl2n_psp(int n);

// The closed form 2 i (2n - i) quoted alongside this example.
WeightInRootBasis restricted_sum_closed_form(int n);

}  // namespace maninlab
