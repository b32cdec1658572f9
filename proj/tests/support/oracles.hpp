#pragma once

// Reference computations kept deliberately naive and separate from the
// library's algorithms.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "maninlab/int_matrix.hpp"

namespace maninlab::testing {

// Laplace expansion along the first row.
inline Integer laplace_det(const std::vector<std::vector<Integer>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Integer total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<Integer>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Integer> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    Integer term = m[0][c] * laplace_det(minor);
    total += (c % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  if (k > n) return;
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Invariant factors d_k = D_k / D_{k-1} from the gcds D_k of all k x k minors.
inline std::vector<Integer> invariant_factors_by_minors(const IntMatrix& a) {
  std::vector<Integer> divisors{1};
  const std::size_t kmax = std::min(a.rows(), a.cols());
  for (std::size_t k = 1; k <= kmax; ++k) {
    Integer g = 0;
    for_each_subset(a.rows(), k, [&](const std::vector<std::size_t>& rows) {
      for_each_subset(a.cols(), k, [&](const std::vector<std::size_t>& cols) {
        std::vector<std::vector<Integer>> m(k, std::vector<Integer>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) m[i][j] = a(rows[i], cols[j]);
        Integer d = laplace_det(m);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      });
    });
    if (g == 0) break;
    divisors.push_back(g);
  }
  std::vector<Integer> factors;
  for (std::size_t k = 1; k < divisors.size(); ++k) factors.push_back(divisors[k] / divisors[k - 1]);
  return factors;
}

// Primitive representatives of P^{n-1} with every |x_i| <= radius, by
// normalizing each vector of the box and collecting the distinct results.
inline std::set<std::vector<std::int64_t>> naive_projective_points(std::size_t n, std::int64_t radius,
                                                                    const std::function<bool(const std::vector<std::int64_t>&)>& keep) {
  std::set<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> x(n, -radius);
  for (;;) {
    std::int64_t g = 0;
    for (auto v : x) g = std::gcd(g, v);
    if (g != 0) {
      std::vector<std::int64_t> y(x);
      for (auto& v : y) v /= g;
      auto lead = std::find_if(y.begin(), y.end(), [](std::int64_t v) { return v != 0; });
      if (*lead < 0)
        for (auto& v : y) v = -v;
      if (keep(y)) out.insert(y);
    }
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (++x[i] <= radius) break;
      x[i] = -radius;
    }
    if (i == n) return out;
  }
}

}  // namespace maninlab::testing
