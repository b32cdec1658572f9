#include "maninlab/restricted_sum.hpp"

#include <set>
#include <vector>

#include "maninlab/error.hpp"
#include "rational_solve.hpp"

namespace maninlab {
namespace {

// Coordinates (s_1..s_n, t_1..t_n) on the diagonal torus.
using Root = std::vector<long>;

Root make_root(int n, int s_pos, int s_neg, int t_pos, int t_neg) {
  Root r(static_cast<std::size_t>(2 * n), 0);
  if (s_pos >= 0) r[static_cast<std::size_t>(s_pos)] += 1;
  if (s_neg >= 0) r[static_cast<std::size_t>(s_neg)] -= 1;
  if (t_pos >= 0) r[static_cast<std::size_t>(n + t_pos)] += 1;
  if (t_neg >= 0) r[static_cast<std::size_t>(n + t_neg)] -= 1;
  return r;
}

Root negate(Root r) {
  for (auto& x : r) x = -x;
  return r;
}

// sigma: s_i -> -t_i, t_i -> -s_i
Root sigma(const Root& r, int n) {
  Root out(r.size());
  for (int i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = -r[static_cast<std::size_t>(n + i)];
    out[static_cast<std::size_t>(n + i)] = -r[static_cast<std::size_t>(i)];
  }
  return out;
}

}  // namespace

RestrictedSum restricted_sum_details(int n) {
  if (n < 2) throw Error(ErrorKind::invalid_argument, "restricted sum needs n >= 2");

  // Positive system from the order s_1 > t_1 > s_2 > t_2 > ...: alpha_ij and
  // beta_ij for i < j, gamma_kl for k <= l, -gamma_kl for k > l. Declaring
  // every gamma_kl positive also gives a positive system, but -sigma does not
  // map its moved roots to positive roots.
  std::vector<Root> positive;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      positive.push_back(make_root(n, i, j, -1, -1));
      positive.push_back(make_root(n, -1, -1, i, j));
    }
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      Root g = make_root(n, k, -1, -1, l);
      positive.push_back(k <= l ? g : negate(g));
    }

  RestrictedSum out;
  std::vector<Root> moved;
  for (const auto& r : positive) {
    if (sigma(r, n) == r) {
      ++out.fixed_roots;
    } else {
      moved.push_back(r);
    }
  }
  out.moved_roots = moved.size();

  std::set<Root> positive_set(positive.begin(), positive.end());
  out.involution_compatible = true;
  for (const auto& r : moved)
    if (!positive_set.count(negate(sigma(r, n)))) out.involution_compatible = false;

  // Restrict to t_1 = {s_i = t_i = e_i}.
  const auto un = static_cast<std::size_t>(n);
  std::vector<mpq_class> restricted(un, 0);
  for (const auto& r : moved)
    for (std::size_t i = 0; i < un; ++i) restricted[i] += r[i] + r[un + i];

  // alpha~_i restricts to 2(e_i - e_{i+1}).
  detail::QMatrix basis(un, std::vector<mpq_class>(un - 1, 0));
  for (std::size_t i = 0; i + 1 < un; ++i) {
    basis[i][i] = 2;
    basis[i + 1][i] = -2;
  }
  auto x = detail::solve_rational(basis, restricted);
  if (!x) throw Error(ErrorKind::invalid_argument, "restricted sum is not in the span of the restricted simple roots");
  out.coefficients.coefficients = std::move(*x);
  return out;
}

WeightInRootBasis restricted_sum_psl2n_psp(int n) { return restricted_sum_details(n).coefficients; }

WeightInRootBasis restricted_sum_closed_form(int n) {
  if (n < 2) throw Error(ErrorKind::invalid_argument, "restricted sum needs n >= 2");
  WeightInRootBasis w;
  for (int i = 1; i < n; ++i) w.coefficients.emplace_back(2 * i * (2 * n - i));
  return w;
}

}  // namespace maninlab
