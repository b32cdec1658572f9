#include "maninlab/smith.hpp"

#include <optional>
#include <utility>

namespace maninlab {
namespace {

struct Work {
  IntMatrix d, u, u_inv, v;

  void swap_rows(std::size_t a, std::size_t b) {
    d.swap_rows(a, b);
    u.swap_rows(a, b);
    u_inv.swap_cols(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    d.swap_cols(a, b);
    v.swap_cols(a, b);
  }
  // row dst += q row src; the inverse picks up col src -= q col dst.
  void add_row(std::size_t dst, std::size_t src, const Integer& q) {
    d.add_row_multiple(dst, src, q);
    u.add_row_multiple(dst, src, q);
    u_inv.add_col_multiple(src, dst, -q);
  }
  void add_col(std::size_t dst, std::size_t src, const Integer& q) {
    d.add_col_multiple(dst, src, q);
    v.add_col_multiple(dst, src, q);
  }
  void negate_row(std::size_t i) {
    d.negate_row(i);
    u.negate_row(i);
    u_inv.negate_col(i);
  }
};

std::optional<std::pair<std::size_t, std::size_t>> min_entry(const IntMatrix& d, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Integer best_abs;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (sgn(d(i, j)) == 0) continue;
      Integer a = abs(d(i, j));
      if (!best || a < best_abs) {
        best = {i, j};
        best_abs = a;
        if (best_abs == 1) return best;
      }
    }
  return best;
}

// Clears row t and column t beyond the pivot, moving smaller remainders into the
// pivot slot until everything divides.
void clear_cross(Work& w, std::size_t t) {
  IntMatrix& d = w.d;
  for (;;) {
    bool dirty = false;
    for (std::size_t i = t + 1; i < d.rows(); ++i) {
      if (sgn(d(i, t)) == 0) continue;
      Integer q = d(i, t) / d(t, t);
      w.add_row(i, t, -q);
      if (sgn(d(i, t)) != 0) dirty = true;
    }
    for (std::size_t j = t + 1; j < d.cols(); ++j) {
      if (sgn(d(t, j)) == 0) continue;
      Integer q = d(t, j) / d(t, t);
      w.add_col(j, t, -q);
      if (sgn(d(t, j)) != 0) dirty = true;
    }
    if (!dirty) return;
    std::size_t bi = t, bj = t;
    Integer best = abs(d(t, t));
    for (std::size_t i = t + 1; i < d.rows(); ++i)
      if (sgn(d(i, t)) != 0 && abs(d(i, t)) < best) {
        best = abs(d(i, t));
        bi = i;
        bj = t;
      }
    for (std::size_t j = t + 1; j < d.cols(); ++j)
      if (sgn(d(t, j)) != 0 && abs(d(t, j)) < best) {
        best = abs(d(t, j));
        bi = t;
        bj = j;
      }
    w.swap_rows(t, bi);
    w.swap_cols(t, bj);
  }
}

}  // namespace

std::vector<Integer> SmithDecomposition::diagonal() const {
  std::vector<Integer> out;
  out.reserve(rank);
  for (std::size_t i = 0; i < rank; ++i) out.push_back(D(i, i));
  return out;
}

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  Work w{a, IntMatrix::identity(m), IntMatrix::identity(m), IntMatrix::identity(n)};

  std::size_t t = 0;
  while (t < m && t < n) {
    auto pivot = min_entry(w.d, t);
    if (!pivot) break;
    w.swap_rows(t, pivot->first);
    w.swap_cols(t, pivot->second);
    for (;;) {
      clear_cross(w, t);
      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < m && !offending; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(w.d(i, j).get_mpz_t(), w.d(t, t).get_mpz_t())) {
            offending = i;
            break;
          }
      if (!offending) break;
      w.add_row(t, *offending, 1);
    }
    if (sgn(w.d(t, t)) < 0) w.negate_row(t);
    ++t;
  }

  SmithDecomposition out;
  out.U = std::move(w.u);
  out.D = std::move(w.d);
  out.V = std::move(w.v);
  out.U_inverse = std::move(w.u_inv);
  out.source = a;
  out.rank = t;
  return out;
}

IntMatrix integer_kernel(const IntMatrix& a) {
  SmithDecomposition s = smith_normal_form(a);
  return s.V.block(0, s.rank, a.cols(), a.cols() - s.rank);
}

std::size_t matrix_rank(const IntMatrix& a) { return smith_normal_form(a).rank; }

}  // namespace maninlab
