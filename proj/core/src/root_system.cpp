#include "maninlab/root_system.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "maninlab/error.hpp"
#include "rational_solve.hpp"

namespace maninlab {

namespace detail {

std::optional<std::vector<mpq_class>> solve_rational(QMatrix a, std::vector<mpq_class> b) {
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a[0].size();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && sgn(a[p][c]) == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    mpq_class inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      mpq_class f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i)
    if (sgn(b[i]) != 0) return std::nullopt;
  std::vector<mpq_class> x(n);
  for (std::size_t i = 0; i < r; ++i) x[pivot_cols[i]] = b[i];
  return x;
}

}  // namespace detail

namespace {

RationalVector unit(std::size_t dim, std::size_t i, const Rational& c = 1) {
  RationalVector v(dim);
  v[i] = c;
  return v;
}

RationalVector diff(std::size_t dim, std::size_t i, std::size_t j) {
  RationalVector v(dim);
  v[i] = 1;
  v[j] = -1;
  return v;
}

std::vector<RationalVector> e8_simple_roots(int count) {
  const std::size_t dim = 8;
  std::vector<RationalVector> s;
  RationalVector a1(dim, Rational(-1, 2));
  a1[0] = Rational(1, 2);
  a1[7] = Rational(1, 2);
  s.push_back(a1);
  RationalVector a2(dim);
  a2[0] = 1;
  a2[1] = 1;
  s.push_back(a2);
  for (std::size_t k = 3; k <= 8; ++k) s.push_back(diff(dim, k - 2, k - 3));
  s.resize(static_cast<std::size_t>(count));
  return s;
}

bool is_nonnegative(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return sgn(x) >= 0; });
}

Integer height(const IntVector& v) {
  Integer h = 0;
  for (const auto& x : v) h += x;
  return h;
}

}  // namespace

bool valid_type_rank(char type, int rank) noexcept {
  switch (type) {
    case 'A': return rank >= 1;
    case 'B': return rank >= 2;
    case 'C': return rank >= 2;
    case 'D': return rank >= 3;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

RootSystemData build_root_system(char type, int rank) {
  if (!valid_type_rank(type, rank)) {
    throw Error(ErrorKind::invalid_argument,
                std::string("unsupported root system ") + type + std::to_string(rank));
  }
  RootSystemData rs;
  rs.type_ = type;
  rs.rank_ = rank;
  const auto l = static_cast<std::size_t>(rank);
  auto& s = rs.simple_;
  switch (type) {
    case 'A':
      for (std::size_t i = 0; i < l; ++i) s.push_back(diff(l + 1, i, i + 1));
      break;
    case 'B':
      for (std::size_t i = 0; i + 1 < l; ++i) s.push_back(diff(l, i, i + 1));
      s.push_back(unit(l, l - 1));
      break;
    case 'C':
      for (std::size_t i = 0; i + 1 < l; ++i) s.push_back(diff(l, i, i + 1));
      s.push_back(unit(l, l - 1, 2));
      rs.scale_ = Rational(1, 2);
      break;
    case 'D': {
      for (std::size_t i = 0; i + 1 < l; ++i) s.push_back(diff(l, i, i + 1));
      RationalVector last(l);
      last[l - 2] = 1;
      last[l - 1] = 1;
      s.push_back(last);
      break;
    }
    case 'E':
      s = e8_simple_roots(rank);
      break;
    case 'F': {
      s.push_back(diff(4, 1, 2));
      s.push_back(diff(4, 2, 3));
      s.push_back(unit(4, 3));
      s.push_back(RationalVector{Rational(1, 2), Rational(-1, 2), Rational(-1, 2), Rational(-1, 2)});
      break;
    }
    case 'G':
      s.push_back(diff(3, 0, 1));
      s.push_back(RationalVector{-2, 1, 1});
      rs.scale_ = Rational(1, 3);
      break;
  }

  rs.sq_lengths_.resize(l);
  for (std::size_t i = 0; i < l; ++i) rs.sq_lengths_[i] = rs.pair(s[i], s[i]);
  rs.cartan_ = IntMatrix(l, l);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) {
      Rational c = 2 * rs.pair(s[i], s[j]) / rs.sq_lengths_[j];
      if (c.get_den() != 1) throw Error(ErrorKind::invalid_argument, "non-integral Cartan entry");
      rs.cartan_(i, j) = c.get_num();
    }

  // Reflection closure in simple-root coordinates: <beta, alpha_i^vee> = sum_j beta_j c_ji.
  std::set<IntVector> seen;
  std::deque<IntVector> queue;
  for (std::size_t i = 0; i < l; ++i) {
    IntVector e(l);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    IntVector beta = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < l; ++i) {
      Integer k = 0;
      for (std::size_t j = 0; j < l; ++j) k += beta[j] * rs.cartan_(j, i);
      if (sgn(k) == 0) continue;
      IntVector r = beta;
      r[i] -= k;
      if (!is_nonnegative(r) || is_zero_vector(r)) continue;
      if (seen.insert(r).second) queue.push_back(r);
    }
  }
  rs.positive_.assign(seen.begin(), seen.end());
  std::stable_sort(rs.positive_.begin(), rs.positive_.end(),
                   [](const IntVector& a, const IntVector& b) { return height(a) < height(b); });
  return rs;
}

bool RootSystemData::simply_laced() const noexcept {
  return std::all_of(sq_lengths_.begin(), sq_lengths_.end(), [](const Rational& x) { return x == 2; });
}

Rational RootSystemData::pair(std::span<const Rational> x, std::span<const Rational> y) const {
  if (x.size() != y.size()) throw Error(ErrorKind::invalid_argument, "pairing of vectors of different length");
  Rational acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
  return scale_ * acc;
}

RationalVector RootSystemData::to_ambient(std::span<const Integer> simple_coords) const {
  if (simple_coords.size() != simple_.size()) throw Error(ErrorKind::invalid_argument, "root coordinate length mismatch");
  RationalVector v(ambient_dim());
  for (std::size_t i = 0; i < simple_.size(); ++i) {
    if (sgn(simple_coords[i]) == 0) continue;
    Rational c(simple_coords[i]);
    for (std::size_t k = 0; k < v.size(); ++k) v[k] += c * simple_[i][k];
  }
  return v;
}

RationalVector RootSystemData::coroot(std::span<const Rational> root) const {
  Rational f = 2 / pair(root, root);
  RationalVector v(root.begin(), root.end());
  for (auto& x : v) x *= f;
  return v;
}

RationalVector RootSystemData::lowest_root_ambient() const {
  RationalVector v = to_ambient(highest_root());
  for (auto& x : v) x = -x;
  return v;
}

WeightInRootBasis two_rho_in_simple_basis(const RootSystemData& rs) {
  WeightInRootBasis w;
  w.coefficients.assign(static_cast<std::size_t>(rs.rank()), Rational(0));
  for (const auto& beta : rs.positive_roots())
    for (std::size_t i = 0; i < beta.size(); ++i) w.coefficients[i] += Rational(beta[i]);
  return w;
}

WeightInRootBasis weight_in_simple_root_basis(const RootSystemData& rs, std::span<const Rational> fundamental_coords) {
  const auto l = static_cast<std::size_t>(rs.rank());
  if (fundamental_coords.size() != l) {
    throw Error(ErrorKind::invalid_argument, "expected " + std::to_string(l) + " fundamental-weight coordinates, got " +
                                                 std::to_string(fundamental_coords.size()));
  }
  detail::QMatrix ct(l, std::vector<mpq_class>(l));
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) ct[i][j] = Rational(rs.cartan()(j, i));
  auto x = detail::solve_rational(ct, std::vector<mpq_class>(fundamental_coords.begin(), fundamental_coords.end()));
  return WeightInRootBasis{std::move(*x)};
}

std::vector<Rational> fundamental_coordinates(const RootSystemData& rs, const WeightInRootBasis& w) {
  const auto l = static_cast<std::size_t>(rs.rank());
  if (w.coefficients.size() != l) throw Error(ErrorKind::invalid_argument, "weight coefficient length mismatch");
  std::vector<Rational> c(l);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) c[i] += w.coefficients[j] * Rational(rs.cartan()(j, i));
  return c;
}

std::size_t to_internal_vertex(const RootSystemData& rs, std::size_t vertex, Labeling labeling) {
  if (vertex > static_cast<std::size_t>(rs.rank())) {
    throw Error(ErrorKind::invalid_argument, "vertex " + std::to_string(vertex) + " out of range for rank " +
                                                 std::to_string(rs.rank()));
  }
  if (labeling == Labeling::long_first && rs.type() == 'G' && vertex != 0) return 3 - vertex;
  return vertex;
}

std::size_t to_external_vertex(const RootSystemData& rs, std::size_t vertex, Labeling labeling) {
  return to_internal_vertex(rs, vertex, labeling);
}

std::vector<Integer> affine_marks(const RootSystemData& rs, Labeling labeling) {
  const auto l = static_cast<std::size_t>(rs.rank());
  std::vector<Integer> internal(l + 1);
  internal[0] = 1;
  for (std::size_t i = 0; i < l; ++i) internal[i + 1] = rs.highest_root()[i];
  std::vector<Integer> out(l + 1);
  for (std::size_t v = 0; v <= l; ++v) out[v] = internal[to_internal_vertex(rs, v, labeling)];
  return out;
}

std::vector<Integer> dual_marks(const RootSystemData& rs, Labeling labeling) {
  const auto l = static_cast<std::size_t>(rs.rank());
  std::vector<Integer> a = affine_marks(rs, Labeling::bourbaki);
  std::vector<Integer> internal(l + 1);
  internal[0] = a[0];
  for (std::size_t i = 0; i < l; ++i) {
    Rational d = Rational(a[i + 1]) * rs.squared_lengths()[i] / 2;
    if (d.get_den() != 1) throw Error(ErrorKind::invalid_argument, "non-integral dual mark");
    internal[i + 1] = d.get_num();
  }
  std::vector<Integer> out(l + 1);
  for (std::size_t v = 0; v <= l; ++v) out[v] = internal[to_internal_vertex(rs, v, labeling)];
  return out;
}

std::vector<RationalVector> affine_simple_roots(const RootSystemData& rs) {
  std::vector<RationalVector> out;
  out.push_back(rs.lowest_root_ambient());
  for (const auto& s : rs.simple_roots()) out.push_back(s);
  return out;
}

}  // namespace maninlab
