#include "maninlab/abelian_group.hpp"

#include <sstream>
#include <utility>

#include "maninlab/error.hpp"

namespace maninlab {

FinAbGroup::FinAbGroup() : FinAbGroup(IntMatrix(0, 0)) {}

FinAbGroup::FinAbGroup(IntMatrix relations)
    : relations_(std::move(relations)),
      snf_(std::make_shared<const SmithDecomposition>(smith_normal_form(relations_))) {
  const auto& s = *snf_;
  for (std::size_t i = 0; i < s.rank; ++i) {
    if (s.D(i, i) > 1) {
      invariants_.factors.push_back(s.D(i, i));
      torsion_coords_.push_back(i);
    }
  }
  invariants_.free_rank = relations_.rows() - s.rank;
}

FinAbGroup FinAbGroup::free(std::size_t rank) { return FinAbGroup(IntMatrix(rank, 0)); }

FinAbGroup FinAbGroup::from_orders(std::span<const Integer> orders) {
  std::vector<IntVector> cols;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (sgn(orders[i]) < 0) throw Error(ErrorKind::invalid_argument, "negative cyclic order");
    if (sgn(orders[i]) == 0) continue;
    IntVector c(orders.size());
    c[i] = orders[i];
    cols.push_back(std::move(c));
  }
  return FinAbGroup(IntMatrix::from_columns(orders.size(), cols));
}

FinAbGroup FinAbGroup::cyclic(const Integer& order) {
  std::vector<Integer> o{order};
  return from_orders(o);
}

FinAbGroup FinAbGroup::trivial() { return FinAbGroup(IntMatrix(0, 0)); }

std::optional<Integer> FinAbGroup::order() const {
  if (!is_finite()) return std::nullopt;
  Integer n = 1;
  for (const auto& d : invariants_.factors) n *= d;
  return n;
}

void FinAbGroup::check_element(std::span<const Integer> x) const {
  if (x.size() != ambient_rank()) {
    throw Error(ErrorKind::invalid_argument, "element has " + std::to_string(x.size()) +
                                                 " coordinates, group ambient rank is " +
                                                 std::to_string(ambient_rank()));
  }
}

IntVector FinAbGroup::canonical(std::span<const Integer> x) const {
  check_element(x);
  const auto& s = *snf_;
  IntVector y = s.U * x;
  IntVector out;
  out.reserve(torsion_coords_.size() + invariants_.free_rank);
  for (std::size_t idx : torsion_coords_) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), y[idx].get_mpz_t(), s.D(idx, idx).get_mpz_t());
    out.push_back(r);
  }
  for (std::size_t idx = s.rank; idx < ambient_rank(); ++idx) out.push_back(y[idx]);
  return out;
}

bool FinAbGroup::is_zero(std::span<const Integer> x) const { return is_zero_vector(canonical(x)); }

bool FinAbGroup::equal(std::span<const Integer> x, std::span<const Integer> y) const {
  check_element(x);
  check_element(y);
  IntVector d(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) d[i] = x[i] - y[i];
  return is_zero(d);
}

Integer FinAbGroup::element_order(std::span<const Integer> x) const {
  IntVector c = canonical(x);
  const std::size_t t = torsion_coords_.size();
  for (std::size_t i = t; i < c.size(); ++i)
    if (sgn(c[i]) != 0) return 0;
  Integer ord = 1;
  for (std::size_t i = 0; i < t; ++i) {
    const Integer& d = invariants_.factors[i];
    Integer g = gcd(d, c[i]);
    Integer o = d / g;
    ord = lcm(ord, o);
  }
  return ord;
}

IntMatrix FinAbGroup::torsion_generators() const {
  IntMatrix gens(ambient_rank(), torsion_coords_.size());
  for (std::size_t k = 0; k < torsion_coords_.size(); ++k)
    for (std::size_t i = 0; i < ambient_rank(); ++i) gens(i, k) = snf_->U_inverse(i, torsion_coords_[k]);
  return gens;
}

InvariantFactors invariant_factors(const FinAbGroup& g) { return g.invariants(); }

bool is_compatible(const FinAbGroup& source, const FinAbGroup& target, const IntMatrix& matrix) {
  if (matrix.rows() != target.ambient_rank() || matrix.cols() != source.ambient_rank()) return false;
  const IntMatrix& r = source.relations();
  for (std::size_t j = 0; j < r.cols(); ++j) {
    IntVector image = matrix * r.column(j);
    if (!target.is_zero(image)) return false;
  }
  return true;
}

AbHom::AbHom(FinAbGroup source, FinAbGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.ambient_rank() || matrix_.cols() != source_.ambient_rank()) {
    std::ostringstream msg;
    msg << "homomorphism matrix is " << matrix_.rows() << "x" << matrix_.cols() << ", expected "
        << target_.ambient_rank() << "x" << source_.ambient_rank();
    throw Error(ErrorKind::invalid_argument, msg.str());
  }
  if (!is_compatible(source_, target_, matrix_)) {
    throw Error(ErrorKind::incompatible, "homomorphism matrix does not map source relations into target relations");
  }
}

AbHom AbHom::identity(const FinAbGroup& g) { return AbHom(g, g, IntMatrix::identity(g.ambient_rank())); }

IntVector AbHom::apply(std::span<const Integer> x) const {
  source_.check_element(x);
  return matrix_ * x;
}

AbHom compose(const AbHom& g, const AbHom& f) {
  if (f.target().ambient_rank() != g.source().ambient_rank() ||
      !(f.target().relations() == g.source().relations())) {
    throw Error(ErrorKind::invalid_argument, "composition of homomorphisms with mismatched middle group");
  }
  return AbHom(f.source(), g.target(), g.matrix() * f.matrix());
}

bool same_map(const FinAbGroup& source, const FinAbGroup& target, const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  if (a.rows() != target.ambient_rank() || a.cols() != source.ambient_rank()) return false;
  IntMatrix d = a - b;
  for (std::size_t j = 0; j < d.cols(); ++j)
    if (!target.is_zero(d.column(j))) return false;
  return true;
}

Subgroup subgroup_generated(const FinAbGroup& g, const IntMatrix& generators) {
  if (generators.rows() != g.ambient_rank()) {
    throw Error(ErrorKind::invalid_argument, "generator length does not match ambient rank");
  }
  const std::size_t k = generators.cols();
  IntMatrix ker = integer_kernel(hstack(generators, g.relations()));
  FinAbGroup sub(ker.block(0, 0, k, ker.cols()));
  AbHom incl(sub, g, generators);
  return Subgroup{std::move(sub), std::move(incl)};
}

Subgroup torsion_subgroup(const FinAbGroup& g) {
  const auto& factors = g.invariants().factors;
  FinAbGroup t = FinAbGroup::from_orders(factors);
  AbHom incl(t, g, g.torsion_generators());
  return Subgroup{std::move(t), std::move(incl)};
}

Subgroup kernel(const AbHom& h) {
  const std::size_t a = h.source().ambient_rank();
  IntMatrix ker = integer_kernel(hstack(h.matrix(), h.target().relations()));
  return subgroup_generated(h.source(), ker.block(0, 0, a, ker.cols()));
}

Subgroup image(const AbHom& h) { return subgroup_generated(h.target(), h.matrix()); }

FinAbGroup cokernel(const AbHom& h) { return FinAbGroup(hstack(h.target().relations(), h.matrix())); }

bool is_injective(const AbHom& h) { return kernel(h).group.is_trivial(); }

bool is_surjective(const AbHom& h) { return cokernel(h).is_trivial(); }

bool is_isomorphism(const AbHom& h) { return is_injective(h) && is_surjective(h); }

AbHom induced_on_torsion(const AbHom& h) {
  Subgroup ts = torsion_subgroup(h.source());
  Subgroup tt = torsion_subgroup(h.target());
  const FinAbGroup& target = h.target();
  const auto& coords = target.torsion_coordinates();
  const std::size_t free_start = target.smith().rank;
  IntMatrix images = h.matrix() * ts.inclusion.matrix();
  IntMatrix m(coords.size(), images.cols());
  for (std::size_t j = 0; j < images.cols(); ++j) {
    IntVector y = target.smith().U * images.column(j);
    for (std::size_t i = free_start; i < y.size(); ++i) {
      if (sgn(y[i]) != 0) throw Error(ErrorKind::incompatible, "torsion element mapped to an element of infinite order");
    }
    for (std::size_t i = 0; i < coords.size(); ++i) {
      Integer r;
      mpz_fdiv_r(r.get_mpz_t(), y[coords[i]].get_mpz_t(), target.smith().D(coords[i], coords[i]).get_mpz_t());
      m(i, j) = r;
    }
  }
  return AbHom(ts.group, tt.group, std::move(m));
}

bool isomorphic(const FinAbGroup& a, const FinAbGroup& b) { return a.invariants() == b.invariants(); }

}  // namespace maninlab
