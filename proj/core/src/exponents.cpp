#include "maninlab/exponents.hpp"

#include <algorithm>

#include "maninlab/error.hpp"

namespace maninlab {
namespace {

ExponentPair from_ratios(const std::vector<Rational>& ratios, const OrbitPartition& given) {
  if (ratios.empty()) throw Error(ErrorKind::invalid_argument, "exponents need at least one boundary component");
  OrbitPartition orbits = given.empty() ? trivial_orbits(ratios.size()) : given;
  validate_orbits(orbits, ratios.size());
  std::vector<Rational> orbit_ratio;
  for (const auto& orbit : orbits) {
    const Rational& r = ratios[orbit.front()];
    for (std::size_t idx : orbit) {
      if (ratios[idx] != r) {
        throw Error(ErrorKind::invalid_argument, "ratio differs inside a Galois orbit (index " +
                                                     std::to_string(orbit.front()) + " vs " + std::to_string(idx) +
                                                     ")");
      }
    }
    orbit_ratio.push_back(r);
  }
  ExponentPair out;
  out.a = *std::max_element(orbit_ratio.begin(), orbit_ratio.end());
  out.b = static_cast<std::size_t>(std::count(orbit_ratio.begin(), orbit_ratio.end(), out.a));
  return out;
}

void require_positive(const WeightInRootBasis& lambda) {
  for (std::size_t i = 0; i < lambda.coefficients.size(); ++i) {
    if (sgn(lambda.coefficients[i]) <= 0) {
      throw Error(ErrorKind::invalid_argument, "weight coefficient " + std::to_string(i) + " is " +
                                                   format_rational(lambda.coefficients[i]) + ", expected > 0");
    }
  }
}

}  // namespace

std::string format_rational(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(const std::string& s) {
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0 || sgn(q.get_den()) == 0) {
    throw Error(ErrorKind::parse_error, "not a rational number: '" + s + "'");
  }
  q.canonicalize();
  return q;
}

OrbitPartition trivial_orbits(std::size_t count) {
  OrbitPartition p(count);
  for (std::size_t i = 0; i < count; ++i) p[i] = {i};
  return p;
}

void validate_orbits(const OrbitPartition& orbits, std::size_t count) {
  std::vector<int> seen(count, 0);
  for (const auto& orbit : orbits) {
    if (orbit.empty()) throw Error(ErrorKind::invalid_argument, "empty Galois orbit");
    for (std::size_t idx : orbit) {
      if (idx >= count) throw Error(ErrorKind::invalid_argument, "orbit index " + std::to_string(idx) + " out of range");
      if (seen[idx]++) throw Error(ErrorKind::invalid_argument, "index " + std::to_string(idx) + " in two orbits");
    }
  }
  for (std::size_t i = 0; i < count; ++i)
    if (!seen[i]) throw Error(ErrorKind::invalid_argument, "index " + std::to_string(i) + " is in no orbit");
}

void validate(const DivisorData& d) {
  if (d.m.size() != d.n.size()) {
    throw Error(ErrorKind::invalid_argument, "m and n have different lengths (" + std::to_string(d.m.size()) + " vs " +
                                                 std::to_string(d.n.size()) + ")");
  }
  if (d.m.empty()) throw Error(ErrorKind::invalid_argument, "divisor data is empty");
  for (std::size_t i = 0; i < d.m.size(); ++i)
    if (sgn(d.m[i]) <= 0) throw Error(ErrorKind::invalid_argument, "m[" + std::to_string(i) + "] must be positive");
  if (!d.orbits.empty()) validate_orbits(d.orbits, d.m.size());
}

ExponentPair ab_from_divisor_data(const DivisorData& d) {
  validate(d);
  std::vector<Rational> ratios;
  for (std::size_t i = 0; i < d.m.size(); ++i) {
    Rational r(d.n[i], d.m[i]);
    r.canonicalize();
    ratios.push_back(r);
  }
  return from_ratios(ratios, d.orbits);
}

ExponentPair ab_group_variety(const RootSystemData& rs, const WeightInRootBasis& lambda, const OrbitPartition& orbits) {
  if (lambda.coefficients.size() != static_cast<std::size_t>(rs.rank())) {
    throw Error(ErrorKind::invalid_argument, "weight has " + std::to_string(lambda.coefficients.size()) +
                                                 " coefficients, rank is " + std::to_string(rs.rank()));
  }
  return ab_wonderful_symmetric(two_rho_in_simple_basis(rs), lambda, orbits);
}

ExponentPair ab_wonderful_symmetric(const WeightInRootBasis& m, const WeightInRootBasis& lambda,
                                    const OrbitPartition& orbits) {
  if (m.coefficients.size() != lambda.coefficients.size()) {
    throw Error(ErrorKind::invalid_argument, "restricted sum has " + std::to_string(m.coefficients.size()) +
                                                 " coefficients but the weight has " +
                                                 std::to_string(lambda.coefficients.size()));
  }
  require_positive(lambda);
  std::vector<Rational> ratios;
  for (std::size_t i = 0; i < m.coefficients.size(); ++i) {
    Rational r = (m.coefficients[i] + 1) / lambda.coefficients[i];
    r.canonicalize();
    ratios.push_back(r);
  }
  return from_ratios(ratios, orbits);
}

DivisorData wonderful_divisor_data(const WeightInRootBasis& m, const WeightInRootBasis& lambda,
                                   const OrbitPartition& orbits) {
  if (m.coefficients.size() != lambda.coefficients.size()) {
    throw Error(ErrorKind::invalid_argument, "length mismatch between restricted sum and weight");
  }
  require_positive(lambda);
  Integer den = 1;
  for (const auto& x : m.coefficients) den = lcm(den, x.get_den());
  for (const auto& x : lambda.coefficients) den = lcm(den, x.get_den());
  DivisorData d;
  for (std::size_t i = 0; i < m.coefficients.size(); ++i) {
    Rational mi = lambda.coefficients[i] * den;
    Rational ni = (m.coefficients[i] + 1) * den;
    d.m.push_back(mi.get_num());
    d.n.push_back(ni.get_num());
  }
  d.orbits = orbits;
  return d;
}

}  // namespace maninlab
