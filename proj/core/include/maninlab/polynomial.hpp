#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "maninlab/int_matrix.hpp"

namespace maninlab {

struct Monomial {
  Integer coeff;
  std::vector<unsigned> exponents;
};

// Polynomial with integer coefficients in a fixed number of variables.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::size_t nvars, std::vector<Monomial> terms);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Monomial>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  unsigned total_degree() const;
  unsigned degree_in(std::size_t var) const;
  bool is_homogeneous() const;

  Integer evaluate(std::span<const Integer> x) const;
  std::int64_t evaluate_mod(std::span<const std::int64_t> x, std::int64_t p) const;
  // Upper bound for |value| when every |x_i| <= radius.
  Integer magnitude_bound(std::int64_t radius) const;

  Polynomial permuted(std::span<const std::size_t> new_index_of) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void normalize();

  std::size_t nvars_ = 0;
  std::vector<Monomial> terms_;  // sorted by exponent vector, no zero coefficients
};

Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial variable(std::size_t nvars, std::size_t i);
Polynomial constant(std::size_t nvars, const Integer& c);

}  // namespace maninlab
