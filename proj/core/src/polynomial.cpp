#include "maninlab/polynomial.hpp"

#include <algorithm>
#include <map>

#include "maninlab/error.hpp"

namespace maninlab {

Polynomial::Polynomial(std::size_t nvars, std::vector<Monomial> terms) : nvars_(nvars), terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    if (t.exponents.size() != nvars_) {
      throw Error(ErrorKind::invalid_argument, "monomial has " + std::to_string(t.exponents.size()) +
                                                   " exponents, polynomial has " + std::to_string(nvars_) +
                                                   " variables");
    }
  }
  normalize();
}

void Polynomial::normalize() {
  std::map<std::vector<unsigned>, Integer> acc;
  for (auto& t : terms_) acc[t.exponents] += t.coeff;
  terms_.clear();
  for (auto& [e, c] : acc)
    if (sgn(c) != 0) terms_.push_back(Monomial{c, e});
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) {
    unsigned s = 0;
    for (unsigned e : t.exponents) s += e;
    d = std::max(d, s);
  }
  return d;
}

unsigned Polynomial::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exponents.at(var));
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = total_degree();
  for (const auto& t : terms_) {
    unsigned s = 0;
    for (unsigned e : t.exponents) s += e;
    if (s != d) return false;
  }
  return true;
}

Integer Polynomial::evaluate(std::span<const Integer> x) const {
  if (x.size() != nvars_) throw Error(ErrorKind::invalid_argument, "point has the wrong number of coordinates");
  Integer total = 0;
  for (const auto& t : terms_) {
    Integer v = t.coeff;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (t.exponents[i] == 0) continue;
      Integer p;
      mpz_pow_ui(p.get_mpz_t(), x[i].get_mpz_t(), t.exponents[i]);
      v *= p;
    }
    total += v;
  }
  return total;
}

std::int64_t Polynomial::evaluate_mod(std::span<const std::int64_t> x, std::int64_t p) const {
  if (x.size() != nvars_) throw Error(ErrorKind::invalid_argument, "point has the wrong number of coordinates");
  __extension__ typedef unsigned __int128 u128;
  std::int64_t total = 0;
  for (const auto& t : terms_) {
    Integer cm;
    mpz_fdiv_r_ui(cm.get_mpz_t(), t.coeff.get_mpz_t(), static_cast<unsigned long>(p));
    std::int64_t v = cm.get_si();
    for (std::size_t i = 0; i < nvars_ && v != 0; ++i) {
      std::int64_t base = ((x[i] % p) + p) % p;
      for (unsigned e = 0; e < t.exponents[i]; ++e)
        v = static_cast<std::int64_t>(static_cast<u128>(v) * static_cast<u128>(base) % static_cast<u128>(p));
    }
    total = (total + v) % p;
  }
  return total;
}

Integer Polynomial::magnitude_bound(std::int64_t radius) const {
  Integer r(static_cast<long>(radius));
  Integer bound = 0;
  for (const auto& t : terms_) {
    unsigned s = 0;
    for (unsigned e : t.exponents) s += e;
    Integer p;
    mpz_pow_ui(p.get_mpz_t(), r.get_mpz_t(), s);
    bound += abs(t.coeff) * p;
  }
  return bound;
}

Polynomial Polynomial::permuted(std::span<const std::size_t> new_index_of) const {
  if (new_index_of.size() != nvars_) throw Error(ErrorKind::invalid_argument, "permutation length mismatch");
  std::vector<Monomial> out;
  for (const auto& t : terms_) {
    Monomial m{t.coeff, std::vector<unsigned>(nvars_, 0)};
    for (std::size_t i = 0; i < nvars_; ++i) m.exponents[new_index_of[i]] = t.exponents[i];
    out.push_back(std::move(m));
  }
  return Polynomial(nvars_, std::move(out));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].coeff != b.terms_[i].coeff || a.terms_[i].exponents != b.terms_[i].exponents) return false;
  return true;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars()) throw Error(ErrorKind::invalid_argument, "polynomial variable count mismatch");
  std::vector<Monomial> out;
  for (const auto& x : a.terms())
    for (const auto& y : b.terms()) {
      Monomial m{x.coeff * y.coeff, x.exponents};
      for (std::size_t i = 0; i < m.exponents.size(); ++i) m.exponents[i] += y.exponents[i];
      out.push_back(std::move(m));
    }
  return Polynomial(a.nvars(), std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars()) throw Error(ErrorKind::invalid_argument, "polynomial variable count mismatch");
  std::vector<Monomial> out = a.terms();
  out.insert(out.end(), b.terms().begin(), b.terms().end());
  return Polynomial(a.nvars(), std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Monomial> neg = b.terms();
  for (auto& t : neg) t.coeff = -t.coeff;
  return a + Polynomial(b.nvars(), std::move(neg));
}

Polynomial variable(std::size_t nvars, std::size_t i) {
  Monomial m{1, std::vector<unsigned>(nvars, 0)};
  m.exponents.at(i) = 1;
  return Polynomial(nvars, {m});
}

Polynomial constant(std::size_t nvars, const Integer& c) {
  return Polynomial(nvars, {Monomial{c, std::vector<unsigned>(nvars, 0)}});
}

}  // namespace maninlab
