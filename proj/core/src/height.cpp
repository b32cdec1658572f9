#include "maninlab/height.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "maninlab/error.hpp"

namespace maninlab {

std::string_view to_string(Norm n) noexcept { return n == Norm::max ? "max" : "euclid"; }

Norm parse_norm(std::string_view s) {
  if (s == "max") return Norm::max;
  if (s == "euclid" || s == "euclidean") return Norm::euclid;
  throw Error(ErrorKind::parse_error, "norm must be max or euclid, got '" + std::string(s) + "'");
}

IntVector make_primitive(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (sgn(g) == 0) throw Error(ErrorKind::invalid_argument, "the zero vector has no projective point");
  IntVector out(v.begin(), v.end());
  for (auto& x : out) x /= g;
  for (const auto& x : out) {
    if (sgn(x) == 0) continue;
    if (sgn(x) < 0)
      for (auto& y : out) y = -y;
    break;
  }
  return out;
}

std::vector<std::int64_t> make_primitive(std::span<const std::int64_t> v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x);
  if (g == 0) throw Error(ErrorKind::invalid_argument, "the zero vector has no projective point");
  std::vector<std::int64_t> out(v.begin(), v.end());
  for (auto& x : out) x /= g;
  for (auto x : out) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : out) y = -y;
    break;
  }
  return out;
}

namespace {

void check_weights(std::size_t n, std::span<const int> weights) {
  if (!weights.empty() && weights.size() != n) throw Error(ErrorKind::invalid_argument, "weight vector length mismatch");
}

}  // namespace

double height(std::span<const Integer> v, const HeightSpec& h, std::span<const int> weights) {
  check_weights(v.size(), weights);
  IntVector p = make_primitive(v);
  if (h.norm == Norm::max) {
    Integer m = 0;
    for (const auto& x : p) m = std::max(m, Integer(abs(x)));
    return m.get_d();
  }
  Integer s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) s += (weights.empty() ? 1 : weights[i]) * p[i] * p[i];
  return std::sqrt(s.get_d());
}

double height(std::span<const std::int64_t> v, const HeightSpec& h, std::span<const int> weights) {
  IntVector big;
  big.reserve(v.size());
  for (auto x : v) big.emplace_back(static_cast<long>(x));
  return height(std::span<const Integer>(big), h, weights);
}

}  // namespace maninlab
