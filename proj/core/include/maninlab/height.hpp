#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "maninlab/int_matrix.hpp"

namespace maninlab {

enum class Norm { max, euclid };

std::string_view to_string(Norm n) noexcept;
Norm parse_norm(std::string_view s);

struct HeightSpec {
  Norm norm = Norm::max;
};

// Divide by the gcd and make the first nonzero coordinate positive.
IntVector make_primitive(std::span<const Integer> v);
std::vector<std::int64_t> make_primitive(std::span<const std::int64_t> v);

// Archimedean norm of the primitive representative. weights multiply the
// squared coordinates in the Euclidean case and are ignored for max.
double height(std::span<const Integer> v, const HeightSpec& h, std::span<const int> weights = {});
double height(std::span<const std::int64_t> v, const HeightSpec& h, std::span<const int> weights = {});

}  // namespace maninlab
