#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ringgray/bitvector.hpp"
#include "ringgray/ring.hpp"

namespace ringgray {

/// Stable identifiers, also used on the command line and in JSON reports.
enum class MapId { Phi3, Phi2Phi3, Phi4, Phi5, General };

std::string to_string(MapId id);
/// Accepts "phi3", "phi2phi3", "phi4", "phi5", "general"; throws ParseError otherwise.
MapId parse_map_id(std::string_view name);

/// True for every map except phi3, whose codomain is Z_{2^r}^2.
bool is_binary_map(MapId id) noexcept;

/// Throws DomainError if `id` is not defined on R_r (phi2phi3/phi4 need r=2, phi5 needs r=3).
void require_domain(MapId id, RingParams params);

/// Output bits per ring coordinate (residues for phi3).
std::size_t coordinate_length(MapId id, RingParams params);

/// Digits x_1..x_m of x = sum 2^{i-1} x_i; digits[0] is x_1, the least significant.
struct BinaryExpansion {
    std::vector<std::uint8_t> digits;

    static BinaryExpansion of(std::uint64_t x, int m);
    std::uint64_t value() const noexcept;
    /// 1-based access matching the x_i notation.
    std::uint8_t digit(int i) const { return digits.at(static_cast<std::size_t>(i - 1)); }
};

/// (b, a + b), additive and Lee-weight preserving.
std::array<std::uint32_t, 2> phi3(const RingElement& x);

/// Gray map on each Z4 coordinate: (x2, x1+x2, y2, y1+y2).
BitVector phi2(std::uint32_t x, std::uint32_t y);

/// phi2(phi3(x)) for r = 2.
BitVector phi2_phi3(const RingElement& x);

/// Truth table of x_m + sum_{i<m} x_i y_i over F2^{m-1}, points listed in
/// binary counting order with y_1 as the most significant coordinate.
/// Throws DomainError if x >= 2^m or m is outside [1, 2*RingParams::kMaxR].
BitVector carlet_gray(std::uint64_t x, int m);

/// a + 2^r b; the binary digits are (a_1..a_r, b_1..b_r).
std::uint64_t pack(const RingElement& x) noexcept;

/// Explicit eight-coordinate formula for r = 2.
BitVector phi4(const RingElement& x);

/// The unique preimage under phi4, or nullopt when `w` is not a phi4 image.
std::optional<RingElement> phi4_inverse(const BitVector& w);

/// carlet_gray(pack(x), 6) for r = 3.
BitVector phi5(const RingElement& x);

/// carlet_gray(pack(x), 2r), any r.
BitVector phi_general(const RingElement& x);

using GrayMap = std::function<BitVector(const RingElement&)>;

/// Binary map for `id`; throws DomainError for phi3.
GrayMap gray_map(MapId id);

/// Coordinatewise image, concatenated in coordinate order.
BitVector map_vector(std::span<const RingElement> v, MapId id);
BitVector map_vector(std::span<const RingElement> v, const GrayMap& map);

/// phi3 applied coordinatewise: (b_0, a_0+b_0, b_1, a_1+b_1, ...).
std::vector<std::uint32_t> phi3_vector(std::span<const RingElement> v);

}  // namespace ringgray
