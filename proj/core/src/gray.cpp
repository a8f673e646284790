#include "ringgray/gray.hpp"

#include <bit>

#include "ringgray/errors.hpp"

namespace ringgray {

namespace {

void require_r(const RingElement& x, int r, const char* name) {
    if (x.r() != r) {
        throw DomainError(std::string(name) + " is defined on Z" + std::to_string(1 << r) + "+uZ" +
                          std::to_string(1 << r) + " only, got an element with r=" + std::to_string(x.r()));
    }
}

BitVector from_bits(std::initializer_list<unsigned> bits) {
    BitVector v(bits.size());
    std::size_t i = 0;
    for (auto bit : bits) v.set(i++, (bit & 1U) != 0);
    return v;
}

}  // namespace

std::string to_string(MapId id) {
    switch (id) {
        case MapId::Phi3: return "phi3";
        case MapId::Phi2Phi3: return "phi2phi3";
        case MapId::Phi4: return "phi4";
        case MapId::Phi5: return "phi5";
        case MapId::General: return "general";
    }
    return "?";
}

MapId parse_map_id(std::string_view name) {
    for (auto id : {MapId::Phi3, MapId::Phi2Phi3, MapId::Phi4, MapId::Phi5, MapId::General}) {
        if (name == to_string(id)) return id;
    }
    throw ParseError("unknown map '" + std::string(name) + "' (expected phi3, phi2phi3, phi4, phi5 or general)");
}

bool is_binary_map(MapId id) noexcept { return id != MapId::Phi3; }

void require_domain(MapId id, RingParams params) {
    const int needed = id == MapId::Phi2Phi3 || id == MapId::Phi4 ? 2 : id == MapId::Phi5 ? 3 : 0;
    if (needed != 0 && params.r() != needed) {
        throw DomainError(to_string(id) + " requires r=" + std::to_string(needed) + ", got r=" + std::to_string(params.r()));
    }
}

std::size_t coordinate_length(MapId id, RingParams params) {
    require_domain(id, params);
    switch (id) {
        case MapId::Phi3: return 2;
        case MapId::Phi2Phi3: return 4;
        case MapId::Phi4: return 8;
        case MapId::Phi5: return 32;
        case MapId::General: return std::size_t{1} << (2 * params.r() - 1);
    }
    return 0;
}

BinaryExpansion BinaryExpansion::of(std::uint64_t x, int m) {
    BinaryExpansion e;
    e.digits.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) e.digits.push_back(static_cast<std::uint8_t>((x >> i) & 1U));
    return e;
}

std::uint64_t BinaryExpansion::value() const noexcept {
    std::uint64_t x = 0;
    for (std::size_t i = 0; i < digits.size(); ++i) x |= std::uint64_t{digits[i]} << i;
    return x;
}

std::array<std::uint32_t, 2> phi3(const RingElement& x) { return {x.b(), (x.a() + x.b()) & x.params().mask()}; }

BitVector phi2(std::uint32_t x, std::uint32_t y) {
    if (x > 3 || y > 3) throw DomainError("phi2 expects residues mod 4");
    const auto ex = BinaryExpansion::of(x, 2);
    const auto ey = BinaryExpansion::of(y, 2);
    const unsigned x1 = ex.digit(1), x2 = ex.digit(2), y1 = ey.digit(1), y2 = ey.digit(2);
    return from_bits({x2, x1 ^ x2, y2, y1 ^ y2});
}

BitVector phi2_phi3(const RingElement& x) {
    require_r(x, 2, "phi2phi3");
    const auto [b, c] = phi3(x);
    return phi2(b, c);
}

BitVector carlet_gray(std::uint64_t x, int m) {
    if (m < 1 || m > 2 * RingParams::kMaxR) throw DomainError("carlet_gray: m out of range: " + std::to_string(m));
    if (x >> m != 0) throw DomainError("carlet_gray: " + std::to_string(x) + " is not a residue mod 2^" + std::to_string(m));

    // Point index j encodes (y_1..y_{m-1}) with y_1 as its top bit, so the
    // linear part sum x_i y_i is the parity of j & mask where mask puts x_i at
    // bit position m-1-i.
    std::uint64_t mask = 0;
    for (int i = 1; i < m; ++i) mask |= ((x >> (i - 1)) & 1U) << (m - 1 - i);
    const unsigned affine = (x >> (m - 1)) & 1U;

    const std::size_t length = std::size_t{1} << (m - 1);
    BitVector out(length);
    for (std::size_t j = 0; j < length; ++j) {
        const unsigned bit = affine ^ (static_cast<unsigned>(std::popcount(j & mask)) & 1U);
        if (bit) out.set(j, true);
    }
    return out;
}

std::uint64_t pack(const RingElement& x) noexcept { return x.index(); }

BitVector phi4(const RingElement& x) {
    require_r(x, 2, "phi4");
    const unsigned a1 = x.a() & 1U, a2 = (x.a() >> 1) & 1U;
    const unsigned b1 = x.b() & 1U, b2 = (x.b() >> 1) & 1U;
    return from_bits({b2, b2 ^ b1, b2 ^ a2, b2 ^ a2 ^ b1, b2 ^ a1, b2 ^ a1 ^ b1, b2 ^ a1 ^ a2, b2 ^ a1 ^ a2 ^ b1});
}

std::optional<RingElement> phi4_inverse(const BitVector& w) {
    if (w.size() != 8) return std::nullopt;
    const unsigned b2 = w[0];
    const unsigned b1 = w[0] ^ w[1];
    const unsigned a2 = w[0] ^ w[2];
    const unsigned a1 = w[0] ^ w[4];
    RingElement x(a1 | (a2 << 1), b1 | (b2 << 1), RingParams(2));
    if (phi4(x) != w) return std::nullopt;
    return x;
}

BitVector phi5(const RingElement& x) {
    require_r(x, 3, "phi5");
    return carlet_gray(pack(x), 6);
}

BitVector phi_general(const RingElement& x) { return carlet_gray(pack(x), 2 * x.r()); }

GrayMap gray_map(MapId id) {
    switch (id) {
        case MapId::Phi2Phi3: return phi2_phi3;
        case MapId::Phi4: return phi4;
        case MapId::Phi5: return phi5;
        case MapId::General: return phi_general;
        case MapId::Phi3: break;
    }
    throw DomainError("phi3 is not a binary map");
}

BitVector map_vector(std::span<const RingElement> v, MapId id) {
    if (!v.empty()) require_domain(id, v.front().params());
    return map_vector(v, gray_map(id));
}

BitVector map_vector(std::span<const RingElement> v, const GrayMap& map) {
    BitVector out;
    for (const auto& x : v) {
        if (x.params() != v.front().params()) throw DomainError("map_vector: coordinates from different rings");
        out.append(map(x));
    }
    return out;
}

std::vector<std::uint32_t> phi3_vector(std::span<const RingElement> v) {
    std::vector<std::uint32_t> out;
    out.reserve(2 * v.size());
    for (const auto& x : v) {
        const auto [first, second] = phi3(x);
        out.push_back(first);
        out.push_back(second);
    }
    return out;
}

}  // namespace ringgray
