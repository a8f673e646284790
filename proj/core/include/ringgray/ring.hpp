#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ringgray {

/// Parameters of the ring Z_{2^r} + u Z_{2^r} with u^2 = 0.
class RingParams {
public:
    static constexpr int kMaxR = 15;

    /// Throws DomainError unless 1 <= r <= kMaxR.
    explicit RingParams(int r);

    int r() const noexcept { return r_; }
    std::uint32_t modulus() const noexcept { return std::uint32_t{1} << r_; }
    std::uint32_t mask() const noexcept { return modulus() - 1; }
    std::uint32_t ring_size() const noexcept { return std::uint32_t{1} << (2 * r_); }

    friend bool operator==(RingParams, RingParams) = default;

private:
    int r_;
};

/// Largest r for which the exhaustive structure operations (all_ideals and the
/// checks built on it) are allowed to run.
inline constexpr int kBruteForceMaxR = 4;

/// An element a + ub, stored with both components reduced mod 2^r.
class RingElement {
public:
    RingElement(std::int64_t a, std::int64_t b, RingParams params);

    static RingElement zero(RingParams params) { return {0, 0, params}; }
    static RingElement one(RingParams params) { return {1, 0, params}; }
    static RingElement u(RingParams params) { return {0, 1, params}; }

    /// Inverse of index(): a = i mod 2^r, b = i >> r.
    static RingElement from_index(std::uint32_t index, RingParams params);

    std::uint32_t a() const noexcept { return a_; }
    std::uint32_t b() const noexcept { return b_; }
    RingParams params() const noexcept { return params_; }
    int r() const noexcept { return params_.r(); }

    /// a + 2^r b; a bijection onto [0, 4^r).
    std::uint32_t index() const noexcept { return a_ | (b_ << params_.r()); }

    bool is_zero() const noexcept { return a_ == 0 && b_ == 0; }

    RingElement operator-() const;
    friend RingElement operator+(const RingElement& x, const RingElement& y);
    friend RingElement operator-(const RingElement& x, const RingElement& y);
    friend RingElement operator*(const RingElement& x, const RingElement& y);
    RingElement& operator+=(const RingElement& y) { return *this = *this + y; }
    RingElement& operator*=(const RingElement& y) { return *this = *this * y; }

    friend bool operator==(const RingElement& x, const RingElement& y) noexcept {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.params_ == y.params_;
    }
    /// Orders by r, then a, then b.
    friend std::strong_ordering operator<=>(const RingElement& x, const RingElement& y) noexcept;

private:
    std::uint32_t a_;
    std::uint32_t b_;
    RingParams params_;
};

/// Same as the constructor; named to mirror the reduction contract.
inline RingElement make_element(std::int64_t a, std::int64_t b, RingParams params) { return {a, b, params}; }

/// Token form: "0", "3", "u", "2u", "2+u", "3+2u".
std::string to_string(const RingElement& x);

RingElement add(const RingElement& x, const RingElement& y);
RingElement mul(const RingElement& x, const RingElement& y);

/// Every element of the ring, in index() order.
std::vector<RingElement> all_elements(RingParams params);

bool is_unit(const RingElement& x) noexcept;
std::vector<RingElement> unit_group(RingParams params);

/// A subset of R closed under addition and multiplication by R. Elements are
/// kept sorted; equality compares element sets only.
class Ideal {
public:
    Ideal(RingParams params, std::vector<RingElement> elements, std::vector<RingElement> generators);

    RingParams params() const noexcept { return params_; }
    const std::vector<RingElement>& elements() const noexcept { return elements_; }
    const std::vector<RingElement>& generators() const noexcept { return generators_; }
    std::size_t size() const noexcept { return elements_.size(); }
    bool contains(const RingElement& x) const;
    bool is_subset_of(const Ideal& other) const;

    friend bool operator==(const Ideal& x, const Ideal& y) { return x.params_ == y.params_ && x.elements_ == y.elements_; }

private:
    RingParams params_;
    std::vector<RingElement> elements_;
    std::vector<RingElement> generators_;
};

Ideal principal_ideal(const RingElement& x);
Ideal ideal_from_generators(std::span<const RingElement> generators);
Ideal ideal_from_generators(std::initializer_list<RingElement> generators);

/// Every ideal of R, sorted by size then element order. Throws ResourceError
/// when r exceeds kBruteForceMaxR.
std::vector<Ideal> all_ideals(RingParams params);

/// Sum (additive closure) of two ideals.
Ideal ideal_sum(const Ideal& x, const Ideal& y);
Ideal ideal_intersection(const Ideal& x, const Ideal& y);

/// <2, u>, the unique maximal ideal.
Ideal jacobson_radical(RingParams params);
/// <2^{r-1} u> = {0, 2^{r-1} u}.
Ideal socle(RingParams params);

/// A point on the unit circle.
struct UnitComplex {
    double re = 1.0;
    double im = 0.0;

    /// exp(2 pi i k / n), exact at multiples of a quarter turn.
    static UnitComplex root_of_unity(std::uint64_t k, std::uint64_t n);
};

/// Exponent e with chi(x) = exp(2 pi i e / 2^r); e = a + b mod 2^r.
std::uint32_t character_exponent(const RingElement& x) noexcept;
UnitComplex generating_character(const RingElement& x);

using Character = std::function<UnitComplex(const RingElement&)>;

/// A nonzero ideal on which `chi` is identically 1, if one exists.
std::optional<Ideal> kernel_ideal_witness(RingParams params, const Character& chi);
bool verify_generating(RingParams params, const Character& chi);
bool verify_generating(RingParams params);

}  // namespace ringgray

template <>
struct std::hash<ringgray::RingElement> {
    std::size_t operator()(const ringgray::RingElement& x) const noexcept {
        return (static_cast<std::size_t>(x.r()) << 32) ^ x.index();
    }
};
