#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>

#include "ringgray/bitvector.hpp"
#include "ringgray/ring.hpp"

namespace ringgray {

/// Weights are real-valued in general; every weight used here is an exact
/// small integer whenever gamma is, so plain double comparison is exact.
using WeightValue = double;

enum class WeightKind { Lee, Homogeneous, Hamming };

struct WeightSpec {
    WeightKind kind = WeightKind::Homogeneous;
    double gamma = 1.0;

    static WeightSpec lee() { return {WeightKind::Lee, 0.0}; }
    static WeightSpec hamming() { return {WeightKind::Hamming, 0.0}; }
    /// Throws DomainError unless gamma > 0.
    static WeightSpec homogeneous(double gamma);
    /// Homogeneous weight with the gamma that makes phi_general an isometry.
    static WeightSpec homogeneous_for(RingParams params);
};

/// 2^{2r-2}: the Hamming weight of the Gray image of a generic element.
double default_gamma(RingParams params) noexcept;

std::string to_string(WeightKind kind);

/// min{x, 2^r - x}; throws DomainError if x >= 2^r.
WeightValue lee_weight_residue(std::uint32_t x, int r);

/// w_L(b) + w_L(a + b).
WeightValue lee_weight(const RingElement& x);

/// 0 at zero, 2 gamma at 2^{r-1} u, gamma elsewhere.
WeightValue hom_weight_closed(const RingElement& x, double gamma);

/// gamma * (1 - mean over units v of chi(xv)). Throws ConsistencyError if the
/// character sum has an imaginary part above 1e-9.
WeightValue hom_weight_character(const RingElement& x, double gamma);

WeightValue hamming_weight(const BitVector& v) noexcept;

/// Weight of a single coordinate under `spec` (Hamming: 0 or 1).
WeightValue element_weight(const RingElement& x, const WeightSpec& spec);

WeightValue vector_weight(std::span<const RingElement> v, const WeightSpec& spec);

/// w(x - y); throws DomainError on length or ring mismatch.
WeightValue distance(std::span<const RingElement> x, std::span<const RingElement> y, const WeightSpec& spec);
WeightValue distance(const BitVector& x, const BitVector& y);

using ElementWeight = std::function<WeightValue(const RingElement&)>;

/// Outcome of checking the two homogeneity axioms over every nonzero x.
struct HomogeneityReport {
    /// Rx = Ry implies w(x) = w(y).
    bool same_ideal_same_weight = true;
    /// Mean of w over Rx is the same constant for all x != 0.
    bool constant_average = true;
    /// The average of w over R (the candidate Gamma).
    double gamma = 0.0;
    std::optional<std::string> same_ideal_witness;
    std::optional<std::string> average_witness;

    bool passed() const noexcept { return same_ideal_same_weight && constant_average; }
};

/// For Homogeneous specs the expected average is spec.gamma; otherwise the
/// average over R is used as the candidate constant.
HomogeneityReport verify_homogeneity(const WeightSpec& spec, RingParams params);
HomogeneityReport verify_homogeneity(RingParams params, const ElementWeight& weight,
                                     std::optional<double> expected_gamma);

}  // namespace ringgray
