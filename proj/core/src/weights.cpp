#include "ringgray/weights.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <vector>

#include "ringgray/errors.hpp"

namespace ringgray {

namespace {

constexpr double kAverageTol = 1e-9;

std::string format_weight(double w) {
    std::ostringstream os;
    os << w;
    return os.str();
}

}  // namespace

WeightSpec WeightSpec::homogeneous(double gamma) {
    if (!(gamma > 0.0)) throw DomainError("homogeneous weight requires gamma > 0, got " + format_weight(gamma));
    return {WeightKind::Homogeneous, gamma};
}

WeightSpec WeightSpec::homogeneous_for(RingParams params) { return homogeneous(default_gamma(params)); }

double default_gamma(RingParams params) noexcept { return std::ldexp(1.0, 2 * params.r() - 2); }

std::string to_string(WeightKind kind) {
    switch (kind) {
        case WeightKind::Lee: return "lee";
        case WeightKind::Homogeneous: return "hom";
        case WeightKind::Hamming: return "hamming";
    }
    return "?";
}

WeightValue lee_weight_residue(std::uint32_t x, int r) {
    const RingParams p(r);
    if (x >= p.modulus()) {
        throw DomainError("lee_weight_residue: " + std::to_string(x) + " is not a residue mod " + std::to_string(p.modulus()));
    }
    return static_cast<WeightValue>(std::min(x, p.modulus() - x));
}

WeightValue lee_weight(const RingElement& x) {
    const auto r = x.r();
    return lee_weight_residue(x.b(), r) + lee_weight_residue((x.a() + x.b()) & x.params().mask(), r);
}

WeightValue hom_weight_closed(const RingElement& x, double gamma) {
    if (!(gamma > 0.0)) throw DomainError("hom_weight_closed: gamma must be positive");
    if (x.is_zero()) return 0.0;
    const std::uint32_t socle_b = std::uint32_t{1} << (x.r() - 1);
    if (x.a() == 0 && x.b() == socle_b) return 2.0 * gamma;
    return gamma;
}

WeightValue hom_weight_character(const RingElement& x, double gamma) {
    if (!(gamma > 0.0)) throw DomainError("hom_weight_character: gamma must be positive");
    const auto p = x.params();
    // Tally exponents first so the sum over units stays exact until the end.
    std::vector<std::uint64_t> exponent_count(p.modulus(), 0);
    std::uint64_t units = 0;
    for (const auto& v : unit_group(p)) {
        ++exponent_count[character_exponent(x * v)];
        ++units;
    }
    double re = 0.0, im = 0.0;
    for (std::uint32_t e = 0; e < p.modulus(); ++e) {
        if (exponent_count[e] == 0) continue;
        const auto z = UnitComplex::root_of_unity(e, p.modulus());
        re += static_cast<double>(exponent_count[e]) * z.re;
        im += static_cast<double>(exponent_count[e]) * z.im;
    }
    if (std::abs(im) > 1e-9) {
        throw ConsistencyError("character sum for " + to_string(x) + " has imaginary part " + format_weight(im));
    }
    return gamma * (1.0 - re / static_cast<double>(units));
}

WeightValue hamming_weight(const BitVector& v) noexcept { return static_cast<WeightValue>(v.popcount()); }

WeightValue element_weight(const RingElement& x, const WeightSpec& spec) {
    switch (spec.kind) {
        case WeightKind::Lee: return lee_weight(x);
        case WeightKind::Homogeneous: return hom_weight_closed(x, spec.gamma);
        case WeightKind::Hamming: return x.is_zero() ? 0.0 : 1.0;
    }
    return 0.0;
}

WeightValue vector_weight(std::span<const RingElement> v, const WeightSpec& spec) {
    WeightValue total = 0.0;
    for (const auto& x : v) {
        if (x.params() != v.front().params()) throw DomainError("vector_weight: coordinates from different rings");
        total += element_weight(x, spec);
    }
    return total;
}

WeightValue distance(std::span<const RingElement> x, std::span<const RingElement> y, const WeightSpec& spec) {
    if (x.size() != y.size()) {
        throw DomainError("distance: length mismatch " + std::to_string(x.size()) + " vs " + std::to_string(y.size()));
    }
    WeightValue total = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) total += element_weight(x[i] - y[i], spec);
    return total;
}

WeightValue distance(const BitVector& x, const BitVector& y) { return static_cast<WeightValue>(hamming_distance(x, y)); }

HomogeneityReport verify_homogeneity(const WeightSpec& spec, RingParams params) {
    std::optional<double> expected;
    if (spec.kind == WeightKind::Homogeneous) expected = spec.gamma;
    return verify_homogeneity(params, [&spec](const RingElement& x) { return element_weight(x, spec); }, expected);
}

HomogeneityReport verify_homogeneity(RingParams params, const ElementWeight& weight,
                                     std::optional<double> expected_gamma) {
    HomogeneityReport report;
    const auto ring = all_elements(params);

    double total = 0.0;
    for (const auto& x : ring) total += weight(x);
    report.gamma = expected_gamma.value_or(total / static_cast<double>(ring.size()));

    // Group nonzero elements by the principal ideal they generate.
    std::map<std::vector<RingElement>, RingElement> first_generator;
    for (const auto& x : ring) {
        if (x.is_zero()) continue;
        const auto ideal = principal_ideal(x);
        const double wx = weight(x);

        auto [it, inserted] = first_generator.try_emplace(ideal.elements(), x);
        if (!inserted && report.same_ideal_same_weight && std::abs(weight(it->second) - wx) > kAverageTol) {
            report.same_ideal_same_weight = false;
            std::ostringstream os;
            os << "R(" << to_string(it->second) << ") = R(" << to_string(x) << ") but w(" << to_string(it->second)
               << ") = " << weight(it->second) << " != w(" << to_string(x) << ") = " << wx;
            report.same_ideal_witness = os.str();
        }

        if (inserted && report.constant_average) {
            double sum = 0.0;
            for (const auto& y : ideal.elements()) sum += weight(y);
            const double mean = sum / static_cast<double>(ideal.size());
            if (std::abs(mean - report.gamma) > kAverageTol) {
                report.constant_average = false;
                std::ostringstream os;
                os << "mean of w over R(" << to_string(x) << ") (" << ideal.size() << " elements) is " << mean
                   << ", expected " << report.gamma;
                report.average_witness = os.str();
            }
        }
    }
    return report;
}

}  // namespace ringgray
