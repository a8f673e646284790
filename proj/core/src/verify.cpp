#include "ringgray/verify.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "ringgray/errors.hpp"

namespace ringgray::verify {

namespace {

constexpr double kTol = 1e-9;

std::string join_elements(const std::vector<RingElement>& xs) {
    std::string out = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ", ";
        out += to_string(xs[i]);
    }
    return out + "}";
}

std::string num(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

CheckResult pass(std::string id, std::string detail) { return {std::move(id), true, std::move(detail), std::nullopt}; }

CheckResult fail(std::string id, std::string detail, std::string witness) {
    return {std::move(id), false, std::move(detail), std::move(witness)};
}

bool ideal_like_equal(const Ideal& x, const Ideal& y) { return x.elements() == y.elements(); }

// Universally quantified element check: first failing x becomes the witness.
template <class Pred>
CheckResult for_all_elements(std::string id, RingParams p, const std::string& what, Pred&& pred) {
    std::size_t count = 0;
    for (const auto& x : all_elements(p)) {
        ++count;
        if (auto problem = pred(x)) return fail(std::move(id), what + ": violated", *problem);
    }
    return pass(std::move(id), what + ": holds for all " + std::to_string(count) + " elements");
}

template <class Pred>
CheckResult for_all_pairs(std::string id, RingParams p, const std::string& what, Pred&& pred) {
    const auto ring = all_elements(p);
    for (const auto& x : ring) {
        for (const auto& y : ring) {
            if (auto problem = pred(x, y)) return fail(std::move(id), what + ": violated", *problem);
        }
    }
    return pass(std::move(id), what + ": holds for all " + std::to_string(ring.size() * ring.size()) + " pairs");
}

CheckResult weight_preserving(std::string id, RingParams p, const GrayMap& map,
                              const std::function<WeightValue(const RingElement&)>& weight, const std::string& what) {
    return for_all_elements(std::move(id), p, what, [&](const RingElement& x) -> std::optional<std::string> {
        const auto image = map(x);
        const auto hw = static_cast<double>(image.popcount());
        if (std::abs(hw - weight(x)) > kTol) {
            return "x=" + to_string(x) + ": image " + image.to_string() + " has weight " + num(hw) + ", expected " +
                   num(weight(x));
        }
        return std::nullopt;
    });
}

CheckResult distance_preserving(std::string id, RingParams p, const GrayMap& map,
                                const std::function<WeightValue(const RingElement&)>& weight, const std::string& what) {
    std::vector<BitVector> images;
    for (const auto& x : all_elements(p)) images.push_back(map(x));
    return for_all_pairs(std::move(id), p, what, [&](const RingElement& x, const RingElement& y) -> std::optional<std::string> {
        const auto& ix = images[x.index()];
        const auto& iy = images[y.index()];
        if (ix.size() != iy.size()) return "image lengths differ at x=" + to_string(x) + ", y=" + to_string(y);
        const auto d = static_cast<double>(hamming_distance(ix, iy));
        const auto expected = weight(x - y);
        if (std::abs(d - expected) > kTol) {
            return "x=" + to_string(x) + ", y=" + to_string(y) + ": Hamming distance " + num(d) + ", ring distance " +
                   num(expected);
        }
        return std::nullopt;
    });
}

CheckResult decomposition(std::string id, RingParams p, const GrayMap& map, const std::string& what) {
    return for_all_elements(std::move(id), p, what, [&](const RingElement& x) -> std::optional<std::string> {
        const auto direct = map(x);
        const auto composed = carlet_gray(pack(x), 2 * p.r());
        if (direct != composed) {
            return "x=" + to_string(x) + ": map gives " + direct.to_string() + ", carlet_gray(pack) gives " +
                   composed.to_string();
        }
        return std::nullopt;
    });
}

}  // namespace

std::string to_string(Mutation m) {
    switch (m) {
        case Mutation::SwappedPhi4Bits: return "swapped-phi4-bits";
        case Mutation::WrongGamma: return "wrong-gamma";
        case Mutation::WrongSocle: return "wrong-socle";
    }
    return "?";
}

Hooks mutated(Mutation m) {
    Hooks h;
    switch (m) {
        case Mutation::SwappedPhi4Bits:
            h.phi4 = [](const RingElement& x) {
                auto v = ringgray::phi4(x);
                const bool third = v[2];
                v.set(2, v[4]);
                v.set(4, third);
                return v;
            };
            break;
        case Mutation::WrongGamma:
            h.hom_weight = [](const RingElement& x, double gamma) { return hom_weight_closed(x, gamma * 0.75); };
            break;
        case Mutation::WrongSocle:
            h.socle = [](RingParams p) {
                const RingElement two_power(std::int64_t{1} << (p.r() - 1), 0, p);
                return Ideal(p, {RingElement::zero(p), two_power}, {two_power});
            };
            break;
    }
    return h;
}

std::string to_string(Suite s) {
    switch (s) {
        case Suite::Frobenius: return "frobenius";
        case Suite::Weights: return "weights";
        case Suite::Isometries: return "isometries";
        case Suite::All: return "all";
    }
    return "?";
}

Suite parse_suite(std::string_view name) {
    for (auto s : {Suite::Frobenius, Suite::Weights, Suite::Isometries, Suite::All}) {
        if (name == to_string(s)) return s;
    }
    throw ParseError("unknown suite '" + std::string(name) + "' (expected frobenius, weights, isometries or all)");
}

std::vector<CheckResult> verify_frobenius(RingParams params, const Hooks& hooks) {
    std::vector<CheckResult> out;
    const auto ideals = all_ideals(params);
    const auto radical = jacobson_radical(params);
    const std::uint64_t half = std::uint64_t{1} << (2 * params.r() - 1);

    if (auto witness = kernel_ideal_witness(params, hooks.character)) {
        out.push_back(fail("frobenius.character_generating", "a nonzero ideal lies in the kernel of the character",
                           join_elements(witness->elements())));
    } else {
        out.push_back(pass("frobenius.character_generating",
                           "no nonzero ideal among " + std::to_string(ideals.size()) + " lies in the kernel"));
    }

    std::vector<Ideal> maximal;
    std::vector<Ideal> minimal;
    for (const auto& I : ideals) {
        if (I.size() == params.ring_size() || I.size() == 1) continue;
        const bool is_max = std::none_of(ideals.begin(), ideals.end(), [&](const Ideal& J) {
            return J.size() != params.ring_size() && J.size() > I.size() && I.is_subset_of(J);
        });
        const bool is_min = std::none_of(ideals.begin(), ideals.end(), [&](const Ideal& J) {
            return J.size() > 1 && J.size() < I.size() && J.is_subset_of(I);
        });
        if (is_max) maximal.push_back(I);
        if (is_min) minimal.push_back(I);
    }
    // r = 1: <2,u> = <u> is both maximal and minimal; the loops above handle it.

    if (maximal.size() == 1 && ideal_like_equal(maximal.front(), radical) && radical.size() == half) {
        out.push_back(pass("frobenius.radical_unique_maximal",
                           "<2,u> is the unique maximal ideal, " + std::to_string(radical.size()) + " elements"));
    } else {
        std::string witness = std::to_string(maximal.size()) + " maximal ideal(s):";
        for (const auto& I : maximal) witness += " " + join_elements(I.elements());
        out.push_back(fail("frobenius.radical_unique_maximal", "maximal ideal structure differs from <2,u>", witness));
    }

    const auto claimed_socle = hooks.socle(params);
    if (minimal.size() == 1 && ideal_like_equal(minimal.front(), claimed_socle)) {
        out.push_back(pass("frobenius.socle_unique_minimal",
                           "socle " + join_elements(claimed_socle.elements()) + " is the unique minimal nonzero ideal"));
    } else {
        std::string computed;
        for (const auto& I : minimal) computed += join_elements(I.elements()) + " ";
        out.push_back(fail("frobenius.socle_unique_minimal", "socle does not match the minimal nonzero ideals",
                           "socle " + join_elements(claimed_socle.elements()) + " vs minimal ideal(s) " + computed));
    }

    const auto quotient = params.ring_size() / radical.size();
    if (quotient == 2 && claimed_socle.size() == 2) {
        out.push_back(pass("frobenius.quotient_socle_order", "|R/J| = |Soc| = 2"));
    } else {
        out.push_back(fail("frobenius.quotient_socle_order", "orders differ",
                           "|R/J| = " + std::to_string(quotient) + ", |Soc| = " + std::to_string(claimed_socle.size())));
    }

    const auto units = unit_group(params);
    std::vector<RingElement> complement;
    for (const auto& x : all_elements(params)) {
        if (!radical.contains(x)) complement.push_back(x);
    }
    std::sort(complement.begin(), complement.end());
    auto sorted_units = units;
    std::sort(sorted_units.begin(), sorted_units.end());
    if (sorted_units == complement && units.size() == half) {
        out.push_back(pass("frobenius.units_complement", std::to_string(units.size()) + " units = R \\ <2,u>"));
    } else {
        out.push_back(fail("frobenius.units_complement", "unit group is not R \\ J of size 2^{2r-1}",
                           std::to_string(units.size()) + " units vs " + std::to_string(complement.size()) +
                               " non-radical elements"));
    }
    return out;
}

std::vector<CheckResult> verify_weights(RingParams params, double gamma, const Hooks& hooks) {
    std::vector<CheckResult> out;
    const auto hom = [&](const RingElement& x) { return hooks.hom_weight(x, gamma); };

    out.push_back(for_all_elements(
        "weights.closed_vs_character", params, "closed form equals character formula (gamma=" + num(gamma) + ")",
        [&](const RingElement& x) -> std::optional<std::string> {
            const auto closed = hom(x);
            const auto via_chi = hom_weight_character(x, gamma);
            if (std::abs(closed - via_chi) > kTol) {
                return "x=" + to_string(x) + ": closed " + num(closed) + ", character " + num(via_chi);
            }
            return std::nullopt;
        }));

    const auto hom_report = verify_homogeneity(params, hom, gamma);
    if (hom_report.passed()) {
        out.push_back(pass("weights.hom_homogeneous", "both axioms hold with gamma=" + num(gamma)));
    } else {
        out.push_back(fail("weights.hom_homogeneous", "homogeneity axioms violated",
                           hom_report.same_ideal_witness.value_or(hom_report.average_witness.value_or(""))));
    }

    // Over Z2+uZ2 the extended Lee weight is homogeneous, so the claim only
    // concerns r >= 2.
    if (params.r() >= 2) {
        const auto lee_report = verify_homogeneity(WeightSpec::lee(), params);
        if (!lee_report.passed()) {
            std::string detail = "Lee weight is not homogeneous:";
            if (!lee_report.same_ideal_same_weight) detail += " equal-ideal axiom fails (" + *lee_report.same_ideal_witness + ")";
            if (!lee_report.constant_average) detail += " average axiom fails (" + *lee_report.average_witness + ")";
            if (lee_report.constant_average) detail += "; average axiom holds with constant " + num(lee_report.gamma);
            out.push_back(pass("weights.lee_not_homogeneous", detail));
        } else {
            out.push_back(fail("weights.lee_not_homogeneous", "Lee weight satisfied both homogeneity axioms",
                               "average " + num(lee_report.gamma)));
        }
    }

    const auto s = hooks.socle(params);
    std::vector<RingElement> maximizers;
    for (const auto& x : all_elements(params)) {
        if (std::abs(hom(x) - 2.0 * gamma) <= kTol) maximizers.push_back(x);
    }
    std::vector<RingElement> socle_nonzero;
    for (const auto& x : s.elements()) {
        if (!x.is_zero()) socle_nonzero.push_back(x);
    }
    if (maximizers.size() == 1 && socle_nonzero.size() == 1 && maximizers.front() == socle_nonzero.front()) {
        out.push_back(pass("weights.socle_attains_max", "only " + to_string(maximizers.front()) + " has weight 2*gamma"));
    } else {
        out.push_back(fail("weights.socle_attains_max", "2*gamma is not attained exactly by the nonzero socle element",
                           "weight-2gamma elements " + join_elements(maximizers) + ", socle " + join_elements(s.elements())));
    }

    out.push_back(for_all_elements("weights.lee_symmetric", params, "w_L(-x) = w_L(x) and w_L(x) <= 2^r",
                                   [&](const RingElement& x) -> std::optional<std::string> {
                                       const auto w = lee_weight(x);
                                       if (w != lee_weight(-x) || w > params.modulus()) return "x=" + to_string(x);
                                       return std::nullopt;
                                   }));
    return out;
}

std::vector<CheckResult> verify_isometries(RingParams params, const Hooks& hooks) {
    std::vector<CheckResult> out;
    const double gamma = default_gamma(params);
    const auto hom = [&](const RingElement& x) { return hooks.hom_weight(x, gamma); };

    out.push_back(for_all_pairs("isometry.phi3.additive", params, "phi3(x+y) = phi3(x) + phi3(y)",
                                [&](const RingElement& x, const RingElement& y) -> std::optional<std::string> {
                                    const auto lhs = phi3(x + y);
                                    const auto px = phi3(x), py = phi3(y);
                                    const auto m = params.mask();
                                    if (lhs[0] != ((px[0] + py[0]) & m) || lhs[1] != ((px[1] + py[1]) & m)) {
                                        return "x=" + to_string(x) + ", y=" + to_string(y);
                                    }
                                    return std::nullopt;
                                }));
    out.push_back(for_all_elements("isometry.phi3.lee_preserving", params, "w_L(x) = w_L(b) + w_L(a+b) on phi3(x)",
                                   [&](const RingElement& x) -> std::optional<std::string> {
                                       const auto [b, c] = phi3(x);
                                       const auto pair_weight = lee_weight_residue(b, params.r()) +
                                                                lee_weight_residue(c, params.r());
                                       if (pair_weight != lee_weight(x)) return "x=" + to_string(x);
                                       return std::nullopt;
                                   }));

    if (params.r() == 2) {
        out.push_back(weight_preserving("isometry.phi2phi3.weight", params, hooks.phi2_phi3, lee_weight,
                                        "Hamming weight of phi2phi3(x) equals Lee weight"));
        out.push_back(distance_preserving("isometry.phi2phi3.distance", params, hooks.phi2_phi3, lee_weight,
                                          "phi2phi3 maps Lee distance to Hamming distance"));
        out.push_back(weight_preserving("isometry.phi4.weight", params, hooks.phi4, hom,
                                        "Hamming weight of phi4(x) equals homogeneous weight (gamma=4)"));
        out.push_back(distance_preserving("isometry.phi4.distance", params, hooks.phi4, hom,
                                          "phi4 maps homogeneous distance to Hamming distance"));
        out.push_back(decomposition("isometry.phi4.decomposition", params, hooks.phi4, "phi4 = carlet_gray o pack"));

        std::optional<std::string> nonlinear_witness;
        for (const auto& x : all_elements(params)) {
            for (const auto& y : all_elements(params)) {
                if (!nonlinear_witness && hooks.phi4(x + y) != (hooks.phi4(x) ^ hooks.phi4(y))) {
                    nonlinear_witness = "phi4(" + to_string(x) + " + " + to_string(y) + ") != phi4(" + to_string(x) +
                                        ") + phi4(" + to_string(y) + ")";
                }
            }
        }
        if (nonlinear_witness) {
            out.push_back(pass("isometry.phi4.nonlinear", *nonlinear_witness));
        } else {
            out.push_back(fail("isometry.phi4.nonlinear", "phi4 is additive on every pair", "none"));
        }
    }

    if (params.r() == 3) {
        out.push_back(weight_preserving("isometry.phi5.weight", params, hooks.phi5, hom,
                                        "Hamming weight of phi5(x) equals homogeneous weight (gamma=16)"));
        out.push_back(distance_preserving("isometry.phi5.distance", params, hooks.phi5, hom,
                                          "phi5 maps homogeneous distance to Hamming distance"));
        out.push_back(decomposition("isometry.phi5.decomposition", params, hooks.phi5, "phi5 = carlet_gray o pack"));
    }

    out.push_back(weight_preserving("isometry.general.weight", params, hooks.phi_general, hom,
                                    "Hamming weight of phi_general(x) equals homogeneous weight (gamma=" + num(gamma) + ")"));
    out.push_back(distance_preserving("isometry.general.distance", params, hooks.phi_general, hom,
                                      "phi_general maps homogeneous distance to Hamming distance"));
    out.push_back(decomposition("isometry.general.decomposition", params, hooks.phi_general,
                                "phi_general = carlet_gray o pack"));
    return out;
}

std::vector<CheckResult> verify_code_theorems(const GeneratorMatrix& gen, MapId map, std::uint64_t cap,
                                              const Hooks& hooks) {
    if (!is_binary_map(map)) throw DomainError("verify_code_theorems: phi3 is not a binary map");
    const auto params = gen.params();
    require_domain(map, params);
    std::vector<CheckResult> out;
    const auto code = enumerate_codewords(gen, cap);

    GrayMap coordinate_map;
    switch (map) {
        case MapId::Phi2Phi3: coordinate_map = hooks.phi2_phi3; break;
        case MapId::Phi4: coordinate_map = hooks.phi4; break;
        case MapId::Phi5: coordinate_map = hooks.phi5; break;
        default: coordinate_map = hooks.phi_general; break;
    }
    const auto image = binary_image(code, coordinate_map, map);
    const auto& rep = image.report;
    const std::string label = to_string(map);

    bool ring_linear = true;
    std::string linear_witness;
    for (const auto& c : code.codewords()) {
        for (const auto& d : code.codewords()) {
            Word sum(c.size(), RingElement::zero(params));
            for (std::size_t j = 0; j < c.size(); ++j) sum[j] = c[j] + d[j];
            if (!code.contains(sum)) {
                ring_linear = false;
                linear_witness = "sum of two codewords missing";
                break;
            }
        }
        if (!ring_linear) break;
        for (const auto& s : all_elements(params)) {
            Word scaled(c);
            for (auto& x : scaled) x = s * x;
            if (!code.contains(scaled)) {
                ring_linear = false;
                linear_witness = "scalar multiple by " + to_string(s) + " missing";
                break;
            }
        }
        if (!ring_linear) break;
    }
    out.push_back(ring_linear ? pass("code.ring_linear", "C is closed under addition and scaling, |C| = " +
                                                             std::to_string(code.size()))
                              : fail("code.ring_linear", "C is not an R-submodule", linear_witness));

    const std::size_t expected_length = gen.n() * coordinate_length(map, params);
    const bool lengths_ok = std::all_of(image.words.begin(), image.words.end(),
                                        [&](const BitVector& w) { return w.size() == expected_length; });
    out.push_back(lengths_ok ? pass("code.image_length", label + " image length " + std::to_string(expected_length) +
                                                             " = " + std::to_string(coordinate_length(map, params)) +
                                                             "n")
                             : fail("code.image_length", "image word of unexpected length",
                                    "expected " + std::to_string(expected_length) + ", got " +
                                        std::to_string(rep.image_length)));

    out.push_back(rep.image_size == code.size()
                      ? pass("code.image_cardinality", "|image| = |C| = " + std::to_string(code.size()))
                      : fail("code.image_cardinality", "map is not injective on C",
                             "|image| = " + std::to_string(rep.image_size) + ", |C| = " + std::to_string(code.size())));

    const WeightSpec spec = map == MapId::Phi2Phi3 ? WeightSpec::lee() : WeightSpec::homogeneous_for(params);
    if (code.size() >= 2) {
        const auto ring_d = min_distance(code, spec);
        const auto ring_w = min_weight(code, spec);
        const auto image_d = *rep.min_hamming_distance;
        out.push_back(image_d == ring_d
                          ? pass("code.distance_transfer", "image distance " + num(image_d) + " = " +
                                                               to_string(spec.kind) + " distance of C")
                          : fail("code.distance_transfer", "image distance differs from ring distance",
                                 "image " + num(image_d) + ", ring " + num(ring_d)));
        out.push_back(ring_d == ring_w
                          ? pass("code.min_distance_equals_min_weight", to_string(spec.kind) + " d = w = " + num(ring_d))
                          : fail("code.min_distance_equals_min_weight", "pairwise minimum differs from minimum weight",
                                 "d " + num(ring_d) + ", w " + num(ring_w)));
    } else {
        out.push_back(pass("code.distance_transfer", "zero code: no distinct pairs"));
        out.push_back(pass("code.min_distance_equals_min_weight", "zero code: no distinct pairs"));
    }

    std::ostringstream obs;
    obs << "free=" << (code.is_free() ? "yes" : "no") << " k=" << gen.k() << " log2|image|=" << rep.log2_size
        << " span_dim=" << rep.span_dim << " linear=" << (rep.is_linear ? "yes" : "no");
    if (map == MapId::Phi2Phi3 && code.is_free()) {
        const double claimed = 4.0 * static_cast<double>(gen.k());
        out.push_back(std::abs(rep.log2_size - claimed) <= kTol
                          ? pass("code.free_rank", obs.str() + "; log2|image| = 4k")
                          : fail("code.free_rank", "free code image does not have 2^{4k} words", obs.str()));
    } else {
        out.push_back(pass("code.free_rank", obs.str() + " (observation only)"));
    }

    std::sort(out.begin(), out.end(), [](const CheckResult& x, const CheckResult& y) { return x.claim_id < y.claim_id; });
    return out;
}

std::vector<CheckResult> run_suite(RingParams params, Suite suite, std::optional<double> gamma, const Hooks& hooks) {
    std::vector<CheckResult> out;
    auto append = [&out](std::vector<CheckResult> more) {
        out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
    };
    if (suite == Suite::Frobenius || suite == Suite::All) append(verify_frobenius(params, hooks));
    if (suite == Suite::Weights || suite == Suite::All) append(verify_weights(params, gamma.value_or(default_gamma(params)), hooks));
    if (suite == Suite::Isometries || suite == Suite::All) append(verify_isometries(params, hooks));
    std::sort(out.begin(), out.end(), [](const CheckResult& x, const CheckResult& y) { return x.claim_id < y.claim_id; });
    return out;
}

bool all_passed(const std::vector<CheckResult>& results) noexcept {
    return std::all_of(results.begin(), results.end(), [](const CheckResult& c) { return c.passed; });
}

std::string format_table(const std::vector<CheckResult>& results) {
    std::size_t width = 8;
    for (const auto& c : results) width = std::max(width, c.claim_id.size());
    std::ostringstream os;
    os << std::left << std::setw(static_cast<int>(width)) << "claim" << "  result  detail\n";
    for (const auto& c : results) {
        os << std::left << std::setw(static_cast<int>(width)) << c.claim_id << "  " << (c.passed ? "PASS  " : "FAIL  ")
           << "  " << c.detail;
        if (c.counterexample) os << " [witness: " << *c.counterexample << "]";
        os << '\n';
    }
    return os.str();
}

}  // namespace ringgray::verify
