#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ringgray/codes.hpp"
#include "ringgray/gray.hpp"
#include "ringgray/ring.hpp"
#include "ringgray/weights.hpp"

namespace ringgray::verify {

struct CheckResult {
    std::string claim_id;
    bool passed = false;
    std::string detail;
    std::optional<std::string> counterexample;
};

/// The implementation pieces the suites exercise. Replacing one with a broken
/// variant must make at least one suite report a failure.
struct Hooks {
    Character character = generating_character;
    std::function<WeightValue(const RingElement&, double)> hom_weight = hom_weight_closed;
    std::function<Ideal(RingParams)> socle = ringgray::socle;
    GrayMap phi2_phi3 = ringgray::phi2_phi3;
    GrayMap phi4 = ringgray::phi4;
    GrayMap phi5 = ringgray::phi5;
    GrayMap phi_general = ringgray::phi_general;
};

/// Documented corruptions used to show the suites are sensitive.
enum class Mutation {
    SwappedPhi4Bits,  ///< phi4 with its third and fifth coordinates exchanged
    WrongGamma,       ///< closed-form homogeneous weight evaluated at 3/4 of the requested gamma (3 instead of 4)
    WrongSocle,       ///< socle reported as {0, 2^{r-1}} (i.e. {0, 2} for r = 2)
};

std::string to_string(Mutation m);
Hooks mutated(Mutation m);

enum class Suite { Frobenius, Weights, Isometries, All };

std::string to_string(Suite s);
/// Throws ParseError for anything other than frobenius, weights, isometries, all.
Suite parse_suite(std::string_view name);

std::vector<CheckResult> verify_frobenius(RingParams params, const Hooks& hooks = {});
std::vector<CheckResult> verify_weights(RingParams params, double gamma, const Hooks& hooks = {});
std::vector<CheckResult> verify_isometries(RingParams params, const Hooks& hooks = {});

/// Image length law, cardinality law, distance transfer and the free-rank
/// observation for one code under one binary map.
std::vector<CheckResult> verify_code_theorems(const GeneratorMatrix& gen, MapId map,
                                              std::uint64_t cap = kDefaultEnumerationCap, const Hooks& hooks = {});

/// Runs the named suite(s); weights use `gamma` (default 2^{2r-2}). Results are
/// sorted by claim_id.
std::vector<CheckResult> run_suite(RingParams params, Suite suite, std::optional<double> gamma = std::nullopt,
                                   const Hooks& hooks = {});

bool all_passed(const std::vector<CheckResult>& results) noexcept;

/// Fixed-width text table, one row per check.
std::string format_table(const std::vector<CheckResult>& results);

}  // namespace ringgray::verify
