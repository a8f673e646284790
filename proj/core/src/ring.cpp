#include "ringgray/ring.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include "ringgray/errors.hpp"

namespace ringgray {

RingParams::RingParams(int r) : r_(r) {
    if (r < 1 || r > kMaxR) {
        throw DomainError("ring exponent r must lie in [1, " + std::to_string(kMaxR) + "], got " + std::to_string(r));
    }
}

namespace {

std::uint32_t reduce(std::int64_t v, RingParams p) {
    const auto m = static_cast<std::int64_t>(p.modulus());
    auto res = v % m;
    if (res < 0) res += m;
    return static_cast<std::uint32_t>(res);
}

void require_same_ring(const RingElement& x, const RingElement& y) {
    if (x.params() != y.params()) {
        throw DomainError("ring mismatch: r=" + std::to_string(x.r()) + " vs r=" + std::to_string(y.r()));
    }
}

// Membership bitmap over element indices.
class ElementSet {
public:
    explicit ElementSet(RingParams p) : params_(p), present_(p.ring_size(), false) {}

    bool contains(const RingElement& x) const { return present_[x.index()]; }
    const std::vector<RingElement>& members() const { return members_; }

    bool insert(const RingElement& x) {
        if (present_[x.index()]) return false;
        present_[x.index()] = true;
        members_.push_back(x);
        return true;
    }

    // Replaces the set (assumed an additive subgroup) by S + <t>.
    void add_cyclic(const RingElement& t) {
        if (contains(t)) return;
        const std::vector<RingElement> base = members_;
        RingElement shift = t;
        while (!contains(shift)) {
            for (const auto& s : base) insert(s + shift);
            shift += t;
        }
    }

    std::vector<RingElement> sorted() const {
        auto out = members_;
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    RingParams params_;
    std::vector<bool> present_;
    std::vector<RingElement> members_;
};

Ideal close_generators(RingParams p, std::span<const RingElement> gens) {
    ElementSet set(p);
    set.insert(RingElement::zero(p));
    const auto ring = all_elements(p);
    for (const auto& g : gens) {
        for (const auto& s : ring) set.add_cyclic(s * g);
    }
    return Ideal(p, set.sorted(), std::vector<RingElement>(gens.begin(), gens.end()));
}

}  // namespace

RingElement::RingElement(std::int64_t a, std::int64_t b, RingParams params)
    : a_(reduce(a, params)), b_(reduce(b, params)), params_(params) {}

RingElement RingElement::from_index(std::uint32_t index, RingParams params) {
    return {index & params.mask(), (index >> params.r()) & params.mask(), params};
}

RingElement RingElement::operator-() const { return {-static_cast<std::int64_t>(a_), -static_cast<std::int64_t>(b_), params_}; }

RingElement operator+(const RingElement& x, const RingElement& y) {
    require_same_ring(x, y);
    return {std::int64_t{x.a_} + y.a_, std::int64_t{x.b_} + y.b_, x.params_};
}

RingElement operator-(const RingElement& x, const RingElement& y) { return x + (-y); }

RingElement operator*(const RingElement& x, const RingElement& y) {
    require_same_ring(x, y);
    // (a + ub)(c + ud) = ac + u(ad + bc); u^2 = 0.
    const std::uint64_t a = x.a_, b = x.b_, c = y.a_, d = y.b_;
    const auto m = x.params_.mask();
    return {static_cast<std::int64_t>((a * c) & m), static_cast<std::int64_t>((a * d + b * c) & m), x.params_};
}

std::strong_ordering operator<=>(const RingElement& x, const RingElement& y) noexcept {
    if (auto c = x.r() <=> y.r(); c != 0) return c;
    if (auto c = x.a_ <=> y.a_; c != 0) return c;
    return x.b_ <=> y.b_;
}

std::string to_string(const RingElement& x) {
    if (x.b() == 0) return std::to_string(x.a());
    std::string upart = x.b() == 1 ? "u" : std::to_string(x.b()) + "u";
    if (x.a() == 0) return upart;
    return std::to_string(x.a()) + "+" + upart;
}

RingElement add(const RingElement& x, const RingElement& y) { return x + y; }
RingElement mul(const RingElement& x, const RingElement& y) { return x * y; }

std::vector<RingElement> all_elements(RingParams params) {
    std::vector<RingElement> out;
    out.reserve(params.ring_size());
    for (std::uint32_t i = 0; i < params.ring_size(); ++i) out.push_back(RingElement::from_index(i, params));
    return out;
}

bool is_unit(const RingElement& x) noexcept { return (x.a() & 1U) != 0; }

std::vector<RingElement> unit_group(RingParams params) {
    std::vector<RingElement> out;
    for (const auto& x : all_elements(params)) {
        if (is_unit(x)) out.push_back(x);
    }
    return out;
}

Ideal::Ideal(RingParams params, std::vector<RingElement> elements, std::vector<RingElement> generators)
    : params_(params), elements_(std::move(elements)), generators_(std::move(generators)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool Ideal::contains(const RingElement& x) const { return std::binary_search(elements_.begin(), elements_.end(), x); }

bool Ideal::is_subset_of(const Ideal& other) const {
    return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(), elements_.end());
}

Ideal principal_ideal(const RingElement& x) {
    std::vector<RingElement> multiples;
    for (const auto& s : all_elements(x.params())) multiples.push_back(s * x);
    return Ideal(x.params(), std::move(multiples), {x});
}

Ideal ideal_from_generators(std::span<const RingElement> generators) {
    if (generators.empty()) throw DomainError("ideal_from_generators: empty generator list");
    const auto p = generators.front().params();
    for (const auto& g : generators) {
        if (g.params() != p) throw DomainError("ideal_from_generators: generators from different rings");
    }
    return close_generators(p, generators);
}

Ideal ideal_from_generators(std::initializer_list<RingElement> generators) {
    return ideal_from_generators(std::span<const RingElement>(generators.begin(), generators.size()));
}

Ideal ideal_sum(const Ideal& x, const Ideal& y) {
    if (x.params() != y.params()) throw DomainError("ideal_sum: ring mismatch");
    ElementSet set(x.params());
    for (const auto& e : x.elements()) set.insert(e);
    for (const auto& e : y.elements()) set.add_cyclic(e);
    auto gens = x.generators();
    gens.insert(gens.end(), y.generators().begin(), y.generators().end());
    return Ideal(x.params(), set.sorted(), std::move(gens));
}

Ideal ideal_intersection(const Ideal& x, const Ideal& y) {
    if (x.params() != y.params()) throw DomainError("ideal_intersection: ring mismatch");
    std::vector<RingElement> common;
    std::set_intersection(x.elements().begin(), x.elements().end(), y.elements().begin(), y.elements().end(),
                          std::back_inserter(common));
    // Greedy generating set: keep an element only if it is not already generated.
    std::vector<RingElement> gens;
    Ideal spanned = principal_ideal(RingElement::zero(x.params()));
    for (const auto& e : common) {
        if (spanned.contains(e)) continue;
        gens.push_back(e);
        spanned = ideal_from_generators(gens);
    }
    if (gens.empty()) gens.push_back(RingElement::zero(x.params()));
    return Ideal(x.params(), std::move(common), std::move(gens));
}

std::vector<Ideal> all_ideals(RingParams params) {
    if (params.r() > kBruteForceMaxR) {
        throw ResourceError("all_ideals: ring order 4^" + std::to_string(params.r()) + " exceeds brute-force cap",
                            params.ring_size(), std::uint64_t{1} << (2 * kBruteForceMaxR));
    }
    // Every ideal is a finite sum of principal ideals, so closing the set of
    // principal ideals under pairwise sums reaches all of them.
    auto key_less = [](const Ideal& x, const Ideal& y) { return x.elements() < y.elements(); };
    std::set<Ideal, decltype(key_less)> found(key_less);
    for (const auto& x : all_elements(params)) found.insert(principal_ideal(x));

    bool grew = true;
    while (grew) {
        grew = false;
        const std::vector<Ideal> snapshot(found.begin(), found.end());
        for (std::size_t i = 0; i < snapshot.size(); ++i) {
            for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
                if (snapshot[i].is_subset_of(snapshot[j]) || snapshot[j].is_subset_of(snapshot[i])) continue;
                grew |= found.insert(ideal_sum(snapshot[i], snapshot[j])).second;
            }
        }
    }

    std::vector<Ideal> out(found.begin(), found.end());
    std::stable_sort(out.begin(), out.end(), [](const Ideal& x, const Ideal& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x.elements() < y.elements();
    });
    return out;
}

Ideal jacobson_radical(RingParams params) {
    return ideal_from_generators({RingElement(2, 0, params), RingElement::u(params)});
}

Ideal socle(RingParams params) {
    return principal_ideal(RingElement(0, std::int64_t{1} << (params.r() - 1), params));
}

UnitComplex UnitComplex::root_of_unity(std::uint64_t k, std::uint64_t n) {
    k %= n;
    if ((4 * k) % n == 0) {
        switch ((4 * k) / n) {
            case 0: return {1.0, 0.0};
            case 1: return {0.0, 1.0};
            case 2: return {-1.0, 0.0};
            default: return {0.0, -1.0};
        }
    }
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    return {std::cos(theta), std::sin(theta)};
}

std::uint32_t character_exponent(const RingElement& x) noexcept { return (x.a() + x.b()) & x.params().mask(); }

UnitComplex generating_character(const RingElement& x) {
    return UnitComplex::root_of_unity(character_exponent(x), x.params().modulus());
}

std::optional<Ideal> kernel_ideal_witness(RingParams params, const Character& chi) {
    constexpr double kTol = 1e-12;
    for (const auto& ideal : all_ideals(params)) {
        if (ideal.size() < 2) continue;
        const bool in_kernel = std::all_of(ideal.elements().begin(), ideal.elements().end(), [&](const RingElement& x) {
            const auto v = chi(x);
            return std::abs(v.re - 1.0) <= kTol && std::abs(v.im) <= kTol;
        });
        if (in_kernel) return ideal;
    }
    return std::nullopt;
}

bool verify_generating(RingParams params, const Character& chi) { return !kernel_ideal_witness(params, chi).has_value(); }

bool verify_generating(RingParams params) { return verify_generating(params, generating_character); }

}  // namespace ringgray
