#pragma once

// Test-only reference computations. None of these call into the code paths
// they are used to check: arithmetic goes through 2x2 matrices, ideals through
// subset enumeration, characters through std::polar, and so on.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <numbers>
#include <set>
#include <string>
#include <vector>

namespace oracle {

/// a + ub as the upper-triangular matrix [[a, b], [0, a]] over Z_m.
struct Mat2 {
    long long m00, m01, m10, m11;
};

inline Mat2 as_matrix(long long a, long long b) { return {a, b, 0, a}; }

inline Mat2 mat_mul(const Mat2& x, const Mat2& y, long long mod) {
    auto md = [mod](long long v) { return ((v % mod) + mod) % mod; };
    return {md(x.m00 * y.m00 + x.m01 * y.m10), md(x.m00 * y.m01 + x.m01 * y.m11), md(x.m10 * y.m00 + x.m11 * y.m10),
            md(x.m10 * y.m01 + x.m11 * y.m11)};
}

/// Product (a, b) of two ring elements via matrix multiplication.
inline std::pair<long long, long long> ring_mul(long long a, long long b, long long c, long long d, int r) {
    const long long mod = 1LL << r;
    const auto p = mat_mul(as_matrix(a, b), as_matrix(c, d), mod);
    return {p.m00, p.m01};
}

/// Elements encoded as a*M + b (M = 2^r) to stay independent of the library's index layout.
using Elem = std::pair<long long, long long>;

inline std::vector<Elem> ring_elements(int r) {
    std::vector<Elem> out;
    const long long m = 1LL << r;
    for (long long a = 0; a < m; ++a)
        for (long long b = 0; b < m; ++b) out.emplace_back(a, b);
    return out;
}

/// Every subset of R that is an ideal, by testing all 2^{|R|} subsets.
inline std::vector<std::set<Elem>> ideals_by_subsets(int r) {
    const auto ring = ring_elements(r);
    const long long m = 1LL << r;
    const std::size_t n = ring.size();
    std::vector<std::set<Elem>> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (!(mask & 1U)) continue;  // ring[0] is zero
        std::vector<Elem> members;
        std::set<Elem> s;
        for (std::size_t i = 0; i < n; ++i)
            if ((mask >> i) & 1U) {
                members.push_back(ring[i]);
                s.insert(ring[i]);
            }
        bool ok = true;
        for (const auto& x : members) {
            for (const auto& y : members)
                if (!s.count({(x.first + y.first) % m, (x.second + y.second) % m})) {
                    ok = false;
                    break;
                }
            if (!ok) break;
            for (const auto& t : ring)
                if (!s.count(ring_mul(t.first, t.second, x.first, x.second, r))) {
                    ok = false;
                    break;
                }
            if (!ok) break;
        }
        if (ok) out.push_back(std::move(s));
    }
    return out;
}

/// Gamma * (1 - mean_{v unit} chi(xv)) with chi evaluated through std::polar.
inline double hom_weight_by_characters(long long a, long long b, int r, double gamma) {
    const long long m = 1LL << r;
    std::complex<double> sum = 0;
    int units = 0;
    for (const auto& [c, d] : ring_elements(r)) {
        if (c % 2 == 0) continue;
        const auto [p, q] = ring_mul(a, b, c, d, r);
        sum += std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>((p + q) % m) / static_cast<double>(m));
        ++units;
    }
    return gamma * (1.0 - sum.real() / units);
}

inline int lee_residue(long long x, long long m) { return static_cast<int>(std::min(x, m - x)); }

/// Truth table of x_m + sum x_i y_i as a 0/1 string, y tuples enumerated with
/// y_1 changing slowest.
inline std::string carlet_table(unsigned long long x, int m) {
    std::vector<int> digit(static_cast<std::size_t>(m) + 1);
    for (int i = 1; i <= m; ++i) digit[static_cast<std::size_t>(i)] = static_cast<int>((x >> (i - 1)) & 1ULL);
    std::string out;
    std::vector<int> y(static_cast<std::size_t>(m), 0);  // y[1..m-1]
    const std::size_t points = std::size_t{1} << (m - 1);
    for (std::size_t p = 0; p < points; ++p) {
        std::size_t rest = p;
        for (int i = m - 1; i >= 1; --i) {
            y[static_cast<std::size_t>(i)] = static_cast<int>(rest % 2);
            rest /= 2;
        }
        int f = digit[static_cast<std::size_t>(m)];
        for (int i = 1; i < m; ++i) f += digit[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(i)];
        out.push_back(static_cast<char>('0' + (f % 2)));
    }
    return out;
}

inline int string_distance(const std::string& x, const std::string& y) {
    int d = 0;
    for (std::size_t i = 0; i < x.size(); ++i) d += x[i] != y[i];
    return d;
}

/// Minimum distance over distinct strings.
inline int min_pairwise_distance(const std::vector<std::string>& words) {
    int best = 1 << 30;
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j)
            if (words[i] != words[j]) best = std::min(best, string_distance(words[i], words[j]));
    return best;
}

inline std::string xor_strings(const std::string& x, const std::string& y) {
    std::string out(x.size(), '0');
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] == y[i] ? '0' : '1';
    return out;
}

/// Contains the zero word and every pairwise XOR.
inline bool closed_under_xor(const std::vector<std::string>& words) {
    const std::set<std::string> s(words.begin(), words.end());
    if (!s.count(std::string(words.front().size(), '0'))) return false;
    for (const auto& x : s)
        for (const auto& y : s)
            if (!s.count(xor_strings(x, y))) return false;
    return true;
}

/// log2 of the size of the XOR closure of `words` (small sets only).
inline int span_dim_by_closure(const std::vector<std::string>& words) {
    std::set<std::string> span{std::string(words.front().size(), '0')};
    for (const auto& w : words) {
        std::set<std::string> next = span;
        for (const auto& s : span) next.insert(xor_strings(s, w));
        span = std::move(next);
    }
    int d = 0;
    while ((std::size_t{1} << d) < span.size()) ++d;
    return d;
}

}  // namespace oracle
