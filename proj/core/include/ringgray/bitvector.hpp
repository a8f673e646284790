#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ringgray {

/// Fixed-length word over F2, packed 64 coordinates per machine word.
/// Coordinate 0 is the leftmost position of the tuples written in the maps'
/// formulas; it lives in bit 0 of word 0. Unused high bits of the last word
/// are always zero.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    /// Parses a 0/1 string; throws ParseError on any other character.
    static BitVector from_string(std::string_view bits);

    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }
    std::span<const std::uint64_t> words() const noexcept { return words_; }

    bool operator[](std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::size_t i, bool value) noexcept {
        const auto bit = std::uint64_t{1} << (i & 63);
        if (value) words_[i >> 6] |= bit; else words_[i >> 6] &= ~bit;
    }
    void flip(std::size_t i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    std::size_t popcount() const noexcept;
    bool is_zero() const noexcept;

    /// Concatenation: `tail` occupies coordinates [size(), size() + tail.size()).
    void append(const BitVector& tail);

    /// Throws DomainError on length mismatch.
    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector x, const BitVector& y) { return x ^= y; }

    /// "0110..." with coordinate 0 first.
    std::string to_string() const;
    /// Hex digits, four coordinates per digit, coordinate 0 in the most
    /// significant position of the first digit; a short final group is padded
    /// with zero coordinates on the right.
    std::string to_hex() const;

    friend bool operator==(const BitVector&, const BitVector&) = default;
    /// Shorter vectors first, then the order of to_string().
    friend std::strong_ordering operator<=>(const BitVector& x, const BitVector& y) noexcept;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Number of differing coordinates; throws DomainError on length mismatch.
std::size_t hamming_distance(const BitVector& x, const BitVector& y);

/// Word-level kernel used by the pairwise scans: popcount(x ^ y) over n words.
inline std::size_t hamming_distance_words(const std::uint64_t* x, const std::uint64_t* y, std::size_t n) noexcept {
    std::size_t sum = 0;
    for (std::size_t i = 0; i < n; ++i) sum += static_cast<std::size_t>(__builtin_popcountll(x[i] ^ y[i]));
    return sum;
}

}  // namespace ringgray

template <>
struct std::hash<ringgray::BitVector> {
    std::size_t operator()(const ringgray::BitVector& v) const noexcept {
        std::uint64_t h = 0xcbf29ce484222325ULL ^ v.size();
        for (auto w : v.words()) {
            h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};
