#include "ringgray/bitvector.hpp"

#include <algorithm>
#include <bit>

#include "ringgray/errors.hpp"

namespace ringgray {

BitVector BitVector::from_string(std::string_view bits) {
    BitVector out(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            out.set(i, true);
        } else if (bits[i] != '0') {
            throw ParseError("bit string: unexpected character '" + std::string(1, bits[i]) + "'", 0, i + 1);
        }
    }
    return out;
}

std::size_t BitVector::popcount() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

bool BitVector::is_zero() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

void BitVector::append(const BitVector& tail) {
    const std::size_t offset = size_;
    size_ += tail.size_;
    words_.resize((size_ + 63) / 64, 0);
    if ((offset & 63) == 0) {
        std::copy(tail.words_.begin(), tail.words_.end(), words_.begin() + static_cast<std::ptrdiff_t>(offset >> 6));
        return;
    }
    const unsigned shift = offset & 63;
    for (std::size_t i = 0; i < tail.words_.size(); ++i) {
        const std::size_t dst = (offset >> 6) + i;
        words_[dst] |= tail.words_[i] << shift;
        if (dst + 1 < words_.size()) words_[dst + 1] |= tail.words_[i] >> (64 - shift);
    }
}

BitVector& BitVector::operator^=(const BitVector& other) {
    if (size_ != other.size_) {
        throw DomainError("bit vector length mismatch: " + std::to_string(size_) + " vs " + std::to_string(other.size_));
    }
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
}

std::string BitVector::to_string() const {
    std::string out(size_, '0');
    for (std::size_t i = 0; i < size_; ++i) {
        if ((*this)[i]) out[i] = '1';
    }
    return out;
}

std::string BitVector::to_hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out;
    out.reserve((size_ + 3) / 4);
    for (std::size_t i = 0; i < size_; i += 4) {
        unsigned nibble = 0;
        for (std::size_t j = 0; j < 4; ++j) {
            nibble <<= 1;
            if (i + j < size_ && (*this)[i + j]) nibble |= 1U;
        }
        out.push_back(kDigits[nibble]);
    }
    return out;
}

std::strong_ordering operator<=>(const BitVector& x, const BitVector& y) noexcept {
    if (auto c = x.size_ <=> y.size_; c != 0) return c;
    for (std::size_t i = 0; i < x.words_.size(); ++i) {
        const auto diff = x.words_[i] ^ y.words_[i];
        if (diff == 0) continue;
        const auto low = std::countr_zero(diff);
        return ((x.words_[i] >> low) & 1U) ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

std::size_t hamming_distance(const BitVector& x, const BitVector& y) {
    if (x.size() != y.size()) {
        throw DomainError("bit vector length mismatch: " + std::to_string(x.size()) + " vs " + std::to_string(y.size()));
    }
    return hamming_distance_words(x.words().data(), y.words().data(), x.words().size());
}

}  // namespace ringgray
