#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "ringgray/bitvector.hpp"
#include "ringgray/gray.hpp"
#include "ringgray/ring.hpp"
#include "ringgray/weights.hpp"

namespace ringgray {

using Word = std::vector<RingElement>;

/// Default bound on the number of message vectors |R|^k an enumeration may visit.
inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 24;

/// k x n matrix over R_r whose rows span a code.
class GeneratorMatrix {
public:
    /// Throws DomainError unless the rows are nonempty, rectangular and share one ring.
    explicit GeneratorMatrix(std::vector<Word> rows);

    RingParams params() const noexcept { return rows_.front().front().params(); }
    std::size_t k() const noexcept { return rows_.size(); }
    std::size_t n() const noexcept { return rows_.front().size(); }
    const std::vector<Word>& rows() const noexcept { return rows_; }
    const Word& row(std::size_t i) const { return rows_.at(i); }
    const RingElement& at(std::size_t i, std::size_t j) const { return rows_.at(i).at(j); }

    /// Matrix with row i removed; requires k >= 2.
    GeneratorMatrix without_row(std::size_t i) const;

    friend bool operator==(const GeneratorMatrix&, const GeneratorMatrix&) = default;
    /// Lexicographic over rows, then entries.
    friend std::strong_ordering operator<=>(const GeneratorMatrix& x, const GeneratorMatrix& y);

private:
    std::vector<Word> rows_;
};

/// The row span {uG : u in R^k}, held as a sorted list of distinct codewords.
class LinearCode {
public:
    LinearCode(GeneratorMatrix gen, std::vector<Word> codewords);

    const GeneratorMatrix& generator() const noexcept { return gen_; }
    RingParams params() const noexcept { return gen_.params(); }
    std::size_t n() const noexcept { return gen_.n(); }
    std::size_t k() const noexcept { return gen_.k(); }
    const std::vector<Word>& codewords() const noexcept { return codewords_; }
    std::uint64_t size() const noexcept { return codewords_.size(); }
    bool contains(const Word& w) const;
    /// |C| = |R|^k, i.e. the code is a free module of rank k.
    bool is_free() const noexcept;

private:
    GeneratorMatrix gen_;
    std::vector<Word> codewords_;
};

/// Throws ResourceError when |R|^k exceeds `cap`.
LinearCode enumerate_codewords(const GeneratorMatrix& gen, std::uint64_t cap = kDefaultEnumerationCap);

bool is_minimal_generator(const GeneratorMatrix& gen, std::uint64_t cap = kDefaultEnumerationCap);

/// Minimum over nonzero codewords; throws DomainError for the zero code.
WeightValue min_weight(const LinearCode& code, const WeightSpec& spec);

/// Minimum over distinct pairs, by pairwise scan (never via min_weight).
WeightValue min_distance(const LinearCode& code, const WeightSpec& spec);

struct WeightEnumerator {
    WeightSpec spec;
    std::map<WeightValue, std::uint64_t> counts;

    std::uint64_t total() const noexcept;
};

WeightEnumerator weight_enumerator(const LinearCode& code, const WeightSpec& spec);

struct ImageReport {
    MapId map = MapId::General;
    std::size_t image_length = 0;
    std::uint64_t image_size = 0;
    bool is_linear = false;
    std::size_t span_dim = 0;
    /// Absent when the image has a single word.
    std::optional<WeightValue> min_hamming_distance;
    double log2_size = 0.0;
};

struct BinaryImage {
    std::vector<BitVector> words;  // sorted, distinct
    ImageReport report;
};

/// Applies a binary map coordinatewise to every codeword. Throws DomainError for
/// phi3 or when the map is not defined at this r.
BinaryImage binary_image(const LinearCode& code, MapId map);
/// Same, with an arbitrary coordinate map (used by the verification hooks).
BinaryImage binary_image(const LinearCode& code, const GrayMap& map, MapId label);

/// Zero word present and closed under XOR. Throws DomainError for an empty set
/// or mixed lengths.
bool is_linear_binary(std::span<const BitVector> words);

/// Dimension of the F2 span.
std::size_t f2_span_dim(std::span<const BitVector> words);

/// Minimum pairwise Hamming distance over distinct words; throws DomainError
/// if fewer than two distinct words are given.
WeightValue min_hamming_distance_image(std::span<const BitVector> words);

struct SearchHit {
    GeneratorMatrix gen;
    WeightValue min_weight;
};

struct SearchResult {
    bool exhaustive = false;
    std::uint64_t evaluated = 0;
    std::vector<SearchHit> hits;  // best first
};

struct SearchOptions {
    std::size_t top = 10;
    std::uint64_t cap = kDefaultEnumerationCap;
};

/// Samples `trials` k x n matrices from a generator seeded with `seed` (or
/// walks every matrix when |R|^{kn} <= trials), and keeps the best by minimum
/// weight, ties broken by matrix order. Matrices spanning the zero code are
/// skipped.
SearchResult search_codes(RingParams params, std::size_t n, std::size_t k, const WeightSpec& spec,
                          std::uint64_t trials, std::uint64_t seed, const SearchOptions& options = {});

}  // namespace ringgray
