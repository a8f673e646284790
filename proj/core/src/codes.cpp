#include "ringgray/codes.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <random>
#include <set>

#include "ringgray/errors.hpp"

namespace ringgray {

namespace {

using IndexWord = std::vector<std::uint32_t>;

// Arithmetic directly on element indices a + 2^r b.
struct IndexArith {
    RingParams p;

    std::uint32_t add(std::uint32_t x, std::uint32_t y) const noexcept {
        const auto m = p.mask();
        const int r = p.r();
        return ((x + y) & m) | ((((x >> r) + (y >> r)) & m) << r);
    }
    std::uint32_t sub(std::uint32_t x, std::uint32_t y) const noexcept {
        const auto m = p.mask();
        const int r = p.r();
        return ((x - y) & m) | ((((x >> r) - (y >> r)) & m) << r);
    }
};

std::vector<WeightValue> weight_table(RingParams p, const WeightSpec& spec) {
    std::vector<WeightValue> table(p.ring_size());
    for (std::uint32_t i = 0; i < p.ring_size(); ++i) table[i] = element_weight(RingElement::from_index(i, p), spec);
    return table;
}

void check_message_count(RingParams p, std::size_t k, std::uint64_t cap) {
    const std::uint64_t bits = static_cast<std::uint64_t>(2 * p.r()) * k;
    const std::uint64_t messages = bits >= 64 ? std::numeric_limits<std::uint64_t>::max() : std::uint64_t{1} << bits;
    if (messages > cap) {
        throw ResourceError("enumerating " + std::to_string(k) + " message coordinates over a ring of order " +
                                std::to_string(p.ring_size()),
                            messages, cap);
    }
}

std::vector<IndexWord> span_indices(const GeneratorMatrix& gen) {
    const auto p = gen.params();
    const IndexArith arith{p};
    const auto ring = all_elements(p);
    std::vector<IndexWord> current{IndexWord(gen.n(), 0)};
    for (const auto& row : gen.rows()) {
        // Distinct multiples s * row.
        std::vector<IndexWord> multiples;
        multiples.reserve(ring.size());
        for (const auto& s : ring) {
            IndexWord m(gen.n());
            for (std::size_t j = 0; j < gen.n(); ++j) m[j] = (s * row[j]).index();
            multiples.push_back(std::move(m));
        }
        std::sort(multiples.begin(), multiples.end());
        multiples.erase(std::unique(multiples.begin(), multiples.end()), multiples.end());

        std::vector<IndexWord> next;
        next.reserve(current.size() * multiples.size());
        for (const auto& c : current) {
            for (const auto& m : multiples) {
                IndexWord sum(gen.n());
                for (std::size_t j = 0; j < gen.n(); ++j) sum[j] = arith.add(c[j], m[j]);
                next.push_back(std::move(sum));
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        current = std::move(next);
    }
    return current;
}

std::vector<IndexWord> to_indices(const LinearCode& code) {
    std::vector<IndexWord> out;
    out.reserve(code.codewords().size());
    for (const auto& w : code.codewords()) {
        IndexWord iw(w.size());
        for (std::size_t j = 0; j < w.size(); ++j) iw[j] = w[j].index();
        out.push_back(std::move(iw));
    }
    return out;
}

}  // namespace

GeneratorMatrix::GeneratorMatrix(std::vector<Word> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) throw DomainError("generator matrix needs at least one row");
    const auto n = rows_.front().size();
    if (n == 0) throw DomainError("generator matrix needs at least one column");
    const auto p = rows_.front().front().params();
    for (const auto& row : rows_) {
        if (row.size() != n) throw DomainError("generator matrix rows have different lengths");
        for (const auto& x : row) {
            if (x.params() != p) throw DomainError("generator matrix entries from different rings");
        }
    }
}

GeneratorMatrix GeneratorMatrix::without_row(std::size_t i) const {
    auto rows = rows_;
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(i));
    return GeneratorMatrix(std::move(rows));
}

std::strong_ordering operator<=>(const GeneratorMatrix& x, const GeneratorMatrix& y) {
    return std::lexicographical_compare_three_way(x.rows_.begin(), x.rows_.end(), y.rows_.begin(), y.rows_.end(),
                                                  [](const Word& a, const Word& b) {
                                                      return std::lexicographical_compare_three_way(
                                                          a.begin(), a.end(), b.begin(), b.end());
                                                  });
}

LinearCode::LinearCode(GeneratorMatrix gen, std::vector<Word> codewords)
    : gen_(std::move(gen)), codewords_(std::move(codewords)) {
    std::sort(codewords_.begin(), codewords_.end());
    codewords_.erase(std::unique(codewords_.begin(), codewords_.end()), codewords_.end());
}

bool LinearCode::contains(const Word& w) const { return std::binary_search(codewords_.begin(), codewords_.end(), w); }

bool LinearCode::is_free() const noexcept {
    const std::uint64_t bits = static_cast<std::uint64_t>(2 * params().r()) * k();
    return bits < 64 && size() == (std::uint64_t{1} << bits);
}

LinearCode enumerate_codewords(const GeneratorMatrix& gen, std::uint64_t cap) {
    check_message_count(gen.params(), gen.k(), cap);
    const auto p = gen.params();
    std::vector<Word> words;
    for (const auto& iw : span_indices(gen)) {
        Word w;
        w.reserve(iw.size());
        for (auto i : iw) w.push_back(RingElement::from_index(i, p));
        words.push_back(std::move(w));
    }
    return LinearCode(gen, std::move(words));
}

bool is_minimal_generator(const GeneratorMatrix& gen, std::uint64_t cap) {
    const auto full = enumerate_codewords(gen, cap).size();
    // The empty row set spans {0}. Spans grow with the row set, so it is enough
    // to drop one row at a time.
    if (gen.k() == 1) return full > 1;
    for (std::size_t i = 0; i < gen.k(); ++i) {
        if (enumerate_codewords(gen.without_row(i), cap).size() == full) return false;
    }
    return true;
}

WeightValue min_weight(const LinearCode& code, const WeightSpec& spec) {
    const auto table = weight_table(code.params(), spec);
    std::optional<WeightValue> best;
    for (const auto& w : code.codewords()) {
        WeightValue total = 0.0;
        bool nonzero = false;
        for (const auto& x : w) {
            total += table[x.index()];
            nonzero |= !x.is_zero();
        }
        if (nonzero && (!best || total < *best)) best = total;
    }
    if (!best) throw DomainError("min_weight: no nonzero codeword");
    return *best;
}

WeightValue min_distance(const LinearCode& code, const WeightSpec& spec) {
    if (code.size() < 2) throw DomainError("min_distance: no nonzero codeword");
    const auto table = weight_table(code.params(), spec);
    const IndexArith arith{code.params()};
    const auto words = to_indices(code);
    const std::size_t n = code.n();
    WeightValue best = std::numeric_limits<WeightValue>::infinity();
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            WeightValue d = 0.0;
            for (std::size_t c = 0; c < n && d < best; ++c) d += table[arith.sub(words[i][c], words[j][c])];
            best = std::min(best, d);
        }
    }
    return best;
}

std::uint64_t WeightEnumerator::total() const noexcept {
    std::uint64_t t = 0;
    for (const auto& [w, count] : counts) t += count;
    return t;
}

WeightEnumerator weight_enumerator(const LinearCode& code, const WeightSpec& spec) {
    const auto table = weight_table(code.params(), spec);
    WeightEnumerator out{spec, {}};
    for (const auto& w : code.codewords()) {
        WeightValue total = 0.0;
        for (const auto& x : w) total += table[x.index()];
        ++out.counts[total];
    }
    return out;
}

BinaryImage binary_image(const LinearCode& code, MapId map) {
    if (!is_binary_map(map)) throw DomainError("binary_image: phi3 is not a binary map");
    require_domain(map, code.params());
    return binary_image(code, gray_map(map), map);
}

BinaryImage binary_image(const LinearCode& code, const GrayMap& map, MapId label) {
    BinaryImage image;
    image.words.reserve(code.codewords().size());
    for (const auto& w : code.codewords()) image.words.push_back(map_vector(w, map));
    std::sort(image.words.begin(), image.words.end());
    image.words.erase(std::unique(image.words.begin(), image.words.end()), image.words.end());

    auto& rep = image.report;
    rep.map = label;
    rep.image_length = image.words.front().size();
    rep.image_size = image.words.size();
    rep.span_dim = f2_span_dim(image.words);
    rep.is_linear = is_linear_binary(image.words);
    if (image.words.size() >= 2) rep.min_hamming_distance = min_hamming_distance_image(image.words);
    rep.log2_size = std::log2(static_cast<double>(rep.image_size));
    return image;
}

std::size_t f2_span_dim(std::span<const BitVector> words) {
    // Basis keyed by lowest set coordinate; reducing by ascending pivots never
    // reintroduces a lower coordinate.
    std::map<std::size_t, BitVector> basis;
    for (const auto& w : words) {
        BitVector v = w;
        while (!v.is_zero()) {
            std::size_t pivot = 0;
            const auto ws = v.words();
            for (std::size_t i = 0; i < ws.size(); ++i) {
                if (ws[i] != 0) {
                    pivot = 64 * i + static_cast<std::size_t>(std::countr_zero(ws[i]));
                    break;
                }
            }
            auto it = basis.find(pivot);
            if (it == basis.end()) {
                basis.emplace(pivot, std::move(v));
                break;
            }
            v ^= it->second;
        }
    }
    return basis.size();
}

bool is_linear_binary(std::span<const BitVector> words) {
    if (words.empty()) throw DomainError("is_linear_binary: empty set");
    for (const auto& w : words) {
        if (w.size() != words.front().size()) throw DomainError("is_linear_binary: words of different lengths");
    }
    std::vector<BitVector> distinct(words.begin(), words.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (!distinct.front().is_zero()) return false;  // zero word sorts first
    // A set inside its span with as many words as the span is the span itself,
    // hence closed under XOR; conversely a linear set equals its span.
    const auto dim = f2_span_dim(distinct);
    return dim < 64 && distinct.size() == (std::uint64_t{1} << dim);
}

WeightValue min_hamming_distance_image(std::span<const BitVector> words) {
    std::vector<BitVector> distinct(words.begin(), words.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() < 2) throw DomainError("min_hamming_distance_image: fewer than two distinct words");

    const std::size_t stride = distinct.front().words().size();
    std::vector<std::uint64_t> flat;
    flat.reserve(stride * distinct.size());
    for (const auto& w : distinct) {
        if (w.size() != distinct.front().size()) throw DomainError("min_hamming_distance_image: mixed lengths");
        flat.insert(flat.end(), w.words().begin(), w.words().end());
    }

    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < distinct.size() && best > 1; ++i) {
        const auto* x = flat.data() + i * stride;
        for (std::size_t j = i + 1; j < distinct.size(); ++j) {
            best = std::min(best, hamming_distance_words(x, flat.data() + j * stride, stride));
        }
    }
    return static_cast<WeightValue>(best);
}

SearchResult search_codes(RingParams params, std::size_t n, std::size_t k, const WeightSpec& spec,
                          std::uint64_t trials, std::uint64_t seed, const SearchOptions& options) {
    if (n == 0 || k == 0) throw DomainError("search_codes: n and k must be positive");
    SearchResult result;
    if (trials == 0) return result;
    check_message_count(params, k, options.cap);

    const std::size_t entries = n * k;
    const std::uint64_t space_bits = static_cast<std::uint64_t>(2 * params.r()) * entries;
    result.exhaustive = space_bits < 64 && (std::uint64_t{1} << space_bits) <= trials;

    const auto table = weight_table(params, spec);
    auto better = [](const SearchHit& x, const SearchHit& y) {
        if (x.min_weight != y.min_weight) return x.min_weight > y.min_weight;
        return x.gen < y.gen;
    };
    std::set<SearchHit, decltype(better)> best(better);

    auto evaluate = [&](const std::vector<std::uint32_t>& entry_indices) {
        std::vector<Word> rows(k, Word{});
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < n; ++j) rows[i].push_back(RingElement::from_index(entry_indices[i * n + j], params));
        }
        GeneratorMatrix gen(std::move(rows));
        ++result.evaluated;
        std::optional<WeightValue> mw;
        for (const auto& w : span_indices(gen)) {
            WeightValue total = 0.0;
            bool nonzero = false;
            for (auto x : w) {
                total += table[x];
                nonzero |= x != 0;
            }
            if (nonzero && (!mw || total < *mw)) mw = total;
        }
        if (!mw) return;
        best.insert(SearchHit{std::move(gen), *mw});
        if (best.size() > options.top) best.erase(std::prev(best.end()));
    };

    std::vector<std::uint32_t> entry_indices(entries, 0);
    if (result.exhaustive) {
        const std::uint64_t total = std::uint64_t{1} << space_bits;
        for (std::uint64_t code = 0; code < total; ++code) {
            std::uint64_t rest = code;
            for (std::size_t e = entries; e-- > 0;) {
                entry_indices[e] = static_cast<std::uint32_t>(rest & (params.ring_size() - 1));
                rest >>= 2 * params.r();
            }
            evaluate(entry_indices);
        }
    } else {
        // The ring order is a power of two, so masking the raw engine output is
        // an unbiased and platform-independent draw.
        std::mt19937_64 rng(seed);
        for (std::uint64_t t = 0; t < trials; ++t) {
            for (auto& e : entry_indices) e = static_cast<std::uint32_t>(rng() & (params.ring_size() - 1));
            evaluate(entry_indices);
        }
    }

    result.hits.assign(best.begin(), best.end());
    return result;
}

}  // namespace ringgray
