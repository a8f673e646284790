#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ringgray/codes.hpp"
#include "ringgray/ring.hpp"
#include "ringgray/verify.hpp"
#include "ringgray/weights.hpp"

namespace ringgray::io {

inline constexpr const char* kSchemaVersion = "1";

/// Parses one element token: "<int>", "<int>u", "u", "<int>+<int>u" or
/// "<int>+u". Integers are reduced mod 2^r. On failure the ParseError names the
/// token and the 1-based column of the first offending character.
RingElement parse_element(std::string_view token, RingParams params);

/// Parses whitespace-separated tokens; ParseError column is the token's position (1-based).
std::vector<RingElement> parse_word(const std::vector<std::string>& tokens, RingParams params);

/// "ring z<2^r>+uz<2^r>" header followed by one row per line. Blank lines and
/// '#' comments are ignored.
GeneratorMatrix parse_matrix(std::string_view text);
GeneratorMatrix load_matrix(const std::string& path);
std::string format_matrix(const GeneratorMatrix& gen);

/// Writes `contents` to `path` via a temporary file and rename.
void write_file_atomic(const std::string& path, const std::string& contents);

/// Integral values become JSON integers, others stay floating point.
nlohmann::json weight_json(double value);

nlohmann::json ring_json(RingParams params);
nlohmann::json ideal_json(const Ideal& ideal);
nlohmann::json matrix_json(const GeneratorMatrix& gen);
nlohmann::json enumerator_json(const WeightEnumerator& e);
nlohmann::json image_report_json(const ImageReport& rep);
nlohmann::json check_results_json(const std::vector<verify::CheckResult>& results);

/// Units, radical, socle, ideal lattice, character table and weight tables.
nlohmann::json ring_info_json(RingParams params, double gamma);
std::string ring_info_text(RingParams params, double gamma);

struct AnalysisOptions {
    bool lee = true;
    bool homogeneous = true;
    double gamma = 0.0;  // 0 selects default_gamma(r)
    std::optional<MapId> map;  // default: phi4 at r=2, phi5 at r=3, general otherwise
    std::uint64_t cap = kDefaultEnumerationCap;
};

MapId default_map(RingParams params) noexcept;

/// Full report for one code: size, freeness, minimum weights and distances,
/// enumerators, and the binary image report.
nlohmann::json analyze_code(const GeneratorMatrix& gen, const AnalysisOptions& options);

nlohmann::json search_json(RingParams params, std::size_t n, std::size_t k, const WeightSpec& spec,
                           std::uint64_t trials, std::uint64_t seed, const SearchResult& result);

}  // namespace ringgray::io
