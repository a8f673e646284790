#include "ringgray/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ringgray/errors.hpp"

namespace ringgray::io {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Reads a run of digits at `pos`, reducing mod 2^r as it goes.
std::optional<std::uint64_t> read_int(std::string_view s, std::size_t& pos, RingParams p) {
    const std::size_t start = pos;
    std::uint64_t value = 0;
    while (pos < s.size() && is_digit(s[pos])) {
        value = (value * 10 + static_cast<std::uint64_t>(s[pos] - '0')) & p.mask();
        ++pos;
    }
    if (pos == start) return std::nullopt;
    return value;
}

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::string to_lower(std::string s) {
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

std::string token_list(const std::vector<RingElement>& xs) {
    std::string out;
    for (const auto& x : xs) out += (out.empty() ? "" : " ") + to_string(x);
    return out;
}

}  // namespace

RingElement parse_element(std::string_view token, RingParams params) {
    auto bad = [&](std::size_t pos) -> ParseError {
        return ParseError("invalid element token '" + std::string(token) + "' at column " + std::to_string(pos + 1), 0,
                          pos + 1);
    };
    if (token.empty()) throw bad(0);

    std::size_t pos = 0;
    const auto first = read_int(token, pos, params);
    if (pos == token.size()) {
        if (!first) throw bad(0);
        return {static_cast<std::int64_t>(*first), 0, params};
    }
    if (token[pos] == 'u') {
        if (pos + 1 != token.size()) throw bad(pos + 1);
        return {0, static_cast<std::int64_t>(first.value_or(1)), params};
    }
    if (token[pos] != '+' || !first) throw bad(pos);
    ++pos;
    const auto second = read_int(token, pos, params);
    if (pos >= token.size() || token[pos] != 'u') throw bad(pos);
    if (pos + 1 != token.size()) throw bad(pos + 1);
    return {static_cast<std::int64_t>(*first), static_cast<std::int64_t>(second.value_or(1)), params};
}

std::vector<RingElement> parse_word(const std::vector<std::string>& tokens, RingParams params) {
    std::vector<RingElement> out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        try {
            out.push_back(parse_element(tokens[i], params));
        } catch (const ParseError& e) {
            throw ParseError(std::string(e.what()) + " (token " + std::to_string(i + 1) + ")", 0, i + 1);
        }
    }
    return out;
}

GeneratorMatrix parse_matrix(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    std::optional<RingParams> params;
    std::vector<Word> rows;

    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw.substr(0, raw.find('#'));
        line = trim(line);
        if (line.empty()) continue;

        if (!params) {
            const auto lower = to_lower(line);
            std::istringstream hs(lower);
            std::string keyword, ring_name, extra;
            hs >> keyword >> ring_name >> extra;
            unsigned long m1 = 0, m2 = 0;
            int consumed = 0;
            if (keyword != "ring" || !extra.empty() ||
                std::sscanf(ring_name.c_str(), "z%lu+uz%lu%n", &m1, &m2, &consumed) != 2 ||
                static_cast<std::size_t>(consumed) != ring_name.size()) {
                throw ParseError("line " + std::to_string(line_no) + ": expected header 'ring z<2^r>+uz<2^r>'", line_no, 1);
            }
            if (m1 != m2 || m1 < 2 || (m1 & (m1 - 1)) != 0) {
                throw ParseError("line " + std::to_string(line_no) + ": ring modulus must be a power of two >= 2 on both sides",
                                 line_no, 1);
            }
            int r = 0;
            while ((1UL << r) < m1) ++r;
            if (r > RingParams::kMaxR) {
                throw ParseError("line " + std::to_string(line_no) + ": ring modulus too large", line_no, 1);
            }
            params = RingParams(r);
            continue;
        }

        Word row;
        std::size_t pos = 0;
        while (pos < line.size()) {
            while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
            if (pos >= line.size()) break;
            std::size_t end = pos;
            while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
            const auto token = std::string_view(line).substr(pos, end - pos);
            try {
                row.push_back(parse_element(token, *params));
            } catch (const ParseError& e) {
                // Column relative to the trimmed line, which is what users see after indentation is dropped.
                throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), line_no, pos + e.column());
            }
            pos = end;
        }
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw ParseError("line " + std::to_string(line_no) + ": row has " + std::to_string(row.size()) +
                                 " entries, expected " + std::to_string(rows.front().size()),
                             line_no, 1);
        }
        rows.push_back(std::move(row));
    }

    if (!params) throw ParseError("matrix file is empty: missing 'ring' header", line_no, 0);
    if (rows.empty()) throw ParseError("matrix file has no rows", line_no, 0);
    return GeneratorMatrix(std::move(rows));
}

GeneratorMatrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open matrix file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_matrix(ss.str());
}

std::string format_matrix(const GeneratorMatrix& gen) {
    const auto m = std::to_string(gen.params().modulus());
    std::string out = "ring z" + m + "+uz" + m + "\n";
    for (const auto& row : gen.rows()) out += token_list(row) + "\n";
    return out;
}

void write_file_atomic(const std::string& path, const std::string& contents) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write '" + tmp + "'");
        out << contents;
        if (!out) throw std::runtime_error("write failed for '" + tmp + "'");
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw std::runtime_error("cannot move '" + tmp + "' to '" + path + "'");
    }
}

nlohmann::json weight_json(double value) {
    if (std::isfinite(value) && std::nearbyint(value) == value && std::abs(value) < 9.0e15) {
        return static_cast<std::int64_t>(value);
    }
    return value;
}

nlohmann::json ring_json(RingParams params) {
    return {{"r", params.r()}, {"modulus", params.modulus()}, {"size", params.ring_size()}};
}

nlohmann::json ideal_json(const Ideal& ideal) {
    auto arr = nlohmann::json::array();
    for (const auto& x : ideal.elements()) arr.push_back(to_string(x));
    return arr;
}

nlohmann::json matrix_json(const GeneratorMatrix& gen) {
    auto rows = nlohmann::json::array();
    for (const auto& row : gen.rows()) {
        auto r = nlohmann::json::array();
        for (const auto& x : row) r.push_back(to_string(x));
        rows.push_back(std::move(r));
    }
    return rows;
}

nlohmann::json enumerator_json(const WeightEnumerator& e) {
    // Keys are decimal weights; an array of pairs keeps numeric order.
    auto arr = nlohmann::json::array();
    for (const auto& [w, count] : e.counts) arr.push_back({{"weight", weight_json(w)}, {"count", count}});
    return arr;
}

nlohmann::json image_report_json(const ImageReport& rep) {
    nlohmann::json j{{"map", to_string(rep.map)},
                     {"length", rep.image_length},
                     {"size", rep.image_size},
                     {"linear", rep.is_linear},
                     {"span_dim", rep.span_dim},
                     {"log2_size", rep.log2_size}};
    j["min_distance"] = rep.min_hamming_distance ? weight_json(*rep.min_hamming_distance) : nlohmann::json(nullptr);
    return j;
}

nlohmann::json check_results_json(const std::vector<verify::CheckResult>& results) {
    auto arr = nlohmann::json::array();
    for (const auto& c : results) {
        nlohmann::json j{{"claim_id", c.claim_id}, {"passed", c.passed}, {"detail", c.detail}};
        j["counterexample"] = c.counterexample ? nlohmann::json(*c.counterexample) : nlohmann::json(nullptr);
        arr.push_back(std::move(j));
    }
    return arr;
}

nlohmann::json ring_info_json(RingParams params, double gamma) {
    nlohmann::json j;
    j["schema_version"] = kSchemaVersion;
    j["ring"] = ring_json(params);

    auto units = unit_group(params);
    std::sort(units.begin(), units.end());
    auto unit_tokens = nlohmann::json::array();
    for (const auto& x : units) unit_tokens.push_back(to_string(x));
    j["units"] = {{"count", units.size()}, {"elements", unit_tokens}};

    j["radical"] = ideal_json(jacobson_radical(params));
    j["socle"] = ideal_json(socle(params));

    if (params.r() <= kBruteForceMaxR) {
        auto lattice = nlohmann::json::array();
        for (const auto& I : all_ideals(params)) lattice.push_back(ideal_json(I));
        j["ideals"] = lattice;
        j["generating_character_verified"] = verify_generating(params);
    }

    nlohmann::json character = nlohmann::json::object();
    nlohmann::json lee = nlohmann::json::object();
    nlohmann::json hom = nlohmann::json::object();
    for (const auto& x : all_elements(params)) {
        const auto z = generating_character(x);
        character[to_string(x)] = {{"exponent", character_exponent(x)}, {"re", z.re}, {"im", z.im}};
        lee[to_string(x)] = weight_json(lee_weight(x));
        hom[to_string(x)] = weight_json(hom_weight_closed(x, gamma));
    }
    j["character"] = {{"order", params.modulus()}, {"values", character}};
    j["weights"] = {{"lee", lee}, {"homogeneous", {{"gamma", weight_json(gamma)}, {"values", hom}}}};
    return j;
}

std::string ring_info_text(RingParams params, double gamma) {
    std::ostringstream os;
    const auto m = params.modulus();
    os << "ring Z" << m << "+uZ" << m << " (r=" << params.r() << ", " << params.ring_size() << " elements)\n";

    auto units = unit_group(params);
    std::sort(units.begin(), units.end());
    os << "units (" << units.size() << "): " << token_list(units) << "\n";
    const auto J = jacobson_radical(params);
    os << "radical <2,u> (" << J.size() << "): " << token_list(J.elements()) << "\n";
    const auto S = socle(params);
    os << "socle (" << S.size() << "): " << token_list(S.elements()) << "\n";
    if (params.r() <= kBruteForceMaxR) {
        const auto ideals = all_ideals(params);
        os << "ideals (" << ideals.size() << "):\n";
        for (const auto& I : ideals) os << "  [" << I.size() << "] " << token_list(I.elements()) << "\n";
        os << "generating character verified: " << (verify_generating(params) ? "yes" : "no") << "\n";
    }
    os << "element  chi-exponent(/" << m << ")  lee  hom(gamma=" << gamma << ")\n";
    for (const auto& x : all_elements(params)) {
        os << "  " << to_string(x) << "  " << character_exponent(x) << "  " << lee_weight(x) << "  "
           << hom_weight_closed(x, gamma) << "\n";
    }
    return os.str();
}

MapId default_map(RingParams params) noexcept {
    if (params.r() == 2) return MapId::Phi4;
    if (params.r() == 3) return MapId::Phi5;
    return MapId::General;
}

nlohmann::json analyze_code(const GeneratorMatrix& gen, const AnalysisOptions& options) {
    const auto params = gen.params();
    const MapId map = options.map.value_or(default_map(params));
    if (!is_binary_map(map)) throw DomainError("code analysis needs a binary map; phi3 has codomain Z_{2^r}^2");
    require_domain(map, params);
    const double gamma = options.gamma > 0.0 ? options.gamma : default_gamma(params);

    const auto code = enumerate_codewords(gen, options.cap);
    nlohmann::json j;
    j["schema_version"] = kSchemaVersion;
    j["ring"] = ring_json(params);
    j["code"] = {{"n", gen.n()},
                 {"k", gen.k()},
                 {"size", code.size()},
                 {"free", code.is_free()},
                 {"minimal_generator", is_minimal_generator(gen, options.cap)},
                 {"generator", matrix_json(gen)}};

    auto weight_section = [&](const WeightSpec& spec) {
        nlohmann::json w;
        if (spec.kind == WeightKind::Homogeneous) w["gamma"] = weight_json(spec.gamma);
        if (code.size() >= 2) {
            w["min_weight"] = weight_json(min_weight(code, spec));
            w["min_distance"] = weight_json(min_distance(code, spec));
        } else {
            w["min_weight"] = nullptr;
            w["min_distance"] = nullptr;
        }
        w["enumerator"] = enumerator_json(weight_enumerator(code, spec));
        return w;
    };
    j["weights"] = nlohmann::json::object();
    if (options.lee) j["weights"]["lee"] = weight_section(WeightSpec::lee());
    if (options.homogeneous) j["weights"]["homogeneous"] = weight_section(WeightSpec::homogeneous(gamma));

    j["image"] = image_report_json(binary_image(code, map).report);
    return j;
}

nlohmann::json search_json(RingParams params, std::size_t n, std::size_t k, const WeightSpec& spec,
                           std::uint64_t trials, std::uint64_t seed, const SearchResult& result) {
    nlohmann::json j;
    j["schema_version"] = kSchemaVersion;
    j["ring"] = ring_json(params);
    nlohmann::json s{{"n", n},
                     {"k", k},
                     {"weight", to_string(spec.kind)},
                     {"trials", trials},
                     {"seed", seed},
                     {"exhaustive", result.exhaustive},
                     {"evaluated", result.evaluated}};
    if (spec.kind == WeightKind::Homogeneous) s["gamma"] = weight_json(spec.gamma);
    j["search"] = s;
    auto hits = nlohmann::json::array();
    for (const auto& h : result.hits) hits.push_back({{"generator", matrix_json(h.gen)}, {"min_weight", weight_json(h.min_weight)}});
    j["results"] = hits;
    return j;
}

}  // namespace ringgray::io
