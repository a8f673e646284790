#include "cli.hpp"

#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "ringgray/codes.hpp"
#include "ringgray/errors.hpp"
#include "ringgray/gray.hpp"
#include "ringgray/io.hpp"
#include "ringgray/verify.hpp"

namespace ringgray::cli {

namespace {

struct Options {
    int r = 2;
    std::optional<double> gamma;
    std::string json_path;
    std::string map_name;
    std::vector<std::string> tokens;
    std::string gen_path;
    std::string weight;
    std::string suite = "all";
    std::uint64_t cap = kDefaultEnumerationCap;
    std::size_t n = 1;
    std::size_t k = 1;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 1;
    std::size_t top = 10;
};

void emit_json(const nlohmann::json& j, const std::string& path, std::ostream& out) {
    const auto text = j.dump(2) + "\n";
    if (path.empty() || path == "-") {
        out << text;
    } else {
        io::write_file_atomic(path, text);
    }
}

WeightSpec weight_spec(const Options& o, RingParams params) {
    if (o.weight == "lee") return WeightSpec::lee();
    return WeightSpec::homogeneous(o.gamma.value_or(default_gamma(params)));
}

int cmd_ring_info(const Options& o, std::ostream& out) {
    const RingParams params(o.r);
    const double gamma = o.gamma.value_or(default_gamma(params));
    if (!o.json_path.empty()) emit_json(io::ring_info_json(params, gamma), o.json_path, out);
    if (o.json_path != "-") out << io::ring_info_text(params, gamma);
    return kSuccess;
}

int cmd_map(const Options& o, std::ostream& out) {
    const RingParams params(o.r);
    const auto id = parse_map_id(o.map_name);
    require_domain(id, params);
    const auto word = io::parse_word(o.tokens, params);
    if (id == MapId::Phi3) {
        const auto residues = phi3_vector(word);
        for (std::size_t i = 0; i < residues.size(); ++i) out << (i ? " " : "") << residues[i];
        out << "\n";
        return kSuccess;
    }
    const auto bits = map_vector(word, id);
    out << bits.to_string() << "\n" << bits.to_hex() << "\n";
    return kSuccess;
}

int cmd_code_analyze(const Options& o, std::ostream& out) {
    const auto gen = io::load_matrix(o.gen_path);
    io::AnalysisOptions options;
    options.cap = o.cap;
    options.gamma = o.gamma.value_or(0.0);
    if (!o.map_name.empty()) options.map = parse_map_id(o.map_name);
    if (o.weight == "lee") options.homogeneous = false;
    if (o.weight == "hom") options.lee = false;
    const auto report = io::analyze_code(gen, options);
    emit_json(report, o.json_path, out);
    if (!o.json_path.empty() && o.json_path != "-") out << report.dump(2) << "\n";
    return kSuccess;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const RingParams params(o.r);
    const auto suite = verify::parse_suite(o.suite);
    const auto results = verify::run_suite(params, suite, o.gamma);
    if (o.json_path != "-") out << verify::format_table(results);
    if (!o.json_path.empty()) {
        nlohmann::json j{{"schema_version", io::kSchemaVersion},
                         {"ring", io::ring_json(params)},
                         {"suite", verify::to_string(suite)},
                         {"passed", verify::all_passed(results)},
                         {"checks", io::check_results_json(results)}};
        emit_json(j, o.json_path, out);
    }
    return verify::all_passed(results) ? kSuccess : kVerificationFailed;
}

int cmd_search(const Options& o, std::ostream& out) {
    const RingParams params(o.r);
    const auto spec = weight_spec(o, params);
    const auto result = search_codes(params, o.n, o.k, spec, o.trials, o.seed, SearchOptions{o.top, o.cap});
    emit_json(io::search_json(params, o.n, o.k, spec, o.trials, o.seed, result), o.json_path, out);
    return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Codes over Z_{2^r}+uZ_{2^r}: weights, Gray images, exhaustive verification", "ringgray"};
    app.require_subcommand(1);
    Options o;

    auto* ring = app.add_subcommand("ring", "Ring structure");
    ring->require_subcommand(1);
    auto* ring_info = ring->add_subcommand("info", "Units, radical, socle, ideals, character and weight tables");
    ring_info->add_option("--r", o.r, "Ring exponent r")->required()->check(CLI::Range(1, kBruteForceMaxR));
    ring_info->add_option("--gamma", o.gamma, "Homogeneous weight average (default 2^{2r-2})")->check(CLI::PositiveNumber);
    ring_info->add_option("--json", o.json_path, "Write the JSON report here ('-' for stdout)");

    auto* map = app.add_subcommand("map", "Apply a Gray-type map to a word of ring elements");
    map->add_option("--map", o.map_name, "phi3, phi2phi3, phi4, phi5 or general")->required();
    map->add_option("--r", o.r, "Ring exponent r")->required()->check(CLI::Range(1, RingParams::kMaxR));
    map->add_option("tokens", o.tokens, "Element tokens, e.g. 3+2u u 2")->required();

    auto* code = app.add_subcommand("code", "Linear codes");
    code->require_subcommand(1);
    auto* analyze = code->add_subcommand("analyze", "Enumerate a code and analyse its binary image");
    analyze->add_option("--gen,gen", o.gen_path, "Generator matrix file")->required();
    analyze->add_option("--map", o.map_name, "Binary map (default by ring)");
    analyze->add_option("--weight", o.weight, "Restrict to one weight: lee or hom")->check(CLI::IsMember({"lee", "hom"}));
    analyze->add_option("--gamma", o.gamma, "Homogeneous weight average")->check(CLI::PositiveNumber);
    analyze->add_option("--json", o.json_path, "Also write the JSON report to this path");
    analyze->add_option("--cap", o.cap, "Bound on enumerated message vectors");

    auto* ver = app.add_subcommand("verify", "Exhaustive verification suites");
    ver->add_option("--r", o.r, "Ring exponent r")->required()->check(CLI::Range(1, 3));
    ver->add_option("--suite", o.suite, "frobenius, weights, isometries or all");
    ver->add_option("--gamma", o.gamma, "Gamma for the weights suite")->check(CLI::PositiveNumber);
    ver->add_option("--json", o.json_path, "Write the check list as JSON ('-' for stdout)");

    auto* search = app.add_subcommand("search", "Seeded random (or exhaustive) search for codes with large minimum weight");
    search->add_option("--r", o.r, "Ring exponent r")->required()->check(CLI::Range(1, kBruteForceMaxR));
    search->add_option("--n", o.n, "Code length")->required()->check(CLI::PositiveNumber);
    search->add_option("--k", o.k, "Number of generator rows")->required()->check(CLI::PositiveNumber);
    search->add_option("--weight", o.weight, "lee or hom")->check(CLI::IsMember({"lee", "hom"}));
    search->add_option("--gamma", o.gamma, "Homogeneous weight average")->check(CLI::PositiveNumber);
    search->add_option("--trials", o.trials, "Number of sampled matrices");
    search->add_option("--seed", o.seed, "Sampler seed");
    search->add_option("--top", o.top, "Number of results kept");
    search->add_option("--json", o.json_path, "Output path (default stdout)");
    search->add_option("--cap", o.cap, "Bound on enumerated message vectors per trial");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsageError;
    }

    try {
        if (ring_info->parsed()) return cmd_ring_info(o, out);
        if (map->parsed()) return cmd_map(o, out);
        if (analyze->parsed()) return cmd_code_analyze(o, out);
        if (ver->parsed()) return cmd_verify(o, out);
        if (search->parsed()) {
            if (o.weight.empty()) o.weight = "hom";
            return cmd_search(o, out);
        }
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << "\n";
        return kResourceCap;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
    err << "error: no command\n";
    return kUsageError;
}

}  // namespace ringgray::cli
