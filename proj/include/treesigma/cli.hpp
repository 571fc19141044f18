#pragma once
// Command-line front end: classify boundary points, query horoballs and
// exponent-sum ranges, enumerate balls, sweep ray corpora, and emit DOT.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "treesigma/coefficients.hpp"
#include "treesigma/dot.hpp"
#include "treesigma/horoballs.hpp"
#include "treesigma/rays.hpp"
#include "treesigma/sigma.hpp"
#include "treesigma/words.hpp"

namespace treesigma::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitParseError = 2;
inline constexpr int kExitCapExceeded = 3;
inline constexpr std::size_t kDefaultHardCeiling = 12;
inline constexpr const char* kCeilingEnvVar = "TREESIGMA_MAX_RADIUS";

/// Hard enumeration ceiling, overridable via TREESIGMA_MAX_RADIUS.
inline std::size_t hard_ceiling() {
    if (const char* env = std::getenv(kCeilingEnvVar)) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 0) return static_cast<std::size_t>(v);
    }
    return kDefaultHardCeiling;
}

/// Word text with the identity rendered as "1" (the parser accepts both).
inline std::string render_word(const ReducedWord& w) {
    return w.empty() ? "1" : to_string(w);
}

inline std::string explain(const Verdict& v) {
    if (!v.certificate) return "no certificate";
    const Certificate& c = *v.certificate;
    switch (c.criterion) {
        case Criterion::Thm2_Generation:
            return "S = {" + c.generating_set.value_or("?") +
                   "} generates B over A_k(tau) for every k >= 0";
        case Criterion::Cor_ImageSurjective:
            return "phi(A_k(tau)) = phi(A) for every k >= 0";
        case Criterion::Thm_KernelSubwords:
            return "phi(tau(i)) recurs (value " + c.recurring_value.value_or("?") +
                   "): infinitely many disjoint ker-phi subwords";
        case Criterion::Cor_BoundedExpsum:
            return "exponent sums of " + (c.letter ? to_string(*c.letter) : std::string("?")) +
                   " over A_0(tau) are bounded above by " +
                   (c.bound ? std::to_string(*c.bound) : std::string("?"));
        default:
            return "every horoball-conjugated generator vanishes at index " +
                   (c.witness_index ? to_string(*c.witness_index) : std::string("?"));
    }
}

inline nlohmann::json to_json(const Verdict& v) {
    nlohmann::json j;
    j["status"] = to_string(v.status);
    if (v.certificate) {
        const Certificate& c = *v.certificate;
        j["criterion"] = to_string(c.criterion);
        if (c.letter) j["t"] = to_string(*c.letter);
        if (c.bound) j["bound"] = *c.bound;
        if (c.witness_index) j["psi"] = to_string(*c.witness_index);
        if (c.witness_exponent) j["m"] = *c.witness_exponent;
        if (c.witness_support_radius) j["R"] = *c.witness_support_radius;
        if (c.recurring_value) j["value"] = *c.recurring_value;
        if (c.recurrence_indices) {
            j["i"] = c.recurrence_indices->first;
            j["j"] = c.recurrence_indices->second;
        }
        if (c.generating_set) j["S"] = *c.generating_set;
    }
    return j;
}

/// Runs one CLI invocation. Returns 0 on success, 2 on parse errors (with a
/// position-annotated message on err), 3 on enumeration-cap violations.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sigma^1 membership for boundary points of free-group Cayley trees"};
    app.require_subcommand(1);

    std::string family_text, ray_text, letter_text, center_text, output_path;
    int k = 0;
    std::size_t radius = 5;
    int rank = 2;
    std::size_t max_period = 3, max_prefix = 2;
    bool json_mode = false;

    auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("-o,--output", output_path, "write output to a file instead of stdout");
    };

    CLI::App* cmd_classify = app.add_subcommand("classify", "classify a boundary point");
    cmd_classify->add_option("--family", family_text, "family spec, e.g. lehnert:2,3")->required();
    cmd_classify->add_option("--ray", ray_text, "ray text 'prefix | period'")->required();
    cmd_classify->add_flag("--json", json_mode, "emit a JSON record");
    add_output(cmd_classify);

    CLI::App* cmd_horoball = app.add_subcommand("horoball", "list A_k(tau) within a radius");
    cmd_horoball->add_option("--ray", ray_text)->required();
    cmd_horoball->add_option("--k", k)->required();
    cmd_horoball->add_option("--radius", radius);
    cmd_horoball->add_option("--rank", rank);
    add_output(cmd_horoball);

    CLI::App* cmd_expsum = app.add_subcommand("expsum-range", "exponent-sum range over A_k(tau)");
    cmd_expsum->add_option("--letter", letter_text, "letter token, e.g. a1 or A1")->required();
    cmd_expsum->add_option("--ray", ray_text)->required();
    cmd_expsum->add_option("--k", k)->required();
    cmd_expsum->add_option("--radius", radius);
    cmd_expsum->add_option("--rank", rank);
    add_output(cmd_expsum);

    CLI::App* cmd_ball = app.add_subcommand("ball", "enumerate a ball in the Cayley tree");
    cmd_ball->add_option("--rank", rank);
    cmd_ball->add_option("--radius", radius);
    cmd_ball->add_option("--center", center_text, "center word (default: identity)");
    add_output(cmd_ball);

    CLI::App* cmd_sweep = app.add_subcommand("sweep", "classify all canonical rays within bounds");
    cmd_sweep->add_option("--family", family_text)->required();
    cmd_sweep->add_option("--max-period", max_period);
    cmd_sweep->add_option("--max-prefix", max_prefix);
    add_output(cmd_sweep);

    CLI::App* cmd_dot = app.add_subcommand("dot", "emit a DOT rendering of a tree ball");
    cmd_dot->add_option("--ray", ray_text)->required();
    cmd_dot->add_option("--k", k)->required();
    cmd_dot->add_option("--radius", radius);
    cmd_dot->add_option("--rank", rank);
    add_output(cmd_dot);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitParseError;
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!output_path.empty()) {
        file.open(output_path);
        if (!file) {
            err << "cannot open output file " << output_path << "\n";
            return 1;
        }
        sink = &file;
    }

    const std::size_t cap = hard_ceiling();
    try {
        if (radius > cap)
            throw CapExceeded("radius " + std::to_string(radius) + " exceeds hard ceiling " +
                              std::to_string(cap) + " (" + kCeilingEnvVar + ")");

        if (*cmd_classify) {
            FamilySpec spec = parse_family(family_text);
            Ray ray = parse_ray(ray_text, spec.alphabet());
            Verdict v = classify(spec, ray);
            if (json_mode)
                *sink << to_json(v).dump() << "\n";
            else
                *sink << v.to_record() << "\n# " << explain(v) << "\n";
        } else if (*cmd_horoball) {
            Ray ray = parse_ray(ray_text, Alphabet(rank));
            for (const ReducedWord& w : horoball_vertices({ray, k}, radius, cap))
                *sink << render_word(w) << "\n";
        } else if (*cmd_expsum) {
            Alphabet alphabet(rank);
            ReducedWord lw = parse_word(letter_text, alphabet);
            if (lw.size() != 1) throw ParseError("expected a single letter token", 0);
            Ray ray = parse_ray(ray_text, alphabet);
            ExpSumRange r = expsum_range(lw[0], {ray, k}, radius, cap);
            *sink << "letter=" << to_string(r.letter) << ";k=" << r.k;
            *sink << ";observed_min=" << (r.observed_min ? std::to_string(*r.observed_min) : "none");
            *sink << ";observed_max=" << (r.observed_max ? std::to_string(*r.observed_max) : "none");
            *sink << ";bounded_above=" << (r.bounded_above ? "true" : "false");
            *sink << ";upper_bound=" << (r.upper_bound ? std::to_string(*r.upper_bound) : "none") << "\n";
        } else if (*cmd_ball) {
            Alphabet alphabet(rank);
            ReducedWord center = center_text.empty() ? ReducedWord::identity(alphabet)
                                                     : parse_word(center_text, alphabet);
            std::vector<ReducedWord> ball = enumerate_ball(center, radius, cap);
            for (const ReducedWord& w : ball) *sink << render_word(w) << "\n";
            *sink << "size " << ball.size() << "\n";
        } else if (*cmd_sweep) {
            FamilySpec spec = parse_family(family_text);
            std::size_t bound = std::max(max_period, max_prefix);
            if (bound > cap)
                throw CapExceeded("sweep bound " + std::to_string(bound) + " exceeds hard ceiling " +
                                  std::to_string(cap));
            for (const Ray& r : enumerate_canonical_rays(spec.alphabet(), max_period, max_prefix, cap))
                *sink << to_string(r) << "\t" << classify(spec, r).to_record() << "\n";
        } else if (*cmd_dot) {
            Alphabet alphabet(rank);
            Ray ray = parse_ray(ray_text, alphabet);
            emit_tree_dot(*sink, alphabet, radius, HoroballQuery{ray, k}, cap);
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const CapExceeded& e) {
        err << "cap exceeded: " << e.what() << "\n";
        return kExitCapExceeded;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitParseError;
    }
    return kExitOk;
}

}  // namespace treesigma::cli
