#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "zcz/catalog.hpp"
#include "zcz/construct.hpp"
#include "zcz/correlate.hpp"
#include "zcz/generators.hpp"
#include "zcz/setfile.hpp"

namespace {

using namespace zcz;

constexpr int kExitUsage = 1;
constexpr int kExitHypothesis = 2;
constexpr int kExitClaim = 3;

// Full verification beyond this length falls back to sampled pairs unless
// --exhaustive is given.
constexpr long long kSampledLengthLimit = 16384;

long long parse_int(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw ParseError("bad " + what + " value '" + text + "'");
    }
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

// builtin:<name> | chu:<n>[:<u>] | file:<path with exactly one sequence>
Sequence parse_perfect_source(const std::string& src) {
    const auto parts = split(src, ':');
    if (parts[0] == "builtin" && parts.size() == 2) return builtin_perfect(parts[1]);
    if (parts[0] == "chu" && (parts.size() == 2 || parts.size() == 3)) {
        const long long n = parse_int(parts[1], "chu length");
        const long long u = parts.size() == 3 ? parse_int(parts[2], "chu multiplier") : 1;
        return chu_perfect(n, u);
    }
    if (parts[0] == "file" && parts.size() >= 2) {
        const SequenceSet s = load_setfile(src.substr(5));
        if (s.size() != 1) throw ParseError("perfect source file must contain exactly one sequence");
        return s[0];
    }
    throw ParseError("unknown perfect source '" + src + "' (builtin:<name>, chu:<n>[:<u>] or file:<path>)");
}

// sylvester:<t> | paley:<q> | h12 | file:<path>
SequenceSet parse_hadamard_source(const std::string& src) {
    const auto parts = split(src, ':');
    if (parts[0] == "sylvester" && parts.size() == 2)
        return orthogonal_set(sylvester(static_cast<int>(parse_int(parts[1], "sylvester exponent"))));
    if (parts[0] == "paley" && parts.size() == 2)
        return orthogonal_set(paley(static_cast<int>(parse_int(parts[1], "paley prime"))));
    if (src == "h12" || src == "hadamard12") return orthogonal_set(hadamard12());
    if (parts[0] == "file" && parts.size() >= 2) return load_setfile(src.substr(5));
    throw ParseError("unknown orthogonal-set source '" + src +
                     "' (sylvester:<t>, paley:<q>, h12 or file:<path>)");
}

ShiftSequence parse_shift(const std::string& csv, long long modulus) {
    std::vector<long long> entries;
    for (const std::string& tok : split(csv, ',')) entries.push_back(parse_int(tok, "shift entry"));
    return ShiftSequence(std::move(entries), modulus);
}

struct GenerateArgs {
    std::string theorem;
    std::string perfect;
    std::string hadamard;
    std::string input;
    std::string shift;
    std::string variant;
    long long d = 0;
    bool d_set = false;
    bool trust_claim = false;
    std::string out = "-";
};

ShiftSequence t1_shift(const GenerateArgs& args, long long m, long long n) {
    if (!args.shift.empty() && !args.variant.empty())
        throw ParseError("give either --shift or --variant, not both");
    if (!args.shift.empty()) return parse_shift(args.shift, m);
    if (args.variant.empty()) throw ParseError("t1 needs --shift or --variant");
    const auto parts = split(args.variant, ':');
    if (parts[0] == "case1" && parts.size() == 1) return t1_canonical_shift(m, n, T1Variant::Case1);
    if (parts[0] == "case2" && parts.size() <= 2) {
        const long long i = parts.size() == 2 ? parse_int(parts[1], "variant index") : 0;
        return t1_canonical_shift(m, n, T1Variant::Case2, i);
    }
    throw ParseError("unknown variant '" + args.variant + "' (case1 or case2[:<i>])");
}

int cmd_generate(const GenerateArgs& args) {
    BuildResult result = [&]() -> BuildResult {
        if (args.theorem == "t1" || args.theorem == "t2" || args.theorem == "t5") {
            if (args.perfect.empty()) throw ParseError(args.theorem + " needs --perfect");
            if (args.hadamard.empty()) throw ParseError(args.theorem + " needs --hadamard");
            const Sequence a = parse_perfect_source(args.perfect);
            const SequenceSet b = parse_hadamard_source(args.hadamard);
            const long long m = static_cast<long long>(a.length());
            const long long n = static_cast<long long>(b.size());
            if (args.theorem == "t2") return theorem2_build(a, b);
            if (args.theorem == "t5") {
                if (args.shift.empty()) throw ParseError("t5 needs --shift");
                return theorem5_build(a, b, parse_shift(args.shift, m));
            }
            return theorem1_build(a, b, t1_shift(args, m, n));
        }
        if (args.theorem == "t3" || args.theorem == "t4") {
            if (args.hadamard.empty()) throw ParseError(args.theorem + " needs --hadamard");
            const SequenceSet b = parse_hadamard_source(args.hadamard);
            if (args.theorem == "t3") {
                if (args.input.empty() == args.perfect.empty())
                    throw ParseError("t3 needs exactly one of --input or --perfect");
                if (!args.d_set) throw ParseError("t3 needs --d");
                const SequenceSet c = args.input.empty()
                                          ? SequenceSet({parse_perfect_source(args.perfect)})
                                          : load_setfile(args.input);
                return theorem3_build(c, b, args.d);
            }
            if (args.input.empty()) throw ParseError("t4 needs --input");
            return theorem4_build(load_setfile(args.input), b, args.trust_claim);
        }
        throw ParseError("unknown construction '" + args.theorem + "' (t1..t5)");
    }();

    const std::string content = write_setfile(result.set);
    if (args.out == "-") {
        std::cout << content;
    } else {
        save_setfile(result.set, args.out);
        std::cout << theorem_tag_name(result.claim.tag) << " set N=" << result.set.length()
                  << " M=" << result.set.size() << ' ';
        if (result.claim.zcz)
            std::cout << "claim zcz:" << *result.claim.zcz;
        else
            std::cout << "claim delta:" << *result.claim.delta;
        std::cout << " -> " << args.out << '\n';
    }
    return 0;
}

struct VerifyArgs {
    std::string path;
    bool against_claim = false;
    bool fft = false;
    bool direct = false;
    bool exhaustive = false;
    std::optional<long long> pairs;
    unsigned long long seed = 0;
    bool no_delta = false;
};

int cmd_verify(const VerifyArgs& args) {
    const SequenceSet s = load_setfile(args.path);

    VerifyOptions options;
    options.seed = args.seed;
    options.compute_delta = !args.no_delta;
    if (args.fft && args.direct) throw ParseError("give at most one of --fft and --direct");
    if (args.fft) options.method = CorrMethod::Fft;
    if (args.direct) options.method = CorrMethod::Direct;
    if (args.pairs) {
        options.sample_pairs = *args.pairs;
    } else if (!args.exhaustive && static_cast<long long>(s.length()) > kSampledLengthLimit) {
        options.sample_pairs = 16;
    }

    const ZczReport rep = verify(s, options);
    std::cout << "N=" << rep.n << " M=" << rep.m << '\n';
    std::cout << "measured_zcz=" << rep.measured_zcz << '\n';
    std::cout << "bound=" << rep.bound.str() << " achieves_bound=" << (rep.achieves_bound ? "yes" : "no") << '\n';
    if (rep.delta) printf("delta=%.2f\n", *rep.delta);
    std::cout << "mode=" << (rep.exhaustive ? "exhaustive" : "sampled") << " pairs_checked=" << rep.pairs_checked
              << " arithmetic=" << (rep.exact ? "exact" : "float");
    if (!rep.exact) printf(" tolerance=%.3g", rep.tolerance);
    std::cout << '\n';
    std::cout << "peak_ok=" << (rep.peak_ok ? "yes" : "no") << '\n';
    if (rep.claim) {
        if (rep.claim->kind == SetClaim::Kind::Zcz)
            std::cout << "claim=zcz:" << rep.claim->zcz;
        else
            printf("claim=delta:%.2f", rep.claim->delta);
        std::cout << " satisfied=" << (rep.claim_satisfied && *rep.claim_satisfied ? "yes" : "no") << '\n';
    }

    if (!rep.peak_ok) return kExitClaim;
    if (args.against_claim) {
        if (!rep.claim) {
            std::cerr << "verify: file carries no claim to check\n";
            return kExitUsage;
        }
        if (!rep.claim_satisfied || !*rep.claim_satisfied) return kExitClaim;
    }
    return 0;
}

struct CorrelateArgs {
    std::string path;
    long long h = 0;
    long long k = 0;
    bool fft = false;
    bool direct = false;
};

int cmd_correlate(const CorrelateArgs& args) {
    const SequenceSet s = load_setfile(args.path);
    if (args.h < 0 || args.k < 0 || args.h >= static_cast<long long>(s.size()) ||
        args.k >= static_cast<long long>(s.size()))
        throw ParseError("sequence index out of range (set has " + std::to_string(s.size()) + " members)");
    if (args.fft && args.direct) throw ParseError("give at most one of --fft and --direct");
    CorrMethod method = CorrMethod::Auto;
    if (args.fft) method = CorrMethod::Fft;
    if (args.direct) method = CorrMethod::Direct;

    const CorrelationProfile prof = cross_correlation(s[static_cast<std::size_t>(args.h)],
                                                      s[static_cast<std::size_t>(args.k)], method);
    printf("|R_{%lld,%lld}| = (", args.h, args.k);
    for (std::size_t tau = 0; tau < prof.values.size(); ++tau)
        printf("%s%.2f", tau ? ", " : "", std::abs(prof.values[tau]));
    printf(")\n");
    return 0;
}

int cmd_catalog(bool witness, bool fail_fast) {
    const auto& rows = catalog_rows();
    printf("%6s %4s %5s %10s  %s\n", "N", "M", "Zcz", "exclusive", "construction");
    bool all_ok = true;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const CatalogRow& row = rows[i];
        printf("%6lld %4lld %5lld %10s  %s\n", row.n, row.m, row.zcz, row.exclusive ? "yes" : "no",
               row.recipe.c_str());
        if (!witness) continue;
        if (!row.constructible) {
            printf("%28s witness: unavailable\n", "");
            continue;
        }
        const BuildResult built = catalog_witness(i);
        VerifyOptions options;
        options.compute_delta = false;
        const ZczReport rep = verify(built.set, options);
        const bool ok = rep.claim_satisfied && *rep.claim_satisfied && rep.measured_zcz >= row.zcz;
        printf("%28s witness: %s measured_zcz=%lld (%s)\n", "", theorem_tag_name(built.claim.tag).c_str(),
               rep.measured_zcz, ok ? "ok" : "MISMATCH");
        all_ok = all_ok && ok;
        if (!ok && fail_fast) return kExitClaim;
    }
    return all_ok ? 0 : kExitClaim;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Builds and verifies sequence sets with zero-correlation zones or low cross-correlation"};
    app.require_subcommand(1);

    GenerateArgs gen;
    CLI::App* generate = app.add_subcommand("generate", "Construct a set and write it as a set file");
    generate->add_option("theorem", gen.theorem, "Construction rule: t1, t2, t3, t4 or t5")->required();
    generate->add_option("--perfect", gen.perfect, "Perfect sequence: builtin:<name>, chu:<n>[:<u>] or file:<path>");
    generate->add_option("--hadamard", gen.hadamard,
                         "Complete orthogonal set: sylvester:<t>, paley:<q>, h12 or file:<path>");
    generate->add_option("--input", gen.input, "Input set file (t3, t4)");
    generate->add_option("--shift", gen.shift, "Shift sequence, comma separated (t1, t5)");
    generate->add_option("--variant", gen.variant, "Canonical shifts for t1: case1 or case2[:<i>]");
    generate->add_option("--d", gen.d, "Decimation offset (t3)")->each([&](const std::string&) { gen.d_set = true; });
    generate->add_flag("--trust-claim", gen.trust_claim, "Skip re-verifying the input claim (t4)");
    generate->add_option("--out,-o", gen.out, "Output path, - for stdout (default)");

    VerifyArgs ver;
    CLI::App* verify_cmd = app.add_subcommand("verify", "Measure a set file's correlation properties");
    verify_cmd->add_option("path", ver.path, "Set file")->required();
    verify_cmd->add_flag("--against-claim", ver.against_claim, "Exit 3 when the file's claim fails");
    verify_cmd->add_flag("--fft", ver.fft, "Use the transform path");
    verify_cmd->add_flag("--direct", ver.direct, "Use the direct path");
    verify_cmd->add_flag("--exhaustive", ver.exhaustive, "Check every pair even for very long sets");
    verify_cmd->add_option("--pairs", ver.pairs, "Sample this many cross pairs instead of all");
    verify_cmd->add_option("--seed", ver.seed, "Seed for pair sampling (default 0)");
    verify_cmd->add_flag("--no-delta", ver.no_delta, "Skip the maximal-correlation scan");

    CorrelateArgs cor;
    CLI::App* correlate_cmd = app.add_subcommand("correlate", "Print one pair's correlation magnitudes");
    correlate_cmd->add_option("path", cor.path, "Set file")->required();
    correlate_cmd->add_option("h_index", cor.h, "First sequence index")->required();
    correlate_cmd->add_option("k_index", cor.k, "Second sequence index")->required();
    correlate_cmd->add_flag("--fft", cor.fft, "Use the transform path");
    correlate_cmd->add_flag("--direct", cor.direct, "Use the direct path");

    bool witness = false;
    CLI::App* catalog_cmd = app.add_subcommand("catalog", "Print the built-in parameter table");
    catalog_cmd->add_flag("--witness", witness, "Construct and verify a witness for each row");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*generate) return cmd_generate(gen);
        if (*verify_cmd) return cmd_verify(ver);
        if (*correlate_cmd) return cmd_correlate(cor);
        if (*catalog_cmd) return cmd_catalog(witness, false);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const HypothesisError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitHypothesis;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return 0;
}
