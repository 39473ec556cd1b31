#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "terracini/acceptance.hpp"
#include "terracini/classifier.hpp"
#include "terracini/engine.hpp"
#include "terracini/errors.hpp"
#include "terracini/report.hpp"
#include "terracini/varieties.hpp"

namespace {

using namespace terracini;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitSampling = 3;
constexpr int kExitVerify = 4;

struct CommonOpts {
    uint64_t prime = 0; // 0 = unset, fall back to env then default
    int samples = 3;
    uint64_t seed = 0;
    bool json = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--prime", o.prime, "field modulus (prime, < 2^62)");
    cmd->add_option("--samples", o.samples, "independent sampling repetitions")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", o.seed, "RNG seed; fully determines all randomized output");
    cmd->add_flag("--json", o.json, "emit canonical JSON instead of text");
}

SampleConfig resolve_config(const CommonOpts& o) {
    SampleConfig cfg;
    if (const char* env = std::getenv("TERRACINI_PRIME"); env && *env && o.prime == 0) {
        try {
            cfg.prime = std::stoull(env);
        } catch (const std::exception&) {
            throw SpecError(std::string("invalid TERRACINI_PRIME value '") + env + "'");
        }
    }
    if (o.prime != 0) cfg.prime = o.prime;
    cfg.samples = o.samples;
    cfg.seed = o.seed;
    PrimeField validate(cfg.prime); // throws on a composite or oversized modulus
    (void)validate;
    return cfg;
}

// Retries once over the fallback prime when a sampling cross-check fails;
// structural pathologies fail on both primes and propagate.
template <typename Fn>
int with_prime_fallback(const SampleConfig& cfg, Fn&& run) {
    try {
        run(cfg);
        return kExitOk;
    } catch (const SamplingPathology& first) {
        if (cfg.prime == cfg.fallbackPrime) {
            std::cerr << "sampling pathology: " << first.what() << "\n";
            return kExitSampling;
        }
        try {
            run(cfg.with_prime(cfg.fallbackPrime));
            return kExitOk;
        } catch (const SamplingPathology& second) {
            std::cerr << "sampling pathology (primes " << cfg.prime << " and "
                      << cfg.fallbackPrime << "): " << second.what() << "\n";
            return kExitSampling;
        }
    }
}

int run_analyze(const std::string& specStr, const CommonOpts& o) {
    SampleConfig cfg = resolve_config(o);
    return with_prime_fallback(cfg, [&](const SampleConfig& c) {
        VarietySpec spec = parse_spec(specStr, c);
        DefectProfile p = defect_profile(spec, c);
        ReportDocument doc = make_profile_document(spec, p, c);
        std::cout << (o.json ? emit_json(doc) : emit_text(doc));
    });
}

int run_classify(const std::string& specStr, const CommonOpts& o) {
    SampleConfig cfg = resolve_config(o);
    return with_prime_fallback(cfg, [&](const SampleConfig& c) {
        VarietySpec spec = parse_spec(specStr, c);
        ClassificationReport r = classify(spec, c);
        ReportDocument doc = make_classification_document(spec, r, c);
        std::cout << (o.json ? emit_json(doc) : emit_text(doc));
    });
}

int run_table(const std::string& family, int maxSize, const CommonOpts& o) {
    SampleConfig cfg = resolve_config(o);
    std::vector<std::string> specs;
    if (family == "veronese") {
        for (int n = 2; n <= maxSize; ++n) specs.push_back("veronese:n=" + std::to_string(n) + ",d=2");
    } else if (family == "veronese-projected") {
        for (int n = 2; n <= maxSize; ++n)
            specs.push_back("veronese:n=" + std::to_string(n) + ",d=2|project:general");
    } else if (family == "segre") {
        for (int a = 1; a <= maxSize; ++a)
            for (int b = a; b <= maxSize; ++b)
                specs.push_back("segre:" + std::to_string(a) + "x" + std::to_string(b));
    } else if (family == "pluecker") {
        for (int r = 3; r <= maxSize; ++r) specs.push_back("pluecker:r=" + std::to_string(r));
    } else {
        throw SpecError("unknown family '" + family +
                        "' (expected veronese, veronese-projected, segre, pluecker)");
    }
    return with_prime_fallback(cfg, [&](const SampleConfig& c) {
        std::cout << "family: " << family << "\n";
        std::printf("%-34s %4s %4s %7s %4s %-14s %s\n", "spec", "n", "N", "delta1", "k0", "zeta",
                    "additive");
        for (const auto& s : specs) {
            VarietySpec spec = parse_spec(s, c);
            DefectProfile p = defect_profile(spec, c);
            long long d1 = p.k0 >= 1 ? p.delta[0] : 0;
            std::string zeta = "(";
            for (size_t i = 0; i < p.zeta.size(); ++i)
                zeta += (i ? "," : "") + std::to_string(p.zeta[i]);
            zeta += ")";
            std::printf("%-34s %4lld %4lld %7lld %4lld %-14s %s\n", s.c_str(), p.n, p.N, d1, p.k0,
                        zeta.c_str(), check_additivity(p.delta) ? "yes" : "no");
        }
    });
}

int run_verify(const std::string& suite, int faultCriterion, const CommonOpts& o) {
    if (suite != "paper") throw SpecError("unknown suite '" + suite + "' (expected 'paper')");
    SampleConfig cfg = resolve_config(o);
    auto results = run_paper_suite(cfg, faultCriterion);
    std::ostream& lines = o.json ? std::cerr : std::cout;
    for (const auto& r : results) {
        lines << (r.passed ? "[PASS]" : "[FAIL]") << " criterion " << r.id << ": " << r.name
              << "\n";
        for (const auto& d : r.details) lines << "       " << d << "\n";
    }
    if (o.json) std::cout << suite_transcript(results, cfg);
    return all_passed(results) ? kExitOk : kExitVerify;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"secant-variety invariants of parameterized projective varieties, computed "
                 "exactly over prime fields"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string specStr;
    std::string family;
    std::string suite = "paper";
    int maxSize = 5;
    int faultCriterion = 0;

    CLI::App* analyze = app.add_subcommand("analyze", "defect profile of a variety spec");
    analyze->add_option("spec", specStr, "variety spec string")->required();
    add_common(analyze, opts);

    CLI::App* classifyCmd = app.add_subcommand("classify", "match a variety against the "
                                               "Veronese / projected-Veronese fingerprints");
    classifyCmd->add_option("spec", specStr, "variety spec string")->required();
    add_common(classifyCmd, opts);

    CLI::App* table = app.add_subcommand("table", "defect table for a built-in family");
    table->add_option("--family", family, "veronese | veronese-projected | segre | pluecker")
        ->required();
    table->add_option("--max", maxSize, "largest family parameter")->check(CLI::PositiveNumber);
    add_common(table, opts);

    CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_option("--suite", suite, "suite name (paper)");
    verify->add_option("--inject-fault", faultCriterion,
                       "perturb one expected value of the given criterion (harness self-test)")
        ->group("");
    add_common(verify, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (*analyze) return run_analyze(specStr, opts);
        if (*classifyCmd) return run_classify(specStr, opts);
        if (*table) return run_table(family, maxSize, opts);
        if (*verify) return run_verify(suite, faultCriterion, opts);
    } catch (const SpecError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const SamplingPathology& e) {
        std::cerr << "sampling pathology: " << e.what() << "\n";
        return kExitSampling;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
