#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "terracini/report.hpp"
#include "terracini/varieties.hpp"

using namespace terracini;

namespace {

const PrimeField F(kDefaultPrime);

SampleConfig cfg_with_seed(uint64_t seed) {
    SampleConfig cfg;
    cfg.seed = seed;
    return cfg;
}

ReportDocument doc_for(const std::string& spec, const SampleConfig& cfg) {
    auto x = parse_spec(spec, cfg);
    auto p = defect_profile(x, cfg);
    return make_profile_document(x, p, cfg);
}

} // namespace

TEST_CASE("json round trip is lossless") {
    SampleConfig cfg = cfg_with_seed(51);
    for (const std::string spec : {"veronese:n=3,d=2", "scroll:1,4", "segre:2x2"}) {
        ReportDocument doc = doc_for(spec, cfg);
        std::string text = emit_json(doc);
        ReportDocument back = parse_json_document(text);
        CHECK(back == doc);
        CHECK(emit_json(back) == text);
    }
}

TEST_CASE("same seed gives byte-identical json") {
    SampleConfig cfg = cfg_with_seed(52);
    CHECK(emit_json(doc_for("veronese:n=3,d=2|project:general", cfg)) ==
          emit_json(doc_for("veronese:n=3,d=2|project:general", cfg)));
}

TEST_CASE("different seeds agree on the profile subobject") {
    ReportDocument a = doc_for("segre:2x3", cfg_with_seed(53));
    ReportDocument b = doc_for("segre:2x3", cfg_with_seed(54));
    CHECK(a.delta == b.delta);
    CHECK(a.zeta == b.zeta);
    CHECK(a.n == b.n);
    CHECK(a.N == b.N);
    CHECK(a.k0 == b.k0);
    CHECK(a.seed != b.seed);
}

TEST_CASE("json format is canonical") {
    SampleConfig cfg = cfg_with_seed(55);
    std::string text = emit_json(doc_for("veronese:n=2,d=2", cfg));
    CHECK(text.back() == '\n');
    CHECK(text.find('\r') == std::string::npos);
    for (size_t pos = 0; (pos = text.find('\n', pos)) != std::string::npos; ++pos) {
        if (pos > 0) CHECK(text[pos - 1] != ' ');
    }
    // keys arrive sorted: "N" precedes "checks" precedes "delta"
    CHECK(text.find("\"N\"") < text.find("\"checks\""));
    CHECK(text.find("\"checks\"") < text.find("\"delta\""));
    // integers as numbers, seeds and primes as strings
    CHECK(text.find("\"n\": 2") != std::string::npos);
    CHECK(text.find("\"prime\": \"2305843009213693951\"") != std::string::npos);
}

TEST_CASE("text table carries the profile rows") {
    SampleConfig cfg = cfg_with_seed(56);
    std::string text = emit_text(doc_for("veronese:n=3,d=2", cfg));
    CHECK(text.find("spec: veronese:n=3,d=2") != std::string::npos);
    CHECK(text.find("k0 = 3") != std::string::npos);
    CHECK(text.find("dim S^k") != std::string::npos);
    // delta column 1, 3, 6 with dim S^k = 6, 8, 9
    CHECK(text.find("   1         6         1        1         1") != std::string::npos);
    CHECK(text.find("   2         8         3        1         2") != std::string::npos);
    CHECK(text.find("   3         9         6        1         3") != std::string::npos);
    CHECK(text.find("additivity: true") != std::string::npos);
}

TEST_CASE("linear input renders the linear footer") {
    SampleConfig cfg = cfg_with_seed(57);
    std::string text = emit_text(doc_for("veronese:n=1,d=1", cfg));
    CHECK(text.find("variety is linear; k0=0") != std::string::npos);
}

TEST_CASE("scroll document flags additivity false") {
    SampleConfig cfg = cfg_with_seed(58);
    std::string text = emit_text(doc_for("scroll:1,4", cfg));
    CHECK(text.find("additivity: false") != std::string::npos);
}

TEST_CASE("classification document renders verdict and notes") {
    SampleConfig cfg = cfg_with_seed(59);
    auto x = parse_spec("veronese:n=3,d=2|project:inner", cfg);
    auto r = classify(x, cfg);
    ReportDocument doc = make_classification_document(x, r, cfg);
    std::string text = emit_text(doc);
    CHECK(text.find("verdict: VERONESE_PROJECTED_OR_Bn") != std::string::npos);
    CHECK(text.find("notes:") != std::string::npos);
    std::string js = emit_json(doc);
    ReportDocument back = parse_json_document(js);
    CHECK(back == doc);
    CHECK(back.verdict == "VERONESE_PROJECTED_OR_Bn");
}
