#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "terracini/errors.hpp"
#include "terracini/varieties.hpp"

using namespace terracini;

namespace {

const PrimeField F(kDefaultPrime);

SampleConfig cfg_with_seed(uint64_t seed) {
    SampleConfig cfg;
    cfg.seed = seed;
    return cfg;
}

long long binom(long long n, long long k) {
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace

TEST_CASE("veronese coordinates, dimension and span") {
    SampleConfig cfg = cfg_with_seed(1);
    auto v22 = veronese(2, 2, F);
    CHECK(v22.map.coord_count() == 6);
    CHECK(projective_dimension(v22, cfg) == 2);
    CHECK(ambient_span_dim(v22, cfg) == 5);

    auto v11 = veronese(1, 1, F);
    CHECK(v11.map.coord_count() == 2);
    CHECK(projective_dimension(v11, cfg) == 1);
    CHECK(ambient_span_dim(v11, cfg) == 1);

    auto v32 = veronese(3, 2, F);
    CHECK(v32.map.coord_count() == 10);
    CHECK(ambient_span_dim(v32, cfg) == 9);
    CHECK(projective_dimension(v32, cfg) == 3);

    CHECK_THROWS_AS(veronese(0, 2, F), SpecError);
}

TEST_CASE("veronese family formulas") {
    SampleConfig cfg = cfg_with_seed(2);
    for (size_t n = 1; n <= 3; ++n) {
        for (size_t d = 1; d <= 3; ++d) {
            auto x = veronese(n, d, F);
            CHECK(static_cast<long long>(x.map.coord_count()) == binom(n + d, d));
            CHECK(projective_dimension(x, cfg) == n);
            CHECK(static_cast<long long>(ambient_span_dim(x, cfg)) == binom(n + d, d) - 1);
        }
    }
}

TEST_CASE("segre family") {
    SampleConfig cfg = cfg_with_seed(3);
    auto s22 = segre(2, 2, F);
    CHECK(s22.map.coord_count() == 9);
    CHECK(projective_dimension(s22, cfg) == 4);
    CHECK(ambient_span_dim(s22, cfg) == 8);

    auto s11 = segre(1, 1, F);
    CHECK(projective_dimension(s11, cfg) == 2);
    CHECK(ambient_span_dim(s11, cfg) == 3);

    auto s12 = segre(1, 2, F);
    CHECK(projective_dimension(s12, cfg) == 3);
    CHECK(ambient_span_dim(s12, cfg) == 5);

    auto s23 = segre(2, 3, F);
    CHECK(projective_dimension(s23, cfg) == 5);
    CHECK(ambient_span_dim(s23, cfg) == 11);
}

TEST_CASE("pluecker family") {
    SampleConfig cfg = cfg_with_seed(4);
    for (size_t r = 3; r <= 5; ++r) {
        auto g = pluecker_lines(r, F);
        CHECK(static_cast<long long>(g.map.coord_count()) == binom(r + 1, 2));
        CHECK(projective_dimension(g, cfg) == 2 * r - 2);
        CHECK(static_cast<long long>(ambient_span_dim(g, cfg)) == binom(r + 1, 2) - 1);
    }
    CHECK_THROWS_AS(pluecker_lines(2, F), SpecError);
}

TEST_CASE("scroll family") {
    SampleConfig cfg = cfg_with_seed(5);
    auto s14 = scroll(1, 4, F);
    CHECK(s14.map.coord_count() == 7);
    CHECK(projective_dimension(s14, cfg) == 2);
    CHECK(ambient_span_dim(s14, cfg) == 6);

    auto s02 = scroll(0, 2, F);
    CHECK(s02.map.coord_count() == 4);
    CHECK(projective_dimension(s02, cfg) == 2);
    CHECK(ambient_span_dim(s02, cfg) == 3);

    auto s11 = scroll(1, 1, F);
    CHECK(projective_dimension(s11, cfg) == 2);
    CHECK(ambient_span_dim(s11, cfg) == 3);

    CHECK_THROWS_AS(scroll(3, 2, F), SpecError);
}

TEST_CASE("cone_over adds one to dimension and span") {
    SampleConfig cfg = cfg_with_seed(6);
    auto base = veronese(2, 2, F);
    auto c = cone_over(base);
    CHECK(c.map.coord_count() == 7);
    CHECK(projective_dimension(c, cfg) == 3);
    CHECK(ambient_span_dim(c, cfg) == 6);
    CHECK(c.provenance == "veronese:n=2,d=2|cone");

    // cone over a conic matches scroll(0,2) in the basic invariants
    auto conic = cone_over(veronese(1, 2, F));
    CHECK(conic.map.coord_count() == 4);
    CHECK(projective_dimension(conic, cfg) == 2);
    CHECK(ambient_span_dim(conic, cfg) == 3);
}

TEST_CASE("project_from_point drops the span by one") {
    SampleConfig cfg = cfg_with_seed(7);
    auto v22 = veronese(2, 2, F);
    auto gen = project_from_point(v22, ProjectionMode::General, cfg);
    CHECK(gen.map.coord_count() == 5);
    CHECK(ambient_span_dim(gen, cfg) == 4);
    CHECK(projective_dimension(gen, cfg) == 2);
    CHECK(gen.provenance == "veronese:n=2,d=2|project:general");

    auto inner = project_from_point(v22, ProjectionMode::Inner, cfg);
    CHECK(ambient_span_dim(inner, cfg) == 4);
    CHECK(projective_dimension(inner, cfg) == 2);

    // dimension collapse is allowed: a quadric surface projected to P^2
    auto s11 = project_from_point(segre(1, 1, F), ProjectionMode::General, cfg);
    CHECK(s11.map.coord_count() == 3);
    CHECK(ambient_span_dim(s11, cfg) == 2);
    CHECK(projective_dimension(s11, cfg) == 2);
}

TEST_CASE("projection chain alters span one step at a time") {
    SampleConfig cfg = cfg_with_seed(8);
    auto x = veronese(3, 2, F);
    for (int i = 0; i < 3; ++i) {
        size_t before = ambient_span_dim(x, cfg);
        x = project_from_point(x, ProjectionMode::General, cfg.with_seed(cfg.seed + i + 1));
        CHECK(ambient_span_dim(x, cfg) == before - 1);
    }
}

TEST_CASE("generic jacobian rank is stable across points") {
    SampleConfig cfg = cfg_with_seed(9);
    std::vector<VarietySpec> specs = {veronese(2, 2, F), segre(1, 2, F), pluecker_lines(3, F),
                                      scroll(1, 4, F)};
    for (const auto& x : specs) {
        size_t best = 0;
        std::vector<size_t> ranks;
        for (uint64_t i = 0; i < 20; ++i) {
            auto pt = sample_point(x.map, cfg, i, 0);
            ranks.push_back(x.map.jacobian_at(pt).rank());
            best = std::max(best, ranks.back());
        }
        int hits = 0;
        for (size_t r : ranks) hits += r == best ? 1 : 0;
        CHECK(hits >= 19);
    }
}

TEST_CASE("point_variety parameterizes the line over one image point") {
    SampleConfig cfg = cfg_with_seed(10);
    auto pt = point_variety(veronese(2, 2, F), cfg);
    CHECK(pt.map.coord_count() == 6);
    CHECK(pt.map.var_count() == 1);
    CHECK(projective_dimension(pt, cfg) == 0);
    CHECK(ambient_span_dim(pt, cfg) == 0);
}

TEST_CASE("reduce_to_span") {
    SampleConfig cfg = cfg_with_seed(11);
    auto v22 = veronese(2, 2, F);
    auto same = reduce_to_span(v22, cfg);
    CHECK(same.map.coord_count() == 6);
    CHECK(same.provenance == v22.provenance);

    // (f0, f1, f0+f1) reduces to two coordinates
    Matrix t(F, 3, 6);
    t.at(0, 0) = 1;
    t.at(1, 1) = 1;
    t.at(2, 0) = 1;
    t.at(2, 1) = 1;
    VarietySpec dep{v22.map.linear_transform(t), "dep", "dep"};
    auto reduced = reduce_to_span(dep, cfg);
    CHECK(reduced.map.coord_count() == 2);

    // duplicated coordinate gets dropped again
    Matrix dup(F, 7, 6);
    for (size_t i = 0; i < 6; ++i) dup.at(i, i) = 1;
    dup.at(6, 0) = 1;
    VarietySpec padded{v22.map.linear_transform(dup), "padded", "padded"};
    CHECK(ambient_span_dim(padded, cfg) == 5);
    auto back = reduce_to_span(padded, cfg);
    CHECK(back.map.coord_count() == 6);
    CHECK(ambient_span_dim(back, cfg) == 5);

    // duplicated single direction spans a point
    Matrix two(F, 2, 6);
    two.at(0, 0) = 1;
    two.at(1, 0) = 1;
    VarietySpec dd{v22.map.linear_transform(two), "dd", "dd"};
    CHECK(ambient_span_dim(dd, cfg) == 0);
}

TEST_CASE("grammar round trip: parse then print is the identity") {
    SampleConfig cfg = cfg_with_seed(12);
    std::vector<std::string> specs = {
        "veronese:n=2,d=2",
        "veronese:n=3,d=2|project:general",
        "veronese:n=4,d=2|project:inner",
        "segre:2x3",
        "pluecker:r=5",
        "scroll:1,4",
        "scroll:0,2",
        "veronese:n=1,d=5|cone",
        "veronese:n=2,d=2|cone|project:general",
        "scroll:1,4|tproject:1",
        "veronese:n=2,d=2|point",
        "veronese:n=2,d=2|reduce",
    };
    for (const auto& s : specs) {
        auto x = parse_spec(s, cfg);
        CHECK(x.provenance == s);
    }
}

TEST_CASE("grammar errors name the offending token") {
    SampleConfig cfg = cfg_with_seed(13);
    CHECK_THROWS_WITH_AS(parse_spec("bogus:spec", cfg), doctest::Contains("bogus"), SpecError);
    CHECK_THROWS_WITH_AS(parse_spec("veronese:n=2,d=2|polish", cfg), doctest::Contains("polish"),
                         SpecError);
    CHECK_THROWS_AS(parse_spec("veronese:n=2", cfg), SpecError);
    CHECK_THROWS_AS(parse_spec("segre:2", cfg), SpecError);
    CHECK_THROWS_AS(parse_spec("", cfg), SpecError);
    CHECK_THROWS_AS(parse_spec("veronese:n=a,d=2", cfg), SpecError);
}

TEST_CASE("explicit JSON spec form") {
    SampleConfig cfg = cfg_with_seed(14);
    // the quadric surface x0y0, x0y1, x1y0, x1y1 with a -1 coefficient twist
    std::string js = R"({"groups": [["x0","x1"],["y0","y1"]],
        "coords": [[["1",[1,0,1,0]]], [["1",[1,0,0,1]]], [["1",[0,1,1,0]]], [["-1",[0,1,0,1]]]]})";
    auto x = parse_spec(js, cfg);
    CHECK(x.map.coord_count() == 4);
    CHECK(projective_dimension(x, cfg) == 2);
    CHECK(ambient_span_dim(x, cfg) == 3);
    // canonical provenance round-trips
    auto again = parse_spec(x.provenance, cfg);
    CHECK(again.provenance == x.provenance);
    // modifiers compose after a JSON head
    auto coned = parse_spec(js + "|cone", cfg);
    CHECK(projective_dimension(coned, cfg) == 3);

    CHECK_THROWS_AS(parse_spec("{\"groups\": []}", cfg), SpecError);
    CHECK_THROWS_AS(parse_spec("{not json", cfg), SpecError);
}
