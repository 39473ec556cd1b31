#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "terracini/engine.hpp"
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

using LL = std::vector<long long>;

} // namespace

TEST_CASE("secant dimensions") {
    SampleConfig cfg = cfg_with_seed(21);
    CHECK(secant_dimension(veronese(2, 2, F), 1, cfg) == 4);
    CHECK(secant_dimension(segre(1, 1, F), 1, cfg) == 3);
    CHECK(secant_dimension(pluecker_lines(5, F), 2, cfg) == 14);
    // k = 0 is the variety itself
    CHECK(secant_dimension(veronese(3, 2, F), 0, cfg) == 3);
}

TEST_CASE("defect profiles of the standard families") {
    SampleConfig cfg = cfg_with_seed(22);

    auto p = defect_profile(veronese(3, 2, F), cfg);
    CHECK(p.n == 3);
    CHECK(p.N == 9);
    CHECK(p.k0 == 3);
    CHECK(p.delta == LL{1, 3, 6});
    CHECK(p.zeta == LL{1, 1, 1});
    CHECK(p.fiberDims == LL{1, 2, 3});
    CHECK(p.entryLocusDims == p.fiberDims);
    CHECK(p.secantDims == LL{6, 8, 9});

    auto s = defect_profile(segre(2, 2, F), cfg);
    CHECK(s.n == 4);
    CHECK(s.N == 8);
    CHECK(s.k0 == 2);
    CHECK(s.delta == LL{2, 6});
    CHECK(s.zeta == LL{2, 2});

    auto sc = defect_profile(scroll(1, 4, F), cfg);
    CHECK(sc.n == 2);
    CHECK(sc.N == 6);
    CHECK(sc.k0 == 2);
    CHECK(sc.delta == LL{0, 2});
    CHECK(sc.zeta == LL{0, 2});

    auto sc5 = defect_profile(scroll(1, 5, F), cfg);
    CHECK(sc5.delta == LL{0, 1});

    // confidence metadata reproduces the run
    CHECK(p.prime == cfg.prime);
    CHECK(p.samples == cfg.samples);
    CHECK(p.seed == cfg.seed);
}

TEST_CASE("linear input yields an empty profile") {
    SampleConfig cfg = cfg_with_seed(23);
    auto p = defect_profile(veronese(1, 1, F), cfg);
    CHECK(p.k0 == 0);
    CHECK(p.delta.empty());
    CHECK(p.n == p.N);
}

TEST_CASE("degenerate input is auto-reduced and flagged") {
    SampleConfig cfg = cfg_with_seed(24);
    auto v22 = veronese(2, 2, F);
    Matrix dup(F, 7, 6);
    for (size_t i = 0; i < 6; ++i) dup.at(i, i) = 1;
    dup.at(6, 2) = 1;
    VarietySpec padded{v22.map.linear_transform(dup), "padded", "padded"};
    auto p = defect_profile(padded, cfg);
    CHECK(p.reducedFromDegenerate);
    CHECK(p.N == 5);
    CHECK(p.delta == LL{1, 3});
}

TEST_CASE("profile search aborts past n+1 with a diagnostic") {
    SampleConfig cfg = cfg_with_seed(25);
    // a rational normal curve of degree 7 needs S^3 to fill P^7
    CHECK_THROWS_AS(defect_profile(veronese(1, 7, F), cfg), SamplingPathology);
}

TEST_CASE("tangential projections") {
    SampleConfig cfg = cfg_with_seed(26);

    auto v32 = veronese(3, 2, F);
    auto x1 = tangential_projection(v32, 1, cfg);
    CHECK(x1.map.coord_count() == 6);
    CHECK(ambient_span_dim(x1, cfg) == 5);
    CHECK(projective_dimension(x1, cfg) == 2);
    auto p1 = defect_profile(x1, cfg);
    CHECK(p1.delta == LL{1, 3}); // the veronese surface profile
    CHECK(p1.k0 == 2);

    auto s14 = scroll(1, 4, F);
    auto sx1 = tangential_projection(s14, 1, cfg);
    CHECK(projective_dimension(sx1, cfg) == 2);
    CHECK(ambient_span_dim(sx1, cfg) == 3);
    CHECK(vertex_dimension(sx1, cfg) == 0);

    // k = k0 gives a linear image
    auto s22 = segre(2, 2, F);
    auto sx2 = tangential_projection(s22, 2, cfg);
    CHECK(projective_dimension(sx2, cfg) == ambient_span_dim(sx2, cfg));

    CHECK_THROWS_AS(tangential_projection(v32, 0, cfg), SpecError);
    // k far beyond k0: the tangent span fills the ambient space
    CHECK_THROWS_AS(tangential_projection(segre(1, 1, F), 2, cfg), SpecError);
}

TEST_CASE("drop sequences computed directly") {
    SampleConfig cfg = cfg_with_seed(27);
    CHECK(drop_sequence_direct(veronese(4, 2, F), cfg) == LL{1, 1, 1, 1});
    CHECK(drop_sequence_direct(pluecker_lines(5, F), cfg) == LL{4, 4});
    auto proj = project_from_point(veronese(3, 2, F), ProjectionMode::General, cfg);
    CHECK(drop_sequence_direct(proj, cfg) == LL{1, 1});
    CHECK(drop_sequence_direct(scroll(1, 4, F), cfg) == LL{0, 2});
    CHECK(drop_sequence_direct(veronese(1, 1, F), cfg).empty());
}

TEST_CASE("drop sequence equals second differences of delta") {
    SampleConfig cfg = cfg_with_seed(28);
    std::vector<VarietySpec> specs = {veronese(3, 2, F), segre(2, 2, F), scroll(1, 5, F),
                                      pluecker_lines(4, F)};
    for (const auto& x : specs) {
        auto p = defect_profile(x, cfg);
        CHECK(drop_sequence_direct(x, cfg) == p.zeta);
    }
}

TEST_CASE("join dimensions") {
    SampleConfig cfg = cfg_with_seed(29);
    auto v22 = veronese(2, 2, F);
    CHECK(join_dimension(v22, v22, cfg) == secant_dimension(v22, 1, cfg));
    auto s11 = segre(1, 1, F);
    CHECK(join_dimension(s11, s11, cfg) == 3);

    // join with one of the variety's own points: the cone over X
    auto pt = point_variety(v22, cfg);
    CHECK(join_dimension(pt, v22, cfg) == 3);

    // two disjoint linear P^2's in P^5 span the whole space
    auto lin = [&](size_t offset) {
        std::vector<Poly> coords(6, Poly(3));
        for (size_t i = 0; i < 3; ++i) {
            Exponents e(3, 0);
            e[i] = 1;
            coords[offset + i] = Poly::monomial(3, e, 1, F);
        }
        return PolyMap::create(F, {"s0", "s1", "s2"}, {{0, 1, 2}}, coords);
    };
    VarietySpec a{lin(0), "lin0", "lin0"};
    VarietySpec b{lin(3), "lin3", "lin3"};
    CHECK(join_dimension(a, b, cfg) == 5);

    CHECK_THROWS_AS(join_dimension(a, veronese(3, 2, F), cfg), SpecError);
}

TEST_CASE("tangent variety dimensions") {
    SampleConfig cfg = cfg_with_seed(30);
    CHECK(tangent_variety_dimension(veronese(2, 2, F), cfg) == 4);
    CHECK(tangent_variety_dimension(veronese(1, 3, F), cfg) == 2);
    CHECK(secant_dimension(veronese(1, 3, F), 1, cfg) == 3);
    CHECK(tangent_variety_dimension(segre(2, 2, F), cfg) == 7);
    CHECK(secant_dimension(segre(2, 2, F), 1, cfg) == 7);
}

TEST_CASE("relative dimensions and the dichotomy") {
    SampleConfig cfg = cfg_with_seed(31);
    auto v22 = veronese(2, 2, F);

    auto pt = relative_dimensions(v22, ParamSubstitution::general_point(v22, cfg), cfg);
    CHECK(pt.dimT == 2);
    CHECK(pt.dimS == 3);
    CHECK(pt.whichCase == 'a');

    auto self = relative_dimensions(v22, ParamSubstitution::identity(v22), cfg);
    CHECK(self.dimT == 4);
    CHECK(self.dimS == 4);
    CHECK(self.whichCase == 'b');

    auto tc = veronese(1, 3, F);
    auto tcSelf = relative_dimensions(tc, ParamSubstitution::identity(tc), cfg);
    CHECK(tcSelf.dimT == 2);
    CHECK(tcSelf.dimS == 3);
    CHECK(tcSelf.whichCase == 'a');

    CHECK_THROWS_AS(ParamSubstitution::general_point(scroll(1, 4, F), cfg), SpecError);
}

TEST_CASE("vertex dimensions") {
    SampleConfig cfg = cfg_with_seed(32);
    CHECK(vertex_dimension(veronese(2, 2, F), cfg) == -1);
    CHECK(vertex_dimension(cone_over(veronese(2, 2, F)), cfg) == 0);
    CHECK(vertex_dimension(cone_over(cone_over(veronese(2, 2, F))), cfg) == 1);
    auto sx1 = tangential_projection(scroll(1, 5, F), 1, cfg);
    CHECK(vertex_dimension(sx1, cfg) == 0);
    CHECK(vertex_dimension(segre(1, 1, F), cfg) == -1);
}

TEST_CASE("cone defect formula") {
    SampleConfig cfg = cfg_with_seed(33);
    auto c22 = cone_over(veronese(2, 2, F));
    auto p = defect_profile(c22, cfg);
    CHECK(p.delta[0] == 2); // delta1(X) + dim(vertex) + 1
    auto c15 = cone_over(veronese(1, 5, F));
    auto p15 = defect_profile(c15, cfg);
    CHECK(p15.delta[0] == 1);
    CHECK(p15.delta == LL{1, 2});
    CHECK(vertex_dimension(c15, cfg) == 0);
}

TEST_CASE("terracini rank agrees with the explicit join parameterization") {
    SampleConfig cfg = cfg_with_seed(34);
    std::vector<VarietySpec> specs = {veronese(2, 2, F), segre(1, 2, F), pluecker_lines(3, F),
                                      scroll(1, 4, F)};
    for (const auto& x : specs) {
        auto p = defect_profile(x, cfg);
        for (long long k = 1; k <= p.k0; ++k) {
            CHECK(secant_dimension(x, static_cast<size_t>(k), cfg) ==
                  explicit_join_secant_dimension(x, static_cast<size_t>(k), cfg));
        }
    }
}

TEST_CASE("secant dimension chain is strictly increasing up to k0") {
    SampleConfig cfg = cfg_with_seed(35);
    std::vector<VarietySpec> specs = {veronese(3, 2, F), segre(2, 2, F), pluecker_lines(5, F)};
    for (const auto& x : specs) {
        auto p = defect_profile(x, cfg);
        long long prev = p.n;
        for (long long s : p.secantDims) {
            CHECK(s > prev);
            prev = s;
        }
    }
}

TEST_CASE("profiles are deterministic in the seed and stable across primes") {
    SampleConfig cfg = cfg_with_seed(36);
    auto a = defect_profile(veronese(3, 2, F), cfg);
    auto b = defect_profile(veronese(3, 2, F), cfg);
    CHECK(a.delta == b.delta);
    CHECK(a.secantDims == b.secantDims);

    SampleConfig other = cfg.with_prime(kFallbackPrime).with_seed(99);
    PrimeField F2(kFallbackPrime);
    auto c = defect_profile(veronese(3, 2, F2), other);
    CHECK(a.delta == c.delta);
    CHECK(a.N == c.N);
}

TEST_CASE("tangent frame rank grows monotonically with points") {
    SampleConfig cfg = cfg_with_seed(37);
    auto x = veronese(2, 2, F);
    TangentFrame frame(x);
    size_t prev = 0;
    for (uint64_t i = 0; i < 4; ++i) {
        frame.append_point(sample_point(x.map, cfg, 0, i));
        size_t r = frame.rank();
        CHECK(r >= prev);
        prev = r;
    }
    CHECK(frame.points().size() == 4);
    CHECK(frame.matrix().rows() == 4 * x.map.var_count());
}
