#include "terracini/varieties.hpp"

#include <algorithm>

#include "terracini/errors.hpp"

namespace terracini {

namespace {

void monomials_of_degree(size_t nvars, size_t var, uint32_t remaining, Exponents& cur,
                         std::vector<Exponents>& out) {
    if (var + 1 == nvars) {
        cur[var] = remaining;
        out.push_back(cur);
        return;
    }
    for (uint32_t e = remaining; e + 1 > 0; --e) {
        cur[var] = e;
        monomials_of_degree(nvars, var + 1, remaining - e, cur, out);
    }
    cur[var] = 0;
}

std::vector<size_t> iota_group(size_t from, size_t count) {
    std::vector<size_t> g(count);
    for (size_t i = 0; i < count; ++i) g[i] = from + i;
    return g;
}

} // namespace

VarietySpec veronese(size_t n, size_t d, const PrimeField& F) {
    if (n < 1 || d < 1) throw SpecError("veronese: need n >= 1 and d >= 1");
    const size_t nv = n + 1;
    std::vector<std::string> names;
    for (size_t i = 0; i < nv; ++i) names.push_back("x" + std::to_string(i));
    std::vector<Exponents> exps;
    Exponents cur(nv, 0);
    monomials_of_degree(nv, 0, static_cast<uint32_t>(d), cur, exps);
    std::vector<Poly> coords;
    coords.reserve(exps.size());
    for (auto& e : exps) coords.push_back(Poly::monomial(nv, e, 1, F));
    auto map = PolyMap::create(F, std::move(names), {iota_group(0, nv)}, std::move(coords));
    std::string prov = "veronese:n=" + std::to_string(n) + ",d=" + std::to_string(d);
    return {std::move(map), prov, prov};
}

VarietySpec segre(size_t a, size_t b, const PrimeField& F) {
    if (a < 1 || b < 1) throw SpecError("segre: need a, b >= 1");
    const size_t nv = a + 1 + b + 1;
    std::vector<std::string> names;
    for (size_t i = 0; i <= a; ++i) names.push_back("x" + std::to_string(i));
    for (size_t j = 0; j <= b; ++j) names.push_back("y" + std::to_string(j));
    std::vector<Poly> coords;
    for (size_t i = 0; i <= a; ++i) {
        for (size_t j = 0; j <= b; ++j) {
            Exponents e(nv, 0);
            e[i] = 1;
            e[a + 1 + j] = 1;
            coords.push_back(Poly::monomial(nv, e, 1, F));
        }
    }
    auto map = PolyMap::create(F, std::move(names), {iota_group(0, a + 1), iota_group(a + 1, b + 1)},
                               std::move(coords));
    std::string prov = "segre:" + std::to_string(a) + "x" + std::to_string(b);
    return {std::move(map), prov, prov};
}

VarietySpec pluecker_lines(size_t r, const PrimeField& F) {
    if (r < 3) throw SpecError("pluecker: need r >= 3");
    const size_t nv = 2 * (r + 1);
    std::vector<std::string> names;
    for (size_t i = 0; i <= r; ++i) names.push_back("a" + std::to_string(i));
    for (size_t i = 0; i <= r; ++i) names.push_back("b" + std::to_string(i));
    std::vector<Poly> coords;
    for (size_t i = 0; i <= r; ++i) {
        for (size_t j = i + 1; j <= r; ++j) {
            Poly m(nv);
            Exponents e1(nv, 0), e2(nv, 0);
            e1[i] = 1;
            e1[r + 1 + j] = 1;
            e2[j] = 1;
            e2[r + 1 + i] = 1;
            m.add_term(F, e1, 1);
            m.add_term(F, e2, F.neg(1));
            coords.push_back(std::move(m));
        }
    }
    auto map = PolyMap::create(F, std::move(names), {iota_group(0, nv)}, std::move(coords));
    std::string prov = "pluecker:r=" + std::to_string(r);
    return {std::move(map), prov, prov};
}

VarietySpec scroll(size_t a, size_t b, const PrimeField& F) {
    if (a > b || b < 1) throw SpecError("scroll: need 0 <= a <= b and b >= 1");
    const size_t nv = 4; // s, t, u, v
    std::vector<Poly> coords;
    for (size_t i = 0; i <= a; ++i) {
        Exponents e(nv, 0);
        e[0] = static_cast<uint32_t>(a - i);
        e[1] = static_cast<uint32_t>(i);
        e[2] = 1;
        coords.push_back(Poly::monomial(nv, e, 1, F));
    }
    for (size_t j = 0; j <= b; ++j) {
        Exponents e(nv, 0);
        e[0] = static_cast<uint32_t>(b - j);
        e[1] = static_cast<uint32_t>(j);
        e[3] = 1;
        coords.push_back(Poly::monomial(nv, e, 1, F));
    }
    auto map = PolyMap::create(F, {"s", "t", "u", "v"}, {{0, 1}, {2, 3}}, std::move(coords));
    std::string prov = "scroll:" + std::to_string(a) + "," + std::to_string(b);
    return {std::move(map), prov, prov};
}

VarietySpec cone_over(const VarietySpec& x) {
    const PolyMap& m = x.map;
    const PrimeField& F = m.field();
    const size_t nv = m.var_count() + 2;
    std::vector<std::string> names = m.var_names();
    names.push_back("cl");
    names.push_back("cm");
    std::vector<std::vector<size_t>> groups = m.groups();
    groups.push_back({nv - 2, nv - 1});
    std::vector<Poly> coords;
    for (const auto& f : m.coords()) {
        Poly g(nv);
        for (const auto& [e, c] : f.terms()) {
            Exponents e2 = e;
            e2.push_back(1); // * l
            e2.push_back(0);
            g.add_term(F, e2, c);
        }
        coords.push_back(std::move(g));
    }
    Exponents em(nv, 0);
    em[nv - 1] = 1;
    coords.push_back(Poly::monomial(nv, em, 1, F));
    auto map = PolyMap::create(F, std::move(names), std::move(groups), std::move(coords));
    return {std::move(map), "cone(" + x.name + ")", x.provenance + "|cone"};
}

VarietySpec project_from_point(const VarietySpec& x, ProjectionMode mode, const SampleConfig& cfg) {
    const PolyMap& m = x.map;
    const PrimeField& F = m.field();
    const size_t C = m.coord_count();
    if (C < 2) throw SpecError("project_from_point: need at least 2 coordinates");
    for (int attempt = 0; attempt <= cfg.maxRetries; ++attempt) {
        std::vector<uint64_t> center;
        if (mode == ProjectionMode::General) {
            center = sample_vector(F, C, cfg, 0, static_cast<uint64_t>(attempt), kTagCenter);
        } else {
            auto pt = sample_point(m, cfg, 0, static_cast<uint64_t>(attempt), kTagCenter);
            center = m.values_at(pt);
            bool allZero = std::all_of(center.begin(), center.end(), [](uint64_t v) { return v == 0; });
            if (allZero) continue;
        }
        Matrix row(F, 0, C);
        row.append_row(center);
        Matrix basis = row.nullspace_basis();
        try {
            PolyMap projected = m.linear_transform(basis);
            const char* tag = mode == ProjectionMode::General ? "general" : "inner";
            return {std::move(projected),
                    std::string("proj_") + tag + "(" + x.name + ")",
                    x.provenance + "|project:" + tag};
        } catch (const SpecError&) {
            // degenerate center (all image coordinates vanished); resample
        }
    }
    throw SamplingPathology("project_from_point: degenerate center after " +
                            std::to_string(cfg.maxRetries) + " retries");
}

size_t ambient_span_dim(const VarietySpec& x, const SampleConfig& cfg) {
    const PolyMap& m = x.map;
    const size_t C = m.coord_count();
    const size_t R = std::max(C + 1, 2 * C);
    Matrix values(m.field(), 0, C);
    for (size_t i = 0; i < R; ++i) {
        values.append_row(m.values_at(sample_point(m, cfg, 0, i, kTagSpan)));
    }
    size_t rank = values.rank();
    if (rank == 0) throw SamplingPathology("span computation produced the zero space");
    return rank - 1;
}

VarietySpec reduce_to_span(const VarietySpec& x, const SampleConfig& cfg) {
    const PolyMap& m = x.map;
    const size_t C = m.coord_count();
    const size_t R = std::max(C + 1, 2 * C);
    Matrix values(m.field(), 0, C);
    for (size_t i = 0; i < R; ++i) {
        values.append_row(m.values_at(sample_point(m, cfg, 0, i, kTagSpan)));
    }
    std::vector<size_t> pivots;
    values.rref(&pivots);
    if (pivots.size() == C) return x;
    // Selecting the pivot coordinates is injective on the span: a span vector
    // with zero pivot coordinates is zero.
    Matrix sel(m.field(), pivots.size(), C);
    for (size_t i = 0; i < pivots.size(); ++i) sel.at(i, pivots[i]) = 1;
    return {m.linear_transform(sel), "reduce(" + x.name + ")", x.provenance + "|reduce"};
}

size_t projective_dimension(const VarietySpec& x, const SampleConfig& cfg) {
    const PolyMap& m = x.map;
    size_t best = 0;
    for (int r = 0; r < cfg.samples; ++r) {
        auto pt = sample_point(m, cfg, static_cast<uint64_t>(r), 0);
        best = std::max(best, m.jacobian_at(pt).rank());
    }
    if (best == 0) throw SamplingPathology("jacobian vanished at every sample point");
    return best - 1;
}

VarietySpec point_variety(const VarietySpec& x, const SampleConfig& cfg) {
    const PolyMap& m = x.map;
    const PrimeField& F = m.field();
    for (int attempt = 0; attempt <= cfg.maxRetries; ++attempt) {
        auto pt = sample_point(m, cfg, 1, static_cast<uint64_t>(attempt), kTagCenter);
        auto c = m.values_at(pt);
        bool allZero = std::all_of(c.begin(), c.end(), [](uint64_t v) { return v == 0; });
        if (allZero) continue;
        std::vector<Poly> coords;
        for (uint64_t v : c) {
            Poly f(1);
            if (v) f.add_term(F, {1}, v);
            coords.push_back(std::move(f));
        }
        auto map = PolyMap::create(F, {"l"}, {{0}}, std::move(coords));
        return {std::move(map), "point(" + x.name + ")", x.provenance + "|point"};
    }
    throw SamplingPathology("point_variety: image point vanished repeatedly");
}

} // namespace terracini
