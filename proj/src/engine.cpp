#include "terracini/engine.hpp"

#include <algorithm>

#include "terracini/errors.hpp"

namespace terracini {

void TangentFrame::append_point(std::vector<uint64_t> point) {
    Matrix J = map_->jacobian_at(point);
    for (size_t i = 0; i < J.rows(); ++i) {
        std::vector<uint64_t> row(J.cols());
        for (size_t j = 0; j < J.cols(); ++j) row[j] = J.at(i, j);
        matrix_.append_row(row);
    }
    points_.push_back(std::move(point));
}

size_t secant_dimension(const VarietySpec& x, size_t k, const SampleConfig& cfg) {
    size_t best = 0;
    for (int r = 0; r < cfg.samples; ++r) {
        TangentFrame frame(x);
        for (size_t i = 0; i <= k; ++i)
            frame.append_point(sample_point(x.map, cfg, static_cast<uint64_t>(r), i));
        best = std::max(best, frame.rank());
    }
    if (best == 0) throw SamplingPathology("secant_dimension: all Jacobians vanished");
    return best - 1;
}

namespace {

std::vector<long long> second_differences(const std::vector<long long>& delta) {
    std::vector<long long> zeta(delta.size());
    for (size_t k = 0; k < delta.size(); ++k) {
        long long d0 = delta[k];
        long long d1 = k >= 1 ? delta[k - 1] : 0;
        long long d2 = k >= 2 ? delta[k - 2] : 0;
        zeta[k] = d0 - 2 * d1 + d2;
    }
    return zeta;
}

DefectProfile profile_attempt(const VarietySpec& x, const SampleConfig& cfg) {
    DefectProfile p;
    p.prime = cfg.prime;
    p.samples = cfg.samples;
    p.seed = cfg.seed;

    VarietySpec cur = x;
    size_t span = ambient_span_dim(cur, cfg);
    if (span + 1 < cur.map.coord_count()) {
        cur = reduce_to_span(cur, cfg);
        p.reducedFromDegenerate = true;
    }
    p.n = static_cast<long long>(projective_dimension(cur, cfg));
    p.N = static_cast<long long>(span);

    if (p.n == p.N) {
        p.k0 = 0; // linear variety: it already fills its span
        return p;
    }

    long long prevDim = p.n;
    for (long long k = 1; k <= p.n + 1; ++k) {
        long long s = static_cast<long long>(secant_dimension(cur, static_cast<size_t>(k), cfg));
        if (s <= prevDim)
            throw SamplingPathology("secant dimension failed to increase at k=" + std::to_string(k));
        if (s > p.N)
            throw SamplingPathology("secant dimension exceeded the span at k=" + std::to_string(k));
        p.secantDims.push_back(s);
        p.delta.push_back((k + 1) * p.n + k - s);
        prevDim = s;
        if (s == p.N) {
            p.k0 = k;
            break;
        }
    }
    if (p.k0 == 0)
        throw SamplingPathology("S^k X did not reach the span for k up to n+1=" +
                                std::to_string(p.n + 1) + "; sampling or spec pathology");

    p.zeta = second_differences(p.delta);
    for (long long z : p.zeta) {
        if (z < 0)
            throw SamplingPathology("negative drop-sequence entry; sampling pathology");
    }
    p.fiberDims.resize(p.delta.size());
    for (size_t k = 0; k < p.delta.size(); ++k)
        p.fiberDims[k] = p.delta[k] - (k >= 1 ? p.delta[k - 1] : 0);
    p.entryLocusDims = p.fiberDims;
    return p;
}

} // namespace

DefectProfile defect_profile(const VarietySpec& x, const SampleConfig& cfg) {
    try {
        return profile_attempt(x, cfg);
    } catch (const SamplingPathology&) {
        // One reseeded retry before giving up; structural pathologies (the
        // k cap) fail again and propagate.
        return profile_attempt(x, cfg.with_seed(mix_seed(cfg.seed, kTagRetry, 1)));
    }
}

VarietySpec tangential_projection(const VarietySpec& x, size_t k, const SampleConfig& cfg) {
    if (k < 1) throw SpecError("tangential_projection: k out of range (need k >= 1)");
    TangentFrame frame(x);
    // Points 1..k of repetition 0: the same stream the defect computation
    // uses past its base point, so cross-checks compare like with like.
    for (size_t i = 1; i <= k; ++i) frame.append_point(sample_point(x.map, cfg, 0, i));
    Matrix basis = frame.matrix().nullspace_basis();
    if (basis.rows() == 0)
        throw SpecError("tangential_projection: k out of range (tangent span fills the ambient space)");
    try {
        PolyMap projected = x.map.linear_transform(basis);
        return {std::move(projected), "tproj" + std::to_string(k) + "(" + x.name + ")",
                x.provenance + "|tproject:" + std::to_string(k)};
    } catch (const SpecError&) {
        throw SpecError("tangential_projection: k out of range (image is empty)");
    }
}

std::vector<long long> drop_sequence_direct(const VarietySpec& x, const SampleConfig& cfg) {
    std::vector<long long> zeta;
    VarietySpec cur = x;
    long long n0 = static_cast<long long>(projective_dimension(x, cfg));
    for (long long step = 0;; ++step) {
        SampleConfig stepCfg = cfg.with_seed(mix_seed(cfg.seed, kTagDrop, static_cast<uint64_t>(step)));
        long long dim = static_cast<long long>(projective_dimension(cur, stepCfg));
        long long span = static_cast<long long>(ambient_span_dim(cur, stepCfg));
        if (dim == span) break; // image is linear
        if (step > n0)
            throw SamplingPathology("drop sequence exceeded n+1 steps; sampling or spec pathology");
        VarietySpec next = tangential_projection(cur, 1, stepCfg);
        long long dimNext = static_cast<long long>(projective_dimension(next, stepCfg));
        zeta.push_back(dim - dimNext);
        cur = std::move(next);
    }
    return zeta;
}

size_t join_dimension(const VarietySpec& a, const VarietySpec& b, const SampleConfig& cfg) {
    if (a.map.coord_count() != b.map.coord_count())
        throw SpecError("join_dimension: ambient coordinate counts differ");
    if (!(a.map.field() == b.map.field())) throw SpecError("join_dimension: field mismatch");
    size_t best = 0;
    for (int r = 0; r < cfg.samples; ++r) {
        Matrix Ja = a.map.jacobian_at(sample_point(a.map, cfg, static_cast<uint64_t>(r), 0));
        Matrix Jb = b.map.jacobian_at(sample_point(b.map, cfg, static_cast<uint64_t>(r), 1));
        best = std::max(best, stack(Ja, Jb).rank());
    }
    if (best == 0) throw SamplingPathology("join_dimension: all Jacobians vanished");
    return best - 1;
}

namespace {

// Re-index a polynomial into a larger variable set, offsetting variables.
Poly shift_vars(const Poly& f, const PrimeField& F, size_t newCount, size_t offset) {
    Poly out(newCount);
    for (const auto& [e, c] : f.terms()) {
        Exponents e2(newCount, 0);
        for (size_t i = 0; i < e.size(); ++i) e2[offset + i] = e[i];
        out.add_term(F, e2, c);
    }
    return out;
}

} // namespace

size_t tangent_variety_dimension(const VarietySpec& x, const SampleConfig& cfg) {
    const PolyMap& m = x.map;
    const PrimeField& F = m.field();
    const size_t mv = m.var_count();
    const size_t nv = 2 * mv;

    std::vector<std::string> names = m.var_names();
    for (size_t i = 0; i < mv; ++i) names.push_back("v" + std::to_string(i));
    std::vector<std::vector<size_t>> groups = m.groups();
    std::vector<size_t> vGroup(mv);
    for (size_t i = 0; i < mv; ++i) vGroup[i] = mv + i;
    groups.push_back(vGroup);

    std::vector<Poly> coords;
    for (const auto& f : m.coords()) {
        Poly g(nv);
        for (size_t i = 0; i < mv; ++i) {
            Poly df = shift_vars(f.derivative(F, i), F, nv, 0);
            Exponents ev(nv, 0);
            ev[mv + i] = 1;
            g = g.plus(F, df.times(F, Poly::monomial(nv, ev, 1, F)));
        }
        coords.push_back(std::move(g));
    }
    auto aux = PolyMap::create(F, std::move(names), std::move(groups), std::move(coords));
    VarietySpec tv{std::move(aux), "tangentvar(" + x.name + ")", "tangentvar(" + x.name + ")"};
    return projective_dimension(tv, cfg);
}

ParamSubstitution ParamSubstitution::identity(const VarietySpec& x) {
    const PolyMap& m = x.map;
    ParamSubstitution h;
    for (size_t i = 0; i < m.var_count(); ++i) h.varNames.push_back("u" + std::to_string(i));
    h.groups = m.groups();
    for (size_t i = 0; i < m.var_count(); ++i) {
        Exponents e(m.var_count(), 0);
        e[i] = 1;
        h.polys.push_back(Poly::monomial(m.var_count(), e, 1, m.field()));
    }
    return h;
}

ParamSubstitution ParamSubstitution::general_point(const VarietySpec& x, const SampleConfig& cfg) {
    const PolyMap& m = x.map;
    std::vector<size_t> allVars(m.var_count());
    for (size_t i = 0; i < allVars.size(); ++i) allVars[i] = i;
    std::optional<uint32_t> deg;
    for (const auto& c : m.coords()) {
        if (c.is_zero()) continue;
        auto d = c.homogeneous_degree(allVars);
        if (!d || (deg && *deg != *d))
            throw SpecError("general_point substitution needs one common total degree");
        deg = d;
    }
    auto a = sample_point(m, cfg, 0, 0, kTagRelative);
    ParamSubstitution h;
    h.varNames = {"l"};
    h.groups = {{0}};
    for (size_t i = 0; i < m.var_count(); ++i) {
        Poly f(1);
        if (a[i]) f.add_term(m.field(), {1}, a[i]);
        h.polys.push_back(std::move(f));
    }
    return h;
}

namespace {

RelativeDims relative_attempt(const VarietySpec& x, const ParamSubstitution& h,
                              const SampleConfig& cfg) {
    const PolyMap& m = x.map;
    const PrimeField& F = m.field();
    if (h.polys.size() != m.var_count())
        throw SpecError("relative_dimensions: substitution must cover every parameter of X");

    // Y = X composed with h.
    std::vector<Poly> ycoords;
    for (const auto& f : m.coords()) ycoords.push_back(f.compose(F, h.polys));
    auto ymap = PolyMap::create(F, h.varNames, h.groups, std::move(ycoords));
    VarietySpec y{std::move(ymap), "sub(" + x.name + ")", "sub(" + x.name + ")"};

    long long dimY = static_cast<long long>(projective_dimension(y, cfg));
    long long dimX = static_cast<long long>(projective_dimension(x, cfg));
    long long dimS = static_cast<long long>(join_dimension(y, x, cfg));

    // T(Y,X): (u, v) -> sum_i v_i (df/dt_i)(h(u)).
    const size_t uv = h.varNames.size();
    const size_t mv = m.var_count();
    const size_t nv = uv + mv;
    std::vector<std::string> names = h.varNames;
    for (size_t i = 0; i < mv; ++i) names.push_back("v" + std::to_string(i));
    std::vector<std::vector<size_t>> groups = h.groups;
    std::vector<size_t> vGroup(mv);
    for (size_t i = 0; i < mv; ++i) vGroup[i] = uv + i;
    groups.push_back(vGroup);

    std::vector<Poly> tcoords;
    for (const auto& f : m.coords()) {
        Poly g(nv);
        for (size_t i = 0; i < mv; ++i) {
            Poly sub = shift_vars(f.derivative(F, i).compose(F, h.polys), F, nv, 0);
            Exponents ev(nv, 0);
            ev[uv + i] = 1;
            g = g.plus(F, sub.times(F, Poly::monomial(nv, ev, 1, F)));
        }
        tcoords.push_back(std::move(g));
    }
    auto tmap = PolyMap::create(F, std::move(names), std::move(groups), std::move(tcoords));
    VarietySpec tv{std::move(tmap), "reltangent(" + x.name + ")", "reltangent(" + x.name + ")"};
    long long dimT = static_cast<long long>(projective_dimension(tv, cfg));

    RelativeDims out{dimT, dimS, '?'};
    if (dimT == dimY + dimX && dimS == dimT + 1) {
        out.whichCase = 'a';
    } else if (dimT == dimS) {
        out.whichCase = 'b';
    } else {
        throw SamplingPathology("relative dimension dichotomy violated: dimT=" +
                                std::to_string(dimT) + " dimS=" + std::to_string(dimS) +
                                " dimY=" + std::to_string(dimY) + " dimX=" + std::to_string(dimX));
    }
    return out;
}

} // namespace

RelativeDims relative_dimensions(const VarietySpec& x, const ParamSubstitution& h,
                                 const SampleConfig& cfg) {
    try {
        return relative_attempt(x, h, cfg);
    } catch (const SamplingPathology&) {
        return relative_attempt(x, h, cfg.with_seed(mix_seed(cfg.seed, kTagRetry, 2)));
    }
}

long long vertex_dimension(const VarietySpec& x, const SampleConfig& cfg) {
    const PolyMap& m = x.map;
    Matrix V = m.jacobian_at(sample_point(m, cfg, 0, 0, kTagVertex)).row_basis();
    int stable = 0;
    size_t idx = 1;
    const size_t cap = 3 * (V.rows() + 2) + 8;
    while (stable < 3) {
        if (V.rows() == 0) return -1;
        if (idx > cap) throw SamplingPathology("vertex intersection failed to stabilize");
        Matrix J = m.jacobian_at(sample_point(m, cfg, 0, idx, kTagVertex)).row_basis();
        Matrix W = rowspace_intersection(V, J);
        stable = W.rows() == V.rows() ? stable + 1 : 0;
        V = std::move(W);
        ++idx;
    }
    return static_cast<long long>(V.rows()) - 1;
}

size_t explicit_join_secant_dimension(const VarietySpec& x, size_t k, const SampleConfig& cfg) {
    const PolyMap& m = x.map;
    const PrimeField& F = m.field();
    const size_t mv = m.var_count();
    const size_t copies = k + 1;
    const size_t nv = copies * mv + copies; // k+1 parameter copies plus l_0..l_k

    std::vector<std::string> names;
    std::vector<std::vector<size_t>> groups;
    for (size_t c = 0; c < copies; ++c) {
        for (size_t i = 0; i < mv; ++i)
            names.push_back("s" + std::to_string(c) + "_" + std::to_string(i));
        for (const auto& g : m.groups()) {
            std::vector<size_t> g2;
            for (size_t i : g) g2.push_back(c * mv + i);
            groups.push_back(std::move(g2));
        }
    }
    std::vector<size_t> lGroup;
    for (size_t c = 0; c < copies; ++c) {
        names.push_back("l" + std::to_string(c));
        lGroup.push_back(copies * mv + c);
    }
    groups.push_back(lGroup);

    std::vector<Poly> coords;
    for (const auto& f : m.coords()) {
        Poly g(nv);
        for (size_t c = 0; c < copies; ++c) {
            Poly fc = shift_vars(f, F, nv, c * mv);
            Exponents el(nv, 0);
            el[copies * mv + c] = 1;
            g = g.plus(F, fc.times(F, Poly::monomial(nv, el, 1, F)));
        }
        coords.push_back(std::move(g));
    }
    auto join = PolyMap::create(F, std::move(names), std::move(groups), std::move(coords));

    size_t best = 0;
    for (int r = 0; r < cfg.samples; ++r) {
        auto pt = sample_point(join, cfg, static_cast<uint64_t>(r), k, kTagRelative);
        best = std::max(best, join.jacobian_at(pt).rank());
    }
    if (best == 0) throw SamplingPathology("join parameterization Jacobian vanished");
    return best - 1;
}

} // namespace terracini
