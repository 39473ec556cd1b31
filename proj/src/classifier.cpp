#include "terracini/classifier.hpp"

#include <algorithm>

#include "terracini/errors.hpp"

namespace terracini {

long long n_scorza(long long n) {
    if (n < 1) throw SpecError("n_scorza: need n >= 1");
    return (n + 2) * (n + 1) / 2 - 1;
}

long long phi_bound(long long n, long long k0, long long delta1) {
    if (n < 1 || k0 < 1 || delta1 < 0) throw SpecError("phi_bound: bad arguments");
    return n * (k0 + 1) - k0 * (delta1 - 1) - delta1 * k0 * (k0 - 1) / 2;
}

long long zak_bound(long long n, long long delta1) {
    if (delta1 < 1)
        throw SpecError("zak_bound: undefined for delta1 = 0 (bound applies to defective varieties)");
    long long r0 = n % delta1;
    long long num = n * (n + delta1 + 2) + r0 * (delta1 - r0 - 2);
    if (num % (2 * delta1) != 0)
        throw SpecError("zak_bound: non-integral value; invalid (n, delta1)");
    return num / (2 * delta1);
}

bool check_superadditivity(const std::vector<long long>& delta) {
    if (delta.empty()) return true;
    long long d1 = delta[0];
    for (size_t k = 0; k < delta.size(); ++k) {
        long long prev = k >= 1 ? delta[k - 1] : 0;
        if (delta[k] < prev + static_cast<long long>(k + 1) * d1) return false;
    }
    return true;
}

bool check_additivity(const std::vector<long long>& delta) {
    if (delta.empty()) return true;
    long long d1 = delta[0];
    for (size_t k = 0; k < delta.size(); ++k) {
        long long kk = static_cast<long long>(k + 1);
        if (delta[k] != d1 * kk * (kk + 1) / 2) return false;
    }
    return true;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::VeroneseFull: return "VERONESE_FULL";
        case Verdict::VeroneseProjectedOrBn: return "VERONESE_PROJECTED_OR_Bn";
        case Verdict::OutsideHypotheses: return "OUTSIDE_HYPOTHESES";
        case Verdict::Not1Defective: return "NOT_1_DEFECTIVE";
        case Verdict::BoundViolationSuspectInput: return "BOUND_VIOLATION_SUSPECT_INPUT";
    }
    return "?";
}

std::string to_string(SurfaceKind k) {
    switch (k) {
        case SurfaceKind::VeroneseSurface: return "VERONESE_SURFACE";
        case SurfaceKind::ConeOverCurve: return "CONE_OVER_CURVE";
        case SurfaceKind::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

namespace {

Check make_check(std::string name, long long lhs, std::string rel, long long rhs) {
    bool passed = false;
    if (rel == ">=") passed = lhs >= rhs;
    else if (rel == "<=") passed = lhs <= rhs;
    else if (rel == "==") passed = lhs == rhs;
    else throw SpecError("unknown relation " + rel);
    return {std::move(name), lhs, std::move(rel), rhs, passed};
}

} // namespace

ClassificationReport classify(const VarietySpec& x, const SampleConfig& cfg) {
    ClassificationReport r;
    r.profile = defect_profile(x, cfg);
    const long long n = r.profile.n;
    const long long N = r.profile.N;
    const long long k0 = r.profile.k0;
    const long long d1 = k0 >= 1 ? r.profile.delta[0] : 0;
    const long long Nn = n >= 1 ? n_scorza(n) : 0;

    r.checks.push_back(make_check("delta1_ge_1", d1, ">=", 1));
    const long long hyp = std::max(Nn - 1, 2 * n + 1);
    r.checks.push_back(make_check("N_ge_hypothesis", N, ">=", hyp));

    long long additViol = 0;
    for (size_t k = 0; k < r.profile.delta.size(); ++k) {
        long long kk = static_cast<long long>(k + 1);
        if (r.profile.delta[k] != d1 * kk * (kk + 1) / 2) ++additViol;
    }
    r.checks.push_back(make_check("additivity_violations", additViol, "==", 0));

    bool boundViolated = false;
    if (d1 >= 1) {
        long long zb = zak_bound(n, d1);
        r.checks.push_back(make_check("N_le_zak", N, "<=", zb));
        boundViolated = boundViolated || N > zb;
    }
    if (k0 >= 1) {
        long long pb = phi_bound(n, k0, d1);
        r.checks.push_back(make_check("N_le_phi", N, "<=", pb));
        boundViolated = boundViolated || N > pb;
    }

    r.checks.push_back(make_check("N_eq_Nn", N, "==", Nn));
    r.checks.push_back(make_check("k0_eq_n", k0, "==", n));
    r.checks.push_back(make_check("N_eq_Nn_minus_1", N, "==", Nn - 1));
    r.checks.push_back(make_check("k0_eq_n_minus_1", k0, "==", n - 1));

    long long vtx = vertex_dimension(x, cfg);
    r.checks.push_back(make_check("vertex_dim_X", vtx, "==", -1));
    bool vertexClean = vtx == -1;
    for (long long k = 1; k < k0; ++k) {
        SampleConfig kCfg = cfg.with_seed(mix_seed(cfg.seed, kTagVertex, static_cast<uint64_t>(k)));
        VarietySpec xk = tangential_projection(x, static_cast<size_t>(k), cfg);
        long long vk = vertex_dimension(xk, kCfg);
        r.checks.push_back(make_check("vertex_dim_X" + std::to_string(k), vk, "==", -1));
        vertexClean = vertexClean && vk == -1;
    }

    const bool additive = additViol == 0;
    const bool fullFingerprint = additive && N == Nn && k0 == n && vertexClean;
    const bool projFingerprint = additive && N == Nn - 1 && k0 == n - 1 && vertexClean;

    if (r.profile.reducedFromDegenerate)
        r.notes += "input was degenerate and has been reduced to its span; ";

    if (d1 < 1) {
        r.verdict = Verdict::Not1Defective;
        if (k0 == 0) r.notes += "variety is linear; ";
    } else if (fullFingerprint) {
        r.verdict = Verdict::VeroneseFull;
    } else if (projFingerprint) {
        r.verdict = Verdict::VeroneseProjectedOrBn;
        if (x.provenance.ends_with("|project:inner")) {
            r.notes += "inner projection by construction: consistent with B^" + std::to_string(n) + "; ";
        } else if (x.provenance.ends_with("|project:general")) {
            r.notes += "general-point projection by construction; ";
        } else {
            r.notes += "projection mode unknown from provenance; B^n vs general projection "
                       "needs the degree, which is out of scope; ";
        }
    } else if (N < hyp) {
        r.verdict = Verdict::OutsideHypotheses;
    } else if (boundViolated) {
        r.verdict = Verdict::BoundViolationSuspectInput;
        r.notes += "a span bound is violated, which cannot happen for a smooth variety; ";
    } else {
        r.verdict = Verdict::OutsideHypotheses;
        r.notes += "hypotheses hold numerically but the fingerprint does not match; an "
                   "unverifiable hypothesis (smoothness, irreducibility) presumably fails; ";
    }
    return r;
}

SurfaceKind identify_defective_surface(const VarietySpec& x, const SampleConfig& cfg) {
    if (projective_dimension(x, cfg) != 2)
        throw SpecError("identify_defective_surface: input is not a surface");
    DefectProfile p = defect_profile(x, cfg);
    long long d1 = p.k0 >= 1 ? p.delta[0] : 0;
    if (p.N < 5 || d1 < 1) return SurfaceKind::Inconclusive;
    if (vertex_dimension(x, cfg) >= 0) return SurfaceKind::ConeOverCurve;
    if (p.N == 5 && p.k0 == 2 && p.zeta == std::vector<long long>{1, 1})
        return SurfaceKind::VeroneseSurface;
    return SurfaceKind::Inconclusive;
}

} // namespace terracini
