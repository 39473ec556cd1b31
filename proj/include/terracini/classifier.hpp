#pragma once

#include <string>
#include <vector>

#include "terracini/engine.hpp"

namespace terracini {

/// C(n+2, 2) - 1: the ambient dimension of the full quadric Veronese of P^n.
long long n_scorza(long long n);

/// Upper bound on the span dimension of a smooth non-degenerate variety in
/// terms of (n, k0, delta_1); attained exactly by the additive profiles.
long long phi_bound(long long n, long long k0, long long delta1);

/// The classical span bound for defective smooth varieties, with
/// r0 = n mod delta1. Exact integer arithmetic; delta1 >= 1 required.
long long zak_bound(long long n, long long delta1);

/// delta_k >= delta_{k-1} + k*delta_1 for all k (delta_0 = 0).
bool check_superadditivity(const std::vector<long long>& delta);

/// delta_k == delta_1 * k(k+1)/2 for all k; equivalently the drop sequence
/// is constant.
bool check_additivity(const std::vector<long long>& delta);

enum class Verdict {
    VeroneseFull,
    VeroneseProjectedOrBn,
    OutsideHypotheses,
    Not1Defective,
    BoundViolationSuspectInput,
};

std::string to_string(Verdict v);

struct Check {
    std::string name;
    long long lhs = 0;
    std::string rel;
    long long rhs = 0;
    bool passed = false;
};

struct ClassificationReport {
    DefectProfile profile;
    std::vector<Check> checks;
    Verdict verdict = Verdict::OutsideHypotheses;
    std::string notes;
};

/// Matches the numerical fingerprint of the profile against the
/// Veronese / projected-Veronese cases: 1-defectivity, the ambient-dimension
/// hypothesis, additivity plus (N, k0) in {(N(n), n), (N(n)-1, n-1)}, and
/// emptiness of the vertex of X and of every proper tangential image.
/// Smoothness is not verifiable in this model, so a verdict asserts
/// consistency with the case, not the case itself; the checks list carries
/// every inequality with both sides evaluated.
ClassificationReport classify(const VarietySpec& x, const SampleConfig& cfg);

enum class SurfaceKind { VeroneseSurface, ConeOverCurve, Inconclusive };

std::string to_string(SurfaceKind k);

/// Defective-surface dichotomy at the fingerprint level: a detected vertex
/// means cone over a curve; the exact (N=5, k0=2, zeta=(1,1)) profile with
/// empty vertex matches the Veronese surface; anything else is inconclusive.
/// Requires a 2-dimensional input.
SurfaceKind identify_defective_surface(const VarietySpec& x, const SampleConfig& cfg);

} // namespace terracini
