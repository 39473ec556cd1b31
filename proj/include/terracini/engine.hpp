#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "terracini/matrix.hpp"
#include "terracini/sampling.hpp"
#include "terracini/varieties.hpp"

namespace terracini {

/// Stacked Jacobian rows at one or more sampled parameter points. The row
/// space is the affine cone over the span of the tangent spaces at the
/// sampled points, which by Terracini is the tangent space to the secant
/// variety at a general point of the spanned secant plane.
class TangentFrame {
public:
    explicit TangentFrame(const VarietySpec& x)
        : map_(&x.map), matrix_(x.map.field(), 0, x.map.coord_count()) {}

    void append_point(std::vector<uint64_t> point);

    const std::vector<std::vector<uint64_t>>& points() const { return points_; }
    const Matrix& matrix() const { return matrix_; }
    size_t rank() const { return matrix_.rank(); }

private:
    const PolyMap* map_;
    std::vector<std::vector<uint64_t>> points_;
    Matrix matrix_;
};

/// The numerical fingerprint of a variety's secant geometry. delta is the
/// defective sequence, zeta its second differences (the drop sequence),
/// fiberDims the first differences (which also equal the entry-locus
/// dimensions at each level). The confidence triple reproduces every number.
struct DefectProfile {
    long long n = 0;
    long long N = 0;
    long long k0 = 0;
    std::vector<long long> secantDims;     // dim S^k X for k = 1..k0
    std::vector<long long> delta;          // delta_1..delta_k0
    std::vector<long long> zeta;           // second differences of delta
    std::vector<long long> fiberDims;      // delta_k - delta_{k-1}
    std::vector<long long> entryLocusDims; // same values
    bool reducedFromDegenerate = false;
    uint64_t prime = 0;
    int samples = 0;
    uint64_t seed = 0;
};

/// dim S^k X via Terracini: rank of the tangent frame on k+1 random points,
/// minus 1, maximized over cfg.samples repetitions. k = 0 gives dim X.
size_t secant_dimension(const VarietySpec& x, size_t k, const SampleConfig& cfg);

/// Walks k = 1, 2, ... until dim S^k X reaches the span dimension, filling
/// delta, zeta and the fiber dimensions. Degenerate input is reduced to its
/// span first and flagged. Aborts with a diagnostic if k exceeds n+1.
DefectProfile defect_profile(const VarietySpec& x, const SampleConfig& cfg);

/// Projection of X from the span of tangent spaces at k random points.
VarietySpec tangential_projection(const VarietySpec& x, size_t k, const SampleConfig& cfg);

/// Coranks of the successive single-step tangential projections, computed
/// directly on the chain of images; stops when the image is linear.
std::vector<long long> drop_sequence_direct(const VarietySpec& x, const SampleConfig& cfg);

/// dim S(A, B) via stacked Jacobians at one random point of each.
size_t join_dimension(const VarietySpec& a, const VarietySpec& b, const SampleConfig& cfg);

/// dim T(X, X): generic Jacobian rank of the auxiliary parameterization
/// (s, v) -> sum_i v_i df/dt_i, minus 1.
size_t tangent_variety_dimension(const VarietySpec& x, const SampleConfig& cfg);

/// Polynomial substitution u -> t defining a subvariety Y of X by composing
/// the parameterization of X with these polynomials.
struct ParamSubstitution {
    std::vector<std::string> varNames;
    std::vector<std::vector<size_t>> groups;
    std::vector<Poly> polys; // one per parameter of X, over the u-variables

    static ParamSubstitution identity(const VarietySpec& x);
    /// Y = one general point of X; requires all coordinates of X to share
    /// one total degree so the substitution l -> l*a respects the grading.
    static ParamSubstitution general_point(const VarietySpec& x, const SampleConfig& cfg);
};

struct RelativeDims {
    long long dimT = 0;
    long long dimS = 0;
    char whichCase = '?'; // 'a' or 'b'
};

/// Dimensions of the relative tangent and secant varieties T(Y,X), S(Y,X)
/// and which branch of the dichotomy they land in: (a) dimT = dimY + dimX =
/// dimS - 1, or (b) dimT = dimS.
RelativeDims relative_dimensions(const VarietySpec& x, const ParamSubstitution& h,
                                 const SampleConfig& cfg);

/// Projective dimension of the stable intersection of tangent spaces at
/// fresh random points (the vertex when X is a cone); -1 when empty.
long long vertex_dimension(const VarietySpec& x, const SampleConfig& cfg);

/// Independent route to dim S^k X: the generic Jacobian rank of the explicit
/// join parameterization (s^0..s^k, l_0..l_k) -> sum_i l_i f(s^i), minus 1.
/// Shares no code path with the tangent-frame computation above.
size_t explicit_join_secant_dimension(const VarietySpec& x, size_t k, const SampleConfig& cfg);

} // namespace terracini
