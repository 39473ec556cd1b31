#pragma once

#include <string>

#include "terracini/poly.hpp"
#include "terracini/sampling.hpp"

namespace terracini {

/// A multigraded polynomial parameterization of the affine cone over a
/// projective variety, with a human-readable name and a provenance string in
/// the spec grammar (so construction history survives serialization).
struct VarietySpec {
    PolyMap map;
    std::string name;
    std::string provenance;
};

/// All monomials of degree d in n+1 variables, lexicographically decreasing.
VarietySpec veronese(size_t n, size_t d, const PrimeField& F);

/// Products x_i * y_j of two groups of sizes a+1 and b+1.
VarietySpec segre(size_t a, size_t b, const PrimeField& F);

/// 2x2 minors of a 2x(r+1) matrix of variables: lines in P^r.
VarietySpec pluecker_lines(size_t r, const PrimeField& F);

/// Rational normal scroll S_{a,b}: (s^a u, ..., t^a u, s^b v, ..., t^b v).
VarietySpec scroll(size_t a, size_t b, const PrimeField& F);

/// Projective cone: coordinates (l*f_0, ..., l*f_N, m) with a fresh scaling
/// group {l, m}; the vertex is the new coordinate point.
VarietySpec cone_over(const VarietySpec& x);

enum class ProjectionMode { General, Inner };

/// Linear projection from one point: general (random ambient point) or inner
/// (image of a random parameter point, i.e. a point of X itself).
VarietySpec project_from_point(const VarietySpec& x, ProjectionMode mode, const SampleConfig& cfg);

/// dim of the linear span of X, computed as the rank of coordinate values at
/// max(N+2, 2*coords) random points, minus 1.
size_t ambient_span_dim(const VarietySpec& x, const SampleConfig& cfg);

/// Composes with a coordinate selection onto a basis of the span when the
/// input is degenerate; identity otherwise.
VarietySpec reduce_to_span(const VarietySpec& x, const SampleConfig& cfg);

/// Generic Jacobian rank over sampled points, minus 1.
size_t projective_dimension(const VarietySpec& x, const SampleConfig& cfg);

/// Constant parameterization l -> l*c of the line over one point of X
/// (c = image of a random parameter point).
VarietySpec point_variety(const VarietySpec& x, const SampleConfig& cfg);

/// Parses the spec grammar: a family head (veronese:n=3,d=2 | segre:2x3 |
/// pluecker:r=5 | scroll:1,4 | explicit JSON object) followed by pipeline
/// modifiers |cone |project:general |project:inner |reduce |tproject:<k>
/// |point applied left to right.
VarietySpec parse_spec(const std::string& text, const SampleConfig& cfg);

} // namespace terracini
