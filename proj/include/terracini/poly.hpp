#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "terracini/field.hpp"
#include "terracini/matrix.hpp"

namespace terracini {

using Exponents = std::vector<uint32_t>;

/// Sparse multivariate polynomial over a prime field. Terms are kept in a
/// canonical ordered map keyed by exponent vector; zero coefficients are
/// never stored. Coefficient arithmetic is taken mod the field passed to
/// each operation, so a Poly is only meaningful over one fixed prime.
class Poly {
public:
    explicit Poly(size_t varCount) : vars_(varCount) {}

    static Poly constant(size_t varCount, uint64_t c, const PrimeField& F);
    static Poly monomial(size_t varCount, Exponents e, uint64_t c, const PrimeField& F);

    size_t var_count() const { return vars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Exponents, uint64_t>& terms() const { return terms_; }

    void add_term(const PrimeField& F, const Exponents& e, uint64_t c);

    uint64_t evaluate(const PrimeField& F, std::span<const uint64_t> point) const;
    Poly derivative(const PrimeField& F, size_t var) const;
    Poly plus(const PrimeField& F, const Poly& o) const;
    Poly times(const PrimeField& F, const Poly& o) const;
    Poly scaled(const PrimeField& F, uint64_t c) const;

    /// Substitute subs[i] for variable i; all subs share a new variable set.
    Poly compose(const PrimeField& F, const std::vector<Poly>& subs) const;

    /// Common degree of all terms in the given variable subset, or nullopt
    /// if terms disagree. Zero polynomial reports nullopt; callers treat it
    /// as compatible with any degree.
    std::optional<uint32_t> homogeneous_degree(std::span<const size_t> vars) const;

    bool operator==(const Poly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

private:
    size_t vars_;
    std::map<Exponents, uint64_t> terms_;
};

/// An ordered tuple of polynomials sharing one variable set: the homogeneous
/// coordinates of a parameterized affine cone. At least one variable group
/// must be a "scaling group" (every coordinate homogeneous of one common
/// positive degree in it), which guarantees the image is a cone over a
/// projective variety. Validated at construction and after every transform.
class PolyMap {
public:
    static PolyMap create(PrimeField field,
                          std::vector<std::string> varNames,
                          std::vector<std::vector<size_t>> groups,
                          std::vector<Poly> coords);

    const PrimeField& field() const { return field_; }
    size_t var_count() const { return varNames_.size(); }
    size_t coord_count() const { return coords_.size(); }
    const std::vector<std::string>& var_names() const { return varNames_; }
    const std::vector<std::vector<size_t>>& groups() const { return groups_; }
    const std::vector<Poly>& coords() const { return coords_; }
    size_t scaling_group() const { return scalingGroup_; }
    uint32_t scaling_degree() const { return scalingDegree_; }

    std::vector<uint64_t> values_at(std::span<const uint64_t> point) const;

    /// One row per variable, one column per coordinate; entry (i, j) is
    /// d coords[j] / d var_i at the point. The row space is the affine cone
    /// over the projective tangent space at the image point.
    Matrix jacobian_at(std::span<const uint64_t> point) const;

    /// Coordinates become t * coords: the computational meaning of a linear
    /// projection (or any linear re-coordinatization) of the ambient space.
    PolyMap linear_transform(const Matrix& t) const;

private:
    PolyMap(PrimeField f) : field_(f) {}
    void validate();

    PrimeField field_;
    std::vector<std::string> varNames_;
    std::vector<std::vector<size_t>> groups_;
    std::vector<Poly> coords_;
    size_t scalingGroup_ = 0;
    uint32_t scalingDegree_ = 0;
};

} // namespace terracini
