#include "terracini/poly.hpp"

#include <algorithm>

#include "terracini/errors.hpp"

namespace terracini {

Poly Poly::constant(size_t varCount, uint64_t c, const PrimeField& F) {
    Poly p(varCount);
    p.add_term(F, Exponents(varCount, 0), c);
    return p;
}

Poly Poly::monomial(size_t varCount, Exponents e, uint64_t c, const PrimeField& F) {
    if (e.size() != varCount) throw SpecError("monomial: exponent length mismatch");
    Poly p(varCount);
    p.add_term(F, e, c);
    return p;
}

void Poly::add_term(const PrimeField& F, const Exponents& e, uint64_t c) {
    if (e.size() != vars_) throw SpecError("add_term: exponent length mismatch");
    c %= F.modulus();
    if (!c) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second = F.add(it->second, c);
    if (it->second == 0) terms_.erase(it);
}

uint64_t Poly::evaluate(const PrimeField& F, std::span<const uint64_t> point) const {
    if (point.size() != vars_) throw SpecError("evaluate: point length mismatch");
    uint64_t total = 0;
    for (const auto& [e, c] : terms_) {
        uint64_t v = c;
        for (size_t i = 0; i < vars_; ++i) {
            if (e[i]) v = F.mul(v, F.pow(point[i], e[i]));
        }
        total = F.add(total, v);
    }
    return total;
}

Poly Poly::derivative(const PrimeField& F, size_t var) const {
    if (var >= vars_) throw SpecError("derivative: variable out of range");
    Poly out(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents e2 = e;
        --e2[var];
        out.add_term(F, e2, F.mul(c, e[var] % F.modulus()));
    }
    return out;
}

Poly Poly::plus(const PrimeField& F, const Poly& o) const {
    if (vars_ != o.vars_) throw SpecError("plus: variable count mismatch");
    Poly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(F, e, c);
    return out;
}

Poly Poly::times(const PrimeField& F, const Poly& o) const {
    if (vars_ != o.vars_) throw SpecError("times: variable count mismatch");
    Poly out(vars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            Exponents e(vars_);
            for (size_t i = 0; i < vars_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(F, e, F.mul(ca, cb));
        }
    }
    return out;
}

Poly Poly::scaled(const PrimeField& F, uint64_t c) const {
    Poly out(vars_);
    for (const auto& [e, v] : terms_) out.add_term(F, e, F.mul(v, c));
    return out;
}

Poly Poly::compose(const PrimeField& F, const std::vector<Poly>& subs) const {
    if (subs.size() != vars_) throw SpecError("compose: substitution count mismatch");
    size_t outVars = subs.empty() ? 0 : subs[0].var_count();
    for (const auto& s : subs) {
        if (s.var_count() != outVars) throw SpecError("compose: substitutions disagree on variables");
    }
    Poly out(outVars);
    for (const auto& [e, c] : terms_) {
        Poly prod = Poly::constant(outVars, c, F);
        for (size_t i = 0; i < vars_; ++i) {
            for (uint32_t t = 0; t < e[i]; ++t) prod = prod.times(F, subs[i]);
        }
        out = out.plus(F, prod);
    }
    return out;
}

std::optional<uint32_t> Poly::homogeneous_degree(std::span<const size_t> vars) const {
    std::optional<uint32_t> deg;
    for (const auto& [e, c] : terms_) {
        uint32_t d = 0;
        for (size_t i : vars) d += e[i];
        if (!deg) {
            deg = d;
        } else if (*deg != d) {
            return std::nullopt;
        }
    }
    return deg;
}

PolyMap PolyMap::create(PrimeField field,
                        std::vector<std::string> varNames,
                        std::vector<std::vector<size_t>> groups,
                        std::vector<Poly> coords) {
    PolyMap m(field);
    m.varNames_ = std::move(varNames);
    m.groups_ = std::move(groups);
    m.coords_ = std::move(coords);
    m.validate();
    return m;
}

void PolyMap::validate() {
    const size_t nv = varNames_.size();
    if (coords_.empty()) throw SpecError("polynomial map needs at least one coordinate");
    for (const auto& c : coords_) {
        if (c.var_count() != nv) throw SpecError("coordinate uses undeclared variables");
    }
    std::vector<bool> seen(nv, false);
    for (const auto& g : groups_) {
        if (g.empty()) throw SpecError("empty variable group");
        for (size_t i : g) {
            if (i >= nv || seen[i]) throw SpecError("variable groups must partition the variables");
            seen[i] = true;
        }
    }
    for (bool s : seen) {
        if (!s) throw SpecError("variable groups must partition the variables");
    }

    bool anyNonzero = false;
    for (const auto& c : coords_) anyNonzero = anyNonzero || !c.is_zero();
    if (!anyNonzero) throw SpecError("all coordinates are zero");

    for (size_t gi = 0; gi < groups_.size(); ++gi) {
        std::optional<uint32_t> deg;
        bool ok = true;
        for (const auto& c : coords_) {
            if (c.is_zero()) continue;
            auto d = c.homogeneous_degree(groups_[gi]);
            if (!d || (deg && *deg != *d)) {
                ok = false;
                break;
            }
            deg = d;
        }
        if (ok && deg && *deg >= 1) {
            scalingGroup_ = gi;
            scalingDegree_ = *deg;
            return;
        }
    }
    throw SpecError("no scaling group: coordinates are not homogeneous of a common positive degree in any variable group");
}

std::vector<uint64_t> PolyMap::values_at(std::span<const uint64_t> point) const {
    std::vector<uint64_t> out;
    out.reserve(coords_.size());
    for (const auto& c : coords_) out.push_back(c.evaluate(field_, point));
    return out;
}

Matrix PolyMap::jacobian_at(std::span<const uint64_t> point) const {
    if (point.size() != var_count()) throw SpecError("jacobian_at: point length mismatch");
    Matrix J(field_, var_count(), coord_count());
    for (size_t j = 0; j < coord_count(); ++j) {
        for (size_t i = 0; i < var_count(); ++i) {
            J.at(i, j) = coords_[j].derivative(field_, i).evaluate(field_, point);
        }
    }
    return J;
}

PolyMap PolyMap::linear_transform(const Matrix& t) const {
    if (t.cols() != coord_count()) throw SpecError("linear_transform: matrix columns must match coordinate count");
    if (!(t.field() == field_)) throw SpecError("linear_transform: field mismatch");
    std::vector<Poly> out;
    out.reserve(t.rows());
    for (size_t i = 0; i < t.rows(); ++i) {
        Poly c(var_count());
        for (size_t j = 0; j < coord_count(); ++j) {
            uint64_t v = t.at(i, j);
            if (!v) continue;
            c = c.plus(field_, coords_[j].scaled(field_, v));
        }
        out.push_back(std::move(c));
    }
    return create(field_, varNames_, groups_, std::move(out));
}

} // namespace terracini
