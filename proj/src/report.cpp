#include "terracini/report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "terracini/errors.hpp"

namespace terracini {

bool ReportDocument::operator==(const ReportDocument& o) const {
    auto checksEqual = [&] {
        if (checks.size() != o.checks.size()) return false;
        for (size_t i = 0; i < checks.size(); ++i) {
            const Check& a = checks[i];
            const Check& b = o.checks[i];
            if (a.name != b.name || a.lhs != b.lhs || a.rel != b.rel || a.rhs != b.rhs ||
                a.passed != b.passed)
                return false;
        }
        return true;
    };
    return spec == o.spec && n == o.n && N == o.N && k0 == o.k0 && delta == o.delta &&
           zeta == o.zeta && fiberDims == o.fiberDims && verdict == o.verdict &&
           notes == o.notes && prime == o.prime && samples == o.samples && seed == o.seed &&
           version == o.version && checksEqual();
}

namespace {

void fill_profile(ReportDocument& doc, const DefectProfile& p, const SampleConfig& cfg) {
    doc.n = p.n;
    doc.N = p.N;
    doc.k0 = p.k0;
    doc.delta = p.delta;
    doc.zeta = p.zeta;
    doc.fiberDims = p.fiberDims;
    doc.prime = std::to_string(cfg.prime);
    doc.samples = cfg.samples;
    doc.seed = std::to_string(cfg.seed);
    doc.version = kVersion;
    if (p.reducedFromDegenerate)
        doc.notes += "input was degenerate and has been reduced to its span; ";
}

Check bound_check(std::string name, long long lhs, std::string rel, long long rhs) {
    bool passed = rel == "<=" ? lhs <= rhs : (rel == ">=" ? lhs >= rhs : lhs == rhs);
    return {std::move(name), lhs, std::move(rel), rhs, passed};
}

} // namespace

ReportDocument make_profile_document(const VarietySpec& x, const DefectProfile& p,
                                     const SampleConfig& cfg) {
    ReportDocument doc;
    doc.spec = x.provenance;
    fill_profile(doc, p, cfg);
    long long d1 = p.k0 >= 1 ? p.delta[0] : 0;
    if (d1 >= 1) doc.checks.push_back(bound_check("N_le_zak", p.N, "<=", zak_bound(p.n, d1)));
    if (p.k0 >= 1)
        doc.checks.push_back(bound_check("N_le_phi", p.N, "<=", phi_bound(p.n, p.k0, d1)));
    long long additViol = 0;
    long long superViol = 0;
    for (size_t k = 0; k < p.delta.size(); ++k) {
        long long kk = static_cast<long long>(k + 1);
        long long prev = k >= 1 ? p.delta[k - 1] : 0;
        if (p.delta[k] != d1 * kk * (kk + 1) / 2) ++additViol;
        if (p.delta[k] < prev + kk * d1) ++superViol;
    }
    doc.checks.push_back(bound_check("additivity_violations", additViol, "==", 0));
    doc.checks.push_back(bound_check("superadditivity_violations", superViol, "==", 0));
    return doc;
}

ReportDocument make_classification_document(const VarietySpec& x, const ClassificationReport& r,
                                            const SampleConfig& cfg) {
    ReportDocument doc;
    doc.spec = x.provenance;
    fill_profile(doc, r.profile, cfg);
    doc.checks = r.checks;
    doc.verdict = to_string(r.verdict);
    doc.notes += r.notes;
    return doc;
}

std::string emit_text(const ReportDocument& doc) {
    std::ostringstream out;
    out << "spec: " << doc.spec << "\n";
    out << "n = " << doc.n << "   N = " << doc.N << "   k0 = " << doc.k0 << "\n";
    if (doc.k0 == 0) {
        out << "variety is linear; k0=0\n";
    } else {
        out << "   k   dim S^k   delta_k   zeta_k   fiber_k\n";
        for (size_t i = 0; i < doc.delta.size(); ++i) {
            long long k = static_cast<long long>(i + 1);
            long long dimSk = (k + 1) * doc.n + k - doc.delta[i];
            out << std::setw(4) << k << std::setw(10) << dimSk << std::setw(10) << doc.delta[i]
                << std::setw(9) << doc.zeta[i] << std::setw(10) << doc.fiberDims[i] << "\n";
        }
    }
    bool additive = true;
    for (const auto& c : doc.checks) {
        out << "  " << c.name << ": " << c.lhs << " " << c.rel << " " << c.rhs << "  ["
            << (c.passed ? "pass" : "fail") << "]\n";
        if (c.name == "additivity_violations") additive = c.passed;
    }
    out << "additivity: " << (additive ? "true" : "false") << "\n";
    if (!doc.verdict.empty()) out << "verdict: " << doc.verdict << "\n";
    if (!doc.notes.empty()) out << "notes: " << doc.notes << "\n";
    out << "meta: prime=" << doc.prime << " samples=" << doc.samples << " seed=" << doc.seed
        << " version=" << doc.version << "\n";
    return out.str();
}

std::string emit_json(const ReportDocument& doc) {
    nlohmann::json j;
    j["spec"] = doc.spec;
    j["n"] = doc.n;
    j["N"] = doc.N;
    j["k0"] = doc.k0;
    j["delta"] = doc.delta;
    j["zeta"] = doc.zeta;
    j["fiberDims"] = doc.fiberDims;
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : doc.checks) {
        nlohmann::json cj;
        cj["name"] = c.name;
        cj["lhs"] = c.lhs;
        cj["rel"] = c.rel;
        cj["rhs"] = c.rhs;
        cj["passed"] = c.passed;
        checks.push_back(cj);
    }
    j["checks"] = checks;
    j["verdict"] = doc.verdict;
    j["notes"] = doc.notes;
    j["meta"] = {{"prime", doc.prime},
                 {"samples", doc.samples},
                 {"seed", doc.seed},
                 {"version", doc.version}};
    return j.dump(2) + "\n";
}

ReportDocument parse_json_document(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw SpecError(std::string("invalid report JSON: ") + e.what());
    }
    ReportDocument doc;
    doc.spec = j.at("spec").get<std::string>();
    doc.n = j.at("n").get<long long>();
    doc.N = j.at("N").get<long long>();
    doc.k0 = j.at("k0").get<long long>();
    doc.delta = j.at("delta").get<std::vector<long long>>();
    doc.zeta = j.at("zeta").get<std::vector<long long>>();
    doc.fiberDims = j.at("fiberDims").get<std::vector<long long>>();
    for (const auto& cj : j.at("checks")) {
        Check c;
        c.name = cj.at("name").get<std::string>();
        c.lhs = cj.at("lhs").get<long long>();
        c.rel = cj.at("rel").get<std::string>();
        c.rhs = cj.at("rhs").get<long long>();
        c.passed = cj.at("passed").get<bool>();
        doc.checks.push_back(std::move(c));
    }
    doc.verdict = j.at("verdict").get<std::string>();
    doc.notes = j.value("notes", std::string());
    doc.prime = j.at("meta").at("prime").get<std::string>();
    doc.samples = j.at("meta").at("samples").get<int>();
    doc.seed = j.at("meta").at("seed").get<std::string>();
    doc.version = j.at("meta").at("version").get<std::string>();
    return doc;
}

} // namespace terracini
