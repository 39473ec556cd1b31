#pragma once

#include <string>
#include <vector>

#include "terracini/classifier.hpp"

namespace terracini {

/// Everything needed to reproduce a reported analysis bit-for-bit: the spec
/// provenance, the profile, the evaluated checks, the verdict (empty when
/// only a profile was requested), and the toolchain metadata.
struct ReportDocument {
    std::string spec;
    long long n = 0;
    long long N = 0;
    long long k0 = 0;
    std::vector<long long> delta;
    std::vector<long long> zeta;
    std::vector<long long> fiberDims;
    std::vector<Check> checks;
    std::string verdict;
    std::string notes;
    std::string prime;
    int samples = 0;
    std::string seed;
    std::string version;

    bool operator==(const ReportDocument& o) const;
};

/// Profile-only document; bound checks are still evaluated for the footer.
ReportDocument make_profile_document(const VarietySpec& x, const DefectProfile& p,
                                     const SampleConfig& cfg);

ReportDocument make_classification_document(const VarietySpec& x, const ClassificationReport& r,
                                            const SampleConfig& cfg);

/// Fixed-width table: one row per k with dim S^k X, delta_k, zeta_k and the
/// fiber dimension; footer with bounds, additivity flag and verdict.
std::string emit_text(const ReportDocument& doc);

/// Canonical JSON: sorted keys, two-space indent, LF endings, integers as
/// numbers, provenance and seeds as strings. Byte-identical across runs with
/// identical (spec, prime, samples, seed).
std::string emit_json(const ReportDocument& doc);

ReportDocument parse_json_document(const std::string& text);

} // namespace terracini
