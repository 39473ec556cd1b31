#include <cctype>
#include <string>
#include <vector>

#include <json.hpp>

#include "terracini/engine.hpp"
#include "terracini/errors.hpp"
#include "terracini/varieties.hpp"

namespace terracini {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

size_t parse_count(const std::string& tok, const std::string& context) {
    if (tok.empty()) throw SpecError("expected a number in '" + context + "'");
    for (char c : tok) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw SpecError("expected a number, got '" + tok + "' in '" + context + "'");
    }
    return static_cast<size_t>(std::stoull(tok));
}

size_t parse_kv(const std::string& seg, const std::string& key, const std::string& context) {
    if (seg.rfind(key + "=", 0) != 0)
        throw SpecError("expected '" + key + "=<int>', got '" + seg + "' in '" + context + "'");
    return parse_count(seg.substr(key.size() + 1), context);
}

VarietySpec parse_json_head(const std::string& text, const PrimeField& F) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw SpecError(std::string("invalid JSON spec: ") + e.what());
    }
    if (!j.is_object() || !j.contains("groups") || !j.contains("coords"))
        throw SpecError("JSON spec needs 'groups' and 'coords'");

    std::vector<std::string> names;
    std::vector<std::vector<size_t>> groups;
    for (const auto& g : j.at("groups")) {
        std::vector<size_t> idx;
        for (const auto& nm : g) {
            if (!nm.is_string()) throw SpecError("group entries must be variable names");
            idx.push_back(names.size());
            names.push_back(nm.get<std::string>());
        }
        groups.push_back(std::move(idx));
    }
    const size_t nv = names.size();

    std::vector<Poly> coords;
    for (const auto& cj : j.at("coords")) {
        Poly f(nv);
        for (const auto& term : cj) {
            if (!term.is_array() || term.size() != 2)
                throw SpecError("each term must be [coefficient, exponents]");
            if (!term[0].is_string())
                throw SpecError("coefficients must be decimal integer strings");
            std::string cs = term[0].get<std::string>();
            bool negative = !cs.empty() && cs[0] == '-';
            size_t start = negative || (!cs.empty() && cs[0] == '+') ? 1 : 0;
            if (start == cs.size()) throw SpecError("empty coefficient string");
            uint64_t val = 0;
            for (size_t i = start; i < cs.size(); ++i) {
                if (!std::isdigit(static_cast<unsigned char>(cs[i])))
                    throw SpecError("bad coefficient '" + cs + "'");
                val = F.add(F.mul(val, 10), static_cast<uint64_t>(cs[i] - '0'));
            }
            if (negative) val = F.neg(val);
            Exponents e;
            for (const auto& x : term[1]) e.push_back(x.get<uint32_t>());
            if (e.size() != nv)
                throw SpecError("exponent vector length must equal the variable count");
            f.add_term(F, e, val);
        }
        coords.push_back(std::move(f));
    }
    auto map = PolyMap::create(F, names, groups, std::move(coords));

    // Canonical provenance: re-emit the normalized object compactly.
    nlohmann::json canon;
    canon["groups"] = j.at("groups");
    nlohmann::json coordsJson = nlohmann::json::array();
    for (const auto& f : map.coords()) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [e, c] : f.terms()) {
            terms.push_back({std::to_string(c), e});
        }
        coordsJson.push_back(terms);
    }
    canon["coords"] = coordsJson;
    std::string prov = canon.dump();
    return {std::move(map), "custom", prov};
}

VarietySpec parse_head(const std::string& head, const PrimeField& F) {
    if (!head.empty() && head[0] == '{') return parse_json_head(head, F);
    size_t colon = head.find(':');
    std::string family = colon == std::string::npos ? head : head.substr(0, colon);
    std::string args = colon == std::string::npos ? "" : head.substr(colon + 1);
    if (family == "veronese") {
        size_t comma = args.find(',');
        if (comma == std::string::npos)
            throw SpecError("veronese spec needs 'n=<int>,d=<int>', got '" + args + "'");
        size_t n = parse_kv(trim(args.substr(0, comma)), "n", head);
        size_t d = parse_kv(trim(args.substr(comma + 1)), "d", head);
        return veronese(n, d, F);
    }
    if (family == "segre") {
        size_t xpos = args.find('x');
        if (xpos == std::string::npos)
            throw SpecError("segre spec needs '<a>x<b>', got '" + args + "'");
        size_t a = parse_count(trim(args.substr(0, xpos)), head);
        size_t b = parse_count(trim(args.substr(xpos + 1)), head);
        return segre(a, b, F);
    }
    if (family == "pluecker") {
        size_t r = parse_kv(trim(args), "r", head);
        return pluecker_lines(r, F);
    }
    if (family == "scroll") {
        size_t comma = args.find(',');
        if (comma == std::string::npos)
            throw SpecError("scroll spec needs '<a>,<b>', got '" + args + "'");
        size_t a = parse_count(trim(args.substr(0, comma)), head);
        size_t b = parse_count(trim(args.substr(comma + 1)), head);
        return scroll(a, b, F);
    }
    throw SpecError("unknown family '" + family + "'");
}

} // namespace

VarietySpec parse_spec(const std::string& text, const SampleConfig& cfg) {
    std::string s = trim(text);
    if (s.empty()) throw SpecError("empty spec string");

    // Split off a JSON head before tokenizing on '|'.
    std::string head;
    std::string rest;
    if (s[0] == '{') {
        int depth = 0;
        size_t end = std::string::npos;
        for (size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '{') ++depth;
            if (s[i] == '}' && --depth == 0) {
                end = i;
                break;
            }
        }
        if (end == std::string::npos) throw SpecError("unterminated JSON spec");
        head = s.substr(0, end + 1);
        rest = trim(s.substr(end + 1));
        if (!rest.empty() && rest[0] != '|')
            throw SpecError("unexpected text after JSON spec: '" + rest + "'");
    } else {
        size_t bar = s.find('|');
        head = trim(s.substr(0, bar));
        rest = bar == std::string::npos ? "" : s.substr(bar);
    }

    PrimeField F = cfg.field();
    VarietySpec spec = parse_head(head, F);

    // Grammar invariant: constructors emit exactly the string they parse.
    size_t step = 0;
    while (!rest.empty()) {
        if (rest[0] != '|') throw SpecError("expected '|' before '" + rest + "'");
        rest = rest.substr(1);
        size_t bar = rest.find('|');
        std::string mod = trim(rest.substr(0, bar));
        rest = bar == std::string::npos ? "" : rest.substr(bar);

        SampleConfig stepCfg = cfg.with_seed(mix_seed(cfg.seed, kTagPipeline, step));
        if (mod == "cone") {
            spec = cone_over(spec);
        } else if (mod == "project:general") {
            spec = project_from_point(spec, ProjectionMode::General, stepCfg);
        } else if (mod == "project:inner") {
            spec = project_from_point(spec, ProjectionMode::Inner, stepCfg);
        } else if (mod == "reduce") {
            spec = reduce_to_span(spec, stepCfg);
            // reduce_to_span is the identity on non-degenerate input; keep the
            // modifier in the provenance so the string round-trips.
            if (!spec.provenance.ends_with("|reduce")) spec.provenance += "|reduce";
        } else if (mod == "point") {
            spec = point_variety(spec, stepCfg);
        } else if (mod.rfind("tproject:", 0) == 0) {
            size_t k = parse_count(mod.substr(9), mod);
            spec = tangential_projection(spec, k, stepCfg);
        } else {
            throw SpecError("unknown modifier '" + mod + "'");
        }
        ++step;
    }
    return spec;
}

} // namespace terracini
