#include "shellfill/json_io.hpp"

#include <sstream>

#include <json.hpp>

namespace shellfill {

using nlohmann::json;

namespace {

std::string subset_key(const SupportSet& u) {
    std::ostringstream os;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (i) os << ",";
        os << u[i];
    }
    return os.str();
}

SupportSet parse_subset_key(const std::string& key) {
    SupportSet out;
    std::istringstream is(key);
    std::string part;
    while (std::getline(is, part, ','))
        try {
            out.push_back(std::stoi(part));
        } catch (const std::exception&) {
            fail(ErrorCode::ParseError, "bad subset key: " + key);
        }
    if (!is_sorted_set(out)) fail(ErrorCode::ParseError, "subset key not sorted: " + key);
    return out;
}

json simplex_to_value(const FunctorSimplex& f) {
    json levels = json::object();
    for (const auto& [u, tuple] : f.levels()) {
        json points = json::array();
        for (const auto& p : tuple) points.push_back(p.value().str());
        levels[subset_key(u)] = points;
    }
    return json{{"support", f.support()}, {"levels", levels}};
}

FunctorSimplex simplex_from_value(const json& value, const ModelParams& params) {
    if (!value.is_object() || !value.contains("support") || !value.contains("levels"))
        fail(ErrorCode::ParseError, "simplex must have support and levels");
    SupportSet support;
    for (const auto& v : value["support"]) {
        if (!v.is_number_integer()) fail(ErrorCode::ParseError, "support entries are integers");
        support.push_back(v.get<int>());
    }
    FunctorSimplex::LevelMap levels;
    for (const auto& [key, tuple] : value["levels"].items()) {
        PointTuple points;
        if (!tuple.is_array()) fail(ErrorCode::ParseError, "level must be an array");
        for (const auto& p : tuple) {
            if (!p.is_string()) fail(ErrorCode::ParseError, "points are p/q strings");
            Rational r = Rational::parse(p.get<std::string>());
            if (r < Rational(0) || !(r < Rational(1)))
                fail(ErrorCode::ParseError, "points lie in [0, 1)");
            points.push_back(CirclePoint(r));
        }
        levels[parse_subset_key(key)] = std::move(points);
    }
    return FunctorSimplex::make(std::move(support), std::move(levels), params);
}

json chain_to_value(const FChain& c) {
    json terms = json::array();
    for (const auto& [f, coeff] : c.terms())
        terms.push_back(json{{"coeff", coeff}, {"simplex", simplex_to_value(f)}});
    return json{{"terms", terms}};
}

json parse_document(const std::string& text) {
    json value = json::parse(text, nullptr, false);
    if (value.is_discarded()) fail(ErrorCode::ParseError, "malformed JSON");
    return value;
}

} // namespace

std::string simplex_to_json(const FunctorSimplex& f) { return simplex_to_value(f).dump(); }

FunctorSimplex simplex_from_json(const std::string& text, const ModelParams& params) {
    return simplex_from_value(parse_document(text), params);
}

std::string chain_to_json(const FChain& c) { return chain_to_value(c).dump(); }

FChain chain_from_json(const std::string& text, const ModelParams& params) {
    json value = parse_document(text);
    if (!value.is_object() || !value.contains("terms") || !value["terms"].is_array())
        fail(ErrorCode::ParseError, "chain must have a terms array");
    FChain out;
    for (const auto& term : value["terms"]) {
        if (!term.is_object() || !term.contains("coeff") || !term.contains("simplex") ||
            !term["coeff"].is_number_integer())
            fail(ErrorCode::ParseError, "each term needs coeff and simplex");
        long long coeff = term["coeff"].get<long long>();
        if (coeff == 0) fail(ErrorCode::ParseError, "standard form has no zero coefficients");
        FunctorSimplex f = simplex_from_value(term["simplex"], params);
        if (out.coeff(f) != 0) fail(ErrorCode::ParseError, "standard form has distinct simplices");
        out.add(coeff, f);
    }
    return out;
}

std::string fill_report_to_json(const FillReport& report, int n) {
    const char* method = report.method == FillMethod::Construction ? "construction"
                         : report.method == FillMethod::Oracle     ? "oracle"
                                                                   : "lascar";
    json value{{"n", n},
               {"length", report.length},
               {"method", method},
               {"boundary_ok", report.boundary_ok},
               {"chain", chain_to_value(report.chain)}};
    return value.dump();
}

std::string walk_sequence_to_json(const ChainWalk& walk) {
    json seq = json::array();
    for (int k : walk.sequence) seq.push_back(k);
    return seq.dump();
}

std::string trace_entry_to_json(const TraceEntry& entry) {
    return json{{"op", entry.op},
                {"site", entry.site},
                {"before", entry.before_hash},
                {"after", entry.after_hash}}
        .dump();
}

} // namespace shellfill
