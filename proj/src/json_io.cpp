#include "hankel/json_io.hpp"

namespace hankel {

namespace {

Rat rat_field(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_string())
        throw ParseError(std::string("expected string field '") + key + "'");
    return Rat::parse(j[key].get<std::string>());
}

} // namespace

json spec_to_json(const RecurrenceSpec& spec) {
    return json{{"alpha", spec.alpha.str()},
                {"beta", spec.beta.str()},
                {"gamma", spec.gamma.str()},
                {"a0", spec.a0.str()}};
}

RecurrenceSpec spec_from_json(const json& j) {
    return make_spec(rat_field(j, "alpha"), rat_field(j, "beta"), rat_field(j, "gamma"),
                     rat_field(j, "a0"));
}

json matrix_to_json(const HankelMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.n; ++i) {
        json row = json::array();
        for (int j = 0; j < m.n; ++j) row.push_back(m.entries.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return json{{"n", m.n}, {"k", m.k}, {"rows", std::move(rows)}};
}

HankelMatrix matrix_from_json(const json& j) {
    if (!j.contains("n") || !j.contains("k") || !j.contains("rows"))
        throw ParseError("matrix JSON needs fields n, k, rows");
    const int n = j["n"].get<int>();
    const int k = j["k"].get<int>();
    if (n < 1 || k < 0) throw ParseError("matrix JSON needs n >= 1, k >= 0");
    const json& rows = j["rows"];
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
        throw ParseError("matrix JSON rows must be an n-element array");
    HankelMatrix m{n, k, SquareMatrix(n)};
    for (int i = 0; i < n; ++i) {
        if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != n)
            throw ParseError("matrix JSON row " + std::to_string(i) + " must have n entries");
        for (int c = 0; c < n; ++c) m.entries.at(i, c) = Rat::parse(rows[i][c].get<std::string>());
    }
    return m;
}

json window_to_json(const SequenceWindow& w) {
    json arr = json::array();
    for (const Rat& t : w.terms) arr.push_back(t.str());
    return arr;
}

SequenceWindow window_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("term file must be a JSON array of \"p/q\" strings");
    SequenceWindow w;
    w.origin = 0;
    for (const auto& el : j) {
        if (!el.is_string()) throw ParseError("term file entries must be strings");
        w.terms.push_back(Rat::parse(el.get<std::string>()));
    }
    return w;
}

json transform_to_json(const TransformValue& tv) {
    return json{{"n", tv.n}, {"k", tv.k}, {"value", tv.value.str()}, {"method", method_name(tv.method)}};
}

json factorization_to_json(const Factorization& f) {
    json arr = json::array();
    for (const auto& [p, e] : f.factors) arr.push_back(json::array({int_str(p), e}));
    return arr;
}

json report_to_json(const FactorizationReport& r) {
    json j{{"n", r.n},
           {"k", r.k},
           {"value", r.value.str()},
           {"zero", r.zero},
           {"smooth", r.smooth},
           {"complete", r.complete},
           {"largest_prime", int_str(r.largest_prime)}};
    if (!r.zero) {
        j["num_factors"] = factorization_to_json(r.num_factors);
        j["den_factors"] = factorization_to_json(r.den_factors);
        if (!r.num_factors.complete() || !r.den_factors.complete()) {
            json u = json::array();
            for (const Int& c : r.num_factors.unfactored) u.push_back(int_str(c));
            for (const Int& c : r.den_factors.unfactored) u.push_back(int_str(c));
            j["unfactored"] = std::move(u);
        }
    }
    return j;
}

json verdict_to_json(const DetectorVerdict& v) {
    json reports = json::array();
    for (const auto& r : v.reports) reports.push_back(report_to_json(r));
    return json{{"verdict", verdict_name(v.verdict)},
                {"bound", int_str(v.bound_used)},
                {"reports", std::move(reports)}};
}

json verify_report_to_json(const VerifyReport& r) {
    json mm = json::array();
    for (const auto& m : r.mismatches)
        mm.push_back(json{{"n", m.n}, {"k", m.k}, {"detail", m.detail}});
    return json{{"entry", r.name},
                {"n_max", r.n_max},
                {"k_max", r.k_max},
                {"cells", r.cells},
                {"ok", r.ok()},
                {"mismatches", std::move(mm)}};
}

} // namespace hankel
