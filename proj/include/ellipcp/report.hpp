#pragma once

// Assembled pipeline reports and their JSON form (schema "ellipcp/1").
// The JSON is deterministic: object keys are sorted, all dimensions are
// plain integers, divisor keys are canonical primitive pairs.

#include "ellcoh.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace ellipcp {

inline constexpr const char* kJsonSchema = "ellipcp/1";

/// One pairwise intersection number re-derived by the torsion-grid oracle.
struct OracleCheck {
    Character v;
    Character w;
    Int count = 0;
    Int det_squared = 0;
    bool ok = false;

    friend bool operator==(const OracleCheck&, const OracleCheck&) = default;
};

/// Everything the cp/sphere pipelines produce for one input.
struct Report {
    std::string command;  // "cp" or "sphere"
    std::string input;
    Divisor divisor;
    std::vector<std::vector<Int>> intersection_matrix;
    Int self_intersection = 0;
    Int euler_characteristic = 0;
    bool ample = false;
    CohDims coh_minus;                 // H^*(X, O(-D))
    CohDims coh_structure;             // H^*(X, O_X)
    std::optional<LesTable> les;       // cp only
    std::optional<GradedDims> unreduced;
    std::optional<GradedDims> reduced;
    std::optional<GradedDims> sphere_value;
    std::optional<Int> d_value;        // closed-form d, cp only
    std::vector<OracleCheck> oracle_checks;

    friend bool operator==(const Report&, const Report&) = default;
};

namespace detail {

inline std::vector<std::vector<Int>> intersection_matrix_of(const Divisor& d) {
    std::vector<Character> dirs;
    for (const auto& [v, m] : d.coefficients()) dirs.push_back(v);
    std::vector<std::vector<Int>> matrix(dirs.size(), std::vector<Int>(dirs.size(), 0));
    for (std::size_t i = 0; i < dirs.size(); ++i)
        for (std::size_t j = 0; j < dirs.size(); ++j) {
            Int det = det2(dirs[i], dirs[j]);
            matrix[i][j] = det * det;
        }
    return matrix;
}

inline std::vector<OracleCheck> run_oracle_checks(const Divisor& d) {
    std::vector<Character> dirs;
    for (const auto& [v, m] : d.coefficients()) dirs.push_back(v);
    std::vector<OracleCheck> checks;
    for (std::size_t i = 0; i < dirs.size(); ++i)
        for (std::size_t j = i + 1; j < dirs.size(); ++j) {
            Int det = det2(dirs[i], dirs[j]);
            Int count = intersection_count_oracle(dirs[i], dirs[j]);
            checks.push_back({dirs[i], dirs[j], count, det * det, count == det * det});
        }
    return checks;
}

inline void fill_divisor_facts(Report& r, const Divisor& d) {
    r.divisor = d;
    r.intersection_matrix = intersection_matrix_of(d);
    r.self_intersection = pairing(d, d);
    r.euler_characteristic = euler_char(d);
    r.ample = is_ample(d);
    r.coh_minus = coh_dims(d, BundleSign::minus);
    r.coh_structure = coh_dims(Divisor{}, BundleSign::plus);
}

}  // namespace detail

/// Full cp pipeline: parse, divisor, cohomology tables, LES, graded values.
/// With `verify`, every pairwise intersection number is re-counted by the
/// brute-force oracle.
inline Report make_cp_report(const std::string& rep_text, bool verify = false) {
    CircleRep v = parse_circle_rep(rep_text);
    Report r;
    r.command = "cp";
    r.input = rep_text;
    detail::fill_divisor_facts(r, divisor_of_rep(tensor_with_w(v)));
    r.les = les_table(v);
    r.unreduced = ec_cp(v, /*reduced=*/false);
    r.reduced = ec_cp(v, /*reduced=*/true);
    r.d_value = d_invariant(v);
    if (verify) r.oracle_checks = detail::run_oracle_checks(r.divisor);
    return r;
}

/// Sphere pipeline for a fixed-point-free torus representation.
inline Report make_sphere_report(const std::string& rep_text, bool verify = false) {
    TorusRep w = parse_torus_rep(rep_text);
    Report r;
    r.command = "sphere";
    r.input = rep_text;
    detail::fill_divisor_facts(r, divisor_of_rep(w));
    r.sphere_value = ec_t2_sphere(w);
    if (verify) r.oracle_checks = detail::run_oracle_checks(r.divisor);
    return r;
}

// ---- JSON -----------------------------------------------------------------

inline nlohmann::json to_json(const Character& v) { return nlohmann::json::array({v.lambda, v.mu}); }

inline Character character_from_json(const nlohmann::json& j) {
    return Character{j.at(0).get<Int>(), j.at(1).get<Int>()};
}

inline nlohmann::json to_json(const Divisor& d) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [v, m] : d.coefficients())
        out.push_back(nlohmann::json{{"v", to_json(v)}, {"m", m}});
    return out;
}

inline Divisor divisor_from_json(const nlohmann::json& j) {
    Divisor d;
    for (const auto& item : j) d.add(character_from_json(item.at("v")), item.at("m").get<Int>());
    return d;
}

inline nlohmann::json to_json(const CohDims& c) { return nlohmann::json::array({c.h0, c.h1, c.h2}); }

inline CohDims coh_dims_from_json(const nlohmann::json& j) {
    return CohDims{j.at(0).get<Int>(), j.at(1).get<Int>(), j.at(2).get<Int>()};
}

inline nlohmann::json to_json(const GradedDims& g) {
    return nlohmann::json{{"even", g.even}, {"odd", g.odd}};
}

inline GradedDims graded_dims_from_json(const nlohmann::json& j) {
    return GradedDims{j.at("even").get<Int>(), j.at("odd").get<Int>()};
}

inline nlohmann::json to_json(const LesTable& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (int k = 0; k < 3; ++k) {
        const auto& row = t.degree[k];
        rows.push_back(nlohmann::json{{"k", k},
                                      {"source", row.source},
                                      {"target", row.target},
                                      {"rank", row.rank},
                                      {"kernel", row.kernel},
                                      {"cokernel", row.cokernel}});
    }
    return rows;
}

inline LesTable les_table_from_json(const nlohmann::json& j) {
    LesTable t;
    for (const auto& row : j) {
        int k = row.at("k").get<int>();
        t.degree.at(k) = {row.at("source").get<Int>(), row.at("target").get<Int>(),
                          row.at("rank").get<Int>(), row.at("kernel").get<Int>(),
                          row.at("cokernel").get<Int>()};
    }
    return t;
}

inline nlohmann::json to_json(const Report& r) {
    nlohmann::json j{
        {"schema", kJsonSchema},
        {"command", r.command},
        {"input", r.input},
        {"divisor", to_json(r.divisor)},
        {"intersection_matrix", r.intersection_matrix},
        {"self_intersection", r.self_intersection},
        {"euler_characteristic", r.euler_characteristic},
        {"ample", r.ample},
        {"coh_minus", to_json(r.coh_minus)},
        {"coh_structure", to_json(r.coh_structure)},
    };
    if (r.les) j["les"] = to_json(*r.les);
    if (r.unreduced) j["unreduced"] = to_json(*r.unreduced);
    if (r.reduced) j["reduced"] = to_json(*r.reduced);
    if (r.sphere_value) j["sphere_value"] = to_json(*r.sphere_value);
    if (r.d_value) j["d"] = *r.d_value;
    if (!r.oracle_checks.empty()) {
        nlohmann::json checks = nlohmann::json::array();
        for (const auto& c : r.oracle_checks)
            checks.push_back(nlohmann::json{{"v", to_json(c.v)},
                                            {"w", to_json(c.w)},
                                            {"count", c.count},
                                            {"det_squared", c.det_squared},
                                            {"ok", c.ok}});
        j["oracle"] = checks;
    }
    return j;
}

inline Report report_from_json(const nlohmann::json& j) {
    Report r;
    r.command = j.at("command").get<std::string>();
    r.input = j.at("input").get<std::string>();
    r.divisor = divisor_from_json(j.at("divisor"));
    r.intersection_matrix = j.at("intersection_matrix").get<std::vector<std::vector<Int>>>();
    r.self_intersection = j.at("self_intersection").get<Int>();
    r.euler_characteristic = j.at("euler_characteristic").get<Int>();
    r.ample = j.at("ample").get<bool>();
    r.coh_minus = coh_dims_from_json(j.at("coh_minus"));
    r.coh_structure = coh_dims_from_json(j.at("coh_structure"));
    if (j.contains("les")) r.les = les_table_from_json(j.at("les"));
    if (j.contains("unreduced")) r.unreduced = graded_dims_from_json(j.at("unreduced"));
    if (j.contains("reduced")) r.reduced = graded_dims_from_json(j.at("reduced"));
    if (j.contains("sphere_value")) r.sphere_value = graded_dims_from_json(j.at("sphere_value"));
    if (j.contains("d")) r.d_value = j.at("d").get<Int>();
    if (j.contains("oracle"))
        for (const auto& c : j.at("oracle"))
            r.oracle_checks.push_back({character_from_json(c.at("v")),
                                       character_from_json(c.at("w")), c.at("count").get<Int>(),
                                       c.at("det_squared").get<Int>(), c.at("ok").get<bool>()});
    return r;
}

}  // namespace ellipcp
