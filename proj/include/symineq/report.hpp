#pragma once

// JSON renderings of the verifier reports. Rationals are "num/den" strings;
// keys are emitted in sorted order, so parse -> dump is byte-stable.

#include <string>
#include <vector>

#include <json.hpp>

#include "majorization.hpp"
#include "mellin.hpp"
#include "rational.hpp"
#include "spectral.hpp"
#include "theorem1.hpp"

namespace symineq::report {

using json = nlohmann::json;

inline json rationals(const std::vector<Rational>& values) {
    json out = json::array();
    for (const auto& v : values) out.push_back(to_string(v));
    return out;
}

inline json rationals(const RationalVector& values) {
    return rationals(std::vector<Rational>(values.begin(), values.end()));
}

inline json to_json(const HypothesisReport& h) {
    json checks = json::array();
    for (const auto& c : h.checks)
        checks.push_back({{"k", c.k}, {"fx", to_string(c.fx)}, {"fy", to_string(c.fy)}, {"pass", c.pass}});
    json out = {{"r", h.r}, {"n", h.n}, {"checks", checks}, {"all_pass", h.all_pass}, {"sums_equal", h.sums_equal}};
    if (h.first_failure) out["first_failure_k"] = h.checks[*h.first_failure].k;
    return out;
}

inline json to_json(const GridPoint& g, const char* side) {
    return {{"p", g.p}, {"nx", g.nx}, {"ny", g.ny}, {"margin", g.margin}, {"pass", g.pass}, {"side", side}};
}

/// Grid points are listed low, high, then explore; "side" tells them apart.
inline json to_json(const ConclusionReport& c) {
    json grids = json::array();
    for (const auto& g : c.grid_low) grids.push_back(to_json(g, "low"));
    for (const auto& g : c.grid_high) grids.push_back(to_json(g, "high"));
    for (const auto& g : c.grid_explore) grids.push_back(to_json(g, "explore_uncertified"));
    return {{"r", c.r},
            {"tol", c.tol},
            {"sums_equal", c.sums_equal},
            {"high_asserted", c.sums_equal},
            {"low_pass", c.low_pass()},
            {"high_pass", c.high_pass()},
            {"all_pass", c.all_pass()},
            {"grids", grids}};
}

/// Single-r report: {r, checks, sums_equal, grids, ...}.
inline json theorem1_json(const HypothesisReport& h, const ConclusionReport& c) {
    json out = to_json(h);
    const json conc = to_json(c);
    out["grids"] = conc["grids"];
    out["tol"] = c.tol;
    out["conclusions_pass"] = c.all_pass();
    out["certified_interval"] = h.all_pass ? json::array({0.0, h.sums_equal ? h.r + 1.0 : 1.0}) : json(nullptr);
    return out;
}

inline json to_json(const FullReport& f) {
    json per_r = json::array();
    for (const auto& h : f.per_r) per_r.push_back(to_json(h));
    json out = {{"per_r", per_r}, {"r", f.certified_r}, {"sums_equal", f.sums_equal}};
    out["certified_interval"] = f.certified_r > 0 ? json::array({0.0, f.certified_upper}) : json(nullptr);
    if (f.failure_witness) {
        const auto& [r, idx] = *f.failure_witness;
        const auto& c = f.per_r[static_cast<std::size_t>(r - 1)].checks[idx];
        out["failure_witness"] = {{"r", r}, {"k", c.k}, {"fx", to_string(c.fx)}, {"fy", to_string(c.fy)}};
    } else {
        out["failure_witness"] = nullptr;
    }
    if (f.conclusions) {
        const json conc = to_json(*f.conclusions);
        out["checks"] = per_r[static_cast<std::size_t>(f.certified_r - 1)]["checks"];
        out["grids"] = conc["grids"];
        out["conclusions_pass"] = conc["all_pass"];
    }
    return out;
}

inline json to_json(const MajorizationVerdict& v) {
    json out = {{"holds", v.holds}, {"sum_equal", v.sum_equal}};
    if (v.first_violation)
        out["first_violation"] = {{"k", v.first_violation->k},
                                  {"lhs", to_string(v.first_violation->lhs)},
                                  {"rhs", to_string(v.first_violation->rhs)}};
    else
        out["first_violation"] = nullptr;
    return out;
}

inline json to_json(const PsiReport& p) {
    json points = json::array();
    for (const auto& pt : p.points)
        points.push_back({{"lambda", to_string(pt.lambda)}, {"sum_x", pt.sum_x}, {"sum_y", pt.sum_y}, {"holds", pt.holds}});
    return {{"points", points}, {"all_hold", p.all_hold()}};
}

inline json to_json(const Theorem2Report& t) {
    auto cells = [](const std::vector<FamilyCell>& cs) {
        json out = json::array();
        for (const auto& c : cs)
            out.push_back({{"r", c.r}, {"k", c.k}, {"x", to_string(c.value_x)}, {"y", to_string(c.value_y)}, {"ok", c.ok}});
        return out;
    };
    auto first = [&](const std::vector<FamilyCell>& cs, const std::optional<std::size_t>& idx) -> json {
        if (!idx) return nullptr;
        return {{"r", cs[*idx].r}, {"k", cs[*idx].k}};
    };
    return {{"applicable", t.applicable},
            {"k_max", t.k_max},
            {"truncated_at_k_max", t.truncated()},
            {"a_majorizes", to_json(t.a)},
            {"b_holds", t.b_holds()},
            {"c_holds", t.c_holds()},
            {"b_first_violation", first(t.b_cells, t.b_first_violation)},
            {"c_first_violation", first(t.c_cells, t.c_first_violation)},
            {"consistent", t.consistent()},
            {"b_cells", cells(t.b_cells)},
            {"c_cells", cells(t.c_cells)}};
}

inline json to_json(const SchurOstrowskiVerdict& v) {
    return {{"holds", v.holds},
            {"vacuous", v.vacuous},
            {"direction", v.schur_convex_direction ? "schur_convex" : "schur_concave"},
            {"pairs_checked", v.pairs_checked},
            {"worst_quotient", to_string(v.worst_quotient)},
            {"worst_pair", {v.worst_pair.first, v.worst_pair.second}}};
}

inline json to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(row);
    }
    return rows;
}

inline json to_json(const mellin::QuadratureResult& q) {
    return {{"value", q.value}, {"estimated_error", q.estimated_error}, {"node_count", q.node_count}};
}

}  // namespace symineq::report
