#pragma once

#include <string>

#include <json.hpp>

#include "whitmod/gt_pattern.hpp"
#include "whitmod/op_matrix.hpp"
#include "whitmod/pbw.hpp"
#include "whitmod/unitary_dual.hpp"

namespace whitmod {

using Json = nlohmann::ordered_json;

inline Json to_json(const GTPattern& q) {
    Json rows = Json::array();
    for (std::size_t j = q.size(); j >= 1; --j) rows.push_back(q.row(j));  // top row first
    return rows;
}

inline Json to_json(const PartialGTPattern& p) {
    return Json{{"n", p.n}, {"lambda_star", p.lambda_star}, {"mid", p.mid}, {"gamma_star", p.gamma_star}};
}

inline Json to_json(const RadicalSum& r) {
    Json terms = Json::array();
    for (const auto& [rad, c] : r.terms())
        terms.push_back(Json{{"radicand", rad.get_str()}, {"re", c.re.get_str()}, {"im", c.im.get_str()}});
    return terms;
}

inline Json to_json(const ThetaPoly& p) {
    Json terms = Json::array();
    for (const auto& [mk, c] : p.terms())
        terms.push_back(Json{{"t", mk.first}, {"theta", mk.second}, {"coeff", to_json(c)}});
    return terms;
}

inline Json to_json(const OpMatrix& m) {
    Json j;
    j["domain"] = Json::array();
    for (const auto& p : m.domain()) j["domain"].push_back(to_json(p));
    j["codomain"] = Json::array();
    for (const auto& p : m.codomain()) j["codomain"].push_back(to_json(p));
    j["entries"] = Json::array();
    for (const auto& [rc, tp] : m.entries())
        j["entries"].push_back(Json{{"row", rc.first}, {"col", rc.second}, {"poly", to_json(tp)}});
    return j;
}

inline Json to_json(const GLAlgebra& g, const PBWElement& z) {
    Json terms = Json::array();
    for (const auto& [mono, c] : z.terms()) {
        Json factors = Json::array();
        for (int k = 0; k < g.N * g.N; ++k)
            if (mono[k] > 0) factors.push_back(Json{{"gen", g.names[k]}, {"power", mono[k]}});
        Json coeff = Json::array();
        for (std::size_t d = 0; d < c.coeffs().size(); ++d)
            coeff.push_back(Json{{"u_power", d}, {"re", c.coeffs()[d].re.get_str()}, {"im", c.coeffs()[d].im.get_str()}});
        terms.push_back(Json{{"monomial", factors}, {"coeff", coeff}});
    }
    return terms;
}

inline Json to_json(const CompositionDiagram& d) {
    Json j;
    j["nodes"] = Json::array();
    for (const auto& nd : d.nodes) j["nodes"].push_back(Json{{"i", nd.i}, {"j", nd.j}, {"floor", nd.floor}});
    j["arrows"] = Json::array();
    for (const auto& [from, to] : d.arrows) j["arrows"].push_back(Json::array({from, to}));
    return j;
}

/// DOT form with one rank per floor, socle at the bottom; byte-deterministic.
inline std::string to_dot(const CompositionDiagram& d) {
    auto node_id = [](const DiagramNode& n) {
        return "pi_" + std::to_string(n.i) + "_" + std::to_string(n.j);
    };
    std::string s = "digraph composition_series {\n  rankdir=TB;\n  node [shape=box];\n";
    int max_floor = 0;
    for (const auto& n : d.nodes) max_floor = std::max(max_floor, n.floor);
    for (int f = max_floor; f >= 0; --f) {
        std::string line = "  { rank=same;";
        bool any = false;
        for (const auto& n : d.nodes)
            if (n.floor == f) {
                line += " \"" + node_id(n) + "\";";
                any = true;
            }
        line += " }\n";
        if (any) s += line;
    }
    for (const auto& n : d.nodes)
        s += "  \"" + node_id(n) + "\" [label=\"pi(" + std::to_string(n.i) + "," + std::to_string(n.j) + ")\"];\n";
    for (const auto& [from, to] : d.arrows)
        s += "  \"" + node_id(d.nodes[from]) + "\" -> \"" + node_id(d.nodes[to]) + "\";\n";
    s += "}\n";
    return s;
}

inline Json check_report(const std::string& check, const Json& params, bool residual_zero,
                         const std::string& detail) {
    return Json{{"check", check}, {"params", params}, {"residual_zero", residual_zero}, {"detail", detail}};
}

}  // namespace whitmod
