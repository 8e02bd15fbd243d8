#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "whitmod/serialize.hpp"

using namespace whitmod;

namespace {

std::string slurp(const std::string& name) {
    std::ifstream f(std::string(WHITMOD_GOLDEN_DIR) + "/" + name, std::ios::binary);
    REQUIRE(f.good());
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

InfChar lam2() { return InfChar(2, {Rational(2), Rational(1), Rational(0)}); }

}  // namespace

TEST_CASE("diagram emission is byte-stable against the golden files") {
    CompositionDiagram s2 = standard_module_diagram(lam2(), SigmaWeight{{}, 3});
    CHECK(to_dot(s2) == slurp("standard_n2.dot"));
    CHECK(to_json(s2).dump(2) + "\n" == slurp("standard_n2.json"));

    InfChar l3(3, {Rational(5, 2), Rational(3, 2), Rational(1, 2), Rational(-1, 2)});
    CHECK(to_dot(standard_module_diagram(l3, SigmaWeight{{1}, 3})) == slurp("standard_n3_edge.dot"));
    CHECK(to_dot(standard_module_diagram(l3, SigmaWeight{{2}, 2})) == slurp("standard_n3_corner.dot"));

    InfChar l4(4, {Rational(4), Rational(3), Rational(2), Rational(1), Rational(0)});
    CompositionDiagram s4 = standard_module_diagram(l4, sigma_block(l4, 1, 2).front());
    CHECK(to_dot(s4) == slurp("standard_n4_interior.dot"));
    CHECK(to_json(s4).dump(2) + "\n" == slurp("standard_n4_interior.json"));

    CHECK(to_dot(ps_composition_series(2, 0, 1)) == slurp("ps_n2_01.dot"));
    CHECK(to_dot(ps_composition_series(2, 0, 2)) == slurp("ps_n2_02.dot"));
    CHECK(to_dot(ps_composition_series(2, 1, 1)) == slurp("ps_n2_11.dot"));
    CHECK(to_dot(ps_composition_series(3, 1, 1)) == slurp("ps_n3_11.dot"));
    CHECK(to_dot(ps_composition_series(4, 1, 2)) == slurp("ps_n4_12.dot"));
}

TEST_CASE("json and dot encode identical node and arrow sets") {
    CompositionDiagram d = standard_module_diagram(lam2(), SigmaWeight{{}, 3});
    Json j = to_json(d);
    std::string dot = to_dot(d);
    CHECK(j["nodes"].size() == d.nodes.size());
    CHECK(j["arrows"].size() == d.arrows.size());
    for (const auto& nd : d.nodes) {
        std::string id = "\"pi_" + std::to_string(nd.i) + "_" + std::to_string(nd.j) + "\"";
        CHECK(dot.find(id) != std::string::npos);
    }
    for (const auto& [from, to] : d.arrows) {
        std::string edge = "\"pi_" + std::to_string(d.nodes[from].i) + "_" + std::to_string(d.nodes[from].j) +
                           "\" -> \"pi_" + std::to_string(d.nodes[to].i) + "_" + std::to_string(d.nodes[to].j) + "\"";
        CHECK(dot.find(edge) != std::string::npos);
    }
}

TEST_CASE("empty diagram emits an empty graph stanza") {
    CompositionDiagram empty;
    CHECK(to_dot(empty) == "digraph composition_series {\n  rankdir=TB;\n  node [shape=box];\n}\n");
    CHECK(to_json(empty)["nodes"].empty());
}

TEST_CASE("pattern and operator serialization") {
    GTPattern q({{1}, {2, 0}});
    Json pj = to_json(q);
    CHECK(pj.dump() == "[[2,0],[1]]");  // rows from the top

    auto basis = enumerate_partial_gt(Weight({1, -1}), Weight(std::vector<long>{}));
    OpMatrix p = shift_plus(Weight({1, -1}), Weight(std::vector<long>{}), 1, Rational(3));
    Json mj = to_json(p);
    CHECK(mj["domain"].size() == basis.size());
    CHECK(!mj["entries"].empty());
    for (const auto& e : mj["entries"]) {
        CHECK(e.contains("row"));
        CHECK(e.contains("col"));
        CHECK(!e["poly"].empty());
    }

    // radicand/coefficient term lists round out the monomial schema
    Json rj = to_json(RadicalSum::sqrt_of(Rational(-8)));
    REQUIRE(rj.size() == 1);
    CHECK(rj[0]["radicand"] == "2");
    CHECK(rj[0]["re"] == "0");
    CHECK(rj[0]["im"] == "2");
}

TEST_CASE("enveloping-algebra term lists are byte-stable") {
    GLAlgebra g2 = make_gl_algebra(2);
    CHECK(to_json(g2, hc_gamma_prime(g2, capelli(g2))).dump(2) + "\n" == slurp("capelli2_cartan_part.json"));
    GLAlgebra g3 = make_gl_algebra(3);
    CHECK(to_json(g3, capelli(g3)).dump(2) + "\n" == slurp("capelli3.json"));
}
