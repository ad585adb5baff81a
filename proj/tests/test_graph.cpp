#include <string>

#include "doctest.h"
#include "json.hpp"
#include "fixtures.hpp"
#include "ghom/graph.hpp"

using namespace gh;

namespace {

// Degree of a connected graph expressed through the derived gradings instead
// of the raw edge/vertex count formula.
int degree_from_gradings(const Grading& gr, const Ambient& amb) {
    return gr.k * (amb.n - amb.j - 2) + (gr.g - 1) * (amb.j - 1) + gr.l;
}

}  // namespace

TEST_CASE("grading of the theta graph") {
    Ambient amb{6, 4};
    auto g = fx::theta();
    CHECK(!structure_error(g, Flavor::Plain));
    CHECK(is_admissible(g));
    auto gr = grading(g, amb);
    CHECK(gr.k == 1);
    CHECK(gr.g == 1);
    CHECK(gr.l == 0);
    CHECK(gr.deg == 0);
    CHECK(gr.norm_deg == amb.j + 1);
    CHECK(gr.deg == degree_from_gradings(gr, amb));
}

TEST_CASE("grading of a single external vertex") {
    Ambient amb{6, 4};
    LabeledGraph g = fx::make({fx::E}, {});
    auto gr = grading(g, amb);
    CHECK(gr.k == 0);
    CHECK(gr.g == 0);
    CHECK(gr.l == -1);
    CHECK(gr.deg == -amb.j);
    CHECK(gr.norm_deg == 1);
}

TEST_CASE("grading of the chord") {
    for (auto amb : fx::all_parities()) {
        auto gr = grading(fx::chord(), amb);
        CHECK(gr.k == 1);
        CHECK(gr.g == 0);
        CHECK(gr.l == 0);
        CHECK(gr.deg == amb.n - 1 - 2 * amb.j);
        CHECK(gr.norm_deg == amb.n - amb.j);
        CHECK(gr.deg == degree_from_gradings(gr, amb));
    }
}

TEST_CASE("gradings of the distinguished graphs") {
    struct Row {
        LabeledGraph g;
        int k, bg, l;
    };
    std::vector<Row> rows = {
        {fx::loopgraph(), 1, 1, 1},      {fx::loophair(), 1, 1, 0},
        {fx::graph_d(), 2, 1, 0},        {fx::graph_db(), 2, 1, 0},
        {fx::graph_dc(), 2, 1, 0},       {fx::graph_e(), 2, 1, 0},
        {fx::graph_f(), 2, 1, 0},        {fx::graph_c(), 2, 1, 0},
        {fx::negative_defect(), 2, 1, -1},
        {fx::negative_defect_b(), 2, 1, -1},
    };
    for (auto amb : fx::all_parities()) {
        for (const auto& row : rows) {
            auto gr = grading(row.g, amb);
            CHECK(gr.k == row.k);
            CHECK(gr.g == row.bg);
            CHECK(gr.l == row.l);
            CHECK(gr.deg == degree_from_gradings(gr, amb));
        }
    }
}

TEST_CASE("top-degree representatives sit in degree zero") {
    Ambient ee{6, 4};
    Ambient oo{7, 5};
    CHECK(grading(fx::theta(), ee).deg == 0);
    CHECK(grading(fx::loophair(), ee).deg == 0);
    CHECK(grading(fx::graph_d(), oo).deg == 0);
    CHECK(grading(fx::graph_e(), oo).deg == 0);
    CHECK(grading(fx::graph_f(), oo).deg == 0);
    CHECK(grading(fx::negative_defect(), oo).deg == -1);
}

TEST_CASE("structure validation") {
    Ambient amb{6, 4};
    SUBCASE("white vertices reject solid edges") {
        auto g = fx::make({fx::E, fx::W}, {{fx::SO, 0, 1}});
        CHECK(structure_error(g, Flavor::Plain).has_value());
        CHECK(structure_error(g, Flavor::Generalized).has_value());
    }
    SUBCASE("internal vertices reject dashed edges") {
        auto g = fx::make({fx::E, fx::I}, {{fx::DA, 0, 1}});
        CHECK(structure_error(g, Flavor::Plain).has_value());
        CHECK(structure_error(g, Flavor::Generalized).has_value());
    }
    SUBCASE("plain whites need valence three") {
        auto g = fx::make({fx::E, fx::W}, {{fx::DA, 0, 1}});
        CHECK(structure_error(g, Flavor::Plain).has_value());
        CHECK(!structure_error(g, Flavor::Generalized));
    }
    SUBCASE("plain internals need solid valence three") {
        auto g = fx::make({fx::E, fx::I}, {{fx::SO, 0, 1}});
        CHECK(structure_error(g, Flavor::Plain).has_value());
        CHECK(!structure_error(g, Flavor::Generalized));
    }
    SUBCASE("edge endpoints must be in range") {
        auto g = fx::make({fx::E}, {{fx::DA, 0, 1}});
        CHECK(structure_error(g, Flavor::Plain).has_value());
    }
    SUBCASE("admissibility needs a dashed edge at every external") {
        auto g = fx::make({fx::E, fx::E}, {{fx::SO, 0, 1}});
        CHECK(!structure_error(g, Flavor::Plain));
        CHECK(!is_admissible(g));
        CHECK(is_admissible(fx::graph_d()));
        CHECK(is_admissible(fx::negative_defect()));
        auto bare = fx::make({fx::E, fx::E, fx::E},
                             {{fx::SO, 1, 2}, {fx::DA, 0, 1}});
        CHECK(!is_admissible(bare));
    }
}

TEST_CASE("component counts and betti numbers") {
    auto two = fx::make({fx::E, fx::E, fx::E, fx::E},
                        {{fx::DA, 0, 1}, {fx::DA, 2, 3}});
    CHECK(two.num_components() == 2);
    CHECK(!two.is_connected());
    CHECK(two.betti() == 0);
    CHECK(fx::theta().betti() == 1);
    CHECK(fx::loopgraph().betti() == 1);
    auto ids = two.component_ids();
    CHECK(ids[0] == ids[1]);
    CHECK(ids[2] == ids[3]);
    CHECK(ids[0] != ids[2]);
}

TEST_CASE("multiple pairs, chords, doubles and loops") {
    auto th = fx::theta();
    CHECK(th.edge_in_multiple_pair(0));
    CHECK(th.edge_in_multiple_pair(1));
    CHECK(th.edge_is_chord(1));
    CHECK(fx::chord().edge_is_chord(0));
    CHECK(fx::loopgraph().has_loop_edge());
    CHECK(!fx::loopgraph().has_double_edge());
    CHECK(fx::graph_f().has_double_edge());
    CHECK(fx::graph_f().edge_has_parallel(0));
    CHECK(!fx::graph_f().edge_has_parallel(2));
    CHECK(!fx::graph_d().has_double_edge());
    // A dashed+solid pair between externals is not a double edge.
    CHECK(!th.has_double_edge());
}

TEST_CASE("json round trip") {
    for (const auto& g : {fx::theta(), fx::loophair(), fx::graph_e(),
                          fx::negative_defect_b()}) {
        auto text = to_json(g);
        auto back = graph_from_json(text);
        CHECK(back == g);
    }
    auto parsed = nlohmann::json::parse(to_json(fx::graph_e()));
    CHECK(parsed["flavor"] == "plain");
    CHECK(parsed["vertices"][3] == "white");
    CHECK(parsed["edges"][0]["kind"] == "solid");
    CHECK(parsed["edges"][0]["src"] == 0);
    CHECK(parsed["edges"][0]["dst"] == 1);
}

TEST_CASE("compact encoding round trip and ordering") {
    for (const auto& g : {fx::theta(), fx::chord(), fx::loopgraph(),
                          fx::graph_dc(), fx::negative_defect()}) {
        auto code = encode(g);
        auto back = decode(code);
        CHECK(back == g);
    }
    CHECK(encode(fx::theta()) != encode(fx::chord()));
}
