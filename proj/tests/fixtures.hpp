#pragma once

#include <vector>

#include "ghom/graph.hpp"

namespace fx {

using gh::Ambient;
using gh::Edge;
using gh::EdgeKind;
using gh::LabeledGraph;
using gh::VertexKind;

inline LabeledGraph make(std::vector<VertexKind> kinds, std::vector<Edge> edges) {
    LabeledGraph g;
    g.vertices = std::move(kinds);
    g.edges = std::move(edges);
    return g;
}

constexpr VertexKind E = VertexKind::ExtBlack;
constexpr VertexKind I = VertexKind::IntBlack;
constexpr VertexKind W = VertexKind::White;
constexpr EdgeKind SO = EdgeKind::Solid;
constexpr EdgeKind DA = EdgeKind::Dashed;

// Two externals joined by a solid and a dashed edge.
inline LabeledGraph theta() { return make({E, E}, {{SO, 0, 1}, {DA, 0, 1}}); }

// A single chord.
inline LabeledGraph chord() { return make({E, E}, {{DA, 0, 1}}); }

// One external with a dashed loop.
inline LabeledGraph loopgraph() { return make({E}, {{DA, 0, 0}}); }

// White with a dashed loop and a hair to an external.
inline LabeledGraph loophair() { return make({E, W}, {{DA, 0, 1}, {DA, 1, 1}}); }

// Four externals m,b1,b2,b4 = 0,1,2,3: solid b1-m, m-b2; dashed b1-b2, m-b4.
// The first solid edge is oriented downward so that the printed two-loop
// cocycle identities hold with their plus signs at odd-odd parity.
inline LabeledGraph graph_d() {
    return make({E, E, E, E}, {{SO, 1, 0}, {SO, 0, 2}, {DA, 1, 2}, {DA, 0, 3}});
}

// Four externals a,b,c,d: dashed+solid a-b, solid b-c, dashed c-d. The first
// solid edge is oriented downward, as in graph_d.
inline LabeledGraph graph_db() {
    return make({E, E, E, E}, {{SO, 1, 0}, {SO, 1, 2}, {DA, 0, 1}, {DA, 2, 3}});
}

// Alternating square: dashed 0-1, solid 1-2, dashed 2-3, solid 3-0.
inline LabeledGraph graph_dc() {
    return make({E, E, E, E}, {{SO, 1, 2}, {SO, 0, 3}, {DA, 0, 1}, {DA, 2, 3}});
}

// White joined to three externals, solid edge between the first two.
inline LabeledGraph graph_e() {
    return make({E, E, E, W}, {{SO, 0, 1}, {DA, 0, 3}, {DA, 1, 3}, {DA, 2, 3}});
}

// Two whites joined by a dashed double edge, one hair each.
inline LabeledGraph graph_f() {
    return make({E, E, W, W}, {{DA, 2, 3}, {DA, 2, 3}, {DA, 0, 2}, {DA, 1, 3}});
}

// Two externals joined by a solid double edge, dashed edges to two more.
inline LabeledGraph graph_c() {
    return make({E, E, E, E}, {{SO, 0, 1}, {SO, 0, 1}, {DA, 0, 2}, {DA, 1, 3}});
}

// Internal black with solid edges to three externals; dashed 0-1 and 2-3.
inline LabeledGraph negative_defect() {
    return make({E, E, E, E, I},
                {{SO, 0, 4}, {SO, 1, 4}, {SO, 2, 4}, {DA, 0, 1}, {DA, 2, 3}});
}

// Internal black with a solid double edge to one external and a solid edge to
// another; dashed 0-2 and 1-3.
inline LabeledGraph negative_defect_b() {
    return make({E, E, E, E, I},
                {{SO, 0, 4}, {SO, 0, 4}, {SO, 1, 4}, {DA, 0, 2}, {DA, 1, 3}});
}

// One representative of each parity class of (n, j) with n - j >= 2.
inline std::vector<Ambient> all_parities() {
    return {{6, 4}, {7, 5}, {7, 4}, {6, 3}};
}

}  // namespace fx
