#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gh {

// Ambient dimensions: graphs describe maps R^j -> R^n. All differentials and
// orientation signs depend only on the parities of n and j, but actual values
// enter degree formulas and the algebra's truncation threshold n*j - 1.
struct Ambient {
    int n = 0;
    int j = 0;

    bool valid() const { return j >= 1 && n - j >= 2; }
    void require_valid() const;
};

// Canonical order of kinds: black vertices precede white ones, external black
// vertices first. Enumeration and canonical forms keep vertices sorted by kind.
enum class VertexKind : uint8_t { ExtBlack = 0, IntBlack = 1, White = 2 };

// Solid edges precede dashed edges in canonical edge order.
enum class EdgeKind : uint8_t { Solid = 0, Dashed = 1 };

inline bool is_black(VertexKind k) { return k != VertexKind::White; }

struct Edge {
    EdgeKind kind;
    int src = 0;
    int dst = 0;

    bool is_loop() const { return src == dst; }
    int low() const { return src < dst ? src : dst; }
    int high() const { return src < dst ? dst : src; }
    bool operator==(const Edge&) const = default;
};

// Element degrees: a vertex or edge contributes the degree of the form/space it
// represents. Only used through grading sums and mod-2 Koszul parities.
inline int vertex_degree(VertexKind k, const Ambient& amb) {
    return is_black(k) ? -amb.j : -amb.n;
}
inline int edge_degree(EdgeKind k, const Ambient& amb) {
    return k == EdgeKind::Dashed ? amb.n - 1 : amb.j - 1;
}

// A graph with totally ordered vertices (position = label), totally ordered
// oriented edges. Vertex/edge order plus edge orientations carry the
// orientation data; relabelings pick up Koszul signs.
struct LabeledGraph {
    std::vector<VertexKind> vertices;
    std::vector<Edge> edges;

    int num_vertices() const { return static_cast<int>(vertices.size()); }
    int num_edges() const { return static_cast<int>(edges.size()); }

    int count_vertices(VertexKind k) const;
    int count_edges(EdgeKind k) const;

    // Loops count twice, matching half-edge counting.
    int incident_degree(int v, EdgeKind k) const;

    bool has_black() const;
    bool has_loop_edge() const;
    // A double edge is a pair of parallel edges of the same kind.
    bool has_double_edge() const;
    // A multiple edge is a dashed+solid pair between two external black vertices.
    bool edge_in_multiple_pair(int edge_index) const;
    bool edge_has_parallel(int edge_index) const;
    // A chord is a dashed edge joining two external black vertices (non-loop).
    bool edge_is_chord(int edge_index) const;

    int num_components() const;
    bool is_connected() const;
    // First Betti number: |E| - |V| + #components.
    int betti() const;

    std::vector<int> component_ids() const;

    bool operator==(const LabeledGraph&) const = default;
};

struct Grading {
    int k = 0;         // order: |dashed| - |whites|
    int g = 0;         // first Betti number
    int l = 0;         // defect: 2|dashed| - 3|whites| - |blacks|
    int deg = 0;       // sum of element degrees
    int norm_deg = 0;  // deg + (j+1) if a black vertex exists, else deg + (n+1)
};

Grading grading(const LabeledGraph& graph, const Ambient& amb);

// Structural validity per graph family.
enum class Flavor { Plain, Generalized };

// Returns an error message if the graph violates the flavor's valence rules
// (whites: only dashed, min valence 3 plain / 1 generalized; internal blacks:
// only solid, same minima; external blacks: >=0 edges) or has out-of-range
// endpoints. Component/admissibility conditions are checked separately.
std::optional<std::string> structure_error(const LabeledGraph& graph, Flavor flavor);

// Every external black vertex carries at least one dashed edge.
bool is_admissible(const LabeledGraph& graph);

// JSON round-trip with the fixed schema:
// {"flavor":"plain","vertices":["ext","int","white"],
//  "edges":[{"kind":"solid","src":0,"dst":1}]}
std::string to_json(const LabeledGraph& graph, Flavor flavor = Flavor::Plain);
LabeledGraph graph_from_json(const std::string& text, Flavor* flavor_out = nullptr);

// Compact deterministic encoding used as a hash/map key and for golden files.
std::string encode(const LabeledGraph& graph);
LabeledGraph decode(const std::string& key);

}  // namespace gh
