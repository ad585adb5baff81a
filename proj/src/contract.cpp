#include "ghom/contract.hpp"

#include <stdexcept>

namespace gh {

namespace {

VertexKind merge_kinds(bool all_white, bool any_ext) {
    if (all_white) return VertexKind::White;
    return any_ext ? VertexKind::ExtBlack : VertexKind::IntBlack;
}

}  // namespace

LabeledGraph contract_edge(const LabeledGraph& graph, int edge_index) {
    const Edge& e = graph.edges.at(edge_index);
    if (e.is_loop()) throw std::invalid_argument("contract_edge: loop edge");
    const int p = e.low();
    const int q = e.high();

    LabeledGraph out;
    out.vertices.reserve(graph.num_vertices() - 1);
    for (int v = 0; v < graph.num_vertices(); ++v) {
        if (v != q) out.vertices.push_back(graph.vertices[v]);
    }
    const bool all_white =
        graph.vertices[p] == VertexKind::White && graph.vertices[q] == VertexKind::White;
    const bool any_ext = graph.vertices[p] == VertexKind::ExtBlack ||
                         graph.vertices[q] == VertexKind::ExtBlack;
    out.vertices[p] = merge_kinds(all_white, any_ext);

    auto relabel = [p, q](int v) { return v == q ? p : (v > q ? v - 1 : v); };
    out.edges.reserve(graph.num_edges() - 1);
    for (int i = 0; i < graph.num_edges(); ++i) {
        if (i == edge_index) continue;
        const Edge& f = graph.edges[i];
        out.edges.push_back({f.kind, relabel(f.src), relabel(f.dst)});
    }
    return out;
}

SubsetSplit subset_split(const LabeledGraph& graph, const std::vector<int>& ordered_s) {
    if (ordered_s.size() < 1) throw std::invalid_argument("subset_split: empty subset");
    const int n = graph.num_vertices();
    std::vector<int> subset_pos(n, -1);
    for (size_t i = 0; i < ordered_s.size(); ++i) {
        const int v = ordered_s[i];
        if (v < 0 || v >= n || subset_pos[v] >= 0) {
            throw std::invalid_argument("subset_split: bad subset");
        }
        subset_pos[v] = static_cast<int>(i);
    }
    const int s1 = ordered_s.front();

    bool all_white = true;
    bool any_ext = false;
    for (int v : ordered_s) {
        if (is_black(graph.vertices[v])) all_white = false;
        if (graph.vertices[v] == VertexKind::ExtBlack) any_ext = true;
    }

    SubsetSplit out;
    std::vector<int>& quotient_label = out.quotient_label;
    quotient_label.assign(n, -1);
    for (int v = 0; v < n; ++v) {
        if (subset_pos[v] < 0 || v == s1) {
            quotient_label[v] = static_cast<int>(out.quotient.vertices.size());
            out.quotient.vertices.push_back(v == s1 ? merge_kinds(all_white, any_ext)
                                                    : graph.vertices[v]);
        }
    }
    for (int v : ordered_s) quotient_label[v] = quotient_label[s1];

    out.induced.vertices.reserve(ordered_s.size());
    for (int v : ordered_s) out.induced.vertices.push_back(graph.vertices[v]);

    for (const Edge& e : graph.edges) {
        if (subset_pos[e.src] >= 0 && subset_pos[e.dst] >= 0) {
            out.induced.edges.push_back({e.kind, subset_pos[e.src], subset_pos[e.dst]});
        } else {
            out.quotient.edges.push_back({e.kind, quotient_label[e.src], quotient_label[e.dst]});
        }
    }
    return out;
}

LabeledGraph reclassify_blacks(const LabeledGraph& graph) {
    LabeledGraph out = graph;
    for (int v = 0; v < out.num_vertices(); ++v) {
        if (!is_black(out.vertices[v])) continue;
        out.vertices[v] = out.incident_degree(v, EdgeKind::Dashed) > 0 ? VertexKind::ExtBlack
                                                                       : VertexKind::IntBlack;
    }
    return out;
}

}  // namespace gh
