#include "ghom/sign.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace gh {

namespace {

int sign_pow(long long exponent) { return (exponent % 2 + 2) % 2 == 0 ? 1 : -1; }

bool parity_odd(long long value) { return (value % 2 + 2) % 2 == 1; }

}  // namespace

int koszul_sign(const std::vector<GradedSymbol>& source, const std::vector<int>& target_ids) {
    if (source.size() != target_ids.size()) {
        throw std::invalid_argument("koszul_sign: word lengths differ");
    }
    std::unordered_map<int, int> position;
    position.reserve(source.size());
    for (int i = 0; i < static_cast<int>(source.size()); ++i) {
        if (!position.emplace(source[i].id, i).second) {
            throw std::invalid_argument("koszul_sign: duplicate symbol id");
        }
    }
    std::vector<int> order(target_ids.size());
    std::vector<char> seen(source.size(), 0);
    for (int t = 0; t < static_cast<int>(target_ids.size()); ++t) {
        auto it = position.find(target_ids[t]);
        if (it == position.end() || seen[it->second]) {
            throw std::invalid_argument("koszul_sign: target is not a permutation of source");
        }
        seen[it->second] = 1;
        order[t] = it->second;
    }
    std::vector<int> degrees(source.size());
    for (size_t i = 0; i < source.size(); ++i) degrees[i] = source[i].degree;
    return koszul_sign_of_order(degrees, order);
}

int koszul_sign_of_order(const std::vector<int>& degrees, const std::vector<int>& order) {
    int sign = 1;
    const int n = static_cast<int>(order.size());
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (order[a] > order[b] &&
                parity_odd(static_cast<long long>(degrees[order[a]]) * degrees[order[b]])) {
                sign = -sign;
            }
        }
    }
    return sign;
}

std::vector<int> ordered_subset(const LabeledGraph& graph, std::vector<int> labels) {
    std::sort(labels.begin(), labels.end());
    int base = -1;
    for (int v : labels) {
        if (is_black(graph.vertices.at(v))) {
            base = v;
            break;
        }
    }
    if (base < 0) base = labels.front();
    std::vector<int> out;
    out.reserve(labels.size());
    out.push_back(base);
    for (int v : labels) {
        if (v != base) out.push_back(v);
    }
    return out;
}

namespace {

// Symbol ids for orientation words: mu = 0, edge i = 1 + i, vertex v =
// 1 + |E| + v, suspension symbols beyond that.
struct WordIds {
    int mu = 0;
    int edge_base = 1;
    int vertex_base = 0;
    explicit WordIds(const LabeledGraph& graph)
        : vertex_base(1 + graph.num_edges()) {}
    int edge(int i) const { return edge_base + i; }
    int vertex(int v) const { return vertex_base + v; }
};

std::vector<GradedSymbol> orientation_word(const LabeledGraph& graph, const Ambient& amb,
                                           const WordIds& ids) {
    std::vector<GradedSymbol> word;
    word.reserve(1 + graph.num_edges() + graph.num_vertices());
    word.push_back({ids.mu, 1});
    for (int i = 0; i < graph.num_edges(); ++i) {
        word.push_back({ids.edge(i), edge_degree(graph.edges[i].kind, amb)});
    }
    for (int v = graph.num_vertices() - 1; v >= 0; --v) {
        word.push_back({ids.vertex(v), vertex_degree(graph.vertices[v], amb)});
    }
    return word;
}

}  // namespace

int edge_contraction_sign(const LabeledGraph& graph, int edge_index, const Ambient& amb) {
    const Edge& e = graph.edges.at(edge_index);
    if (e.is_loop()) throw std::invalid_argument("edge_contraction_sign: loop edge");
    const WordIds ids(graph);
    const std::vector<GradedSymbol> source = orientation_word(graph, amb, ids);

    const int q = e.high();
    std::vector<int> target;
    target.reserve(source.size());
    for (int i = 0; i < graph.num_edges(); ++i) {
        if (i != edge_index) target.push_back(ids.edge(i));
    }
    target.push_back(ids.mu);
    target.push_back(ids.edge(edge_index));
    target.push_back(ids.vertex(q));
    for (int v = graph.num_vertices() - 1; v >= 0; --v) {
        if (v != q) target.push_back(ids.vertex(v));
    }
    return koszul_sign(source, target) * eta_edge(graph, edge_index, amb);
}

int tau_edge(const LabeledGraph& graph, int edge_index, const Ambient& amb) {
    const int de = edge_degree(graph.edges.at(edge_index).kind, amb);
    long long after = 0;
    for (int i = edge_index + 1; i < graph.num_edges(); ++i) {
        after += edge_degree(graph.edges[i].kind, amb);
    }
    return sign_pow(static_cast<long long>(de) * after);
}

int phi_edge(const LabeledGraph& graph, int edge_index, const Ambient& amb) {
    const int q = graph.edges.at(edge_index).high();
    const int dq = vertex_degree(graph.vertices.at(q), amb);
    long long larger = 0;
    for (int v = q + 1; v < graph.num_vertices(); ++v) {
        larger += vertex_degree(graph.vertices[v], amb);
    }
    return sign_pow(static_cast<long long>(dq) * larger);
}

int eta_edge(const LabeledGraph& graph, int edge_index, const Ambient& amb) {
    const Edge& e = graph.edges.at(edge_index);
    if (e.src <= e.dst) return 1;
    return sign_pow(edge_degree(e.kind, amb) + 1);
}

int edge_contraction_sign_closed(const LabeledGraph& graph, int edge_index, const Ambient& amb) {
    long long rest = 0;
    for (int i = 0; i < graph.num_edges(); ++i) {
        if (i != edge_index) rest += edge_degree(graph.edges[i].kind, amb);
    }
    return tau_edge(graph, edge_index, amb) * phi_edge(graph, edge_index, amb) *
           eta_edge(graph, edge_index, amb) * sign_pow(rest);
}

namespace {

struct SubsetInfo {
    std::vector<char> in_subset;        // by vertex label
    std::vector<char> in_tail;          // S minus s1, by vertex label
    std::vector<char> edge_internal;    // by edge index
    int merged_degree = 0;              // degree of the merged-vertex kind
    long long edge_deg_total = 0;       // dE
    long long edge_deg_internal = 0;    // dES
    long long vertex_deg_total = 0;     // dV
    long long tail_deg = 0;             // dS (S minus s1)
};

SubsetInfo analyze_subset(const LabeledGraph& graph, const std::vector<int>& ordered_s,
                          const Ambient& amb) {
    if (ordered_s.empty()) throw std::invalid_argument("subset sign: empty subset");
    SubsetInfo info;
    info.in_subset.assign(graph.num_vertices(), 0);
    info.in_tail.assign(graph.num_vertices(), 0);
    bool has_black = false;
    for (size_t i = 0; i < ordered_s.size(); ++i) {
        const int v = ordered_s[i];
        info.in_subset.at(v) = 1;
        if (i > 0) info.in_tail.at(v) = 1;
        if (is_black(graph.vertices.at(v))) has_black = true;
    }
    info.merged_degree =
        vertex_degree(has_black ? VertexKind::ExtBlack : VertexKind::White, amb);
    info.edge_internal.assign(graph.num_edges(), 0);
    for (int i = 0; i < graph.num_edges(); ++i) {
        const Edge& e = graph.edges[i];
        const int de = edge_degree(e.kind, amb);
        info.edge_deg_total += de;
        if (info.in_subset[e.src] && info.in_subset[e.dst]) {
            info.edge_internal[i] = 1;
            info.edge_deg_internal += de;
        }
    }
    for (int v = 0; v < graph.num_vertices(); ++v) {
        const int dv = vertex_degree(graph.vertices[v], amb);
        info.vertex_deg_total += dv;
        if (info.in_tail[v]) info.tail_deg += dv;
    }
    return info;
}

}  // namespace

int subset_contraction_sign(const LabeledGraph& graph, const std::vector<int>& ordered_s,
                            const Ambient& amb) {
    const SubsetInfo info = analyze_subset(graph, ordered_s, amb);
    const WordIds ids(graph);
    const int i1 = ids.vertex(graph.num_vertices());
    const int i2 = i1 + 1;

    std::vector<GradedSymbol> source = orientation_word(graph, amb, ids);
    source.push_back({i1, info.merged_degree});
    source.push_back({i2, 1});

    std::vector<int> target;
    target.reserve(source.size());
    for (int i = 0; i < graph.num_edges(); ++i) {
        if (!info.edge_internal[i]) target.push_back(ids.edge(i));
    }
    const int s1 = ordered_s.front();
    for (int v = graph.num_vertices() - 1; v >= 0; --v) {
        if (!info.in_subset[v] || v == s1) target.push_back(ids.vertex(v));
    }
    target.push_back(i1);
    target.push_back(i2);
    for (int i = 0; i < graph.num_edges(); ++i) {
        if (info.edge_internal[i]) target.push_back(ids.edge(i));
    }
    for (int v = graph.num_vertices() - 1; v >= 0; --v) {
        if (info.in_tail[v]) target.push_back(ids.vertex(v));
    }
    target.push_back(ids.mu);
    return -koszul_sign(source, target);
}

int tau_subset(const LabeledGraph& graph, const std::vector<int>& ordered_s, const Ambient& amb) {
    const SubsetInfo info = analyze_subset(graph, ordered_s, amb);
    long long exponent = 0;
    long long internal_before = 0;
    for (int i = 0; i < graph.num_edges(); ++i) {
        const int de = edge_degree(graph.edges[i].kind, amb);
        if (info.edge_internal[i]) {
            internal_before += de;
        } else {
            exponent += internal_before * de;
        }
    }
    return sign_pow(exponent);
}

int phi_subset(const LabeledGraph& graph, const std::vector<int>& ordered_s, const Ambient& amb) {
    const SubsetInfo info = analyze_subset(graph, ordered_s, amb);
    long long exponent = 0;
    long long tail_before = 0;
    // Walk the reversed vertex word; tail symbols jump right over later ones.
    for (int v = graph.num_vertices() - 1; v >= 0; --v) {
        const int dv = vertex_degree(graph.vertices[v], amb);
        if (info.in_tail[v]) {
            tail_before += dv;
        } else {
            exponent += tail_before * dv;
        }
    }
    return sign_pow(exponent);
}

int subset_contraction_sign_closed(const LabeledGraph& graph, const std::vector<int>& ordered_s,
                                   const Ambient& amb) {
    const SubsetInfo info = analyze_subset(graph, ordered_s, amb);
    const long long m1 = info.merged_degree;
    const long long x = (info.edge_deg_total + info.vertex_deg_total + m1 + 1) +
                        info.edge_deg_internal *
                            (info.vertex_deg_total + info.tail_deg + m1 + 1) +
                        info.tail_deg * (m1 + 1);
    return sign_pow(x + 1) * tau_subset(graph, ordered_s, amb) *
           phi_subset(graph, ordered_s, amb);
}

int horizontal_contraction_sign(const LabeledGraph& plain, const std::vector<int>& ordered_s,
                                int total_degree, const Ambient& amb) {
    const SubsetInfo info = analyze_subset(plain, ordered_s, amb);
    const long long contracted_vertex_deg = info.vertex_deg_total - info.tail_deg;
    return sign_pow(static_cast<long long>(total_degree) + 1 + contracted_vertex_deg) *
           tau_subset(plain, ordered_s, amb) * phi_subset(plain, ordered_s, amb);
}

}  // namespace gh
