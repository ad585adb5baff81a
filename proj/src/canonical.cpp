#include "ghom/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "ghom/sign.hpp"

namespace gh {

namespace {

int sign_pow(long long exponent) { return (exponent % 2 + 2) % 2 == 0 ? 1 : -1; }

// Equitable vertex partition: start from (kind, valences, loop counts) and
// refine by sorted neighbor-class multisets until stable. Class ranks come
// from sorting the signature values, so isomorphic graphs refine identically.
std::vector<int> equitable_colors(const LabeledGraph& g, int* num_colors_out) {
    const int n = g.num_vertices();
    std::vector<std::tuple<int, int, int, int, int>> base(n);
    for (int v = 0; v < n; ++v) {
        int dloop = 0, sloop = 0;
        for (const Edge& e : g.edges) {
            if (e.is_loop() && e.src == v) {
                (e.kind == EdgeKind::Dashed ? dloop : sloop)++;
            }
        }
        base[v] = {static_cast<int>(g.vertices[v]), g.incident_degree(v, EdgeKind::Dashed),
                   g.incident_degree(v, EdgeKind::Solid), dloop, sloop};
    }
    std::vector<int> color(n);
    {
        auto sorted = base;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (int v = 0; v < n; ++v) {
            color[v] = static_cast<int>(
                std::lower_bound(sorted.begin(), sorted.end(), base[v]) - sorted.begin());
        }
    }
    int classes = 0;
    for (int v = 0; v < n; ++v) classes = std::max(classes, color[v] + 1);
    while (true) {
        using Sig = std::pair<int, std::vector<std::pair<int, int>>>;
        std::vector<Sig> sig(n);
        for (int v = 0; v < n; ++v) sig[v].first = color[v];
        for (const Edge& e : g.edges) {
            const int kind = static_cast<int>(e.kind);
            if (e.is_loop()) {
                sig[e.src].second.push_back({kind, color[e.src]});
            } else {
                sig[e.src].second.push_back({kind, color[e.dst]});
                sig[e.dst].second.push_back({kind, color[e.src]});
            }
        }
        for (int v = 0; v < n; ++v) std::sort(sig[v].second.begin(), sig[v].second.end());
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        if (static_cast<int>(sorted.size()) == classes) break;
        classes = static_cast<int>(sorted.size());
        for (int v = 0; v < n; ++v) {
            color[v] = static_cast<int>(
                std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
        }
    }
    if (num_colors_out) *num_colors_out = classes;
    return color;
}

using StepGroup = std::vector<std::pair<int, int>>;  // sorted (kind, neighbor new label)

struct CanonicalSearch {
    const LabeledGraph& g;
    const Ambient& amb;
    int n;
    bool collect_all;
    long long budget = 5'000'000;

    std::vector<int> cell_at_position;        // new label -> cell id
    std::vector<std::vector<int>> cells;      // cell id -> old vertex ids, ascending
    std::vector<int> assigned_new;            // old vertex -> new label or -1
    std::vector<StepGroup> best_seq;
    bool best_complete = false;
    std::vector<std::vector<int>> labelings;
    std::vector<int> signs;
    std::vector<std::vector<int>> automorphisms;  // old -> old
    bool odd_automorphism = false;

    CanonicalSearch(const LabeledGraph& graph, const Ambient& ambient, bool all)
        : g(graph), amb(ambient), n(graph.num_vertices()), collect_all(all) {
        int classes = 0;
        std::vector<int> color = equitable_colors(g, &classes);
        cells.assign(classes, {});
        for (int v = 0; v < n; ++v) cells[color[v]].push_back(v);
        for (int c = 0; c < classes; ++c) {
            for (size_t i = 0; i < cells[c].size(); ++i) cell_at_position.push_back(c);
        }
        assigned_new.assign(n, -1);
    }

    StepGroup step_group(int v, int t) const {
        StepGroup group;
        for (const Edge& e : g.edges) {
            if (e.src == v && e.dst == v) {
                group.push_back({static_cast<int>(e.kind), t});
            } else if (e.src == v && assigned_new[e.dst] >= 0) {
                group.push_back({static_cast<int>(e.kind), assigned_new[e.dst]});
            } else if (e.dst == v && assigned_new[e.src] >= 0) {
                group.push_back({static_cast<int>(e.kind), assigned_new[e.src]});
            }
        }
        std::sort(group.begin(), group.end());
        return group;
    }

    void leaf() {
        std::vector<int> labeling = assigned_new;
        const int sign = relabeling_sign(g, labeling, amb);
        if (best_complete) {
            if (sign != signs.front()) odd_automorphism = true;
            if (collect_all) {
                labelings.push_back(labeling);
                signs.push_back(sign);
            }
            // alpha maps old vertex -> old vertex at the same canonical slot
            // of the first labeling found.
            std::vector<int> base_inverse(n);
            for (int v = 0; v < n; ++v) base_inverse[labelings.front()[v]] = v;
            std::vector<int> alpha(n);
            for (int v = 0; v < n; ++v) alpha[v] = base_inverse[labeling[v]];
            automorphisms.push_back(std::move(alpha));
        } else {
            labelings.push_back(std::move(labeling));
            signs.push_back(sign);
            best_complete = true;
        }
    }

    void dfs(int t) {
        if (!collect_all && odd_automorphism) return;
        if (--budget < 0) throw std::runtime_error("canonical search budget exceeded");
        if (t == n) {
            leaf();
            return;
        }
        const int cell = cell_at_position[t];
        std::vector<int> candidates;
        for (int v : cells[cell]) {
            if (assigned_new[v] < 0) candidates.push_back(v);
        }
        if (!collect_all && automorphisms.size() > 0) prune_orbits(candidates);
        for (int v : candidates) {
            StepGroup group = step_group(v, t);
            if (t < static_cast<int>(best_seq.size())) {
                if (group > best_seq[t]) continue;
                if (group < best_seq[t]) {
                    best_seq.resize(t);
                    best_seq.push_back(std::move(group));
                    reset_records();
                }
            } else {
                best_seq.push_back(std::move(group));
            }
            assigned_new[v] = t;
            dfs(t + 1);
            assigned_new[v] = -1;
            if (!collect_all && odd_automorphism) return;
        }
    }

    void reset_records() {
        best_complete = false;
        labelings.clear();
        signs.clear();
        automorphisms.clear();
        odd_automorphism = false;
    }

    // Keep one candidate per orbit of the automorphisms fixing the assigned
    // prefix pointwise; the skipped branches repeat already-recorded leaves.
    void prune_orbits(std::vector<int>& candidates) const {
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        bool any = false;
        for (const std::vector<int>& alpha : automorphisms) {
            bool fixes = true;
            for (int v = 0; v < n && fixes; ++v) {
                if (assigned_new[v] >= 0 && alpha[v] != v) fixes = false;
            }
            if (!fixes) continue;
            any = true;
            for (int v = 0; v < n; ++v) {
                int a = find(v), b = find(alpha[v]);
                if (a != b) parent[a] = b;
            }
        }
        if (!any) return;
        std::vector<int> kept;
        std::vector<char> seen(n, 0);
        for (int v : candidates) {
            int root = find(v);
            if (!seen[root]) {
                seen[root] = 1;
                kept.push_back(v);
            }
        }
        candidates = std::move(kept);
    }
};

}  // namespace

int relabeling_sign(const LabeledGraph& graph, const std::vector<int>& old_to_new,
                    const Ambient& amb) {
    const int n = graph.num_vertices();
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[old_to_new[v]] = v;
    std::vector<int> vdeg(n);
    for (int v = 0; v < n; ++v) vdeg[v] = vertex_degree(graph.vertices[v], amb);
    int sign = koszul_sign_of_order(vdeg, order);

    const int m = graph.num_edges();
    std::vector<std::tuple<int, int, int>> keys(m);
    std::vector<int> edeg(m);
    for (int i = 0; i < m; ++i) {
        const Edge& e = graph.edges[i];
        const int a = old_to_new[e.src];
        const int b = old_to_new[e.dst];
        if (a > b) sign *= sign_pow(edge_degree(e.kind, amb) + 1);
        keys[i] = {static_cast<int>(e.kind), std::min(a, b), std::max(a, b)};
        edeg[i] = edge_degree(e.kind, amb);
    }
    std::vector<int> sort_order(m);
    std::iota(sort_order.begin(), sort_order.end(), 0);
    std::stable_sort(sort_order.begin(), sort_order.end(),
                     [&](int a, int b) { return keys[a] < keys[b]; });
    sign *= koszul_sign_of_order(edeg, sort_order);
    return sign;
}

LabeledGraph apply_relabeling(const LabeledGraph& graph, const std::vector<int>& old_to_new) {
    const int n = graph.num_vertices();
    LabeledGraph out;
    out.vertices.resize(n);
    for (int v = 0; v < n; ++v) out.vertices[old_to_new[v]] = graph.vertices[v];
    out.edges.reserve(graph.edges.size());
    for (const Edge& e : graph.edges) {
        const int a = old_to_new[e.src];
        const int b = old_to_new[e.dst];
        out.edges.push_back({e.kind, std::min(a, b), std::max(a, b)});
    }
    std::stable_sort(out.edges.begin(), out.edges.end(), [](const Edge& a, const Edge& b) {
        return std::tuple(a.kind, a.src, a.dst) < std::tuple(b.kind, b.src, b.dst);
    });
    return out;
}

bool parity_kills(const LabeledGraph& graph, const Ambient& amb) {
    for (const Edge& e : graph.edges) {
        if (e.is_loop() && sign_pow(edge_degree(e.kind, amb) + 1) < 0) return true;
    }
    for (int i = 0; i < graph.num_edges(); ++i) {
        const Edge& a = graph.edges[i];
        for (int k = i + 1; k < graph.num_edges(); ++k) {
            const Edge& b = graph.edges[k];
            if (a.kind == b.kind && a.low() == b.low() && a.high() == b.high() &&
                sign_pow(edge_degree(a.kind, amb)) < 0) {
                return true;
            }
        }
    }
    return false;
}

SignedClass canonicalize(const LabeledGraph& graph, const Ambient& amb) {
    SignedClass out;
    if (parity_kills(graph, amb)) {
        out.zero = true;
        return out;
    }
    CanonicalSearch search(graph, amb, /*collect_all=*/false);
    search.dfs(0);
    if (search.odd_automorphism) {
        out.zero = true;
        return out;
    }
    out.graph = apply_relabeling(graph, search.labelings.front());
    out.sign = search.signs.front();
    return out;
}

CanonicalLabelings canonical_labelings(const LabeledGraph& graph, const Ambient& amb) {
    CanonicalSearch search(graph, amb, /*collect_all=*/true);
    search.dfs(0);
    CanonicalLabelings out;
    out.graph = apply_relabeling(graph, search.labelings.front());
    out.labelings = std::move(search.labelings);
    out.signs = std::move(search.signs);
    return out;
}

}  // namespace gh
