#include "ghom/enumerate.hpp"

#include <algorithm>
#include <map>

#include "ghom/canonical.hpp"

namespace gh {

const char* complex_kind_name(ComplexKind kind) {
    switch (kind) {
        case ComplexKind::Plain: return "plain";
        case ComplexKind::PlainLoops: return "plain-loops";
        case ComplexKind::Hairy: return "hairy";
        case ComplexKind::Chord: return "chord";
        case ComplexKind::AlgebraGen: return "algebra";
        case ComplexKind::DecoratedPlain: return "decorated-plain";
    }
    return "?";
}

namespace {

struct FamilyRules {
    bool allow_int = true;
    bool allow_white = true;
    bool allow_solid = true;
    int ext_dashed_cap = -1;  // -1: unbounded
    int bare_ext_cap = 0;     // externals allowed to have no dashed edge
    bool allow_single_point = false;
};

FamilyRules rules_for(ComplexKind kind, int max_bare_ext) {
    FamilyRules r;
    switch (kind) {
        case ComplexKind::Plain:
        case ComplexKind::PlainLoops:
        case ComplexKind::AlgebraGen:
            break;
        case ComplexKind::Hairy:
            r.allow_int = false;
            r.allow_solid = false;
            r.ext_dashed_cap = 1;
            break;
        case ComplexKind::Chord:
            r.allow_int = false;
            r.allow_white = false;
            break;
        case ComplexKind::DecoratedPlain:
            r.bare_ext_cap = max_bare_ext;
            r.allow_single_point = true;
            break;
    }
    return r;
}

// Generates connected graphs with fixed vertex blocks (ext | int | white) and
// fixed edge counts per kind as two lexicographically non-decreasing pair
// sequences. Vertices enter in first-use order inside their block, which
// removes most relabelings of the same class; residual copies collapse in the
// canonical set.
struct Generator {
    FamilyRules rules;
    Ambient amb;
    int be, bi, w;
    int n_vertices;
    int e_dashed, e_solid;
    long long* budget;

    std::map<std::string, LabeledGraph>* out = nullptr;
    std::vector<int> dval, sval;
    std::vector<Edge> dashed_edges, solid_edges;
    // first-use frontier per block: ext [0, be), int [be, be+bi), white [be+bi, n)
    int fresh_ext = 0, fresh_int = 0, fresh_white = 0;

    bool is_ext(int v) const { return v < be; }
    bool is_int(int v) const { return v >= be && v < be + bi; }

    int& fresh_of(int v) { return is_ext(v) ? fresh_ext : (is_int(v) ? fresh_int : fresh_white); }
    int block_base(int v) const { return is_ext(v) ? 0 : (is_int(v) ? be : be + bi); }

    bool usable(int v) { return v - block_base(v) <= fresh_of(v); }

    void charge() {
        if (budget && --(*budget) < 0) throw BudgetExceeded("enumeration budget exceeded");
    }

    // Half-edges still required to reach the dashed valence floors, counting
    // vertices not yet introduced. Bare externals up to the allowance are
    // forgiven.
    long long dashed_need() const {
        long long need = 0;
        for (int v = be + bi; v < be + bi + fresh_white; ++v) need += std::max(0, 3 - dval[v]);
        need += 3LL * (w - fresh_white);
        long long ext_need = be - fresh_ext;
        for (int v = 0; v < fresh_ext; ++v) ext_need += dval[v] == 0 ? 1 : 0;
        need += std::max(0LL, ext_need - rules.bare_ext_cap);
        return need;
    }

    long long solid_need() const {
        long long need = 0;
        for (int v = be; v < be + fresh_int; ++v) need += std::max(0, 3 - sval[v]);
        need += 3LL * (bi - fresh_int);
        return need;
    }

    void run(std::map<std::string, LabeledGraph>& sink) {
        out = &sink;
        dval.assign(n_vertices, 0);
        sval.assign(n_vertices, 0);
        dashed_layer(e_dashed, 0, -1);
    }

    // Candidate endpoints of the dashed layer: externals and whites.
    bool dashed_vertex(int v) const { return is_ext(v) || v >= be + bi; }

    void dashed_layer(int left, int last_u, int last_v) {
        charge();
        if (dashed_need() > 2LL * left) return;
        if (left == 0) {
            if (fresh_white != w) return;
            for (int v = be + bi; v < n_vertices; ++v) {
                if (dval[v] < 3) return;
            }
            int bare = be;
            for (int v = 0; v < be; ++v) bare -= dval[v] > 0 ? 1 : 0;
            if (bare > rules.bare_ext_cap) return;
            solid_layer(e_solid, 0, -1);
            return;
        }
        for (int u = last_u; u < n_vertices; ++u) {
            // Vertices below u can no longer gain dashed edges or activate, so
            // unmet floors and unreachable frontiers persist for larger u.
            if (u - 1 >= be + bi && u - 1 < be + bi + fresh_white && dval[u - 1] < 3) return;
            if (fresh_white < w && be + bi + fresh_white < u) return;
            if (fresh_ext < be && fresh_ext < u && be - fresh_ext > rules.bare_ext_cap) return;
            if (!dashed_vertex(u) || !usable(u)) continue;
            const int saved_fu = fresh_of(u);
            if (u - block_base(u) == saved_fu) ++fresh_of(u);
            const int v_start = u == last_u ? std::max(u, last_v) : u;
            for (int v = v_start; v < n_vertices; ++v) {
                if (!dashed_vertex(v) || !usable(v)) continue;
                const int saved_fv = fresh_of(v);
                if (v - block_base(v) == saved_fv) ++fresh_of(v);
                dval[u] += u == v ? 2 : 1;
                if (u != v) dval[v] += 1;
                const bool capped = rules.ext_dashed_cap >= 0 &&
                                    ((is_ext(u) && dval[u] > rules.ext_dashed_cap) ||
                                     (is_ext(v) && dval[v] > rules.ext_dashed_cap));
                if (!capped) {
                    dashed_edges.push_back({EdgeKind::Dashed, u, v});
                    dashed_layer(left - 1, u, v);
                    dashed_edges.pop_back();
                }
                dval[u] -= u == v ? 2 : 1;
                if (u != v) dval[v] -= 1;
                fresh_of(v) = saved_fv;
            }
            fresh_of(u) = saved_fu;
        }
    }

    void solid_layer(int left, int last_u, int last_v) {
        charge();
        if (solid_need() > 2LL * left) return;
        if (left == 0) {
            finalize();
            return;
        }
        for (int u = last_u; u < be + bi; ++u) {
            // Vertices below u are complete; unmet solid floors and unreachable
            // frontiers persist for larger u.
            if (u - 1 >= be && u - 1 < be + fresh_int && sval[u - 1] < 3) return;
            if (fresh_int < bi && be + fresh_int < u) return;
            if (fresh_ext < be && fresh_ext < u) return;
            if (!usable(u)) continue;
            const int saved_fu = fresh_of(u);
            if (u - block_base(u) == saved_fu) ++fresh_of(u);
            const int v_start = u == last_u ? std::max(u, last_v) : u;
            for (int v = v_start; v < be + bi; ++v) {
                if (!usable(v)) continue;
                const int saved_fv = fresh_of(v);
                if (v - block_base(v) == saved_fv) ++fresh_of(v);
                sval[u] += u == v ? 2 : 1;
                if (u != v) sval[v] += 1;
                solid_edges.push_back({EdgeKind::Solid, u, v});
                solid_layer(left - 1, u, v);
                solid_edges.pop_back();
                sval[u] -= u == v ? 2 : 1;
                if (u != v) sval[v] -= 1;
                fresh_of(v) = saved_fv;
            }
            fresh_of(u) = saved_fu;
        }
    }

    void finalize() {
        if (fresh_ext != be || fresh_int != bi || fresh_white != w) return;
        for (int v = be; v < be + bi; ++v) {
            if (sval[v] < 3) return;
        }
        LabeledGraph graph;
        graph.vertices.reserve(n_vertices);
        for (int v = 0; v < be; ++v) graph.vertices.push_back(VertexKind::ExtBlack);
        for (int v = 0; v < bi; ++v) graph.vertices.push_back(VertexKind::IntBlack);
        for (int v = 0; v < w; ++v) graph.vertices.push_back(VertexKind::White);
        graph.edges = solid_edges;
        graph.edges.insert(graph.edges.end(), dashed_edges.begin(), dashed_edges.end());
        if (!graph.is_connected()) return;
        SignedClass cls = canonicalize(graph, amb);
        if (cls.zero) return;
        out->emplace(encode(cls.graph), cls.graph);
    }
};

}  // namespace

std::vector<LabeledGraph> enumerate_basis(ComplexKind kind, int k, int g, const Ambient& amb,
                                          long long* budget, int max_bare_ext) {
    amb.require_valid();
    const FamilyRules rules = rules_for(kind, max_bare_ext);
    std::map<std::string, LabeledGraph> found;

    if (rules.allow_single_point && rules.bare_ext_cap >= 1 && k == 0 && g == 0) {
        LabeledGraph point;
        point.vertices.push_back(VertexKind::ExtBlack);
        found.emplace(encode(point), point);
    }
    if (kind != ComplexKind::DecoratedPlain && k < 1) {
        return {};
    }

    const int w_max = rules.allow_white ? 2 * k : 0;
    const int be_max = 7 * k + 2 * std::max(g, 1) + rules.bare_ext_cap;
    for (int w = 0; w <= w_max; ++w) {
        const int e_dashed = k + w;
        if (e_dashed < 0 || e_dashed > 3 * k) continue;
        if (2 * e_dashed < 3 * w) continue;
        for (int be = 0; be <= be_max; ++be) {
            if (2 * e_dashed < 3 * w + be - rules.bare_ext_cap) continue;
            const int bi_max = rules.allow_int ? 2 * (7 * k + std::max(g - 1, 0)) + 2 : 0;
            for (int bi = 0; bi <= bi_max; ++bi) {
                const int e_solid = be + bi + g - 1 - k;
                if (e_solid < 0) continue;
                if (!rules.allow_solid && e_solid != 0) continue;
                if (2 * e_solid < 3 * bi) continue;
                const int n_vertices = be + bi + w;
                if (n_vertices == 0 || e_dashed + e_solid == 0) continue;
                Generator gen{rules, amb, be, bi, w, n_vertices, e_dashed, e_solid, budget};
                gen.run(found);
            }
        }
    }

    std::vector<LabeledGraph> basis;
    basis.reserve(found.size());
    for (auto& [key, graph] : found) basis.push_back(std::move(graph));
    return basis;
}

}  // namespace gh
