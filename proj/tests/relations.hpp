#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ghom/algebra.hpp"
#include "ghom/canonical.hpp"
#include "ghom/contract.hpp"
#include "ghom/formal.hpp"
#include "ghom/graph.hpp"

// Random instances of the defining relations of the graph algebra. Each
// instance is a pair of raw elements the relations declare equal; a valid
// implementation must give them the same normal form and the same image under
// the differential. Shared between the unit tests and the acceptance run.
namespace rel {

using Rng = std::mt19937_64;

struct Instance {
    gh::FormalSum lhs;
    gh::FormalSum rhs;
};

inline int pick(Rng& rng, int bound) {
    return static_cast<int>(rng() % static_cast<unsigned long long>(bound));
}

// A random connected generalized graph on 2..6 vertices without loops. Edges
// carry random orientations; extra edges may duplicate tree edges.
inline gh::LabeledGraph random_connected(Rng& rng, double white_prob = 0.33) {
    using namespace gh;
    int nv = 2 + pick(rng, 5);
    LabeledGraph g;
    g.vertices.resize(nv);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (auto& v : g.vertices)
        v = coin(rng) < white_prob ? VertexKind::White : VertexKind::ExtBlack;
    auto add = [&](int u, int v) {
        bool white = g.vertices[u] == VertexKind::White ||
                     g.vertices[v] == VertexKind::White;
        EdgeKind kind =
            white || rng() % 2 ? EdgeKind::Dashed : EdgeKind::Solid;
        if (rng() % 2) std::swap(u, v);
        g.edges.push_back({kind, u, v});
    };
    for (int v = 1; v < nv; ++v) add(pick(rng, v), v);
    for (int t = pick(rng, 3); t > 0; --t) {
        int u = pick(rng, nv), v = pick(rng, nv);
        if (u != v) add(u, v);
    }
    return reclassify_blacks(g);
}

// A random graph that is nonzero in the algebra, in raw form. Falls back to
// the solid path with a dashed pair, which survives at every parity.
inline gh::LabeledGraph random_survivor(Rng& rng, const gh::Ambient& amb) {
    using namespace gh;
    for (int tries = 0; tries < 400; ++tries) {
        auto g = random_connected(rng);
        if (reduce_graph(g, amb).kind == GraphReduction::Kind::Graph) return g;
    }
    LabeledGraph tri;
    tri.vertices = {VertexKind::ExtBlack, VertexKind::ExtBlack,
                    VertexKind::ExtBlack};
    tri.edges = {{EdgeKind::Solid, 0, 1},
                 {EdgeKind::Solid, 1, 2},
                 {EdgeKind::Dashed, 0, 2},
                 {EdgeKind::Dashed, 1, 2}};
    return tri;
}

inline gh::FormalSum one(const std::vector<gh::LabeledGraph>& seq,
                         const mpq_class& coeff = 1) {
    gh::FormalSum out;
    out.add(gh::encode_sequence(seq), coeff);
    return out;
}

// Relation (0a): a graph of negative normalized degree is zero.
inline Instance negative_degree(Rng& rng, const gh::Ambient& amb) {
    for (;;) {
        auto g = random_connected(rng, 0.7);
        if (gh::grading(g, amb).norm_deg < 0) return {one({g}), {}};
    }
}

// Relation (0b): a sequence whose total normalized degree exceeds n j - 1 is
// zero. Members are distinct survivors so no other relation applies.
inline Instance truncation(Rng& rng, const gh::Ambient& amb) {
    std::vector<gh::LabeledGraph> seq;
    std::set<std::string> seen;
    int total = 0;
    for (int tries = 0; tries < 4000 && total < amb.n * amb.j; ++tries) {
        auto g = random_survivor(rng, amb);
        auto r = gh::reduce_graph(g, amb);
        if (!seen.insert(gh::encode(r.graph)).second) continue;
        seq.push_back(g);
        total += gh::grading(g, amb).norm_deg;
    }
    if (total < amb.n * amb.j)
        throw std::runtime_error("no truncation instance found");
    return {one(seq), {}};
}

// Relation (1): orientation. Relabeling a survivor, flipping one edge, or
// transposing two adjacent edges in the listing costs the orientation sign.
inline Instance orientation(Rng& rng, const gh::Ambient& amb) {
    using namespace gh;
    auto g = random_survivor(rng, amb);
    switch (pick(rng, 3)) {
        case 0: {
            std::vector<int> perm(g.num_vertices());
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            return {one({apply_relabeling(g, perm)}),
                    one({g}, relabeling_sign(g, perm, amb))};
        }
        case 1: {
            int e = pick(rng, g.num_edges());
            auto flipped = g;
            std::swap(flipped.edges[e].src, flipped.edges[e].dst);
            int parity = flipped.edges[e].kind == EdgeKind::Dashed ? amb.n
                                                                   : amb.j;
            return {one({flipped}), one({g}, parity % 2 == 0 ? 1 : -1)};
        }
        default: {
            if (g.num_edges() < 2) return {one({g}), one({g})};
            int e = pick(rng, g.num_edges() - 1);
            auto swapped = g;
            std::swap(swapped.edges[e], swapped.edges[e + 1]);
            int da = edge_degree(g.edges[e].kind, amb);
            int db = edge_degree(g.edges[e + 1].kind, amb);
            return {one({swapped}), one({g}, (da * db) % 2 == 0 ? 1 : -1)};
        }
    }
}

// Relation (2): a doubled edge or a loop kills the graph.
inline Instance doubles_and_loops(Rng& rng, const gh::Ambient& amb) {
    using namespace gh;
    auto g = random_survivor(rng, amb);
    if (rng() % 2) {
        g.edges.push_back(g.edges[pick(rng, g.num_edges())]);
    } else {
        int v = pick(rng, g.num_vertices());
        EdgeKind kind = g.vertices[v] == VertexKind::White
                            ? EdgeKind::Dashed
                            : (rng() % 2 ? EdgeKind::Solid : EdgeKind::Dashed);
        g.edges.push_back({kind, v, v});
    }
    return {one({reclassify_blacks(g)}), {}};
}

// Relation (3): three or more vertices with no external black vertex is zero.
// All-white dashed trees and all-internal solid trees are the valid shapes.
inline Instance no_external(Rng& rng, const gh::Ambient& amb) {
    using namespace gh;
    (void)amb;
    int nv = 3 + pick(rng, 3);
    bool whites = rng() % 2;
    LabeledGraph g;
    g.vertices.assign(nv, whites ? VertexKind::White : VertexKind::IntBlack);
    for (int v = 1; v < nv; ++v) {
        int u = pick(rng, v);
        g.edges.push_back({whites ? EdgeKind::Dashed : EdgeKind::Solid, u, v});
        if (rng() % 2)
            std::swap(g.edges.back().src, g.edges.back().dst);
    }
    return {one({g}), {}};
}

// Relation (4a): gluing two graphs at a black vertex produces a black cut
// vertex, which kills the class.
inline Instance rescaling_black(Rng& rng, const gh::Ambient& amb) {
    using namespace gh;
    auto pick_black = [&](const LabeledGraph& g) {
        std::vector<int> blacks;
        for (int v = 0; v < g.num_vertices(); ++v)
            if (is_black(g.vertices[v])) blacks.push_back(v);
        return blacks.empty()
                   ? -1
                   : blacks[pick(rng, static_cast<int>(blacks.size()))];
    };
    for (;;) {
        auto g1 = random_survivor(rng, amb);
        auto g2 = random_survivor(rng, amb);
        int b1 = pick_black(g1), b2 = pick_black(g2);
        if (b1 < 0 || b2 < 0) continue;
        LabeledGraph glued = g1;
        int base = g1.num_vertices();
        for (int v = 0; v < g2.num_vertices(); ++v)
            if (v != b2) glued.vertices.push_back(g2.vertices[v]);
        auto remap = [&](int v) {
            if (v == b2) return b1;
            return base + v - (v > b2 ? 1 : 0);
        };
        for (const auto& e : g2.edges)
            glued.edges.push_back({e.kind, remap(e.src), remap(e.dst)});
        return {one({reclassify_blacks(glued)}), {}};
    }
}

// Relation (4b): a white cut vertex with an all-white branch kills the class.
// Attaching a white path to any vertex creates one (at the attachment point
// if white, at the path's first vertex otherwise -- and a black attachment
// point is itself a black cut vertex).
inline Instance rescaling_white(Rng& rng, const gh::Ambient& amb) {
    auto g = random_survivor(rng, amb);
    int v = pick(rng, g.num_vertices());
    int len = 1 + pick(rng, 2);
    int prev = v;
    for (int i = 0; i < len; ++i) {
        g.vertices.push_back(gh::VertexKind::White);
        g.edges.push_back({gh::EdgeKind::Dashed, prev, g.num_vertices() - 1});
        prev = g.num_vertices() - 1;
    }
    return {one({gh::reclassify_blacks(g)}), {}};
}

// The reattachment relation, with the sign computed here from scratch: for
// vertices v1, v2 and a full component C of the graph minus {v1, v2} (all
// white when v1 or v2 is white; v1 == v2 needs a second component), moving
// the v1/v2 ends of the edges that meet C relates the graph to
// (-1)^{n|W(C)| + j|B(C)| + j|solid(S)| + n|dashed(S)|} times the result.
inline Instance symmetry(Rng& rng, const gh::Ambient& amb) {
    using namespace gh;
    for (;;) {
        auto g = random_survivor(rng, amb);
        int nv = g.num_vertices();
        struct Move {
            int v1, v2;
            std::vector<int> comp;  // vertices of C
        };
        std::vector<Move> moves;
        for (int v1 = 0; v1 < nv; ++v1) {
            for (int v2 = v1; v2 < nv; ++v2) {
                // Components of the graph minus {v1, v2}.
                std::vector<int> id(nv, -1);
                for (int v = 0; v < nv; ++v)
                    if (v != v1 && v != v2) id[v] = v;
                auto root = [&](int v) {
                    while (id[v] != v) v = id[v] = id[id[v]];
                    return v;
                };
                for (const auto& e : g.edges) {
                    if (e.is_loop() || id[e.src] < 0 || id[e.dst] < 0)
                        continue;
                    id[root(e.src)] = root(e.dst);
                }
                std::set<int> roots;
                for (int v = 0; v < nv; ++v)
                    if (id[v] >= 0) roots.insert(root(v));
                if (v1 == v2 && roots.size() < 2) continue;
                for (int r : roots) {
                    std::vector<int> comp;
                    bool all_white = true;
                    for (int v = 0; v < nv; ++v)
                        if (id[v] >= 0 && root(v) == r) {
                            comp.push_back(v);
                            all_white &=
                                g.vertices[v] == VertexKind::White;
                        }
                    bool white_end =
                        g.vertices[v1] == VertexKind::White ||
                        g.vertices[v2] == VertexKind::White;
                    if (white_end && !all_white) continue;
                    moves.push_back({v1, v2, comp});
                }
            }
        }
        if (moves.empty()) continue;
        const auto& mv = moves[pick(rng, static_cast<int>(moves.size()))];
        std::set<int> in_c(mv.comp.begin(), mv.comp.end());
        long long expo = 0;
        for (int v : mv.comp)
            expo += g.vertices[v] == VertexKind::White ? amb.n : amb.j;
        LabeledGraph moved = g;
        for (auto& e : moved.edges) {
            bool meets = in_c.count(e.src) || in_c.count(e.dst);
            if (!meets) continue;
            expo += e.kind == EdgeKind::Dashed ? amb.n : amb.j;
            for (int* end : {&e.src, &e.dst}) {
                if (in_c.count(*end)) continue;
                if (*end == mv.v1)
                    *end = mv.v2;
                else if (*end == mv.v2)
                    *end = mv.v1;
            }
        }
        int sign = expo % 2 == 0 ? 1 : -1;
        return {one({g}), one({reclassify_blacks(moved)}, sign)};
    }
}

// Relation (5): the three two-vertex unit graphs act as the empty sequence.
// Units are presented in canonical vertex order (relabelings are the
// orientation family's business); a flipped edge contributes the edge sign.
inline Instance unit_member(Rng& rng, const gh::Ambient& amb) {
    using namespace gh;
    LabeledGraph u;
    EdgeKind kind = EdgeKind::Dashed;
    switch (pick(rng, 3)) {
        case 0:
            u.vertices = {VertexKind::White, VertexKind::White};
            break;
        case 1:
            u.vertices = {VertexKind::ExtBlack, VertexKind::White};
            break;
        default:
            u.vertices = {VertexKind::IntBlack, VertexKind::IntBlack};
            kind = EdgeKind::Solid;
            break;
    }
    bool flip = rng() % 2;
    u.edges = {flip ? Edge{kind, 1, 0} : Edge{kind, 0, 1}};
    int sign = !flip || (kind == EdgeKind::Dashed ? amb.n : amb.j) % 2 == 0
                   ? 1
                   : -1;
    std::vector<LabeledGraph> with{random_survivor(rng, amb)},
        without = with;
    int slot = pick(rng, 2);
    with.insert(with.begin() + slot, u);
    if (rng() % 2) {
        auto extra = random_survivor(rng, amb);
        with.push_back(extra);
        without.push_back(extra);
    }
    return {one(with), one(without, sign)};
}

// Relation (6): reordering a sequence costs the Koszul sign of the permuted
// normalized degrees.
inline Instance koszul(Rng& rng, const gh::Ambient& amb) {
    int len = 2 + pick(rng, 2);
    std::vector<gh::LabeledGraph> seq;
    for (int i = 0; i < len; ++i)
        seq.push_back(random_survivor(rng, amb));
    std::vector<int> perm(len);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<gh::LabeledGraph> permuted;
    for (int i : perm) permuted.push_back(seq[i]);
    // Sign via explicit adjacent transpositions back to the identity.
    long long expo = 0;
    std::vector<int> work = perm;
    for (int i = 0; i < len; ++i) {
        int at = static_cast<int>(std::find(work.begin(), work.end(), i) -
                                  work.begin());
        for (int p = at; p > i; --p) {
            expo += gh::grading(seq[work[p]], amb).norm_deg *
                    gh::grading(seq[work[p - 1]], amb).norm_deg;
            std::swap(work[p], work[p - 1]);
        }
    }
    return {one(permuted), one(seq, expo % 2 == 0 ? 1 : -1)};
}

struct Family {
    const char* name;
    Instance (*make)(Rng&, const gh::Ambient&);
};

inline std::vector<Family> families() {
    return {{"negative degree", negative_degree},
            {"truncation", truncation},
            {"orientation", orientation},
            {"doubles and loops", doubles_and_loops},
            {"no external vertex", no_external},
            {"rescaling at black", rescaling_black},
            {"rescaling at white", rescaling_white},
            {"reattachment", symmetry},
            {"unit member", unit_member},
            {"sequence reorder", koszul}};
}

// Both sides normalize identically and differentiate identically.
inline bool holds(const Instance& inst, const gh::Ambient& amb) {
    using namespace gh;
    if (!(normalize_algebra(inst.lhs, amb) ==
          normalize_algebra(inst.rhs, amb)))
        return false;
    FormalSum dl, dr;
    for (const auto& [key, coeff] : inst.lhs.terms)
        dl += d_sequence_raw(decode_sequence(key), coeff, amb);
    for (const auto& [key, coeff] : inst.rhs.terms)
        dr += d_sequence_raw(decode_sequence(key), coeff, amb);
    return dl == dr;
}

}  // namespace rel
