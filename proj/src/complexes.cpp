#include "ghom/complexes.hpp"

#include <stdexcept>

#include "ghom/canonical.hpp"
#include "ghom/contract.hpp"
#include "ghom/sign.hpp"

namespace gh {

namespace {

bool same_kind_double(const LabeledGraph& g, int e) {
    const Edge& ed = g.edges[e];
    for (int f = 0; f < g.num_edges(); ++f) {
        if (f == e) continue;
        const Edge& other = g.edges[f];
        if (other.kind == ed.kind && other.low() == ed.low() &&
            other.high() == ed.high())
            return true;
    }
    return false;
}

bool is_hair(const LabeledGraph& g, int e) {
    const Edge& ed = g.edges[e];
    return ed.kind == EdgeKind::Dashed &&
           (g.vertices[ed.src] == VertexKind::ExtBlack ||
            g.vertices[ed.dst] == VertexKind::ExtBlack);
}

bool has_double_or_loop(const LabeledGraph& g) {
    return g.has_loop_edge() || [&] {
        for (int e = 0; e < g.num_edges(); ++e)
            if (same_kind_double(g, e)) return true;
        return false;
    }();
}

// The plain and chord families quotient out graphs with double or loop
// edges; the loop-retaining and hairy families keep them as generators.
bool family_kills_doubles(ComplexKind fam) {
    return fam == ComplexKind::Plain || fam == ComplexKind::Chord;
}

bool ext_ext_nonloop(const LabeledGraph& g, int e) {
    const Edge& ed = g.edges[e];
    return !ed.is_loop() && g.vertices[ed.src] == VertexKind::ExtBlack &&
           g.vertices[ed.dst] == VertexKind::ExtBlack;
}

}  // namespace

bool edge_contractible(const LabeledGraph& graph, int edge, ComplexKind fam) {
    if (graph.edges[edge].is_loop()) return false;
    switch (fam) {
        case ComplexKind::Plain:
        case ComplexKind::Chord:
            return !same_kind_double(graph, edge) &&
                   !graph.edge_is_chord(edge) &&
                   !graph.edge_in_multiple_pair(edge);
        case ComplexKind::PlainLoops:
            return !graph.edge_is_chord(edge);
        case ComplexKind::Hairy:
            return !is_hair(graph, edge);
        default:
            throw std::invalid_argument(
                "edge_contractible: not a graph complex family");
    }
}

FormalSum normalize_in_complex(const LabeledGraph& graph, ComplexKind fam,
                               const Ambient& amb) {
    FormalSum out;
    if (structure_error(graph, Flavor::Plain)) return out;
    if (!is_admissible(graph)) return out;
    if (family_kills_doubles(fam) && has_double_or_loop(graph)) return out;
    auto c = canonicalize(graph, amb);
    if (c.zero) return out;
    out.add(encode(c.graph), c.sign);
    return out;
}

FormalSum diff_graph(const LabeledGraph& graph, ComplexKind fam,
                     const Ambient& amb) {
    FormalSum out;
    for (int e = 0; e < graph.num_edges(); ++e) {
        if (!edge_contractible(graph, e, fam)) continue;
        int sign = edge_contraction_sign_closed(graph, e, amb);
        auto contracted = contract_edge(graph, e);
        auto term = normalize_in_complex(contracted, fam, amb);
        term *= sign;
        out += term;
    }
    return out;
}

FormalSum diff_sum(const FormalSum& x, ComplexKind fam, const Ambient& amb) {
    FormalSum out;
    for (const auto& [key, coeff] : x.terms) {
        auto d = diff_graph(decode(key), fam, amb);
        d *= coeff;
        out += d;
    }
    return out;
}

std::map<int, std::vector<LabeledGraph>> graded_basis(ComplexKind fam, int k,
                                                      int g,
                                                      const Ambient& amb,
                                                      long long* budget) {
    std::map<int, std::vector<LabeledGraph>> out;
    for (auto& graph : enumerate_basis(fam, k, g, amb, budget)) {
        if (family_kills_doubles(fam) && has_double_or_loop(graph)) continue;
        out[grading(graph, amb).deg].push_back(std::move(graph));
    }
    return out;
}

std::vector<FormalSum> arnold_relations(const LabeledGraph& graph,
                                        const Ambient& amb) {
    std::vector<FormalSum> out;
    for (int e1 = 0; e1 < graph.num_edges(); ++e1) {
        if (!ext_ext_nonloop(graph, e1)) continue;
        for (int e2 = e1 + 1; e2 < graph.num_edges(); ++e2) {
            if (!ext_ext_nonloop(graph, e2)) continue;
            const Edge& a1 = graph.edges[e1];
            const Edge& a2 = graph.edges[e2];
            if (a1.kind != a2.kind) continue;
            // Shared endpoint b, distinct outer endpoints a and c.
            int b, a, c;
            if (a1.src == a2.src) {
                b = a1.src, a = a1.dst, c = a2.dst;
            } else if (a1.src == a2.dst) {
                b = a1.src, a = a1.dst, c = a2.src;
            } else if (a1.dst == a2.src) {
                b = a1.dst, a = a1.src, c = a2.dst;
            } else if (a1.dst == a2.dst) {
                b = a1.dst, a = a1.src, c = a2.src;
            } else {
                continue;
            }
            if (a == c) continue;
            FormalSum rel;
            const std::pair<int, int> ends[3][2] = {
                {{a, b}, {b, c}}, {{b, c}, {c, a}}, {{c, a}, {a, b}}};
            for (const auto& variant : ends) {
                LabeledGraph v = graph;
                v.edges[e1] = {a1.kind, variant[0].first, variant[0].second};
                v.edges[e2] = {a1.kind, variant[1].first, variant[1].second};
                rel += normalize_in_complex(v, ComplexKind::Chord, amb);
            }
            if (!rel.is_zero()) out.push_back(std::move(rel));
        }
    }
    return out;
}

PresentedComplex presented_complex(ComplexKind fam, int k, int g,
                                   const Ambient& amb, long long* budget) {
    auto basis = graded_basis(fam, k, g, amb, budget);
    PresentedComplex cx;
    if (basis.empty()) return cx;
    cx.lo = basis.begin()->first;
    cx.hi = basis.rbegin()->first;

    std::map<int, std::map<std::string, int>> index;
    for (const auto& [deg, graphs] : basis) {
        cx.basis[deg] = static_cast<int>(graphs.size());
        auto& idx = index[deg];
        for (int i = 0; i < static_cast<int>(graphs.size()); ++i)
            idx[encode(graphs[i])] = i;
    }

    auto charge = [&](long long amount) {
        if (!budget) return;
        *budget -= amount;
        if (*budget < 0) throw BudgetExceeded("differential assembly");
    };

    for (const auto& [deg, graphs] : basis) {
        auto target = index.find(deg + 1);
        SparseMatQ mat(target == index.end()
                           ? 0
                           : static_cast<int>(target->second.size()),
                       static_cast<int>(graphs.size()));
        for (int col = 0; col < static_cast<int>(graphs.size()); ++col) {
            auto d = diff_graph(graphs[col], fam, amb);
            charge(1 + static_cast<long long>(d.terms.size()));
            if (d.is_zero()) continue;
            if (target == index.end())
                throw std::logic_error("differential escapes basis range");
            for (const auto& [key, coeff] : d.terms) {
                auto it = target->second.find(key);
                if (it == target->second.end())
                    throw std::logic_error("differential escapes basis");
                mat.add(it->second, col, coeff);
            }
        }
        cx.diff.emplace(deg, std::move(mat));

        if (fam == ComplexKind::Chord) {
            std::vector<FormalSum> rels;
            for (const auto& graph : graphs) {
                auto rs = arnold_relations(graph, amb);
                charge(static_cast<long long>(rs.size()));
                for (auto& r : rs) rels.push_back(std::move(r));
            }
            SparseMatQ rmat(static_cast<int>(graphs.size()),
                            static_cast<int>(rels.size()));
            const auto& idx = index[deg];
            for (int colr = 0; colr < static_cast<int>(rels.size()); ++colr) {
                for (const auto& [key, coeff] : rels[colr].terms) {
                    auto it = idx.find(key);
                    if (it == idx.end())
                        throw std::logic_error("relation escapes basis");
                    rmat.add(it->second, colr, coeff);
                }
            }
            cx.relations.emplace(deg, std::move(rmat));
        }
    }
    return cx;
}

}  // namespace gh
