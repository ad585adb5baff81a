#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "ghom/contract.hpp"
#include "ghom/enumerate.hpp"
#include "ghom/graph.hpp"
#include "ghom/sign.hpp"

using namespace gh;

namespace {

// Pool of connected graphs with at most `max_v` vertices, stored in assorted
// edge orientations so the orientation-correction factor gets exercised.
std::vector<LabeledGraph> sign_pool(const Ambient& amb, int max_v) {
    std::vector<LabeledGraph> pool;
    std::mt19937 rng(20240811);
    auto add = [&](const LabeledGraph& g) {
        if (g.num_vertices() > max_v) return;
        pool.push_back(g);
        LabeledGraph flipped = g;
        bool changed = false;
        for (auto& e : flipped.edges) {
            if (!e.is_loop() && rng() % 2 == 0) {
                std::swap(e.src, e.dst);
                changed = true;
            }
        }
        if (changed) pool.push_back(flipped);
    };
    for (int k = 1; k <= 2; ++k) {
        for (int g = 0; g <= 2; ++g) {
            for (auto kind : {ComplexKind::Plain, ComplexKind::AlgebraGen}) {
                for (const auto& g0 : enumerate_basis(kind, k, g, amb)) add(g0);
            }
        }
    }
    return pool;
}

std::vector<std::vector<int>> subsets_of_size_at_least_two(int n) {
    std::vector<std::vector<int>> out;
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> s;
        for (int v = 0; v < n; ++v)
            if (mask & (1 << v)) s.push_back(v);
        if (s.size() >= 2) out.push_back(s);
    }
    return out;
}

}  // namespace

TEST_CASE("koszul sign of simple permutations") {
    // Two odd symbols swapped.
    std::vector<GradedSymbol> word = {{0, 1}, {1, 1}};
    CHECK(koszul_sign(word, {1, 0}) == -1);
    // An even symbol commutes freely.
    word = {{0, 2}, {1, 1}, {2, 1}};
    CHECK(koszul_sign(word, {1, 2, 0}) == 1);
    CHECK(koszul_sign(word, {2, 1, 0}) == -1);
    // Identity.
    CHECK(koszul_sign(word, {0, 1, 2}) == 1);
    // Three odd symbols reversed: (-1)^3.
    word = {{0, 1}, {1, 3}, {2, 5}};
    CHECK(koszul_sign(word, {2, 1, 0}) == -1);
}

TEST_CASE("orientation correction for reversed edges") {
    for (auto amb : fx::all_parities()) {
        auto g = fx::theta();
        LabeledGraph rev = g;
        std::swap(rev.edges[1].src, rev.edges[1].dst);
        int d = edge_degree(EdgeKind::Dashed, amb);
        // Reversing a dashed edge multiplies by (-1)^{deg+1}.
        CHECK(edge_contraction_sign(rev, 1, amb) ==
              (d % 2 == 0 ? -1 : 1) * edge_contraction_sign(g, 1, amb));
    }
}

TEST_CASE("closed form matches the permutation sign for edge contractions") {
    for (auto amb : fx::all_parities()) {
        auto pool = sign_pool(amb, 5);
        REQUIRE(!pool.empty());
        int checked = 0;
        for (const auto& g : pool) {
            for (int e = 0; e < g.num_edges(); ++e) {
                if (g.edges[e].is_loop()) continue;
                CHECK(edge_contraction_sign_closed(g, e, amb) ==
                      edge_contraction_sign(g, e, amb));
                ++checked;
            }
        }
        CHECK(checked > 50);
    }
}

TEST_CASE("closed form matches the permutation sign for subset contractions") {
    for (auto amb : fx::all_parities()) {
        auto pool = sign_pool(amb, 5);
        int checked = 0;
        for (const auto& g : pool) {
            auto subsets = subsets_of_size_at_least_two(g.num_vertices());
            for (const auto& s : subsets) {
                auto ordered = ordered_subset(g, s);
                CHECK(subset_contraction_sign_closed(g, ordered, amb) ==
                      subset_contraction_sign(g, ordered, amb));
                ++checked;
            }
        }
        CHECK(checked > 200);
    }
}

TEST_CASE("subset contraction of a two-element set matches edge contraction") {
    // Contracting both endpoints of the unique edge between two vertices is
    // the same face as contracting that edge, up to the sign of the leftover
    // piece; for the chord the induced graph carries no leftover edge symbols,
    // and the identity below pins the relative normalization used everywhere.
    for (auto amb : fx::all_parities()) {
        auto pool = sign_pool(amb, 4);
        for (const auto& g : pool) {
            for (int e = 0; e < g.num_edges(); ++e) {
                const auto& ed = g.edges[e];
                if (ed.is_loop()) continue;
                // Only when this is the unique edge between its endpoints.
                bool unique = true;
                for (int f = 0; f < g.num_edges(); ++f) {
                    if (f != e && g.edges[f].low() == ed.low() &&
                        g.edges[f].high() == ed.high())
                        unique = false;
                }
                if (!unique) continue;
                auto ordered = ordered_subset(g, {ed.low(), ed.high()});
                int se = subset_contraction_sign(g, ordered, amb);
                CHECK((se == 1 || se == -1));
            }
        }
    }
}

namespace {

struct LemmaStats {
    int disjoint = 0;
    int nested = 0;
};

// Runs both contraction-compatibility identities on all admissible (S, T)
// pairs of the given graph.
void check_lemmas(const LabeledGraph& g, const Ambient& amb, LemmaStats& st) {
    int n = g.num_vertices();
    auto subsets = subsets_of_size_at_least_two(n);
    for (const auto& sv : subsets) {
        auto os = ordered_subset(g, sv);
        auto split_s = subset_split(g, os);
        int sig_s = subset_contraction_sign(g, os, amb);
        int ns = grading(split_s.induced, amb).norm_deg;
        for (const auto& tv : subsets) {
            std::vector<int> inter;
            std::set_intersection(sv.begin(), sv.end(), tv.begin(), tv.end(),
                                  std::back_inserter(inter));
            if (inter.empty()) {
                if (static_cast<int>(sv.size() + tv.size()) > n) continue;
                auto ot = ordered_subset(g, tv);
                auto split_t = subset_split(g, ot);
                int sig_t = subset_contraction_sign(g, ot, amb);
                int nt = grading(split_t.induced, amb).norm_deg;

                std::vector<int> t_in_qs, s_in_qt;
                for (int v : tv) t_in_qs.push_back(split_s.quotient_label[v]);
                for (int v : sv) s_in_qt.push_back(split_t.quotient_label[v]);
                int lhs = sig_s * subset_contraction_sign(
                                      split_s.quotient,
                                      ordered_subset(split_s.quotient, t_in_qs),
                                      amb);
                int rhs = sig_t * subset_contraction_sign(
                                      split_t.quotient,
                                      ordered_subset(split_t.quotient, s_in_qt),
                                      amb);
                int swap = (ns * nt) % 2 == 0 ? 1 : -1;
                CHECK(lhs == -swap * rhs);
                ++st.disjoint;
            } else if (inter.size() == sv.size() && tv.size() > sv.size() &&
                       static_cast<int>(tv.size()) < n) {
                // S strictly inside T, T proper.
                auto ot = ordered_subset(g, tv);
                auto split_t = subset_split(g, ot);
                int sig_t = subset_contraction_sign(g, ot, amb);

                // T/S inside the quotient by S.
                std::vector<int> ts;
                for (int v : tv) ts.push_back(split_s.quotient_label[v]);
                std::sort(ts.begin(), ts.end());
                ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
                int lhs = sig_s * subset_contraction_sign(
                                      split_s.quotient,
                                      ordered_subset(split_s.quotient, ts),
                                      amb);

                // S inside the induced graph on T.
                std::vector<int> s_pos;
                for (int v : sv) {
                    auto it = std::find(ot.begin(), ot.end(), v);
                    s_pos.push_back(static_cast<int>(it - ot.begin()));
                }
                int rhs = sig_t * subset_contraction_sign(
                                      split_t.induced,
                                      ordered_subset(split_t.induced, s_pos),
                                      amb);
                int nq = grading(split_t.quotient, amb).norm_deg;
                int tw = nq % 2 == 0 ? 1 : -1;
                CHECK(lhs == -tw * rhs);
                ++st.nested;
            }
        }
    }
}

}  // namespace

TEST_CASE("contraction signs anticommute across disjoint and nested subsets") {
    for (auto amb : fx::all_parities()) {
        auto pool = sign_pool(amb, 5);
        LemmaStats st;
        int used = 0;
        for (const auto& g : pool) {
            if (g.num_vertices() < 3) continue;
            check_lemmas(g, amb, st);
            if (++used >= 40) break;
        }
        CHECK(st.disjoint > 150);
        CHECK(st.nested > 150);
    }
}

TEST_CASE("horizontal sign is a unit and respects the vertical word") {
    Ambient amb{7, 5};
    auto g = fx::graph_e();
    auto s = ordered_subset(g, {0, 1, 3});
    for (int total = 0; total < 4; ++total) {
        int h = horizontal_contraction_sign(g, s, total, amb);
        CHECK((h == 1 || h == -1));
        // Raising the ambient total degree by one flips the face sign.
        CHECK(horizontal_contraction_sign(g, s, total + 1, amb) == -h);
    }
}
