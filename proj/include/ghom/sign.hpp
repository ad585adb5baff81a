#pragma once

#include <vector>

#include "ghom/graph.hpp"

namespace gh {

// A graded symbol in an orientation word. Ids are opaque; equal ids must carry
// equal degrees. Only degree parity affects signs.
struct GradedSymbol {
    int id = 0;
    int degree = 0;
};

// Koszul sign of the permutation taking `source` to the word listing `target_ids`
// (a permutation of the source ids): product of (-1)^{d d'} over transposed
// pairs. Throws if the target is not a permutation of the source ids.
int koszul_sign(const std::vector<GradedSymbol>& source, const std::vector<int>& target_ids);

// Koszul sign of reordering a graded word: `order[t]` is the source position
// placed at target slot t.
int koszul_sign_of_order(const std::vector<int>& degrees, const std::vector<int>& order);

// Ordered vertex subset for contractions: the base vertex s1 comes first (the
// smallest black vertex if S contains one, otherwise the smallest vertex), the
// rest in increasing label order.
std::vector<int> ordered_subset(const LabeledGraph& graph, std::vector<int> labels);

// sigma(e): sign of the edge-contraction term d(G) -> G/e. Computed as the
// Koszul sign of permuting the orientation word
//   mu | E(G) | reversed-V(G)
// to
//   E(G/e) | (mu, e, q) | reversed-V(G/e)
// where q is the larger-labeled endpoint, the merged vertex keeps the smaller
// endpoint's symbol, and all symbols keep their source degrees; multiplied by
// the orientation factor eta(e). The edge must not be a loop.
int edge_contraction_sign(const LabeledGraph& graph, int edge_index, const Ambient& amb);

// Same sign from local jump factors instead of a permutation:
//   tau(e) * phi(e) * eta(e) * (-1)^{deg of the edge word with e removed}.
// Kept as an independent cross-check of edge_contraction_sign.
int edge_contraction_sign_closed(const LabeledGraph& graph, int edge_index, const Ambient& amb);

// tau(e): Koszul cost of the edge symbol jumping to the end of the edge word.
int tau_edge(const LabeledGraph& graph, int edge_index, const Ambient& amb);
// phi(e): Koszul cost of the larger-labeled endpoint jumping over the vertices
// that precede it in the reversed vertex word (those with larger labels).
int phi_edge(const LabeledGraph& graph, int edge_index, const Ambient& amb);
// eta(e): +1 if the edge is stored (low, high), else the edge-flip factor
// (-1)^{deg(e)+1}.
int eta_edge(const LabeledGraph& graph, int edge_index, const Ambient& amb);

// sigma(S): sign of the subset-contraction term d(G) -> (G/S) * G_S. Computed
// as minus the Koszul sign of permuting
//   mu | E(G) | reversed-V(G) | i1 | i2
// to
//   E(G/S) | reversed-V(G/S) | i1 | i2 | E(G_S) | reversed-(S minus s1) | mu
// where i2 has degree 1 and i1 carries the degree of the merged-vertex kind
// (black if S contains a black vertex, else white). `ordered_s` must come from
// ordered_subset(). Internal edges (both endpoints in S) keep their relative
// order in E(G_S); the rest keep theirs in E(G/S).
int subset_contraction_sign(const LabeledGraph& graph, const std::vector<int>& ordered_s,
                            const Ambient& amb);

// Same sign from local jump factors: (-1)^{X+1} tau(S) phi(S) with the explicit
// degree bookkeeping exponent
//   X = (dE + dV + m1 + 1) + dES * (dV + dS + m1 + 1) + dS * (m1 + 1)
// where dE, dV are the total edge/vertex word degrees, dES the internal-edge
// degree, dS the degree of S minus s1, and m1 the merged-vertex degree.
// Independent cross-check of subset_contraction_sign.
int subset_contraction_sign_closed(const LabeledGraph& graph, const std::vector<int>& ordered_s,
                                   const Ambient& amb);

// tau(S): internal edges jump (in order) to the end of the edge word.
int tau_subset(const LabeledGraph& graph, const std::vector<int>& ordered_s, const Ambient& amb);
// phi(S): the S minus s1 symbols jump (keeping order) to the end of the
// reversed vertex word.
int phi_subset(const LabeledGraph& graph, const std::vector<int>& ordered_s, const Ambient& amb);

// Sign of a horizontal face of a decorated graph:
//   (-1)^{total_degree + 1} tau(S) phi(S) (-1)^{deg of the contracted vertex word}
// where total_degree is the degree of the decorated graph (plain part plus
// decorations) and the final factor sums vertex degrees of P(G)/S.
int horizontal_contraction_sign(const LabeledGraph& plain, const std::vector<int>& ordered_s,
                                int total_degree, const Ambient& amb);

}  // namespace gh
