#pragma once

#include <vector>

#include "ghom/graph.hpp"

namespace gh {

// Canonical representative of an oriented isomorphism class. `sign` relates
// the input to the representative: [input] = sign * [graph]. `zero` marks a
// class killed by an orientation-reversing symmetry (odd automorphism, or a
// loop/double edge whose flip or swap costs -1).
struct SignedClass {
    LabeledGraph graph;
    int sign = 1;
    bool zero = false;
};

SignedClass canonicalize(const LabeledGraph& graph, const Ambient& amb);

// True if a loop edge flip or identical-edge swap reverses orientation:
// dashed loops kill for odd n, solid loops for odd j, dashed doubles for even
// n, solid doubles for even j.
bool parity_kills(const LabeledGraph& graph, const Ambient& amb);

// Canonical form together with every relabeling that achieves it and the
// orientation sign of each. Loop/double parity kills and odd automorphisms are
// NOT folded in; callers that decorate vertices need the full list to decide
// vanishing at their own level.
struct CanonicalLabelings {
    LabeledGraph graph;
    std::vector<std::vector<int>> labelings;  // old label -> new label
    std::vector<int> signs;
};

CanonicalLabelings canonical_labelings(const LabeledGraph& graph, const Ambient& amb);

// Orientation sign of applying an explicit relabeling: Koszul sign of the
// vertex permutation, times edge flips to (low, high) storage, times the
// Koszul sign of the stable edge sort by (kind, low, high).
int relabeling_sign(const LabeledGraph& graph, const std::vector<int>& old_to_new,
                    const Ambient& amb);

// The relabeled graph itself: vertices permuted, edges flipped to (low, high)
// and stably sorted by (kind, low, high).
LabeledGraph apply_relabeling(const LabeledGraph& graph, const std::vector<int>& old_to_new);

}  // namespace gh
