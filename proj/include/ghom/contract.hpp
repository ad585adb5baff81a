#pragma once

#include <vector>

#include "ghom/graph.hpp"

namespace gh {

// G/e: merge the larger-labeled endpoint q into the smaller one p, drop e, and
// shift labels above q down by one. The merged vertex is white iff both
// endpoints were white, otherwise black (external if either endpoint was).
// Remaining edges keep their order and stored orientations; edges parallel to
// e become loops. e must not be a loop.
LabeledGraph contract_edge(const LabeledGraph& graph, int edge_index);

struct SubsetSplit {
    LabeledGraph quotient;  // G/S
    LabeledGraph induced;   // G_S
    // Old vertex label -> label in the quotient (members of S all map to s1's).
    std::vector<int> quotient_label;
};

// G/S and G_S for an ordered subset from ordered_subset(). In G/S the subset
// collapses into s1's slot (white iff S is all white; otherwise black,
// external if S contains an external vertex); edges internal to S are removed
// and crossing edges are redirected to s1, all keeping their order. G_S lists
// the subset's vertices in subset order with the internal edges, again in
// their original order.
SubsetSplit subset_split(const LabeledGraph& graph, const std::vector<int>& ordered_s);

// Classify black vertices by their incident edges: at least one dashed edge
// makes a black vertex external, none makes it internal. Degree parities are
// unchanged, so this never costs a sign.
LabeledGraph reclassify_blacks(const LabeledGraph& graph);

}  // namespace gh
