#pragma once

#include <stdexcept>
#include <vector>

#include "ghom/graph.hpp"

namespace gh {

// Graph families whose bases the enumerator produces.
//  Plain / PlainLoops: connected admissible plain graphs (the two complexes
//    share one generating set and differ in the differential).
//  Hairy: no internal blacks, no solid edges, every external vertex carries
//    exactly one dashed edge.
//  Chord: external black vertices only.
//  AlgebraGen: connected admissible generalized graphs with the effective
//    valence floors (whites and internal blacks at least trivalent); deeper
//    vanishing (cut vertices etc.) is applied by the algebra layer.
//  DecoratedPlain: connected plain graphs without the admissibility
//    requirement; external vertices may lack dashed edges up to the
//    max_bare_ext allowance, and the one-vertex graph is allowed.
enum class ComplexKind { Plain, PlainLoops, Hairy, Chord, AlgebraGen, DecoratedPlain };

const char* complex_kind_name(ComplexKind kind);

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// All canonical nonzero classes with the given order k and first Betti number
// g, sorted by encode(). `budget` (if non-null) is decremented per search node
// and BudgetExceeded is thrown when it runs out. `max_bare_ext` bounds the
// number of external vertices without a dashed edge; it only applies to
// DecoratedPlain (admissible families force it to zero).
std::vector<LabeledGraph> enumerate_basis(ComplexKind kind, int k, int g, const Ambient& amb,
                                          long long* budget = nullptr, int max_bare_ext = 0);

}  // namespace gh
