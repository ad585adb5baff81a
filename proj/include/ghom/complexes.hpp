#pragma once

#include <map>
#include <string>
#include <vector>

#include "ghom/enumerate.hpp"
#include "ghom/formal.hpp"
#include "ghom/graph.hpp"
#include "ghom/linalg.hpp"

namespace gh {

// Reduces a raw graph to basis terms of the given complex: canonical form,
// family-specific kill rules (the chord complex drops loops and same-kind
// doubles), and admissibility. Returns the zero sum when the class dies.
FormalSum normalize_in_complex(const LabeledGraph& graph, ComplexKind fam,
                               const Ambient& amb);

// True when contracting this edge is a face of the complex. The plain
// complex skips loops, same-kind doubles, chords and dashed/solid multiple
// pairs; the loop-retaining variant skips only chords and loops; the hairy
// complex skips loops and hairs; the chord complex follows the plain rule.
bool edge_contractible(const LabeledGraph& graph, int edge, ComplexKind fam);

// Differential of a single generator, expressed over canonical basis keys.
FormalSum diff_graph(const LabeledGraph& graph, ComplexKind fam,
                     const Ambient& amb);

// Linear extension of diff_graph to a formal sum of canonical keys.
FormalSum diff_sum(const FormalSum& x, ComplexKind fam, const Ambient& amb);

// The basis of the complex in bidegree (k, g), grouped by degree.
std::map<int, std::vector<LabeledGraph>> graded_basis(ComplexKind fam, int k,
                                                      int g,
                                                      const Ambient& amb,
                                                      long long* budget =
                                                          nullptr);

// Arnold relations supported on a basis graph: for every pair of dashed
// chords sharing exactly one endpoint, the cyclic three-term rewiring sum.
std::vector<FormalSum> arnold_relations(const LabeledGraph& graph,
                                        const Ambient& amb);

// Assembles the presented cochain complex in bidegree (k, g), including the
// relation columns for the chord complex.
PresentedComplex presented_complex(ComplexKind fam, int k, int g,
                                   const Ambient& amb,
                                   long long* budget = nullptr);

}  // namespace gh
