#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "ghom/canonical.hpp"
#include "ghom/formal.hpp"
#include "ghom/graph.hpp"
#include "ghom/linalg.hpp"

namespace gh {

// ---------------------------------------------------------------------------
// The hidden-face algebra A: rational sums of sequences of connected canonical
// generalized graphs. The unit is the empty sequence. Keys of FormalSum terms
// join the member graphs' encode() strings with '|'; the unit's key is "".
// ---------------------------------------------------------------------------

std::string encode_sequence(const std::vector<LabeledGraph>& seq);
std::vector<LabeledGraph> decode_sequence(const std::string& key);

// Sum of member normalized degrees (0 for the unit), orders, loop numbers.
int sequence_norm_deg(const std::vector<LabeledGraph>& seq, const Ambient& amb);
int sequence_order(const std::vector<LabeledGraph>& seq);
int sequence_loops(const std::vector<LabeledGraph>& seq);

// One of the three two-vertex graphs identified with the unit: a single dashed
// edge with a white endpoint, or a single solid edge (whose blacks classify as
// internal). The chord and the dashed+solid pair between two external
// vertices are not units.
bool is_unit_graph(const LabeledGraph& graph);

// Cut-vertex vanishing: a black cut vertex kills the graph outright; a white
// cut vertex kills it when some branch at the vertex is all white.
bool rescaling_zero(const LabeledGraph& graph);

// Reattachment relation. For vertices v1, v2 (possibly equal, then a cut
// vertex) and a branch C forming a full component of the graph minus {v1, v2}
// (all white whenever v1 or v2 is white), swapping the v1/v2 ends of the edges
// that meet C relates the graph to
// (-1)^{n|W(C)| + j|B(C)| + j|solid(S)| + n|dashed(S)|} times the reattached
// graph, where S collects the edges meeting C. symmetry_reduce closes the
// moves into an orbit and returns its lexicographically smallest canonical
// member with the relating sign. The orbit is zero when a chain of moves
// returns to a member with the opposite sign, or reaches a graph that is zero
// outright (orientation, double edge, missing external vertex, or cut-vertex
// vanishing). Expects a canonical, connected, loop/double-free input.
SignedClass symmetry_reduce(const LabeledGraph& graph, const Ambient& amb);

// True when the orbit of symmetry_reduce collapses to zero.
bool symmetry_zero(const LabeledGraph& graph, const Ambient& amb);

// Normal form of one connected graph under the graph-level relations.
struct GraphReduction {
    enum class Kind { Zero, Unit, Graph };
    Kind kind = Kind::Zero;
    LabeledGraph graph;  // canonical representative when kind == Graph
    int sign = 1;
};

// Applies, in order: black classification by incident edges, the negative
// normalized degree and double/loop kills, the no-external kill (three or more
// vertices), orientation canonicalization, the unit identification (the sign
// relates the input to +unit), the cut-vertex kill, and the reattachment-orbit
// reduction. Throws on structurally invalid or disconnected input.
GraphReduction reduce_graph(const LabeledGraph& graph, const Ambient& amb);

// Normal form of coeff * sequence: reduces every member, drops units, kills
// sequences whose total normalized degree exceeds n*j - 1, and sorts members
// by key with Koszul signs (equal members of odd degree square to zero). The
// result has at most one term.
FormalSum normalize_sequence(const std::vector<LabeledGraph>& seq, const mpq_class& coeff,
                             const Ambient& amb);

// Termwise normal form of a sum keyed by sequence keys; idempotent.
FormalSum normalize_algebra(const FormalSum& raw, const Ambient& amb);

// Differential of coeff * sequence, computed on the presentation as given:
// Leibniz over members with prefix signs (-1)^{normalized degree}, and per
// member the sum over proper connected vertex subsets S (|S| >= 2) of
// sigma(S) * (member/S | member_S) spliced in place. Members with two vertices
// or negative normalized degree contribute nothing. Output is normalized.
FormalSum d_sequence_raw(const std::vector<LabeledGraph>& seq, const mpq_class& coeff,
                         const Ambient& amb);

// Termwise differential of a normalized element.
FormalSum d_algebra(const FormalSum& elem, const Ambient& amb);

// Canonical graphs at fixed order and loop number that survive every
// graph-level relation. Requires g <= 3 when j == 2.
std::vector<LabeledGraph> algebra_graph_basis(int k, int g, const Ambient& amb,
                                              long long* budget = nullptr);

// Keys of all canonical sequences with the given total order and loop number:
// sorted tuples from the graph bases, without odd-degree repeats. The unit
// appears exactly at k = g = 0.
std::vector<std::string> algebra_sequence_basis(int k, int g, const Ambient& amb,
                                                long long* budget = nullptr);

// ---------------------------------------------------------------------------
// The bar complex Z = A (x) BA: words a0[s a1 | ... | s al]. Letters are
// nonempty sequences of positive normalized degree. Word keys join the a0 key
// and the letter keys with '!'; the key of the unit word is "".
// ---------------------------------------------------------------------------

struct BarWord {
    std::vector<LabeledGraph> a0;
    std::vector<std::vector<LabeledGraph>> letters;
};

std::string encode_bar(const BarWord& word);
BarWord decode_bar(const std::string& key);

// Degree: sum of member normalized degrees minus the number of letters.
int bar_degree(const BarWord& word, const Ambient& amb);
int bar_order(const BarWord& word);
int bar_loops(const BarWord& word);

// Normal form of coeff * word: normalizes a0 and each letter; a letter that
// reduces to the unit or to zero kills the word. At most one term.
FormalSum normalize_bar(const BarWord& word, const mpq_class& coeff, const Ambient& amb);

// Bar differential on a sum keyed by word keys: the algebra differential of a0
// (sign +1) and of each letter (sign (-1)^{|a0| + nu_{i-1} + 1}), plus the
// merges of adjacent parts a_i a_{i+1} for i = 0..l-1 with sign
// (-1)^{|a0| + nu_i + 1}; nu_i sums the suspended letter degrees |a_m| - 1 for
// m <= i. Output is normalized.
FormalSum bar_diff(const FormalSum& elem, const Ambient& amb);

// Shuffle product: a0[..l letters..] * b0[..m letters..] multiplies the
// coefficients a0 b0, shuffles the letters with graded Koszul signs on the
// suspended degrees, and carries the prefactor (-1)^{nu_l |b0|}. Unital and
// graded commutative.
FormalSum bar_product(const FormalSum& a, const FormalSum& b, const Ambient& amb);

// Contracting homotopy: a0[s a1 | ...] -> -[s abar0 | s a1 | ...] where abar0
// drops the unit component of a0. The overall sign makes h d + d h = id hold
// away from the unit word (and = id minus the unit projection on it);
// h * h = 0.
FormalSum bar_homotopy(const FormalSum& elem, const Ambient& amb);

// Keys of all bar words with the given total order and loop number. Finite
// because letters carry order at least 1. Requires g <= 3 when j == 2.
std::vector<std::string> bar_basis(int k, int g, const Ambient& amb,
                                   long long* budget = nullptr);

// The bar basis of bidegree (k, g), grouped by degree.
std::map<int, std::vector<std::string>> bar_graded_basis(
    int k, int g, const Ambient& amb, long long* budget = nullptr);

// Assembles the bar cochain complex in bidegree (k, g).
PresentedComplex bar_presented_complex(int k, int g, const Ambient& amb,
                                       long long* budget = nullptr);

// ---------------------------------------------------------------------------
// JSON forms. An algebra element is a list of {"coeff": "p/q", "sequence":
// [graph, ...]}; a bar word is {"a0": <element>, "letters": [<element>, ...]}
// with single-term elements.
// ---------------------------------------------------------------------------

std::string algebra_to_json(const FormalSum& elem);
FormalSum algebra_from_json(const std::string& text);
std::string bar_word_to_json(const BarWord& word);
BarWord bar_word_from_json(const std::string& text);

}  // namespace gh
