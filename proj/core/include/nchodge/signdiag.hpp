#pragma once
// Combinatorial sign diagrams. A diagram is a top boundary of degree-labeled
// strands plus a top-to-bottom list of events: adjacent transpositions
// (crossings) and vertex contractions (a contiguous block of strands enters a
// vertex, a balanced list of output strands leaves it). sigma(D) adds the
// parity products of the two strands at every crossing. Because each level
// holds a single event there are never triple points.
//
// The formula templates build the diagram for one summand of the signed
// operations implemented in the hochschild/cyclic/pairings modules and act as
// an independent oracle: the sign is produced by simulating strand positions,
// never by the prefix-parity arithmetic those modules use. Conventions:
// morphism strands carry reduced degree, operation degree strands are red and
// carry +1, designated-unit strands carry reduced degree -1, cochain strands
// carry the cochain's reduced degree, and the trace strand carries the
// reduced degree of the morphism being traced.

#include "nchodge/rng.hpp"

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace nchodge {

struct Strand {
    int degree = 0;
    bool red = false; // red strands must carry degree +1
};

struct SwapEvent {
    int pos = 0; // transposes strands at pos, pos+1
};

struct VertexEvent {
    int pos = 0; // consumes strands at pos .. pos+nin-1
    int nin = 0;
    std::vector<Strand> out; // inserted at pos; degree sums must balance
};

using DiagEvent = std::variant<SwapEvent, VertexEvent>;

struct SignDiagram {
    std::vector<Strand> top;
    std::vector<DiagEvent> events;
};

// Simulates the diagram and returns the bottom boundary. Throws on
// out-of-range events, unbalanced vertices, or red strands of degree != 1.
std::vector<Strand> validate(const SignDiagram& D);

// Sum over crossings of the product of the two strand degree parities.
int sigma(const SignDiagram& D);

// Local isotopy rewrites of the event list, each preserving sigma:
//   Commute     - exchange two consecutive events acting on disjoint strand
//                 ranges (positions renumbered across a vertex contraction);
//   Braid       - slide a strand across a crossing: swap patterns
//                 (p, p+1, p) <-> (p+1, p, p+1);
//   SlideVertex - slide a strand across a vertex: the strand crosses all
//                 inputs just before the vertex <-> crosses all outputs just
//                 after it (sigma is preserved by degree balance).
enum class MoveKind { Commute, Braid, SlideVertex };

struct Move {
    MoveKind kind = MoveKind::Commute;
    int index = 0; // first event of the pattern
};

// Applies the rewrite; throws "move not applicable" when the pattern is
// absent at the index.
SignDiagram isotopy_move(const SignDiagram& D, const Move& mv);

// Attempts `steps` random moves, skipping inapplicable ones; reports the
// number actually applied through *applied when non-null.
SignDiagram random_isotopy(const SignDiagram& D, int steps, Rng& rng,
                           int* applied = nullptr);

// Lossless line-based text form: one "strand <deg> [red]" line per top
// strand, then "swap <pos>" and "vertex <pos> <nin> : <deg>[r] ..." lines.
std::string diagram_to_text(const SignDiagram& D);
SignDiagram diagram_from_text(const std::string& text);

// One summand of a signed formula. Fields are read per kind:
//   "t"           rotation t^i on rdeg; original head lands at position i.
//   "b-head"      rotation i, then the head operation absorbs rotated
//                 positions 0..j.
//   "b-internal"  no rotation; the operation absorbs positions j+1..k.
//   "b-cochain"   rotation i; cochain blocks [first,last] (rotated
//                 positions, disjoint, increasing, all last < i) with
//                 reduced degrees phi_rdeg; head operation absorbs rotated
//                 positions 0..m (m >= i).
//   "connes-B"    rotation i, new unit head; no operation vertex.
//   "B-cochain"   rotation i, unit head, cochain blocks as above.
//   "mukai-trace" two words rdeg (rotation i, split j) and rdeg_b
//                 (rotation ib, split kb), traced morphism of unreduced
//                 degree c_deg: inner operation takes positions j+1..s of
//                 the first word, the trace strand and positions 0..kb of
//                 the second; the outer operation takes the rest.
struct FormulaTerm {
    std::string kind;
    std::vector<int> rdeg; // reduced degrees of the (unrotated) word
    int i = 0;
    int j = -1;
    int k = -1;
    int m = -1;
    std::vector<std::pair<int, int>> blocks;
    std::vector<int> phi_rdeg;
    std::vector<int> rdeg_b;
    int ib = 0;
    int kb = -1;
    int c_deg = 0;

    static FormulaTerm rotation(std::vector<int> rdeg, int i);
};

// Builds the diagram for one formula summand.
SignDiagram term_diagram(const FormulaTerm& t);

// sigma of the summand's diagram.
int formula_sign(const FormulaTerm& t);

} // namespace nchodge
