#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bdiag {

struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Bipartitional diagram on n vertices. Vertex i carries lambda[i-1] slots;
// slots are numbered 1..weight() across vertices in order, and each slot has
// an inner (lower) and an outer (upper) side. `up` lists the non-cut outer
// sides, `down` the non-cut inner sides. An edge (a,b) joins the outer side
// of slot a to the inner side of slot b on a strictly later vertex; a slot
// side carries at most one edge and edges only attach to non-cut sides.
//
// Canonical form: lambda as given, up/down/edges sorted ascending. All slot
// indices are 1-based. Equality and ordering are field-wise.
struct BDiagram {
    int n = 0;
    std::vector<int> lambda;
    std::vector<int> up;
    std::vector<int> down;
    std::vector<std::pair<int, int>> edges;

    int weight() const {
        int w = 0;
        for (int l : lambda) w += l;
        return w;
    }
    bool is_empty() const { return n == 0; }

    // vertex owning a slot, 1-based
    int vertex_of(int slot) const;
    // inclusive slot range of a vertex
    std::pair<int, int> slot_range(int vertex) const;

    auto operator<=>(const BDiagram&) const = default;
    bool operator==(const BDiagram&) const = default;
};

const BDiagram& empty_diagram();

// Sorts the set/edge fields and checks every diagram constraint; throws
// ValidationError naming the violated clause.
BDiagram make_diagram(int n, std::vector<int> lambda, std::vector<int> up,
                      std::vector<int> down, std::vector<std::pair<int, int>> edges);

// Re-checks an existing value (used on externally supplied data).
void validate(const BDiagram& g);

struct DiagramStats {
    int weight = 0;    // total slots
    int tau = 0;       // edges
    int h_up = 0;      // outer half-edges not used by an edge
    int h_down = 0;    // inner half-edges not used by an edge
    int hf_up = 0;     // free outer half-edges (non-cut, unused)
    int hf_down = 0;   // free inner half-edges (non-cut, unused)
    int h_c = 0;       // cut half-edges on either side

    bool operator==(const DiagramStats&) const = default;
};

DiagramStats stats(const BDiagram& g);

// Non-cut outer sides without an edge, ascending.
std::vector<int> free_up(const BDiagram& g);
// Non-cut inner sides without an edge, ascending.
std::vector<int> free_down(const BDiagram& g);

// Restriction to a strictly increasing vertex list; keeps edges with both
// endpoints among the kept vertices' slots and relabels everything through
// the unique increasing bijection.
BDiagram subdiagram(const BDiagram& g, const std::vector<int>& vertices);

// Vertex sets of connected components, each sorted, ordered by minimum.
std::vector<std::vector<int>> connected_components(const BDiagram& g);

// All unions of connected components (2^c sets, component-subset bitmask
// ascending), each sorted.
std::vector<std::vector<int>> isolated_sets(const BDiagram& g);

// Maximal chain of slots linked outer-to-inner by edges. start_free/end_free
// record whether the first inner side / last outer side is non-cut.
struct DecoratedPath {
    std::vector<int> slots;
    bool start_free = false;
    bool end_free = false;

    auto operator<=>(const DecoratedPath&) const = default;
};

// Every slot lies on exactly one path; returned ordered by first slot.
std::vector<DecoratedPath> paths(const BDiagram& g);

// Stacks `top` onto `bottom`, joining free outer sides a[l] of `bottom` to
// free inner sides b[l] of `top`. `a` must be strictly increasing within
// free_up(bottom); `b` holds distinct members of free_down(top).
BDiagram compose(const BDiagram& bottom, const BDiagram& top,
                 const std::vector<int>& a, const std::vector<int>& b);

// compose with no new edges
BDiagram juxtapose(const BDiagram& bottom, const BDiagram& top);

// Every composition of the pair, over all arities k, pairings A ascending and
// B injections; deterministic order (k, then A lexicographic, then B
// lexicographic). All results are distinct diagrams.
std::vector<BDiagram> star_expand(const BDiagram& bottom, const BDiagram& top);

// Factors of g under juxtaposition (left to right); every diagram splits
// uniquely into indivisible factors. g must be nonempty.
std::vector<BDiagram> factorize(const BDiagram& g);

bool is_indivisible(const BDiagram& g);

// JSON interchange: {"n":..,"lambda":[..],"up":[..],"down":[..],"edges":[[a,b],..]},
// 1-based, arrays sorted ascending.
std::string to_json_string(const BDiagram& g);
BDiagram diagram_from_json_string(const std::string& text);

}  // namespace bdiag
