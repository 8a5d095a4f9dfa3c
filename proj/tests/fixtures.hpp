#pragma once

#include "bdiag/diagram.hpp"

// Hand-checked sample diagrams reused across suites.
namespace fx {

// three vertices, slot counts 3/1/2, a two-edge chain through the middle
// vertex plus a long edge; one cut outer side
inline bdiag::BDiagram sample_a() {
    return bdiag::make_diagram(3, {3, 1, 2}, {1, 2, 3, 4, 5}, {1, 2, 3, 4, 5, 6},
                               {{1, 6}, {2, 4}, {4, 5}});
}

// four vertices, two interleaved components, no clean vertical cut
inline bdiag::BDiagram sample_b() {
    return bdiag::make_diagram(4, {1, 3, 2, 2}, {1, 3, 4, 6}, {1, 3, 6, 7}, {{1, 6}, {3, 7}});
}

// sample_a stacked on sample_b along outer sides (4,6) -> inner sides (3,1)
inline bdiag::BDiagram stacked_ba() {
    return bdiag::make_diagram(7, {1, 3, 2, 2, 3, 1, 2}, {1, 3, 4, 6, 9, 10, 11, 12, 13},
                               {1, 3, 6, 7, 9, 10, 11, 12, 13, 14},
                               {{1, 6}, {3, 7}, {4, 11}, {6, 9}, {9, 14}, {10, 12}, {12, 13}});
}

// single vertex with r non-cut inner sides and s non-cut outer sides
inline bdiag::BDiagram vertex(int r, int s) {
    std::vector<int> up, down;
    for (int i = 1; i <= s; ++i) up.push_back(i);
    for (int i = 1; i <= r; ++i) down.push_back(i);
    return bdiag::make_diagram(1, {std::max(r, s)}, up, down, {});
}

}  // namespace fx
