#pragma once

#include <functional>
#include <string>
#include <vector>

#include "bdiag/diagram.hpp"
#include "bdiag/rational.hpp"

namespace bdiag {

// Streams every diagram with p slots exactly once, in a fixed order: slot
// compositions by cut-set bitmask ascending, then non-cut outer and inner
// subsets by bitmask ascending, then edge sets in lexicographic order.
// Honors BDIAG_THREADS (integer >= 1, default 1); the emitted order does not
// depend on the thread count.
void enumerate_all(int p, const std::function<void(const BDiagram&)>& sink);
std::vector<BDiagram> enumerate_all(int p);

// Counts of weight-p diagrams bucketed by free outer side count 0..p, by
// explicit enumeration with per-diagram validation.
std::vector<Int> brute_histogram(int p);

// The same table from the closed recurrence; rows 0..max_p, row p has
// entries for bucket 0..p.
std::vector<std::vector<Int>> count_table(int max_p);

// Total number of weight-p diagrams, from the recurrence.
Int count_all(int p);

// Compares brute_histogram(p) against the recurrence row cell for cell; on
// mismatch returns false and writes the offending cells (brute numbers are
// the reference) into detail.
bool crosscheck(int p, std::string* detail = nullptr);

}  // namespace bdiag
