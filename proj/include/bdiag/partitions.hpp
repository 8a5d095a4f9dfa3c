#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "bdiag/diagram.hpp"
#include "bdiag/rational.hpp"

namespace bdiag {

// Partition of 1..n into blocks; blocks are stored ascending and ordered by
// their smallest element.
struct SetPartition {
    std::vector<std::vector<int>> blocks;
    auto operator<=>(const SetPartition&) const = default;
};

// Partition of 1..n into ordered lists; lists are ordered by their smallest
// element, contents keep their order.
struct ListPartition {
    std::vector<std::vector<int>> lists;
    auto operator<=>(const ListPartition&) const = default;
};

SetPartition make_set_partition(std::vector<std::vector<int>> blocks);
ListPartition make_list_partition(std::vector<std::vector<int>> lists);

// One single-slot vertex per element, no cut sides, successor edges inside
// each block.
BDiagram b_of(const SetPartition& p);
SetPartition partition_of(const BDiagram& g);

// One two-slot vertex per element; each list becomes a binary tree rooted at
// its minimum (left and right subwords hang off the first and second slot)
// whose in-order reading restores the list. Second inner sides are cut.
BDiagram m_of(const ListPartition& p);
ListPartition lists_of(const BDiagram& g);

// Product rule on the partition side: merge blocks of the right factor
// (shifted) into blocks of the left one, one partner each.
std::map<SetPartition, Rat> wsym_product_oracle(const SetPartition& p1, const SetPartition& p2);

// Product rule on the list side: each shifted right list either stays apart
// or lands whole in a gap of a left list, at most one list per gap.
std::map<ListPartition, Rat> bwsym_product_oracle(const ListPartition& p1,
                                                  const ListPartition& p2);

std::vector<SetPartition> all_set_partitions(int n);
std::vector<ListPartition> all_list_partitions(int n);

// "{1,3|2}" and "{[3,1]|[2]}"; "{}" for the empty partition.
SetPartition parse_set_partition(const std::string& text);
ListPartition parse_list_partition(const std::string& text);
std::string render(const SetPartition& p);
std::string render(const ListPartition& p);

}  // namespace bdiag
