#include "bdiag/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <utility>

namespace bdiag {

namespace {

void check_cover(const std::vector<std::vector<int>>& parts) {
    std::vector<int> all;
    for (const auto& part : parts) {
        if (part.empty()) throw ValidationError("empty part");
        for (int e : part) {
            if (e <= 0) throw ValidationError("elements must be positive");
            all.push_back(e);
        }
    }
    std::sort(all.begin(), all.end());
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (all[i] == static_cast<int>(i)) throw ValidationError("duplicate element");
        if (all[i] != static_cast<int>(i) + 1)
            throw ValidationError("elements must cover 1..n");
    }
}

int total_size(const std::vector<std::vector<int>>& parts) {
    int n = 0;
    for (const auto& part : parts) n += static_cast<int>(part.size());
    return n;
}

void min_tree_edges(const std::vector<int>& word, std::size_t lo, std::size_t hi,
                    std::vector<std::pair<int, int>>& edges) {
    if (lo >= hi) return;
    std::size_t root = lo;
    for (std::size_t i = lo + 1; i < hi; ++i)
        if (word[i] < word[root]) root = i;
    int r = word[root];
    if (root > lo) {
        std::size_t left = lo;
        for (std::size_t i = lo + 1; i < root; ++i)
            if (word[i] < word[left]) left = i;
        edges.emplace_back(2 * r - 1, 2 * word[left] - 1);
        min_tree_edges(word, lo, root, edges);
    }
    if (root + 1 < hi) {
        std::size_t right = root + 1;
        for (std::size_t i = root + 2; i < hi; ++i)
            if (word[i] < word[right]) right = i;
        edges.emplace_back(2 * r, 2 * word[right] - 1);
        min_tree_edges(word, root + 1, hi, edges);
    }
}

struct PartitionParser {
    const std::string& s;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ValidationError(msg + " at offset " + std::to_string(pos));
    }
    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    void expect(char c) {
        skip_ws();
        if (pos >= s.size() || s[pos] != c) fail(std::string("expected '") + c + "'");
        ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    int number() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected number");
        long long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            if (v > 1000000) fail("number too large");
            ++pos;
        }
        return static_cast<int>(v);
    }
    void finish() {
        skip_ws();
        if (pos != s.size()) fail("trailing input");
    }
};

}  // namespace

SetPartition make_set_partition(std::vector<std::vector<int>> blocks) {
    check_cover(blocks);
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return SetPartition{std::move(blocks)};
}

ListPartition make_list_partition(std::vector<std::vector<int>> lists) {
    check_cover(lists);
    std::sort(lists.begin(), lists.end(), [](const auto& a, const auto& b) {
        return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
    });
    return ListPartition{std::move(lists)};
}

BDiagram b_of(const SetPartition& p) {
    int n = total_size(p.blocks);
    std::vector<int> full(n);
    std::iota(full.begin(), full.end(), 1);
    std::vector<std::pair<int, int>> edges;
    for (const auto& b : p.blocks)
        for (std::size_t i = 0; i + 1 < b.size(); ++i) edges.emplace_back(b[i], b[i + 1]);
    return make_diagram(n, std::vector<int>(n, 1), full, full, edges);
}

SetPartition partition_of(const BDiagram& g) {
    std::vector<std::vector<int>> blocks = connected_components(g);
    SetPartition p = make_set_partition(std::move(blocks));
    if (b_of(p) != g) throw ValidationError("diagram is not in the set partition basis");
    return p;
}

BDiagram m_of(const ListPartition& p) {
    int n = total_size(p.lists);
    std::vector<int> up(2 * n), down(n);
    std::iota(up.begin(), up.end(), 1);
    for (int i = 0; i < n; ++i) down[i] = 2 * i + 1;
    std::vector<std::pair<int, int>> edges;
    for (const auto& l : p.lists) min_tree_edges(l, 0, l.size(), edges);
    return make_diagram(n, std::vector<int>(n, 2), up, down, edges);
}

ListPartition lists_of(const BDiagram& g) {
    int n = g.n;
    std::vector<int> left(n + 1, 0), right(n + 1, 0);
    std::vector<bool> has_parent(n + 1, false);
    for (const auto& [a, b] : g.edges) {
        if (b % 2 == 0 || a > 2 * n || b > 2 * n)
            throw ValidationError("diagram is not in the list partition basis");
        int child = (b + 1) / 2;
        int parent = (a + 1) / 2;
        (a % 2 == 1 ? left : right)[parent] = child;
        has_parent[child] = true;
    }
    std::vector<std::vector<int>> lists;
    std::function<void(int, std::vector<int>&)> walk = [&](int v, std::vector<int>& out) {
        if (left[v]) walk(left[v], out);
        out.push_back(v);
        if (right[v]) walk(right[v], out);
    };
    for (int v = 1; v <= n; ++v) {
        if (has_parent[v]) continue;
        std::vector<int> word;
        walk(v, word);
        lists.push_back(std::move(word));
    }
    ListPartition p = make_list_partition(std::move(lists));
    if (m_of(p) != g) throw ValidationError("diagram is not in the list partition basis");
    return p;
}

std::map<SetPartition, Rat> wsym_product_oracle(const SetPartition& p1, const SetPartition& p2) {
    int n = total_size(p1.blocks);
    std::vector<std::vector<int>> shifted = p2.blocks;
    for (auto& b : shifted)
        for (int& e : b) e += n;

    std::map<SetPartition, Rat> out;
    std::size_t k1 = p1.blocks.size();
    // partner[i] = index into shifted, or -1
    std::vector<int> partner(k1, -1);
    std::vector<bool> used(shifted.size(), false);
    std::function<void(std::size_t)> go = [&](std::size_t j) {
        if (j == shifted.size()) {
            std::vector<std::vector<int>> blocks;
            for (std::size_t i = 0; i < k1; ++i) {
                std::vector<int> b = p1.blocks[i];
                if (partner[i] >= 0) {
                    const auto& extra = shifted[partner[i]];
                    b.insert(b.end(), extra.begin(), extra.end());
                }
                blocks.push_back(std::move(b));
            }
            for (std::size_t t = 0; t < shifted.size(); ++t)
                if (!used[t]) blocks.push_back(shifted[t]);
            out[make_set_partition(std::move(blocks))] += 1;
            return;
        }
        go(j + 1);
        for (std::size_t i = 0; i < k1; ++i) {
            if (partner[i] >= 0) continue;
            partner[i] = static_cast<int>(j);
            used[j] = true;
            go(j + 1);
            partner[i] = -1;
            used[j] = false;
        }
    };
    go(0);
    return out;
}

std::map<ListPartition, Rat> bwsym_product_oracle(const ListPartition& p1,
                                                  const ListPartition& p2) {
    int n = total_size(p1.lists);
    std::vector<std::vector<int>> shifted = p2.lists;
    for (auto& l : shifted)
        for (int& e : l) e += n;

    // every gap of every left list, one insertion at most
    std::vector<std::pair<std::size_t, std::size_t>> gaps;
    for (std::size_t i = 0; i < p1.lists.size(); ++i)
        for (std::size_t g = 0; g <= p1.lists[i].size(); ++g) gaps.emplace_back(i, g);

    std::map<ListPartition, Rat> out;
    // slot[j] = gap index for shifted list j, or -1 to keep it apart
    std::vector<int> slot(shifted.size(), -1);
    std::vector<bool> taken(gaps.size(), false);
    std::function<void(std::size_t)> go = [&](std::size_t j) {
        if (j == shifted.size()) {
            std::vector<std::vector<int>> lists = p1.lists;
            std::vector<std::pair<std::size_t, std::size_t>> ins;  // (gap index, shifted index)
            for (std::size_t t = 0; t < shifted.size(); ++t)
                if (slot[t] >= 0) ins.emplace_back(slot[t], t);
            std::sort(ins.rbegin(), ins.rend());
            for (const auto& [gi, t] : ins) {
                auto& host = lists[gaps[gi].first];
                host.insert(host.begin() + static_cast<long>(gaps[gi].second),
                            shifted[t].begin(), shifted[t].end());
            }
            for (std::size_t t = 0; t < shifted.size(); ++t)
                if (slot[t] < 0) lists.push_back(shifted[t]);
            out[make_list_partition(std::move(lists))] += 1;
            return;
        }
        go(j + 1);
        for (std::size_t gi = 0; gi < gaps.size(); ++gi) {
            if (taken[gi]) continue;
            taken[gi] = true;
            slot[j] = static_cast<int>(gi);
            go(j + 1);
            slot[j] = -1;
            taken[gi] = false;
        }
    };
    go(0);
    return out;
}

std::vector<SetPartition> all_set_partitions(int n) {
    std::vector<std::vector<std::vector<int>>> acc{{}};
    for (int e = 1; e <= n; ++e) {
        std::vector<std::vector<std::vector<int>>> next;
        for (const auto& p : acc) {
            for (std::size_t i = 0; i < p.size(); ++i) {
                auto q = p;
                q[i].push_back(e);
                next.push_back(std::move(q));
            }
            auto q = p;
            q.push_back({e});
            next.push_back(std::move(q));
        }
        acc = std::move(next);
    }
    std::vector<SetPartition> out;
    for (auto& p : acc) out.push_back(SetPartition{std::move(p)});
    return out;
}

std::vector<ListPartition> all_list_partitions(int n) {
    std::vector<std::vector<std::vector<int>>> acc{{}};
    for (int e = 1; e <= n; ++e) {
        std::vector<std::vector<std::vector<int>>> next;
        for (const auto& p : acc) {
            for (std::size_t i = 0; i < p.size(); ++i)
                for (std::size_t pos = 0; pos <= p[i].size(); ++pos) {
                    auto q = p;
                    q[i].insert(q[i].begin() + static_cast<long>(pos), e);
                    next.push_back(std::move(q));
                }
            auto q = p;
            q.push_back({e});
            next.push_back(std::move(q));
        }
        acc = std::move(next);
    }
    std::vector<ListPartition> out;
    for (auto& p : acc) out.push_back(ListPartition{std::move(p)});
    return out;
}

SetPartition parse_set_partition(const std::string& text) {
    PartitionParser p{text};
    p.expect('{');
    std::vector<std::vector<int>> blocks;
    if (!p.eat('}')) {
        do {
            std::vector<int> block{p.number()};
            while (p.eat(',')) block.push_back(p.number());
            blocks.push_back(std::move(block));
        } while (p.eat('|'));
        p.expect('}');
    }
    p.finish();
    return make_set_partition(std::move(blocks));
}

ListPartition parse_list_partition(const std::string& text) {
    PartitionParser p{text};
    p.expect('{');
    std::vector<std::vector<int>> lists;
    if (!p.eat('}')) {
        do {
            p.expect('[');
            std::vector<int> list{p.number()};
            while (p.eat(',')) list.push_back(p.number());
            p.expect(']');
            lists.push_back(std::move(list));
        } while (p.eat('|'));
        p.expect('}');
    }
    p.finish();
    return make_list_partition(std::move(lists));
}

std::string render(const SetPartition& p) {
    std::string out = "{";
    for (std::size_t i = 0; i < p.blocks.size(); ++i) {
        if (i) out += '|';
        for (std::size_t j = 0; j < p.blocks[i].size(); ++j) {
            if (j) out += ',';
            out += std::to_string(p.blocks[i][j]);
        }
    }
    out += '}';
    return out;
}

std::string render(const ListPartition& p) {
    std::string out = "{";
    for (std::size_t i = 0; i < p.lists.size(); ++i) {
        if (i) out += '|';
        out += '[';
        for (std::size_t j = 0; j < p.lists[i].size(); ++j) {
            if (j) out += ',';
            out += std::to_string(p.lists[i][j]);
        }
        out += ']';
    }
    out += '}';
    return out;
}

}  // namespace bdiag
