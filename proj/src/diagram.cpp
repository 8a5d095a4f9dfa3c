#include "bdiag/diagram.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <functional>
#include <set>

#include "json.hpp"

namespace bdiag {

namespace {

std::string fmt_edge(const std::pair<int, int>& e) {
    return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

}  // namespace

int BDiagram::vertex_of(int slot) const {
    assert(slot >= 1 && slot <= weight());
    int acc = 0;
    for (int i = 0; i < n; ++i) {
        acc += lambda[i];
        if (slot <= acc) return i + 1;
    }
    return n;
}

std::pair<int, int> BDiagram::slot_range(int vertex) const {
    assert(vertex >= 1 && vertex <= n);
    int before = 0;
    for (int i = 0; i < vertex - 1; ++i) before += lambda[i];
    return {before + 1, before + lambda[vertex - 1]};
}

const BDiagram& empty_diagram() {
    static const BDiagram e{};
    return e;
}

void validate(const BDiagram& g) {
    if (g.n < 0) throw ValidationError("vertex count is negative");
    if ((int)g.lambda.size() != g.n)
        throw ValidationError("lambda has " + std::to_string(g.lambda.size()) +
                              " entries for " + std::to_string(g.n) + " vertices");
    for (int i = 0; i < g.n; ++i)
        if (g.lambda[i] <= 0)
            throw ValidationError("lambda_" + std::to_string(i + 1) + " <= 0");
    const int w = g.weight();
    auto check_side = [&](const std::vector<int>& s, const char* name) {
        for (size_t i = 0; i < s.size(); ++i) {
            if (s[i] < 1 || s[i] > w)
                throw ValidationError(std::string(name) + " slot " + std::to_string(s[i]) +
                                      " outside 1.." + std::to_string(w));
            if (i > 0 && s[i] == s[i - 1])
                throw ValidationError(std::string(name) + " slot " + std::to_string(s[i]) +
                                      " listed twice");
            if (i > 0 && s[i] < s[i - 1])
                throw ValidationError(std::string(name) + " not sorted");
        }
    };
    check_side(g.up, "up");
    check_side(g.down, "down");
    std::set<int> sources, targets;
    for (const auto& e : g.edges) {
        if (e.first < 1 || e.first > w || e.second < 1 || e.second > w)
            throw ValidationError("edge " + fmt_edge(e) + " outside 1.." + std::to_string(w));
        if (!std::binary_search(g.up.begin(), g.up.end(), e.first))
            throw ValidationError("edge " + fmt_edge(e) + " starts on a cut outer side");
        if (!std::binary_search(g.down.begin(), g.down.end(), e.second))
            throw ValidationError("edge " + fmt_edge(e) + " ends on a cut inner side");
        if (g.vertex_of(e.first) >= g.vertex_of(e.second))
            throw ValidationError("edge " + fmt_edge(e) + " has v(a) >= v(b)");
        if (!sources.insert(e.first).second)
            throw ValidationError("slot " + std::to_string(e.first) + " is a duplicate source");
        if (!targets.insert(e.second).second)
            throw ValidationError("slot " + std::to_string(e.second) + " is a duplicate target");
    }
    if (!std::is_sorted(g.edges.begin(), g.edges.end()))
        throw ValidationError("edges not sorted");
}

BDiagram make_diagram(int n, std::vector<int> lambda, std::vector<int> up,
                      std::vector<int> down, std::vector<std::pair<int, int>> edges) {
    std::sort(up.begin(), up.end());
    std::sort(down.begin(), down.end());
    std::sort(edges.begin(), edges.end());
    BDiagram g{n, std::move(lambda), std::move(up), std::move(down), std::move(edges)};
    validate(g);
    return g;
}

DiagramStats stats(const BDiagram& g) {
    DiagramStats s;
    s.weight = g.weight();
    s.tau = (int)g.edges.size();
    s.h_up = s.weight - s.tau;
    s.h_down = s.weight - s.tau;
    s.hf_up = (int)free_up(g).size();
    s.hf_down = (int)free_down(g).size();
    s.h_c = (s.h_up - s.hf_up) + (s.h_down - s.hf_down);
    return s;
}

std::vector<int> free_up(const BDiagram& g) {
    std::vector<int> sources;
    sources.reserve(g.edges.size());
    for (const auto& e : g.edges) sources.push_back(e.first);
    std::sort(sources.begin(), sources.end());
    std::vector<int> out;
    std::set_difference(g.up.begin(), g.up.end(), sources.begin(), sources.end(),
                        std::back_inserter(out));
    return out;
}

std::vector<int> free_down(const BDiagram& g) {
    std::vector<int> targets;
    targets.reserve(g.edges.size());
    for (const auto& e : g.edges) targets.push_back(e.second);
    std::sort(targets.begin(), targets.end());
    std::vector<int> out;
    std::set_difference(g.down.begin(), g.down.end(), targets.begin(), targets.end(),
                        std::back_inserter(out));
    return out;
}

BDiagram subdiagram(const BDiagram& g, const std::vector<int>& vertices) {
    for (size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] < 1 || vertices[i] > g.n)
            throw ValidationError("subdiagram vertex " + std::to_string(vertices[i]) +
                                  " outside 1.." + std::to_string(g.n));
        if (i > 0 && vertices[i] <= vertices[i - 1])
            throw ValidationError("subdiagram vertex list not strictly increasing");
    }
    std::vector<int> new_slot(g.weight() + 1, 0);
    std::vector<int> lambda;
    lambda.reserve(vertices.size());
    int next = 0;
    for (int v : vertices) {
        auto [lo, hi] = g.slot_range(v);
        lambda.push_back(g.lambda[v - 1]);
        for (int s = lo; s <= hi; ++s) new_slot[s] = ++next;
    }
    BDiagram out;
    out.n = (int)vertices.size();
    out.lambda = std::move(lambda);
    for (int s : g.up)
        if (new_slot[s]) out.up.push_back(new_slot[s]);
    for (int s : g.down)
        if (new_slot[s]) out.down.push_back(new_slot[s]);
    for (const auto& e : g.edges)
        if (new_slot[e.first] && new_slot[e.second])
            out.edges.emplace_back(new_slot[e.first], new_slot[e.second]);
    std::sort(out.up.begin(), out.up.end());
    std::sort(out.down.begin(), out.down.end());
    std::sort(out.edges.begin(), out.edges.end());
#ifndef NDEBUG
    validate(out);
#endif
    return out;
}

std::vector<std::vector<int>> connected_components(const BDiagram& g) {
    std::vector<int> parent(g.n + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : g.edges) {
        int a = find(g.vertex_of(e.first)), b = find(g.vertex_of(e.second));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<std::vector<int>> comps;
    std::vector<int> index(g.n + 1, -1);
    for (int v = 1; v <= g.n; ++v) {
        int r = find(v);
        if (index[r] < 0) {
            index[r] = (int)comps.size();
            comps.emplace_back();
        }
        comps[index[r]].push_back(v);
    }
    return comps;
}

std::vector<std::vector<int>> isolated_sets(const BDiagram& g) {
    auto comps = connected_components(g);
    const int c = (int)comps.size();
    std::vector<std::vector<int>> out;
    out.reserve(size_t(1) << c);
    for (unsigned mask = 0; mask < (1u << c); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < c; ++i)
            if (mask >> i & 1) s.insert(s.end(), comps[i].begin(), comps[i].end());
        std::sort(s.begin(), s.end());
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<DecoratedPath> paths(const BDiagram& g) {
    const int w = g.weight();
    std::vector<int> next(w + 1, 0);
    std::vector<char> is_target(w + 1, 0);
    for (const auto& e : g.edges) {
        next[e.first] = e.second;
        is_target[e.second] = 1;
    }
    std::vector<DecoratedPath> out;
    for (int s = 1; s <= w; ++s) {
        if (is_target[s]) continue;
        DecoratedPath p;
        for (int cur = s; cur; cur = next[cur]) p.slots.push_back(cur);
        p.start_free = std::binary_search(g.down.begin(), g.down.end(), s);
        p.end_free = std::binary_search(g.up.begin(), g.up.end(), p.slots.back());
        out.push_back(std::move(p));
    }
    return out;
}

BDiagram compose(const BDiagram& bottom, const BDiagram& top,
                 const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size())
        throw ValidationError("compose: pairing lists differ in length");
    auto fu = free_up(bottom);
    auto fd = free_down(top);
    std::set<int> used_b;
    for (size_t l = 0; l < a.size(); ++l) {
        if (l > 0 && a[l] <= a[l - 1])
            throw ValidationError("compose: outer pairing not strictly increasing");
        if (!std::binary_search(fu.begin(), fu.end(), a[l]))
            throw ValidationError("compose: slot " + std::to_string(a[l]) +
                                  " is not a free outer side of the bottom diagram");
        if (!std::binary_search(fd.begin(), fd.end(), b[l]))
            throw ValidationError("compose: slot " + std::to_string(b[l]) +
                                  " is not a free inner side of the top diagram");
        if (!used_b.insert(b[l]).second)
            throw ValidationError("compose: slot " + std::to_string(b[l]) +
                                  " paired twice on the top diagram");
    }
    const int w = bottom.weight();
    BDiagram out;
    out.n = bottom.n + top.n;
    out.lambda = bottom.lambda;
    out.lambda.insert(out.lambda.end(), top.lambda.begin(), top.lambda.end());
    out.up = bottom.up;
    for (int s : top.up) out.up.push_back(s + w);
    out.down = bottom.down;
    for (int s : top.down) out.down.push_back(s + w);
    out.edges = bottom.edges;
    for (size_t l = 0; l < a.size(); ++l) out.edges.emplace_back(a[l], b[l] + w);
    for (const auto& e : top.edges) out.edges.emplace_back(e.first + w, e.second + w);
    std::sort(out.edges.begin(), out.edges.end());
#ifndef NDEBUG
    validate(out);
#endif
    return out;
}

BDiagram juxtapose(const BDiagram& bottom, const BDiagram& top) {
    return compose(bottom, top, {}, {});
}

namespace {

// all length-k injections from `pool` (sorted), lexicographic
void injections(const std::vector<int>& pool, int k, std::vector<int>& cur,
                std::vector<char>& used, const std::function<void()>& emit) {
    if ((int)cur.size() == k) {
        emit();
        return;
    }
    for (size_t i = 0; i < pool.size(); ++i) {
        if (used[i]) continue;
        used[i] = 1;
        cur.push_back(pool[i]);
        injections(pool, k, cur, used, emit);
        cur.pop_back();
        used[i] = 0;
    }
}

}  // namespace

std::vector<BDiagram> star_expand(const BDiagram& bottom, const BDiagram& top) {
    auto fu = free_up(bottom);
    auto fd = free_down(top);
    const int kmax = (int)std::min(fu.size(), fd.size());
    std::vector<BDiagram> out;
    for (int k = 0; k <= kmax; ++k) {
        std::vector<int> comb(k);
        // k-subsets of fu in lexicographic order
        std::vector<int> idx(k);
        std::iota(idx.begin(), idx.end(), 0);
        bool more = true;
        while (more) {
            for (int i = 0; i < k; ++i) comb[i] = fu[idx[i]];
            std::vector<int> cur;
            std::vector<char> used(fd.size(), 0);
            injections(fd, k, cur, used, [&] { out.push_back(compose(bottom, top, comb, cur)); });
            more = false;
            for (int i = k - 1; i >= 0; --i) {
                if (idx[i] < (int)fu.size() - (k - i)) {
                    ++idx[i];
                    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                    more = true;
                    break;
                }
            }
        }
    }
    return out;
}

std::vector<BDiagram> factorize(const BDiagram& g) {
    if (g.is_empty()) throw ValidationError("factorize: empty diagram");
    std::vector<int> crossing(g.n, 0);  // crossing[m] counts edges over the cut after vertex m
    for (const auto& e : g.edges) {
        for (int m = g.vertex_of(e.first); m < g.vertex_of(e.second); ++m) ++crossing[m];
    }
    std::vector<BDiagram> out;
    int start = 1;
    for (int m = 1; m <= g.n; ++m) {
        if (m == g.n || crossing[m] == 0) {
            std::vector<int> range(m - start + 1);
            std::iota(range.begin(), range.end(), start);
            out.push_back(subdiagram(g, range));
            start = m + 1;
        }
    }
    return out;
}

bool is_indivisible(const BDiagram& g) {
    if (g.is_empty()) return false;
    return factorize(g).size() == 1;
}

std::string to_json_string(const BDiagram& g) {
    nlohmann::ordered_json j;
    j["n"] = g.n;
    j["lambda"] = g.lambda;
    j["up"] = g.up;
    j["down"] = g.down;
    auto edges = nlohmann::ordered_json::array();
    for (const auto& e : g.edges) edges.push_back({e.first, e.second});
    j["edges"] = std::move(edges);
    return j.dump();
}

BDiagram diagram_from_json_string(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("diagram JSON: ") + e.what());
    }
    if (!j.is_object()) throw ValidationError("diagram JSON: not an object");
    for (auto& [key, _] : j.items())
        if (key != "n" && key != "lambda" && key != "up" && key != "down" && key != "edges")
            throw ValidationError("diagram JSON: unknown key \"" + key + "\"");
    for (const char* key : {"n", "lambda", "up", "down", "edges"})
        if (!j.contains(key))
            throw ValidationError("diagram JSON: missing key \"" + std::string(key) + "\"");
    auto int_array = [](const nlohmann::json& a, const char* what) {
        if (!a.is_array()) throw ValidationError("diagram JSON: " + std::string(what) + " is not an array");
        std::vector<int> out;
        for (const auto& x : a) {
            if (!x.is_number_integer())
                throw ValidationError("diagram JSON: " + std::string(what) + " entry is not an integer");
            out.push_back(x.get<int>());
        }
        return out;
    };
    if (!j["n"].is_number_integer()) throw ValidationError("diagram JSON: n is not an integer");
    std::vector<std::pair<int, int>> edges;
    if (!j["edges"].is_array()) throw ValidationError("diagram JSON: edges is not an array");
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw ValidationError("diagram JSON: edge is not a pair of integers");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return make_diagram(j["n"].get<int>(), int_array(j["lambda"], "lambda"),
                        int_array(j["up"], "up"), int_array(j["down"], "down"), std::move(edges));
}

}  // namespace bdiag
