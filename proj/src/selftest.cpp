#include "bdiag/selftest.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <tuple>
#include <utility>
#include <vector>

#include "bdiag/diagram.hpp"
#include "bdiag/enumeration.hpp"
#include "bdiag/fusion.hpp"
#include "bdiag/heisenberg.hpp"
#include "bdiag/hopf.hpp"
#include "bdiag/partitions.hpp"

namespace bdiag {

namespace {

const std::vector<std::vector<long long>> kRows = {
    {1},
    {2, 2},
    {10, 18, 8},
    {62, 154, 124, 32},
    {462, 1426, 1596, 760, 128},
    {3982, 14506, 20380, 13680, 4336, 512},
    {38646, 161042, 269284, 229448, 104032, 23520, 2048},
};

BDiagram sample_bottom() {
    return make_diagram(4, {1, 3, 2, 2}, {1, 3, 4, 6}, {1, 3, 6, 7}, {{1, 6}, {3, 7}});
}

BDiagram sample_top() {
    return make_diagram(3, {3, 1, 2}, {1, 2, 3, 4, 5}, {1, 2, 3, 4, 5, 6},
                        {{1, 6}, {2, 4}, {4, 5}});
}

const char* kStackedJson =
    "{\"n\":7,\"lambda\":[1,3,2,2,3,1,2],\"up\":[1,3,4,6,9,10,11,12,13],"
    "\"down\":[1,3,6,7,9,10,11,12,13,14],"
    "\"edges\":[[1,6],[3,7],[4,11],[6,9],[9,14],[10,12],[12,13]]}";

struct Check {
    bool ok = true;
    std::string why;

    void fail(const std::string& msg) {
        if (ok) {
            ok = false;
            why = msg;
        }
    }
    void require(bool cond, const std::string& msg) {
        if (!cond) fail(msg);
    }
};

CriterionResult wrap(int index, const std::string& name, const Check& c,
                     const std::string& pass_detail) {
    return {index, name, c.ok, c.ok ? pass_detail : c.why};
}

// Shared populations: the weight <= 1 pairs, every weight-2 pair, and seeded
// weight-3 pairs; trimmed at the quick level.
struct Pools {
    std::vector<BDiagram> w1, w2, w3;
    std::vector<std::pair<BDiagram, BDiagram>> pairs;
    std::vector<std::tuple<BDiagram, BDiagram, BDiagram>> triples;
    std::vector<BDiagram> singles;
    std::string pair_note;
};

Pools build_pools(CheckLevel level) {
    Pools p;
    p.w1 = enumerate_all(1);
    p.w2 = enumerate_all(2);
    p.w3 = enumerate_all(3);
    std::mt19937_64 rng(20240811);
    auto pick = [&](const std::vector<BDiagram>& pool) -> const BDiagram& {
        return pool[rng() % pool.size()];
    };

    for (const auto& a : p.w1)
        for (const auto& b : p.w1) p.pairs.emplace_back(a, b);
    std::size_t n2 = 0, n3 = 0;
    if (level == CheckLevel::quick) {
        for (int i = 0; i < 100; ++i) p.pairs.emplace_back(pick(p.w2), pick(p.w2));
        for (int i = 0; i < 50; ++i) p.pairs.emplace_back(pick(p.w3), pick(p.w3));
        n2 = 100;
        n3 = 50;
    } else {
        for (const auto& a : p.w2)
            for (const auto& b : p.w2) p.pairs.emplace_back(a, b);
        for (int i = 0; i < 200; ++i) p.pairs.emplace_back(pick(p.w3), pick(p.w3));
        n2 = p.w2.size() * p.w2.size();
        n3 = 200;
    }

    for (const auto& a : p.w1)
        for (const auto& b : p.w1)
            for (const auto& c : p.w1) p.triples.emplace_back(a, b, c);
    if (level == CheckLevel::quick) {
        for (int i = 0; i < 100; ++i)
            p.triples.emplace_back(pick(p.w2), pick(p.w2), pick(p.w2));
        for (int i = 0; i < 50; ++i)
            p.triples.emplace_back(pick(p.w3), pick(p.w3), pick(p.w3));
    } else {
        for (const auto& a : p.w2)
            for (const auto& b : p.w2)
                for (const auto& c : p.w2) p.triples.emplace_back(a, b, c);
        for (int i = 0; i < 200; ++i)
            p.triples.emplace_back(pick(p.w3), pick(p.w3), pick(p.w3));
    }

    p.singles.push_back(empty_diagram());
    for (const auto& d : p.w1) p.singles.push_back(d);
    for (const auto& d : p.w2) p.singles.push_back(d);
    for (int i = 0; i < 50; ++i) p.singles.push_back(pick(p.w3));

    std::ostringstream note;
    note << "16 + " << n2 << " + " << n3 << " pairs";
    p.pair_note = note.str();
    return p;
}

CriterionResult c1_enumeration_table(CheckLevel level) {
    Check c;
    int max_p = level == CheckLevel::deep ? 6 : 5;
    for (int p = 0; p <= max_p && c.ok; ++p) {
        std::vector<Int> row = brute_histogram(p);
        c.require(row.size() == kRows[p].size(), "row " + std::to_string(p) + " has wrong size");
        for (std::size_t q = 0; c.ok && q < row.size(); ++q) {
            if (row[q] != kRows[p][q]) {
                std::ostringstream why;
                why << "cell (" << p << "," << q << ") = " << row[q] << ", expected "
                    << kRows[p][q];
                c.fail(why.str());
            }
        }
    }
    return wrap(1, "enumeration-table", c,
                "brute-force histogram matches the stored rows for weight <= " +
                    std::to_string(max_p));
}

CriterionResult c2_recurrence(CheckLevel level) {
    Check c;
    int max_p = level == CheckLevel::quick ? 4 : (level == CheckLevel::deep ? 6 : 5);
    for (int p = 0; p <= max_p && c.ok; ++p) {
        std::string detail;
        if (!crosscheck(p, &detail)) c.fail("weight " + std::to_string(p) + ": " + detail);
    }
    return wrap(2, "recurrence-vs-brute", c,
                "recurrence equals enumeration cell for cell up to weight " +
                    std::to_string(max_p));
}

CriterionResult c3_totals() {
    Check c;
    const std::vector<long long> totals{1, 4, 36, 372, 4372, 57396};
    std::vector<std::vector<Int>> table = count_table(5);
    for (int p = 0; p <= 5 && c.ok; ++p) {
        Int sum = 0;
        for (const Int& v : table[p]) sum += v;
        if (sum != totals[p] || count_all(p) != totals[p]) {
            std::ostringstream why;
            why << "total at weight " << p << " = " << sum << ", expected " << totals[p];
            c.fail(why.str());
        }
    }
    return wrap(3, "weight-totals", c, "totals 1, 4, 36, 372, 4372, 57396 reproduced");
}

CriterionResult c4_normal_ordering() {
    Check c;
    OperatorExpr e = parse_expr("a+^2 a^2 a+^2 a^2");
    NormalPoly expect;
    expect.add({4, 4, 0, 0}, 1);
    expect.add({3, 3, 0, 0}, 4);
    expect.add({2, 2, 0, 0}, 2);
    c.require(normal_order(e, Route::rewrite) == expect, "rewrite route disagrees");
    c.require(normal_order(e, Route::diagram) == expect, "diagram route disagrees");
    c.require(normal_order(e, Route::monomial) == expect, "monomial route disagrees");

    DiagramSum prod = star(vertex_diagram(2, 2), vertex_diagram(2, 2));
    c.require(prod.size() == 7, "two-vertex product has " + std::to_string(prod.size()) +
                                    " diagrams, expected 7");
    NormalPoly projected;
    for (const auto& [d, coeff] : prod.terms()) {
        c.require(coeff == 1, "non-unit coefficient in the diagram route");
        projected.add(project(d), 1);
    }
    NormalPoly marked;
    marked.add({4, 4, 0, 0}, 1);
    marked.add({3, 3, 0, 1}, 4);
    marked.add({2, 2, 0, 2}, 2);
    c.require(projected == marked, "projection multiplicities are not 1/4/2");
    return wrap(4, "normal-ordering-routes", c,
                "all three routes give a+^4 a^4 + 4 a+^3 a^3 + 2 a+^2 a^2, 7 diagrams, "
                "multiplicities 1/4/2");
}

CriterionResult c5_product_goldens() {
    Check c;
    BDiagram v21 = vertex_diagram(2, 1);
    std::vector<BDiagram> three = star_expand(v21, v21);
    c.require(three.size() == 3, "one-free-outer square gives " +
                                     std::to_string(three.size()) + " terms, expected 3");
    std::set<BDiagram> got(three.begin(), three.end());
    std::set<BDiagram> want{juxtapose(v21, v21), compose(v21, v21, {1}, {1}),
                            compose(v21, v21, {1}, {2})};
    c.require(got == want, "three-term product differs from the displayed diagrams");

    BDiagram v22 = vertex_diagram(2, 2);
    std::vector<BDiagram> seven = star_expand(v22, v22);
    std::set<BDiagram> dedup(seven.begin(), seven.end());
    c.require(seven.size() == 7 && dedup.size() == 7,
              "two-free-outer square does not give 7 distinct terms");

    BDiagram stacked = compose(sample_bottom(), sample_top(), {4, 6}, {3, 1});
    c.require(to_json_string(stacked) == kStackedJson,
              "seven-vertex composition JSON differs");
    return wrap(5, "star-product-goldens", c,
                "3-term and 7-term squares exact, 7-vertex composition JSON bit-exact");
}

using TripleKey = std::tuple<BDiagram, BDiagram, BDiagram>;

std::map<TripleKey, Rat> split_left(const BDiagram& g) {
    std::map<TripleKey, Rat> out;
    TensorSum first = coproduct(g);
    for (const auto& [lr, c] : first.terms()) {
        TensorSum second = coproduct(lr.first);
        for (const auto& [xy, c2] : second.terms())
            out[{xy.first, xy.second, lr.second}] += c * c2;
    }
    return out;
}

std::map<TripleKey, Rat> split_right(const BDiagram& g) {
    std::map<TripleKey, Rat> out;
    TensorSum first = coproduct(g);
    for (const auto& [lr, c] : first.terms()) {
        TensorSum second = coproduct(lr.second);
        for (const auto& [xy, c2] : second.terms())
            out[{lr.first, xy.first, xy.second}] += c * c2;
    }
    return out;
}

CriterionResult c6_hopf_axioms(const Pools& pools) {
    Check c;
    for (const auto& [a, b, d] : pools.triples) {
        if (!c.ok) break;
        DiagramSum lhs = star(star(DiagramSum(a), DiagramSum(b)), DiagramSum(d));
        DiagramSum rhs = star(DiagramSum(a), star(DiagramSum(b), DiagramSum(d)));
        c.require(lhs == rhs, "product associativity fails");
    }
    for (const auto& g : pools.singles) {
        if (!c.ok) break;
        c.require(split_left(g) == split_right(g), "coproduct coassociativity fails");

        TensorSum split = coproduct(g);
        TensorSum swapped;
        DiagramSum left_counited, right_counited;
        for (const auto& [lr, coeff] : split.terms()) {
            swapped.add(lr.second, lr.first, coeff);
            if (lr.first.is_empty()) left_counited.add(lr.second, coeff);
            if (lr.second.is_empty()) right_counited.add(lr.first, coeff);
        }
        c.require(swapped == split, "coproduct cocommutativity fails");
        c.require(left_counited == DiagramSum(g) && right_counited == DiagramSum(g),
                  "counit law fails");
        c.require(star(DiagramSum(g), DiagramSum(empty_diagram())) == DiagramSum(g),
                  "empty diagram is not a right unit");
    }
    for (const auto& [a, b] : pools.pairs) {
        if (!c.ok) break;
        DiagramSum prod = star(DiagramSum(a), DiagramSum(b));
        c.require(coproduct(prod) == tensor_star(coproduct(a), coproduct(b)),
                  "coproduct is not multiplicative");
    }
    return wrap(6, "hopf-axioms", c,
                "associativity, coassociativity, cocommutativity, counit and "
                "bialgebra law exact over " +
                    pools.pair_note);
}

CriterionResult c7_word_morphism(const Pools& pools, CheckLevel level) {
    Check c;
    for (const auto& [a, b] : pools.pairs) {
        if (!c.ok) break;
        FusionSum lhs = fstar(word_of(a), word_of(b));
        FusionSum rhs;
        for (const auto& t : star_expand(a, b)) rhs.add(word_of(t), 1);
        c.require(lhs == rhs, "word product disagrees with the diagram product");
    }
    int max_p = level == CheckLevel::quick ? 3 : 4;
    for (int p = 0; p <= max_p && c.ok; ++p)
        enumerate_all(p, [&](const BDiagram& g) {
            if (c.ok && diagram_of(word_of(g)) != g) c.fail("word round trip fails");
        });
    return wrap(7, "word-encoding-morphism", c,
                "word product mirrors the diagram product over " + pools.pair_note +
                    ", round trip exact to weight " + std::to_string(max_p));
}

CriterionResult c8_primitives(CheckLevel level) {
    Check c;
    int max_p = level == CheckLevel::quick ? 3 : 4;
    long long scanned = 0;
    for (int p = 0; p <= max_p && c.ok; ++p)
        enumerate_all(p, [&](const BDiagram& g) {
            if (!c.ok) return;
            DiagramSum pi = eulerian(g);
            if (!is_primitive(pi)) c.fail("projection of a diagram is not primitive");
            if (connected_components(g).size() == 1 && pi != DiagramSum(g))
                c.fail("projection moves a connected diagram");
            ++scanned;
        });
    c.require(eulerian(empty_diagram()).empty(), "projection of the empty diagram is not 0");

    std::vector<int> full6{1, 2, 3, 4, 5, 6};
    BDiagram b = make_diagram(3, {2, 2, 2}, {1, 3, 5}, full6, {{1, 5}});
    BDiagram chain = make_diagram(2, {2, 2}, {1, 3}, {1, 2, 3, 4}, {{1, 3}});
    BDiagram lone = make_diagram(1, {2}, {1}, {1, 2}, {});
    BDiagram doubled = make_diagram(3, {2, 2, 2}, {1, 3, 5}, full6, {{1, 3}, {3, 5}});
    DiagramSum pi = eulerian(b);
    c.require(pi.coeff(b) == 1, "worked example: diagram itself lost");
    c.require(pi.coeff(juxtapose(chain, lone)) == Rat(-1, 2) &&
                  pi.coeff(juxtapose(lone, chain)) == Rat(-1, 2),
              "worked example: -1/2 coefficients differ");
    c.require(pi.coeff(doubled) == -1, "worked example: -1 coefficient differs");
    c.require(pi.size() == 7 && is_primitive(pi), "worked example: wrong support");

    return wrap(8, "primitive-projection", c,
                "projection primitive for all " + std::to_string(scanned) +
                    " diagrams of weight <= " + std::to_string(max_p) +
                    ", connected diagrams fixed, worked example exact");
}

CriterionResult c9_stirling_rows() {
    Check c;
    std::map<std::pair<int, int>, Int> second_kind{{{0, 0}, 1}};
    for (int n = 1; n <= 6; ++n)
        for (int k = n; k >= 1; --k)
            second_kind[{n, k}] = k * second_kind[{n - 1, k}] + second_kind[{n - 1, k - 1}];

    for (int n = 1; n <= 6 && c.ok; ++n) {
        StirlingRow row = stirling(std::vector<int>(n, 1), std::vector<int>(n, 1));
        std::map<int, Int> expect;
        for (int k = 1; k <= n; ++k) expect[k] = second_kind[{n, k}];
        c.require(row.alpha == 0 && row.s == expect,
                  "second-kind row differs at n = " + std::to_string(n));

        std::vector<Letter> word;
        for (int i = 0; i < n; ++i) {
            word.push_back(Letter::a_plus);
            word.push_back(Letter::a);
        }
        NormalPoly direct = normal_order(word, Route::rewrite);
        NormalPoly from_row;
        for (const auto& [k, coeff] : row.s) from_row.add({k, k, 0, 0}, coeff);
        c.require(direct == from_row, "rewriting oracle differs at n = " + std::to_string(n));

        StirlingRow lah = stirling(std::vector<int>(n, 2), std::vector<int>(n, 1));
        std::map<int, Int> lah_expect;
        for (int k = 1; k <= n; ++k)
            lah_expect[k] = binomial(n - 1, k - 1) * factorial(n) / factorial(k);
        c.require(lah.alpha == n && lah.s == lah_expect,
                  "two-one row differs at n = " + std::to_string(n));
    }
    return wrap(9, "stirling-rows", c,
                "second-kind rows match rewriting and the two-one rows match "
                "C(n-1,k-1) n!/k! for n <= 6");
}

CriterionResult c10_block_partitions() {
    Check c;
    SetPartition p1 = make_set_partition({{1, 3}, {2}});
    SetPartition p2 = make_set_partition({{1}, {2}});
    std::map<SetPartition, Rat> expect{
        {make_set_partition({{1, 3}, {2}, {4}, {5}}), 1},
        {make_set_partition({{1, 3, 4}, {2}, {5}}), 1},
        {make_set_partition({{1, 3, 5}, {2}, {4}}), 1},
        {make_set_partition({{1, 3}, {2, 4}, {5}}), 1},
        {make_set_partition({{1, 3}, {2, 5}, {4}}), 1},
        {make_set_partition({{1, 3, 4}, {2, 5}}), 1},
        {make_set_partition({{1, 3, 5}, {2, 4}}), 1},
    };
    c.require(wsym_product_oracle(p1, p2) == expect, "merge oracle differs from the 7 terms");
    std::map<SetPartition, Rat> via_star;
    for (const auto& t : star_expand(b_of(p1), b_of(p2))) via_star[partition_of(t)] += 1;
    c.require(via_star == expect, "diagram product differs from the 7 terms");

    const std::vector<std::size_t> bell{1, 1, 2, 5, 15};
    for (int n = 0; n <= 4 && c.ok; ++n) {
        auto ps = all_set_partitions(n);
        std::set<BDiagram> images;
        for (const auto& p : ps) {
            BDiagram g = b_of(p);
            if (partition_of(g) != p) c.fail("partition round trip fails");
            images.insert(g);
        }
        c.require(ps.size() == bell[n] && images.size() == bell[n],
                  "partition diagram count differs from the Bell number at n = " +
                      std::to_string(n));
    }
    return wrap(10, "block-partition-product", c,
                "7-term product exact both ways, Bell counts 1, 1, 2, 5, 15");
}

std::multiset<std::multiset<int>> component_profile(const std::vector<BDiagram>& terms) {
    std::multiset<std::multiset<int>> out;
    for (const auto& t : terms) {
        std::multiset<int> sizes;
        for (const auto& comp : connected_components(t))
            sizes.insert(static_cast<int>(comp.size()));
        out.insert(std::move(sizes));
    }
    return out;
}

CriterionResult c11_list_partitions() {
    Check c;
    ListPartition p1 = make_list_partition({{3, 1}, {2}});
    ListPartition p2 = make_list_partition({{1, 2}});
    std::map<ListPartition, Rat> oracle = bwsym_product_oracle(p1, p2);
    c.require(oracle.size() == 6, "insertion oracle does not give 6 terms");

    std::vector<BDiagram> star_terms = star_expand(m_of(p1), m_of(p2));
    c.require(star_terms.size() == 6, "diagram product does not give 6 terms");

    std::multiset<std::multiset<int>> oracle_profile;
    for (const auto& [p, coeff] : oracle) {
        std::multiset<int> sizes;
        for (const auto& l : p.lists) sizes.insert(static_cast<int>(l.size()));
        for (int i = 0; i < coeff.convert_to<int>(); ++i) oracle_profile.insert(sizes);
    }
    c.require(component_profile(star_terms) == oracle_profile,
              "component size multisets differ between oracle and diagram product");

    const std::vector<std::size_t> a000262{1, 1, 3, 13, 73};
    for (int n = 1; n <= 4 && c.ok; ++n) {
        auto ps = all_list_partitions(n);
        std::set<BDiagram> images;
        std::size_t singles = 0, connected = 0;
        for (const auto& p : ps) {
            BDiagram g = m_of(p);
            images.insert(g);
            if (p.lists.size() == 1) ++singles;
            if (connected_components(g).size() == 1) ++connected;
        }
        std::size_t fac = 1;
        for (int i = 2; i <= n; ++i) fac *= i;
        c.require(ps.size() == a000262[n] && images.size() == a000262[n],
                  "list diagram count differs at n = " + std::to_string(n));
        c.require(singles == fac && connected == fac,
                  "connected list diagram count is not n! at n = " + std::to_string(n));
    }
    return wrap(11, "list-partition-product", c,
                "6-term product matches by count and component profile, counts 1, 3, 13, 73 "
                "with n! connected");
}

CriterionResult c12_projection_morphism(const Pools& pools) {
    Check c;
    for (const auto& [a, b] : pools.pairs) {
        if (!c.ok) break;
        NormalPoly lhs = mul(NormalPoly(project(a)), NormalPoly(project(b)));
        NormalPoly rhs;
        for (const auto& t : star_expand(a, b)) rhs.add(project(t), 1);
        c.require(lhs == rhs, "projection does not intertwine the products");
    }
    return wrap(12, "projection-morphism", c,
                "normal form product matches the projected diagram product over " +
                    pools.pair_note + " with both markers carried");
}

}  // namespace

std::vector<CriterionResult> run_selftests(CheckLevel level) {
    Pools pools = build_pools(level);
    std::vector<CriterionResult> out;
    out.push_back(c1_enumeration_table(level));
    out.push_back(c2_recurrence(level));
    out.push_back(c3_totals());
    out.push_back(c4_normal_ordering());
    out.push_back(c5_product_goldens());
    out.push_back(c6_hopf_axioms(pools));
    out.push_back(c7_word_morphism(pools, level));
    out.push_back(c8_primitives(level));
    out.push_back(c9_stirling_rows());
    out.push_back(c10_block_partitions());
    out.push_back(c11_list_partitions());
    out.push_back(c12_projection_morphism(pools));
    return out;
}

bool report(const std::vector<CriterionResult>& results, std::ostream& out) {
    bool all = true;
    for (const auto& r : results) {
        out << (r.pass ? "PASS" : "FAIL") << ' ' << std::setw(2) << r.index << ' ' << r.name
            << ": " << r.detail << '\n';
        all = all && r.pass;
    }
    return all;
}

}  // namespace bdiag
