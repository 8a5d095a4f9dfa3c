#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "bdiag/diagram.hpp"
#include "bdiag/hopf.hpp"
#include "bdiag/partitions.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace bdiag;

namespace {

std::map<SetPartition, Rat> star_in_partition_basis(const SetPartition& p1,
                                                    const SetPartition& p2) {
    std::map<SetPartition, Rat> out;
    for (const auto& t : star_expand(b_of(p1), b_of(p2))) out[partition_of(t)] += 1;
    return out;
}

std::map<ListPartition, Rat> star_in_list_basis(const ListPartition& p1,
                                                const ListPartition& p2) {
    std::map<ListPartition, Rat> out;
    for (const auto& t : star_expand(m_of(p1), m_of(p2))) out[lists_of(t)] += 1;
    return out;
}

}  // namespace

TEST_CASE("set partition construction") {
    SetPartition p = make_set_partition({{2}, {3, 1}});
    CHECK(p.blocks == std::vector<std::vector<int>>{{1, 3}, {2}});

    CHECK_THROWS_AS(make_set_partition({{1, 1}}), ValidationError);
    CHECK_THROWS_AS(make_set_partition({{1, 3}}), ValidationError);
    CHECK_THROWS_AS(make_set_partition({{1}, {}}), ValidationError);
    CHECK_THROWS_AS(make_set_partition({{0, 1}}), ValidationError);
    CHECK(make_set_partition({}).blocks.empty());
}

TEST_CASE("set partition diagrams") {
    SUBCASE("successor chains per block") {
        SetPartition p = make_set_partition({{1, 3}, {2}, {4, 7, 8}, {5, 6}});
        BDiagram g = b_of(p);
        std::vector<int> full{1, 2, 3, 4, 5, 6, 7, 8};
        CHECK(g == make_diagram(8, std::vector<int>(8, 1), full, full,
                                {{1, 3}, {4, 7}, {7, 8}, {5, 6}}));
        CHECK(partition_of(g) == p);
    }

    SUBCASE("empty partition") {
        CHECK(b_of(SetPartition{}) == empty_diagram());
        CHECK(partition_of(empty_diagram()) == SetPartition{});
    }

    SUBCASE("rejects diagrams outside the basis") {
        CHECK_THROWS_AS(partition_of(fx::vertex(2, 2)), ValidationError);
        CHECK_THROWS_AS(partition_of(make_diagram(1, {1}, {}, {1}, {})), ValidationError);
        CHECK_THROWS_AS(partition_of(fx::sample_a()), ValidationError);
    }

    SUBCASE("injective over all partitions up to four elements") {
        for (int n = 0; n <= 4; ++n) {
            auto ps = all_set_partitions(n);
            std::set<BDiagram> seen;
            for (const auto& p : ps) {
                BDiagram g = b_of(p);
                CHECK(partition_of(g) == p);
                seen.insert(g);
            }
            CHECK(seen.size() == ps.size());
        }
    }
}

TEST_CASE("set partition enumeration has Bell number sizes") {
    std::vector<std::size_t> bell{1, 1, 2, 5, 15, 52};
    for (int n = 0; n <= 5; ++n) {
        auto ps = all_set_partitions(n);
        CHECK(ps.size() == bell[n]);
        std::set<SetPartition> dedup(ps.begin(), ps.end());
        CHECK(dedup.size() == ps.size());
        for (const auto& p : ps) CHECK(make_set_partition(p.blocks) == p);
    }
}

TEST_CASE("block merge product") {
    SUBCASE("worked example") {
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
        CHECK(wsym_product_oracle(p1, p2) == expect);
        CHECK(star_in_partition_basis(p1, p2) == expect);
    }

    SUBCASE("matches the diagram product everywhere up to three elements") {
        std::vector<SetPartition> pool;
        for (int n = 0; n <= 3; ++n)
            for (const auto& p : all_set_partitions(n)) pool.push_back(p);
        for (const auto& p1 : pool)
            for (const auto& p2 : pool)
                CHECK(wsym_product_oracle(p1, p2) == star_in_partition_basis(p1, p2));
    }
}

TEST_CASE("list partition construction") {
    ListPartition p = make_list_partition({{4, 5}, {3, 1}, {2}});
    CHECK(p.lists == std::vector<std::vector<int>>{{3, 1}, {2}, {4, 5}});

    CHECK_THROWS_AS(make_list_partition({{1, 1}}), ValidationError);
    CHECK_THROWS_AS(make_list_partition({{2, 3}}), ValidationError);
    CHECK_THROWS_AS(make_list_partition({{}}), ValidationError);
    CHECK(make_list_partition({}).lists.empty());
}

TEST_CASE("list partition diagrams") {
    SUBCASE("binary tree of a permutation word") {
        ListPartition p = make_list_partition({{5, 2, 4, 1, 3, 7, 6}});
        BDiagram g = m_of(p);
        std::vector<int> up(14), down{1, 3, 5, 7, 9, 11, 13};
        std::iota(up.begin(), up.end(), 1);
        CHECK(g == make_diagram(7, std::vector<int>(7, 2), up, down,
                                {{1, 3}, {2, 5}, {3, 9}, {4, 7}, {6, 11}, {11, 13}}));
        CHECK(lists_of(g) == p);
    }

    SUBCASE("several lists") {
        ListPartition p = make_list_partition({{3, 1}, {2}});
        CHECK(m_of(p) ==
              make_diagram(3, {2, 2, 2}, {1, 2, 3, 4, 5, 6}, {1, 3, 5}, {{1, 5}}));
    }

    SUBCASE("empty partition") {
        CHECK(m_of(ListPartition{}) == empty_diagram());
        CHECK(lists_of(empty_diagram()) == ListPartition{});
    }

    SUBCASE("rejects diagrams outside the basis") {
        CHECK_THROWS_AS(lists_of(fx::vertex(2, 2)), ValidationError);
        CHECK_THROWS_AS(lists_of(b_of(make_set_partition({{1, 2}}))), ValidationError);
        CHECK_THROWS_AS(lists_of(fx::sample_a()), ValidationError);
        CHECK_THROWS_AS(
            lists_of(make_diagram(2, {2, 2}, {1, 2, 3, 4}, {1, 3, 4}, {{1, 4}})),
            ValidationError);
    }

    SUBCASE("round trip and injectivity up to four elements") {
        std::vector<std::size_t> a000262{1, 1, 3, 13, 73};
        for (int n = 0; n <= 4; ++n) {
            auto ps = all_list_partitions(n);
            CHECK(ps.size() == a000262[n]);
            std::set<BDiagram> seen;
            for (const auto& p : ps) {
                BDiagram g = m_of(p);
                CHECK(lists_of(g) == p);
                seen.insert(g);
            }
            CHECK(seen.size() == ps.size());
        }
    }

    SUBCASE("single lists give the connected diagrams") {
        for (int n = 1; n <= 4; ++n) {
            std::size_t singles = 0;
            for (const auto& p : all_list_partitions(n)) {
                if (p.lists.size() != 1) continue;
                ++singles;
                CHECK(connected_components(m_of(p)).size() == 1);
            }
            std::size_t fac = 1;
            for (int i = 2; i <= n; ++i) fac *= i;
            CHECK(singles == fac);
        }
    }
}

TEST_CASE("gap insertion product") {
    SUBCASE("worked example") {
        ListPartition p1 = make_list_partition({{3, 1}, {2}});
        ListPartition p2 = make_list_partition({{1, 2}});
        std::map<ListPartition, Rat> expect{
            {make_list_partition({{3, 1}, {2}, {4, 5}}), 1},
            {make_list_partition({{3, 1}, {2, 4, 5}}), 1},
            {make_list_partition({{3, 1}, {4, 5, 2}}), 1},
            {make_list_partition({{3, 1, 4, 5}, {2}}), 1},
            {make_list_partition({{3, 4, 5, 1}, {2}}), 1},
            {make_list_partition({{4, 5, 3, 1}, {2}}), 1},
        };
        CHECK(bwsym_product_oracle(p1, p2) == expect);
        CHECK(star_in_list_basis(p1, p2) == expect);
    }

    SUBCASE("matches the diagram product everywhere up to three elements") {
        std::vector<ListPartition> pool;
        for (int n = 0; n <= 3; ++n)
            for (const auto& p : all_list_partitions(n)) pool.push_back(p);
        for (const auto& p1 : pool)
            for (const auto& p2 : pool)
                CHECK(bwsym_product_oracle(p1, p2) == star_in_list_basis(p1, p2));
    }
}

TEST_CASE("partition basis splits along the coproduct") {
    SUBCASE("blocks") {
        SetPartition p = make_set_partition({{1, 3}, {2}});
        TensorSum split = coproduct(b_of(p));
        CHECK(split.size() == 4);
        CHECK(split.coeff(b_of(make_set_partition({{1, 2}})),
                          b_of(make_set_partition({{1}}))) == 1);
        CHECK(split.coeff(b_of(make_set_partition({{1}})),
                          b_of(make_set_partition({{1, 2}}))) == 1);
        for (const auto& [pair, c] : split.terms()) {
            CHECK(c == 1);
            partition_of(pair.first);
            partition_of(pair.second);
        }
    }

    SUBCASE("lists") {
        ListPartition p = make_list_partition({{3, 1}, {2}});
        TensorSum split = coproduct(m_of(p));
        CHECK(split.size() == 4);
        CHECK(split.coeff(m_of(make_list_partition({{2, 1}})),
                          m_of(make_list_partition({{1}}))) == 1);
        for (const auto& [pair, c] : split.terms()) {
            CHECK(c == 1);
            lists_of(pair.first);
            lists_of(pair.second);
        }
    }
}

TEST_CASE("partition text format") {
    SUBCASE("set partitions") {
        CHECK(render(make_set_partition({{2}, {3, 1}})) == "{1,3|2}");
        CHECK(render(SetPartition{}) == "{}");
        CHECK(parse_set_partition("{1,3|2}") == make_set_partition({{1, 3}, {2}}));
        CHECK(parse_set_partition(" { 2 | 1 , 3 } ") == make_set_partition({{1, 3}, {2}}));
        CHECK(parse_set_partition("{}") == SetPartition{});
        CHECK_THROWS_WITH_AS(parse_set_partition("1,3|2}"), "expected '{' at offset 0",
                             ValidationError);
        CHECK_THROWS_WITH_AS(parse_set_partition("{1,}"), "expected number at offset 3",
                             ValidationError);
        CHECK_THROWS_WITH_AS(parse_set_partition("{1}x"), "trailing input at offset 3",
                             ValidationError);
        CHECK_THROWS_AS(parse_set_partition("{1,3}"), ValidationError);
    }

    SUBCASE("list partitions") {
        CHECK(render(make_list_partition({{4, 5}, {3, 1}, {2}})) == "{[3,1]|[2]|[4,5]}");
        CHECK(render(ListPartition{}) == "{}");
        CHECK(parse_list_partition("{[3,1]|[2]}") == make_list_partition({{3, 1}, {2}}));
        CHECK(parse_list_partition("{}") == ListPartition{});
        CHECK_THROWS_WITH_AS(parse_list_partition("{3,1|2}"), "expected '[' at offset 1",
                             ValidationError);
        CHECK_THROWS_WITH_AS(parse_list_partition("{[1,2}"), "expected ']' at offset 5",
                             ValidationError);
    }

    SUBCASE("round trip through text") {
        for (int n = 0; n <= 4; ++n) {
            for (const auto& p : all_set_partitions(n))
                CHECK(parse_set_partition(render(p)) == p);
            for (const auto& p : all_list_partitions(n))
                CHECK(parse_list_partition(render(p)) == p);
        }
    }
}
