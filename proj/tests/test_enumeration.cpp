#include "bdiag/enumeration.hpp"

#include <cstdlib>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"

using namespace bdiag;

namespace {

const std::vector<std::vector<Int>> kKnownRows = {
    {1},
    {2, 2},
    {10, 18, 8},
    {62, 154, 124, 32},
    {462, 1426, 1596, 760, 128},
    {3982, 14506, 20380, 13680, 4336, 512},
};

}  // namespace

TEST_CASE("recurrence table reproduces the known rows") {
    auto t = count_table(5);
    REQUIRE(t.size() == 6);
    for (int p = 0; p <= 5; ++p) CHECK(t[p] == kKnownRows[p]);
    CHECK(count_all(0) == 1);
    CHECK(count_all(1) == 4);
    CHECK(count_all(2) == 36);
    CHECK(count_all(3) == 372);
    CHECK(count_all(4) == 4372);
    CHECK(count_all(5) == 57396);
}

TEST_CASE("exhaustive enumeration agrees with the recurrence") {
    for (int p = 0; p <= 4; ++p) {
        CAPTURE(p);
        std::string detail;
        CHECK_MESSAGE(crosscheck(p, &detail), detail);
    }
}

TEST_CASE("stream is duplicate-free and every diagram is valid") {
    for (int p = 0; p <= 4; ++p) {
        CAPTURE(p);
        auto all = enumerate_all(p);
        std::set<BDiagram> distinct(all.begin(), all.end());
        CHECK(distinct.size() == all.size());
        CHECK(Int(all.size()) == count_all(p));
        for (const auto& g : all) {
            CHECK_NOTHROW(validate(g));
            CHECK(g.weight() == p);
        }
    }
}

TEST_CASE("stream order is fixed") {
    auto one = enumerate_all(1);
    REQUIRE(one.size() == 4);
    CHECK(one[0] == make_diagram(1, {1}, {}, {}, {}));
    CHECK(one[1] == make_diagram(1, {1}, {}, {1}, {}));
    CHECK(one[2] == make_diagram(1, {1}, {1}, {}, {}));
    CHECK(one[3] == make_diagram(1, {1}, {1}, {1}, {}));

    // single-part composition first, so the first 16 weight-2 diagrams are
    // the edgeless one-vertex ones
    auto two = enumerate_all(2);
    REQUIRE(two.size() == 36);
    for (int i = 0; i < 16; ++i) CHECK(two[i].n == 1);
    CHECK(two[16].n == 2);
}

TEST_CASE("shard parallelism does not change the stream") {
    auto baseline = enumerate_all(3);
    setenv("BDIAG_THREADS", "3", 1);
    auto threaded = enumerate_all(3);
    unsetenv("BDIAG_THREADS");
    CHECK(threaded == baseline);
}

TEST_CASE("structural identities hold across all small diagrams") {
    for (int p = 0; p <= 3; ++p) {
        CAPTURE(p);
        for (const auto& g : enumerate_all(p)) {
            auto s = stats(g);
            CHECK(s.h_up == s.weight - s.tau);
            CHECK(s.h_down == s.weight - s.tau);

            int starts_free = 0, ends_free = 0, cuts = 0, joins = 0, covered = 0;
            for (const auto& path : paths(g)) {
                starts_free += path.start_free;
                ends_free += path.end_free;
                cuts += !path.start_free + !path.end_free;
                joins += (int)path.slots.size() - 1;
                covered += (int)path.slots.size();
            }
            CHECK(starts_free == s.hf_down);
            CHECK(ends_free == s.hf_up);
            CHECK(cuts == s.h_c);
            CHECK(joins == s.tau);
            CHECK(covered == s.weight);

            std::vector<int> all_vertices(g.n);
            for (int i = 0; i < g.n; ++i) all_vertices[i] = i + 1;
            CHECK(subdiagram(g, all_vertices) == g);

            if (!g.is_empty()) {
                auto factors = factorize(g);
                BDiagram prod = empty_diagram();
                for (const auto& f : factors) {
                    CHECK(is_indivisible(f));
                    prod = juxtapose(prod, f);
                }
                CHECK(prod == g);
            }
        }
    }
}
