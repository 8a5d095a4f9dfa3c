#include <cstdlib>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "bdiag/diagram.hpp"
#include "bdiag/enumeration.hpp"
#include "bdiag/heisenberg.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace bdiag;

namespace {

NormalPoly poly_of(std::vector<std::pair<NormalMonomial, Int>> terms) {
    NormalPoly p;
    for (const auto& [x, c] : terms) p.add(x, c);
    return p;
}

std::vector<Letter> word_for(const std::vector<int>& r, const std::vector<int>& s) {
    std::vector<Letter> w;
    for (std::size_t j = r.size(); j-- > 0;) {
        for (int i = 0; i < r[j]; ++i) w.push_back(Letter::a_plus);
        for (int i = 0; i < s[j]; ++i) w.push_back(Letter::a);
    }
    return w;
}

}  // namespace

TEST_CASE("normal form image of a diagram") {
    CHECK(project(empty_diagram()) == NormalMonomial{0, 0, 0, 0});
    CHECK(project(fx::sample_a()) == NormalMonomial{3, 2, 1, 3});
    CHECK(project(fx::sample_b()) == NormalMonomial{2, 2, 8, 2});

    SUBCASE("single vertices") {
        for (int r = 0; r <= 3; ++r)
            for (int s = 0; s <= 3; ++s) {
                if (r == 0 && s == 0) continue;
                BDiagram g = vertex_diagram(r, s);
                CHECK(g == fx::vertex(r, s));
                CHECK(project(g) == NormalMonomial{r, s, std::abs(r - s), 0});
            }
    }

    SUBCASE("vertex with no usable sides is rejected") {
        CHECK_THROWS_AS(vertex_diagram(0, 0), ValidationError);
        CHECK_THROWS_AS(vertex_diagram(-1, 2), ValidationError);
    }
}

TEST_CASE("normal form product") {
    NormalMonomial one{};

    SUBCASE("unit") {
        NormalMonomial x{3, 2, 1, 4};
        CHECK(mul(one, x) == NormalPoly(x));
        CHECK(mul(x, one) == NormalPoly(x));
    }

    SUBCASE("annihilator past creator") {
        NormalMonomial a = project(vertex_diagram(0, 1));
        NormalMonomial adag = project(vertex_diagram(1, 0));
        CHECK(mul(a, adag) == poly_of({{{1, 1, 2, 0}, 1}, {{0, 0, 2, 1}, 1}}));
        CHECK(mul(adag, a) == NormalPoly(NormalMonomial{1, 1, 2, 0}));
    }

    SUBCASE("squared two-photon block") {
        NormalMonomial x{2, 2, 0, 0};
        CHECK(mul(x, x) ==
              poly_of({{{4, 4, 0, 0}, 1}, {{3, 3, 0, 1}, 4}, {{2, 2, 0, 2}, 2}}));
    }

    SUBCASE("marker exponents add") {
        NormalPoly p = mul(NormalMonomial{0, 0, 2, 3}, NormalMonomial{0, 0, 5, 1});
        CHECK(p == NormalPoly(NormalMonomial{0, 0, 7, 4}));
    }

    SUBCASE("associative on sample monomials") {
        std::vector<NormalMonomial> xs{{0, 1, 1, 0}, {1, 0, 1, 0}, {2, 2, 0, 0}, {1, 2, 1, 1}};
        for (const auto& x : xs)
            for (const auto& y : xs)
                for (const auto& z : xs)
                    CHECK(mul(mul(NormalPoly(x), NormalPoly(y)), NormalPoly(z)) ==
                          mul(NormalPoly(x), mul(NormalPoly(y), NormalPoly(z))));
    }
}

TEST_CASE("projection turns diagram products into normal form products") {
    std::vector<BDiagram> pool;
    for (int p = 0; p <= 2; ++p)
        for (const auto& g : enumerate_all(p)) pool.push_back(g);

    for (const auto& g : pool)
        for (const auto& h : pool) {
            NormalPoly lhs = mul(NormalPoly(project(g)), NormalPoly(project(h)));
            NormalPoly rhs;
            for (const auto& t : star_expand(g, h)) rhs.add(project(t), 1);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("operator expression parsing") {
    SUBCASE("letters") {
        using L = std::vector<Letter>;
        CHECK(letters_of(parse_expr("a")) == L{Letter::a});
        CHECK(letters_of(parse_expr("a+")) == L{Letter::a_plus});
        CHECK(letters_of(parse_expr("a+ a")) == L{Letter::a_plus, Letter::a});
        CHECK(letters_of(parse_expr("a*a+")) == L{Letter::a, Letter::a_plus});
        CHECK(letters_of(parse_expr("a+^2a^2")) ==
              L{Letter::a_plus, Letter::a_plus, Letter::a, Letter::a});
        CHECK(letters_of(parse_expr("(a+a)^2")) ==
              L{Letter::a_plus, Letter::a, Letter::a_plus, Letter::a});
        CHECK(letters_of(parse_expr(" (( a )) ^ 3 ")) == L{Letter::a, Letter::a, Letter::a});
    }

    SUBCASE("errors carry byte offsets") {
        auto offset_of = [](const std::string& text) {
            try {
                parse_expr(text);
            } catch (const ExprError& e) {
                return e.offset;
            }
            return -1;
        };
        CHECK_THROWS_WITH_AS(parse_expr("a^"), "expected exponent at offset 2", ExprError);
        CHECK_THROWS_WITH_AS(parse_expr("a^0"), "exponent must be positive at offset 2",
                             ExprError);
        CHECK_THROWS_WITH_AS(parse_expr("a^-1"), "exponent must be positive at offset 2",
                             ExprError);
        CHECK_THROWS_WITH_AS(parse_expr("(a"), "missing ')' for '(' at offset 0", ExprError);
        CHECK_THROWS_WITH_AS(parse_expr("a)"), "unbalanced ')' at offset 1", ExprError);
        CHECK_THROWS_WITH_AS(parse_expr("b"), "unexpected character 'b' at offset 0", ExprError);
        CHECK_THROWS_WITH_AS(parse_expr(""), "empty expression at offset 0", ExprError);
        CHECK_THROWS_WITH_AS(parse_expr("a *"), "expected operand after '*' at offset 3",
                             ExprError);
        CHECK_THROWS_WITH_AS(parse_expr("a + a"), "unexpected character '+' at offset 2",
                             ExprError);
        CHECK(offset_of("a^") == 2);
        CHECK(offset_of("(a") == 0);
    }
}

TEST_CASE("normal ordering routes") {
    auto all_routes = [](const char* text) {
        OperatorExpr e = parse_expr(text);
        NormalPoly r = normal_order(e, Route::rewrite);
        CHECK(normal_order(e, Route::diagram) == r);
        CHECK(normal_order(e, Route::monomial) == r);
        return r;
    };

    SUBCASE("worked examples") {
        CHECK(all_routes("a a+") == poly_of({{{1, 1, 0, 0}, 1}, {{0, 0, 0, 0}, 1}}));
        CHECK(all_routes("(a+ a)^3") ==
              poly_of({{{3, 3, 0, 0}, 1}, {{2, 2, 0, 0}, 3}, {{1, 1, 0, 0}, 1}}));
        CHECK(all_routes("a+^2 a^2 a+^2 a^2") ==
              poly_of({{{4, 4, 0, 0}, 1}, {{3, 3, 0, 0}, 4}, {{2, 2, 0, 0}, 2}}));
        CHECK(all_routes("a^2 a+^3") ==
              poly_of({{{3, 2, 0, 0}, 1}, {{2, 1, 0, 0}, 6}, {{1, 0, 0, 0}, 6}}));
    }

    SUBCASE("routes agree on every word of length at most five") {
        for (int len = 1; len <= 5; ++len)
            for (int mask = 0; mask < (1 << len); ++mask) {
                std::vector<Letter> w;
                for (int i = 0; i < len; ++i)
                    w.push_back(mask >> i & 1 ? Letter::a_plus : Letter::a);
                NormalPoly r = normal_order(w, Route::rewrite);
                CHECK(normal_order(w, Route::diagram) == r);
                CHECK(normal_order(w, Route::monomial) == r);
            }
    }
}

TEST_CASE("iterated factor words and their coefficient rows") {
    SUBCASE("single creator and annihilator per factor") {
        std::map<std::pair<int, int>, Int> second_kind{{{0, 0}, 1}};
        for (int n = 1; n <= 6; ++n)
            for (int k = n; k >= 1; --k)
                second_kind[{n, k}] = k * second_kind[{n - 1, k}] + second_kind[{n - 1, k - 1}];
        for (int n = 1; n <= 6; ++n) {
            StirlingRow row = stirling(std::vector<int>(n, 1), std::vector<int>(n, 1));
            CHECK(row.alpha == 0);
            std::map<int, Int> expect;
            for (int k = 1; k <= n; ++k) expect[k] = second_kind[{n, k}];
            CHECK(row.s == expect);
        }
    }

    SUBCASE("two creators and one annihilator per factor") {
        for (int n = 1; n <= 6; ++n) {
            StirlingRow row = stirling(std::vector<int>(n, 2), std::vector<int>(n, 1));
            CHECK(row.alpha == n);
            std::map<int, Int> expect;
            for (int k = 1; k <= n; ++k)
                expect[k] = binomial(n - 1, k - 1) * factorial(n) / factorial(k);
            CHECK(row.s == expect);
        }
    }

    SUBCASE("matches direct rewriting") {
        std::mt19937_64 rng(20240811);
        for (int trial = 0; trial < 40; ++trial) {
            int n = 1 + static_cast<int>(rng() % 4);
            std::vector<int> r(n), s(n);
            int alpha = -1;
            while (alpha < 0) {
                alpha = 0;
                for (int i = 0; i < n; ++i) {
                    r[i] = static_cast<int>(rng() % 4);
                    s[i] = static_cast<int>(rng() % 4);
                    alpha += r[i] - s[i];
                }
            }
            StirlingRow row = stirling(r, s);
            NormalPoly direct = normal_order(word_for(r, s), Route::rewrite);
            NormalPoly from_row;
            for (const auto& [k, c] : row.s) from_row.add({alpha + k, k, 0, 0}, c);
            CHECK(direct == from_row);
        }
    }

    SUBCASE("factor order matters") {
        StirlingRow ladder_up = stirling({1, 0}, {0, 1});
        CHECK(ladder_up.alpha == 0);
        CHECK(ladder_up.s == std::map<int, Int>{{0, 1}, {1, 1}});
        StirlingRow ladder_down = stirling({0, 1}, {1, 0});
        CHECK(ladder_down.alpha == 0);
        CHECK(ladder_down.s == std::map<int, Int>{{1, 1}});
    }

    SUBCASE("idle factors are allowed") {
        CHECK(stirling({1, 0, 1}, {1, 0, 1}).s == stirling({1, 1}, {1, 1}).s);
    }

    SUBCASE("rejects malformed input") {
        CHECK_THROWS_AS(stirling({1, 2}, {1}), ValidationError);
        CHECK_THROWS_AS(stirling({}, {}), ValidationError);
        CHECK_THROWS_AS(stirling({-1}, {0}), ValidationError);
        CHECK_THROWS_AS(stirling({0}, {1}), ValidationError);
        CHECK_THROWS_AS(stirling({1, 0}, {0, 2}), ValidationError);
    }
}

TEST_CASE("normal form rendering") {
    CHECK(render(NormalPoly{}) == "0\n");
    CHECK(render(poly_of({{{0, 0, 0, 0}, 3}})) == "3 * 1\n");
    CHECK(render(poly_of({{{0, 0, 2, 1}, 1}})) == "1 * e^2 e'^1\n");
    CHECK(render(poly_of({{{4, 4, 0, 0}, 1}, {{3, 3, 0, 1}, 4}, {{2, 2, 0, 2}, 2}})) ==
          "1 * a+^4 a^4\n"
          "4 * a+^3 a^3 e'^1\n"
          "2 * a+^2 a^2 e'^2\n");
    CHECK(render(poly_of({{{1, 1, 2, 0}, 1}, {{0, 0, 2, 1}, 1}})) ==
          "1 * a+^1 a^1 e^2\n"
          "1 * e^2 e'^1\n");
}

TEST_CASE("marker collapse") {
    NormalPoly p = poly_of({{{1, 1, 2, 0}, 1}, {{1, 1, 0, 1}, 2}, {{0, 0, 2, 1}, 1}});
    CHECK(collapse_markers(p) == poly_of({{{1, 1, 0, 0}, 3}, {{0, 0, 0, 0}, 1}}));
}
