#include "bdiag/heisenberg.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "bdiag/hopf.hpp"

namespace bdiag {

NormalPoly mul(const NormalMonomial& x, const NormalMonomial& y) {
    NormalPoly out;
    int top = std::min(x.n, y.m);
    for (int i = 0; i <= top; ++i) {
        Int c = factorial(i) * binomial(x.n, i) * binomial(y.m, i);
        out.add({x.m + y.m - i, x.n + y.n - i, x.q + y.q, x.v + y.v + i}, c);
    }
    return out;
}

NormalPoly mul(const NormalPoly& x, const NormalPoly& y) {
    NormalPoly out;
    for (const auto& [a, ca] : x.terms())
        for (const auto& [b, cb] : y.terms()) {
            NormalPoly piece = mul(a, b);
            for (const auto& [t, c] : piece.terms()) out.add(t, ca * cb * c);
        }
    return out;
}

NormalMonomial project(const BDiagram& g) {
    DiagramStats st = stats(g);
    return {st.hf_down, st.hf_up, st.h_c, st.tau};
}

NormalPoly collapse_markers(const NormalPoly& x) {
    NormalPoly out;
    for (const auto& [t, c] : x.terms()) out.add({t.m, t.n, 0, 0}, c);
    return out;
}

BDiagram vertex_diagram(int r, int s) {
    if (r < 0 || s < 0) throw ValidationError("negative side count");
    if (r == 0 && s == 0) throw ValidationError("vertex with no non-cut sides");
    std::vector<int> up(s), down(r);
    std::iota(up.begin(), up.end(), 1);
    std::iota(down.begin(), down.end(), 1);
    return make_diagram(1, {std::max(r, s)}, up, down, {});
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos == s.size();
    }
    char peek() { return s[pos]; }

    int parse_exponent() {
        skip_ws();
        std::size_t start = pos;
        if (pos == s.size()) throw ExprError("expected exponent", static_cast<int>(pos));
        if (s[pos] == '-') throw ExprError("exponent must be positive", static_cast<int>(pos));
        if (!std::isdigit(static_cast<unsigned char>(s[pos])))
            throw ExprError("expected exponent", static_cast<int>(pos));
        long long k = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            k = k * 10 + (s[pos] - '0');
            if (k > 1000000000) throw ExprError("exponent too large", static_cast<int>(start));
            ++pos;
        }
        if (k == 0) throw ExprError("exponent must be positive", static_cast<int>(start));
        return static_cast<int>(k);
    }

    OperatorExpr parse_atom() {
        if (done()) throw ExprError("unexpected end of input", static_cast<int>(pos));
        char c = peek();
        if (c == 'a') {
            ++pos;
            OperatorExpr e;
            if (pos < s.size() && s[pos] == '+') {
                ++pos;
                e.kind = OperatorExpr::Kind::atom_adag;
            } else {
                e.kind = OperatorExpr::Kind::atom_a;
            }
            return e;
        }
        if (c == '(') {
            std::size_t open = pos;
            ++pos;
            OperatorExpr inner = parse_sequence();
            if (done() || peek() != ')')
                throw ExprError("missing ')' for '('", static_cast<int>(open));
            ++pos;
            return inner;
        }
        throw ExprError(std::string("unexpected character '") + c + "'", static_cast<int>(pos));
    }

    OperatorExpr parse_term() {
        OperatorExpr e = parse_atom();
        skip_ws();
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            int k = parse_exponent();
            OperatorExpr p;
            p.kind = OperatorExpr::Kind::pow;
            p.exponent = k;
            p.children.push_back(std::move(e));
            return p;
        }
        return e;
    }

    OperatorExpr parse_sequence() {
        std::vector<OperatorExpr> parts;
        parts.push_back(parse_term());
        while (!done() && peek() != ')') {
            if (peek() == '*') {
                ++pos;
                if (done() || peek() == ')')
                    throw ExprError("expected operand after '*'", static_cast<int>(pos));
            }
            parts.push_back(parse_term());
        }
        if (parts.size() == 1) return std::move(parts.front());
        OperatorExpr e;
        e.kind = OperatorExpr::Kind::seq;
        e.children = std::move(parts);
        return e;
    }
};

long long letter_count(const OperatorExpr& e) {
    constexpr long long cap = 1000000;
    switch (e.kind) {
        case OperatorExpr::Kind::atom_a:
        case OperatorExpr::Kind::atom_adag:
            return 1;
        case OperatorExpr::Kind::seq: {
            long long total = 0;
            for (const auto& c : e.children) {
                total += letter_count(c);
                if (total > cap) throw ValidationError("expression expands to more than 1000000 letters");
            }
            return total;
        }
        case OperatorExpr::Kind::pow: {
            long long inner = letter_count(e.children.front());
            if (inner > cap / e.exponent)
                throw ValidationError("expression expands to more than 1000000 letters");
            return inner * e.exponent;
        }
    }
    return 0;
}

void emit_letters(const OperatorExpr& e, std::vector<Letter>& out) {
    switch (e.kind) {
        case OperatorExpr::Kind::atom_a:
            out.push_back(Letter::a);
            break;
        case OperatorExpr::Kind::atom_adag:
            out.push_back(Letter::a_plus);
            break;
        case OperatorExpr::Kind::seq:
            for (const auto& c : e.children) emit_letters(c, out);
            break;
        case OperatorExpr::Kind::pow:
            for (int i = 0; i < e.exponent; ++i) emit_letters(e.children.front(), out);
            break;
    }
}

NormalPoly order_by_rewriting(const std::vector<Letter>& word) {
    std::map<std::pair<int, int>, Int> acc{{{0, 0}, 1}};
    for (Letter l : word) {
        std::map<std::pair<int, int>, Int> next;
        for (const auto& [mn, c] : acc) {
            auto [m, n] = mn;
            if (l == Letter::a) {
                next[{m, n + 1}] += c;
            } else {
                next[{m + 1, n}] += c;
                if (n > 0) next[{m, n - 1}] += c * n;
            }
        }
        acc = std::move(next);
    }
    NormalPoly out;
    for (const auto& [mn, c] : acc) out.add({mn.first, mn.second, 0, 0}, c);
    return out;
}

BDiagram letter_vertex(Letter l) {
    return l == Letter::a ? vertex_diagram(0, 1) : vertex_diagram(1, 0);
}

NormalPoly order_by_diagrams(const std::vector<Letter>& word) {
    DiagramSum acc(empty_diagram());
    for (Letter l : word) acc = star(acc, DiagramSum(letter_vertex(l)));
    NormalPoly out;
    for (const auto& [d, c] : acc.terms()) {
        if (denominator(c) != 1) throw std::logic_error("non-integer star coefficient");
        out.add(project(d), numerator(c));
    }
    return collapse_markers(out);
}

NormalPoly order_by_monomials(const std::vector<Letter>& word) {
    NormalPoly acc{NormalMonomial{}};
    for (Letter l : word) acc = mul(acc, NormalPoly(project(letter_vertex(l))));
    return collapse_markers(acc);
}

}  // namespace

OperatorExpr parse_expr(const std::string& text) {
    Parser p{text};
    if (p.done()) throw ExprError("empty expression", 0);
    OperatorExpr e = p.parse_sequence();
    if (!p.done()) throw ExprError("unbalanced ')'", static_cast<int>(p.pos));
    return e;
}

std::vector<Letter> letters_of(const OperatorExpr& e) {
    letter_count(e);
    std::vector<Letter> out;
    emit_letters(e, out);
    return out;
}

NormalPoly normal_order(const OperatorExpr& e, Route route) {
    return normal_order(letters_of(e), route);
}

NormalPoly normal_order(const std::vector<Letter>& word, Route route) {
    switch (route) {
        case Route::rewrite:
            return order_by_rewriting(word);
        case Route::diagram:
            return order_by_diagrams(word);
        case Route::monomial:
            return order_by_monomials(word);
    }
    throw std::logic_error("unknown route");
}

StirlingRow stirling(const std::vector<int>& r, const std::vector<int>& s) {
    if (r.size() != s.size()) throw ValidationError("side count lists differ in length");
    if (r.empty()) throw ValidationError("empty factor list");
    int alpha = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i] < 0 || s[i] < 0) throw ValidationError("negative side count");
        alpha += r[i] - s[i];
    }
    if (alpha < 0) throw ValidationError("creator excess is negative");
    NormalPoly acc{NormalMonomial{}};
    for (std::size_t j = r.size(); j-- > 0;) {
        if (r[j] == 0 && s[j] == 0) continue;
        acc = mul(acc, NormalPoly(project(vertex_diagram(r[j], s[j]))));
    }
    acc = collapse_markers(acc);
    StirlingRow row;
    row.alpha = alpha;
    for (const auto& [t, c] : acc.terms()) {
        if (t.m - t.n != alpha) throw std::logic_error("excess mismatch in normal form");
        row.s[t.n] = c;
    }
    return row;
}

std::string render(const NormalPoly& x) {
    if (x.terms().empty()) return "0\n";
    std::string out;
    for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
        const NormalMonomial& t = it->first;
        out += it->second.str() + " *";
        bool any = false;
        auto piece = [&out, &any](const char* sym, int k) {
            if (k == 0) return;
            out += ' ';
            out += sym;
            out += '^' + std::to_string(k);
            any = true;
        };
        piece("a+", t.m);
        piece("a", t.n);
        piece("e", t.q);
        piece("e'", t.v);
        if (!any) out += " 1";
        out += '\n';
    }
    return out;
}

}  // namespace bdiag
