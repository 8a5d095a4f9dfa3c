#pragma once

#include <map>
#include <string>
#include <vector>

#include "bdiag/diagram.hpp"
#include "bdiag/rational.hpp"

namespace bdiag {

// (a+)^m a^n e^q e'^v with central e, e'.
struct NormalMonomial {
    int m = 0;
    int n = 0;
    int q = 0;
    int v = 0;

    auto operator<=>(const NormalMonomial&) const = default;
};

class NormalPoly {
public:
    NormalPoly() = default;
    explicit NormalPoly(const NormalMonomial& x) { t_[x] = 1; }

    void add(const NormalMonomial& x, const Int& c) {
        if (c == 0) return;
        auto it = t_.try_emplace(x, 0).first;
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
    NormalPoly& operator+=(const NormalPoly& o) {
        for (const auto& [x, c] : o.t_) add(x, c);
        return *this;
    }
    Int coeff(const NormalMonomial& x) const {
        auto it = t_.find(x);
        return it == t_.end() ? Int(0) : it->second;
    }
    bool empty() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }
    const std::map<NormalMonomial, Int>& terms() const { return t_; }
    bool operator==(const NormalPoly&) const = default;

private:
    std::map<NormalMonomial, Int> t_;
};

// Normal-form product: contractions of the n annihilators against the r
// creators, each contraction feeding an e'.
NormalPoly mul(const NormalMonomial& x, const NormalMonomial& y);
NormalPoly mul(const NormalPoly& x, const NormalPoly& y);

// Image of a diagram: creators from free inner sides, annihilators from free
// outer sides, e per cut side, e' per edge.
NormalMonomial project(const BDiagram& g);

// Sets e = e' = 1, merging terms.
NormalPoly collapse_markers(const NormalPoly& x);

// Single vertex with r non-cut inner and s non-cut outer sides; r + s >= 1.
BDiagram vertex_diagram(int r, int s);

// Operator expression over the letters a and a+: juxtaposition (optionally
// '*'), positive powers '^k', parentheses.
struct OperatorExpr {
    enum class Kind { atom_a, atom_adag, seq, pow };
    Kind kind = Kind::atom_a;
    std::vector<OperatorExpr> children;  // seq and pow
    int exponent = 1;                    // pow
};

struct ExprError : ValidationError {
    ExprError(const std::string& msg, int offset)
        : ValidationError(msg + " at offset " + std::to_string(offset)), offset(offset) {}
    int offset;
};

OperatorExpr parse_expr(const std::string& text);

enum class Letter { a, a_plus };

// Left-to-right expansion of the expression; powers are unrolled.
std::vector<Letter> letters_of(const OperatorExpr& e);

enum class Route { rewrite, diagram, monomial };

// Normal ordering of the operator word along one of three routes: direct
// commutator rewriting, one-vertex diagrams multiplied with the star product
// and projected, or folding mul over one-vertex monomial images. Markers
// e, e' are set to 1; the routes agree.
NormalPoly normal_order(const OperatorExpr& e, Route route);
NormalPoly normal_order(const std::vector<Letter>& word, Route route);

struct StirlingRow {
    int alpha = 0;            // creator excess of the word
    std::map<int, Int> s;     // k -> coefficient of (a+)^(alpha+k) a^k, nonzero only
};

// Normal-orders (a+)^(r_n) a^(s_n) ... (a+)^(r_1) a^(s_1); vectors list
// r_1..r_n. The total excess must be nonnegative.
StirlingRow stirling(const std::vector<int>& r, const std::vector<int>& s);

// "<coeff> * a+^m a^n e^q e'^v" per line, zero exponents omitted ("1" when
// all vanish), terms sorted by (m,n,q,v) descending.
std::string render(const NormalPoly& x);

}  // namespace bdiag
