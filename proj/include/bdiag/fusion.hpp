#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bdiag/diagram.hpp"
#include "bdiag/rational.hpp"

namespace bdiag {

// One letter per path: the (vertex, slot) chain plus whether the first inner
// side and last outer side are non-cut. Within a seq, slots and vertices
// strictly increase.
struct FusionLetter {
    bool start_free = false;
    bool end_free = false;
    std::vector<std::pair<int, int>> seq;

    auto operator<=>(const FusionLetter&) const = default;
};

// Word of a diagram: letters sorted by first slot. The empty word is the unit.
struct FusionMonomial {
    std::vector<FusionLetter> letters;

    static FusionMonomial of(std::vector<FusionLetter> ls);
    bool is_unit() const { return letters.empty(); }

    auto operator<=>(const FusionMonomial&) const = default;
};

FusionMonomial word_of(const BDiagram& g);

// Inverse of word_of; throws ValidationError when the letters are not the
// word of any diagram (missing or repeated slots, vertex gaps, slots out of
// vertex order, non-increasing seq entries).
BDiagram diagram_of(const FusionMonomial& m);

// Adds dv to every vertex and ds to every slot.
FusionMonomial shift(const FusionMonomial& m, int dv, int ds);

int max_vertex(const FusionMonomial& m);
int max_slot(const FusionMonomial& m);

class FusionSum {
public:
    void add(const FusionMonomial& m, const Rat& c) {
        if (c == 0) return;
        auto it = t_.try_emplace(m, 0).first;
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
    FusionSum& operator+=(const FusionSum& o) {
        for (const auto& [m, c] : o.t_) add(m, c);
        return *this;
    }
    bool empty() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }
    const std::map<FusionMonomial, Rat>& terms() const { return t_; }
    bool operator==(const FusionSum&) const = default;

private:
    std::map<FusionMonomial, Rat> t_;
};

// Product of words: shift the right factor past the left one, then sum over
// all ways to splice free-ended left letters onto free-started right letters.
// Mirrors the star product through word_of.
FusionSum fstar(const FusionMonomial& u, const FusionMonomial& v);
FusionSum fstar(const FusionSum& u, const FusionSum& v);

// "R[>|<]((v,s)...)" per letter in word order, then "B((v,s)...)[<|>]" per
// letter; '>' marks a non-cut start, '<' a non-cut end. The unit renders "1".
std::string render(const FusionMonomial& m);
// "<coeff> <monomial>" per line, canonical order; "0" when empty.
std::string render(const FusionSum& x);

}  // namespace bdiag
