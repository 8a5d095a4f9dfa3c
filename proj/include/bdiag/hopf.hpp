#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>

#include "bdiag/diagram.hpp"
#include "bdiag/rational.hpp"

namespace bdiag {

// Rational linear combination of diagrams; zero coefficients are dropped and
// terms stay sorted by the canonical diagram order.
class DiagramSum {
public:
    DiagramSum() = default;
    explicit DiagramSum(const BDiagram& d) { t_[d] = 1; }

    void add(const BDiagram& d, const Rat& c) {
        if (c == 0) return;
        auto it = t_.try_emplace(d, 0).first;
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
    DiagramSum& operator+=(const DiagramSum& o) {
        for (const auto& [d, c] : o.t_) add(d, c);
        return *this;
    }
    DiagramSum& operator-=(const DiagramSum& o) {
        for (const auto& [d, c] : o.t_) add(d, -c);
        return *this;
    }
    DiagramSum& operator*=(const Rat& c) {
        if (c == 0) {
            t_.clear();
            return *this;
        }
        for (auto& [d, v] : t_) v *= c;
        return *this;
    }
    Rat coeff(const BDiagram& d) const {
        auto it = t_.find(d);
        return it == t_.end() ? Rat(0) : it->second;
    }
    bool empty() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }
    const std::map<BDiagram, Rat>& terms() const { return t_; }
    bool operator==(const DiagramSum&) const = default;

private:
    std::map<BDiagram, Rat> t_;
};

// Rational combination of diagram pairs (tensor terms).
class TensorSum {
public:
    using Key = std::pair<BDiagram, BDiagram>;

    void add(const BDiagram& l, const BDiagram& r, const Rat& c) {
        if (c == 0) return;
        auto it = t_.try_emplace(Key{l, r}, 0).first;
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
    TensorSum& operator+=(const TensorSum& o) {
        for (const auto& [k, c] : o.t_) add(k.first, k.second, c);
        return *this;
    }
    Rat coeff(const BDiagram& l, const BDiagram& r) const {
        auto it = t_.find(Key{l, r});
        return it == t_.end() ? Rat(0) : it->second;
    }
    bool empty() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }
    const std::map<Key, Rat>& terms() const { return t_; }
    bool operator==(const TensorSum&) const = default;

private:
    std::map<Key, Rat> t_;
};

// Sum of every composition of the pair; bilinear on sums.
DiagramSum star(const BDiagram& bottom, const BDiagram& top);
DiagramSum star(const DiagramSum& bottom, const DiagramSum& top);

// Splits a diagram across all unions of connected components.
TensorSum coproduct(const BDiagram& g);
TensorSum coproduct(const DiagramSum& x);

// Coefficient of the empty diagram.
Rat counit(const DiagramSum& x);

// Leg-wise star product of tensor sums.
TensorSum tensor_star(const TensorSum& x, const TensorSum& y);

// Linear map given on basis diagrams.
using Endo = std::function<DiagramSum(const BDiagram&)>;

DiagramSum apply_endo(const Endo& f, const DiagramSum& x);

// Convolution: split with the coproduct, apply f and g to the legs, multiply.
Endo convolve(Endo f, Endo g);

// First Eulerian idempotent: alternating sum of convolution powers of
// (identity minus the empty-diagram projection). Fixes connected diagrams and
// lands in the primitives.
DiagramSum eulerian(const BDiagram& g);
DiagramSum eulerian(const DiagramSum& x);

bool is_primitive(const DiagramSum& x);

// One term per line, "<coeff> <diagram json>", terms in canonical order;
// "0" for the empty sum. Coefficients print as integers or p/q.
std::string render(const DiagramSum& x);
// Same with "<coeff> <json> (x) <json>" lines.
std::string render(const TensorSum& x);

}  // namespace bdiag
