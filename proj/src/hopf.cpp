#include "bdiag/hopf.hpp"

#include <utility>

namespace bdiag {

DiagramSum star(const BDiagram& bottom, const BDiagram& top) {
    DiagramSum out;
    for (const auto& t : star_expand(bottom, top)) out.add(t, 1);
    return out;
}

DiagramSum star(const DiagramSum& bottom, const DiagramSum& top) {
    DiagramSum out;
    for (const auto& [db, cb] : bottom.terms()) {
        for (const auto& [dt, ct] : top.terms()) {
            DiagramSum prod = star(db, dt);
            prod *= cb * ct;
            out += prod;
        }
    }
    return out;
}

TensorSum coproduct(const BDiagram& g) {
    auto comps = connected_components(g);
    const int c = (int)comps.size();
    TensorSum out;
    for (unsigned mask = 0; mask < (1u << c); ++mask) {
        std::vector<int> left, right;
        for (int i = 0; i < c; ++i) {
            auto& dst = (mask >> i & 1) ? left : right;
            dst.insert(dst.end(), comps[i].begin(), comps[i].end());
        }
        std::sort(left.begin(), left.end());
        std::sort(right.begin(), right.end());
        out.add(subdiagram(g, left), subdiagram(g, right), 1);
    }
    return out;
}

TensorSum coproduct(const DiagramSum& x) {
    TensorSum out;
    for (const auto& [d, c] : x.terms()) {
        TensorSum split = coproduct(d);
        for (const auto& [k, c2] : split.terms()) out.add(k.first, k.second, c * c2);
    }
    return out;
}

Rat counit(const DiagramSum& x) { return x.coeff(empty_diagram()); }

TensorSum tensor_star(const TensorSum& x, const TensorSum& y) {
    TensorSum out;
    for (const auto& [kx, cx] : x.terms()) {
        for (const auto& [ky, cy] : y.terms()) {
            DiagramSum left = star(kx.first, ky.first);
            DiagramSum right = star(kx.second, ky.second);
            const Rat c = cx * cy;
            for (const auto& [dl, cl] : left.terms())
                for (const auto& [dr, cr] : right.terms()) out.add(dl, dr, c * cl * cr);
        }
    }
    return out;
}

DiagramSum apply_endo(const Endo& f, const DiagramSum& x) {
    DiagramSum out;
    for (const auto& [d, c] : x.terms()) {
        DiagramSum y = f(d);
        y *= c;
        out += y;
    }
    return out;
}

Endo convolve(Endo f, Endo g) {
    return [f = std::move(f), g = std::move(g)](const BDiagram& d) {
        DiagramSum out;
        TensorSum split = coproduct(d);
        for (const auto& [k, c] : split.terms()) {
            DiagramSum prod = star(f(k.first), g(k.second));
            prod *= c;
            out += prod;
        }
        return out;
    };
}

DiagramSum eulerian(const BDiagram& g) {
    const int c = (int)connected_components(g).size();
    Endo reduced = [](const BDiagram& d) {
        DiagramSum s;
        if (!d.is_empty()) s.add(d, 1);
        return s;
    };
    DiagramSum out;
    Endo power = reduced;
    for (int k = 1; k <= c; ++k) {
        if (k > 1) power = convolve(power, reduced);
        DiagramSum term = power(g);
        term *= Rat(k % 2 ? 1 : -1, k);
        out += term;
    }
    return out;
}

DiagramSum eulerian(const DiagramSum& x) { return apply_endo([](const BDiagram& d) { return eulerian(d); }, x); }

bool is_primitive(const DiagramSum& x) {
    TensorSum expected;
    for (const auto& [d, c] : x.terms()) {
        expected.add(d, empty_diagram(), c);
        expected.add(empty_diagram(), d, c);
    }
    return coproduct(x) == expected;
}

std::string render(const DiagramSum& x) {
    if (x.empty()) return "0\n";
    std::string out;
    for (const auto& [d, c] : x.terms()) out += c.str() + " " + to_json_string(d) + "\n";
    return out;
}

std::string render(const TensorSum& x) {
    if (x.empty()) return "0\n";
    std::string out;
    for (const auto& [k, c] : x.terms())
        out += c.str() + " " + to_json_string(k.first) + " (x) " + to_json_string(k.second) + "\n";
    return out;
}

}  // namespace bdiag
