#include "bdiag/fusion.hpp"

#include <algorithm>

namespace bdiag {

FusionMonomial FusionMonomial::of(std::vector<FusionLetter> ls) {
    for (const auto& l : ls)
        if (l.seq.empty()) throw ValidationError("fusion letter with empty seq");
    std::sort(ls.begin(), ls.end(),
              [](const FusionLetter& a, const FusionLetter& b) {
                  return a.seq.front().second < b.seq.front().second;
              });
    return FusionMonomial{std::move(ls)};
}

FusionMonomial word_of(const BDiagram& g) {
    std::vector<FusionLetter> ls;
    for (const auto& p : paths(g)) {
        FusionLetter l;
        l.start_free = p.start_free;
        l.end_free = p.end_free;
        l.seq.reserve(p.slots.size());
        for (int s : p.slots) l.seq.emplace_back(g.vertex_of(s), s);
        ls.push_back(std::move(l));
    }
    return FusionMonomial{std::move(ls)};  // paths come sorted by first slot
}

BDiagram diagram_of(const FusionMonomial& m) {
    int max_s = 0;
    for (const auto& l : m.letters) {
        if (l.seq.empty()) throw ValidationError("fusion letter with empty seq");
        for (size_t i = 0; i < l.seq.size(); ++i) {
            if (l.seq[i].first < 1 || l.seq[i].second < 1)
                throw ValidationError("fusion letter entry below 1");
            max_s = std::max(max_s, l.seq[i].second);
            if (i > 0) {
                if (l.seq[i].second <= l.seq[i - 1].second)
                    throw ValidationError("fusion letter slots not increasing");
                if (l.seq[i].first <= l.seq[i - 1].first)
                    throw ValidationError("fusion letter vertices not increasing");
            }
        }
    }
    std::vector<int> owner(max_s + 1, 0);
    for (const auto& l : m.letters)
        for (const auto& [v, s] : l.seq) {
            if (owner[s]) throw ValidationError("slot " + std::to_string(s) + " appears twice");
            owner[s] = v;
        }
    for (int s = 1; s <= max_s; ++s)
        if (!owner[s]) throw ValidationError("slot " + std::to_string(s) + " missing");
    int max_v = 0;
    for (int s = 1; s <= max_s; ++s) {
        if (s > 1 && owner[s] < owner[s - 1])
            throw ValidationError("slot owners not in vertex order");
        max_v = std::max(max_v, owner[s]);
    }
    std::vector<int> lambda(max_v, 0);
    for (int s = 1; s <= max_s; ++s) ++lambda[owner[s] - 1];
    for (int v = 0; v < max_v; ++v)
        if (lambda[v] == 0) throw ValidationError("vertex " + std::to_string(v + 1) + " missing");

    std::vector<int> up, down;
    std::vector<std::pair<int, int>> edges;
    for (const auto& l : m.letters) {
        for (size_t i = 0; i + 1 < l.seq.size(); ++i)
            edges.emplace_back(l.seq[i].second, l.seq[i + 1].second);
        if (l.start_free) down.push_back(l.seq.front().second);
        if (l.end_free) up.push_back(l.seq.back().second);
    }
    for (const auto& e : edges) {
        up.push_back(e.first);
        down.push_back(e.second);
    }
    return make_diagram(max_v, std::move(lambda), std::move(up), std::move(down),
                        std::move(edges));
}

FusionMonomial shift(const FusionMonomial& m, int dv, int ds) {
    FusionMonomial out = m;
    for (auto& l : out.letters)
        for (auto& [v, s] : l.seq) {
            v += dv;
            s += ds;
        }
    return out;
}

int max_vertex(const FusionMonomial& m) {
    int r = 0;
    for (const auto& l : m.letters)
        for (const auto& [v, s] : l.seq) r = std::max(r, v);
    return r;
}

int max_slot(const FusionMonomial& m) {
    int r = 0;
    for (const auto& l : m.letters) r = std::max(r, l.seq.back().second);
    return r;
}

namespace {

void splice_injections(const std::vector<int>& lefts, const std::vector<int>& rights,
                       const FusionMonomial& u, const FusionMonomial& vs,
                       FusionSum& out) {
    const int k = (int)lefts.size();
    std::vector<int> pick;
    std::vector<char> used(rights.size(), 0);
    auto rec = [&](auto&& self) -> void {
        if ((int)pick.size() == k) {
            std::vector<char> taken_u(u.letters.size(), 0), taken_v(vs.letters.size(), 0);
            std::vector<FusionLetter> ls;
            for (int l = 0; l < k; ++l) {
                const auto& a = u.letters[lefts[l]];
                const auto& b = vs.letters[pick[l]];
                taken_u[lefts[l]] = 1;
                taken_v[pick[l]] = 1;
                FusionLetter merged;
                merged.start_free = a.start_free;
                merged.end_free = b.end_free;
                merged.seq = a.seq;
                merged.seq.insert(merged.seq.end(), b.seq.begin(), b.seq.end());
                ls.push_back(std::move(merged));
            }
            for (size_t i = 0; i < u.letters.size(); ++i)
                if (!taken_u[i]) ls.push_back(u.letters[i]);
            for (size_t i = 0; i < vs.letters.size(); ++i)
                if (!taken_v[i]) ls.push_back(vs.letters[i]);
            out.add(FusionMonomial::of(std::move(ls)), 1);
            return;
        }
        for (size_t i = 0; i < rights.size(); ++i) {
            if (used[i]) continue;
            used[i] = 1;
            pick.push_back(rights[i]);
            self(self);
            pick.pop_back();
            used[i] = 0;
        }
    };
    rec(rec);
}

}  // namespace

FusionSum fstar(const FusionMonomial& u, const FusionMonomial& v) {
    FusionMonomial vs = shift(v, max_vertex(u), max_slot(u));
    std::vector<int> lefts, rights;
    for (size_t i = 0; i < u.letters.size(); ++i)
        if (u.letters[i].end_free) lefts.push_back((int)i);
    for (size_t i = 0; i < vs.letters.size(); ++i)
        if (vs.letters[i].start_free) rights.push_back((int)i);
    FusionSum out;
    const int kmax = (int)std::min(lefts.size(), rights.size());
    for (int k = 0; k <= kmax; ++k) {
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        bool more = true;
        while (more) {
            std::vector<int> chosen(k);
            for (int i = 0; i < k; ++i) chosen[i] = lefts[idx[i]];
            splice_injections(chosen, rights, u, vs, out);
            more = false;
            for (int i = k - 1; i >= 0; --i) {
                if (idx[i] < (int)lefts.size() - (k - i)) {
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

FusionSum fstar(const FusionSum& u, const FusionSum& v) {
    FusionSum out;
    for (const auto& [mu, cu] : u.terms()) {
        for (const auto& [mv, cv] : v.terms()) {
            FusionSum prod = fstar(mu, mv);
            const Rat c = cu * cv;
            for (const auto& [m, c2] : prod.terms()) out.add(m, c * c2);
        }
    }
    return out;
}

namespace {

std::string seq_text(const FusionLetter& l) {
    std::string s = "(";
    for (const auto& [v, slot] : l.seq)
        s += "(" + std::to_string(v) + "," + std::to_string(slot) + ")";
    return s + ")";
}

}  // namespace

std::string render(const FusionMonomial& m) {
    if (m.is_unit()) return "1";
    std::string out;
    for (const auto& l : m.letters) {
        if (!out.empty()) out += " ";
        out += std::string("R") + (l.start_free ? ">" : "<") + seq_text(l);
    }
    for (const auto& l : m.letters)
        out += std::string(" B") + seq_text(l) + (l.end_free ? "<" : ">");
    return out;
}

std::string render(const FusionSum& x) {
    if (x.empty()) return "0\n";
    std::string out;
    for (const auto& [m, c] : x.terms()) out += c.str() + " " + render(m) + "\n";
    return out;
}

}  // namespace bdiag
