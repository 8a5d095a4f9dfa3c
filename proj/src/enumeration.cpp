#include "bdiag/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstdlib>
#include <mutex>
#include <thread>

namespace bdiag {

namespace {

std::vector<std::vector<int>> slot_compositions(int p) {
    std::vector<std::vector<int>> out;
    if (p == 0) {
        out.push_back({});
        return out;
    }
    for (unsigned mask = 0; mask < (1u << (p - 1)); ++mask) {
        std::vector<int> lambda;
        int run = 1;
        for (int i = 0; i < p - 1; ++i) {
            if (mask >> i & 1) {
                lambda.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        lambda.push_back(run);
        out.push_back(std::move(lambda));
    }
    return out;
}

void enumerate_shape(const std::vector<int>& lambda,
                     const std::function<void(const BDiagram&)>& sink) {
    const int p = [&] {
        int s = 0;
        for (int l : lambda) s += l;
        return s;
    }();
    const int n = (int)lambda.size();
    std::vector<int> vx(p + 1, 0);
    {
        int slot = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < lambda[i]; ++j) vx[++slot] = i + 1;
    }
    BDiagram g;
    g.n = n;
    g.lambda = lambda;
    for (unsigned um = 0; um < (1u << p); ++um) {
        g.up.clear();
        for (int s = 1; s <= p; ++s)
            if (um >> (s - 1) & 1) g.up.push_back(s);
        for (unsigned dm = 0; dm < (1u << p); ++dm) {
            g.down.clear();
            for (int s = 1; s <= p; ++s)
                if (dm >> (s - 1) & 1) g.down.push_back(s);
            std::vector<std::pair<int, int>> cand;
            for (int a : g.up)
                for (int b : g.down)
                    if (vx[a] < vx[b]) cand.emplace_back(a, b);
            // depth-first over matchings; extending only with later candidates
            // yields each edge set once, in lexicographic order
            g.edges.clear();
            unsigned used_src = 0, used_tgt = 0;
            auto rec = [&](auto&& self, size_t from) -> void {
                sink(g);
                for (size_t i = from; i < cand.size(); ++i) {
                    unsigned sb = 1u << (cand[i].first - 1), tb = 1u << (cand[i].second - 1);
                    if ((used_src & sb) || (used_tgt & tb)) continue;
                    used_src |= sb;
                    used_tgt |= tb;
                    g.edges.push_back(cand[i]);
                    self(self, i + 1);
                    g.edges.pop_back();
                    used_src &= ~sb;
                    used_tgt &= ~tb;
                }
            };
            rec(rec, 0);
        }
    }
}

int thread_count() {
    if (const char* s = std::getenv("BDIAG_THREADS")) {
        int t = std::atoi(s);
        if (t > 1) return t;
    }
    return 1;
}

}  // namespace

void enumerate_all(int p, const std::function<void(const BDiagram&)>& sink) {
    auto comps = slot_compositions(p);
    int threads = std::min<int>(thread_count(), (int)comps.size());
    if (threads <= 1) {
        for (const auto& lambda : comps) enumerate_shape(lambda, sink);
        return;
    }
    // workers fill per-composition buffers; the caller drains them in order
    std::vector<std::vector<BDiagram>> buf(comps.size());
    std::vector<char> ready(comps.size(), 0);
    std::mutex mu;
    std::condition_variable cv;
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (size_t i; (i = next.fetch_add(1)) < comps.size();) {
                std::vector<BDiagram> local;
                enumerate_shape(comps[i], [&](const BDiagram& d) { local.push_back(d); });
                std::lock_guard lock(mu);
                buf[i] = std::move(local);
                ready[i] = 1;
                cv.notify_all();
            }
        });
    }
    for (size_t i = 0; i < comps.size(); ++i) {
        std::unique_lock lock(mu);
        cv.wait(lock, [&] { return ready[i] != 0; });
        auto chunk = std::move(buf[i]);
        lock.unlock();
        for (const auto& d : chunk) sink(d);
    }
    for (auto& t : pool) t.join();
}

std::vector<BDiagram> enumerate_all(int p) {
    std::vector<BDiagram> out;
    enumerate_all(p, [&](const BDiagram& d) { out.push_back(d); });
    return out;
}

std::vector<Int> brute_histogram(int p) {
    std::vector<Int> hist(p + 1, 0);
    enumerate_all(p, [&](const BDiagram& d) {
        validate(d);
        ++hist[free_up(d).size()];
    });
    return hist;
}

std::vector<std::vector<Int>> count_table(int max_p) {
    std::vector<std::vector<Int>> d(max_p + 1);
    for (int p = 0; p <= max_p; ++p) d[p].assign(p + 1, 0);
    d[0][0] = 1;
    for (int p = 1; p <= max_p; ++p) {
        for (int q = 0; q <= p; ++q) {
            Int acc = 0;
            for (int i = 1; i <= p; ++i) {
                for (int j = 0; j <= i; ++j) {
                    for (int k = 0; k <= i; ++k) {
                        for (int l = 0; l <= j; ++l) {
                            int q2 = q - k + l;
                            if (q2 < 0 || q2 > p - i) continue;
                            acc += factorial(l) * binomial(j, l) * binomial(q2, l) *
                                   binomial(i, j) * binomial(i, k) * d[p - i][q2];
                        }
                    }
                }
            }
            d[p][q] = acc;
        }
    }
    return d;
}

Int count_all(int p) {
    auto t = count_table(p);
    Int s = 0;
    for (const auto& c : t[p]) s += c;
    return s;
}

bool crosscheck(int p, std::string* detail) {
    auto brute = brute_histogram(p);
    auto rec = count_table(p)[p];
    bool ok = true;
    for (int q = 0; q <= p; ++q) {
        if (brute[q] != rec[q]) {
            ok = false;
            if (detail)
                *detail += "bucket " + std::to_string(q) + ": enumeration " + brute[q].str() +
                           " vs recurrence " + rec[q].str() + "; ";
        }
    }
    return ok;
}

}  // namespace bdiag
