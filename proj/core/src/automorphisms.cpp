#include "cdlat/automorphisms.hpp"

#include <algorithm>

#include "cdlat/errors.hpp"
#include "cdlat/subgroup_ops.hpp"

namespace cdlat {

const char* ternary_name(Ternary t) {
    switch (t) {
        case Ternary::False: return "false";
        case Ternary::True: return "true";
        default: return "unknown";
    }
}

std::vector<int> greedy_generating_sequence(const Group& g) {
    int n = g.order();
    std::vector<int> gens;
    Bitset span(static_cast<std::size_t>(n));
    span.set(0);
    std::size_t covered = 1;
    while (covered < static_cast<std::size_t>(n)) {
        int best = -1;
        std::size_t best_size = 0;
        Bitset best_span;
        for (int x = 0; x < n; ++x) {
            if (span.test(static_cast<std::size_t>(x))) continue;
            Bitset ext = closure_extend(g, span, std::span<const int>(&x, 1));
            std::size_t sz = ext.count();
            if (sz > best_size) {
                best = x;
                best_size = sz;
                best_span = std::move(ext);
            }
        }
        gens.push_back(best);
        span = std::move(best_span);
        covered = best_size;
    }
    return gens;
}

namespace {

struct BacktrackState {
    const Group& g;
    const std::vector<int>& gens;
    const std::vector<std::vector<int>>& candidates;
    std::size_t max_count;
    std::uint64_t max_steps;
    std::uint64_t steps = 0;

    std::vector<int> map;   // partial map, -1 unknown
    std::vector<char> used; // image already taken
    std::vector<int> dom;   // assigned preimages in assignment order
    std::vector<std::vector<int>>& out;

    void assign(int pre, int img) {
        map[static_cast<std::size_t>(pre)] = img;
        used[static_cast<std::size_t>(img)] = 1;
        dom.push_back(pre);
    }

    void rollback(std::size_t mark) {
        for (std::size_t i = mark; i < dom.size(); ++i) {
            int pre = dom[i];
            used[static_cast<std::size_t>(map[static_cast<std::size_t>(pre)])] = 0;
            map[static_cast<std::size_t>(pre)] = -1;
        }
        dom.resize(mark);
    }

    /// Adds gen -> img and closes the partial map under multiplication,
    /// checking consistency against the table. False on contradiction.
    bool extend(int gen, int img) {
        std::size_t head = dom.size();
        assign(gen, img);
        for (std::size_t wi = head; wi < dom.size(); ++wi) {
            int w = dom[wi];
            for (std::size_t xi = 0; xi < dom.size(); ++xi) {
                int x = dom[xi];
                if (!step(w, x)) return false;
                if (!step(x, w)) return false;
            }
        }
        return true;
    }

    bool step(int a, int b) {
        if (++steps > max_steps)
            throw SizeGuard("automorphism search exceeds the step budget (" +
                            std::to_string(max_steps) + ")");
        int p = g.mul(a, b);
        int q = g.mul(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)]);
        int cur = map[static_cast<std::size_t>(p)];
        if (cur != -1) return cur == q;
        if (used[static_cast<std::size_t>(q)]) return false;
        assign(p, q);
        return true;
    }

    void recurse(std::size_t pos) {
        if (pos == gens.size()) {
            if (out.size() >= max_count)
                throw SizeGuard("automorphism count exceeds guard (" +
                                std::to_string(max_count) + ")");
            out.push_back(map);
            return;
        }
        for (int cand : candidates[pos]) {
            if (used[static_cast<std::size_t>(cand)]) continue;
            std::size_t mark = dom.size();
            if (extend(gens[pos], cand)) recurse(pos + 1);
            rollback(mark);
        }
    }
};

} // namespace

std::vector<std::vector<int>> automorphisms_small(const Group& g, AutLimits limits) {
    int n = g.order();
    if (n > limits.max_order)
        throw SizeGuard("automorphisms_small: order " + std::to_string(n) +
                        " exceeds guard " + std::to_string(limits.max_order));

    std::vector<int> gens = greedy_generating_sequence(g);

    std::vector<int> orders(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) orders[static_cast<std::size_t>(x)] = g.order_of(x);

    std::vector<std::vector<int>> candidates(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        int want = orders[static_cast<std::size_t>(gens[i])];
        for (int x = 0; x < n; ++x)
            if (orders[static_cast<std::size_t>(x)] == want) candidates[i].push_back(x);
    }

    std::vector<std::vector<int>> out;
    BacktrackState st{g, gens, candidates, limits.max_count, limits.max_steps, 0,
                      std::vector<int>(static_cast<std::size_t>(n), -1),
                      std::vector<char>(static_cast<std::size_t>(n), 0),
                      {},
                      out};
    st.assign(0, 0); // identity is fixed by every automorphism
    st.recurse(0);
    return out;
}

Ternary is_characteristic(const Group& g, const Bitset& h, AutLimits limits) {
    if (g.order() > limits.max_order) return Ternary::Unknown;
    std::vector<std::vector<int>> auts;
    try {
        auts = automorphisms_small(g, limits);
    } catch (const SizeGuard&) {
        return Ternary::Unknown;
    }
    for (const auto& phi : auts) {
        for (int x = h.first_set(); x >= 0; x = h.next_set(x))
            if (!h.test(static_cast<std::size_t>(phi[static_cast<std::size_t>(x)])))
                return Ternary::False;
    }
    return Ternary::True;
}

} // namespace cdlat
