#include "cdlat/subgroup_ops.hpp"

#include <algorithm>

#include "cdlat/errors.hpp"
#include "cdlat/parallel.hpp"

namespace cdlat {

namespace {

/// Shared worklist saturation. `elems` lists the members of `bits` (any order,
/// identity included); `work` holds indices into elems still to be processed.
void saturate(const Group& g, Bitset& bits, std::vector<int>& elems, std::size_t first_new) {
    for (std::size_t wi = first_new; wi < elems.size(); ++wi) {
        int w = elems[wi];
        for (std::size_t xi = 0; xi < elems.size(); ++xi) {
            int x = elems[xi];
            int p = g.mul(w, x);
            if (!bits.test(static_cast<std::size_t>(p))) {
                bits.set(static_cast<std::size_t>(p));
                elems.push_back(p);
            }
            p = g.mul(x, w);
            if (!bits.test(static_cast<std::size_t>(p))) {
                bits.set(static_cast<std::size_t>(p));
                elems.push_back(p);
            }
        }
    }
}

} // namespace

Bitset closure(const Group& g, std::span<const int> gens) {
    Bitset bits(static_cast<std::size_t>(g.order()));
    bits.set(0);
    std::vector<int> elems{0};
    std::size_t first_new = elems.size();
    for (int x : gens) {
        if (!bits.test(static_cast<std::size_t>(x))) {
            bits.set(static_cast<std::size_t>(x));
            elems.push_back(x);
        }
    }
    saturate(g, bits, elems, first_new);
    return bits;
}

Bitset closure(const Group& g, std::initializer_list<int> gens) {
    return closure(g, std::span<const int>(gens.begin(), gens.size()));
}

Bitset closure_extend(const Group& g, const Bitset& closed, std::span<const int> extra) {
    Bitset bits = closed;
    std::vector<int> elems = closed.elements();
    std::size_t first_new = elems.size();
    for (int x : extra) {
        if (!bits.test(static_cast<std::size_t>(x))) {
            bits.set(static_cast<std::size_t>(x));
            elems.push_back(x);
        }
    }
    saturate(g, bits, elems, first_new);
    return bits;
}

bool is_subgroup(const Group& g, const Bitset& h) {
    if (h.size_bits() != static_cast<std::size_t>(g.order())) return false;
    if (!h.test(0)) return false;
    std::vector<int> elems = h.elements();
    for (int a : elems) {
        if (!h.test(static_cast<std::size_t>(g.inv(a)))) return false;
        for (int b : elems)
            if (!h.test(static_cast<std::size_t>(g.mul(a, b)))) return false;
    }
    return true;
}

std::vector<int> generating_set(const Group& g, const Bitset& h) {
    std::vector<int> gens;
    Bitset span(static_cast<std::size_t>(g.order()));
    span.set(0);
    for (int x = h.first_set(); x >= 0; x = h.next_set(x)) {
        if (!span.test(static_cast<std::size_t>(x))) {
            gens.push_back(x);
            span = closure_extend(g, span, std::span<const int>(&x, 1));
            if (span == h) break;
        }
    }
    return gens;
}

Bitset element_centralizer(const Group& g, int x) {
    Bitset out(static_cast<std::size_t>(g.order()));
    int n = g.order();
    for (int h = 0; h < n; ++h)
        if (g.mul(x, h) == g.mul(h, x)) out.set(static_cast<std::size_t>(h));
    return out;
}

Bitset centralizer(const Group& g, const Bitset& h) {
    std::vector<int> gens = generating_set(g, h);
    if (gens.empty()) return Bitset::full(static_cast<std::size_t>(g.order()));
    Bitset out = element_centralizer(g, gens[0]);
    for (std::size_t i = 1; i < gens.size(); ++i) out &= element_centralizer(g, gens[i]);
    return out;
}

Bitset centralizer_scan(const Group& g, const Bitset& h) {
    Bitset out(static_cast<std::size_t>(g.order()));
    std::vector<int> elems = h.elements();
    int n = g.order();
    for (int x = 0; x < n; ++x) {
        bool commutes = true;
        for (int e : elems) {
            if (g.mul(x, e) != g.mul(e, x)) {
                commutes = false;
                break;
            }
        }
        if (commutes) out.set(static_cast<std::size_t>(x));
    }
    return out;
}

Bitset center(const Group& g, int threads) {
    int n = g.order();
    Bitset out(static_cast<std::size_t>(n));
    std::vector<std::vector<int>> found(static_cast<std::size_t>(resolve_threads(threads)) + 1);
    parallel_chunks(static_cast<std::size_t>(n), threads,
                    [&](std::size_t begin, std::size_t end, int chunk) {
                        auto& local = found[static_cast<std::size_t>(chunk)];
                        for (std::size_t z = begin; z < end; ++z) {
                            bool central = true;
                            for (int x = 0; x < n; ++x) {
                                if (g.mul(static_cast<int>(z), x) != g.mul(x, static_cast<int>(z))) {
                                    central = false;
                                    break;
                                }
                            }
                            if (central) local.push_back(static_cast<int>(z));
                        }
                    });
    for (const auto& local : found)
        for (int z : local) out.set(static_cast<std::size_t>(z));
    return out;
}

Bitset conjugate_subgroup(const Group& g, const Bitset& h, int x) {
    Bitset out(h.size_bits());
    h.for_each([&](int e) { out.set(static_cast<std::size_t>(g.conj(x, e))); });
    return out;
}

bool is_normal(const Group& g, const Bitset& h) {
    int n = g.order();
    std::vector<int> elems = h.elements();
    for (int x = 0; x < n; ++x)
        for (int e : elems)
            if (!h.test(static_cast<std::size_t>(g.conj(x, e)))) return false;
    return true;
}

bool is_abelian_subset(const Group& g, const Bitset& h) {
    std::vector<int> elems = h.elements();
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = i + 1; j < elems.size(); ++j)
            if (g.mul(elems[i], elems[j]) != g.mul(elems[j], elems[i])) return false;
    return true;
}

std::vector<Bitset> upper_central_series(const Group& g) {
    int n = g.order();
    std::vector<Bitset> series;
    Bitset z(static_cast<std::size_t>(n));
    z.set(0);
    series.push_back(z);
    while (true) {
        const Bitset& prev = series.back();
        Bitset next(static_cast<std::size_t>(n));
        for (int e = 0; e < n; ++e) {
            bool in_next = true;
            for (int x = 0; x < n; ++x) {
                if (!prev.test(static_cast<std::size_t>(g.commutator(e, x)))) {
                    in_next = false;
                    break;
                }
            }
            if (in_next) next.set(static_cast<std::size_t>(e));
        }
        if (next == prev) break;
        series.push_back(std::move(next));
        if (series.back().count() == static_cast<std::size_t>(n)) break;
    }
    return series;
}

bool is_nilpotent(const Group& g) {
    auto series = upper_central_series(g);
    return series.back().count() == static_cast<std::size_t>(g.order());
}

} // namespace cdlat
