#include "cdlat/subgroup_enum.hpp"

#include <algorithm>
#include <unordered_map>

#include "cdlat/errors.hpp"
#include "cdlat/parallel.hpp"
#include "cdlat/subgroup_ops.hpp"

namespace cdlat {

namespace {

/// Bitset store with hash dedup; collisions fall back to full comparison.
class BitsetPool {
public:
    // returns (index, inserted)
    std::pair<std::uint32_t, bool> insert(Bitset b) {
        std::size_t h = b.hash();
        auto& bucket = by_hash_[h];
        for (std::uint32_t idx : bucket)
            if (items_[idx] == b) return {idx, false};
        auto idx = static_cast<std::uint32_t>(items_.size());
        items_.push_back(std::move(b));
        bucket.push_back(idx);
        return {idx, true};
    }

    bool contains(const Bitset& b) const {
        auto it = by_hash_.find(b.hash());
        if (it == by_hash_.end()) return false;
        for (std::uint32_t idx : it->second)
            if (items_[idx] == b) return true;
        return false;
    }

    std::size_t size() const { return items_.size(); }
    const Bitset& operator[](std::size_t i) const { return items_[i]; }
    std::vector<Bitset> take() { return std::move(items_); }

private:
    std::vector<Bitset> items_;
    std::unordered_map<std::size_t, std::vector<std::uint32_t>> by_hash_;
};

} // namespace

Bitset join(const Group& g, const Bitset& h, const Bitset& k) {
    std::vector<int> extra = k.elements();
    return closure_extend(g, h, extra);
}

SubgroupInventory all_subgroups(const Group& g, EnumLimits limits) {
    int n = g.order();
    if (n > limits.order_bound)
        throw SizeGuard("all_subgroups: order " + std::to_string(n) + " exceeds bound " +
                        std::to_string(limits.order_bound));

    BitsetPool pool;
    Bitset trivial(static_cast<std::size_t>(n));
    trivial.set(0);
    pool.insert(trivial);

    // distinct cyclic subgroups with their smallest generator
    std::vector<int> cyclic_gen;
    for (int x = 1; x < n; ++x) {
        Bitset c(static_cast<std::size_t>(n));
        c.set(0);
        int acc = x;
        while (acc != 0) {
            c.set(static_cast<std::size_t>(acc));
            acc = g.mul(acc, x);
        }
        auto [idx, inserted] = pool.insert(std::move(c));
        if (inserted) cyclic_gen.push_back(x);
    }

    auto guard = [&] {
        if (pool.size() > limits.count_bound)
            throw SizeGuard("all_subgroups: subgroup count exceeds bound " +
                            std::to_string(limits.count_bound));
    };
    guard();

    // breadth-first cyclic extension; frontier chunks may run in parallel,
    // results are merged in deterministic (frontier, generator) order
    std::vector<std::uint32_t> frontier;
    for (std::uint32_t i = 0; i < pool.size(); ++i) frontier.push_back(i);

    while (!frontier.empty()) {
        std::vector<std::vector<Bitset>> produced(frontier.size());
        parallel_chunks(frontier.size(), limits.threads,
                        [&](std::size_t begin, std::size_t end, int) {
                            for (std::size_t fi = begin; fi < end; ++fi) {
                                const Bitset h = pool[frontier[fi]];
                                for (int x : cyclic_gen) {
                                    if (h.test(static_cast<std::size_t>(x))) continue;
                                    produced[fi].push_back(
                                        closure_extend(g, h, std::span<const int>(&x, 1)));
                                }
                            }
                        });
        std::vector<std::uint32_t> next;
        for (auto& batch : produced)
            for (auto& j : batch) {
                auto [idx, inserted] = pool.insert(std::move(j));
                if (inserted) {
                    next.push_back(idx);
                    guard();
                }
            }
        frontier = std::move(next);
    }

    SubgroupInventory inv{pool.take(), limits};
    std::sort(inv.subgroups.begin(), inv.subgroups.end(), canonical_less);
    return inv;
}

} // namespace cdlat
