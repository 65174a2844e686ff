#include "cdlat/cd_engine.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <unordered_map>

#include "cdlat/errors.hpp"
#include "cdlat/numutil.hpp"
#include "cdlat/parallel.hpp"
#include "cdlat/subgroup_ops.hpp"

namespace cdlat {

const char* cd_method_name(CdMethod m) {
    return m == CdMethod::closure_family ? "closure_family" : "brute_force";
}

std::int64_t cd_measure(const Group& g, const Bitset& h) {
    return static_cast<std::int64_t>(h.count()) *
           static_cast<std::int64_t>(centralizer(g, h).count());
}

namespace {

class FamilyPool {
public:
    std::pair<std::uint32_t, bool> insert(Bitset b) {
        std::size_t h = b.hash();
        auto& bucket = by_hash_[h];
        for (std::uint32_t idx : bucket)
            if (items_[idx] == b) return {idx, false};
        auto idx = static_cast<std::uint32_t>(items_.size());
        counts_.push_back(b.count());
        items_.push_back(std::move(b));
        bucket.push_back(idx);
        return {idx, true};
    }

    std::size_t size() const { return items_.size(); }
    const Bitset& operator[](std::size_t i) const { return items_[i]; }
    std::size_t count(std::size_t i) const { return counts_[i]; }
    std::vector<Bitset> take() { return std::move(items_); }

private:
    std::vector<Bitset> items_;
    std::vector<std::size_t> counts_;
    std::unordered_map<std::size_t, std::vector<std::uint32_t>> by_hash_;
};

} // namespace

std::vector<Bitset> centralizer_closed_family(const Group& g, const CdLimits& limits,
                                              std::vector<std::uint32_t>* elem_to_index) {
    int n = g.order();
    FamilyPool pool;
    std::vector<std::uint32_t> elem_idx(static_cast<std::size_t>(n));

    // distinct element centralizers; chunks computed in parallel, merged in
    // element order so indices are deterministic
    {
        int workers = resolve_threads(limits.threads);
        std::vector<std::vector<std::pair<int, Bitset>>> local(
            static_cast<std::size_t>(workers) + 1);
        parallel_chunks(static_cast<std::size_t>(n), limits.threads,
                        [&](std::size_t begin, std::size_t end, int chunk) {
                            auto& mine = local[static_cast<std::size_t>(chunk)];
                            for (std::size_t x = begin; x < end; ++x)
                                mine.emplace_back(static_cast<int>(x),
                                                  element_centralizer(g, static_cast<int>(x)));
                        });
        for (auto& batch : local)
            for (auto& [x, cent] : batch) {
                auto [idx, inserted] = pool.insert(std::move(cent));
                elem_idx[static_cast<std::size_t>(x)] = idx;
            }
    }

    // saturate under pairwise intersection. Lagrange shortcuts skip the AND
    // when the meet is forced: coprime orders give the trivial subgroup, and
    // two distinct subgroups of the same prime order intersect trivially.
    // (The order-3*7^5 group has ~17k prime-order centralizers; without the
    // shortcut their 1.4e8 pairwise meets dominate everything.)
    auto guard = [&] {
        if (pool.size() > limits.family_bound)
            throw SizeGuard("centralizer_closed_family: family exceeds bound " +
                            std::to_string(limits.family_bound));
    };
    guard();

    std::vector<char> prime_sieve(static_cast<std::size_t>(n) + 1, 1);
    if (n >= 1) prime_sieve[0] = prime_sieve[1] = 0;
    for (std::size_t q = 2; q * q <= static_cast<std::size_t>(n); ++q)
        if (prime_sieve[q])
            for (std::size_t v = q * q; v <= static_cast<std::size_t>(n); v += q)
                prime_sieve[v] = 0;

    bool trivial_present = false;
    auto ensure_trivial = [&] {
        if (trivial_present) return;
        Bitset trivial(static_cast<std::size_t>(n));
        trivial.set(0);
        auto [idx, inserted] = pool.insert(std::move(trivial));
        trivial_present = true;
        if (inserted) guard();
    };

    for (std::size_t i = 1; i < pool.size(); ++i) { // grows as meets are found
        std::size_t ci = pool.count(i);
        for (std::size_t j = 0; j < i; ++j) {
            std::size_t cj = pool.count(j);
            auto d = static_cast<std::size_t>(
                gcd_ll(static_cast<long long>(ci), static_cast<long long>(cj)));
            if (d == 1 || (ci == d && cj == d && prime_sieve[d])) {
                ensure_trivial(); // distinct same-prime-order, or coprime orders
                continue;
            }
            auto [idx, inserted] = pool.insert(pool[i] & pool[j]);
            if (inserted) guard();
        }
    }

    // canonical order, remapping the element->centralizer indices
    std::vector<std::uint32_t> order(pool.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::uint32_t a, std::uint32_t b) { return canonical_less(pool[a], pool[b]); });
    std::vector<std::uint32_t> rank(pool.size());
    for (std::uint32_t pos = 0; pos < order.size(); ++pos) rank[order[pos]] = pos;

    std::vector<Bitset> raw = pool.take();
    std::vector<Bitset> family(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i)
        family[rank[i]] = std::move(raw[i]);

    if (elem_to_index) {
        elem_to_index->resize(static_cast<std::size_t>(n));
        for (int x = 0; x < n; ++x)
            (*elem_to_index)[static_cast<std::size_t>(x)] = rank[elem_idx[static_cast<std::size_t>(x)]];
    }
    return family;
}

namespace {

/// Measures for every candidate subgroup. When `elem_to_index` is given the
/// centralizer of each candidate is assembled by intersecting cached element
/// centralizers of a generating set; otherwise element centralizers are
/// scanned directly.
std::vector<std::int64_t> measures_of(const Group& g, const std::vector<Bitset>& family,
                                      const std::vector<std::uint32_t>* elem_to_index,
                                      int threads) {
    std::vector<std::int64_t> out(family.size());
    std::size_t n = static_cast<std::size_t>(g.order());
    parallel_chunks(family.size(), threads, [&](std::size_t begin, std::size_t end, int) {
        for (std::size_t i = begin; i < end; ++i) {
            const Bitset& h = family[i];
            // the whole group has a recorded generating set; skip the greedy scan
            std::vector<int> gens = (h.count() == n && !g.canonical_generators().empty())
                                        ? g.canonical_generators()
                                        : generating_set(g, h);
            Bitset cent;
            if (gens.empty()) {
                cent = Bitset::full(static_cast<std::size_t>(g.order()));
            } else if (elem_to_index) {
                cent = family[(*elem_to_index)[static_cast<std::size_t>(gens[0])]];
                for (std::size_t k = 1; k < gens.size(); ++k)
                    cent &= family[(*elem_to_index)[static_cast<std::size_t>(gens[k])]];
            } else {
                cent = element_centralizer(g, gens[0]);
                for (std::size_t k = 1; k < gens.size(); ++k)
                    cent &= element_centralizer(g, gens[k]);
            }
            out[i] = static_cast<std::int64_t>(h.count()) *
                     static_cast<std::int64_t>(cent.count());
        }
    });
    return out;
}

} // namespace

CDReport cd_lattice(const Group& g, CdMethod method, const CdLimits& limits) {
    auto t0 = std::chrono::steady_clock::now();

    std::vector<Bitset> family;
    std::vector<std::uint32_t> elem_to_index;
    const std::vector<std::uint32_t>* cache = nullptr;
    if (method == CdMethod::brute_force) {
        EnumLimits el = limits.enum_limits;
        el.threads = limits.threads;
        family = all_subgroups(g, el).subgroups;
    } else {
        family = centralizer_closed_family(g, limits, &elem_to_index);
        cache = &elem_to_index;
    }

    std::vector<std::int64_t> measures = measures_of(g, family, cache, limits.threads);
    std::int64_t best = 0;
    for (std::int64_t m : measures) best = std::max(best, m);

    CDReport report;
    report.group_order = g.order();
    report.max_measure = best;
    report.method = method;
    for (std::size_t i = 0; i < family.size(); ++i)
        if (measures[i] == best) report.members.push_back(family[i]);
    // family is canonically sorted, so members already are

    report.cd_subgroup = report.members.front();
    report.top = report.members.back();

    report.is_chain = true;
    for (std::size_t i = 0; i + 1 < report.members.size(); ++i)
        if (!report.members[i].is_subset_of(report.members[i + 1])) {
            report.is_chain = false;
            break;
        }
    if (report.is_chain)
        report.chain_length = static_cast<int>(report.members.size()) - 1;

    report.property_checks = verify_cd_properties(g, report, limits);

    report.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
    return report;
}

const Bitset& cd_subgroup(const CDReport& report) { return report.cd_subgroup; }

std::map<std::string, Ternary> verify_cd_properties(const Group& g, const CDReport& report,
                                                    const CdLimits& limits) {
    const auto& members = report.members;
    std::size_t k = members.size();
    auto find_member = [&](const Bitset& b) -> int {
        for (std::size_t i = 0; i < k; ++i)
            if (members[i] == b) return static_cast<int>(i);
        return -1;
    };

    std::map<std::string, Ternary> checks;
    auto put = [&](const char* name, bool v) {
        checks[name] = v ? Ternary::True : Ternary::False;
    };

    // (a) closure under meet and join, memoized as index tables
    std::vector<std::vector<int>> meet_idx(k, std::vector<int>(k, -1));
    std::vector<std::vector<int>> join_idx(k, std::vector<int>(k, -1));
    bool closed = true;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) {
            int mi = find_member(members[i] & members[j]);
            int ji = find_member(join(g, members[i], members[j]));
            if (mi < 0 || ji < 0) closed = false;
            meet_idx[i][j] = meet_idx[j][i] = mi;
            join_idx[i][j] = join_idx[j][i] = ji;
        }
    put("sublattice_closed", closed);

    // (b) modular law x <= z  =>  x v (y ^ z) = (x v y) ^ z over member triples
    bool modular = closed;
    if (closed) {
        for (std::size_t x = 0; x < k && modular; ++x)
            for (std::size_t z = 0; z < k && modular; ++z) {
                if (!members[x].is_subset_of(members[z])) continue;
                for (std::size_t y = 0; y < k; ++y) {
                    int lhs = join_idx[x][static_cast<std::size_t>(meet_idx[y][z])];
                    int rhs = meet_idx[static_cast<std::size_t>(join_idx[x][y])][z];
                    if (lhs != rhs) {
                        modular = false;
                        break;
                    }
                }
            }
    }
    put("modular", modular);

    // (c) duality H -> C_G(H): member-valued, involutive, inclusion-reversing
    bool dual_member = true, dual_involution = true, dual_antitone = true;
    std::vector<int> dual(k, -1);
    for (std::size_t i = 0; i < k; ++i) {
        Bitset c = centralizer(g, members[i]);
        int ci = find_member(c);
        dual[i] = ci;
        if (ci < 0) {
            dual_member = false;
            continue;
        }
        if (centralizer(g, c) != members[i]) dual_involution = false;
    }
    if (dual_member) {
        for (std::size_t i = 0; i < k && dual_antitone; ++i)
            for (std::size_t j = 0; j < k; ++j)
                if (members[i].is_subset_of(members[j]) &&
                    !members[static_cast<std::size_t>(dual[j])].is_subset_of(
                        members[static_cast<std::size_t>(dual[i])])) {
                    dual_antitone = false;
                    break;
                }
    } else {
        dual_involution = false;
        dual_antitone = false;
    }
    put("duality_into_members", dual_member);
    put("duality_involution", dual_involution);
    put("duality_antitone", dual_antitone);

    // (d) M(G) abelian and contains Z(G)
    const Bitset& m_min = report.cd_subgroup;
    bool min_is_min = true;
    for (std::size_t i = 0; i < k; ++i)
        if (!m_min.is_subset_of(members[i])) min_is_min = false;
    put("min_member_unique", min_is_min);
    put("min_abelian", is_abelian_subset(g, m_min));
    put("min_contains_center", center(g, limits.threads).is_subset_of(m_min));

    // (e) M(G) characteristic, within the automorphism guard
    checks["min_characteristic"] = is_characteristic(g, m_min, limits.aut_limits);

    return checks;
}

} // namespace cdlat
