#include "cdlat/frobenius.hpp"

#include <algorithm>

#include "cdlat/errors.hpp"
#include "cdlat/numutil.hpp"
#include "cdlat/subgroup_ops.hpp"

namespace cdlat {

FrobeniusWitness frobenius_conditions(const Group& g, const Bitset& n, const Bitset& a) {
    int order = g.order();
    if (!is_subgroup(g, n)) throw NotAComplement("N is not a subgroup");
    if (!is_subgroup(g, a)) throw NotAComplement("A is not a subgroup");
    if (!is_normal(g, n)) throw NotAComplement("N is not normal");
    if ((n & a).count() != 1)
        throw NotAComplement("N and A intersect nontrivially");
    if (n.count() * a.count() != static_cast<std::size_t>(order))
        throw NotAComplement("|N| * |A| = " + std::to_string(n.count() * a.count()) +
                             " != |G| = " + std::to_string(order));

    FrobeniusWitness w;
    w.kernel = n;
    w.complement = a;

    std::vector<int> n_elems = n.elements();
    std::vector<int> a_elems = a.elements();

    // (1) conjugation action of A on N fixes no nonidentity pair
    bool c1 = true;
    for (int x : a_elems) {
        if (x == 0) continue;
        for (int e : n_elems) {
            if (e == 0) continue;
            if (g.conj(x, e) == e) {
                c1 = false;
                break;
            }
        }
        if (!c1) break;
    }

    // (2) A meets A^g trivially for every g outside A
    bool c2 = true;
    for (int x = 0; x < order && c2; ++x) {
        if (a.test(static_cast<std::size_t>(x))) continue;
        Bitset conj = conjugate_subgroup(g, a, x);
        conj &= a;
        if (conj.count() != 1) c2 = false;
    }

    // (3) C_G(a) <= A for nonidentity a in A
    bool c3 = true;
    for (int x : a_elems) {
        if (x == 0) continue;
        for (int h = 0; h < order; ++h) {
            if (g.mul(x, h) == g.mul(h, x) && !a.test(static_cast<std::size_t>(h))) {
                c3 = false;
                break;
            }
        }
        if (!c3) break;
    }

    // (4) C_G(n) <= N for nonidentity n in N
    bool c4 = true;
    for (int e : n_elems) {
        if (e == 0) continue;
        for (int h = 0; h < order; ++h) {
            if (g.mul(e, h) == g.mul(h, e) && !n.test(static_cast<std::size_t>(h))) {
                c4 = false;
                break;
            }
        }
        if (!c4) break;
    }

    w.condition_results = {c1, c2, c3, c4};
    w.is_frobenius = c1 && n.count() > 1 && a.count() > 1;
    return w;
}

std::optional<int> regular_orbit_search(const Group& g, const Bitset& n, const Bitset& h) {
    if (!is_subgroup(g, n) || !is_subgroup(g, h))
        throw InvalidParameters("regular_orbit_search expects subgroups");
    if (!is_abelian_subset(g, n)) throw NotAbelian("acting subgroup N is not abelian");
    if (gcd_ll(static_cast<long long>(n.count()), static_cast<long long>(h.count())) != 1)
        throw NotCoprime("|N| = " + std::to_string(n.count()) + " and |H| = " +
                         std::to_string(h.count()) + " are not coprime");

    std::vector<int> n_elems = n.elements();
    std::vector<int> h_elems = h.elements();

    // N must normalize H for conjugation to act on H at all
    for (int x : n_elems)
        for (int e : h_elems)
            if (!h.test(static_cast<std::size_t>(g.conj(x, e))))
                throw NotNormalized("N does not normalize H (witness: " + std::to_string(x) +
                                    " conjugating " + std::to_string(e) + ")");

    // faithfulness: only the identity of N fixes all of H
    for (int x : n_elems) {
        if (x == 0) continue;
        bool fixes_all = true;
        for (int e : h_elems) {
            if (g.conj(x, e) != e) {
                fixes_all = false;
                break;
            }
        }
        if (fixes_all)
            throw ActionNotFaithful("element " + std::to_string(x) +
                                    " of N acts trivially on H");
    }

    for (int e : h_elems) {
        bool regular = true;
        for (int x : n_elems) {
            if (x == 0) continue;
            if (g.conj(x, e) == e) {
                regular = false;
                break;
            }
        }
        if (regular) return e;
    }
    return std::nullopt;
}

CDReport cd_lattice_within(const Group& g, const Bitset& n, CdMethod method,
                           const CdLimits& limits) {
    SubgroupAsGroup sub = subgroup_as_group(g, n);
    CDReport inner = cd_lattice(sub.group, method, limits);

    CDReport out = inner;
    out.members.clear();
    for (const Bitset& m : inner.members) out.members.push_back(embed_subgroup(sub, m));
    out.cd_subgroup = embed_subgroup(sub, inner.cd_subgroup);
    out.top = embed_subgroup(sub, inner.top);
    return out;
}

Theorem6Report verify_theorem6(const Group& g, const Bitset& n, const Bitset& a,
                               const CdLimits& limits) {
    FrobeniusWitness w = frobenius_conditions(g, n, a);

    Theorem6Report rep;
    auto& checks = rep.checks;
    checks["is_frobenius"] = w.is_frobenius;
    checks["prop5_conditions_agree"] =
        w.condition_results[0] == w.condition_results[1] &&
        w.condition_results[1] == w.condition_results[2] &&
        w.condition_results[2] == w.condition_results[3];

    long long n_ord = static_cast<long long>(n.count());
    long long a_ord = static_cast<long long>(a.count());
    checks["kernel_order_congruent_1_mod_complement"] = n_ord % a_ord == 1;

    SubgroupAsGroup sub = subgroup_as_group(g, n);
    Bitset zn_inner = center(sub.group, limits.threads);
    long long zn_ord = static_cast<long long>(zn_inner.count());
    checks["kernel_center_order_congruent_1_mod_complement"] = zn_ord % a_ord == 1;

    checks["center_of_g_trivial"] = center(g, limits.threads).count() == 1;
    checks["kernel_nilpotent"] = is_nilpotent(sub.group);

    std::int64_t m_n = cd_measure(g, n);
    checks["kernel_measure_is_order_times_center"] = m_n == n_ord * zn_ord;
    checks["kernel_measure_exceeds_group_order"] = m_n > g.order();

    rep.cd_g = cd_lattice(g, CdMethod::closure_family, limits);
    rep.cd_n = cd_lattice_within(g, n, CdMethod::closure_family, limits);

    Bitset trivial(static_cast<std::size_t>(g.order()));
    trivial.set(0);
    bool has_trivial = false, has_full = false;
    for (const Bitset& m : rep.cd_g.members) {
        if (m == trivial) has_trivial = true;
        if (m.count() == static_cast<std::size_t>(g.order())) has_full = true;
    }
    checks["trivial_not_in_cd"] = !has_trivial;
    checks["full_group_not_in_cd"] = !has_full;

    checks["cd_g_equals_cd_n"] = rep.cd_g.members == rep.cd_n.members;

    // measures agree member-by-member: m_G(H) = m_N(H) on the common lattice
    bool measures_agree = checks["cd_g_equals_cd_n"];
    if (measures_agree) {
        for (std::size_t i = 0; i < rep.cd_g.members.size(); ++i) {
            const Bitset& member = rep.cd_g.members[i];
            Bitset inner_bits(static_cast<std::size_t>(sub.group.order()));
            for (std::size_t j = 0; j < sub.embedding.size(); ++j)
                if (member.test(static_cast<std::size_t>(sub.embedding[j]))) inner_bits.set(j);
            if (cd_measure(g, member) != cd_measure(sub.group, inner_bits)) {
                measures_agree = false;
                break;
            }
        }
    }
    checks["measures_agree_on_members"] = measures_agree;
    checks["max_measures_equal"] = rep.cd_g.max_measure == rep.cd_n.max_measure;

    rep.passed = std::all_of(checks.begin(), checks.end(),
                             [](const auto& kv) { return kv.second; });
    return rep;
}

} // namespace cdlat
