#include "cdlat/group.hpp"

#include <algorithm>

#include "cdlat/errors.hpp"

namespace cdlat {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace

void Group::validate_table(int n, const std::vector<std::uint16_t>& table,
                           const ValidationConfig& cfg) {
    auto at = [&](int a, int b) { return table[static_cast<std::size_t>(a) * n + b]; };

    // identity at 0
    for (int g = 0; g < n; ++g) {
        if (at(0, g) != g)
            throw NotAGroup("table[0][" + std::to_string(g) + "] = " +
                            std::to_string(at(0, g)) + ", expected " + std::to_string(g));
        if (at(g, 0) != g)
            throw NotAGroup("table[" + std::to_string(g) + "][0] = " +
                            std::to_string(at(g, 0)) + ", expected " + std::to_string(g));
    }

    // Latin square
    std::vector<char> seen(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int b = 0; b < n; ++b) {
            int v = at(a, b);
            if (seen[static_cast<std::size_t>(v)])
                throw NotAGroup("row " + std::to_string(a) + " repeats value " +
                                std::to_string(v) + " (not a Latin square)");
            seen[static_cast<std::size_t>(v)] = 1;
        }
    }
    for (int b = 0; b < n; ++b) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int a = 0; a < n; ++a) {
            int v = at(a, b);
            if (seen[static_cast<std::size_t>(v)])
                throw NotAGroup("column " + std::to_string(b) + " repeats value " +
                                std::to_string(v) + " (not a Latin square)");
            seen[static_cast<std::size_t>(v)] = 1;
        }
    }

    // inverses
    for (int a = 0; a < n; ++a) {
        bool found = false;
        for (int b = 0; b < n; ++b) {
            if (at(a, b) == 0 && at(b, a) == 0) {
                found = true;
                break;
            }
        }
        if (!found)
            throw NotAGroup("element " + std::to_string(a) + " has no two-sided inverse");
    }

    // associativity
    auto check_triple = [&](int a, int b, int c) {
        if (at(at(a, b), c) != at(a, at(b, c)))
            throw NotAGroup("associativity fails at witness (" + std::to_string(a) + ", " +
                            std::to_string(b) + ", " + std::to_string(c) + ")");
    };
    if (n <= cfg.full_assoc_bound) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) check_triple(a, b, c);
    } else {
        std::uint64_t state = 0x5eedc0de5eedc0deULL;
        for (int s = 0; s < cfg.assoc_samples; ++s) {
            int a = static_cast<int>(splitmix64(state) % static_cast<std::uint64_t>(n));
            int b = static_cast<int>(splitmix64(state) % static_cast<std::uint64_t>(n));
            int c = static_cast<int>(splitmix64(state) % static_cast<std::uint64_t>(n));
            check_triple(a, b, c);
        }
    }
}

Group Group::from_cayley_table(const std::vector<std::vector<int>>& table,
                               ValidationConfig cfg) {
    std::size_t n = table.size();
    if (n == 0) throw NotAGroup("empty table");
    if (n > static_cast<std::size_t>(kMaxGroupOrder))
        throw SizeGuard("order " + std::to_string(n) + " exceeds id space (" +
                        std::to_string(kMaxGroupOrder) + ")");
    for (std::size_t r = 0; r < n; ++r) {
        if (table[r].size() != n)
            throw NotAGroup("row " + std::to_string(r) + " has length " +
                            std::to_string(table[r].size()) + ", expected " + std::to_string(n));
        for (int v : table[r])
            if (v < 0 || static_cast<std::size_t>(v) >= n)
                throw NotAGroup("entry " + std::to_string(v) + " out of range in row " +
                                std::to_string(r));
    }

    // locate the two-sided identity
    int id = -1;
    for (std::size_t e = 0; e < n; ++e) {
        bool ok = true;
        for (std::size_t g = 0; g < n && ok; ++g)
            ok = static_cast<std::size_t>(table[e][g]) == g &&
                 static_cast<std::size_t>(table[g][e]) == g;
        if (ok) {
            id = static_cast<int>(e);
            break;
        }
    }
    if (id < 0) throw NotAGroup("no two-sided identity element");

    // relabel so that the identity is id 0
    std::vector<int> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<int>(i);
    if (id != 0) std::swap(perm[0], perm[static_cast<std::size_t>(id)]);

    std::vector<std::uint16_t> flat(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            flat[static_cast<std::size_t>(perm[a]) * n + static_cast<std::size_t>(perm[b])] =
                static_cast<std::uint16_t>(perm[static_cast<std::size_t>(table[a][b])]);

    validate_table(static_cast<int>(n), flat, cfg);

    Group g;
    g.n_ = static_cast<int>(n);
    g.table_ = std::move(flat);
    g.build_inverse();
    return g;
}

Group Group::trusted(int n, std::vector<std::uint16_t> table) {
    if (n < 1 || n > kMaxGroupOrder)
        throw SizeGuard("order " + std::to_string(n) + " exceeds id space");
    if (table.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw InvalidParameters("table size does not match order");
    Group g;
    g.n_ = n;
    g.table_ = std::move(table);
    g.build_inverse();
    return g;
}

Group Group::extension(std::shared_ptr<const Group> base, int e,
                       std::vector<std::uint16_t> aut_pows) {
    int pn = base->order();
    long long n = static_cast<long long>(pn) * e;
    if (n > kMaxGroupOrder)
        throw SizeGuard("extension order " + std::to_string(n) + " exceeds id space");
    if (aut_pows.size() != static_cast<std::size_t>(pn) * static_cast<std::size_t>(e))
        throw InvalidParameters("automorphism power table size mismatch");

    Group g;
    g.n_ = static_cast<int>(n);
    g.base_ = std::move(base);
    g.ext_e_ = e;
    g.ext_aut_pows_ = std::move(aut_pows);
    g.ext_div_.resize(static_cast<std::size_t>(n));
    g.ext_mod_.resize(static_cast<std::size_t>(n));
    for (long long i = 0; i < n; ++i) {
        g.ext_div_[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(i / e);
        g.ext_mod_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i % e);
    }
    g.build_inverse();
    return g;
}

void Group::build_inverse() {
    inverse_.assign(static_cast<std::size_t>(n_), 0);
    if (!table_.empty()) {
        for (int a = 0; a < n_; ++a) {
            const std::uint16_t* row = table_.data() + static_cast<std::size_t>(a) * n_;
            for (int b = 0; b < n_; ++b) {
                if (row[b] == 0) {
                    inverse_[static_cast<std::size_t>(a)] = static_cast<std::uint16_t>(b);
                    break;
                }
            }
        }
    } else {
        int pn = base_->order();
        for (int q = 0; q < pn; ++q) {
            for (int k = 0; k < ext_e_; ++k) {
                int krev = (ext_e_ - k) % ext_e_;
                int qi = base_->inv(q);
                int qrev = ext_aut_pows_[static_cast<std::size_t>(krev) * pn + qi];
                inverse_[static_cast<std::size_t>(q) * ext_e_ + k] =
                    static_cast<std::uint16_t>(qrev * ext_e_ + krev);
            }
        }
    }
}

void Group::validate(ValidationConfig cfg) const {
    if (!table_.empty()) {
        validate_table(n_, table_, cfg);
        return;
    }
    // extension form: identity/inverse exactly, associativity by sampling
    for (int g = 0; g < n_; ++g) {
        if (mul(0, g) != g || mul(g, 0) != g)
            throw NotAGroup("identity law fails at element " + std::to_string(g));
        if (mul(g, inv(g)) != 0)
            throw NotAGroup("inverse law fails at element " + std::to_string(g));
    }
    std::uint64_t state = 0x5eedc0de5eedc0deULL;
    for (int s = 0; s < cfg.assoc_samples; ++s) {
        int a = static_cast<int>(splitmix64(state) % static_cast<std::uint64_t>(n_));
        int b = static_cast<int>(splitmix64(state) % static_cast<std::uint64_t>(n_));
        int c = static_cast<int>(splitmix64(state) % static_cast<std::uint64_t>(n_));
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw NotAGroup("associativity fails at witness (" + std::to_string(a) + ", " +
                            std::to_string(b) + ", " + std::to_string(c) + ")");
    }
}

int Group::order_of(int g) const {
    int k = 1;
    int acc = g;
    while (acc != 0) {
        acc = mul(acc, g);
        ++k;
    }
    return k;
}

bool Group::is_abelian() const {
    for (int a = 1; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

int Group::element_by_label(const std::string& name) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == name) return static_cast<int>(i);
    return -1;
}

const Bitset* Group::named_subgroup(const std::string& name) const {
    auto it = named_subgroups_.find(name);
    return it == named_subgroups_.end() ? nullptr : &it->second;
}

std::vector<std::string> Group::named_subgroup_names() const {
    std::vector<std::string> out;
    out.reserve(named_subgroups_.size());
    for (const auto& [k, v] : named_subgroups_) out.push_back(k);
    return out;
}

void Group::set_labels(std::vector<std::string> labels) {
    if (labels.size() != static_cast<std::size_t>(n_))
        throw InvalidParameters("label count does not match order");
    labels_ = std::move(labels);
}

void Group::add_named_subgroup(const std::string& name, Bitset bits) {
    named_subgroups_.insert_or_assign(name, std::move(bits));
}

std::optional<long long> Group::attribute(const std::string& name) const {
    auto it = attributes_.find(name);
    if (it == attributes_.end()) return std::nullopt;
    return it->second;
}

void Group::set_attribute(const std::string& name, long long value) {
    attributes_.insert_or_assign(name, value);
}

SubgroupAsGroup subgroup_as_group(const Group& g, const Bitset& h) {
    if (h.size_bits() != static_cast<std::size_t>(g.order()) || !h.test(0))
        throw NotAGroup("subgroup_as_group: set does not contain the identity");
    std::vector<int> elems = h.elements();
    int m = static_cast<int>(elems.size());
    std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
    for (int i = 0; i < m; ++i) index[static_cast<std::size_t>(elems[i])] = i;

    std::vector<std::uint16_t> table(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            int p = g.mul(elems[static_cast<std::size_t>(i)], elems[static_cast<std::size_t>(j)]);
            int pi = index[static_cast<std::size_t>(p)];
            if (pi < 0)
                throw NotAGroup("subgroup_as_group: set not closed, witness (" +
                                std::to_string(elems[i]) + ", " + std::to_string(elems[j]) + ")");
            table[static_cast<std::size_t>(i) * m + j] = static_cast<std::uint16_t>(pi);
        }
    }

    SubgroupAsGroup out{Group::trusted(m, std::move(table)), std::move(elems), g.order()};
    if (g.has_labels()) {
        std::vector<std::string> labels(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) labels[static_cast<std::size_t>(i)] = g.label(out.embedding[i]);
        out.group.set_labels(std::move(labels));
    }
    return out;
}

Bitset embed_subgroup(const SubgroupAsGroup& sub, const Bitset& inner) {
    Bitset out(static_cast<std::size_t>(sub.ambient_order));
    inner.for_each([&](int i) { out.set(static_cast<std::size_t>(sub.embedding[static_cast<std::size_t>(i)])); });
    return out;
}

Group relabeled(const Group& g, const std::vector<int>& perm) {
    int n = g.order();
    if (perm.size() != static_cast<std::size_t>(n) || perm[0] != 0)
        throw InvalidParameters("relabeled: perm must be a permutation fixing 0");
    std::vector<std::uint16_t> table(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            table[static_cast<std::size_t>(perm[a]) * n + perm[b]] =
                static_cast<std::uint16_t>(perm[static_cast<std::size_t>(g.mul(a, b))]);
    return Group::trusted(n, std::move(table));
}

} // namespace cdlat
