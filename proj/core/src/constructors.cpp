#include "cdlat/constructors.hpp"

#include <algorithm>
#include <numeric>

#include "cdlat/errors.hpp"
#include "cdlat/gf.hpp"
#include "cdlat/numutil.hpp"
#include "cdlat/parallel.hpp"
#include "cdlat/subgroup_ops.hpp"

namespace cdlat {

namespace {

void check_order(long long n, const TableBudget& budget) {
    if (n < 1) throw InvalidParameters("group order must be positive");
    if (n > kMaxGroupOrder)
        throw SizeGuard("order " + std::to_string(n) + " exceeds id space (" +
                        std::to_string(kMaxGroupOrder) + ")");
    if (static_cast<std::size_t>(n) * static_cast<std::size_t>(n) * 2 > budget.max_bytes)
        throw SizeGuard("dense table for order " + std::to_string(n) +
                        " exceeds the memory budget");
}

std::string power_label(const std::vector<std::pair<const char*, long long>>& powers) {
    std::string out;
    for (const auto& [sym, e] : powers) {
        if (e == 0) continue;
        if (!out.empty()) out += "*";
        out += sym;
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out.empty() ? "e" : out;
}

/// Total homomorphic extension of gens[i] -> images[i] over the whole group,
/// or empty when the images are inconsistent with the table. The returned map
/// need not be injective; callers check bijectivity where required.
std::vector<int> extend_by_generators(const Group& g, const std::vector<int>& gens,
                                      const std::vector<int>& images, std::string* why) {
    int n = g.order();
    std::vector<int> map(static_cast<std::size_t>(n), -1);
    std::vector<int> dom;
    map[0] = 0;
    dom.push_back(0);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        int pre = gens[i], img = images[i];
        if (map[static_cast<std::size_t>(pre)] != -1) {
            if (map[static_cast<std::size_t>(pre)] != img) {
                if (why) *why = "generator " + std::to_string(pre) + " already forced to a different image";
                return {};
            }
            continue;
        }
        map[static_cast<std::size_t>(pre)] = img;
        dom.push_back(pre);
    }
    for (std::size_t wi = 0; wi < dom.size(); ++wi) {
        int w = dom[wi];
        for (std::size_t xi = 0; xi < dom.size(); ++xi) {
            int pairs[2][2] = {{w, dom[xi]}, {dom[xi], w}};
            for (auto& pr : pairs) {
                int p = g.mul(pr[0], pr[1]);
                int q = g.mul(map[static_cast<std::size_t>(pr[0])], map[static_cast<std::size_t>(pr[1])]);
                int& slot = map[static_cast<std::size_t>(p)];
                if (slot == -1) {
                    slot = q;
                    dom.push_back(p);
                } else if (slot != q) {
                    if (why)
                        *why = "relation violated at product of " + std::to_string(pr[0]) +
                               " and " + std::to_string(pr[1]);
                    return {};
                }
            }
        }
    }
    if (dom.size() != static_cast<std::size_t>(n)) {
        if (why) *why = "generators do not generate the group";
        return {};
    }
    return map;
}

std::vector<int> group_generators(const Group& g) {
    if (!g.canonical_generators().empty() || g.order() == 1) return g.canonical_generators();
    return greedy_generating_sequence(g);
}

} // namespace

Group cyclic_group(int n) {
    if (n < 1) throw InvalidParameters("cyclic(n) requires n >= 1");
    check_order(n, TableBudget{});
    std::vector<std::uint16_t> table(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            table[static_cast<std::size_t>(i) * n + j] = static_cast<std::uint16_t>((i + j) % n);
    Group g = Group::trusted(n, std::move(table));
    std::vector<std::string> labels(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = power_label({{"g", i}});
    g.set_labels(std::move(labels));
    if (n > 1) g.set_generators({1});
    g.set_spec(GroupSpec::cyclic(n));
    return g;
}

Group dihedral_group(int two_n) {
    if (two_n < 4 || two_n % 2 != 0)
        throw InvalidParameters("dihedral(order) requires an even order >= 4");
    check_order(two_n, TableBudget{});
    int n = two_n / 2;
    auto id = [n](int rot, int refl) { return refl * n + rot; };
    std::vector<std::uint16_t> table(static_cast<std::size_t>(two_n) * two_n);
    for (int f1 = 0; f1 < 2; ++f1)
        for (int a = 0; a < n; ++a)
            for (int f2 = 0; f2 < 2; ++f2)
                for (int b = 0; b < n; ++b) {
                    // r^a s^f1 * r^b s^f2 = r^(a +/- b) s^(f1 xor f2)
                    int rot = f1 == 0 ? (a + b) % n : (a - b % n + n) % n;
                    table[static_cast<std::size_t>(id(a, f1)) * two_n + id(b, f2)] =
                        static_cast<std::uint16_t>(id(rot, f1 ^ f2));
                }
    Group g = Group::trusted(two_n, std::move(table));
    std::vector<std::string> labels(static_cast<std::size_t>(two_n));
    for (int f = 0; f < 2; ++f)
        for (int a = 0; a < n; ++a)
            labels[static_cast<std::size_t>(id(a, f))] = power_label({{"r", a}, {"s", f}});
    g.set_labels(std::move(labels));
    g.set_generators(n >= 2 ? std::vector<int>{1, n} : std::vector<int>{n});
    Bitset rotations(static_cast<std::size_t>(two_n));
    for (int a = 0; a < n; ++a) rotations.set(static_cast<std::size_t>(a));
    g.add_named_subgroup("rotations", std::move(rotations));
    g.set_spec(GroupSpec::dihedral(two_n));
    return g;
}

Group quaternion8_group() {
    // ids: 1, i, j, k, -1, -i, -j, -k
    // basis products with sign: i*i = -1, i*j = k, j*k = i, k*i = j, ...
    static const int basis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    std::vector<std::uint16_t> table(64);
    for (int s1 = 0; s1 < 2; ++s1)
        for (int u = 0; u < 4; ++u)
            for (int s2 = 0; s2 < 2; ++s2)
                for (int v = 0; v < 4; ++v) {
                    int s = s1 ^ s2 ^ sign[u][v];
                    table[static_cast<std::size_t>(s1 * 4 + u) * 8 + (s2 * 4 + v)] =
                        static_cast<std::uint16_t>(s * 4 + basis[u][v]);
                }
    Group g = Group::trusted(8, std::move(table));
    g.set_labels({"1", "i", "j", "k", "-1", "-i", "-j", "-k"});
    g.set_generators({1, 2});
    Bitset center(8);
    center.set(0);
    center.set(4);
    g.add_named_subgroup("center", std::move(center));
    g.set_spec(GroupSpec::quaternion8());
    return g;
}

namespace {

std::string cycle_label(const std::vector<int>& perm) {
    int k = static_cast<int>(perm.size());
    std::vector<char> seen(static_cast<std::size_t>(k), 0);
    std::string out;
    for (int s = 0; s < k; ++s) {
        if (seen[static_cast<std::size_t>(s)] || perm[static_cast<std::size_t>(s)] == s) continue;
        out += "(";
        int x = s;
        bool first = true;
        while (!seen[static_cast<std::size_t>(x)]) {
            seen[static_cast<std::size_t>(x)] = 1;
            if (!first) out += " ";
            out += std::to_string(x + 1);
            first = false;
            x = perm[static_cast<std::size_t>(x)];
        }
        out += ")";
    }
    return out.empty() ? "e" : out;
}

} // namespace

Group symmetric_group(int k) {
    if (k < 1) throw InvalidParameters("symmetric(k) requires k >= 1");
    if (k > 5) throw SizeGuard("symmetric(k) supports k <= 5");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(static_cast<std::size_t>(k));
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    int n = static_cast<int>(perms.size());

    auto rank = [&](const std::vector<int>& q) {
        return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };

    std::vector<std::uint16_t> table(static_cast<std::size_t>(n) * n);
    std::vector<int> comp(static_cast<std::size_t>(k));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            for (int x = 0; x < k; ++x)
                comp[static_cast<std::size_t>(x)] =
                    perms[static_cast<std::size_t>(a)][static_cast<std::size_t>(
                        perms[static_cast<std::size_t>(b)][static_cast<std::size_t>(x)])];
            table[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint16_t>(rank(comp));
        }
    Group g = Group::trusted(n, std::move(table));
    std::vector<std::string> labels(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) labels[static_cast<std::size_t>(a)] = cycle_label(perms[static_cast<std::size_t>(a)]);
    g.set_labels(std::move(labels));
    if (k >= 2) {
        std::vector<int> transposition(static_cast<std::size_t>(k));
        std::iota(transposition.begin(), transposition.end(), 0);
        std::swap(transposition[0], transposition[1]);
        std::vector<int> cyc(static_cast<std::size_t>(k));
        for (int x = 0; x < k; ++x) cyc[static_cast<std::size_t>(x)] = (x + 1) % k;
        g.set_generators(k == 2 ? std::vector<int>{rank(transposition)}
                                : std::vector<int>{rank(transposition), rank(cyc)});
    }
    g.set_spec(GroupSpec::symmetric(k));
    return g;
}

Group direct_product(const Group& left, const Group& right, TableBudget budget) {
    long long n = static_cast<long long>(left.order()) * right.order();
    check_order(n, budget);
    int nl = left.order(), nr = right.order();
    std::vector<std::uint16_t> table(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int a1 = 0; a1 < nl; ++a1)
        for (int b1 = 0; b1 < nr; ++b1)
            for (int a2 = 0; a2 < nl; ++a2)
                for (int b2 = 0; b2 < nr; ++b2)
                    table[static_cast<std::size_t>(a1 * nr + b1) * n + (a2 * nr + b2)] =
                        static_cast<std::uint16_t>(left.mul(a1, a2) * nr + right.mul(b1, b2));
    Group g = Group::trusted(static_cast<int>(n), std::move(table));

    std::vector<std::string> labels(static_cast<std::size_t>(n));
    for (int a = 0; a < nl; ++a)
        for (int b = 0; b < nr; ++b) {
            std::string la = left.has_labels() ? left.label(a) : std::to_string(a);
            std::string lb = right.has_labels() ? right.label(b) : std::to_string(b);
            labels[static_cast<std::size_t>(a * nr + b)] =
                (a == 0 && b == 0) ? "e" : "(" + la + "," + lb + ")";
        }
    g.set_labels(std::move(labels));

    std::vector<int> gens;
    for (int x : group_generators(left)) gens.push_back(x * nr);
    for (int y : group_generators(right)) gens.push_back(y);
    g.set_generators(std::move(gens));

    Bitset lf(static_cast<std::size_t>(n)), rf(static_cast<std::size_t>(n));
    for (int a = 0; a < nl; ++a) lf.set(static_cast<std::size_t>(a * nr));
    for (int b = 0; b < nr; ++b) rf.set(static_cast<std::size_t>(b));
    g.add_named_subgroup("left_factor", std::move(lf));
    g.add_named_subgroup("right_factor", std::move(rf));

    if (left.spec() && right.spec())
        g.set_spec(GroupSpec::direct_product(*left.spec(), *right.spec()));
    return g;
}

Group zm_group(long long m, long long n, long long r, TableBudget budget) {
    if (m < 1 || n < 1) throw InvalidZMParameters("m and n must be positive");
    if (m == 1) r = 0; // a is trivial; r is irrelevant
    if (m > 1 && (r < 1 || r >= m))
        throw InvalidZMParameters("r out of range [1, m)");
    if (m > 1 && gcd_ll(m, r - 1) != 1) throw InvalidZMParameters("gcd(m, r-1) != 1");
    if (gcd_ll(m, n) != 1) throw InvalidZMParameters("gcd(m, n) != 1");
    if (m > 1 && pow_mod(r, n, m) != 1) throw InvalidZMParameters("r^n != 1 (mod m)");
    long long order = m * n;
    check_order(order, budget);

    // (a^i b^j)(a^k b^l) = a^(i + k t^j) b^(j+l)  with  t = r^-1 = r^(n-1) (mod m)
    long long t = m == 1 ? 0 : pow_mod(r, n - 1, m);
    std::vector<long long> tpow(static_cast<std::size_t>(n), 1 % std::max<long long>(m, 1));
    for (long long j = 1; j < n; ++j)
        tpow[static_cast<std::size_t>(j)] = tpow[static_cast<std::size_t>(j - 1)] * t % std::max<long long>(m, 1);

    int N = static_cast<int>(order);
    std::vector<std::uint16_t> table(static_cast<std::size_t>(N) * N);
    for (long long i = 0; i < m; ++i)
        for (long long j = 0; j < n; ++j)
            for (long long k = 0; k < m; ++k)
                for (long long l = 0; l < n; ++l) {
                    long long ii = m == 1 ? 0 : (i + k * tpow[static_cast<std::size_t>(j)]) % m;
                    long long jj = (j + l) % n;
                    table[static_cast<std::size_t>(i * n + j) * N + (k * n + l)] =
                        static_cast<std::uint16_t>(ii * n + jj);
                }
    Group g = Group::trusted(N, std::move(table));

    std::vector<std::string> labels(static_cast<std::size_t>(N));
    for (long long i = 0; i < m; ++i)
        for (long long j = 0; j < n; ++j)
            labels[static_cast<std::size_t>(i * n + j)] = power_label({{"a", i}, {"b", j}});
    g.set_labels(std::move(labels));

    std::vector<int> gens;
    if (m > 1) gens.push_back(static_cast<int>(n));
    if (n > 1) gens.push_back(1);
    g.set_generators(std::move(gens));
    g.set_spec(GroupSpec::zm(m, n, m == 1 ? 1 : r));
    return g;
}

Group semidirect_product(const Group& a, const Group& b, const ActionSpec& action,
                         TableBudget budget) {
    if (!a.is_abelian()) throw NotAbelian("semidirect_product: A is not abelian");
    if (!b.is_abelian()) throw NotAbelian("semidirect_product: B is not abelian");
    if (gcd_ll(a.order(), b.order()) != 1)
        throw NotCoprimeOrders("semidirect_product: |A| = " + std::to_string(a.order()) +
                               " and |B| = " + std::to_string(b.order()) + " are not coprime");

    std::vector<int> agens = group_generators(a);
    std::vector<int> bgens = group_generators(b);
    if (action.images.size() != bgens.size())
        throw InvalidAction("expected one image row per generator of B (" +
                            std::to_string(bgens.size()) + "), got " +
                            std::to_string(action.images.size()));

    int na = a.order(), nb = b.order();

    // each generator of B must act by an automorphism of A
    std::vector<std::vector<int>> gen_auts;
    for (std::size_t i = 0; i < bgens.size(); ++i) {
        const auto& images = action.images[i];
        if (images.size() != agens.size())
            throw InvalidAction("image row " + std::to_string(i) + " has " +
                                std::to_string(images.size()) + " entries, expected " +
                                std::to_string(agens.size()));
        for (int img : images)
            if (img < 0 || img >= na)
                throw InvalidAction("image id " + std::to_string(img) + " out of range");
        std::string why;
        std::vector<int> phi = extend_by_generators(a, agens, images, &why);
        if (phi.empty() && na > 1)
            throw InvalidAction("row " + std::to_string(i) + " is not an endomorphism of A: " + why);
        if (na == 1) phi = {0};
        std::vector<char> hit(static_cast<std::size_t>(na), 0);
        for (int x = 0; x < na; ++x) {
            if (hit[static_cast<std::size_t>(phi[static_cast<std::size_t>(x)])])
                throw InvalidAction("row " + std::to_string(i) +
                                    " is not an automorphism of A (not bijective)");
            hit[static_cast<std::size_t>(phi[static_cast<std::size_t>(x)])] = 1;
        }
        gen_auts.push_back(std::move(phi));
    }

    // extend to a homomorphism theta : B -> Aut(A) and check B's relations
    std::vector<std::vector<int>> theta(static_cast<std::size_t>(nb));
    std::vector<int> identity(static_cast<std::size_t>(na));
    std::iota(identity.begin(), identity.end(), 0);
    theta[0] = identity;
    std::vector<int> queue{0};
    std::vector<char> visited(static_cast<std::size_t>(nb), 0);
    visited[0] = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int y = queue[qi];
        for (std::size_t i = 0; i < bgens.size(); ++i) {
            int z = b.mul(y, bgens[i]);
            std::vector<int> composed(static_cast<std::size_t>(na));
            for (int x = 0; x < na; ++x)
                composed[static_cast<std::size_t>(x)] =
                    theta[static_cast<std::size_t>(y)][static_cast<std::size_t>(
                        gen_auts[i][static_cast<std::size_t>(x)])];
            if (!visited[static_cast<std::size_t>(z)]) {
                visited[static_cast<std::size_t>(z)] = 1;
                theta[static_cast<std::size_t>(z)] = std::move(composed);
                queue.push_back(z);
            } else if (theta[static_cast<std::size_t>(z)] != composed) {
                throw InvalidAction("assignment does not respect the relations of B (witness: element " +
                                    std::to_string(y) + " * generator " + std::to_string(i) + ")");
            }
        }
    }

    long long order = static_cast<long long>(na) * nb;
    check_order(order, budget);
    int N = static_cast<int>(order);
    std::vector<std::uint16_t> table(static_cast<std::size_t>(N) * N);
    for (int a1 = 0; a1 < na; ++a1)
        for (int b1 = 0; b1 < nb; ++b1)
            for (int a2 = 0; a2 < na; ++a2)
                for (int b2 = 0; b2 < nb; ++b2) {
                    int ap = a.mul(a1, theta[static_cast<std::size_t>(b1)][static_cast<std::size_t>(a2)]);
                    int bp = b.mul(b1, b2);
                    table[static_cast<std::size_t>(a1 * nb + b1) * N + (a2 * nb + b2)] =
                        static_cast<std::uint16_t>(ap * nb + bp);
                }
    Group g = Group::trusted(N, std::move(table));

    std::vector<std::string> labels(static_cast<std::size_t>(N));
    for (int a1 = 0; a1 < na; ++a1)
        for (int b1 = 0; b1 < nb; ++b1) {
            std::string la = a.has_labels() ? a.label(a1) : std::to_string(a1);
            std::string lb = b.has_labels() ? b.label(b1) : std::to_string(b1);
            labels[static_cast<std::size_t>(a1 * nb + b1)] =
                (a1 == 0 && b1 == 0) ? "e" : "(" + la + "," + lb + ")";
        }
    g.set_labels(std::move(labels));

    std::vector<int> gens;
    for (int x : agens) gens.push_back(x * nb);
    for (int y : bgens) gens.push_back(y);
    g.set_generators(std::move(gens));

    Bitset normal_part(static_cast<std::size_t>(N)), complement_part(static_cast<std::size_t>(N));
    for (int x = 0; x < na; ++x) normal_part.set(static_cast<std::size_t>(x * nb));
    for (int y = 0; y < nb; ++y) complement_part.set(static_cast<std::size_t>(y));
    g.add_named_subgroup("normal_part", std::move(normal_part));
    g.add_named_subgroup("complement_part", std::move(complement_part));

    if (a.spec() && b.spec()) g.set_spec(GroupSpec::semidirect(*a.spec(), *b.spec(), action));
    return g;
}

Group heisenberg_gf(int p, TableBudget budget) {
    if (!is_prime(p) || p < 3 || p % 2 == 0)
        throw InvalidParameters("heisenberg_gf(p) requires an odd prime");
    long long order = 1;
    for (int i = 0; i < 5; ++i) order *= p;
    check_order(order, budget);

    gf::Fp2Field f2(p);
    int p2 = p * p;
    int N = static_cast<int>(order);

    // id = a_idx * p^3 + b_idx * p + c  (coefficient-lexicographic)
    auto encode = [&](int a_idx, int b_idx, int c) { return (a_idx * p2 + b_idx) * p + c; };

    // index-level GF(p^2) addition and multiplication-by-embedded-scalar
    std::vector<std::uint16_t> add2(static_cast<std::size_t>(p2) * p2);
    for (int x = 0; x < p2; ++x)
        for (int y = 0; y < p2; ++y)
            add2[static_cast<std::size_t>(x) * p2 + y] = static_cast<std::uint16_t>(
                f2.to_index(f2.add(f2.from_index(x), f2.from_index(y))));
    std::vector<std::uint16_t> mul_by_c(static_cast<std::size_t>(p) * p2);
    for (int c = 0; c < p; ++c)
        for (int x = 0; x < p2; ++x)
            mul_by_c[static_cast<std::size_t>(c) * p2 + x] = static_cast<std::uint16_t>(
                f2.to_index(f2.mul(f2.from_index(x), f2.embed(c))));

    std::vector<std::uint16_t> table(static_cast<std::size_t>(N) * static_cast<std::size_t>(N));
    parallel_chunks(static_cast<std::size_t>(N), 0, [&](std::size_t begin, std::size_t end, int) {
        for (std::size_t row = begin; row < end; ++row) {
            int a1 = static_cast<int>(row) / (p2 * p);
            int b1 = static_cast<int>(row) / p % p2;
            int c1 = static_cast<int>(row) % p;
            std::uint16_t* out = table.data() + row * static_cast<std::size_t>(N);
            for (int a2 = 0; a2 < p2; ++a2) {
                int asum = add2[static_cast<std::size_t>(a1) * p2 + a2];
                for (int b2 = 0; b2 < p2; ++b2) {
                    int bsum = add2[static_cast<std::size_t>(b1) * p2 + b2];
                    for (int c2 = 0; c2 < p; ++c2) {
                        // (a,b,c)(a',b',c') = (a+a', b+b'+a c', c+c')
                        int bfull = add2[static_cast<std::size_t>(bsum) * p2 +
                                         mul_by_c[static_cast<std::size_t>(c2) * p2 + a1]];
                        out[encode(a2, b2, c2)] =
                            static_cast<std::uint16_t>(encode(asum, bfull, (c1 + c2) % p));
                    }
                }
            }
        }
    });
    Group g = Group::trusted(N, std::move(table));

    std::vector<std::string> labels(static_cast<std::size_t>(N));
    for (int a = 0; a < p2; ++a)
        for (int bq = 0; bq < p2; ++bq)
            for (int c = 0; c < p; ++c) {
                int idx = encode(a, bq, c);
                if (idx == 0) {
                    labels[0] = "e";
                    continue;
                }
                gf::Fp2 av = f2.from_index(a), bv = f2.from_index(bq);
                labels[static_cast<std::size_t>(idx)] =
                    "(" + std::to_string(av.c0) + " " + std::to_string(av.c1) + "|" +
                    std::to_string(bv.c0) + " " + std::to_string(bv.c1) + "|" +
                    std::to_string(c) + ")";
            }
    g.set_labels(std::move(labels));

    // generators: a-plane basis, b-plane basis, and the c coordinate
    g.set_generators({encode(f2.to_index({1, 0}), 0, 0), encode(f2.to_index({0, 1}), 0, 0),
                      encode(0, f2.to_index({1, 0}), 0), encode(0, f2.to_index({0, 1}), 0),
                      encode(0, 0, 1)});

    Bitset center_bits(static_cast<std::size_t>(N));
    for (int bq = 0; bq < p2; ++bq) center_bits.set(static_cast<std::size_t>(encode(0, bq, 0)));
    g.add_named_subgroup("center", std::move(center_bits));
    Bitset plane(static_cast<std::size_t>(N));
    for (int a = 0; a < p2; ++a)
        for (int bq = 0; bq < p2; ++bq) plane.set(static_cast<std::size_t>(encode(a, bq, 0)));
    g.add_named_subgroup("abelian_plane", std::move(plane));

    g.set_spec(GroupSpec::heisenberg_gf(p));
    return g;
}

Group scalar_automorphism_extension(std::shared_ptr<const Group> p_group, int lambda,
                                    TableBudget budget) {
    if (!p_group) throw InvalidParameters("null base group");
    const Group& P = *p_group;
    if (!P.spec() || P.spec()->family != Family::heisenberg_gf)
        throw InvalidParameters("scalar_automorphism_extension expects a heisenberg_gf base");
    int p = static_cast<int>(P.spec()->param("p"));
    int p2 = p * p;
    int lam = ((lambda % p) + p) % p;
    if (lam == 0) throw InvalidLambda("lambda must be a unit mod " + std::to_string(p));
    if (lam == 1) throw InvalidLambda("lambda == 1 (mod p) acts trivially");
    int e = static_cast<int>(multiplicative_order(lam, p));

    int pn = P.order();
    long long order = static_cast<long long>(pn) * e;
    if (order > kMaxGroupOrder)
        throw SizeGuard("extension order " + std::to_string(order) + " exceeds id space");

    gf::Fp2Field f2(p);
    auto encode = [&](int a_idx, int b_idx, int c) { return (a_idx * p2 + b_idx) * p + c; };

    // x: (a, b, c) -> (lambda a, lambda^2 b, lambda c) as a permutation of P
    int lam2 = lam * lam % p;
    std::vector<std::uint16_t> scale_lam(static_cast<std::size_t>(p2)),
        scale_lam2(static_cast<std::size_t>(p2));
    for (int x = 0; x < p2; ++x) {
        scale_lam[static_cast<std::size_t>(x)] =
            static_cast<std::uint16_t>(f2.to_index(f2.scale(lam, f2.from_index(x))));
        scale_lam2[static_cast<std::size_t>(x)] =
            static_cast<std::uint16_t>(f2.to_index(f2.scale(lam2, f2.from_index(x))));
    }
    std::vector<std::uint16_t> phi(static_cast<std::size_t>(pn));
    for (int q = 0; q < pn; ++q) {
        int a = q / (p2 * p), b = q / p % p2, c = q % p;
        phi[static_cast<std::size_t>(q)] = static_cast<std::uint16_t>(
            encode(scale_lam[static_cast<std::size_t>(a)], scale_lam2[static_cast<std::size_t>(b)],
                   lam * c % p));
    }

    // validate: phi is an automorphism of P
    {
        bool ok = true;
        parallel_chunks(static_cast<std::size_t>(pn), 0, [&](std::size_t begin, std::size_t end, int) {
            for (std::size_t q1 = begin; q1 < end && ok; ++q1)
                for (int q2 = 0; q2 < pn; ++q2)
                    if (phi[static_cast<std::size_t>(P.mul(static_cast<int>(q1), q2))] !=
                        P.mul(phi[q1], phi[static_cast<std::size_t>(q2)])) {
                        ok = false;
                        break;
                    }
        });
        if (!ok)
            throw InvalidParameters("scalar action is not an automorphism of the base group");
    }

    // powers phi^0 .. phi^(e-1); check the order is exactly e
    std::vector<std::uint16_t> pows(static_cast<std::size_t>(e) * pn);
    for (int q = 0; q < pn; ++q) pows[static_cast<std::size_t>(q)] = static_cast<std::uint16_t>(q);
    for (int k = 1; k < e; ++k) {
        std::uint16_t* prev = pows.data() + static_cast<std::size_t>(k - 1) * pn;
        std::uint16_t* cur = pows.data() + static_cast<std::size_t>(k) * pn;
        bool is_identity = true;
        for (int q = 0; q < pn; ++q) {
            cur[q] = phi[prev[q]];
            // note: checks phi^k != id for 0 < k < e via the previous power
        }
        for (int q = 0; q < pn; ++q)
            if (cur[q] != q) {
                is_identity = false;
                break;
            }
        if (is_identity)
            throw InvalidParameters("scalar action has order below its multiplicative order");
    }
    {
        bool closes = true;
        const std::uint16_t* last = pows.data() + static_cast<std::size_t>(e - 1) * pn;
        for (int q = 0; q < pn; ++q)
            if (phi[last[q]] != static_cast<std::uint16_t>(q)) {
                closes = false;
                break;
            }
        if (!closes) throw InvalidParameters("scalar action order mismatch");
    }

    // fixed-point-freeness: scan every nontrivial power, and cross-check the
    // arithmetic criterion lambda^k != 1 and lambda^(2k) != 1 for 0 < k < e
    bool fpf_scan = true;
    for (int k = 1; k < e && fpf_scan; ++k) {
        const std::uint16_t* pk = pows.data() + static_cast<std::size_t>(k) * pn;
        for (int q = 1; q < pn; ++q)
            if (pk[q] == q) {
                fpf_scan = false;
                break;
            }
    }
    bool fpf_arith = true;
    for (int k = 1; k < e && fpf_arith; ++k)
        if (pow_mod(lam, k, p) == 1 || pow_mod(lam, 2LL * k, p) == 1) fpf_arith = false;
    if (fpf_scan != fpf_arith)
        throw InvalidParameters("fixed-point scan disagrees with the arithmetic criterion");

    Group g = [&] {
        std::size_t dense_bytes =
            static_cast<std::size_t>(order) * static_cast<std::size_t>(order) * 2;
        if (dense_bytes <= budget.max_bytes) {
            int N = static_cast<int>(order);
            std::vector<std::uint16_t> table(static_cast<std::size_t>(N) * N);
            parallel_chunks(static_cast<std::size_t>(N), 0,
                            [&](std::size_t begin, std::size_t end, int) {
                                for (std::size_t row = begin; row < end; ++row) {
                                    int q1 = static_cast<int>(row) / e, k1 = static_cast<int>(row) % e;
                                    const std::uint16_t* pk =
                                        pows.data() + static_cast<std::size_t>(k1) * pn;
                                    std::uint16_t* out =
                                        table.data() + row * static_cast<std::size_t>(N);
                                    for (int q2 = 0; q2 < pn; ++q2) {
                                        int qq = P.mul(q1, pk[q2]);
                                        for (int k2 = 0; k2 < e; ++k2) {
                                            int kk = k1 + k2;
                                            if (kk >= e) kk -= e;
                                            out[q2 * e + k2] = static_cast<std::uint16_t>(qq * e + kk);
                                        }
                                    }
                                }
                            });
            return Group::trusted(static_cast<int>(order), std::move(table));
        }
        return Group::extension(p_group, e, pows);
    }();

    std::vector<std::string> labels(static_cast<std::size_t>(order));
    for (int q = 0; q < pn; ++q)
        for (int k = 0; k < e; ++k) {
            std::string base = P.has_labels() ? P.label(q) : std::to_string(q);
            std::string xs = power_label({{"x", k}});
            int idx = q * e + k;
            if (q == 0 && k == 0)
                labels[static_cast<std::size_t>(idx)] = "e";
            else if (q == 0)
                labels[static_cast<std::size_t>(idx)] = xs;
            else if (k == 0)
                labels[static_cast<std::size_t>(idx)] = base;
            else
                labels[static_cast<std::size_t>(idx)] = base + "*" + xs;
        }
    g.set_labels(std::move(labels));

    std::vector<int> gens;
    for (int x : P.canonical_generators()) gens.push_back(x * e);
    gens.push_back(1); // x = (identity, 1)
    g.set_generators(std::move(gens));

    Bitset kernel(static_cast<std::size_t>(order)), complement(static_cast<std::size_t>(order));
    for (int q = 0; q < pn; ++q) kernel.set(static_cast<std::size_t>(q) * e);
    for (int k = 0; k < e; ++k) complement.set(static_cast<std::size_t>(k));
    g.add_named_subgroup("kernel", std::move(kernel));
    g.add_named_subgroup("complement", std::move(complement));

    g.set_attribute("fixed_point_free", fpf_scan ? 1 : 0);
    g.set_attribute("extension_exponent", e);
    g.set_spec(GroupSpec::scalar_ext(p, lam));
    return g;
}

bool scalar_ext_fixed_point_free(const Group& g) {
    auto attr = g.attribute("fixed_point_free");
    if (!attr)
        throw InvalidParameters("group does not carry a recorded scalar action");
    return *attr != 0;
}

Group build_group(const GroupSpec& spec, TableBudget budget) {
    switch (spec.family) {
        case Family::cyclic:
            return cyclic_group(static_cast<int>(spec.param("n")));
        case Family::dihedral:
            return dihedral_group(static_cast<int>(spec.param("order")));
        case Family::quaternion8:
            return quaternion8_group();
        case Family::symmetric:
            return symmetric_group(static_cast<int>(spec.param("k")));
        case Family::direct_product: {
            Group left = build_group(spec.children.at(0), budget);
            Group right = build_group(spec.children.at(1), budget);
            return direct_product(left, right, budget);
        }
        case Family::zm:
            return zm_group(spec.param("m"), spec.param("n"), spec.param("r"), budget);
        case Family::semidirect: {
            Group a = build_group(spec.children.at(0), budget);
            Group b = build_group(spec.children.at(1), budget);
            return semidirect_product(a, b, spec.action, budget);
        }
        case Family::heisenberg_gf:
            return heisenberg_gf(static_cast<int>(spec.param("p")), budget);
        case Family::scalar_ext: {
            auto base = std::make_shared<const Group>(
                heisenberg_gf(static_cast<int>(spec.param("p")), budget));
            return scalar_automorphism_extension(base, static_cast<int>(spec.param("lambda")),
                                                 budget);
        }
    }
    throw InvalidParameters("unknown family");
}

} // namespace cdlat
