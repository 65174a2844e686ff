#ifndef CDLAT_GROUP_HPP
#define CDLAT_GROUP_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cdlat/bitset.hpp"
#include "cdlat/group_spec.hpp"

namespace cdlat {

/// Element ids are 0..n-1 with the identity fixed at 0. Ids are stored as
/// 16-bit values, which caps group order at 65535; that is the desk scale the
/// dense-table representation is designed for.
constexpr int kMaxGroupOrder = 65535;

/// Full associativity validation is O(n^3); beyond this order it is sampled.
struct ValidationConfig {
    int full_assoc_bound = 512;
    int assoc_samples = 20000;
};

/// A finite group. Two storage forms behind one interface:
///
///  * dense: the full n x n Cayley table (the default; O(1) multiplication);
///  * extension: a semidirect product  base x| Z_e  kept as the base group's
///    table plus the e permutations of the acting automorphism's powers.
///    Used only when the dense table would not fit the configured memory
///    budget (the order-3*7^5 construction needs ~5 GB dense).
///
/// Groups are immutable after construction and safe for concurrent reads.
class Group {
public:
    /// Validates and adopts a raw table. The identity is relocated to id 0 by
    /// relabeling when needed. Throws NotAGroup with a witness on failure.
    static Group from_cayley_table(const std::vector<std::vector<int>>& table,
                                   ValidationConfig cfg = {});

    /// Adopts a row-major table that is already known to be a group law with
    /// identity at 0 (constructor-built); validation of the Latin-square and
    /// associativity axioms is skipped.
    static Group trusted(int n, std::vector<std::uint16_t> table);

    /// Extension form; `aut_pows` holds e permutations of base ids (power k of
    /// the acting automorphism at offset k*|base|). Element (q, k) has id
    /// q*e + k.
    static Group extension(std::shared_ptr<const Group> base, int e,
                           std::vector<std::uint16_t> aut_pows);

    int order() const { return n_; }

    int mul(int a, int b) const {
        if (!table_.empty())
            return table_[static_cast<std::size_t>(a) * n_ + b];
        int k = ext_mod_[static_cast<std::size_t>(a)];
        int q2 = ext_div_[static_cast<std::size_t>(b)];
        int l = ext_mod_[static_cast<std::size_t>(b)];
        int q = ext_div_[static_cast<std::size_t>(a)];
        int img = ext_aut_pows_[static_cast<std::size_t>(k) * base_->order() + q2];
        int kl = k + l;
        if (kl >= ext_e_) kl -= ext_e_;
        return base_->mul(q, img) * ext_e_ + kl;
    }

    int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }

    int conj(int g, int h) const { return mul(mul(g, h), inv(g)); } // g h g^-1
    int commutator(int g, int h) const {                            // g^-1 h^-1 g h
        return mul(mul(inv(g), inv(h)), mul(g, h));
    }

    int order_of(int g) const;

    bool is_abelian() const;

    // -- labels and provenance ------------------------------------------------

    const std::string& label(int g) const { return labels_[static_cast<std::size_t>(g)]; }
    bool has_labels() const { return !labels_.empty(); }
    /// Id of the element carrying `name`, or -1.
    int element_by_label(const std::string& name) const;

    const std::optional<GroupSpec>& spec() const { return spec_; }

    /// Generators the constructor designated (e.g. a and b of a ZM group).
    const std::vector<int>& canonical_generators() const { return generators_; }

    /// Structurally meaningful subgroups recorded by constructors
    /// ("rotations", "kernel", "abelian_plane", ...). Returns nullptr when absent.
    const Bitset* named_subgroup(const std::string& name) const;
    std::vector<std::string> named_subgroup_names() const;

    /// Small integer facts recorded at construction time (e.g. the extension
    /// exponent, or whether a recorded action is fixed-point free).
    std::optional<long long> attribute(const std::string& name) const;

    // used by constructors only
    void set_labels(std::vector<std::string> labels);
    void set_spec(GroupSpec spec) { spec_ = std::move(spec); }
    void set_generators(std::vector<int> gens) { generators_ = std::move(gens); }
    void add_named_subgroup(const std::string& name, Bitset bits);
    void set_attribute(const std::string& name, long long value);

    /// Re-runs the full axiom validation on the stored law (identity,
    /// inverses, Latin square, associativity per cfg). Throws NotAGroup.
    void validate(ValidationConfig cfg = {}) const;

private:
    Group() = default;

    void build_inverse();
    static void validate_table(int n, const std::vector<std::uint16_t>& table,
                               const ValidationConfig& cfg);

    int n_ = 0;
    std::vector<std::uint16_t> table_;   // dense form; empty in extension form
    std::vector<std::uint16_t> inverse_;

    // extension form
    std::shared_ptr<const Group> base_;
    int ext_e_ = 0;
    std::vector<std::uint16_t> ext_aut_pows_;
    std::vector<std::uint16_t> ext_div_; // id -> id / e
    std::vector<std::uint8_t> ext_mod_;  // id -> id % e

    std::vector<std::string> labels_;
    std::vector<int> generators_;
    std::optional<GroupSpec> spec_;
    std::map<std::string, Bitset> named_subgroups_;
    std::map<std::string, long long> attributes_;
};

/// Restriction of the ambient table to a subgroup H, elements re-indexed
/// ascending (identity stays at 0). `embedding[new_id] = old_id`.
struct SubgroupAsGroup {
    Group group;
    std::vector<int> embedding;
    int ambient_order = 0;
};

/// Requires H to be a subgroup (throws NotAGroup otherwise). Labels carry over.
SubgroupAsGroup subgroup_as_group(const Group& g, const Bitset& h);

/// Maps a subgroup of the restricted group back to ambient element ids.
Bitset embed_subgroup(const SubgroupAsGroup& sub, const Bitset& inner);

/// Conjugate relabeling g -> perm[g] of the whole table; perm must fix 0 or
/// map the identity consistently (used by tests for order-independence checks).
Group relabeled(const Group& g, const std::vector<int>& perm);

} // namespace cdlat

#endif
