#ifndef CDLAT_BITSET_HPP
#define CDLAT_BITSET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace cdlat {

/// Fixed-width dynamic bit set over element ids 0..n-1. This is the universal
/// subgroup currency: a subgroup of a group of order n is exactly a Bitset of
/// width n that happens to be closed under the ambient multiplication.
///
/// Immutable use after construction is the norm; all set algebra is word-wise.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t nbits)
        : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    static Bitset singleton(std::size_t nbits, std::size_t i) {
        Bitset b(nbits);
        b.set(i);
        return b;
    }

    static Bitset full(std::size_t nbits) {
        Bitset b(nbits);
        for (auto& w : b.words_) w = ~std::uint64_t{0};
        b.clear_padding();
        return b;
    }

    std::size_t size_bits() const { return nbits_; }

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    /// Population count = subgroup order when the set is a subgroup.
    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool none() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

    bool operator==(const Bitset& o) const {
        return nbits_ == o.nbits_ && words_ == o.words_;
    }
    bool operator!=(const Bitset& o) const { return !(*this == o); }

    bool is_subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    /// Canonical tie-break below equal popcounts: the set containing the
    /// smallest differing element id sorts first. Total order on equal widths.
    bool lex_less(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t diff = words_[i] ^ o.words_[i];
            if (diff) {
                std::uint64_t low = diff & (~diff + 1);
                return (words_[i] & low) != 0;
            }
        }
        return false;
    }

    std::size_t hash() const {
        // FNV-1a over words; plenty for the dedup sets (full-compare fallback
        // on collision is always done by callers).
        std::uint64_t h = 1469598103934665603ULL;
        for (auto w : words_) {
            h ^= w;
            h *= 1099511628211ULL;
        }
        h ^= nbits_;
        return static_cast<std::size_t>(h);
    }

    int first_set() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }

    /// Next set bit at index > i, or -1.
    int next_set(int i) const {
        std::size_t j = static_cast<std::size_t>(i) + 1;
        if (j >= nbits_) return -1;
        std::size_t wi = j >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (j & 63));
        while (true) {
            if (w) return static_cast<int>(wi * 64 + std::countr_zero(w));
            if (++wi == words_.size()) return -1;
            w = words_[wi];
        }
    }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(count());
        for (int i = first_set(); i >= 0; i = next_set(i)) out.push_back(i);
        return out;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                f(static_cast<int>(wi * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

private:
    void clear_padding() {
        if (nbits_ & 63) words_.back() &= (~std::uint64_t{0}) >> (64 - (nbits_ & 63));
    }

    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Order ascending, then lexicographic on bits: the canonical ordering for
/// every subgroup list the library emits. Deterministic across runs and
/// thread counts.
inline bool canonical_less(const Bitset& a, const Bitset& b) {
    std::size_t ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return a.lex_less(b);
}

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

/// A subgroup is just a closed Bitset; the alias marks intent in signatures.
using SubgroupSet = Bitset;

} // namespace cdlat

#endif
