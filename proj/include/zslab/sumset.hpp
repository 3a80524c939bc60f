#pragma once

#include "zslab/group.hpp"
#include "zslab/sequence.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

namespace zslab {

// Fixed-capacity bitset indexed by linear element index. 256 bits covers
// every group the search cap allows; copies are trivially cheap, which the
// branch-and-bound relies on for push/pop snapshots.
struct Bitset256 {
    std::array<std::uint64_t, 4> w{};

    static Bitset256 singleton(std::int64_t i) {
        Bitset256 b;
        b.set(i);
        return b;
    }

    void set(std::int64_t i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
    bool test(std::int64_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int n = 0;
        for (auto x : w)
            n += std::popcount(x);
        return n;
    }

    bool any() const { return (w[0] | w[1] | w[2] | w[3]) != 0; }

    Bitset256& operator|=(const Bitset256& o) {
        for (int i = 0; i < 4; ++i)
            w[i] |= o.w[i];
        return *this;
    }

    friend Bitset256 operator&(const Bitset256& a, const Bitset256& b) {
        Bitset256 r;
        for (int i = 0; i < 4; ++i)
            r.w[i] = a.w[i] & b.w[i];
        return r;
    }

    friend bool operator==(const Bitset256& a, const Bitset256& b) { return a.w == b.w; }

    template <typename F> void for_each(F&& f) const {
        for (int k = 0; k < 4; ++k) {
            std::uint64_t x = w[k];
            while (x) {
                f((k << 6) + std::countr_zero(x));
                x &= x - 1;
            }
        }
    }
};

// Per-group translation tables: perm[g][i] = index(i + g). Built once per
// search; turns the DP insert into table lookups over set bits.
class AddTable {
public:
    explicit AddTable(const GroupSpec& G, std::int64_t cap = kDefaultGroupCap)
        : size_(G.size()) {
        if (size_ > cap)
            throw CapExceeded("sumset: |G| = " + std::to_string(size_) +
                              " exceeds cap " + std::to_string(cap));
        if (size_ > kBitsetCapacity)
            throw CapExceeded("sumset: |G| exceeds bitset capacity");
        perm_.resize(size_);
        for (std::int64_t g = 0; g < size_; ++g) {
            perm_[g].resize(size_);
            for (std::int64_t i = 0; i < size_; ++i)
                perm_[g][i] = static_cast<std::int32_t>(G.index_add(i, g));
        }
    }

    std::int64_t size() const { return size_; }

    // reachable' = reachable | (reachable + g) | {g}
    void insert(Bitset256& reach, std::int64_t g) const {
        Bitset256 shifted;
        const auto& p = perm_[g];
        reach.for_each([&](int i) { shifted.set(p[i]); });
        reach |= shifted;
        reach.set(p[0]); // p[0] = index(0 + g) = g
    }

    Bitset256 translate(const Bitset256& b, std::int64_t g) const {
        Bitset256 out;
        const auto& p = perm_[g];
        b.for_each([&](int i) { out.set(p[i]); });
        return out;
    }

private:
    std::int64_t size_;
    std::vector<std::vector<std::int32_t>> perm_;
};

// Incremental subset-sum state over a group: bit i set means element i is
// the sum of some nonempty subsequence inserted so far. Inserting is
// monotone. Sigma(S) uses the nonempty-subsequence convention throughout.
class SumsetState {
public:
    explicit SumsetState(GroupSpec group, std::int64_t cap = kDefaultGroupCap)
        : group_(std::move(group)) {
        if (group_.size() > cap)
            throw CapExceeded("SumsetState: |G| exceeds cap");
        if (group_.size() > kBitsetCapacity)
            throw CapExceeded("SumsetState: |G| exceeds bitset capacity");
    }

    const GroupSpec& group() const { return group_; }
    const Bitset256& reachable() const { return reach_; }

    void insert(std::int64_t idx) {
        Bitset256 shifted;
        reach_.for_each([&](int i) { shifted.set(group_.index_add(i, idx)); });
        reach_ |= shifted;
        reach_.set(idx);
    }
    void insert(const GroupElement& g) { insert(group_.index_of(g)); }

    void insert_sequence(const Sequence& s) {
        for (const auto& [idx, m] : s.terms())
            for (std::int64_t i = 0; i < m; ++i)
                insert(idx);
    }

    bool contains(std::int64_t idx) const { return reach_.test(idx); }
    bool zero_reachable() const { return reach_.test(0); }
    int count() const { return reach_.count(); }

private:
    GroupSpec group_;
    Bitset256 reach_;
};

// Sigma(S) = { sigma(T) : T | S, T nonempty }.
inline Bitset256 sumset_bits(const Sequence& s, std::int64_t cap = kDefaultGroupCap) {
    SumsetState st(s.group(), cap);
    st.insert_sequence(s);
    return st.reachable();
}

inline std::vector<GroupElement> sumset(const Sequence& s,
                                        std::int64_t cap = kDefaultGroupCap) {
    auto bits = sumset_bits(s, cap);
    std::vector<GroupElement> out;
    bits.for_each([&](int i) { out.push_back(s.group().element_at(i)); });
    return out;
}

inline bool is_zero_sum_free(const Sequence& s, std::int64_t cap = kDefaultGroupCap) {
    return !sumset_bits(s, cap).test(0);
}

// Sigma(S) together with 0 covers all of G.
inline bool has_full_sumset(const Sequence& s, std::int64_t cap = kDefaultGroupCap) {
    auto bits = sumset_bits(s, cap);
    bits.set(0);
    return bits.count() == s.group().size();
}

inline bool is_zero_sum(const Sequence& s) { return s.is_zero_sum(); }

} // namespace zslab
