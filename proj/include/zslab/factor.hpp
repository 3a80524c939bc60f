#pragma once

#include "zslab/group.hpp"
#include "zslab/rational.hpp"
#include "zslab/sequence.hpp"
#include "zslab/sumset.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace zslab {

// Labeled-partition counting is super-exponential; this caps |S|.
inline constexpr std::int64_t kDefaultOracleLenCap = 14;

// Nonempty, zero-sum, and no nonempty proper subsequence sums to zero.
// Removing one fixed copy suffices as a test: any proper zero-sum
// subsequence either misses that copy or its (also zero-sum) complement does.
inline bool is_irreducible(const Sequence& s, std::int64_t cap = kDefaultGroupCap) {
    if (s.empty() || s.sigma_index() != 0)
        return false;
    Sequence t = s;
    t.add(s.terms().front().first, -1);
    return is_zero_sum_free(t, cap);
}

namespace detail {

enum class Walk { Continue, Prune, Stop };

// Walk every zero-sum-free subsequence Z of `bound` (support ascending,
// non-decreasing element words, so each multiset appears once). At each
// nonempty Z, visit(Z, sigma_idx, max_elem_idx, reach) is called; Prune
// skips extensions of Z, Stop aborts the walk.
template <typename Visit>
bool walk_zsf_subsequences(const Sequence& bound, std::int64_t max_len, Visit&& visit) {
    const GroupSpec& G = bound.group();
    const auto& sup = bound.terms();
    Sequence z(G);
    bool keep_going = true;

    auto rec = [&](auto&& self, std::size_t pos, const Bitset256& reach, std::int64_t sig,
                   std::int64_t len) -> void {
        if (len > 0) {
            Walk action = visit(z, sig, z.terms().back().first, reach);
            if (action == Walk::Stop) {
                keep_going = false;
                return;
            }
            if (action == Walk::Prune)
                return;
        }
        if (len >= max_len)
            return;
        for (std::size_t i = pos; i < sup.size() && keep_going; ++i) {
            auto [idx, avail] = sup[i];
            if (z.valuation(idx) >= avail)
                continue;
            Bitset256 next = reach;
            Bitset256 shifted;
            next.for_each([&](int b) { shifted.set(G.index_add(b, idx)); });
            next |= shifted;
            next.set(idx);
            if (next.test(0))
                continue; // extension not zero-sum free; no deeper word survives
            z.add(idx, 1);
            self(self, i, next, G.index_add(sig, idx), len + 1);
            z.add(idx, -1);
        }
    };
    rec(rec, 0, Bitset256{}, 0, 0);
    return keep_going;
}

// Every irreducible U | bound: U = Z * g with Z zero-sum free, g = -sigma(Z)
// placed as a maximal element, so each U is produced exactly once.
template <typename Emit>
bool walk_irreducible_subsequences(const Sequence& bound, std::int64_t max_len, Emit&& emit) {
    const GroupSpec& G = bound.group();
    return walk_zsf_subsequences(bound, max_len - 1,
                                 [&](const Sequence& z, std::int64_t sig, std::int64_t maxidx,
                                     const Bitset256&) {
        std::int64_t g = G.index_neg(sig);
        if (g >= maxidx && z.valuation(g) + 1 <= bound.valuation(g)) {
            Sequence u = z;
            u.add(g, 1);
            if (!emit(u))
                return Walk::Stop;
        }
        return Walk::Continue;
    });
}

} // namespace detail

// All irreducible sequences over G of length <= max_len, each exactly once,
// sorted by (length, canonical multiset order).
inline std::vector<Sequence> enumerate_irreducibles(const GroupSpec& G, std::int64_t max_len,
                                                    std::int64_t cap = kDefaultGroupCap) {
    if (G.size() > cap)
        throw CapExceeded("enumerate_irreducibles: |G| exceeds cap");
    std::vector<Sequence> out;
    if (G.is_trivial())
        return out;
    Sequence full(G);
    for (std::int64_t i = 1; i < G.size(); ++i)
        full.add(i, max_len);
    detail::walk_irreducible_subsequences(full, max_len, [&](const Sequence& u) {
        out.push_back(u);
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

struct FactorizationCount {
    BigInt count;
    std::optional<std::vector<Sequence>> witness; // one irreducible partition, if any
};

// Counts labeled irreducible factorizations |pi^{-1}(S)|: copies of equal
// elements are distinguishable. Each block is anchored on the lowest unused
// copy so every labeled partition is generated exactly once. The memo is
// reusable across calls on subsequences of a common group.
class FactorizationCounter {
public:
    explicit FactorizationCounter(std::int64_t group_cap = kDefaultGroupCap,
                                  std::int64_t len_cap = kDefaultOracleLenCap)
        : group_cap_(group_cap), len_cap_(len_cap) {}

    BigInt count(const Sequence& s) {
        if (s.length() > len_cap_)
            throw CapExceeded("count_factorizations: |S| = " + std::to_string(s.length()) +
                              " exceeds oracle cap " + std::to_string(len_cap_));
        if (s.group().size() > group_cap_)
            throw CapExceeded("count_factorizations: |G| exceeds cap");
        if (s.sigma_index() != 0)
            return 0;
        return count_rec(s);
    }

    std::optional<std::vector<Sequence>> witness(const Sequence& s) {
        if (count(s) == 0)
            return std::nullopt;
        std::vector<Sequence> blocks;
        Sequence rest = s;
        while (!rest.empty()) {
            Sequence block = first_usable_block(rest);
            blocks.push_back(block);
            rest = div(rest, block);
        }
        return blocks;
    }

private:
    BigInt count_rec(const Sequence& r) {
        if (r.empty())
            return 1;
        auto it = memo_.find(r.terms());
        if (it != memo_.end())
            return it->second;
        BigInt total = 0;
        for_each_anchored_block(r, [&](const Sequence& u) {
            total += label_choices(r, u) * count_rec(div(r, u));
            return true;
        });
        memo_.emplace(r.terms(), total);
        return total;
    }

    Sequence first_usable_block(const Sequence& r) {
        Sequence found(r.group());
        for_each_anchored_block(r, [&](const Sequence& u) {
            if (count_rec(div(r, u)) > 0) {
                found = u;
                return false;
            }
            return true;
        });
        if (found.empty())
            throw std::logic_error("witness: no block despite positive count");
        return found;
    }

    // Irreducible U | r containing the anchor (smallest-index element of r).
    template <typename F> void for_each_anchored_block(const Sequence& r, F&& f) {
        const GroupSpec& G = r.group();
        std::int64_t g0 = r.terms().front().first;
        Sequence rest = r;
        rest.add(g0, -1);
        std::int64_t target = G.index_neg(g0);
        detail::walk_zsf_subsequences(rest, r.length() - 1,
                                      [&](const Sequence& z, std::int64_t sig, std::int64_t,
                                          const Bitset256&) {
            if (sig != target)
                return detail::Walk::Continue;
            Sequence u = z;
            u.add(g0, 1);
            return f(u) ? detail::Walk::Continue : detail::Walk::Stop;
        });
        // the singleton case z empty cannot occur: g0 != 0 so U = {g0} is not zero-sum
    }

    // Anchor copy is forced; the remaining copies of U are chosen freely.
    static BigInt label_choices(const Sequence& r, const Sequence& u) {
        std::int64_t g0 = r.terms().front().first;
        BigInt ways = 1;
        for (const auto& [idx, m] : u.terms()) {
            std::int64_t n = r.valuation(idx);
            std::int64_t k = m;
            if (idx == g0) {
                --n;
                --k;
            }
            ways *= binomial(n, k);
        }
        return ways;
    }

    static BigInt binomial(std::int64_t n, std::int64_t k) {
        if (k < 0 || k > n)
            return 0;
        BigInt r = 1;
        for (std::int64_t i = 1; i <= k; ++i) {
            r *= (n - k + i);
            r /= i;
        }
        return r;
    }

    std::int64_t group_cap_;
    std::int64_t len_cap_;
    std::map<Sequence::Terms, BigInt> memo_;
};

inline FactorizationCount count_factorizations(const Sequence& s,
                                               std::int64_t group_cap = kDefaultGroupCap,
                                               std::int64_t len_cap = kDefaultOracleLenCap) {
    FactorizationCounter c(group_cap, len_cap);
    FactorizationCount out;
    out.count = c.count(s);
    if (out.count > 0)
        out.witness = c.witness(s);
    return out;
}

inline bool is_ufis(const Sequence& s, std::int64_t group_cap = kDefaultGroupCap,
                    std::int64_t len_cap = kDefaultOracleLenCap) {
    if (s.sigma_index() != 0)
        return false;
    FactorizationCounter c(group_cap, len_cap);
    return c.count(s) == 1;
}

// gcd criterion: S divides a UFIS iff any two zero-sum subsequences have
// zero-sum gcd. Evaluated over irreducible pairs (the criterion is
// unchanged by that restriction). On multisets the labeled quantifier
// becomes: for every realizable overlap W of copies between U and V,
// sigma(W) = 0. The overlap multiset at g ranges over
// [max(0, u+v-s), min(u,v)]; if that box is not a single point some
// realization has nonzero sum (two achievable sums differ by g != 0), and
// when it is a point the forced overlap is gcd(U, V).
inline bool divides_ufis(const Sequence& s, std::int64_t cap = kDefaultGroupCap) {
    if (s.group().size() > cap)
        throw CapExceeded("divides_ufis: |G| exceeds cap");
    std::vector<Sequence> irr;
    detail::walk_irreducible_subsequences(s, s.length(), [&](const Sequence& u) {
        irr.push_back(u);
        return true;
    });
    for (std::size_t i = 0; i < irr.size(); ++i) {
        for (std::size_t j = i; j < irr.size(); ++j) {
            const Sequence& u = irr[i];
            const Sequence& v = irr[j];
            bool forced = true;
            for (const auto& [idx, mu] : u.terms()) {
                std::int64_t mv = v.valuation(idx);
                std::int64_t low = std::max<std::int64_t>(0, mu + mv - s.valuation(idx));
                if (std::min(mu, mv) != low) {
                    forced = false;
                    break;
                }
            }
            if (!forced)
                return false;
            if (!gcd_seq(u, v).empty() && gcd_seq(u, v).sigma_index() != 0)
                return false;
        }
    }
    return true;
}

// S itself when zero-sum, else S with one copy of -sigma(S) appended.
inline Sequence extend_to_ufis(const Sequence& s, std::int64_t cap = kDefaultGroupCap) {
    if (!divides_ufis(s, cap))
        throw std::invalid_argument("extend_to_ufis: S does not divide a UFIS");
    std::int64_t sig = s.sigma_index();
    if (sig == 0)
        return s;
    Sequence out = s;
    out.add(s.group().index_neg(sig), 1);
    return out;
}

// Gao's composition criterion: U * S2 is a UFIS iff the sumsets meet only
// in 0. Under the nonempty-Sigma convention both sides contain 0 whenever
// they are nonempty zero-sum, so the test is intersection within {0}.
inline bool compose_is_ufis(const Sequence& u, const Sequence& s2,
                            std::int64_t cap = kDefaultGroupCap, bool validate = true) {
    require_same_group(u, s2);
    if (validate) {
        if (!is_irreducible(u, cap))
            throw std::invalid_argument("compose_is_ufis: U is not irreducible");
        if (s2.sigma_index() != 0 || !divides_ufis(s2, cap))
            throw std::invalid_argument("compose_is_ufis: S2 is not a UFIS");
    }
    Bitset256 meet = sumset_bits(u, cap) & sumset_bits(s2, cap);
    meet.w[0] &= ~std::uint64_t(1);
    return !meet.any();
}

// U (a block of the UFIS S) is optimal when no longer irreducible sequence
// can replace it while preserving unique factorization, i.e. no irreducible
// U' with |U'| > |U| has its sumset inside {0} union complement(Sigma(S U^-1)).
inline bool is_optimal_factor(const Sequence& u, const Sequence& s,
                              std::int64_t cap = kDefaultGroupCap) {
    require_same_group(u, s);
    const GroupSpec& G = s.group();
    if (G.size() > cap)
        throw CapExceeded("is_optimal_factor: |G| exceeds cap");
    if (!is_irreducible(u, cap) || !divides(u, s))
        throw std::invalid_argument("is_optimal_factor: U is not an irreducible divisor of S");
    Sequence rest = div(s, u);
    if (rest.sigma_index() != 0 || !divides_ufis(rest, cap) ||
        !compose_is_ufis(u, rest, cap, false))
        throw std::invalid_argument("is_optimal_factor: U is not a block of a factorization of S");

    Bitset256 blocked = sumset_bits(rest, cap);
    blocked.w[0] &= ~std::uint64_t(1);
    std::int64_t target_len = u.length();

    // Search irreducibles U' = Z * g with Sigma staying clear of `blocked`;
    // zero-sum-free prefixes already violating the constraint are pruned.
    bool found_longer = false;
    Sequence full(G);
    for (std::int64_t i = 1; i < G.size(); ++i)
        if (!blocked.test(i))
            full.add(i, G.size());
    detail::walk_zsf_subsequences(full, G.size() - 1,
                                  [&](const Sequence& z, std::int64_t sig, std::int64_t maxidx,
                                      const Bitset256& reach) {
        if ((reach & blocked).any())
            return detail::Walk::Prune;
        std::int64_t g = G.index_neg(sig);
        if (g >= maxidx && !blocked.test(g) && z.length() + 1 > target_len) {
            // Sigma(Z*g) = Sigma(Z) | (Sigma(Z)+g) | {g}; closing g makes 0
            // reachable, which is permitted.
            Bitset256 bits = reach;
            Bitset256 shifted;
            reach.for_each([&](int b) { shifted.set(G.index_add(b, g)); });
            bits |= shifted;
            bits.set(g);
            bits.w[0] &= ~std::uint64_t(1);
            if (!(bits & blocked).any()) {
                found_longer = true;
                return detail::Walk::Stop;
            }
        }
        return detail::Walk::Continue;
    });
    return !found_longer;
}

} // namespace zslab
