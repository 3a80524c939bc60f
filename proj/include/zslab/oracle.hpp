#pragma once

// Brute-force reference implementations, kept deliberately close to the
// definitions: subset enumeration over labeled copies, restricted-growth
// set partitions, and unpruned multiset walks. The solvers and the DP
// sumset are checked against these; nothing here shares code with the
// search paths it validates.

#include "zslab/factor.hpp"
#include "zslab/group.hpp"
#include "zslab/invariants.hpp"
#include "zslab/sequence.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

namespace zslab::oracle {

// Expand a multiset into one entry per copy.
inline std::vector<std::int64_t> copies(const Sequence& s) {
    std::vector<std::int64_t> out;
    for (const auto& [idx, m] : s.terms())
        for (std::int64_t i = 0; i < m; ++i)
            out.push_back(idx);
    return out;
}

// Sigma(S) by enumerating all 2^|S| - 1 nonempty labeled subsets.
inline std::set<std::int64_t> naive_sumset(const Sequence& s) {
    const GroupSpec& G = s.group();
    auto c = copies(s);
    std::set<std::int64_t> sums;
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << c.size()); ++mask) {
        std::int64_t sum = 0;
        for (std::size_t i = 0; i < c.size(); ++i)
            if (mask & (std::uint64_t(1) << i))
                sum = G.index_add(sum, c[i]);
        sums.insert(sum);
    }
    return sums;
}

inline bool naive_is_zero_sum_free(const Sequence& s) {
    return naive_sumset(s).count(0) == 0;
}

inline bool naive_is_irreducible(const Sequence& s) {
    if (s.empty() || s.sigma_index() != 0)
        return false;
    const GroupSpec& G = s.group();
    auto c = copies(s);
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t(1) << c.size()); ++mask) {
        std::int64_t sum = 0;
        for (std::size_t i = 0; i < c.size(); ++i)
            if (mask & (std::uint64_t(1) << i))
                sum = G.index_add(sum, c[i]);
        if (sum == 0)
            return false;
    }
    return true;
}

// |pi^{-1}(S)| by walking every set partition of the labeled copies
// (restricted growth strings) and keeping those whose blocks are all
// irreducible. Exponential; intended for |S| <= 9.
inline BigInt naive_count_factorizations(const Sequence& s) {
    if (s.sigma_index() != 0)
        return 0;
    if (s.empty())
        return 1;
    const GroupSpec& G = s.group();
    auto c = copies(s);
    std::size_t n = c.size();
    std::vector<int> rgs(n, 0);
    BigInt count = 0;

    auto blocks_ok = [&]() {
        int nblocks = 1 + *std::max_element(rgs.begin(), rgs.end());
        for (int b = 0; b < nblocks; ++b) {
            Sequence block(G);
            for (std::size_t i = 0; i < n; ++i)
                if (rgs[i] == b)
                    block.add(c[i], 1);
            if (!naive_is_irreducible(block))
                return false;
        }
        return true;
    };

    auto rec = [&](auto&& self, std::size_t i, int maxv) -> void {
        if (i == n) {
            if (blocks_ok())
                ++count;
            return;
        }
        for (int v = 0; v <= maxv + 1; ++v) {
            rgs[i] = v;
            self(self, i + 1, std::max(maxv, v));
        }
    };
    rec(rec, 1, 0); // rgs[0] = 0 fixed
    return count;
}

// Extension test from the gcd-criterion lemma's proof: S divides a UFIS
// iff S (when zero-sum) or S*(-sigma(S)) has exactly one factorization.
// Uses the anchored counter, whose own correctness is pinned to the
// set-partition walk above at small lengths.
inline bool divides_ufis_by_extension(const Sequence& s, FactorizationCounter& counter) {
    Sequence t = s;
    std::int64_t sig = s.sigma_index();
    if (sig != 0)
        t.add(s.group().index_neg(sig), 1);
    return counter.count(t) == 1;
}

// ---- unpruned multiset walks for solver cross-checks ---------------------

// Extremal values over the zero-sum-free family and the irreducibles got by
// closing each zero-sum-free sequence, established by plain index-order
// enumeration with the brute-force subset test at every node.
struct NaiveZsfExtrema {
    Rational k_cross;
    Rational k_dyadic;
    std::int64_t max_zsf_len = 0;
    Rational K_cross;     // max cross number of an irreducible
    std::int64_t D = 0;   // max length of an irreducible
    std::uint64_t visited = 0;
};

inline NaiveZsfExtrema naive_zsf_extrema(const GroupSpec& G) {
    NaiveZsfExtrema out;
    auto wc = WeightFunction::cross();
    auto wd = WeightFunction::dyadic();
    Sequence z(G);

    auto consider_closed = [&](const Sequence& zseq) {
        std::int64_t sig = zseq.sigma_index();
        if (sig == 0)
            return;
        Sequence u = zseq;
        u.add(G.index_neg(sig), 1);
        if (!naive_is_irreducible(u))
            return;
        out.K_cross = std::max(out.K_cross, u.cross_number(wc), std::less<>{});
        out.D = std::max(out.D, u.length());
    };

    auto rec = [&](auto&& self, std::int64_t minidx) -> void {
        ++out.visited;
        if (!z.empty()) {
            out.k_cross = std::max(out.k_cross, z.cross_number(wc), std::less<>{});
            out.k_dyadic = std::max(out.k_dyadic, z.cross_number(wd), std::less<>{});
            out.max_zsf_len = std::max(out.max_zsf_len, z.length());
            consider_closed(z);
        }
        for (std::int64_t idx = minidx; idx < G.size(); ++idx) {
            z.add(idx, 1);
            if (naive_is_zero_sum_free(z))
                self(self, idx);
            z.add(idx, -1);
        }
    };
    rec(rec, 1);
    return out;
}

// Extremal values over the unique factorization family: enumerate all
// multisets, pruning only where the extension test proves no UFIS can
// contain the prefix (divisor-of-UFIS is a hereditary property).
struct NaiveUfisExtrema {
    Rational K1_cross;
    Rational K1_dyadic;
    std::int64_t N1 = 0;
    std::uint64_t visited = 0;
};

inline NaiveUfisExtrema naive_ufis_extrema(const GroupSpec& G,
                                           std::int64_t group_cap = kDefaultGroupCap) {
    NaiveUfisExtrema out;
    auto wc = WeightFunction::cross();
    auto wd = WeightFunction::dyadic();
    FactorizationCounter counter(group_cap, /*len_cap=*/256);
    Sequence s(G);

    auto rec = [&](auto&& self, std::int64_t minidx) -> void {
        ++out.visited;
        if (s.sigma_index() == 0 && (s.empty() || counter.count(s) == 1)) {
            out.K1_cross = std::max(out.K1_cross, s.cross_number(wc), std::less<>{});
            out.K1_dyadic = std::max(out.K1_dyadic, s.cross_number(wd), std::less<>{});
            out.N1 = std::max(out.N1, s.length());
        }
        for (std::int64_t idx = minidx; idx < G.size(); ++idx) {
            s.add(idx, 1);
            if (divides_ufis_by_extension(s, counter))
                self(self, idx);
            s.add(idx, -1);
        }
    };
    rec(rec, 1);
    return out;
}

// Every zero-sum-free sequence of length <= max_len, canonical order.
inline std::vector<Sequence> all_zsf_sequences(const GroupSpec& G, std::int64_t max_len,
                                               bool include_empty = false) {
    std::vector<Sequence> out;
    Sequence z(G);
    auto rec = [&](auto&& self, std::int64_t minidx) -> void {
        if (!z.empty() || include_empty)
            out.push_back(z);
        if (z.length() >= max_len)
            return;
        for (std::int64_t idx = minidx; idx < G.size(); ++idx) {
            z.add(idx, 1);
            if (naive_is_zero_sum_free(z))
                self(self, idx);
            z.add(idx, -1);
        }
    };
    rec(rec, 1);
    return out;
}

// Every multiset over the nonzero elements of G with length <= max_len.
inline std::vector<Sequence> all_multisets(const GroupSpec& G, std::int64_t max_len) {
    std::vector<Sequence> out;
    Sequence s(G);
    auto rec = [&](auto&& self, std::int64_t minidx) -> void {
        out.push_back(s);
        if (s.length() >= max_len)
            return;
        for (std::int64_t idx = minidx; idx < G.size(); ++idx) {
            s.add(idx, 1);
            self(self, idx);
            s.add(idx, -1);
        }
    };
    rec(rec, 1);
    return out;
}

} // namespace zslab::oracle
