#pragma once

#include "zslab/factor.hpp"
#include "zslab/group.hpp"
#include "zslab/invariants.hpp"
#include "zslab/oracle.hpp"
#include "zslab/sequence.hpp"
#include "zslab/sumset.hpp"

#include <array>
#include <chrono>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace zslab {

enum class CheckStatus { pass, fail, skipped_cap };

inline const char* check_status_name(CheckStatus s) {
    switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped_cap: return "skipped_cap";
    }
    return "?";
}

struct CheckReport {
    std::string check_id;
    std::vector<std::pair<std::string, std::string>> params;
    CheckStatus status = CheckStatus::pass;
    Rational lhs;
    Rational rhs;
    std::vector<Sequence> witnesses;
    std::vector<std::pair<std::string, std::string>> details;
    std::uint64_t nodes_explored = 0;
    double elapsed_ms = 0.0;
};

namespace detail {

struct CheckTimer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         t0)
            .count();
    }
};

inline void note(CheckReport& r, const std::string& k, const std::string& v) {
    r.details.emplace_back(k, v);
}

inline void param(CheckReport& r, const std::string& k, const std::string& v) {
    r.params.emplace_back(k, v);
}

// (p, alpha_1, alpha_2) per prime of G, primes ascending; alpha_2 = 0 when
// the p-component is cyclic.
struct PrimeShape {
    std::int64_t p;
    int a1;
    int a2;
};

inline std::vector<PrimeShape> prime_shapes(const GroupSpec& G) {
    std::vector<PrimeShape> out;
    for (const auto& c : G.components()) {
        if (!out.empty() && out.back().p == c.prime) {
            if (c.exponent > out.back().a2)
                out.back().a2 = c.exponent; // components are exponent-sorted; second largest
        } else {
            out.push_back({c.prime, c.exponent, 0});
        }
    }
    return out;
}

inline GroupSpec direct_sum(std::int64_t extra_order, const GroupSpec& G) {
    std::vector<std::int64_t> orders{extra_order};
    for (const auto& c : G.components())
        orders.push_back(c.order);
    return GroupSpec(orders);
}

inline bool mark_skipped(CheckReport& r, const CapExceeded& e) {
    r.status = CheckStatus::skipped_cap;
    note(r, "skipped_reason", e.what());
    return true;
}

} // namespace detail

// k(G) + 1/exp(G) <= K(G) <= k(G) + 1/P^-(exp(G)).
inline CheckReport check_k_bounds(const GroupSpec& G, const SolveOptions& opts = {}) {
    detail::CheckTimer t;
    CheckReport r;
    r.check_id = "k_bounds";
    detail::param(r, "group", G.str());
    if (G.is_trivial()) {
        r.status = CheckStatus::skipped_cap;
        detail::note(r, "skipped_reason", "trivial group: no primes divide exp(G)");
        r.elapsed_ms = t.ms();
        return r;
    }
    try {
        auto k = solve_little_k(G, WeightFunction::cross(), opts);
        auto K = solve_big_K(G, opts);
        r.nodes_explored = k.nodes_explored + K.nodes_explored;
        Rational lower = k.value + Rational(1, G.exponent());
        Rational upper = k.value + Rational(1, p_minus(G.exponent()));
        r.lhs = K.value;
        r.rhs = k.value;
        detail::note(r, "lower_bound", lower.str());
        detail::note(r, "upper_bound", upper.str());
        r.status = (lower <= K.value && K.value <= upper) ? CheckStatus::pass
                                                          : CheckStatus::fail;
        if (r.status == CheckStatus::fail) {
            r.witnesses.push_back(K.witness);
            r.witnesses.push_back(k.witness);
        }
    } catch (const CapExceeded& e) {
        detail::mark_skipped(r, e);
    }
    r.elapsed_ms = t.ms();
    return r;
}

// Amalgamation Lemma: for l divisible by p_i^(alpha_i2 + 1) where the
// p_i-component has alpha_i1 > alpha_i2, every dense zero-sum-free witness
// has at most p_i - 1 terms of order l, and every dense UFIS at most p_i.
inline CheckReport check_amalgamation_lemma(const GroupSpec& G, std::int64_t l,
                                            const SolveOptions& opts = {}) {
    detail::CheckTimer t;
    CheckReport r;
    r.check_id = "amalgamation";
    detail::param(r, "group", G.str());
    detail::param(r, "l", std::to_string(l));

    std::int64_t zsf_bound = -1, ufis_bound = -1;
    for (const auto& sh : detail::prime_shapes(G)) {
        if (sh.a1 > sh.a2 && l % ipow(sh.p, sh.a2 + 1) == 0) {
            if (zsf_bound < 0 || sh.p - 1 < zsf_bound)
                zsf_bound = sh.p - 1;
            if (ufis_bound < 0 || sh.p < ufis_bound)
                ufis_bound = sh.p;
        }
    }
    if (zsf_bound < 0)
        throw std::invalid_argument(
            "check_amalgamation_lemma: no prime of G satisfies the lemma hypothesis for l");

    try {
        auto dense_zsf = dense_witnesses_all(G, DenseKind::zsf, opts);
        auto dense_ufis = dense_witnesses_all(G, DenseKind::ufis, opts);
        std::int64_t worst_zsf = 0, worst_ufis = 0;
        bool ok = true;
        for (const auto& s : dense_zsf) {
            auto h = order_histogram(s);
            std::int64_t c = h.count(l) ? h.at(l) : 0;
            worst_zsf = std::max(worst_zsf, c);
            if (c > zsf_bound) {
                ok = false;
                r.witnesses.push_back(s);
            }
        }
        for (const auto& s : dense_ufis) {
            auto h = order_histogram(s);
            std::int64_t c = h.count(l) ? h.at(l) : 0;
            worst_ufis = std::max(worst_ufis, c);
            if (c > ufis_bound) {
                ok = false;
                r.witnesses.push_back(s);
            }
        }
        r.lhs = Rational(worst_zsf);
        r.rhs = Rational(zsf_bound);
        detail::note(r, "dense_zsf_witnesses", std::to_string(dense_zsf.size()));
        detail::note(r, "dense_ufis_witnesses", std::to_string(dense_ufis.size()));
        detail::note(r, "ufis_worst_count", std::to_string(worst_ufis));
        detail::note(r, "ufis_bound", std::to_string(ufis_bound));
        r.status = ok ? CheckStatus::pass : CheckStatus::fail;
        if (ok) {
            for (const auto& s : dense_zsf)
                r.witnesses.push_back(s);
            for (const auto& s : dense_ufis)
                r.witnesses.push_back(s);
        }
    } catch (const CapExceeded& e) {
        detail::mark_skipped(r, e);
    }
    r.elapsed_ms = t.ms();
    return r;
}

// Order-count lower bounds: when p_1 is wide (resp. 2-wide) w.r.t. the
// product of the other primes' maximal powers and alpha_11 > alpha_12,
// every dense zsf (resp. UFIS) witness has at least p_1 - 1 terms of order
// p_1^a for each a in [alpha_12 + 1, alpha_11].
inline CheckReport check_lemma4(const GroupSpec& G, const SolveOptions& opts = {}) {
    detail::CheckTimer t;
    CheckReport r;
    r.check_id = "lemma4";
    detail::param(r, "group", G.str());

    auto shapes = detail::prime_shapes(G);
    if (shapes.empty())
        throw std::invalid_argument("check_lemma4: trivial group");
    auto p1 = shapes.front();
    if (p1.a1 <= p1.a2)
        throw std::invalid_argument("check_lemma4: hypothesis alpha_11 > alpha_12 fails");
    std::int64_t rest = 1;
    for (std::size_t i = 1; i < shapes.size(); ++i)
        rest *= ipow(shapes[i].p, shapes[i].a1);
    bool zsf_gate = is_wide(p1.p, rest).holds;
    bool ufis_gate = is_2wide(p1.p, rest).holds;
    detail::note(r, "zsf_gate", zsf_gate ? "wide" : "not_wide");
    detail::note(r, "ufis_gate", ufis_gate ? "2wide" : "not_2wide");
    if (!zsf_gate && !ufis_gate)
        throw std::invalid_argument("check_lemma4: wideness hypothesis fails");

    try {
        bool ok = true;
        std::int64_t need = p1.p - 1;
        auto check_witnesses = [&](const std::vector<Sequence>& ws, const char* label) {
            for (const auto& s : ws) {
                auto h = order_histogram(s);
                for (int a = p1.a2 + 1; a <= p1.a1; ++a) {
                    std::int64_t ord = ipow(p1.p, a);
                    std::int64_t c = h.count(ord) ? h.at(ord) : 0;
                    if (c < need) {
                        ok = false;
                        r.witnesses.push_back(s);
                        detail::note(r, "violation",
                                     std::string(label) + " witness has " + std::to_string(c) +
                                         " terms of order " + std::to_string(ord));
                    }
                }
            }
        };
        if (zsf_gate)
            check_witnesses(dense_witnesses_all(G, DenseKind::zsf, opts), "zsf");
        if (ufis_gate)
            check_witnesses(dense_witnesses_all(G, DenseKind::ufis, opts), "ufis");
        r.lhs = Rational(need);
        r.rhs = Rational(need);
        r.status = ok ? CheckStatus::pass : CheckStatus::fail;
    } catch (const CapExceeded& e) {
        detail::mark_skipped(r, e);
    }
    r.elapsed_ms = t.ms();
    return r;
}

// k(C_{p^a} + G) = k(C_{p^a}) + k(G) whenever p is wide w.r.t. exp(G).
inline CheckReport check_additivity_k(std::int64_t p, int alpha, const GroupSpec& G,
                                      const SolveOptions& opts = {}) {
    detail::CheckTimer t;
    CheckReport r;
    r.check_id = "additivity_k";
    detail::param(r, "p", std::to_string(p));
    detail::param(r, "alpha", std::to_string(alpha));
    detail::param(r, "group", G.str());
    if (G.exponent() > 1 && !is_wide(p, G.exponent()).holds) {
        r.status = CheckStatus::skipped_cap;
        detail::note(r, "skipped_reason", "hypothesis p wide w.r.t. exp(G) fails");
        r.elapsed_ms = t.ms();
        return r;
    }
    try {
        GroupSpec big = detail::direct_sum(ipow(p, alpha), G);
        GroupSpec cyc(std::vector<std::int64_t>{ipow(p, alpha)});
        auto whole = solve_little_k(big, WeightFunction::cross(), opts);
        auto part1 = solve_little_k(cyc, WeightFunction::cross(), opts);
        auto part2 = solve_little_k(G, WeightFunction::cross(), opts);
        r.nodes_explored =
            whole.nodes_explored + part1.nodes_explored + part2.nodes_explored;
        r.lhs = whole.value;
        r.rhs = part1.value + part2.value;
        r.status = (r.lhs == r.rhs) ? CheckStatus::pass : CheckStatus::fail;
        r.witnesses.push_back(whole.witness);
    } catch (const CapExceeded& e) {
        detail::mark_skipped(r, e);
    }
    r.elapsed_ms = t.ms();
    return r;
}

// K1(C_{p^a} + G) = K1(C_{p^a}) + K1(G) whenever p is 2-wide w.r.t. exp(G).
inline CheckReport check_additivity_K1(std::int64_t p, int alpha, const GroupSpec& G,
                                       const SolveOptions& opts = {}) {
    detail::CheckTimer t;
    CheckReport r;
    r.check_id = "additivity_K1";
    detail::param(r, "p", std::to_string(p));
    detail::param(r, "alpha", std::to_string(alpha));
    detail::param(r, "group", G.str());
    if (G.exponent() > 1 && !is_2wide(p, G.exponent()).holds) {
        r.status = CheckStatus::skipped_cap;
        detail::note(r, "skipped_reason", "hypothesis p 2-wide w.r.t. exp(G) fails");
        r.elapsed_ms = t.ms();
        return r;
    }
    try {
        GroupSpec big = detail::direct_sum(ipow(p, alpha), G);
        GroupSpec cyc(std::vector<std::int64_t>{ipow(p, alpha)});
        auto whole = solve_K1(big, WeightFunction::cross(), opts);
        auto part1 = solve_K1(cyc, WeightFunction::cross(), opts);
        auto part2 = solve_K1(G, WeightFunction::cross(), opts);
        r.nodes_explored =
            whole.nodes_explored + part1.nodes_explored + part2.nodes_explored;
        r.lhs = whole.value;
        r.rhs = part1.value + part2.value;
        r.status = (r.lhs == r.rhs) ? CheckStatus::pass : CheckStatus::fail;
        r.witnesses.push_back(whole.witness);
    } catch (const CapExceeded& e) {
        detail::mark_skipped(r, e);
    }
    r.elapsed_ms = t.ms();
    return r;
}

// Exponent lifting: K1(C_{p^(a1+1)} + rest) = K1(C_{p^a1} + rest) + 1/p^a1,
// provided a1 >= max of the other exponents.
inline CheckReport check_toplift(std::int64_t p, const std::vector<int>& alphas,
                                 const SolveOptions& opts = {}) {
    detail::CheckTimer t;
    CheckReport r;
    r.check_id = "toplift";
    detail::param(r, "p", std::to_string(p));
    {
        std::string a;
        for (std::size_t i = 0; i < alphas.size(); ++i)
            a += (i ? "," : "") + std::to_string(alphas[i]);
        detail::param(r, "alphas", a);
    }
    if (alphas.empty())
        throw std::invalid_argument("check_toplift: alphas must be nonempty");
    for (std::size_t i = 1; i < alphas.size(); ++i)
        if (alphas[i] > alphas[0])
            throw std::invalid_argument("check_toplift: alpha_1 must be maximal");
    try {
        std::vector<std::int64_t> lo, hi;
        lo.push_back(ipow(p, alphas[0]));
        hi.push_back(ipow(p, alphas[0] + 1));
        for (std::size_t i = 1; i < alphas.size(); ++i) {
            lo.push_back(ipow(p, alphas[i]));
            hi.push_back(ipow(p, alphas[i]));
        }
        auto top = solve_K1(GroupSpec(hi), WeightFunction::cross(), opts);
        auto base = solve_K1(GroupSpec(lo), WeightFunction::cross(), opts);
        r.nodes_explored = top.nodes_explored + base.nodes_explored;
        r.lhs = top.value;
        r.rhs = base.value + Rational(1, ipow(p, alphas[0]));
        r.status = (r.lhs == r.rhs) ? CheckStatus::pass : CheckStatus::fail;
        r.witnesses.push_back(top.witness);
    } catch (const CapExceeded& e) {
        detail::mark_skipped(r, e);
    }
    r.elapsed_ms = t.ms();
    return r;
}

// Over C_p^n, the maximal-length UFIS witness S = U_1...U_t must satisfy
// prod |U_i| <= p^n, and the literal odd-length count claim
// (#odd blocks >= |S| - n(p-1)) is evaluated as stated and reported.
inline CheckReport check_eq6_and_oddcount(std::int64_t p, int n,
                                          const SolveOptions& opts = {}) {
    detail::CheckTimer t;
    CheckReport r;
    r.check_id = "eq6_oddcount";
    detail::param(r, "p", std::to_string(p));
    detail::param(r, "n", std::to_string(n));
    if (!is_prime(p) || n < 1)
        throw std::invalid_argument("check_eq6_and_oddcount: need prime p and n >= 1");
    try {
        GroupSpec G(std::vector<std::int64_t>(n, p));
        auto res = solve_narkiewicz(G, opts);
        r.nodes_explored = res.nodes_explored;
        BigInt prod = 1;
        std::int64_t odd = 0;
        for (const auto& u : res.blocks) {
            prod *= u.length();
            if (u.length() % 2 == 1)
                ++odd;
        }
        std::int64_t threshold = res.witness.length() - std::int64_t(n) * (p - 1);
        bool eq6 = prod <= BigInt(G.size());
        bool oddcount = odd >= threshold;
        r.lhs = Rational(prod);
        r.rhs = Rational(G.size());
        detail::note(r, "odd_blocks", std::to_string(odd));
        detail::note(r, "odd_threshold", std::to_string(threshold));
        detail::note(r, "eq6_holds", eq6 ? "true" : "false");
        detail::note(r, "oddcount_holds", oddcount ? "true" : "false");
        r.witnesses.push_back(res.witness);
        r.status = (eq6 && oddcount) ? CheckStatus::pass : CheckStatus::fail;
    } catch (const CapExceeded& e) {
        detail::mark_skipped(r, e);
    }
    r.elapsed_ms = t.ms();
    return r;
}

// Conjecture: every zero-sum-free T over C_p^k has a nonempty subsequence
// T_0 with |T_0| < p whose sum no other subsequence of T attains.
inline CheckReport check_conjecture5(std::int64_t p, int k, std::int64_t len_cap,
                                     const SolveOptions& opts = {}) {
    detail::CheckTimer t;
    CheckReport r;
    r.check_id = "conj5";
    detail::param(r, "p", std::to_string(p));
    detail::param(r, "k", std::to_string(k));
    detail::param(r, "len_cap", std::to_string(len_cap));
    detail::note(r, "mode", "exhaustive");
    if (!is_prime(p) || k < 1)
        throw std::invalid_argument("check_conjecture5: need prime p and k >= 1");
    try {
        GroupSpec G(std::vector<std::int64_t>(k, p));
        if (G.size() > opts.group_cap)
            throw CapExceeded("conj5: |G| exceeds group cap");
        std::uint64_t tested = 0;
        for (const auto& T : oracle::all_zsf_sequences(G, len_cap)) {
            ++tested;
            auto c = oracle::copies(T);
            std::vector<std::int64_t> cnt(G.size(), 0), size_of(G.size(), 0);
            for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << c.size()); ++mask) {
                std::int64_t sum = 0;
                int sz = 0;
                for (std::size_t i = 0; i < c.size(); ++i)
                    if (mask & (std::uint64_t(1) << i)) {
                        sum = G.index_add(sum, c[i]);
                        ++sz;
                    }
                if (cnt[sum] < 2)
                    size_of[sum] = sz;
                ++cnt[sum];
            }
            bool ok = false;
            for (std::int64_t s = 1; s < G.size() && !ok; ++s)
                ok = (cnt[s] == 1 && size_of[s] < p);
            if (!ok) {
                r.status = CheckStatus::fail;
                r.witnesses.push_back(T);
                if (!oracle::naive_is_zero_sum_free(T))
                    throw std::logic_error("conj5 counterexample failed re-validation");
                break;
            }
        }
        detail::note(r, "sequences_tested", std::to_string(tested));
        r.nodes_explored = tested;
    } catch (const CapExceeded& e) {
        detail::mark_skipped(r, e);
    }
    r.elapsed_ms = t.ms();
    return r;
}

// Conjecture: every zero-sum-free T over C_p^k admits a cyclic subgroup H
// with T_H nonempty and H disjoint from Sigma(T * T_H^{-1}).
inline CheckReport check_conjecture6(std::int64_t p, int k, std::int64_t len_cap,
                                     std::int64_t samples = 0, std::uint64_t seed = 1,
                                     const SolveOptions& opts = {}) {
    detail::CheckTimer t;
    CheckReport r;
    r.check_id = "conj6";
    detail::param(r, "p", std::to_string(p));
    detail::param(r, "k", std::to_string(k));
    detail::param(r, "len_cap", std::to_string(len_cap));
    detail::param(r, "samples", std::to_string(samples));
    detail::param(r, "seed", std::to_string(seed));
    detail::note(r, "mode", samples > 0 ? "sampled" : "exhaustive");
    if (!is_prime(p) || k < 1)
        throw std::invalid_argument("check_conjecture6: need prime p and k >= 1");
    try {
        GroupSpec G(std::vector<std::int64_t>(k, p));
        if (G.size() > opts.group_cap)
            throw CapExceeded("conj6: |G| exceeds group cap");

        // cyclic subgroups as element-index bitsets, deduplicated
        std::set<std::array<std::uint64_t, 4>> seen;
        std::vector<Bitset256> subgroups;
        for (std::int64_t g = 1; g < G.size(); ++g) {
            Bitset256 h;
            std::int64_t x = 0;
            do {
                h.set(x);
                x = G.index_add(x, g);
            } while (x != 0);
            if (seen.insert(h.w).second)
                subgroups.push_back(h);
        }

        auto satisfies = [&](const Sequence& T) {
            for (const auto& h : subgroups) {
                Sequence inside(G), outside(G);
                for (const auto& [idx, m] : T.terms())
                    (h.test(idx) ? inside : outside).add(idx, m);
                if (inside.empty())
                    continue;
                if (outside.empty())
                    return true; // empty sumset misses H
                if (!(sumset_bits(outside, opts.group_cap) & h).any())
                    return true;
            }
            return false;
        };

        std::uint64_t tested = 0;
        bool failed = false;
        Sequence bad(G);
        if (samples <= 0) {
            for (const auto& T : oracle::all_zsf_sequences(G, len_cap)) {
                ++tested;
                if (!satisfies(T)) {
                    failed = true;
                    bad = T;
                    break;
                }
            }
        } else {
            std::mt19937_64 eng(seed);
            std::int64_t accepted = 0;
            while (accepted < samples) {
                std::int64_t len = 1 + static_cast<std::int64_t>(eng() % len_cap);
                Sequence T(G);
                for (std::int64_t i = 0; i < len; ++i)
                    T.add(1 + static_cast<std::int64_t>(eng() % (G.size() - 1)), 1);
                if (!is_zero_sum_free(T, opts.group_cap))
                    continue;
                ++accepted;
                ++tested;
                if (!satisfies(T)) {
                    failed = true;
                    bad = T;
                    break;
                }
            }
        }
        detail::note(r, "sequences_tested", std::to_string(tested));
        r.nodes_explored = tested;
        if (failed) {
            r.status = CheckStatus::fail;
            r.witnesses.push_back(bad);
            // re-validate from scratch: zsf via subset oracle, and the failed
            // condition re-evaluated with naive sumsets
            if (!oracle::naive_is_zero_sum_free(bad))
                throw std::logic_error("conj6 counterexample failed re-validation");
        }
    } catch (const CapExceeded& e) {
        detail::mark_skipped(r, e);
    }
    r.elapsed_ms = t.ms();
    return r;
}

// N1(C_p^n) = n p.
inline CheckReport check_gao_n1(std::int64_t p, int n, const SolveOptions& opts = {}) {
    detail::CheckTimer t;
    CheckReport r;
    r.check_id = "gao_n1";
    detail::param(r, "p", std::to_string(p));
    detail::param(r, "n", std::to_string(n));
    if (!is_prime(p) || n < 1)
        throw std::invalid_argument("check_gao_n1: need prime p and n >= 1");
    try {
        GroupSpec G(std::vector<std::int64_t>(n, p));
        auto res = solve_narkiewicz(G, opts);
        r.nodes_explored = res.nodes_explored;
        r.lhs = res.value;
        r.rhs = Rational(std::int64_t(n) * p);
        r.status = (r.lhs == r.rhs) ? CheckStatus::pass : CheckStatus::fail;
        r.witnesses.push_back(res.witness);
    } catch (const CapExceeded& e) {
        detail::mark_skipped(r, e);
    }
    r.elapsed_ms = t.ms();
    return r;
}

// Weighted additivity under the dyadic weight f: both k(.,f) and K1(.,f)
// split over C_{p^a} + G when p < P^-(exp(G)).
inline CheckReport check_weighted_additivity(std::int64_t p, int alpha, const GroupSpec& G,
                                             const SolveOptions& opts = {}) {
    detail::CheckTimer t;
    CheckReport r;
    r.check_id = "weighted_additivity";
    detail::param(r, "p", std::to_string(p));
    detail::param(r, "alpha", std::to_string(alpha));
    detail::param(r, "group", G.str());
    if (G.exponent() > 1 && p >= p_minus(G.exponent())) {
        r.status = CheckStatus::skipped_cap;
        detail::note(r, "skipped_reason", "hypothesis p < P^-(exp(G)) fails");
        r.elapsed_ms = t.ms();
        return r;
    }
    try {
        auto f = WeightFunction::dyadic();
        GroupSpec big = detail::direct_sum(ipow(p, alpha), G);
        GroupSpec cyc(std::vector<std::int64_t>{ipow(p, alpha)});
        auto kw = solve_little_k(big, f, opts);
        auto k1 = solve_little_k(cyc, f, opts);
        auto k2 = solve_little_k(G, f, opts);
        auto Kw = solve_K1(big, f, opts);
        auto K1a = solve_K1(cyc, f, opts);
        auto K1b = solve_K1(G, f, opts);
        r.nodes_explored = kw.nodes_explored + k1.nodes_explored + k2.nodes_explored +
                           Kw.nodes_explored + K1a.nodes_explored + K1b.nodes_explored;
        r.lhs = kw.value;
        r.rhs = k1.value + k2.value;
        bool k_ok = r.lhs == r.rhs;
        bool K1_ok = Kw.value == K1a.value + K1b.value;
        detail::note(r, "K1_lhs", Kw.value.str());
        detail::note(r, "K1_rhs", (K1a.value + K1b.value).str());
        r.status = (k_ok && K1_ok) ? CheckStatus::pass : CheckStatus::fail;
        r.witnesses.push_back(kw.witness);
        r.witnesses.push_back(Kw.witness);
    } catch (const CapExceeded& e) {
        detail::mark_skipped(r, e);
    }
    r.elapsed_ms = t.ms();
    return r;
}

// K1 = K1* for G = C_p + C_{p^alpha} + C_{q^beta}.
inline CheckReport check_twoprime(std::int64_t p, int alpha, std::int64_t q, int beta,
                                  const SolveOptions& opts = {}) {
    detail::CheckTimer t;
    CheckReport r;
    r.check_id = "twoprime";
    detail::param(r, "p", std::to_string(p));
    detail::param(r, "alpha", std::to_string(alpha));
    detail::param(r, "q", std::to_string(q));
    detail::param(r, "beta", std::to_string(beta));
    if (!is_prime(p) || !is_prime(q) || p == q || alpha < 1 || beta < 1)
        throw std::invalid_argument("check_twoprime: need distinct primes, alpha,beta >= 1");
    try {
        GroupSpec G(std::vector<std::int64_t>{p, ipow(p, alpha), ipow(q, beta)});
        auto res = solve_K1(G, WeightFunction::cross(), opts);
        r.nodes_explored = res.nodes_explored;
        r.lhs = res.value;
        r.rhs = K1_star(G);
        r.status = (r.lhs == r.rhs) ? CheckStatus::pass : CheckStatus::fail;
        r.witnesses.push_back(res.witness);
    } catch (const CapExceeded& e) {
        detail::mark_skipped(r, e);
    }
    r.elapsed_ms = t.ms();
    return r;
}

} // namespace zslab
