#pragma once

#include "zslab/factor.hpp"
#include "zslab/group.hpp"
#include "zslab/rational.hpp"
#include "zslab/sequence.hpp"
#include "zslab/sumset.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace zslab {

enum class Objective { little_k, big_K, K1, davenport, narkiewicz, dense_zsf, dense_ufis };

inline const char* objective_name(Objective o) {
    switch (o) {
    case Objective::little_k: return "k";
    case Objective::big_K: return "K";
    case Objective::K1: return "K1";
    case Objective::davenport: return "D";
    case Objective::narkiewicz: return "N1";
    case Objective::dense_zsf: return "dense_zsf";
    case Objective::dense_ufis: return "dense_ufis";
    }
    return "?";
}

struct SolveOptions {
    std::int64_t group_cap = kDefaultGroupCap;
    std::int64_t oracle_len_cap = kDefaultOracleLenCap;
    int threads = 1;
    bool validate_witness = true;
};

struct SolveResult {
    Objective objective = Objective::little_k;
    WeightFunction weight = WeightFunction::cross();
    Rational value;
    Sequence witness;
    std::vector<Sequence> blocks; // irreducible factorization, UFIS objectives only
    std::uint64_t nodes_explored = 0;
    double elapsed_ms = 0.0;
};

// ---- conjectured closed forms (no size cap) -----------------------------

// k*(G) = sum over canonical components of (1 - 1/p^a).
inline Rational k_star(const GroupSpec& G) {
    Rational total;
    for (const auto& c : G.components())
        total += Rational(1) - Rational(1, c.order);
    return total;
}

// K*(G) = k*(G) + 1/exp(G).
inline Rational K_star(const GroupSpec& G) {
    if (G.is_trivial())
        return Rational(0);
    return k_star(G) + Rational(1, G.exponent());
}

// K1*(G) = sum over components of (p^a - 1)/(p^a - p^(a-1)).
inline Rational K1_star(const GroupSpec& G) {
    Rational total;
    for (const auto& c : G.components())
        total += Rational(c.order - 1, c.order - c.order / c.prime);
    return total;
}

// ---- wideness predicates (Def. 4) ---------------------------------------

struct WidenessReport {
    std::int64_t p = 0;
    std::int64_t n = 0;
    Rational lhs;
    Rational rhs;
    bool holds = false;
    bool two_wide = false; // variant flag
};

// Product over prime-power parts q^a of n of (q^(a+1)-1)/(q^(a+1)-q^a);
// equals the sum of reciprocals of divisors of n. Empty product for n = 1.
inline Rational wideness_rhs(std::int64_t n) {
    Rational r(1);
    for (auto [q, a] : factorize(n)) {
        std::int64_t qa1 = ipow(q, a + 1);
        r *= Rational(qa1 - 1, qa1 - qa1 / q);
    }
    return r;
}

inline WidenessReport is_wide(std::int64_t p, std::int64_t n) {
    if (!is_prime(p))
        throw std::invalid_argument("is_wide: p must be prime");
    if (n < 1)
        throw std::invalid_argument("is_wide: n must be >= 1");
    WidenessReport r;
    r.p = p;
    r.n = n;
    r.two_wide = false;
    r.lhs = Rational(p, p - 1);
    r.rhs = wideness_rhs(n);
    r.holds = (n % p != 0) && r.lhs >= r.rhs;
    return r;
}

inline WidenessReport is_2wide(std::int64_t p, std::int64_t n) {
    if (!is_prime(p))
        throw std::invalid_argument("is_2wide: p must be prime");
    if (n < 1)
        throw std::invalid_argument("is_2wide: n must be >= 1");
    WidenessReport r;
    r.p = p;
    r.n = n;
    r.two_wide = true;
    r.lhs = Rational(p * p + 2 * p - 2, p * p);
    r.rhs = wideness_rhs(n);
    r.holds = (n % p != 0) && r.lhs >= r.rhs;
    return r;
}

// n = q1^a1 ... qr^ar is wide when each q_i is wide w.r.t. the product of
// the larger prime-power parts. Vacuously true for n = 1 and prime powers.
inline bool is_wide_integer(std::int64_t n) {
    if (n < 1)
        throw std::invalid_argument("is_wide_integer: n must be >= 1");
    auto f = factorize(n);
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
        std::int64_t rest = 1;
        for (std::size_t j = i + 1; j < f.size(); ++j)
            rest *= ipow(f[j].first, f[j].second);
        if (!is_wide(f[i].first, rest).holds)
            return false;
    }
    return true;
}

inline bool is_2wide_integer(std::int64_t n) {
    if (n < 1)
        throw std::invalid_argument("is_2wide_integer: n must be >= 1");
    auto f = factorize(n);
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
        std::int64_t rest = 1;
        for (std::size_t j = i + 1; j < f.size(); ++j)
            rest *= ipow(f[j].first, f[j].second);
        if (!is_2wide(f[i].first, rest).holds)
            return false;
    }
    return true;
}

// ---- search internals ----------------------------------------------------

namespace detail {

// A recorded optimum: exact value, then witness length, then the canonical
// multiset word for dense tie-breaking.
struct Incumbent {
    bool has = false;
    Rational value;
    std::int64_t len = 0;
    std::vector<std::int64_t> word; // chosen candidate/block ids in DFS order
};

// Best value shared between branch workers. Reads are racy-by-snapshot but
// only strictly worse subtrees are pruned, so the set of optima found per
// branch is unaffected by timing.
struct SharedBound {
    std::mutex mu;
    bool has = false;
    Rational value;

    void improve(const Rational& v) {
        std::lock_guard<std::mutex> lk(mu);
        if (!has || v > value) {
            has = true;
            value = v;
        }
    }
    std::optional<Rational> snapshot() {
        std::lock_guard<std::mutex> lk(mu);
        if (!has)
            return std::nullopt;
        return value;
    }
};

// Candidate table for element-wise zero-sum-free search: nonzero elements
// ordered by (order descending, linear index ascending), with per-position
// weights and suffix maxima for the admissible bound.
struct ZsfProblem {
    GroupSpec G;
    AddTable tab;
    WeightFunction w;
    std::vector<std::int64_t> cand;
    std::vector<Rational> wcand;
    std::vector<Rational> suffix_wmax; // non-increasing in position
    Rational close_wmax;               // best closing-element weight
    bool closing;                      // evaluate Z * (-sigma(Z)) instead of Z

    ZsfProblem(const GroupSpec& g, const WeightFunction& weight, bool close,
               std::int64_t cap)
        : G(g), tab(g, cap), w(weight), closing(close) {
        std::vector<std::pair<std::int64_t, std::int64_t>> order_idx;
        for (std::int64_t i = 1; i < G.size(); ++i)
            order_idx.push_back({G.order_of_index(i), i});
        std::sort(order_idx.begin(), order_idx.end(), [](const auto& a, const auto& b) {
            if (a.first != b.first)
                return a.first > b.first;
            return a.second < b.second;
        });
        for (auto [ord, i] : order_idx) {
            cand.push_back(i);
            wcand.push_back(w(ord));
        }
        suffix_wmax.resize(cand.size());
        Rational m;
        for (std::size_t p = cand.size(); p-- > 0;) {
            m = (p + 1 == cand.size()) ? wcand[p] : std::max(m, wcand[p], std::less<>{});
            suffix_wmax[p] = m;
        }
        close_wmax = cand.empty() ? Rational(0) : suffix_wmax[0];
    }

    Sequence word_to_sequence(const std::vector<std::int64_t>& word) const {
        Sequence s(G);
        for (std::int64_t p : word)
            s.add(cand[p], 1);
        return s;
    }
};

// Depth-first search over zero-sum-free multisets in candidate order.
// Plain mode keeps the first optimum in DFS order; dense mode keeps every
// (max value, min length) optimum. Pruning is strict (only provably worse
// subtrees are cut), which makes the result independent of bound timing.
class ZsfSearch {
public:
    ZsfSearch(const ZsfProblem& prob, bool dense, SharedBound* shared)
        : prob_(prob), dense_(dense), shared_(shared) {}

    Incumbent best;
    std::vector<std::vector<std::int64_t>> dense_words;
    std::uint64_t nodes = 0;

    void run_root() {
        std::vector<std::int64_t> word;
        node(word, Bitset256{}, 0, Rational(0), 0);
    }

    // Explore the subtree rooted at first move p0.
    void run_branch(std::int64_t p0) {
        Bitset256 reach;
        prob_.tab.insert(reach, prob_.cand[p0]);
        if (reach.test(0))
            return;
        std::vector<std::int64_t> word{p0};
        dfs(word, reach, prob_.cand[p0], prob_.wcand[p0], 1, p0);
    }

    void run_all() {
        run_root();
        for (std::size_t p = 0; p < prob_.cand.size(); ++p)
            run_branch(static_cast<std::int64_t>(p));
    }

private:
    void dfs(std::vector<std::int64_t>& word, const Bitset256& reach, std::int64_t sig,
             const Rational& value, std::int64_t len, std::int64_t minpos) {
        node(word, reach, sig, value, len);
        std::int64_t capacity = (prob_.G.size() - 1) - reach.count();
        if (capacity <= 0)
            return;
        refresh_floor();
        for (std::size_t p = minpos; p < prob_.cand.size(); ++p) {
            Rational ub = value + Rational(capacity) * prob_.suffix_wmax[p];
            if (prob_.closing)
                ub += prob_.close_wmax;
            if (!admit(ub, len))
                break; // suffix_wmax is non-increasing, later p only worse
            Bitset256 next = reach;
            prob_.tab.insert(next, prob_.cand[p]);
            if (next.test(0))
                continue;
            word.push_back(static_cast<std::int64_t>(p));
            dfs(word, next, prob_.G.index_add(sig, prob_.cand[p]), value + prob_.wcand[p],
                len + 1, static_cast<std::int64_t>(p));
            word.pop_back();
        }
    }

    void node(std::vector<std::int64_t>& word, const Bitset256&, std::int64_t sig,
              const Rational& value, std::int64_t len) {
        ++nodes;
        if (!prob_.closing) {
            record(value, len, word, std::nullopt);
        } else if (len > 0) {
            std::int64_t g = prob_.G.index_neg(sig);
            record(value + prob_.w(prob_.G.order_of_index(g)), len + 1, word, g);
        }
    }

    void record(const Rational& value, std::int64_t len,
                const std::vector<std::int64_t>& word, std::optional<std::int64_t> close) {
        bool better = !best.has || value > best.value ||
                      (dense_ && value == best.value && len < best.len);
        bool tie = dense_ && best.has && value == best.value && len == best.len;
        if (!better && !tie)
            return;
        std::vector<std::int64_t> full = word;
        if (close)
            full.push_back(~*close); // closing element marker: stores ~index
        if (better) {
            best.has = true;
            best.value = value;
            best.len = len;
            best.word = full;
            if (dense_) {
                dense_words.clear();
                dense_words.push_back(full);
            }
            if (shared_)
                shared_->improve(value);
            floor_ = best.value;
            floor_has_ = true;
        } else {
            dense_words.push_back(full);
        }
    }

    // A subtree survives unless its bound is strictly below the incumbent
    // value, or (dense) it can only tie in value with longer witnesses.
    bool admit(const Rational& ub, std::int64_t len) {
        if (!floor_has_)
            return true;
        if (ub < floor_)
            return false;
        if (dense_ && best.has && ub == best.value && len + 1 > best.len)
            return false;
        return true;
    }

    void refresh_floor() {
        if (!shared_ || (++ticks_ & 0xFF) != 0)
            return;
        if (auto v = shared_->snapshot()) {
            if (!floor_has_ || *v > floor_) {
                floor_ = *v;
                floor_has_ = true;
            }
        }
    }

    const ZsfProblem& prob_;
    bool dense_;
    SharedBound* shared_;
    Rational floor_;
    bool floor_has_ = false;
    std::uint64_t ticks_ = 0;
};

// Reconstruct a sequence from a search word. Entries >= 0 are candidate
// positions; a ~index entry is the closing element appended by K-type
// objectives.
inline Sequence zsf_word_to_sequence(const ZsfProblem& prob,
                                     const std::vector<std::int64_t>& word) {
    Sequence s(prob.G);
    for (std::int64_t e : word)
        s.add(e >= 0 ? prob.cand[e] : ~e, 1);
    return s;
}

struct ZsfRun {
    Incumbent best;
    std::vector<std::vector<std::int64_t>> dense_words;
    std::uint64_t nodes = 0;
};

inline ZsfRun run_zsf_search(const ZsfProblem& prob, bool dense, int threads) {
    ZsfRun out;
    SharedBound shared;

    ZsfSearch root(prob, dense, &shared);
    root.run_root();
    out.best = root.best;
    out.dense_words = root.dense_words;
    out.nodes = root.nodes;

    std::size_t nbranches = prob.cand.size();
    int nworkers = std::max(1, std::min<int>(threads, static_cast<int>(nbranches)));
    std::vector<Incumbent> bb(nbranches);
    std::vector<std::vector<std::vector<std::int64_t>>> bd(nbranches);
    std::vector<std::uint64_t> bn(nbranches, 0);

    auto work = [&](std::size_t b) {
        ZsfSearch s(prob, dense, &shared);
        s.run_branch(static_cast<std::int64_t>(b));
        bb[b] = std::move(s.best);
        bd[b] = std::move(s.dense_words);
        bn[b] = s.nodes;
    };

    if (out.best.has)
        shared.improve(out.best.value);

    if (nworkers <= 1) {
        for (std::size_t b = 0; b < nbranches; ++b)
            work(b);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < nworkers; ++t)
            pool.emplace_back([&] {
                for (;;) {
                    std::size_t b = next.fetch_add(1);
                    if (b >= nbranches)
                        return;
                    work(b);
                }
            });
        for (auto& th : pool)
            th.join();
    }

    for (std::size_t b = 0; b < nbranches; ++b) {
        out.nodes += bn[b];
        const Incumbent& cand = bb[b];
        if (!cand.has)
            continue;
        bool better = !out.best.has || cand.value > out.best.value ||
                      (dense && cand.value == out.best.value && cand.len < out.best.len);
        bool tie = dense && out.best.has && cand.value == out.best.value &&
                   cand.len == out.best.len;
        if (better) {
            out.best = cand;
            out.dense_words.clear();
            if (dense)
                out.dense_words = bd[b];
        } else if (tie) {
            for (auto& w : bd[b])
                out.dense_words.push_back(w);
        }
    }
    return out;
}

} // namespace detail

// max cross_number(S, w) over zero-sum free S.
inline SolveResult solve_little_k(const GroupSpec& G,
                                  const WeightFunction& w = WeightFunction::cross(),
                                  const SolveOptions& opts = {}) {
    auto t0 = std::chrono::steady_clock::now();
    detail::ZsfProblem prob(G, w, /*closing=*/false, opts.group_cap);
    auto run = detail::run_zsf_search(prob, false, opts.threads);
    SolveResult res;
    res.objective = Objective::little_k;
    res.weight = w;
    res.value = run.best.has ? run.best.value : Rational(0);
    res.witness = run.best.has ? detail::zsf_word_to_sequence(prob, run.best.word)
                               : Sequence(G);
    res.nodes_explored = run.nodes;
    res.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    if (opts.validate_witness && !is_zero_sum_free(res.witness, opts.group_cap))
        throw std::logic_error("solve_little_k: witness failed validation");
    return res;
}

// max k(S) over irreducible S: search zero-sum free Z scored as Z*(-sigma(Z)).
inline SolveResult solve_big_K(const GroupSpec& G, const SolveOptions& opts = {}) {
    auto t0 = std::chrono::steady_clock::now();
    auto w = WeightFunction::cross();
    detail::ZsfProblem prob(G, w, /*closing=*/true, opts.group_cap);
    auto run = detail::run_zsf_search(prob, false, opts.threads);
    SolveResult res;
    res.objective = Objective::big_K;
    res.weight = w;
    res.value = run.best.has ? run.best.value : Rational(0);
    res.witness = run.best.has ? detail::zsf_word_to_sequence(prob, run.best.word)
                               : Sequence(G);
    res.nodes_explored = run.nodes;
    res.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    if (opts.validate_witness && !res.witness.empty() &&
        !is_irreducible(res.witness, opts.group_cap))
        throw std::logic_error("solve_big_K: witness failed validation");
    return res;
}

// max |S| over irreducible S.
inline SolveResult solve_davenport(const GroupSpec& G, const SolveOptions& opts = {}) {
    auto t0 = std::chrono::steady_clock::now();
    auto w = WeightFunction::length();
    detail::ZsfProblem prob(G, w, /*closing=*/true, opts.group_cap);
    auto run = detail::run_zsf_search(prob, false, opts.threads);
    SolveResult res;
    res.objective = Objective::davenport;
    res.weight = w;
    res.value = run.best.has ? run.best.value : Rational(0);
    res.witness = run.best.has ? detail::zsf_word_to_sequence(prob, run.best.word)
                               : Sequence(G);
    res.nodes_explored = run.nodes;
    res.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    if (opts.validate_witness && !res.witness.empty() &&
        !is_irreducible(res.witness, opts.group_cap))
        throw std::logic_error("solve_davenport: witness failed validation");
    return res;
}

namespace detail {

// Precomputed irreducible blocks for the UFIS search: canonical order,
// sumset bits, objective value, and the suffix maximum of value per fresh
// sumset cell (the admissible bound for remaining blocks).
struct BlockProblem {
    GroupSpec G;
    AddTable tab;
    WeightFunction w;
    std::vector<Sequence> blocks;
    std::vector<Bitset256> bits;   // Sigma(U), bit 0 set
    std::vector<Bitset256> nb;     // Sigma(U) minus 0; must be disjoint from state
    std::vector<Rational> value;
    std::vector<std::int64_t> len;
    std::vector<Rational> suffix_density; // non-increasing

    BlockProblem(const GroupSpec& g, const WeightFunction& weight, std::int64_t cap)
        : G(g), tab(g, cap), w(weight) {
        blocks = enumerate_irreducibles(G, G.size(), cap);
        for (const auto& u : blocks) {
            Bitset256 b = sumset_bits(u, cap);
            bits.push_back(b);
            b.w[0] &= ~std::uint64_t(1);
            nb.push_back(b);
            value.push_back(u.cross_number(w));
            len.push_back(u.length());
        }
        suffix_density.resize(blocks.size());
        Rational m;
        for (std::size_t j = blocks.size(); j-- > 0;) {
            Rational d = value[j] / Rational(std::max<std::int64_t>(1, nb[j].count()));
            m = (j + 1 == blocks.size()) ? d : std::max(m, d, std::less<>{});
            suffix_density[j] = m;
        }
    }

    Sequence word_to_sequence(const std::vector<std::int64_t>& word) const {
        Sequence s(G);
        for (std::int64_t j : word)
            s = mul(s, blocks[j]);
        return s;
    }
};

// DFS over UFISes as canonical non-decreasing words of irreducible blocks.
// A block is addable when its nonzero sumset misses the current sumset
// (Gao's criterion), so every node is itself a UFIS; uniqueness of
// factorization makes each UFIS correspond to exactly one word.
class BlockSearch {
public:
    BlockSearch(const BlockProblem& prob, bool dense, SharedBound* shared)
        : prob_(prob), dense_(dense), shared_(shared) {}

    Incumbent best;
    std::vector<std::vector<std::int64_t>> dense_words;
    std::uint64_t nodes = 0;

    void run_root() {
        std::vector<std::int64_t> word;
        visit(word, Rational(0), 0);
    }

    void run_branch(std::int64_t j0) {
        Bitset256 state = prob_.bits[j0];
        std::vector<std::int64_t> word{j0};
        dfs(word, state, prob_.value[j0], prob_.len[j0], j0);
    }

private:
    void dfs(std::vector<std::int64_t>& word, const Bitset256& state, const Rational& value,
             std::int64_t len, std::int64_t minj) {
        visit(word, value, len);
        std::int64_t free = (prob_.G.size() - 1) - (state.count() - 1);
        if (free <= 0)
            return;
        refresh_floor();
        for (std::size_t j = minj; j < prob_.blocks.size(); ++j) {
            Rational ub = value + Rational(free) * prob_.suffix_density[j];
            if (!admit(ub, len))
                break;
            if ((prob_.nb[j] & state).any())
                continue;
            Bitset256 next = state;
            for (const auto& [idx, m] : prob_.blocks[j].terms())
                for (std::int64_t c = 0; c < m; ++c)
                    prob_.tab.insert(next, idx);
            word.push_back(static_cast<std::int64_t>(j));
            dfs(word, next, value + prob_.value[j], len + prob_.len[j],
                static_cast<std::int64_t>(j));
            word.pop_back();
        }
    }

    void visit(std::vector<std::int64_t>& word, const Rational& value, std::int64_t len) {
        ++nodes;
        bool better = !best.has || value > best.value ||
                      (dense_ && value == best.value && len < best.len);
        bool tie = dense_ && best.has && value == best.value && len == best.len;
        if (!better && !tie)
            return;
        if (better) {
            best.has = true;
            best.value = value;
            best.len = len;
            best.word = word;
            if (dense_) {
                dense_words.clear();
                dense_words.push_back(word);
            }
            if (shared_)
                shared_->improve(value);
            floor_ = best.value;
            floor_has_ = true;
        } else {
            dense_words.push_back(word);
        }
    }

    bool admit(const Rational& ub, std::int64_t len) {
        if (!floor_has_)
            return true;
        if (ub < floor_)
            return false;
        if (dense_ && best.has && ub == best.value && len >= best.len)
            return false;
        return true;
    }

    void refresh_floor() {
        if (!shared_ || (++ticks_ & 0xFF) != 0)
            return;
        if (auto v = shared_->snapshot()) {
            if (!floor_has_ || *v > floor_) {
                floor_ = *v;
                floor_has_ = true;
            }
        }
    }

    const BlockProblem& prob_;
    bool dense_;
    SharedBound* shared_;
    Rational floor_;
    bool floor_has_ = false;
    std::uint64_t ticks_ = 0;
};

struct BlockRun {
    Incumbent best;
    std::vector<std::vector<std::int64_t>> dense_words;
    std::uint64_t nodes = 0;
};

inline BlockRun run_block_search(const BlockProblem& prob, bool dense, int threads) {
    BlockRun out;
    SharedBound shared;

    BlockSearch root(prob, dense, &shared);
    root.run_root();
    out.best = root.best;
    out.dense_words = root.dense_words;
    out.nodes = root.nodes;
    if (out.best.has)
        shared.improve(out.best.value);

    std::size_t nbranches = prob.blocks.size();
    int nworkers = std::max(1, std::min<int>(threads, static_cast<int>(nbranches)));
    std::vector<Incumbent> bb(nbranches);
    std::vector<std::vector<std::vector<std::int64_t>>> bd(nbranches);
    std::vector<std::uint64_t> bn(nbranches, 0);

    auto work = [&](std::size_t b) {
        BlockSearch s(prob, dense, &shared);
        s.run_branch(static_cast<std::int64_t>(b));
        bb[b] = std::move(s.best);
        bd[b] = std::move(s.dense_words);
        bn[b] = s.nodes;
    };

    if (nworkers <= 1) {
        for (std::size_t b = 0; b < nbranches; ++b)
            work(b);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < nworkers; ++t)
            pool.emplace_back([&] {
                for (;;) {
                    std::size_t b = next.fetch_add(1);
                    if (b >= nbranches)
                        return;
                    work(b);
                }
            });
        for (auto& th : pool)
            th.join();
    }

    for (std::size_t b = 0; b < nbranches; ++b) {
        out.nodes += bn[b];
        const Incumbent& cand = bb[b];
        if (!cand.has)
            continue;
        bool better = !out.best.has || cand.value > out.best.value ||
                      (dense && cand.value == out.best.value && cand.len < out.best.len);
        bool tie = dense && out.best.has && cand.value == out.best.value &&
                   cand.len == out.best.len;
        if (better) {
            out.best = cand;
            out.dense_words.clear();
            if (dense)
                out.dense_words = bd[b];
        } else if (tie) {
            for (auto& w : bd[b])
                out.dense_words.push_back(w);
        }
    }
    return out;
}

} // namespace detail

// max cross_number(S, w) over unique factorization sequences S.
inline SolveResult solve_K1(const GroupSpec& G,
                            const WeightFunction& w = WeightFunction::cross(),
                            const SolveOptions& opts = {}) {
    auto t0 = std::chrono::steady_clock::now();
    detail::BlockProblem prob(G, w, opts.group_cap);
    auto run = detail::run_block_search(prob, false, opts.threads);
    SolveResult res;
    res.objective = Objective::K1;
    res.weight = w;
    res.value = run.best.has ? run.best.value : Rational(0);
    res.witness = run.best.has ? prob.word_to_sequence(run.best.word) : Sequence(G);
    for (std::int64_t j : run.best.word)
        res.blocks.push_back(prob.blocks[j]);
    res.nodes_explored = run.nodes;
    res.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    if (opts.validate_witness) {
        if (res.witness.length() <= opts.oracle_len_cap) {
            if (!is_ufis(res.witness, opts.group_cap, opts.oracle_len_cap))
                throw std::logic_error("solve_K1: witness failed factorization count");
        } else if (res.witness.sigma_index() != 0 ||
                   !divides_ufis(res.witness, opts.group_cap)) {
            throw std::logic_error("solve_K1: witness failed UFIS criterion");
        }
    }
    return res;
}

// max |S| over unique factorization sequences S.
inline SolveResult solve_narkiewicz(const GroupSpec& G, const SolveOptions& opts = {}) {
    SolveResult res = solve_K1(G, WeightFunction::length(), opts);
    res.objective = Objective::narkiewicz;
    return res;
}

enum class DenseKind { zsf, ufis };

// All witnesses of the lexicographic optimum (max cross number, then min
// length), sorted canonically.
inline std::vector<Sequence> dense_witnesses_all(const GroupSpec& G, DenseKind kind,
                                                 const SolveOptions& opts = {}) {
    std::vector<Sequence> out;
    if (kind == DenseKind::zsf) {
        detail::ZsfProblem prob(G, WeightFunction::cross(), false, opts.group_cap);
        auto run = detail::run_zsf_search(prob, true, 1);
        for (const auto& word : run.dense_words)
            out.push_back(detail::zsf_word_to_sequence(prob, word));
    } else {
        detail::BlockProblem prob(G, WeightFunction::cross(), opts.group_cap);
        auto run = detail::run_block_search(prob, true, 1);
        for (const auto& word : run.dense_words)
            out.push_back(prob.word_to_sequence(word));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Lexicographically smallest dense witness, with search statistics.
inline SolveResult dense_witness(const GroupSpec& G, DenseKind kind,
                                 const SolveOptions& opts = {}) {
    auto t0 = std::chrono::steady_clock::now();
    SolveResult res;
    res.objective = kind == DenseKind::zsf ? Objective::dense_zsf : Objective::dense_ufis;
    res.weight = WeightFunction::cross();
    if (kind == DenseKind::zsf) {
        detail::ZsfProblem prob(G, WeightFunction::cross(), false, opts.group_cap);
        auto run = detail::run_zsf_search(prob, true, 1);
        res.nodes_explored = run.nodes;
        std::vector<Sequence> all;
        for (const auto& word : run.dense_words)
            all.push_back(detail::zsf_word_to_sequence(prob, word));
        std::sort(all.begin(), all.end());
        res.witness = all.empty() ? Sequence(G) : all.front();
        res.value = run.best.has ? run.best.value : Rational(0);
    } else {
        detail::BlockProblem prob(G, WeightFunction::cross(), opts.group_cap);
        auto run = detail::run_block_search(prob, true, 1);
        res.nodes_explored = run.nodes;
        std::vector<Sequence> all;
        for (const auto& word : run.dense_words)
            all.push_back(prob.word_to_sequence(word));
        std::sort(all.begin(), all.end());
        res.witness = all.empty() ? Sequence(G) : all.front();
        res.value = run.best.has ? run.best.value : Rational(0);
    }
    res.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    return res;
}

} // namespace zslab
