#include "zslab/sumset.hpp"
#include "zslab/oracle.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

using namespace zslab;

namespace {

Sequence seq(const GroupSpec& G, std::initializer_list<std::int64_t> idxs) {
    Sequence s(G);
    for (auto i : idxs)
        s.add(i, 1);
    return s;
}

std::set<std::int64_t> as_index_set(const std::vector<GroupElement>& v, const GroupSpec& G) {
    std::set<std::int64_t> out;
    for (const auto& g : v)
        out.insert(G.index_of(g));
    return out;
}

} // namespace

TEST_CASE("sumset basics over C3") {
    GroupSpec c3 = parse_group("3");
    CHECK(as_index_set(sumset(seq(c3, {1})), c3) == std::set<std::int64_t>{1});
    CHECK(as_index_set(sumset(seq(c3, {1, 2})), c3) == std::set<std::int64_t>{0, 1, 2});
    CHECK(as_index_set(sumset(seq(c3, {1, 1})), c3) == std::set<std::int64_t>{1, 2});
    CHECK(sumset(Sequence(c3)).empty());
}

TEST_CASE("zero-sum-free tests") {
    GroupSpec c5 = parse_group("5");
    Sequence g4(c5);
    g4.add(1, 4);
    CHECK(is_zero_sum_free(g4));
    Sequence g5(c5);
    g5.add(1, 5);
    CHECK_FALSE(is_zero_sum_free(g5));
    CHECK(is_zero_sum_free(Sequence(c5)));

    GroupSpec G = parse_group("4,3");
    Sequence s(G);
    s.add(GroupElement{{1, 0}}, 3);
    s.add(GroupElement{{0, 1}}, 1);
    s.add(GroupElement{{0, 2}}, 1);
    CHECK_FALSE(is_zero_sum_free(s)); // (0,1)+(0,2) = 0
}

TEST_CASE("full sumset") {
    GroupSpec c3 = parse_group("3");
    CHECK(has_full_sumset(seq(c3, {1, 2})));
    CHECK_FALSE(has_full_sumset(seq(c3, {1})));

    GroupSpec c4 = parse_group("4");
    CHECK_FALSE(has_full_sumset(seq(c4, {1, 1}))); // Sigma = {1,2}, misses 3
}

TEST_CASE("is_zero_sum") {
    GroupSpec c3 = parse_group("3");
    Sequence g3(c3);
    g3.add(1, 3);
    CHECK(is_zero_sum(g3));
    CHECK_FALSE(is_zero_sum(seq(c3, {1})));
    CHECK(is_zero_sum(Sequence(c3))); // sigma(empty) = 0; length check is the caller's
}

TEST_CASE("cap enforcement") {
    GroupSpec big = parse_group("128");
    Sequence s(big);
    s.add(1, 1);
    CHECK_THROWS_AS(sumset(s), CapExceeded);
    CHECK_NOTHROW(sumset(s, 128));
}

TEST_CASE("oracle equivalence: DP sumset equals subset enumeration") {
    std::mt19937_64 eng(123);
    std::vector<GroupSpec> groups{parse_group("12"), parse_group("2,2,2"), parse_group("9"),
                                  parse_group("6,2"), parse_group("4,4")};
    for (int rep = 0; rep < 400; ++rep) {
        const auto& G = groups[rep % groups.size()];
        Sequence s(G);
        std::int64_t len = eng() % 13; // |S| <= 12
        for (std::int64_t i = 0; i < len; ++i)
            s.add(1 + static_cast<std::int64_t>(eng() % (G.size() - 1)), 1);
        auto dp = sumset_bits(s);
        auto naive = oracle::naive_sumset(s);
        std::set<std::int64_t> dpset;
        dp.for_each([&](int i) { dpset.insert(i); });
        CHECK(dpset == naive);
        CHECK(is_zero_sum_free(s) == oracle::naive_is_zero_sum_free(s));
    }
}

TEST_CASE("monotonicity: T | S implies Sigma(T) within Sigma(S)") {
    // exhaustive over words of length <= 5 from a fixed alphabet, |G| <= 12
    GroupSpec G = parse_group("12");
    auto seqs = oracle::all_multisets(G, 5);
    for (const auto& s : seqs) {
        auto bs = sumset_bits(s);
        for (const auto& [idx, m] : s.terms()) {
            Sequence t = s;
            t.add(idx, -1);
            auto bt = sumset_bits(t);
            bool subset = true;
            bt.for_each([&](int i) {
                if (!bs.test(i))
                    subset = false;
            });
            CHECK(subset);
        }
    }
}

TEST_CASE("zero-sum-free sequences have at least |S| subsums") {
    GroupSpec G = parse_group("2,2,2");
    for (const auto& s : oracle::all_zsf_sequences(G, 6))
        CHECK(sumset_bits(s).count() >= s.length());
    GroupSpec c8 = parse_group("8");
    for (const auto& s : oracle::all_zsf_sequences(c8, 7))
        CHECK(sumset_bits(s).count() >= s.length());
}

TEST_CASE("SumsetState insertion is monotone and snapshot-copyable") {
    GroupSpec G = parse_group("6");
    SumsetState st(G);
    CHECK_FALSE(st.zero_reachable());
    st.insert(1);
    SumsetState snap = st; // value snapshot
    st.insert(5);
    CHECK(st.zero_reachable()); // 1 + 5 = 0 mod 6
    CHECK_FALSE(snap.zero_reachable());
    CHECK(snap.count() == 1);
}
