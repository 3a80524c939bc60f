#include "zslab/sequence.hpp"
#include "zslab/group.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace zslab;

namespace {

Sequence seq(const GroupSpec& G, std::initializer_list<std::int64_t> idxs) {
    Sequence s(G);
    for (auto i : idxs)
        s.add(i, 1);
    return s;
}

// seeded random multiset over G of length <= max_len
Sequence random_sequence(const GroupSpec& G, std::mt19937_64& eng, std::int64_t max_len) {
    Sequence s(G);
    std::int64_t len = eng() % (max_len + 1);
    for (std::int64_t i = 0; i < len; ++i)
        s.add(1 + static_cast<std::int64_t>(eng() % (G.size() - 1)), 1);
    return s;
}

} // namespace

TEST_CASE("length and sigma") {
    GroupSpec c2 = parse_group("2");
    CHECK(Sequence(c2).length() == 0);
    CHECK(seq(c2, {1, 1}).length() == 2);

    GroupSpec c5 = parse_group("5");
    Sequence g2h3(c5);
    g2h3.add(1, 2);
    g2h3.add(2, 3);
    CHECK(g2h3.length() == 5);

    // sigma(g^p) = 0 over C_p
    Sequence gp(c5);
    gp.add(1, 5);
    CHECK(gp.sigma() == c5.zero());

    GroupSpec c3 = parse_group("3");
    CHECK(seq(c3, {1, 2}).sigma() == c3.zero());

    GroupSpec G = parse_group("4,3");
    Sequence s(G, {{GroupElement{{1, 0}}, 1}, {GroupElement{{1, 1}}, 1}});
    CHECK(s.sigma() == GroupElement{{2, 1}});

    CHECK(Sequence(parse_group("1")).sigma().coords.empty());
}

TEST_CASE("identity element is rejected") {
    GroupSpec c4 = parse_group("4");
    Sequence s(c4);
    CHECK_THROWS_AS(s.add(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(s.add(c4.zero(), 1), std::invalid_argument);
}

TEST_CASE("cross number") {
    GroupSpec c5 = parse_group("5");
    Sequence s(c5);
    s.add(1, 4); // g^(p-1)
    CHECK(s.cross_number() == Rational(4, 5));
    CHECK(Sequence(c5).cross_number() == Rational(0));

    // dyadic weight: f(12) = f(4) f(3) = (1/2)^2 (1/4) = 1/16
    GroupSpec G = parse_group("4,3");
    Sequence t(G, {{GroupElement{{1, 1}}, 1}}); // order 12
    CHECK(t.cross_number(WeightFunction::dyadic()) == Rational(1, 16));
    CHECK(WeightFunction::dyadic()(12) == Rational(1, 16));
    CHECK(WeightFunction::dyadic()(2) == Rational(1, 2));
    CHECK(WeightFunction::dyadic()(3) == Rational(1, 4));
    CHECK(WeightFunction::dyadic()(5) == Rational(1, 8));

    auto cust = WeightFunction::custom({{2, Rational(7)}});
    Sequence u(G, {{GroupElement{{2, 0}}, 1}}); // order 2
    CHECK(u.cross_number(cust) == Rational(7));
    CHECK_THROWS_AS(t.cross_number(cust), std::invalid_argument); // order 12 missing
}

TEST_CASE("gcd, divides, mul, div") {
    GroupSpec c7 = parse_group("7");
    Sequence g2(c7), g3(c7);
    g2.add(1, 2);
    g3.add(1, 3);
    CHECK(gcd_seq(g2, g3) == g2);
    CHECK(gcd_seq(g2, Sequence(c7)).empty());
    CHECK(gcd_seq(seq(c7, {1, 2}), seq(c7, {2, 3})) == seq(c7, {2}));

    CHECK(divides(seq(c7, {1}), g2));
    CHECK_FALSE(divides(g2, seq(c7, {1})));
    CHECK(div(mul(g2, g3), g3) == g2);

    Sequence g2h(c7);
    g2h.add(1, 2);
    g2h.add(2, 1);
    CHECK(div(g2h, seq(c7, {1})) == seq(c7, {1, 2}));
    CHECK_THROWS_AS(div(seq(c7, {1}), g2), std::invalid_argument);

    GroupSpec c5 = parse_group("5");
    CHECK_THROWS_AS(gcd_seq(g2, Sequence(c5)), std::invalid_argument);
}

TEST_CASE("amalgamation") {
    GroupSpec c4 = parse_group("4");
    Sequence s = seq(c4, {1, 1, 3});
    Sequence t = seq(c4, {1, 1});
    Sequence expect(c4);
    expect.add(2, 1);
    expect.add(3, 1);
    CHECK(amalgamate(s, t) == expect);

    // a length-1 subsequence amalgamates to the same multiset
    CHECK(amalgamate(s, seq(c4, {3})) == s);

    // sigma(T) = 0 is rejected
    CHECK_THROWS_AS(amalgamate(seq(c4, {1, 3}), seq(c4, {1, 3})), std::invalid_argument);
    CHECK_THROWS_AS(amalgamate(s, seq(c4, {2})), std::invalid_argument); // T does not divide S

    // order drop 12 -> 2 over C4+C3
    GroupSpec G = parse_group("4,3");
    Sequence big(G, {{GroupElement{{1, 1}}, 1}, {GroupElement{{1, 2}}, 1},
                     {GroupElement{{3, 0}}, 1}});
    Sequence part(G, {{GroupElement{{1, 1}}, 1}, {GroupElement{{1, 2}}, 1}});
    Sequence out = amalgamate(big, part);
    Sequence expect2(G, {{GroupElement{{2, 0}}, 1}, {GroupElement{{3, 0}}, 1}});
    CHECK(out == expect2);
    CHECK(G.order_of(GroupElement{{1, 1}}) == 12);
    CHECK(G.order_of(GroupElement{{2, 0}}) == 2);
}

TEST_CASE("order histogram and cross terms") {
    GroupSpec c2 = parse_group("2");
    Sequence g3(c2);
    g3.add(1, 3);
    auto h = order_histogram(g3);
    REQUIRE(h.size() == 1);
    CHECK(h.at(2) == 3);
    CHECK(order_histogram(Sequence(c2)).empty());

    GroupSpec G = parse_group("4,3");
    Sequence s(G, {{GroupElement{{1, 0}}, 1}, {GroupElement{{2, 0}}, 1},
                   {GroupElement{{0, 1}}, 1}});
    auto h2 = order_histogram(s);
    CHECK(h2.at(4) == 1);
    CHECK(h2.at(2) == 1);
    CHECK(h2.at(3) == 1);

    CHECK(cross_terms(g3).empty()); // p-group: never a cross term
    Sequence mixed(G, {{GroupElement{{2, 0}}, 1}, {GroupElement{{1, 1}}, 1}});
    Sequence expect(G, {{GroupElement{{1, 1}}, 1}});
    CHECK(cross_terms(mixed) == expect);
}

TEST_CASE("property: cross_number with length weight equals length") {
    std::mt19937_64 eng(20260809);
    std::vector<GroupSpec> groups{parse_group("6"), parse_group("2,2,2"), parse_group("9,3"),
                                  parse_group("8,4,2"), parse_group("5,5")};
    for (int i = 0; i < 1000; ++i) {
        const auto& G = groups[i % groups.size()];
        Sequence s = random_sequence(G, eng, 10);
        CHECK(s.cross_number(WeightFunction::length()) == Rational(s.length()));
    }
}

TEST_CASE("property: cross_number is additive over concatenation") {
    std::mt19937_64 eng(42);
    GroupSpec G = parse_group("12,2");
    for (int i = 0; i < 300; ++i) {
        Sequence a = random_sequence(G, eng, 8);
        Sequence b = random_sequence(G, eng, 8);
        for (auto w : {WeightFunction::cross(), WeightFunction::length(),
                       WeightFunction::dyadic()})
            CHECK(mul(a, b).cross_number(w) == a.cross_number(w) + b.cross_number(w));
    }
}

TEST_CASE("property: gcd divides both, divides is a partial order") {
    std::mt19937_64 eng(7);
    GroupSpec G = parse_group("6,2");
    std::vector<Sequence> pool;
    for (int i = 0; i < 60; ++i)
        pool.push_back(random_sequence(G, eng, 5));
    for (const auto& a : pool) {
        CHECK(divides(a, a)); // reflexive
        for (const auto& b : pool) {
            Sequence g = gcd_seq(a, b);
            CHECK(divides(g, a));
            CHECK(divides(g, b));
            if (divides(a, b) && divides(b, a))
                CHECK(a == b); // antisymmetric on canonical form
            for (const auto& c : pool)
                if (divides(a, b) && divides(b, c))
                    CHECK(divides(a, c)); // transitive
        }
    }
}

TEST_CASE("property: amalgamation preserves sigma and never lengthens") {
    std::mt19937_64 eng(99);
    GroupSpec G = parse_group("8,3");
    int done = 0;
    while (done < 200) {
        Sequence s = random_sequence(G, eng, 8);
        if (s.empty())
            continue;
        Sequence t = random_sequence(G, eng, 3);
        if (!divides(t, s) || t.sigma_index() == 0)
            continue;
        Sequence a = amalgamate(s, t);
        CHECK(a.sigma_index() == s.sigma_index());
        CHECK(a.length() <= s.length());
        ++done;
    }
}

TEST_CASE("cross number accumulates over the common denominator exp(G)") {
    std::mt19937_64 eng(5);
    GroupSpec G = parse_group("12");
    for (int i = 0; i < 200; ++i) {
        Sequence s = random_sequence(G, eng, 9);
        // accumulate numerators over denominator exp(G) without reduction
        BigInt num = 0;
        for (const auto& [idx, m] : s.terms())
            num += BigInt(m) * (G.exponent() / G.order_of_index(idx));
        CHECK(s.cross_number() == Rational(num, BigInt(G.exponent())));
    }
}

TEST_CASE("canonical sequence ordering") {
    GroupSpec c4 = parse_group("4");
    CHECK(seq(c4, {1}) < seq(c4, {1, 1}));    // shorter first
    CHECK(seq(c4, {1, 1}) < seq(c4, {1, 2})); // then lexicographic
    CHECK(seq(c4, {1, 3}) < seq(c4, {2, 2}));
    CHECK_FALSE(seq(c4, {1, 2}) < seq(c4, {1, 2}));
}
