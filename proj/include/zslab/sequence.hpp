#pragma once

#include "zslab/group.hpp"
#include "zslab/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace zslab {

// ---- weight functions ---------------------------------------------------

// A weight assigns a Rational to each element order. cross = 1/n gives the
// cross number k(S); length = 1 gives |S|; dyadic is the totally
// multiplicative f with f(p_i) = 1/2^i on the i-th prime.
class WeightFunction {
public:
    enum class Kind { cross, length, dyadic, custom };

    static WeightFunction cross() { return WeightFunction(Kind::cross); }
    static WeightFunction length() { return WeightFunction(Kind::length); }
    static WeightFunction dyadic() { return WeightFunction(Kind::dyadic); }
    static WeightFunction custom(std::map<std::int64_t, Rational> table) {
        WeightFunction w(Kind::custom);
        w.table_ = std::move(table);
        return w;
    }

    Kind kind() const { return kind_; }

    const char* name() const {
        switch (kind_) {
        case Kind::cross: return "cross";
        case Kind::length: return "length";
        case Kind::dyadic: return "dyadic";
        default: return "custom";
        }
    }

    Rational operator()(std::int64_t order) const {
        if (order < 1)
            throw std::invalid_argument("weight: order must be >= 1");
        switch (kind_) {
        case Kind::cross:
            return Rational(1, order);
        case Kind::length:
            return Rational(1);
        case Kind::dyadic: {
            Rational f(1);
            for (auto [p, e] : factorize(order))
                f *= Rational(1, ipow(2, prime_index(p))).pow(e);
            return f;
        }
        case Kind::custom: {
            auto it = table_.find(order);
            if (it == table_.end())
                throw std::invalid_argument("custom weight: no entry for order " +
                                            std::to_string(order));
            return it->second;
        }
        }
        throw std::logic_error("unreachable");
    }

private:
    explicit WeightFunction(Kind k) : kind_(k) {}

    // 1-based position of p among all primes (2 -> 1, 3 -> 2, 5 -> 3, ...).
    static int prime_index(std::int64_t p) {
        int i = 0;
        for (std::int64_t q = 2; q <= p; ++q)
            if (is_prime(q))
                ++i;
        return i;
    }

    Kind kind_;
    std::map<std::int64_t, Rational> table_;
};

// ---- sequences ----------------------------------------------------------

// A Sequence is a finite multiset over the nonzero elements of its group;
// the multiplicity of g is the valuation v_g(S). Copies of equal elements
// are implicitly label-distinguishable (indexed-sequence semantics); the
// labels only matter when counting factorizations, which factor.hpp handles
// combinatorially.
class Sequence {
public:
    // Terms are (linear index, multiplicity), sorted by index, mult >= 1.
    using Terms = std::vector<std::pair<std::int64_t, std::int64_t>>;

    Sequence() = default;
    explicit Sequence(GroupSpec group) : group_(std::move(group)) {}

    Sequence(GroupSpec group, const std::vector<std::pair<GroupElement, std::int64_t>>& items)
        : group_(std::move(group)) {
        for (const auto& [g, m] : items)
            add(g, m);
    }

    const GroupSpec& group() const { return group_; }
    const Terms& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t support_size() const { return terms_.size(); }

    std::int64_t valuation(std::int64_t idx) const {
        auto it = find(idx);
        return it == terms_.end() ? 0 : it->second;
    }
    std::int64_t valuation(const GroupElement& g) const {
        return valuation(group_.index_of(g));
    }

    void add(std::int64_t idx, std::int64_t mult = 1) {
        if (mult == 0)
            return;
        if (idx == 0)
            throw std::invalid_argument("Sequence: identity element not allowed");
        if (idx < 0 || idx >= group_.size())
            throw std::invalid_argument("Sequence: element index out of range");
        auto it = std::lower_bound(terms_.begin(), terms_.end(), idx,
                                   [](const auto& t, std::int64_t i) { return t.first < i; });
        if (it != terms_.end() && it->first == idx) {
            it->second += mult;
            if (it->second < 0)
                throw std::invalid_argument("Sequence: negative multiplicity");
            if (it->second == 0)
                terms_.erase(it);
        } else {
            if (mult < 0)
                throw std::invalid_argument("Sequence: negative multiplicity");
            terms_.insert(it, {idx, mult});
        }
    }
    void add(const GroupElement& g, std::int64_t mult = 1) { add(group_.index_of(g), mult); }

    Sequence with(std::int64_t idx, std::int64_t mult = 1) const {
        Sequence s = *this;
        s.add(idx, mult);
        return s;
    }

    // |S| = sum of valuations.
    std::int64_t length() const {
        std::int64_t n = 0;
        for (const auto& [idx, m] : terms_)
            n += m;
        return n;
    }

    // sigma(S); the empty sequence sums to 0.
    GroupElement sigma() const { return group_.element_at(sigma_index()); }

    std::int64_t sigma_index() const {
        std::int64_t s = 0;
        for (const auto& [idx, m] : terms_)
            for (std::int64_t i = 0; i < m; ++i)
                s = group_.index_add(s, idx);
        return s;
    }

    bool is_zero_sum() const { return sigma_index() == 0; }

    // Sum of v_g(S) * w(ord(g)), exact.
    Rational cross_number(const WeightFunction& w = WeightFunction::cross()) const {
        Rational total;
        for (const auto& [idx, m] : terms_)
            total += Rational(m) * w(group_.order_of_index(idx));
        return total;
    }

    friend bool operator==(const Sequence& a, const Sequence& b) {
        return a.group_ == b.group_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Sequence& a, const Sequence& b) { return !(a == b); }

    // Canonical order: shorter first, then lexicographic on the sorted
    // element-index word. Used for witness tie-breaking and enumeration.
    friend bool operator<(const Sequence& a, const Sequence& b) {
        std::int64_t la = a.length(), lb = b.length();
        if (la != lb)
            return la < lb;
        auto ia = a.terms_.begin();
        auto ib = b.terms_.begin();
        while (ia != a.terms_.end() && ib != b.terms_.end()) {
            if (ia->first != ib->first)
                return ia->first < ib->first;
            if (ia->second != ib->second)
                return ia->second > ib->second; // more copies of smaller element first
            ++ia;
            ++ib;
        }
        return false;
    }

    std::string str() const {
        if (terms_.empty())
            return "(empty)";
        std::string s;
        for (const auto& [idx, m] : terms_) {
            if (!s.empty())
                s += "*";
            const auto g = group_.element_at(idx);
            std::string coord;
            for (std::size_t j = 0; j < g.coords.size(); ++j)
                coord += (j ? "," : "") + std::to_string(g.coords[j]);
            s += "(" + coord + ")";
            if (m > 1)
                s += "^" + std::to_string(m);
        }
        return s;
    }

private:
    Terms::const_iterator find(std::int64_t idx) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), idx,
                                   [](const auto& t, std::int64_t i) { return t.first < i; });
        return (it != terms_.end() && it->first == idx) ? it : terms_.end();
    }

    GroupSpec group_;
    Terms terms_;
};

inline std::int64_t length(const Sequence& s) { return s.length(); }
inline GroupElement sigma(const Sequence& s) { return s.sigma(); }
inline Rational cross_number(const Sequence& s,
                             const WeightFunction& w = WeightFunction::cross()) {
    return s.cross_number(w);
}

inline void require_same_group(const Sequence& a, const Sequence& b) {
    if (a.group() != b.group())
        throw std::invalid_argument("sequence operation: mismatched groups");
}

// Pointwise min of valuations.
inline Sequence gcd_seq(const Sequence& a, const Sequence& b) {
    require_same_group(a, b);
    Sequence out(a.group());
    for (const auto& [idx, m] : a.terms()) {
        std::int64_t k = std::min(m, b.valuation(idx));
        if (k > 0)
            out.add(idx, k);
    }
    return out;
}

// T | S: valuation-wise <=.
inline bool divides(const Sequence& t, const Sequence& s) {
    require_same_group(t, s);
    for (const auto& [idx, m] : t.terms())
        if (m > s.valuation(idx))
            return false;
    return true;
}

inline Sequence mul(const Sequence& a, const Sequence& b) {
    require_same_group(a, b);
    Sequence out = a;
    for (const auto& [idx, m] : b.terms())
        out.add(idx, m);
    return out;
}

// S * T^{-1}; requires T | S.
inline Sequence div(const Sequence& s, const Sequence& t) {
    if (!divides(t, s))
        throw std::invalid_argument("div: T does not divide S");
    Sequence out = s;
    for (const auto& [idx, m] : t.terms())
        out.add(idx, -m);
    return out;
}

// Replace a subsequence by its sum: S -> S*T^{-1}*(sigma(T)). Rejected when
// sigma(T) = 0, since the result must stay over the nonzero elements.
inline Sequence amalgamate(const Sequence& s, const Sequence& t) {
    if (!divides(t, s))
        throw std::invalid_argument("amalgamate: T does not divide S");
    std::int64_t sum = t.sigma_index();
    if (sum == 0)
        throw std::invalid_argument("amalgamate: sigma(T) = 0");
    Sequence out = div(s, t);
    out.add(sum, 1);
    return out;
}

// For each order l, the number of terms of that order.
inline std::map<std::int64_t, std::int64_t> order_histogram(const Sequence& s) {
    std::map<std::int64_t, std::int64_t> h;
    for (const auto& [idx, m] : s.terms())
        h[s.group().order_of_index(idx)] += m;
    return h;
}

// Subsequence of terms whose order has more than one prime factor.
inline Sequence cross_terms(const Sequence& s) {
    Sequence out(s.group());
    for (const auto& [idx, m] : s.terms())
        if (factorize(s.group().order_of_index(idx)).size() > 1)
            out.add(idx, m);
    return out;
}

} // namespace zslab
