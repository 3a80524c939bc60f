#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace zslab {

// Default size cap for operations that enumerate group elements or search
// over sequences. Closed-form operations (k*, K1*, wideness) are uncapped.
inline constexpr std::int64_t kDefaultGroupCap = 64;

// Hard ceiling for the subset-sum bit vectors (see sumset.hpp).
inline constexpr std::int64_t kBitsetCapacity = 256;

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- small number-theory helpers --------------------------------------

inline bool is_prime(std::int64_t n) {
    if (n < 2)
        return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

// Prime-power factorization in ascending prime order.
inline std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
    if (n < 1)
        throw std::invalid_argument("factorize: n must be positive");
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

inline std::int64_t p_minus(std::int64_t n) {
    if (n < 2)
        throw std::invalid_argument("p_minus: n must be >= 2");
    return factorize(n).front().first;
}

inline std::int64_t p_plus(std::int64_t n) {
    if (n < 2)
        throw std::invalid_argument("p_plus: n must be >= 2");
    return factorize(n).back().first;
}

inline std::int64_t ipow(std::int64_t base, int e) {
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > std::numeric_limits<std::int64_t>::max() / base)
            throw std::overflow_error("ipow overflow");
        r *= base;
    }
    return r;
}

// ---- group spec --------------------------------------------------------

// One cyclic component of prime-power order.
struct Component {
    std::int64_t prime = 0;
    int exponent = 0;
    std::int64_t order = 0; // prime^exponent

    friend bool operator==(const Component& a, const Component& b) {
        return a.prime == b.prime && a.exponent == b.exponent;
    }
};

// A GroupElement is a mixed-radix coordinate vector over the components of
// its GroupSpec; coords[j] in [0, order_j).
struct GroupElement {
    std::vector<std::int64_t> coords;

    friend bool operator==(const GroupElement& a, const GroupElement& b) {
        return a.coords == b.coords;
    }
    friend bool operator!=(const GroupElement& a, const GroupElement& b) {
        return !(a == b);
    }
};

// A finite abelian group in canonical form: components grouped by prime
// ascending, exponents non-increasing within a prime. Arbitrary cyclic
// orders are CRT-split into this form at construction; it is the only
// internal representation.
class GroupSpec {
public:
    GroupSpec() = default; // trivial group

    explicit GroupSpec(std::vector<std::int64_t> cyclic_orders) {
        for (std::int64_t n : cyclic_orders) {
            if (n < 1)
                throw std::invalid_argument("GroupSpec: cyclic order must be >= 1");
            for (auto [p, e] : factorize(n))
                comps_.push_back(Component{p, e, ipow(p, e)});
        }
        canonicalize();
    }

    // Grammar: int ("," int)*, base 10. Whitespace around tokens ignored.
    static GroupSpec parse(const std::string& text) {
        std::vector<std::int64_t> orders;
        std::string tok;
        auto flush = [&] {
            if (tok.empty())
                throw std::invalid_argument("parse_group: empty order token");
            std::size_t pos = 0;
            std::int64_t v;
            try {
                v = std::stoll(tok, &pos);
            } catch (const std::exception&) {
                throw std::invalid_argument("parse_group: non-numeric token '" + tok + "'");
            }
            if (pos != tok.size())
                throw std::invalid_argument("parse_group: non-numeric token '" + tok + "'");
            if (v < 1)
                throw std::invalid_argument("parse_group: order must be >= 1");
            orders.push_back(v);
            tok.clear();
        };
        for (char c : text) {
            if (c == ',')
                flush();
            else if (!std::isspace(static_cast<unsigned char>(c)))
                tok += c;
        }
        flush();
        return GroupSpec(std::move(orders));
    }

    const std::vector<Component>& components() const { return comps_; }
    std::size_t rank() const { return comps_.size(); }
    bool is_trivial() const { return comps_.empty(); }
    std::int64_t size() const { return order_; }

    // exp(G) = product over primes of the largest component order.
    std::int64_t exponent() const { return exponent_; }

    // Distinct primes dividing |G|, ascending.
    std::vector<std::int64_t> primes() const {
        std::vector<std::int64_t> ps;
        for (const auto& c : comps_)
            if (ps.empty() || ps.back() != c.prime)
                ps.push_back(c.prime);
        return ps;
    }

    friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
        return a.comps_ == b.comps_;
    }
    friend bool operator!=(const GroupSpec& a, const GroupSpec& b) { return !(a == b); }

    std::string str() const {
        if (comps_.empty())
            return "1";
        std::string s;
        for (std::size_t i = 0; i < comps_.size(); ++i) {
            if (i)
                s += ",";
            s += std::to_string(comps_[i].order);
        }
        return s;
    }

    // ---- element arithmetic ----

    GroupElement zero() const {
        return GroupElement{std::vector<std::int64_t>(comps_.size(), 0)};
    }

    void validate(const GroupElement& g) const {
        if (g.coords.size() != comps_.size())
            throw std::invalid_argument("GroupElement: coordinate count mismatch");
        for (std::size_t j = 0; j < comps_.size(); ++j)
            if (g.coords[j] < 0 || g.coords[j] >= comps_[j].order)
                throw std::invalid_argument("GroupElement: coordinate out of range");
    }

    GroupElement add(const GroupElement& a, const GroupElement& b) const {
        validate(a);
        validate(b);
        GroupElement r = a;
        for (std::size_t j = 0; j < comps_.size(); ++j)
            r.coords[j] = (r.coords[j] + b.coords[j]) % comps_[j].order;
        return r;
    }

    GroupElement neg(const GroupElement& a) const {
        validate(a);
        GroupElement r = a;
        for (std::size_t j = 0; j < comps_.size(); ++j)
            r.coords[j] = (comps_[j].order - r.coords[j]) % comps_[j].order;
        return r;
    }

    GroupElement smul(std::int64_t m, const GroupElement& a) const {
        validate(a);
        GroupElement r = a;
        for (std::size_t j = 0; j < comps_.size(); ++j) {
            std::int64_t n = comps_[j].order;
            r.coords[j] = ((r.coords[j] % n) * (((m % n) + n) % n)) % n;
        }
        return r;
    }

    // Least m >= 1 with m*g = 0: lcm over components of n_j / gcd(n_j, c_j).
    std::int64_t order_of(const GroupElement& g) const {
        validate(g);
        std::int64_t ord = 1;
        for (std::size_t j = 0; j < comps_.size(); ++j) {
            std::int64_t n = comps_[j].order;
            std::int64_t k = n / std::gcd(n, g.coords[j]);
            ord = std::lcm(ord, k);
        }
        return ord;
    }

    // ---- mixed-radix linear index (bijective, 0 = identity) ----

    std::int64_t index_of(const GroupElement& g) const {
        validate(g);
        std::int64_t idx = 0;
        for (std::size_t j = 0; j < comps_.size(); ++j)
            idx = idx * comps_[j].order + g.coords[j];
        return idx;
    }

    GroupElement element_at(std::int64_t idx) const {
        if (idx < 0 || idx >= order_)
            throw std::out_of_range("element_at: index out of range");
        GroupElement g = zero();
        for (std::size_t j = comps_.size(); j-- > 0;) {
            g.coords[j] = idx % comps_[j].order;
            idx /= comps_[j].order;
        }
        return g;
    }

    std::int64_t index_add(std::int64_t i, std::int64_t j) const {
        std::int64_t out = 0;
        for (std::size_t k = comps_.size(); k-- > 0;) {
            std::int64_t n = comps_[k].order;
            std::int64_t c = (i % n + j % n) % n;
            out += c * stride_[k];
            i /= n;
            j /= n;
        }
        return out;
    }

    std::int64_t index_neg(std::int64_t i) const {
        std::int64_t out = 0;
        for (std::size_t k = comps_.size(); k-- > 0;) {
            std::int64_t n = comps_[k].order;
            out += ((n - i % n) % n) * stride_[k];
            i /= n;
        }
        return out;
    }

    std::int64_t order_of_index(std::int64_t i) const {
        std::int64_t ord = 1;
        for (std::size_t k = comps_.size(); k-- > 0;) {
            std::int64_t n = comps_[k].order;
            ord = std::lcm(ord, n / std::gcd(n, i % n));
            i /= n;
        }
        return ord;
    }

    // ---- enumeration ----

    std::vector<GroupElement> elements(std::int64_t cap = kDefaultGroupCap) const {
        if (order_ > cap)
            throw CapExceeded("elements: |G| = " + std::to_string(order_) +
                              " exceeds cap " + std::to_string(cap));
        std::vector<GroupElement> out;
        out.reserve(order_);
        for (std::int64_t i = 0; i < order_; ++i)
            out.push_back(element_at(i));
        return out;
    }

    std::vector<GroupElement> nonzero_elements(std::int64_t cap = kDefaultGroupCap) const {
        auto all = elements(cap);
        return {all.begin() + (all.empty() ? 0 : 1), all.end()};
    }

    // H_k = { g : order(g) | k }, enumerated in index order.
    std::vector<GroupElement> subgroup_h(std::int64_t k,
                                         std::int64_t cap = kDefaultGroupCap) const {
        if (k < 1)
            throw std::invalid_argument("subgroup_h: k must be >= 1");
        std::vector<GroupElement> out;
        for (const auto& g : elements(cap))
            if (k % order_of(g) == 0)
                out.push_back(g);
        return out;
    }

private:
    void canonicalize() {
        std::sort(comps_.begin(), comps_.end(), [](const Component& a, const Component& b) {
            if (a.prime != b.prime)
                return a.prime < b.prime;
            return a.exponent > b.exponent;
        });
        order_ = 1;
        for (const auto& c : comps_) {
            if (order_ > std::numeric_limits<std::int64_t>::max() / c.order)
                throw std::overflow_error("GroupSpec: group order overflows int64");
            order_ *= c.order;
        }
        exponent_ = 1;
        for (std::size_t i = 0; i < comps_.size(); ++i)
            if (i == 0 || comps_[i].prime != comps_[i - 1].prime)
                exponent_ *= comps_[i].order;
        stride_.assign(comps_.size(), 1);
        for (std::size_t j = comps_.size(); j-- > 1;)
            stride_[j - 1] = stride_[j] * comps_[j].order;
    }

    std::vector<Component> comps_;
    std::vector<std::int64_t> stride_;
    std::int64_t order_ = 1;
    std::int64_t exponent_ = 1;
};

inline GroupSpec parse_group(const std::string& text) { return GroupSpec::parse(text); }

// ---- quotient map H_l -> H_l / H_{l/p} = C_p (Amalgamation Lemma) ------

// Realized by reading the coordinate on the unique p-component of maximal
// exponent, scaled so the kernel is exactly H_{l/p}.
class QuotientToCp {
public:
    QuotientToCp(const GroupSpec& G, std::int64_t l, std::int64_t p)
        : group_(G), l_(l), p_(p) {
        if (!is_prime(p))
            throw std::invalid_argument("quotient_to_cp: p must be prime");
        if (l < 1 || l % p != 0)
            throw std::invalid_argument("quotient_to_cp: p must divide l");
        if (G.exponent() % l != 0)
            throw std::invalid_argument("quotient_to_cp: l must divide exp(G)");

        // Locate the p-component of maximal exponent; demand alpha_1 > alpha_2
        // and p^(alpha_2 + 1) | l so that H_l / H_{l/p} is cyclic of order p.
        int alpha1 = 0, alpha2 = 0;
        comp_ = -1;
        for (std::size_t j = 0; j < G.components().size(); ++j) {
            const auto& c = G.components()[j];
            if (c.prime != p)
                continue;
            if (c.exponent > alpha1) {
                alpha2 = alpha1;
                alpha1 = c.exponent;
                comp_ = static_cast<int>(j);
            } else if (c.exponent > alpha2) {
                alpha2 = c.exponent;
            }
        }
        if (comp_ < 0 || alpha1 <= alpha2)
            throw std::invalid_argument(
                "quotient_to_cp: G has no unique maximal p-component (alpha1 > alpha2 required)");
        int a = 0;
        std::int64_t t = l;
        while (t % p == 0) {
            t /= p;
            ++a;
        }
        if (a < alpha2 + 1)
            throw std::invalid_argument("quotient_to_cp: p^(alpha2+1) must divide l");
        // a <= alpha1 because l | exp(G).
        scale_ = ipow(p, alpha1 - a);
    }

    // Defined on H_l; elements of order dividing l have coordinate divisible
    // by scale_ on the maximal p-component.
    std::int64_t operator()(const GroupElement& g) const {
        if (l_ % group_.order_of(g) != 0)
            throw std::invalid_argument("quotient_to_cp: element not in H_l");
        return (g.coords[comp_] / scale_) % p_;
    }

    std::vector<GroupElement> domain(std::int64_t cap = kDefaultGroupCap) const {
        return group_.subgroup_h(l_, cap);
    }

    std::vector<GroupElement> kernel(std::int64_t cap = kDefaultGroupCap) const {
        return group_.subgroup_h(l_ / p_, cap);
    }

    std::int64_t prime() const { return p_; }

private:
    GroupSpec group_;
    std::int64_t l_;
    std::int64_t p_;
    int comp_;
    std::int64_t scale_;
};

inline QuotientToCp quotient_to_cp(const GroupSpec& G, std::int64_t l, std::int64_t p) {
    return QuotientToCp(G, l, p);
}

} // namespace zslab
