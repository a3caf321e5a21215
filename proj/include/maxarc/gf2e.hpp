#pragma once

// Exact arithmetic in binary extension fields GF(2^e), 1 <= e <= 24.
// Elements are polynomial-basis coefficient bitmasks reduced modulo an
// irreducible modulus polynomial over GF(2); multiplication, inversion and
// powers go through log/antilog tables built once at construction, so a
// field object is immutable afterwards and safe to share across threads.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace maxarc {

using fe = std::uint32_t;  // field element: polynomial-basis coefficient bitmask

namespace poly {

inline int degree(std::uint64_t p) noexcept { return static_cast<int>(std::bit_width(p)) - 1; }

// carry-less product in GF(2)[x]
inline std::uint64_t clmul(std::uint64_t a, std::uint64_t b) noexcept {
    std::uint64_t acc = 0;
    while (b) {
        if (b & 1) acc ^= a;
        a <<= 1;
        b >>= 1;
    }
    return acc;
}

inline std::uint64_t mod(std::uint64_t a, std::uint64_t m) noexcept {
    const int dm = degree(m);
    int da = degree(a);
    while (da >= dm) {
        a ^= m << (da - dm);
        da = degree(a);
    }
    return a;
}

// Exhaustive trial division by every polynomial of degree 1..deg(p)/2.
inline bool irreducible(std::uint64_t p, std::uint64_t* factor = nullptr) {
    const int dp = degree(p);
    if (dp < 1) return false;
    for (int dd = 1; dd <= dp / 2; ++dd) {
        for (std::uint64_t div = std::uint64_t(1) << dd; div < std::uint64_t(1) << (dd + 1); ++div) {
            if (mod(p, div) == 0) {
                if (factor) *factor = div;
                return false;
            }
        }
    }
    return true;
}

// Smallest irreducible of the given degree by ascending bitmask, restricted
// to nonzero constant term (so e = 1 yields x + 1, not x).
inline fe smallest_irreducible(unsigned e) {
    for (std::uint64_t cand = (std::uint64_t(1) << e) | 1; cand < std::uint64_t(1) << (e + 1); cand += 2)
        if (irreducible(cand)) return static_cast<fe>(cand);
    throw std::logic_error("no irreducible polynomial of degree " + std::to_string(e));
}

}  // namespace poly

namespace detail {

inline std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
    std::vector<std::uint64_t> ps;
    for (std::uint64_t p = 2; p * p <= v; ++p)
        if (v % p == 0) {
            ps.push_back(p);
            while (v % p == 0) v /= p;
        }
    if (v > 1) ps.push_back(v);
    return ps;
}

inline std::string hex(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s;
    do {
        s.insert(s.begin(), digits[v & 0xf]);
        v >>= 4;
    } while (v);
    return "0x" + s;
}

}  // namespace detail

class GF2e {
  public:
    static constexpr unsigned kMaxDegree = 24;

    explicit GF2e(unsigned degree) : GF2e(degree, poly::smallest_irreducible(check_degree(degree))) {}

    GF2e(unsigned degree, fe modulus) : e_(check_degree(degree)), mod_(modulus) {
        if (poly::degree(modulus) != static_cast<int>(degree))
            throw std::invalid_argument("GF2e: modulus " + detail::hex(modulus) + " does not have degree " +
                                        std::to_string(degree));
        std::uint64_t factor = 0;
        if (!poly::irreducible(modulus, &factor))
            throw std::invalid_argument("GF2e: modulus " + detail::hex(modulus) + " is reducible, divisible by " +
                                        detail::hex(factor));
        build_tables();
    }

    unsigned degree() const noexcept { return e_; }
    fe modulus() const noexcept { return mod_; }
    std::uint64_t size() const noexcept { return std::uint64_t(1) << e_; }
    std::uint64_t order() const noexcept { return size() - 1; }  // of the multiplicative group
    fe primitive_element() const noexcept { return alpha_; }

    fe add(fe a, fe b) const noexcept { return a ^ b; }

    fe mul(fe a, fe b) const noexcept {
        if (a == 0 || b == 0) return 0;
        std::uint64_t s = std::uint64_t(log_[a]) + log_[b];
        if (s >= order()) s -= order();
        return exp_[s];
    }

    fe inv(fe a) const {
        if (a == 0) throw std::domain_error("GF2e: inverse of zero");
        const std::uint32_t l = log_[a];
        return exp_[l == 0 ? 0 : order() - l];
    }

    fe pow(fe a, long long n) const {
        if (a == 0) {
            if (n == 0) return 1;
            if (n < 0) throw std::domain_error("GF2e: negative power of zero");
            return 0;
        }
        const long long ord = static_cast<long long>(order());
        long long nm = n % ord;
        if (nm < 0) nm += ord;
        return exp_[(std::uint64_t(log_[a]) * std::uint64_t(nm)) % order()];
    }

    std::uint64_t element_order(fe a) const {
        if (a == 0) throw std::domain_error("GF2e: multiplicative order of zero");
        return order() / std::gcd(order(), std::uint64_t(log_[a]));
    }

    std::uint32_t log(fe a) const {
        if (a == 0) throw std::domain_error("GF2e: log of zero");
        return log_[a];
    }

    fe exp(std::uint64_t i) const noexcept { return exp_[i % order()]; }

  private:
    static unsigned check_degree(unsigned e) {
        if (e < 1 || e > kMaxDegree)
            throw std::length_error("GF2e: degree " + std::to_string(e) + " outside [1, " +
                                    std::to_string(kMaxDegree) + "]");
        return e;
    }

    fe mul_noluts(fe a, fe b) const noexcept { return static_cast<fe>(poly::mod(poly::clmul(a, b), mod_)); }

    void build_tables() {
        const std::uint64_t ord = order();
        const auto primes = detail::prime_factors(ord);
        auto pow_noluts = [&](fe a, std::uint64_t n) {
            fe acc = 1;
            while (n) {
                if (n & 1) acc = mul_noluts(acc, a);
                a = mul_noluts(a, a);
                n >>= 1;
            }
            return acc;
        };
        for (fe cand = 1;; ++cand) {
            bool primitive = true;
            for (auto p : primes)
                if (pow_noluts(cand, ord / p) == 1) {
                    primitive = false;
                    break;
                }
            if (primitive) {
                alpha_ = cand;
                break;
            }
        }
        exp_.resize(ord);
        log_.assign(size(), 0);
        fe cur = 1;
        for (std::uint64_t i = 0; i < ord; ++i) {
            exp_[i] = cur;
            log_[cur] = static_cast<std::uint32_t>(i);
            cur = mul_noluts(cur, alpha_);
        }
        if (cur != 1) throw std::logic_error("GF2e: log table construction failed");
    }

    unsigned e_;
    fe mod_;
    fe alpha_ = 1;
    std::vector<fe> exp_;             // exp_[i] = alpha^i for i < order()
    std::vector<std::uint32_t> log_;  // inverse of exp_; log_[0] is unused
};

// A subfield {x : x^s = x} of an ambient field, kept in the ambient's
// element encoding. `dense` maps an ambient mask to the element's index in
// the ascending-mask ordering (or npos).
struct Subfield {
    static constexpr std::uint32_t npos = 0xffffffffu;

    std::uint64_t order = 0;
    std::vector<fe> elements;          // ascending bitmask; elements[0] == 0
    std::vector<std::uint32_t> dense;  // ambient mask -> index or npos

    bool contains(fe x) const noexcept { return dense[x] != npos; }

    std::uint32_t index_of(fe x) const {
        const std::uint32_t i = dense[x];
        if (i == npos) throw std::invalid_argument("element " + detail::hex(x) + " outside subfield");
        return i;
    }
};

inline Subfield make_subfield(const GF2e& F, std::uint64_t s) {
    Subfield sub;
    sub.order = s;
    sub.dense.assign(F.size(), Subfield::npos);
    for (std::uint64_t x = 0; x < F.size(); ++x)
        if (F.pow(static_cast<fe>(x), static_cast<long long>(s)) == static_cast<fe>(x)) {
            sub.dense[x] = static_cast<std::uint32_t>(sub.elements.size());
            sub.elements.push_back(static_cast<fe>(x));
        }
    if (sub.elements.size() != s)
        throw std::logic_error("subfield of size " + std::to_string(s) + " came out with " +
                               std::to_string(sub.elements.size()) + " elements");
    return sub;
}

}  // namespace maxarc
