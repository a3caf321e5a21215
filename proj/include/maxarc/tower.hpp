#pragma once

// The field chain GF(2) ⊂ GF(d) ⊂ GF(q) ⊂ GF(r) with r = q², realized with a
// single element encoding inside GF(r): the subfields are the fixed sets of
// x ↦ x^d and x ↦ x^q. Carries the derived constants
//   q = 2^{km},  d = 2^m,  n = (q+1)(d-1),  N = (q-1)/(d-1),  r = q²,
// a primitive alpha of GF(r) and beta = alpha^N of multiplicative order n.

#include <optional>

#include "gf2e.hpp"

namespace maxarc {

class Tower {
  public:
    static constexpr unsigned kMaxBits = 24;  // cap on 2km = deg GF(r)

    Tower(unsigned m, unsigned k, std::optional<fe> modulus_override = std::nullopt)
        : m_(m),
          k_(k),
          F_(checked_bits(m, k),
             modulus_override ? *modulus_override : poly::smallest_irreducible(checked_bits(m, k))) {
        q_ = std::uint64_t(1) << (std::uint64_t(m) * k);
        d_ = std::uint64_t(1) << m;
        N_ = (q_ - 1) / (d_ - 1);
        n_ = (q_ + 1) * (d_ - 1);
        r_ = q_ * q_;
        alpha_ = F_.primitive_element();
        beta_ = F_.pow(alpha_, static_cast<long long>(N_));
        if (F_.element_order(beta_) != n_) throw std::logic_error("tower: beta does not have order n");
        gfq_ = make_subfield(F_, q_);
        gfd_ = make_subfield(F_, d_);
    }

    const GF2e& field() const noexcept { return F_; }
    unsigned m() const noexcept { return m_; }
    unsigned k() const noexcept { return k_; }

    std::uint64_t q() const noexcept { return q_; }
    std::uint64_t d() const noexcept { return d_; }
    std::uint64_t n() const noexcept { return n_; }
    std::uint64_t N() const noexcept { return N_; }
    std::uint64_t r() const noexcept { return r_; }

    fe alpha() const noexcept { return alpha_; }
    fe beta() const noexcept { return beta_; }

    const Subfield& gfq() const noexcept { return gfq_; }
    const Subfield& gfd() const noexcept { return gfd_; }

    fe frob_q(fe x) const { return F_.pow(x, static_cast<long long>(q_)); }

    // Tr_{r/q}(x) = x + x^q, a GF(q)-linear map onto GF(q)
    fe trace_rq(fe x) const { return x ^ frob_q(x); }

    // C_i = alpha^i · ⟨alpha^N⟩, the i-th cyclotomic class of order N in
    // GF(r)*; size n, ascending-mask order
    std::vector<fe> cyclotomic_class(std::uint64_t i) const {
        if (i >= N_)
            throw std::out_of_range("cyclotomic class index " + std::to_string(i) + " not below N = " +
                                    std::to_string(N_));
        std::vector<fe> cls(n_);
        for (std::uint64_t j = 0; j < n_; ++j) cls[j] = F_.exp(i + j * N_);
        std::sort(cls.begin(), cls.end());
        return cls;
    }

    // |{x in GF(r) : Tr_{r/q}(a x^N) = b}| by full scan over GF(r)
    std::uint64_t count_Z(fe a, fe b) const {
        if (a == 0) throw std::domain_error("count_Z: a must be nonzero");
        if (!gfq_.contains(b)) throw std::invalid_argument("count_Z: b outside GF(q)");
        std::uint64_t cnt = 0;
        for (std::uint64_t x = 0; x < r_; ++x) {
            const fe xn = F_.pow(static_cast<fe>(x), static_cast<long long>(N_));
            if (trace_rq(F_.mul(a, xn)) == b) ++cnt;
        }
        return cnt;
    }

  private:
    static unsigned checked_bits(unsigned m, unsigned k) {
        if (m < 1 || k < 1) throw std::invalid_argument("tower: m and k must be >= 1");
        const unsigned bits = 2u * m * k;
        if (bits > kMaxBits)
            throw std::length_error("tower: 2km = " + std::to_string(bits) + " exceeds the cap " +
                                    std::to_string(kMaxBits));
        return bits;
    }

    unsigned m_, k_;
    GF2e F_;
    std::uint64_t q_ = 0, d_ = 0, n_ = 0, N_ = 0, r_ = 0;
    fe alpha_ = 0, beta_ = 0;
    Subfield gfq_, gfd_;
};

}  // namespace maxarc
