#pragma once

// Trace-built cyclic codes over GF(q) and their augmented and extended
// companions.
//
//   C  (length n):    c_a = (Tr(a·beta^0), ..., Tr(a·beta^{n-1})), a in GF(r)
//   E  (length q+1):  e_a = the first q+1 coordinates of the same map
//
// plus exhaustive weight distributions, dual-distance search over generator
// columns, exact MacWilliams transforms in GMP integers, and the dictionary
// between projective dimension-3 codes and maximal arcs.

#include <gmpxx.h>

#include <thread>

#include "arc.hpp"

namespace maxarc {

struct LinearCode {
    const Tower* tower = nullptr;
    std::uint64_t q = 0;
    std::size_t length = 0;
    std::vector<std::vector<fe>> gen;  // rows over GF(q), linearly independent

    std::size_t dimension() const noexcept { return gen.size(); }

    std::vector<fe> column(std::size_t j) const {
        std::vector<fe> col(gen.size());
        for (std::size_t i = 0; i < gen.size(); ++i) col[i] = gen[i][j];
        return col;
    }
};

using WeightDist = std::map<std::size_t, mpz_class>;

// ---- construction ----------------------------------------------------------

inline std::vector<fe> trace_codeword(const Tower& t, fe a, std::size_t length) {
    if (length != t.n() && length != t.q() + 1)
        throw std::invalid_argument("trace_codeword: length must be n or q+1");
    std::vector<fe> w(length);
    fe cur = a;
    for (std::size_t i = 0; i < length; ++i) {
        w[i] = t.trace_rq(cur);
        cur = t.field().mul(cur, t.beta());
    }
    return w;
}

// row echelon rank over GF(q); the rows live in the ambient encoding
inline std::size_t rank_of(std::vector<std::vector<fe>> rows, const GF2e& F) {
    if (rows.empty()) return 0;
    const std::size_t len = rows[0].size();
    std::size_t rk = 0;
    for (std::size_t col = 0; col < len && rk < rows.size(); ++col) {
        std::size_t piv = rk;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rk], rows[piv]);
        const fe s = F.inv(rows[rk][col]);
        for (auto& v : rows[rk]) v = F.mul(v, s);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != rk && rows[i][col] != 0) {
                const fe f = rows[i][col];
                for (std::size_t j = col; j < len; ++j) rows[i][j] ^= F.mul(f, rows[rk][j]);
            }
        ++rk;
    }
    return rk;
}

inline bool in_rowspace(const LinearCode& c, const std::vector<fe>& v) {
    if (v.size() != c.length) throw std::invalid_argument("in_rowspace: length mismatch");
    auto rows = c.gen;
    const std::size_t r0 = rank_of(rows, c.tower->field());
    rows.push_back(v);
    return rank_of(std::move(rows), c.tower->field()) == r0;
}

// the length-n code spanned by the trace words of the GF(q)-basis {1, alpha}
inline LinearCode build_irreducible_cyclic(const Tower& t) {
    LinearCode c{&t, t.q(), static_cast<std::size_t>(t.n()), {}};
    c.gen.push_back(trace_codeword(t, 1, c.length));
    c.gen.push_back(trace_codeword(t, t.alpha(), c.length));
    if (rank_of(c.gen, t.field()) != 2) throw std::logic_error("trace generator rows are dependent");
    return c;
}

// the length q+1 companion code; MDS with parameters [q+1, 2, q]
inline LinearCode build_short_code(const Tower& t) {
    LinearCode c{&t, t.q(), static_cast<std::size_t>(t.q() + 1), {}};
    c.gen.push_back(trace_codeword(t, 1, c.length));
    c.gen.push_back(trace_codeword(t, t.alpha(), c.length));
    if (rank_of(c.gen, t.field()) != 2) throw std::logic_error("trace generator rows are dependent");
    return c;
}

// left cyclic shift of every generator row stays in the code
inline bool cyclic_shift_closed(const LinearCode& c) {
    for (const auto& row : c.gen) {
        std::vector<fe> shifted(c.length);
        for (std::size_t i = 0; i < c.length; ++i) shifted[i] = row[(i + 1) % c.length];
        if (!in_rowspace(c, shifted)) return false;
    }
    return true;
}

struct ConcatReport {
    std::uint64_t failing_a = 0;        // values of a where c_a != e_a || beta^{q+1} e_a || ...
    bool scalars_are_gfd_star = false;  // {beta^{(q+1)i} : 0 <= i <= d-2} == GF(d)*
    bool ok() const { return failing_a == 0 && scalars_are_gfd_star; }
};

// c_a is the concatenation of d-1 copies of e_a scaled by beta^{(q+1)i};
// checked for every a in GF(r), plus the scalar-set identity.
inline ConcatReport check_concatenation(const Tower& t) {
    const GF2e& F = t.field();
    ConcatReport rep;
    std::set<fe> scal;
    for (std::uint64_t j = 0; j + 1 < t.d(); ++j)
        scal.insert(F.pow(t.beta(), static_cast<long long>((t.q() + 1) * j)));
    std::set<fe> gfdstar;
    for (fe h : t.gfd().elements)
        if (h != 0) gfdstar.insert(h);
    rep.scalars_are_gfd_star = scal == gfdstar;
    for (std::uint64_t av = 0; av < t.r(); ++av) {
        const auto c = trace_codeword(t, static_cast<fe>(av), t.n());
        const auto e = trace_codeword(t, static_cast<fe>(av), t.q() + 1);
        bool good = true;
        for (std::uint64_t j = 0; j + 1 < t.d() && good; ++j) {
            const fe s = F.pow(t.beta(), static_cast<long long>((t.q() + 1) * j));
            for (std::uint64_t i = 0; i <= t.q() && good; ++i)
                if (c[j * (t.q() + 1) + i] != F.mul(s, e[i])) good = false;
        }
        if (!good) ++rep.failing_a;
    }
    return rep;
}

// appends the all-one row; rejected if that vector already lies in the code
inline LinearCode augment(const LinearCode& c) {
    const std::vector<fe> ones(c.length, 1);
    if (in_rowspace(c, ones)) throw std::invalid_argument("augment: all-one vector already lies in the code");
    LinearCode out = c;
    out.gen.push_back(ones);
    return out;
}

// appends one coordinate holding the sum of all others (characteristic 2)
inline LinearCode extend(const LinearCode& c) {
    LinearCode out{c.tower, c.q, c.length + 1, c.gen};
    for (auto& row : out.gen) {
        fe s = 0;
        for (fe v : row) s ^= v;
        row.push_back(s);
    }
    return out;
}

// ---- exhaustive enumeration -------------------------------------------------

namespace detail {

inline std::vector<std::vector<std::vector<fe>>> scaled_rows(const LinearCode& c) {
    const GF2e& F = c.tower->field();
    const auto& E = c.tower->gfq().elements;
    std::vector<std::vector<std::vector<fe>>> scaled(c.dimension());
    for (std::size_t j = 0; j < c.dimension(); ++j) {
        scaled[j].assign(E.size(), std::vector<fe>(c.length));
        for (std::size_t s = 0; s < E.size(); ++s)
            for (std::size_t i = 0; i < c.length; ++i) scaled[j][s][i] = F.mul(E[s], c.gen[j][i]);
    }
    return scaled;
}

inline void check_enum_cap(const LinearCode& c) {
    const unsigned eq = static_cast<unsigned>(std::bit_width(c.q)) - 1;
    if (c.dimension() * eq > 28)
        throw std::length_error("codeword enumeration cap q^dim <= 2^28 exceeded");
}

// weight tally over messages whose first coefficient index lies in [lo, hi)
inline void tally_walk(const std::vector<std::vector<std::vector<fe>>>& scaled, std::size_t lo, std::size_t hi,
                       std::vector<std::uint64_t>& tally) {
    const std::size_t k = scaled.size();
    const std::size_t qn = scaled[0].size();
    const std::size_t len = scaled[0][0].size();
    std::vector<std::vector<fe>> acc(k, std::vector<fe>(len));
    auto weight_against = [&](const std::vector<fe>& base, const std::vector<fe>& add) {
        std::size_t w = 0;
        for (std::size_t i = 0; i < len; ++i) w += (base[i] ^ add[i]) != 0;
        return w;
    };
    auto rec = [&](auto&& self, std::size_t level) -> void {
        const auto& prev = acc[level - 1];
        if (level == k) {  // fold the last level into the weight count
            std::size_t w = 0;
            for (fe v : prev) w += v != 0;
            ++tally[w];
            return;
        }
        if (level + 1 == k) {
            for (std::size_t s = 0; s < qn; ++s) ++tally[weight_against(prev, scaled[level][s])];
            return;
        }
        for (std::size_t s = 0; s < qn; ++s) {
            auto& cur = acc[level];
            const auto& sc = scaled[level][s];
            for (std::size_t i = 0; i < len; ++i) cur[i] = prev[i] ^ sc[i];
            self(self, level + 1);
        }
    };
    for (std::size_t s0 = lo; s0 < hi; ++s0) {
        acc[0] = scaled[0][s0];
        if (k == 1) {
            std::size_t w = 0;
            for (fe v : acc[0]) w += v != 0;
            ++tally[w];
        } else {
            rec(rec, 1);
        }
    }
}

}  // namespace detail

// exact weight tally (index = weight) over all q^dim codewords; the message
// space is split across workers, per-worker tallies merge by addition, so
// the result does not depend on the partitioning
inline std::vector<std::uint64_t> weight_tally(const LinearCode& c, unsigned jobs = 1) {
    detail::check_enum_cap(c);
    std::vector<std::uint64_t> tally(c.length + 1, 0);
    if (c.dimension() == 0) {
        tally[0] = 1;
        return tally;
    }
    const auto scaled = detail::scaled_rows(c);
    const std::size_t qn = scaled[0].size();
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(qn)));
    if (jobs == 1) {
        detail::tally_walk(scaled, 0, qn, tally);
        return tally;
    }
    std::vector<std::vector<std::uint64_t>> parts(jobs, std::vector<std::uint64_t>(c.length + 1, 0));
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) {
        const std::size_t lo = qn * w / jobs, hi = qn * (w + 1) / jobs;
        pool.emplace_back([&scaled, lo, hi, &part = parts[w]] { detail::tally_walk(scaled, lo, hi, part); });
    }
    for (auto& th : pool) th.join();
    for (const auto& part : parts)
        for (std::size_t i = 0; i <= c.length; ++i) tally[i] += part[i];
    return tally;
}

inline WeightDist weight_distribution(const LinearCode& c, unsigned jobs = 1) {
    const auto tally = weight_tally(c, jobs);
    WeightDist wd;
    for (std::size_t w = 0; w < tally.size(); ++w)
        if (tally[w]) wd[w] = tally[w];
    return wd;
}

// visits every codeword (the zero word included) single-threaded
template <typename Fn>
inline void for_each_codeword(const LinearCode& c, Fn&& fn) {
    detail::check_enum_cap(c);
    if (c.dimension() == 0) {
        fn(std::vector<fe>(c.length, 0));
        return;
    }
    const auto scaled = detail::scaled_rows(c);
    const std::size_t k = c.dimension();
    const std::size_t qn = scaled[0].size();
    std::vector<std::vector<fe>> acc(k, std::vector<fe>(c.length));
    auto rec = [&](auto&& self, std::size_t level) -> void {
        if (level == k) {
            fn(static_cast<const std::vector<fe>&>(acc[k - 1]));
            return;
        }
        for (std::size_t s = 0; s < qn; ++s) {
            auto& cur = acc[level];
            const auto& sc = scaled[level][s];
            const auto& prev = acc[level - 1];
            for (std::size_t i = 0; i < c.length; ++i) cur[i] = prev[i] ^ sc[i];
            self(self, level + 1);
        }
    };
    for (std::size_t s0 = 0; s0 < qn; ++s0) {
        acc[0] = scaled[0][s0];
        if (k == 1)
            fn(static_cast<const std::vector<fe>&>(acc[0]));
        else
            rec(rec, 1);
    }
}

// ---- dual distance -----------------------------------------------------------

struct DualWitness {
    std::vector<std::size_t> support;  // ascending column indices
    std::vector<fe> coeffs;            // matching nonzero coefficients
};

struct DualDistanceResult {
    bool exact = true;  // false: every subset up to the limit is independent ("≥ limit+1")
    std::size_t distance = 0;
    DualWitness witness;
};

namespace detail {

// one nonzero kernel vector of Σ x_t col_t = 0, or empty if the columns are
// linearly independent
inline std::vector<fe> column_kernel(const GF2e& F, const std::vector<std::vector<fe>>& cols) {
    const std::size_t w = cols.size();
    const std::size_t dim = cols[0].size();
    std::vector<std::vector<fe>> A(dim, std::vector<fe>(w));
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t t = 0; t < w; ++t) A[r][t] = cols[t][r];
    std::vector<std::size_t> pivot_col;
    std::size_t rk = 0;
    for (std::size_t col = 0; col < w && rk < dim; ++col) {
        std::size_t piv = rk;
        while (piv < dim && A[piv][col] == 0) ++piv;
        if (piv == dim) continue;
        std::swap(A[rk], A[piv]);
        const fe s = F.inv(A[rk][col]);
        for (auto& v : A[rk]) v = F.mul(v, s);
        for (std::size_t i = 0; i < dim; ++i)
            if (i != rk && A[i][col] != 0) {
                const fe f = A[i][col];
                for (std::size_t j = 0; j < w; ++j) A[i][j] ^= F.mul(f, A[rk][j]);
            }
        pivot_col.push_back(col);
        ++rk;
    }
    if (pivot_col.size() == w) return {};
    // first free column = first index not among the pivots
    std::size_t free_col = 0;
    while (free_col < w && std::find(pivot_col.begin(), pivot_col.end(), free_col) != pivot_col.end()) ++free_col;
    std::vector<fe> x(w, 0);
    x[free_col] = 1;
    for (std::size_t rrow = 0; rrow < pivot_col.size(); ++rrow) x[pivot_col[rrow]] = A[rrow][free_col];
    return x;
}

inline fe det3_cols(const GF2e& F, const std::vector<fe>& c0, const std::vector<fe>& c1,
                    const std::vector<fe>& c2) {
    fe s = 0;
    s ^= F.mul(c0[0], F.mul(c1[1], c2[2]) ^ F.mul(c1[2], c2[1]));
    s ^= F.mul(c1[0], F.mul(c0[1], c2[2]) ^ F.mul(c0[2], c2[1]));
    s ^= F.mul(c2[0], F.mul(c0[1], c1[2]) ^ F.mul(c0[2], c1[1]));
    return s;
}

}  // namespace detail

// Smallest w <= limit with w linearly dependent generator columns,
// together with an explicit dual codeword of that weight. For w = 2 the scan
// deduplicates scalar-normalized columns instead of testing all pairs.
inline DualDistanceResult dual_distance_upto(const LinearCode& c, std::size_t limit = 4) {
    if (limit < 1 || limit > 4) throw std::invalid_argument("dual_distance_upto: limit must be in [1,4]");
    const GF2e& F = c.tower->field();
    const std::size_t len = c.length, k = c.dimension();
    std::vector<std::vector<fe>> cols(len);
    for (std::size_t j = 0; j < len; ++j) cols[j] = c.column(j);

    for (std::size_t j = 0; j < len; ++j) {
        bool zero = true;
        for (fe v : cols[j])
            if (v) {
                zero = false;
                break;
            }
        if (zero) return {true, 1, {{j}, {1}}};
    }
    if (limit >= 2) {
        std::map<std::vector<fe>, std::pair<std::size_t, fe>> canon_first;  // column/f -> (index, f)
        for (std::size_t j = 0; j < len; ++j) {
            fe f = 0;
            for (fe v : cols[j])
                if (v) {
                    f = v;
                    break;
                }
            std::vector<fe> canon(cols[j]);
            const fe s = F.inv(f);
            for (auto& v : canon) v = F.mul(v, s);
            auto [it, inserted] = canon_first.try_emplace(std::move(canon), j, f);
            if (!inserted) {
                const auto [i, fi] = it->second;
                return {true, 2, {{i, j}, {f, fi}}};  // f·col_i + f_i·col_j = 0
            }
        }
    }
    if (limit >= 3 && len >= 3) {
        if (k <= 2) {
            auto ker = detail::column_kernel(F, {cols[0], cols[1], cols[2]});
            return {true, 3, {{0, 1, 2}, std::move(ker)}};
        }
        if (k == 3) {
            for (std::size_t i = 0; i + 2 < len; ++i)
                for (std::size_t j = i + 1; j + 1 < len; ++j)
                    for (std::size_t kk = j + 1; kk < len; ++kk)
                        if (detail::det3_cols(F, cols[i], cols[j], cols[kk]) == 0) {
                            auto ker = detail::column_kernel(F, {cols[i], cols[j], cols[kk]});
                            return {true, 3, {{i, j, kk}, std::move(ker)}};
                        }
        } else {
            for (std::size_t i = 0; i + 2 < len; ++i)
                for (std::size_t j = i + 1; j + 1 < len; ++j)
                    for (std::size_t kk = j + 1; kk < len; ++kk) {
                        auto ker = detail::column_kernel(F, {cols[i], cols[j], cols[kk]});
                        if (!ker.empty()) return {true, 3, {{i, j, kk}, std::move(ker)}};
                    }
        }
    }
    if (limit >= 4) {
        if (k == 3 && len >= 4) {
            // every 3-subset independent, so any 4 columns carry a
            // full-support dependency
            auto ker = detail::column_kernel(F, {cols[0], cols[1], cols[2], cols[3]});
            return {true, 4, {{0, 1, 2, 3}, std::move(ker)}};
        }
        if (k >= 4) {
            if (len >= 90)  // C(len,4) would pass 2^22 subsets
                throw std::length_error("dual_distance_upto: quadruple scan beyond cap");
            for (std::size_t i = 0; i + 3 < len; ++i)
                for (std::size_t j = i + 1; j + 2 < len; ++j)
                    for (std::size_t kk = j + 1; kk + 1 < len; ++kk)
                        for (std::size_t l = kk + 1; l < len; ++l) {
                            auto ker = detail::column_kernel(F, {cols[i], cols[j], cols[kk], cols[l]});
                            if (!ker.empty()) return {true, 4, {{i, j, kk, l}, std::move(ker)}};
                        }
        }
    }
    return {false, limit + 1, {}};
}

// no zero column and no two proportional columns (dual distance >= 3)
inline bool is_projective(const LinearCode& c) {
    const auto res = dual_distance_upto(c, 2);
    return !res.exact;  // nothing of weight <= 2 found
}

struct Weight3DualReport {
    mpz_class word_count = 0;                          // (q-1) per dependent triple
    std::vector<std::array<std::size_t, 3>> triples;  // supports in lexicographic order
};

// all weight-3 words of the dual code of a projective dimension-3 code,
// enumerated as dependent column triples (each carries a one-dimensional
// space of dependencies, all with full support)
inline Weight3DualReport weight3_dual_words(const LinearCode& c, std::uint64_t triple_cap = std::uint64_t(1) << 26) {
    if (c.dimension() != 3) throw std::invalid_argument("weight3_dual_words: dimension must be 3");
    if (!is_projective(c)) throw std::invalid_argument("weight3_dual_words: code must be projective");
    const std::uint64_t L = c.length;
    if (L >= 3 && L * (L - 1) / 2 * (L - 2) / 3 > triple_cap)
        throw std::length_error("weight3_dual_words: triple enumeration beyond cap");
    const GF2e& F = c.tower->field();
    std::vector<std::vector<fe>> cols(c.length);
    for (std::size_t j = 0; j < c.length; ++j) cols[j] = c.column(j);
    Weight3DualReport rep;
    for (std::size_t i = 0; i + 2 < c.length; ++i)
        for (std::size_t j = i + 1; j + 1 < c.length; ++j)
            for (std::size_t kk = j + 1; kk < c.length; ++kk)
                if (detail::det3_cols(F, cols[i], cols[j], cols[kk]) == 0) rep.triples.push_back({i, j, kk});
    rep.word_count = mpz_class(static_cast<unsigned long>(c.q - 1)) * static_cast<unsigned long>(rep.triples.size());
    return rep;
}

// ---- MacWilliams -------------------------------------------------------------

// Exact dual weight distribution
//   A^⊥_j = q^{-dim} Σ_w A_w K_j(w),
//   K_j(w) = Σ_i (-1)^i (q-1)^{j-i} C(w,i) C(len-w, j-i),
// in exact integer arithmetic; coefficients are computed for j <= max_weight.
// Throws if the input is not a weight distribution consistent with the
// parameters (non-integral or negative output, wrong total).
inline WeightDist macwilliams_transform(const WeightDist& wd, std::size_t length, std::size_t dimension,
                                        std::uint64_t q, std::size_t max_weight = SIZE_MAX) {
    mpz_class qk;
    mpz_ui_pow_ui(qk.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(dimension));
    mpz_class total = 0;
    for (const auto& [w, cnt] : wd) {
        if (w > length) throw std::invalid_argument("macwilliams_transform: weight beyond length");
        if (cnt < 0) throw std::invalid_argument("macwilliams_transform: negative count");
        total += cnt;
    }
    if (total != qk) throw std::invalid_argument("macwilliams_transform: counts do not sum to q^dim");
    const std::size_t maxj = std::min(max_weight, length);
    std::vector<mpz_class> qm1pow(maxj + 1);
    qm1pow[0] = 1;
    for (std::size_t i = 1; i <= maxj; ++i) qm1pow[i] = qm1pow[i - 1] * static_cast<unsigned long>(q - 1);
    auto bin = [](std::uint64_t nn, std::uint64_t kk) {
        mpz_class b;
        if (kk > nn) return mpz_class(0);
        mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(nn), static_cast<unsigned long>(kk));
        return b;
    };
    WeightDist out;
    for (std::size_t j = 0; j <= maxj; ++j) {
        mpz_class acc = 0;
        for (const auto& [w, cnt] : wd) {
            mpz_class kj = 0;
            for (std::size_t i = 0; i <= std::min(j, w); ++i) {
                if (j - i > length - w) continue;
                mpz_class term = bin(w, i) * bin(length - w, j - i) * qm1pow[j - i];
                if (i & 1)
                    kj -= term;
                else
                    kj += term;
            }
            acc += cnt * kj;
        }
        if (!mpz_divisible_p(acc.get_mpz_t(), qk.get_mpz_t()))
            throw std::invalid_argument("macwilliams_transform: non-integral coefficient at weight " +
                                        std::to_string(j));
        mpz_class coeff = acc / qk;
        if (coeff < 0)
            throw std::invalid_argument("macwilliams_transform: negative coefficient at weight " + std::to_string(j));
        if (coeff != 0) out[j] = coeff;
    }
    return out;
}

// ---- code <-> arc dictionary ---------------------------------------------------

// Columns of a projective dimension-3 generator matrix, read as points of
// PG(2,q) in column order. The last column is taken as the nucleus (for an
// extended trace code that column is the pencil nucleus (0,0,1)).
inline MaximalArc arc_from_code(const Plane& pl, const LinearCode& c) {
    if (c.dimension() != 3) throw std::invalid_argument("arc_from_code: dimension must be 3");
    if (!is_projective(c)) throw std::invalid_argument("arc_from_code: code must be projective");
    if ((c.length - 1) % (pl.q() + 1) != 0)
        throw std::invalid_argument("arc_from_code: length does not fit (q+1)(d-1)+1");
    MaximalArc arc;
    arc.q = c.q;
    arc.degree = (c.length - 1) / (pl.q() + 1) + 1;
    arc.points.reserve(c.length);
    for (std::size_t j = 0; j < c.length; ++j)
        arc.points.push_back(pl.normalize_point(c.gen[0][j], c.gen[1][j], c.gen[2][j]));
    arc.nucleus = arc.points.back();
    return arc;
}

struct WeightLineDuality {
    bool ok = true;
    std::uint64_t lines_checked = 0;
    std::uint64_t mismatches = 0;
};

// |line ∩ arc| == length − wt(line·G) for every line of PG(2,q); the arc
// must be in column order so that point i is generator column i
inline WeightLineDuality check_weight_line_duality(const Plane& pl, const LinearCode& c, const MaximalArc& arc) {
    if (arc.points.size() != c.length) throw std::invalid_argument("weight/line duality: arc is not in column order");
    const GF2e& F = c.tower->field();
    WeightLineDuality rep;
    for (std::uint64_t li = 0; li < pl.size(); ++li) {
        const Line l = pl.line_at(li);
        std::uint64_t meet = 0;
        for (const Point& p : arc.points)
            if (pl.incident(p, l)) ++meet;
        std::size_t wt = 0;
        for (std::size_t j = 0; j < c.length; ++j) {
            const fe v = F.mul(l.c[0], c.gen[0][j]) ^ F.mul(l.c[1], c.gen[1][j]) ^ F.mul(l.c[2], c.gen[2][j]);
            wt += v != 0;
        }
        if (meet != c.length - wt) {
            rep.ok = false;
            ++rep.mismatches;
        }
        ++rep.lines_checked;
    }
    return rep;
}

struct ZWeightLink {
    bool ok = true;
    std::uint64_t mismatches = 0;
};

// Cross-module identity: N · #{i < n : Tr(a beta^i) = b} + [b = 0] equals the
// exhaustive solution count Z(a,b) of Tr(a x^N) = b, for every a != 0 and
// every b in GF(q).
inline ZWeightLink check_z_weight_link(const Tower& t) {
    const GF2e& F = t.field();
    ZWeightLink rep;
    const auto& gfq = t.gfq();
    std::vector<std::uint64_t> pos_hist(gfq.order), z_hist(gfq.order);
    for (std::uint64_t av = 1; av < t.r(); ++av) {
        const fe a = static_cast<fe>(av);
        std::fill(pos_hist.begin(), pos_hist.end(), 0);
        std::fill(z_hist.begin(), z_hist.end(), 0);
        fe cur = a;
        for (std::uint64_t i = 0; i < t.n(); ++i) {
            ++pos_hist[gfq.index_of(t.trace_rq(cur))];
            cur = F.mul(cur, t.beta());
        }
        for (std::uint64_t x = 0; x < t.r(); ++x) {
            const fe xn = F.pow(static_cast<fe>(x), static_cast<long long>(t.N()));
            ++z_hist[gfq.index_of(t.trace_rq(F.mul(a, xn)))];
        }
        for (std::uint32_t bi = 0; bi < gfq.order; ++bi) {
            const std::uint64_t lhs = t.N() * pos_hist[bi] + (gfq.elements[bi] == 0 ? 1 : 0);
            if (lhs != z_hist[bi]) {
                rep.ok = false;
                ++rep.mismatches;
            }
        }
    }
    return rep;
}

}  // namespace maxarc
