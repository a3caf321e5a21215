#pragma once

// Support designs of fixed-weight codewords, exhaustive t-design
// verification by pair counting, the Steiner design cut out of a maximal arc
// by the lines of the plane, and the weight-3 dual-support design.

#include "code.hpp"

namespace maxarc {

struct Design {
    std::uint64_t v = 0;
    std::size_t k = 0;
    std::vector<std::vector<std::size_t>> blocks;  // sorted index sets, lexicographic order
};

struct SupportExtraction {
    Design design;
    mpz_class codewords = 0;         // number of words of the target weight
    std::size_t scalar_classes = 0;  // scalar-equivalence classes among them
    bool classes_match_blocks = false;
};

// One block per scalar class of weight-w codewords (the block being the
// support); identical supports coming from different classes collapse and
// are reported through classes_match_blocks.
inline SupportExtraction supports_of_weight(const LinearCode& c, std::size_t w) {
    if (w == 0 || w > c.length) throw std::invalid_argument("supports_of_weight: weight out of range");
    const GF2e& F = c.tower->field();
    SupportExtraction out;
    out.design.v = c.length;
    out.design.k = w;
    std::set<std::vector<fe>> classes;
    std::uint64_t words = 0;
    for_each_codeword(c, [&](const std::vector<fe>& word) {
        std::size_t wt = 0;
        for (fe x : word) wt += x != 0;
        if (wt != w) return;
        ++words;
        fe f = 0;
        for (fe x : word)
            if (x) {
                f = x;
                break;
            }
        std::vector<fe> canon(word);
        const fe s = F.inv(f);
        for (auto& x : canon) x = F.mul(x, s);
        classes.insert(std::move(canon));
    });
    out.codewords = words;
    out.scalar_classes = classes.size();
    std::set<std::vector<std::size_t>> supports;
    for (const auto& canon : classes) {
        std::vector<std::size_t> sup;
        for (std::size_t i = 0; i < canon.size(); ++i)
            if (canon[i]) sup.push_back(i);
        supports.insert(std::move(sup));
    }
    out.design.blocks.assign(supports.begin(), supports.end());
    out.classes_match_blocks =
        out.scalar_classes == out.design.blocks.size() &&
        out.codewords == mpz_class(static_cast<unsigned long>(c.q - 1)) * static_cast<unsigned long>(out.scalar_classes);
    return out;
}

struct DesignCheck {
    bool is_design = false;
    std::uint64_t lambda = 0;
    bool repeated_blocks = false;
    bool block_sizes_equal = true;
};

// Counts, for every t-subset of points, the blocks containing it; a t-design
// iff the count is constant. Exhaustive and capped at v <= 64.
inline DesignCheck verify_design(const Design& dz, unsigned t) {
    if (t != 1 && t != 2) throw std::invalid_argument("verify_design: only t in {1,2} supported");
    if (dz.v > 64) throw std::length_error("verify_design: capped at v <= 64");
    if (dz.v < t) throw std::invalid_argument("verify_design: v < t");
    DesignCheck out;
    for (const auto& blk : dz.blocks) {
        if (blk.size() != dz.k) out.block_sizes_equal = false;
        for (std::size_t p : blk)
            if (p >= dz.v) throw std::invalid_argument("verify_design: block entry beyond v");
    }
    {
        std::set<std::vector<std::size_t>> uniq(dz.blocks.begin(), dz.blocks.end());
        out.repeated_blocks = uniq.size() != dz.blocks.size();
    }
    const std::size_t v = dz.v;
    if (t == 1) {
        std::vector<std::uint64_t> cnt(v, 0);
        for (const auto& blk : dz.blocks)
            for (std::size_t p : blk) ++cnt[p];
        out.lambda = cnt.empty() ? 0 : cnt[0];
        out.is_design = true;
        for (auto cv : cnt)
            if (cv != out.lambda) out.is_design = false;
        return out;
    }
    std::vector<std::uint64_t> cnt(v * v, 0);
    for (const auto& blk : dz.blocks)
        for (std::size_t a = 0; a < blk.size(); ++a)
            for (std::size_t b = a + 1; b < blk.size(); ++b) ++cnt[blk[a] * v + blk[b]];
    out.lambda = v >= 2 ? cnt[0 * v + 1] : 0;
    out.is_design = true;
    for (std::size_t i = 0; i < v; ++i)
        for (std::size_t j = i + 1; j < v; ++j)
            if (cnt[i * v + j] != out.lambda) out.is_design = false;
    return out;
}

// Blocks are the nonempty line sections of the arc, indexed over the arc's
// own point order (for an arc recovered from a code, point i is generator
// column i).
inline Design complementary_steiner(const Plane& pl, const MaximalArc& arc) {
    Design dz;
    dz.v = arc.points.size();
    dz.k = arc.degree;
    std::vector<std::vector<std::size_t>> blocks;
    for (std::uint64_t li = 0; li < pl.size(); ++li) {
        const Line l = pl.line_at(li);
        std::vector<std::size_t> blk;
        for (std::size_t i = 0; i < arc.points.size(); ++i)
            if (pl.incident(arc.points[i], l)) blk.push_back(i);
        if (!blk.empty()) blocks.push_back(std::move(blk));
    }
    std::sort(blocks.begin(), blocks.end());
    dz.blocks = std::move(blocks);
    return dz;
}

struct DualWeight3Design {
    bool trivially_empty = false;  // no weight-3 dual words (the degree-2 regime)
    Design design;
};

// Supports of the weight-3 dual codewords, one block per scalar class.
inline DualWeight3Design dual_weight3_design(const LinearCode& c,
                                             std::uint64_t triple_cap = std::uint64_t(1) << 26) {
    DualWeight3Design out;
    out.design.v = c.length;
    out.design.k = 3;
    const auto rep = weight3_dual_words(c, triple_cap);
    out.design.blocks.reserve(rep.triples.size());
    for (const auto& tr : rep.triples) out.design.blocks.push_back({tr[0], tr[1], tr[2]});
    out.trivially_empty = rep.triples.empty();
    return out;
}

}  // namespace maxarc
