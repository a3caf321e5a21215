#pragma once

// Denniston maximal arcs. The pencil construction takes an additive
// subgroup H of GF(q) and unites the conics F_l, l in H (F_0 contributing
// the common nucleus). Multiplicative cosets of GF(d)* give the partition
// of AG(2,q) into (q-1)/(d-1) such arcs sharing the nucleus. A second,
// cyclotomic model identifies AG(2,q) with GF(q²) and takes the class
// ⟨beta⟩ together with 0. All verification is exhaustive.

#include <map>

#include "plane.hpp"

namespace maxarc {

struct MaximalArc {
    std::uint64_t q = 0;
    std::uint64_t degree = 0;
    Point nucleus{};
    std::vector<Point> points;  // includes the nucleus
};

struct SubgroupCheck {
    bool ok = false;
    fe x = 0, y = 0;  // witness pair with x + y outside the set (when !ok)
};

// additive subgroup of a characteristic-2 field == xor-closed set containing 0
inline SubgroupCheck check_additive_subgroup(const std::vector<fe>& elems) {
    std::set<fe> s(elems.begin(), elems.end());
    if (!s.count(0)) return {false, 0, 0};
    for (fe x : s)
        for (fe y : s)
            if (!s.count(x ^ y)) return {false, x, y};
    return {true, 0, 0};
}

inline MaximalArc denniston_arc(const Plane& pl, const std::vector<fe>& H, fe b) {
    const auto chk = check_additive_subgroup(H);
    if (!chk.ok)
        throw std::invalid_argument("denniston_arc: H is not an additive subgroup (" + detail::hex(chk.x) + " + " +
                                    detail::hex(chk.y) + " = " + detail::hex(chk.x ^ chk.y) + " is missing)");
    for (fe h : H)
        if (!pl.tower().gfq().contains(h))
            throw std::invalid_argument("denniston_arc: element " + detail::hex(h) + " of H lies outside GF(q)");
    std::set<Point> pts;
    for (fe l : H) {
        const auto c = pl.conic(b, l);
        pts.insert(c.points.begin(), c.points.end());
    }
    MaximalArc arc;
    arc.q = pl.q();
    arc.degree = H.size();
    arc.nucleus = Point{{0, 0, 1}};
    arc.points.assign(pts.begin(), pts.end());
    pl.sort_points(arc.points);
    return arc;
}

struct ArcPartition {
    std::uint64_t q = 0, degree = 0;
    Point nucleus{};
    std::vector<std::vector<fe>> subgroups;  // H_i = {0} ∪ (coset rep)·GF(d)*, ascending masks
    std::vector<MaximalArc> arcs;
};

// Arcs A_i = ∪ F_l over l in H_i, where H_i* runs over the multiplicative
// cosets of GF(d)* in GF(q)*; representatives are taken in ascending
// discrete-log order for the generator alpha^{q+1} of GF(q)*. The pencil is
// evaluated in one pass: a point (x,y,z), z != 0, lies on F_l for exactly
// l = (x² + bxy + y²)/z².
inline ArcPartition build_partition(const Plane& pl, fe b) {
    const Tower& t = pl.tower();
    const GF2e& F = t.field();
    ArcPartition part;
    part.q = t.q();
    part.degree = t.d();
    part.nucleus = Point{{0, 0, 1}};

    std::vector<std::vector<Point>> bucket(t.gfq().order);  // indexed by the GF(q) index of l
    const std::uint64_t np = pl.size();
    for (std::uint64_t i = 0; i < np; ++i) {
        const Point p = pl.point_at(i);
        if (p.c[2] == 0) continue;
        const fe num = F.mul(p.c[0], p.c[0]) ^ F.mul(b, F.mul(p.c[0], p.c[1])) ^ F.mul(p.c[1], p.c[1]);
        const fe l = F.mul(num, F.inv(F.mul(p.c[2], p.c[2])));
        bucket[t.gfq().index_of(l)].push_back(p);
    }

    const fe g = F.pow(t.alpha(), static_cast<long long>(t.q() + 1));
    std::vector<fe> hstar;
    for (fe h : t.gfd().elements)
        if (h != 0) hstar.push_back(h);
    for (std::uint64_t j = 0; j < t.N(); ++j) {
        const fe rep = F.pow(g, static_cast<long long>(j));
        std::vector<fe> Hj{0};
        for (fe h : hstar) Hj.push_back(F.mul(rep, h));
        std::sort(Hj.begin(), Hj.end());
        const auto chk = check_additive_subgroup(Hj);
        if (!chk.ok) throw std::logic_error("build_partition: coset union failed the subgroup check");
        MaximalArc arc;
        arc.q = t.q();
        arc.degree = Hj.size();
        arc.nucleus = part.nucleus;
        for (fe l : Hj)
            for (const Point& p : bucket[t.gfq().index_of(l)]) arc.points.push_back(p);
        pl.sort_points(arc.points);
        part.subgroups.push_back(std::move(Hj));
        part.arcs.push_back(std::move(arc));
    }
    return part;
}

struct PartitionReport {
    bool subgroups_ok = false;            // every H_i additive of order d
    bool pairwise_nucleus_only = false;   // arcs meet pairwise exactly in the nucleus
    bool covers_affine = false;           // together they cover all q² points of AG(2,q)
    std::uint64_t covered_points = 0;     // distinct covered points, nucleus included
    std::uint64_t arcs_of_expected_size = 0;
};

inline PartitionReport verify_partition(const Plane& pl, const ArcPartition& part) {
    PartitionReport rep;
    const std::uint64_t d = part.degree;
    rep.subgroups_ok = !part.subgroups.empty();
    for (const auto& H : part.subgroups)
        if (H.size() != d || !check_additive_subgroup(H).ok) {
            rep.subgroups_ok = false;
            break;
        }
    const std::uint64_t expected_size = (pl.q() + 1) * (d - 1) + 1;
    std::vector<std::uint32_t> cover(pl.size(), 0);
    const std::uint64_t nuc_idx = pl.point_index(part.nucleus);
    bool multiply_covered = false;
    bool all_affine = true;
    std::uint64_t distinct = 0;
    for (const auto& arc : part.arcs) {
        if (arc.points.size() == expected_size) ++rep.arcs_of_expected_size;
        for (const Point& p : arc.points) {
            if (p.c[2] == 0) all_affine = false;
            const auto idx = pl.point_index(p);
            if (cover[idx]++ == 0) ++distinct;
            if (idx != nuc_idx && cover[idx] > 1) multiply_covered = true;
        }
    }
    rep.covered_points = distinct;
    rep.pairwise_nucleus_only = !multiply_covered && cover[nuc_idx] == part.arcs.size();
    rep.covers_affine = all_affine && distinct == pl.q() * pl.q();
    return rep;
}

struct LineMeetReport {
    bool maximal = false;
    bool duplicate_points = false;
    std::map<std::uint64_t, std::uint64_t> meet_histogram;  // |line ∩ arc| -> #lines
    std::uint64_t secant_lines = 0, external_lines = 0;
    std::uint64_t expected_secants = 0;  // |A|(q+1)/d by double counting
    bool secant_count_ok = false;
};

// Scans all q²+q+1 lines and records every intersection size; the arc is
// maximal of its degree iff only 0 and d occur.
inline LineMeetReport verify_maximal(const Plane& pl, const MaximalArc& arc) {
    LineMeetReport rep;
    std::vector<std::uint8_t> in_arc(pl.size(), 0);
    for (const Point& p : arc.points) {
        auto& f = in_arc[pl.point_index(p)];
        if (f) rep.duplicate_points = true;
        f = 1;
    }
    const std::uint64_t nlines = pl.size();
    for (std::uint64_t li = 0; li < nlines; ++li) {
        std::uint64_t meet = 0;
        pl.for_each_point_on_line(pl.line_at(li), [&](const Point& p) {
            if (in_arc[pl.point_index(p)]) ++meet;
        });
        ++rep.meet_histogram[meet];
    }
    const std::uint64_t d = arc.degree;
    rep.maximal = !rep.duplicate_points;
    for (const auto& [meet, cnt] : rep.meet_histogram)
        if (meet != 0 && meet != d) rep.maximal = false;
    if (auto it = rep.meet_histogram.find(0); it != rep.meet_histogram.end()) rep.external_lines = it->second;
    if (auto it = rep.meet_histogram.find(d); it != rep.meet_histogram.end()) rep.secant_lines = it->second;
    const std::uint64_t a = arc.points.size();
    const bool integral = (a * (pl.q() + 1)) % d == 0;
    rep.expected_secants = integral ? a * (pl.q() + 1) / d : 0;
    rep.secant_count_ok = integral && rep.expected_secants == rep.secant_lines;
    return rep;
}

// AG(2,q) is identified with GF(q²) through the GF(q)-basis {1, theta};
// x = u + v·theta maps to the projective point (u, v, 1). The arc is the
// cyclotomic class ⟨beta⟩ together with 0; its nucleus is the point of 0.
inline MaximalArc cyclotomic_arc(const Plane& pl, std::optional<fe> theta_opt = std::nullopt) {
    const Tower& t = pl.tower();
    const GF2e& F = t.field();
    const fe theta = theta_opt ? *theta_opt : t.alpha();
    if (t.gfq().contains(theta)) throw std::invalid_argument("cyclotomic_arc: theta must lie outside GF(q)");
    const fe tt = t.trace_rq(theta);  // nonzero exactly because theta is outside GF(q)
    const fe tti = F.inv(tt);
    auto to_point = [&](fe x) {
        const fe v = F.mul(t.trace_rq(x), tti);
        const fe u = x ^ F.mul(v, theta);
        if (!t.gfq().contains(u) || !t.gfq().contains(v))
            throw std::logic_error("cyclotomic_arc: basis decomposition left GF(q)");
        return pl.normalize_point(u, v, 1);
    };
    std::vector<Point> pts{to_point(0)};
    fe cur = 1;
    for (std::uint64_t j = 0; j < t.n(); ++j) {
        pts.push_back(to_point(cur));
        cur = F.mul(cur, t.beta());
    }
    MaximalArc arc;
    arc.q = t.q();
    arc.degree = t.d();
    arc.nucleus = Point{{0, 0, 1}};
    arc.points = std::move(pts);
    pl.sort_points(arc.points);
    return arc;
}

struct GroupActionReport {
    bool nucleus_fixed = false;
    bool arc_invariant = false;  // orbits of arc points stay inside the arc
    bool transitive = false;     // single orbit on arc \ {nucleus}
    bool sharply_transitive = false;
    std::uint64_t group_order = 0;
    std::vector<std::uint64_t> orbit_sizes;  // ascending, on arc \ {nucleus}
    Plane::CyclicityCertificate cyclic{};
};

inline GroupActionReport verify_group_action(const Plane& pl, const MaximalArc& arc,
                                             const std::vector<Matrix3>& G) {
    if (G.empty()) throw std::invalid_argument("verify_group_action: empty group");
    GroupActionReport rep;
    rep.group_order = G.size();
    rep.nucleus_fixed = true;
    for (const Matrix3& M : G)
        if (pl.apply(M, arc.nucleus) != arc.nucleus) {
            rep.nucleus_fixed = false;
            break;
        }
    const std::set<Point> arc_set(arc.points.begin(), arc.points.end());
    std::set<Point> remaining = arc_set;
    remaining.erase(arc.nucleus);
    rep.arc_invariant = true;
    Point first_rest{};
    bool have_rest = false;
    while (!remaining.empty()) {
        const Point p = *remaining.begin();
        if (!have_rest) {
            first_rest = p;
            have_rest = true;
        }
        const auto orb = pl.orbit(G, p);
        for (const Point& op : orb) {
            if (!arc_set.count(op)) rep.arc_invariant = false;
            remaining.erase(op);
        }
        rep.orbit_sizes.push_back(orb.size());
    }
    std::sort(rep.orbit_sizes.begin(), rep.orbit_sizes.end());
    const std::uint64_t rest = arc.points.size() - 1;
    rep.transitive = rep.arc_invariant && rep.orbit_sizes.size() == 1 && rep.orbit_sizes[0] == rest;
    rep.sharply_transitive = rep.transitive && rep.group_order == rest && have_rest &&
                             pl.stabilizer_size(G, first_rest) == 1;
    rep.cyclic = pl.cyclicity(G);
    return rep;
}

}  // namespace maxarc
