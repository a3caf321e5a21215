#include <catch2/catch_amalgamated.hpp>

#include "maxarc/plane.hpp"

using namespace maxarc;

TEST_CASE("point and line counts") {
    for (auto [m, k, expect] : {std::tuple{1u, 1u, 7ull}, {1u, 2u, 21ull}, {2u, 2u, 273ull}}) {
        const Tower t(m, k);
        const Plane pl(t);
        CHECK(pl.size() == expect);  // q^2 + q + 1
        CHECK(pl.enumerate_points().size() == expect);
        CHECK(pl.enumerate_lines().size() == expect);
    }
}

TEST_CASE("index coding round-trips") {
    const Tower t(2, 2);
    const Plane pl(t);
    for (std::uint64_t i = 0; i < pl.size(); ++i) {
        const Point p = pl.point_at(i);
        CHECK(pl.point_index(p) == i);
        // triples come out normalized
        CHECK_NOTHROW(pl.point_index(pl.normalize_point(p.c[0], p.c[1], p.c[2])));
    }
    CHECK_THROWS_AS(pl.point_at(pl.size()), std::out_of_range);
    CHECK_THROWS_AS(pl.normalize_point(0, 0, 0), std::invalid_argument);
}

TEST_CASE("incidence axioms") {
    for (auto [m, k] : {std::pair{1u, 1u}, {1u, 2u}, {2u, 2u}}) {
        const Tower t(m, k);
        const Plane pl(t);
        const auto points = pl.enumerate_points();
        const auto lines = pl.enumerate_lines();
        // every line carries q+1 points, listed consistently with incidence
        for (const Line& l : lines) {
            const auto on = pl.points_on_line(l);
            CHECK(on.size() == t.q() + 1);
            for (const Point& p : on) CHECK(pl.incident(p, l));
        }
        // every point lies on q+1 lines
        for (const Point& p : points) {
            std::uint64_t cnt = 0;
            for (const Line& l : lines)
                if (pl.incident(p, l)) ++cnt;
            CHECK(cnt == t.q() + 1);
        }
        // two distinct points lie on exactly one common line
        std::uint64_t bad = 0;
        for (std::size_t i = 0; i < points.size(); ++i)
            for (std::size_t j = i + 1; j < points.size(); ++j) {
                std::uint64_t common = 0;
                for (const Line& l : lines)
                    if (pl.incident(points[i], l) && pl.incident(points[j], l)) ++common;
                if (common != 1) ++bad;
            }
        CHECK(bad == 0);
    }
}

TEST_CASE("matrix algebra and the collineation action") {
    const Tower t(1, 2);
    const Plane pl(t);
    const GF2e& F = t.field();
    // a haphazard invertible matrix over GF(4)
    const auto& E = t.gfq().elements;
    Matrix3 M{{1, E[2], 0, E[3], 1, E[2], 0, 1, 1}};
    REQUIRE(pl.det(M) != 0);
    const Matrix3 Mi = pl.inverse(M);
    CHECK(pl.mul(M, Mi) == pl.identity());
    CHECK(pl.mul(Mi, M) == pl.identity());
    CHECK(pl.pow(M, 0) == pl.identity());
    CHECK(pl.pow(M, 3) == pl.mul(M, pl.mul(M, M)));
    (void)F;

    // the action preserves incidence: p on l iff Mp on Ml
    for (std::uint64_t pi = 0; pi < pl.size(); ++pi)
        for (std::uint64_t li = 0; li < pl.size(); ++li) {
            const Point p = pl.point_at(pi);
            const Line l = pl.line_at(li);
            CHECK(pl.incident(p, l) == pl.incident(pl.apply(M, p), pl.apply_to_line(M, l)));
        }
}

TEST_CASE("pencil parameter") {
    {
        const Tower t(1, 1);
        const Plane pl(t);
        CHECK(pl.pencil_parameter() == 1u);  // x^2 + x + 1 over GF(2)
    }
    for (auto [m, k] : {std::pair{1u, 2u}, {2u, 2u}}) {
        const Tower t(m, k);
        const Plane pl(t);
        const fe b = pl.pencil_parameter();
        CHECK(b != 0u);
        const GF2e& F = t.field();
        for (fe x : t.gfq().elements) CHECK((F.mul(x, x) ^ F.mul(b, x) ^ 1u) != 0u);
    }
}

TEST_CASE("conics of the pencil") {
    const Tower t(1, 2);
    const Plane pl(t);
    const fe b = pl.pencil_parameter();
    CHECK(pl.conic(b, 0).degenerate);
    CHECK(pl.conic(b, 0).points == std::vector<Point>{Point{{0, 0, 1}}});
    const Point nucleus{{0, 0, 1}};
    std::set<Point> seen;
    for (fe l : t.gfq().elements) {
        if (l == 0) continue;
        const auto c = pl.conic(b, l);
        CHECK(!c.degenerate);
        CHECK(c.points.size() == t.q() + 1);  // q+1 points each
        for (const Point& p : c.points) {
            CHECK(!seen.count(p));  // pairwise disjoint across the pencil
            seen.insert(p);
            CHECK(p != nucleus);
        }
        // nucleus property: every line through (0,0,1) meets the conic once
        std::set<Point> conic_set(c.points.begin(), c.points.end());
        for (std::uint64_t li = 0; li < pl.size(); ++li) {
            const Line line = pl.line_at(li);
            if (!pl.incident(nucleus, line)) continue;
            std::uint64_t meet = 0;
            pl.for_each_point_on_line(line, [&](const Point& p) { meet += conic_set.count(p); });
            CHECK(meet == 1);
        }
    }
}

TEST_CASE("G1 stabilizes the pencil and is sharply transitive on each conic") {
    for (auto [m, k] : {std::pair{1u, 1u}, {1u, 2u}, {2u, 2u}}) {
        const Tower t(m, k);
        const Plane pl(t);
        const fe b = pl.pencil_parameter();
        const auto g1 = pl.group_g1(b);
        CHECK(g1.size() == t.q() + 1);
        // contains the identity (the solution (s,t) = (1,0))
        CHECK(std::find(g1.begin(), g1.end(), pl.identity()) != g1.end());
        for (fe l : t.gfq().elements) {
            if (l == 0) continue;
            const auto c = pl.conic(b, l);
            const std::set<Point> cs(c.points.begin(), c.points.end());
            for (const auto& M : g1)
                for (const Point& p : c.points) CHECK(cs.count(pl.apply(M, p)));
            const auto orb = pl.orbit(g1, c.points.front());
            CHECK(orb.size() == c.points.size());
            CHECK(pl.stabilizer_size(g1, c.points.front()) == 1);
        }
    }
}

TEST_CASE("G2 permutes the conics through the subfield") {
    const Tower t(2, 2);  // d = 4 so G2 is nontrivial
    const Plane pl(t);
    const GF2e& F = t.field();
    const fe b = pl.pencil_parameter();
    const auto g2 = pl.group_g2();
    CHECK(g2.size() == t.d() - 1);
    // gamma = 1 gives the identity
    CHECK(std::find(g2.begin(), g2.end(), pl.identity()) != g2.end());
    // diag(1,1,gamma) sends F_l to F_{l gamma^{-2}}
    for (const auto& M : g2) {
        const fe gamma = M.a[8];
        const fe gi2 = F.inv(F.mul(gamma, gamma));
        for (fe l : t.gfq().elements) {
            if (l == 0) continue;
            const auto src = pl.conic(b, l);
            auto img = src.points;
            for (auto& p : img) p = pl.apply(M, p);
            pl.sort_points(img);
            CHECK(img == pl.conic(b, F.mul(l, gi2)).points);
        }
    }
    // and the images of F_1 over gamma in GF(d)* sweep the whole subpencil {F_l : l in GF(d)*}
    std::set<fe> hit;
    for (const auto& M : g2) {
        const fe gamma = M.a[8];
        hit.insert(F.inv(F.mul(gamma, gamma)));
    }
    std::set<fe> gfdstar(t.gfd().elements.begin(), t.gfd().elements.end());
    gfdstar.erase(0);
    CHECK(hit == gfdstar);
}

TEST_CASE("group closure") {
    const Tower t(2, 2);
    const Plane pl(t);
    const fe b = pl.pencil_parameter();
    auto gens = pl.group_g1(b);
    const auto g2 = pl.group_g2();
    gens.insert(gens.end(), g2.begin(), g2.end());
    const std::uint64_t expected = (t.q() + 1) * (t.d() - 1);
    const auto G = pl.group_closure(gens, expected);
    CHECK(G.size() == expected);
    // closed under multiplication
    std::set<Matrix3> gs(G.begin(), G.end());
    for (std::size_t i = 0; i < G.size(); i += 7)
        for (std::size_t j = 0; j < G.size(); j += 11) CHECK(gs.count(pl.mul(G[i], G[j])));
    const auto cyc = pl.cyclicity(G);
    CHECK(cyc.cyclic);
    CHECK(cyc.order == expected);
    CHECK(pl.element_order_in(cyc.generator, expected) == expected);

    CHECK(pl.group_closure({pl.identity()}, 1) == std::vector<Matrix3>{pl.identity()});
    CHECK_THROWS_AS(pl.group_closure(gens, 2), std::length_error);
}

TEST_CASE("orbits") {
    const Tower t(1, 2);
    const Plane pl(t);
    const fe b = pl.pencil_parameter();
    auto gens = pl.group_g1(b);
    const auto g2 = pl.group_g2();
    gens.insert(gens.end(), g2.begin(), g2.end());
    const auto G = pl.group_closure(gens, (t.q() + 1) * (t.d() - 1));
    const Point nucleus{{0, 0, 1}};
    CHECK(pl.orbit(G, nucleus) == std::vector<Point>{nucleus});  // fixed point
    const auto c = pl.conic(b, 1);
    const auto orb = pl.orbit(G, c.points.front());
    CHECK(orb.size() == (t.q() + 1) * (t.d() - 1));
    // trivial group
    CHECK(pl.orbit({pl.identity()}, c.points.front()) == std::vector<Point>{c.points.front()});
}
