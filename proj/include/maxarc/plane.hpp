#pragma once

// The Desarguesian plane PG(2,q) over the GF(q) subfield of a tower.
// Homogeneous coordinate triples are normalized so the first nonzero
// coordinate is 1; lines use the same normalized coding and incidence is
// a·x + b·y + c·z = 0. Linear collineations act as invertible 3x3 matrices
// on column coordinate triples and by the inverse transpose on lines.
//
// Points and lines are indexed 0 .. q²+q without materializing them:
//   [0, q²)      (1, y, z)   with y = E[i / q], z = E[i % q]
//   [q², q²+q)   (0, 1, z)
//   q²+q         (0, 0, 1)
// where E is the ascending-mask list of GF(q) elements.

#include <array>
#include <set>
#include <unordered_set>
#include <utility>

#include "tower.hpp"

namespace maxarc {

struct Point {
    std::array<fe, 3> c{};
    auto operator<=>(const Point&) const = default;
};

struct Line {
    std::array<fe, 3> c{};
    auto operator<=>(const Line&) const = default;
};

struct Matrix3 {  // row-major
    std::array<fe, 9> a{};
    auto operator<=>(const Matrix3&) const = default;
};

struct Matrix3Hash {
    std::size_t operator()(const Matrix3& m) const noexcept {
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (fe v : m.a) h = (h ^ (v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2))) * 0xff51afd7ed558ccdull;
        return static_cast<std::size_t>(h ^ (h >> 33));
    }
};

class Plane {
  public:
    explicit Plane(const Tower& t) : t_(&t), q_(t.q()) {}

    const Tower& tower() const noexcept { return *t_; }
    std::uint64_t q() const noexcept { return q_; }
    std::uint64_t size() const noexcept { return q_ * q_ + q_ + 1; }  // #points == #lines

    // ---- canonical coding -------------------------------------------------

    Point point_at(std::uint64_t i) const {
        const auto& E = t_->gfq().elements;
        if (i < q_ * q_) return Point{{1, E[i / q_], E[i % q_]}};
        i -= q_ * q_;
        if (i < q_) return Point{{0, 1, E[i]}};
        if (i == q_) return Point{{0, 0, 1}};
        throw std::out_of_range("point index beyond q^2+q");
    }

    std::uint64_t point_index(const Point& p) const {
        const auto& S = t_->gfq();
        if (p.c[0] == 1) return std::uint64_t(S.index_of(p.c[1])) * q_ + S.index_of(p.c[2]);
        if (p.c[0] == 0 && p.c[1] == 1) return q_ * q_ + S.index_of(p.c[2]);
        if (p.c[0] == 0 && p.c[1] == 0 && p.c[2] == 1) return q_ * q_ + q_;
        throw std::invalid_argument("point triple is not normalized");
    }

    Line line_at(std::uint64_t i) const { return Line{point_at(i).c}; }
    std::uint64_t line_index(const Line& l) const { return point_index(Point{l.c}); }

    std::vector<Point> enumerate_points() const {
        std::vector<Point> pts;
        pts.reserve(size());
        for (std::uint64_t i = 0; i < size(); ++i) pts.push_back(point_at(i));
        return pts;
    }

    std::vector<Line> enumerate_lines() const {
        std::vector<Line> ls;
        ls.reserve(size());
        for (std::uint64_t i = 0; i < size(); ++i) ls.push_back(line_at(i));
        return ls;
    }

    Point normalize_point(fe x, fe y, fe z) const {
        const GF2e& F = t_->field();
        if (x != 0) {
            const fe s = F.inv(x);
            return Point{{1, F.mul(y, s), F.mul(z, s)}};
        }
        if (y != 0) {
            const fe s = F.inv(y);
            return Point{{0, 1, F.mul(z, s)}};
        }
        if (z != 0) return Point{{0, 0, 1}};
        throw std::invalid_argument("cannot normalize the zero triple");
    }

    Line normalize_line(fe a, fe b, fe c) const { return Line{normalize_point(a, b, c).c}; }

    bool incident(const Point& p, const Line& l) const {
        const GF2e& F = t_->field();
        return (F.mul(l.c[0], p.c[0]) ^ F.mul(l.c[1], p.c[1]) ^ F.mul(l.c[2], p.c[2])) == 0;
    }

    // Visits the q+1 points of a line, normalized.
    template <typename Fn>
    void for_each_point_on_line(const Line& l, Fn&& fn) const {
        const GF2e& F = t_->field();
        const auto& E = t_->gfq().elements;
        if (l.c[0] == 1) {
            for (fe t : E) fn(normalize_point(l.c[1] ^ F.mul(l.c[2], t), 1, t));
            fn(normalize_point(l.c[2], 0, 1));
        } else if (l.c[1] == 1) {
            for (fe x : E) fn(normalize_point(x, l.c[2], 1));
            fn(Point{{1, 0, 0}});
        } else {  // the line z = 0
            for (fe t : E) fn(Point{{1, t, 0}});
            fn(Point{{0, 1, 0}});
        }
    }

    std::vector<Point> points_on_line(const Line& l) const {
        std::vector<Point> pts;
        pts.reserve(q_ + 1);
        for_each_point_on_line(l, [&](const Point& p) { pts.push_back(p); });
        sort_points(pts);
        return pts;
    }

    void sort_points(std::vector<Point>& pts) const {
        std::vector<std::pair<std::uint64_t, Point>> keyed;
        keyed.reserve(pts.size());
        for (const Point& p : pts) keyed.emplace_back(point_index(p), p);
        std::sort(keyed.begin(), keyed.end());
        for (std::size_t i = 0; i < pts.size(); ++i) pts[i] = keyed[i].second;
    }

    // ---- collineations ----------------------------------------------------

    Matrix3 identity() const { return Matrix3{{1, 0, 0, 0, 1, 0, 0, 0, 1}}; }

    Matrix3 mul(const Matrix3& A, const Matrix3& B) const {
        const GF2e& F = t_->field();
        Matrix3 C;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                fe s = 0;
                for (int t = 0; t < 3; ++t) s ^= F.mul(A.a[3 * i + t], B.a[3 * t + j]);
                C.a[3 * i + j] = s;
            }
        return C;
    }

    fe det(const Matrix3& M) const {
        const GF2e& F = t_->field();
        const auto& a = M.a;
        fe s = 0;
        s ^= F.mul(a[0], F.mul(a[4], a[8]) ^ F.mul(a[5], a[7]));
        s ^= F.mul(a[1], F.mul(a[3], a[8]) ^ F.mul(a[5], a[6]));
        s ^= F.mul(a[2], F.mul(a[3], a[7]) ^ F.mul(a[4], a[6]));
        return s;
    }

    Matrix3 inverse(const Matrix3& M) const {
        const GF2e& F = t_->field();
        const fe dt = det(M);
        if (dt == 0) throw std::domain_error("singular collineation matrix");
        const fe di = F.inv(dt);
        const auto& a = M.a;
        auto m2 = [&](int p, int s, int u, int v) { return F.mul(a[p], a[s]) ^ F.mul(a[u], a[v]); };
        Matrix3 inv;  // adjugate transpose; cofactor signs vanish in characteristic 2
        inv.a[0] = F.mul(di, m2(4, 8, 5, 7));
        inv.a[1] = F.mul(di, m2(1, 8, 2, 7));
        inv.a[2] = F.mul(di, m2(1, 5, 2, 4));
        inv.a[3] = F.mul(di, m2(3, 8, 5, 6));
        inv.a[4] = F.mul(di, m2(0, 8, 2, 6));
        inv.a[5] = F.mul(di, m2(0, 5, 2, 3));
        inv.a[6] = F.mul(di, m2(3, 7, 4, 6));
        inv.a[7] = F.mul(di, m2(0, 7, 1, 6));
        inv.a[8] = F.mul(di, m2(0, 4, 1, 3));
        return inv;
    }

    Matrix3 pow(const Matrix3& M, std::uint64_t n) const {
        Matrix3 acc = identity();
        Matrix3 base = M;
        while (n) {
            if (n & 1) acc = mul(acc, base);
            base = mul(base, base);
            n >>= 1;
        }
        return acc;
    }

    Point apply(const Matrix3& M, const Point& p) const {
        const GF2e& F = t_->field();
        fe v[3];
        for (int i = 0; i < 3; ++i)
            v[i] = F.mul(M.a[3 * i], p.c[0]) ^ F.mul(M.a[3 * i + 1], p.c[1]) ^ F.mul(M.a[3 * i + 2], p.c[2]);
        return normalize_point(v[0], v[1], v[2]);
    }

    Line apply_to_line(const Matrix3& M, const Line& l) const {
        const Matrix3 mi = inverse(M);
        const GF2e& F = t_->field();
        fe v[3];
        for (int j = 0; j < 3; ++j)
            v[j] = F.mul(l.c[0], mi.a[j]) ^ F.mul(l.c[1], mi.a[3 + j]) ^ F.mul(l.c[2], mi.a[6 + j]);
        return normalize_line(v[0], v[1], v[2]);
    }

    // ---- the pencil of conics x² + bxy + y² + l z² = 0 ---------------------

    // Smallest b in GF(q)* for which x² + bx + 1 has no root in GF(q);
    // verified by exhaustive root search. Such b exists for every even q.
    fe pencil_parameter() const {
        const GF2e& F = t_->field();
        for (fe b : t_->gfq().elements) {
            if (b == 0) continue;
            bool rootless = true;
            for (fe x : t_->gfq().elements)
                if ((F.mul(x, x) ^ F.mul(b, x) ^ 1u) == 0) {
                    rootless = false;
                    break;
                }
            if (rootless) return b;
        }
        throw std::logic_error("no rootless quadratic parameter found");
    }

    struct ConicPoints {
        bool degenerate = false;
        std::vector<Point> points;  // canonical order
    };

    // F_l; for l = 0 the conic degenerates to the single point (0,0,1).
    ConicPoints conic(fe b, fe l) const {
        if (l == 0) return ConicPoints{true, {Point{{0, 0, 1}}}};
        const GF2e& F = t_->field();
        ConicPoints out;
        const std::uint64_t np = size();
        for (std::uint64_t i = 0; i < np; ++i) {
            const Point p = point_at(i);
            const fe x = p.c[0], y = p.c[1], z = p.c[2];
            if ((F.mul(x, x) ^ F.mul(b, F.mul(x, y)) ^ F.mul(y, y) ^ F.mul(l, F.mul(z, z))) == 0)
                out.points.push_back(p);
        }
        return out;
    }

    // ---- matrix groups ------------------------------------------------------

    // all [[s+bt, t, 0], [t, s, 0], [0, 0, 1]] with s² + b·st + t² = 1,
    // found by exhaustive solve over GF(q)²
    std::vector<Matrix3> group_g1(fe b) const {
        const GF2e& F = t_->field();
        std::vector<Matrix3> g;
        for (fe s : t_->gfq().elements)
            for (fe t : t_->gfq().elements)
                if ((F.mul(s, s) ^ F.mul(b, F.mul(s, t)) ^ F.mul(t, t)) == 1)
                    g.push_back(Matrix3{{static_cast<fe>(s ^ F.mul(b, t)), t, 0, t, s, 0, 0, 0, 1}});
        return g;
    }

    // diag(1, 1, γ) for γ in GF(d)*
    std::vector<Matrix3> group_g2() const {
        std::vector<Matrix3> g;
        for (fe gamma : t_->gfd().elements)
            if (gamma != 0) g.push_back(Matrix3{{1, 0, 0, 0, 1, 0, 0, 0, gamma}});
        return g;
    }

    // Full multiplicative closure of the given matrices. A small generating
    // subset is grown until it reproduces every input element, so the cost is
    // |closure| × (few generators) rather than |closure| × |gens|.
    std::vector<Matrix3> group_closure(const std::vector<Matrix3>& gens, std::size_t cap) const {
        std::unordered_set<Matrix3, Matrix3Hash> closure;
        std::vector<Matrix3> selected;
        auto rebuild = [&]() {
            closure.clear();
            std::vector<Matrix3> queue;
            for (const Matrix3& g : selected)
                if (closure.insert(g).second) {
                    if (closure.size() > cap) throw std::length_error("group closure exceeds cap");
                    queue.push_back(g);
                }
            for (std::size_t head = 0; head < queue.size(); ++head) {
                const Matrix3 x = queue[head];
                for (const Matrix3& g : selected) {
                    Matrix3 y = mul(x, g);
                    if (closure.insert(y).second) {
                        if (closure.size() > cap) throw std::length_error("group closure exceeds cap");
                        queue.push_back(y);
                    }
                }
            }
        };
        for (const Matrix3& g : gens) {
            if (closure.count(g)) continue;
            selected.push_back(g);
            rebuild();
        }
        std::vector<Matrix3> out(closure.begin(), closure.end());
        std::sort(out.begin(), out.end());
        return out;
    }

    // order of M given that it divides group_order; 0 if it does not
    std::uint64_t element_order_in(const Matrix3& M, std::uint64_t group_order) const {
        if (!(pow(M, group_order) == identity())) return 0;
        std::uint64_t ord = group_order;
        for (std::uint64_t p : detail::prime_factors(group_order))
            while (ord % p == 0 && pow(M, ord / p) == identity()) ord /= p;
        return ord;
    }

    struct CyclicityCertificate {
        bool cyclic = false;
        Matrix3 generator{};
        std::uint64_t order = 0;
    };

    // Certifies cyclicity by exhibiting an element of full order.
    CyclicityCertificate cyclicity(const std::vector<Matrix3>& group) const {
        const std::uint64_t sz = group.size();
        if (sz == 0) return {};
        for (const Matrix3& M : group)
            if (element_order_in(M, sz) == sz) return CyclicityCertificate{true, M, sz};
        return CyclicityCertificate{false, identity(), 0};
    }

    std::vector<Point> orbit(const std::vector<Matrix3>& group, const Point& p) const {
        std::set<Point> seen;
        for (const Matrix3& M : group) seen.insert(apply(M, p));
        std::vector<Point> out(seen.begin(), seen.end());
        sort_points(out);
        return out;
    }

    std::uint64_t stabilizer_size(const std::vector<Matrix3>& group, const Point& p) const {
        std::uint64_t cnt = 0;
        for (const Matrix3& M : group)
            if (apply(M, p) == p) ++cnt;
        return cnt;
    }

  private:
    const Tower* t_;
    std::uint64_t q_;
};

}  // namespace maxarc
