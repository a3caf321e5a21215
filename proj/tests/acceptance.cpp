// Acceptance suite: one line per criterion, exit code = number of failures.
// Every check is exact; the parameter sets follow the stated bounds.

#include <chrono>
#include <iostream>
#include <sstream>

#include "maxarc/cli.hpp"

using namespace maxarc;

namespace {

int failures = 0;
unsigned jobs() {
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : std::min(hc, 4u);
}

void report(int num, const std::string& name, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << std::setw(2) << num << ": " << name;
    if (!detail.empty()) std::cout << "  (" << detail << ")";
    std::cout << std::endl;
    if (!pass) ++failures;
}

std::string param_tag(const std::vector<std::pair<unsigned, unsigned>>& params) {
    std::ostringstream os;
    os << params.size() << " parameter pairs up to (m,k)=(" << params.back().first << "," << params.back().second
       << ")";
    return os.str();
}

// 2km <= 16 for the geometry criteria, q <= 64 (i.e. 2km <= 12) for the code criteria
const std::vector<std::pair<unsigned, unsigned>> geometry_params = sweep_parameters(16);
const std::vector<std::pair<unsigned, unsigned>> code_params = sweep_parameters(12);

struct Fixture {
    Tower t;
    Plane pl;
    fe b;
    ArcPartition part;
    explicit Fixture(unsigned m, unsigned k)
        : t(m, k), pl(t), b(pl.pencil_parameter()), part(build_partition(pl, b)) {}
};

void criterion1_arcs() {
    bool pass = true;
    std::string bad;
    for (const auto& [m, k] : geometry_params) {
        const Fixture fx(m, k);
        const std::uint64_t n1 = fx.t.n() + 1;
        for (const auto& arc : {fx.part.arcs.front()}) {
            const auto rep = verify_maximal(fx.pl, arc);
            if (arc.points.size() != n1 || !rep.maximal) {
                pass = false;
                bad = "(m,k)=(" + std::to_string(m) + "," + std::to_string(k) + ")";
            }
        }
    }
    report(1, "Denniston arc size and exhaustive line meets", pass,
           pass ? param_tag(geometry_params) : bad);
}

void criterion2_group() {
    bool pass = true;
    std::string bad;
    for (const auto& [m, k] : geometry_params) {
        const Fixture fx(m, k);
        auto gens = fx.pl.group_g1(fx.b);
        const auto g2 = fx.pl.group_g2();
        gens.insert(gens.end(), g2.begin(), g2.end());
        const std::uint64_t expected = (fx.t.q() + 1) * (fx.t.d() - 1);
        bool ok = true;
        try {
            const auto G = fx.pl.group_closure(gens, expected);
            ok = G.size() == expected;
            if (ok) {
                const auto cyc = fx.pl.cyclicity(G);
                ok = cyc.cyclic && cyc.order == expected;
            }
            if (ok)
                for (const auto& arc : fx.part.arcs) {
                    const auto rep = verify_group_action(fx.pl, arc, G);
                    ok = ok && rep.nucleus_fixed && rep.sharply_transitive;
                }
        } catch (const std::length_error&) {
            ok = false;  // closure overflowed its certified cap
        }
        if (!ok) {
            pass = false;
            bad = "(m,k)=(" + std::to_string(m) + "," + std::to_string(k) + ")";
        }
    }
    report(2, "cyclic group of order (q+1)(d-1), sharply transitive", pass,
           pass ? param_tag(geometry_params) : bad);
}

void criterion3_partition() {
    bool pass = true;
    std::string bad;
    for (const auto& [m, k] : geometry_params) {
        const Fixture fx(m, k);
        const auto rep = verify_partition(fx.pl, fx.part);
        const bool ok = fx.part.arcs.size() == fx.t.N() && rep.subgroups_ok && rep.pairwise_nucleus_only &&
                        rep.covers_affine && rep.covered_points == fx.t.q() * fx.t.q();
        if (!ok) {
            pass = false;
            bad = "(m,k)=(" + std::to_string(m) + "," + std::to_string(k) + ")";
        }
    }
    report(3, "partition of AG(2,q) into (q-1)/(d-1) arcs", pass, pass ? param_tag(geometry_params) : bad);
}

void criterion4_cyclic_code() {
    bool pass = true;
    std::string bad;
    for (const auto& [m, k] : code_params) {
        const Tower t(m, k);
        const GF2e& F = t.field();
        const auto c = build_irreducible_cyclic(t);
        const auto wd = weight_distribution(c, jobs());
        WeightDist expect{{0, 1}, {(t.d() - 1) * t.q(), mpz_class(static_cast<unsigned long>(t.q() * t.q() - 1))}};
        bool ok = wd == expect;
        const auto dd = dual_distance_upto(c);
        ok = ok && dd.exact && dd.distance == (m == 1 ? 3u : 2u);
        if (m > 1) {
            const fe s = F.pow(t.beta(), static_cast<long long>(t.q() + 1));
            for (const auto& row : c.gen) ok = ok && (F.mul(s, row[0]) ^ row[t.q() + 1]) == 0;
        }
        if (!ok) {
            pass = false;
            bad = "(m,k)=(" + std::to_string(m) + "," + std::to_string(k) + ")";
        }
    }
    report(4, "weight enumerator 1+(q²-1)z^{(d-1)q} and dual distance of C", pass,
           pass ? param_tag(code_params) : bad);
}

void criterion5_concatenation() {
    bool pass = true;
    std::string bad;
    for (const auto& [m, k] : code_params) {
        const Tower t(m, k);
        const auto rep = check_concatenation(t);
        if (!rep.ok()) {
            pass = false;
            bad = "(m,k)=(" + std::to_string(m) + "," + std::to_string(k) + ")";
        }
    }
    report(5, "concatenation identity and scalar set = GF(d)*", pass, pass ? param_tag(code_params) : bad);
}

void criterion6_zcounts() {
    bool pass = true;
    std::string bad;
    for (const auto& [m, k] : code_params) {  // exactly the towers with r <= 4096
        const Tower t(m, k);
        std::uint64_t violations = 0;
        for (std::uint64_t a = 1; a < t.r(); ++a) {
            std::map<fe, std::uint64_t> hist;
            for (std::uint64_t x = 0; x < t.r(); ++x) {
                const fe xn = t.field().pow(static_cast<fe>(x), static_cast<long long>(t.N()));
                ++hist[t.trace_rq(t.field().mul(static_cast<fe>(a), xn))];
            }
            for (fe bb : t.gfq().elements) {
                const std::uint64_t z = hist.count(bb) ? hist.at(bb) : 0;
                if (bb == 0) {
                    if (z != (t.d() - 1) * t.N() + 1) ++violations;
                } else if (z != t.d() * t.N() && z != 0) {
                    ++violations;
                }
            }
        }
        if (violations != 0) {
            pass = false;
            bad = "(m,k)=(" + std::to_string(m) + "," + std::to_string(k) + ")";
        }
    }
    report(6, "Z(a,b) trichotomy over all of GF(r)* x GF(q)", pass, pass ? param_tag(code_params) : bad);
}

void criterion7_augmented() {
    bool pass = true;
    std::string bad;
    for (const auto& [m, k] : code_params) {
        const Tower t(m, k);
        const auto aug = augment(build_irreducible_cyclic(t));
        bool ok = rank_of(aug.gen, t.field()) == 3;
        const auto wd = weight_distribution(aug, jobs());
        const std::uint64_t n = t.n(), d = t.d();
        for (const auto& [w, cnt] : wd)
            if (w != 0 && w != n - d && w != n - d + 1 && w != n) ok = false;
        if (m * k > 1) {  // the dual is nontrivial away from the boundary
            const auto dd = dual_distance_upto(aug);
            ok = ok && dd.exact && dd.distance == (m == 1 ? 4u : 3u);
        }
        if (!ok) {
            pass = false;
            bad = "(m,k)=(" + std::to_string(m) + "," + std::to_string(k) + ")";
        }
    }
    report(7, "augmented code: dimension 3, weights in {n-d, n-d+1, n}, dual distance", pass,
           pass ? param_tag(code_params) + "; trivial dual reported at (1,1)" : bad);
}

void criterion8_extended() {
    bool pass = true;
    std::string bad;
    for (const auto& [m, k] : code_params) {
        const Tower t(m, k);
        const std::uint64_t q = t.q(), d = t.d(), n = t.n();
        const auto ext = extend(augment(build_irreducible_cyclic(t)));
        const auto wd = weight_distribution(ext, jobs());
        const mpz_class q2m1 = mpz_class(static_cast<unsigned long>(q)) * static_cast<unsigned long>(q) - 1;
        const mpz_class q3m1 = mpz_class(static_cast<unsigned long>(q)) * static_cast<unsigned long>(q) *
                                   static_cast<unsigned long>(q) -
                               1;
        WeightDist expect;
        expect[0] = 1;
        const mpz_class low_num = q2m1 * static_cast<unsigned long>(n + 1);
        const mpz_class high_num = q3m1 * static_cast<unsigned long>(d) - low_num;
        bool ok = mpz_divisible_ui_p(low_num.get_mpz_t(), static_cast<unsigned long>(d)) &&
                  mpz_divisible_ui_p(high_num.get_mpz_t(), static_cast<unsigned long>(d));
        expect[n + 1 - d] = low_num / static_cast<unsigned long>(d);
        expect[n + 1] = high_num / static_cast<unsigned long>(d);
        ok = ok && wd == expect;

        const mpz_class a3_formula = mpz_class(static_cast<unsigned long>(d - 2)) *
                                     static_cast<unsigned long>(d - 1) * q2m1 *
                                     static_cast<unsigned long>(q * d - q + d) / 6;
        const auto low = macwilliams_transform(wd, ext.length, 3, q, 3);
        auto coeff = [&](std::size_t w) { return low.count(w) ? low.at(w) : mpz_class(0); };
        ok = ok && coeff(1) == 0 && coeff(2) == 0 && coeff(3) == a3_formula;
        if (ext.length < 1024) {  // exhaustive triple search within its cap
            const auto w3 = weight3_dual_words(ext, std::uint64_t(1) << 28);
            ok = ok && w3.word_count == a3_formula;
        }
        if (!ok) {
            pass = false;
            bad = "(m,k)=(" + std::to_string(m) + "," + std::to_string(k) + ")";
        }
    }
    report(8, "extended code: two-weight enumerator, A1⊥=A2⊥=0, A3⊥ closed form", pass,
           pass ? param_tag(code_params) : bad);
}

void criterion9_designs() {
    bool pass = true;
    std::string bad;
    std::vector<std::pair<unsigned, unsigned>> used;
    for (const auto& [m, k] : code_params) {
        const Tower t0(m, k);
        if (m * k == 1 || t0.n() + 1 > 64) continue;  // the stated bounds
        used.emplace_back(m, k);
        const Tower t(m, k);
        const Plane pl(t);
        const std::uint64_t q = t.q(), d = t.d(), n = t.n(), v = n + 1;
        const auto ext = extend(augment(build_irreducible_cyclic(t)));
        const auto sup = supports_of_weight(ext, v - d);
        const auto chk = verify_design(sup.design, 2);
        bool ok = chk.is_design && sup.design.blocks.size() == (q + 1) * v / d &&
                  chk.lambda == (v - d) * (n - d) / (d * (d - 1)) && sup.classes_match_blocks;
        // the complementary design is the Steiner design of line sections
        const auto arc = arc_from_code(pl, ext);
        const auto steiner = complementary_steiner(pl, arc);
        const auto schk = verify_design(steiner, 2);
        ok = ok && schk.is_design && schk.lambda == 1 && schk.block_sizes_equal && steiner.k == d;
        std::set<std::vector<std::size_t>> comp;
        for (const auto& blk : sup.design.blocks) {
            std::vector<std::uint8_t> inb(v, 0);
            for (std::size_t p : blk) inb[p] = 1;
            std::vector<std::size_t> cc;
            for (std::size_t p = 0; p < v; ++p)
                if (!inb[p]) cc.push_back(p);
            comp.insert(std::move(cc));
        }
        ok = ok && comp == std::set<std::vector<std::size_t>>(steiner.blocks.begin(), steiner.blocks.end());
        if (!ok) {
            pass = false;
            bad = "(m,k)=(" + std::to_string(m) + "," + std::to_string(k) + ")";
        }
    }
    report(9, "minimum-weight supports: 2-design, and its Steiner complement", pass,
           pass ? param_tag(used) : bad);
}

void criterion10_dual3_designs() {
    bool pass = true;
    std::string bad;
    std::vector<std::pair<unsigned, unsigned>> used;
    for (const auto& [m, k] : code_params) {
        const Tower t0(m, k);
        if (m == 1 || t0.n() + 1 > 64) continue;
        used.emplace_back(m, k);
        const Tower t(m, k);
        const std::uint64_t d = t.d(), n = t.n();
        const auto ext = extend(augment(build_irreducible_cyclic(t)));
        const auto dw3 = dual_weight3_design(ext);
        const auto chk = verify_design(dw3.design, 2);
        const bool ok = chk.is_design && chk.lambda == d - 2 &&
                        dw3.design.blocks.size() == (d - 2) * n * (n + 1) / 6;
        if (!ok) {
            pass = false;
            bad = "(m,k)=(" + std::to_string(m) + "," + std::to_string(k) + ")";
        }
    }
    report(10, "weight-3 dual supports: 2-(n+1, 3, d-2) with (d-2)n(n+1)/6 blocks", pass,
           pass ? param_tag(used) : bad);
}

void criterion11_cross_model() {
    bool pass = true;
    std::string bad;
    for (const auto& [m, k] : code_params) {
        const Tower t(m, k);
        const Plane pl(t);
        const auto ext = extend(augment(build_irreducible_cyclic(t)));
        const auto arc = arc_from_code(pl, ext);
        const auto cyc = cyclotomic_arc(pl);
        const bool ok = verify_maximal(pl, arc).maximal && verify_maximal(pl, cyc).maximal &&
                        arc.points.size() == cyc.points.size() && arc.degree == cyc.degree &&
                        arc.points.size() == t.n() + 1;
        if (!ok) {
            pass = false;
            bad = "(m,k)=(" + std::to_string(m) + "," + std::to_string(k) + ")";
        }
    }
    report(11, "code-derived arc and cyclotomic arc are both maximal (n+1, d)-arcs", pass,
           pass ? param_tag(code_params) : bad);
}

void criterion12_falsifiability() {
    bool pass = true;
    std::string bad;
    for (const auto& [m, k] : {std::pair{1u, 2u}, {2u, 2u}}) {
        const Tower t(m, k);
        const Plane pl(t);
        const auto part = build_partition(pl, pl.pencil_parameter());
        const auto& arc = part.arcs.front();
        bool ok = verify_maximal(pl, arc).maximal;
        for (std::size_t i = 0; i < arc.points.size() && ok; ++i) {
            MaximalArc broken = arc;
            broken.points.erase(broken.points.begin() + i);
            if (verify_maximal(pl, broken).maximal) ok = false;
        }
        const auto ext = extend(augment(build_irreducible_cyclic(t)));
        const auto sup = supports_of_weight(ext, t.n() + 1 - t.d());
        ok = ok && verify_design(sup.design, 2).is_design;
        for (std::size_t i = 0; i < sup.design.blocks.size() && ok; ++i) {
            Design broken = sup.design;
            broken.blocks.erase(broken.blocks.begin() + i);
            if (verify_design(broken, 2).is_design) ok = false;
        }
        if (!ok) {
            pass = false;
            bad = "(m,k)=(" + std::to_string(m) + "," + std::to_string(k) + ")";
        }
    }
    report(12, "every single-point and single-block deletion flips its certificate", pass,
           pass ? "all deletions at (1,2) and (2,2)" : bad);
}

void criterion13_determinism() {
    namespace fs = std::filesystem;
    const fs::path root = "acceptance_tmp";
    fs::remove_all(root);
    RunConfig a, b;
    a.out_dir = (root / "sweepA").string();
    b.out_dir = (root / "sweepB").string();
    a.verbosity = b.verbosity = -1;
    a.jobs = 1;
    b.jobs = jobs();  // partitioning must not change any output
    bool ok = run_sweep(8, a);
    ok = run_sweep(8, b) && ok;
    std::size_t compared = 0;
    for (auto it = fs::recursive_directory_iterator(a.out_dir); it != fs::recursive_directory_iterator(); ++it) {
        if (!it->is_regular_file()) continue;
        const auto rel = fs::relative(it->path(), a.out_dir);
        const auto other = fs::path(b.out_dir) / rel;
        if (!fs::exists(other) || read_text(it->path()) != read_text(other)) {
            ok = false;
            break;
        }
        ++compared;
    }
    ok = ok && compared > 0;

    // a different irreducible modulus must reproduce every certificate value
    for (const auto& [m, k] : {std::pair{1u, 2u}, {2u, 2u}}) {
        const Tower canonical(m, k);
        fe other = 0;
        for (fe cand = canonical.field().modulus() + 2; cand < (2u << canonical.field().degree()); cand += 2)
            if (poly::irreducible(cand) &&
                poly::degree(cand) == static_cast<int>(canonical.field().degree())) {
                other = cand;
                break;
            }
        RunConfig c1, c2;
        c1.m = c2.m = m;
        c1.k = c2.k = k;
        c1.verbosity = c2.verbosity = -1;
        c1.out_dir = (root / "modA").string();
        c2.out_dir = (root / "modB").string();
        c2.modulus = other;
        const auto o1 = run_verify(c1, {"all"});
        const auto o2 = run_verify(c2, {"all"});
        ok = ok && o1.all_pass && o2.all_pass && o1.certs.size() == o2.certs.size();
        for (std::size_t i = 0; ok && i < o1.certs.size(); ++i)
            ok = o1.certs[i].claim == o2.certs[i].claim && o1.certs[i].expected == o2.certs[i].expected &&
                 o1.certs[i].computed == o2.certs[i].computed;
    }
    report(13, "byte-identical sweeps; counts independent of the modulus", ok);
    fs::remove_all(root);
}

}  // namespace

int main() {
    const auto start = std::chrono::steady_clock::now();
    criterion1_arcs();
    criterion2_group();
    criterion3_partition();
    criterion4_cyclic_code();
    criterion5_concatenation();
    criterion6_zcounts();
    criterion7_augmented();
    criterion8_extended();
    criterion9_designs();
    criterion10_dual3_designs();
    criterion11_cross_model();
    criterion12_falsifiability();
    criterion13_determinism();
    const auto secs =
        std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria FAILED") << " in "
              << secs << " s" << std::endl;
    return failures;
}
