#pragma once

// Construction, verification and sweep drivers shared by the command-line
// tool and the test suites. All outputs are deterministic; rerunning any
// command over existing outputs rewrites byte-identical files.

#include <iomanip>
#include <iostream>

#include "certify.hpp"
#include "io.hpp"

namespace maxarc {

struct RunConfig {
    unsigned m = 1, k = 1;
    std::optional<fe> modulus;  // overrides the canonical modulus of GF(r)
    std::string out_dir = "out";
    std::string format = "json";  // certificate emission: json | csv (json always written)
    unsigned jobs = 1;
    int verbosity = 0;  // < 0 silences the table
};

inline std::filesystem::path run_dir(const RunConfig& cfg) {
    return std::filesystem::path(cfg.out_dir) / ("m" + std::to_string(cfg.m) + "k" + std::to_string(cfg.k));
}

// ---- construct --------------------------------------------------------------

inline void run_construct(const RunConfig& cfg) {
    const Tower t(cfg.m, cfg.k, cfg.modulus);
    const Plane pl(t);
    const fe b = pl.pencil_parameter();
    const auto part = build_partition(pl, b);
    const auto bundle = build_code_bundle(t);
    const auto dir = run_dir(cfg);
    write_json_atomic(dir / "field.json", field_to_json(t));
    write_json_atomic(dir / "arc.json", arc_to_json(pl, part.arcs.front()));
    write_json_atomic(dir / "partition.json", partition_to_json(pl, part));
    write_json_atomic(dir / "code_cyclic.json", code_to_json(bundle.cyclic));
    write_json_atomic(dir / "code_short.json", code_to_json(bundle.shortened));
    write_json_atomic(dir / "code_augmented.json", code_to_json(bundle.augmented));
    write_json_atomic(dir / "code_extended.json", code_to_json(bundle.extended));
}

// ---- verify -----------------------------------------------------------------

namespace detail {

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += "\"";
    return out;
}

inline ordered_json certificates_to_json(const std::vector<Certificate>& certs) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : certs) {
        ordered_json j;
        j["claim"] = c.claim;
        j["formula"] = c.formula;
        j["expected"] = c.expected;
        j["computed"] = c.computed;
        j["pass"] = c.pass;
        j["skipped"] = c.skipped;
        if (c.skipped) j["skip_reason"] = c.skip_reason;
        if (!c.witness.empty()) j["witness"] = c.witness;
        arr.push_back(std::move(j));
    }
    return arr;
}

inline std::string certificates_to_csv(const std::vector<Certificate>& certs) {
    std::ostringstream os;
    os << "claim,formula,expected,computed,pass,skipped,skip_reason,witness\n";
    for (const auto& c : certs)
        os << csv_escape(c.claim) << "," << csv_escape(c.formula) << "," << csv_escape(c.expected) << ","
           << csv_escape(c.computed) << "," << (c.pass ? "true" : "false") << "," << (c.skipped ? "true" : "false")
           << "," << csv_escape(c.skip_reason) << "," << csv_escape(c.witness) << "\n";
    return os.str();
}

inline void print_certificates(const std::vector<Certificate>& certs, int verbosity) {
    if (verbosity < 0) return;
    for (const auto& c : certs) {
        const char* tag = c.skipped ? "[SKIP]" : (c.pass ? "[PASS]" : "[FAIL]");
        std::cout << tag << " " << std::left << std::setw(34) << c.claim << " ";
        if (c.skipped) {
            std::cout << c.skip_reason;
        } else {
            std::cout << c.formula << " = " << c.expected << "; computed " << c.computed;
        }
        if (verbosity > 0 && !c.witness.empty()) std::cout << "  [" << c.witness << "]";
        std::cout << "\n";
    }
}

template <typename Loader, typename Builder>
auto load_or_build(const std::filesystem::path& file, Loader&& load, Builder&& build) {
    if (std::filesystem::exists(file)) return load(read_json(file));
    return build();
}

}  // namespace detail

struct VerifyOutcome {
    std::vector<Certificate> certs;
    bool all_pass = true;
    std::uint64_t passed = 0, failed = 0, skipped = 0;
};

// Verifies the requested targets against the files under the run directory
// when they exist (so tampered files fail their certificates), rebuilding
// anything missing on the fly.
inline VerifyOutcome run_verify(const RunConfig& cfg, std::vector<std::string> targets) {
    const Tower t(cfg.m, cfg.k, cfg.modulus);
    const Plane pl(t);
    const fe b = pl.pencil_parameter();
    const auto dir = run_dir(cfg);

    bool want_arc = false, want_partition = false, want_group = false, want_code = false, want_designs = false;
    if (targets.empty()) targets.push_back("all");
    for (const auto& tg : targets) {
        if (tg == "all") {
            want_arc = want_partition = want_group = want_code = want_designs = true;
        } else if (tg == "arc") {
            want_arc = true;
        } else if (tg == "partition") {
            want_partition = true;
        } else if (tg == "group") {
            want_group = true;
        } else if (tg == "code") {
            want_code = true;
        } else if (tg == "designs") {
            want_designs = true;
        } else {
            throw std::invalid_argument("unknown verify target '" + tg +
                                        "' (expected arc, partition, group, code, designs or all)");
        }
    }

    const CertifyContext ctx{pl, cfg.jobs, VerifyCaps{}};
    VerifyOutcome out;

    std::optional<ArcPartition> part;
    auto the_partition = [&]() -> const ArcPartition& {
        if (!part)
            part = detail::load_or_build(
                dir / "partition.json", [&](const ordered_json& j) { return partition_from_json(pl, j); },
                [&] { return build_partition(pl, b); });
        return *part;
    };

    if (want_arc) {
        const MaximalArc arc = detail::load_or_build(
            dir / "arc.json", [&](const ordered_json& j) { return arc_from_json(pl, j); },
            [&] { return the_partition().arcs.front(); });
        auto certs = certify_arc(ctx, arc);
        out.certs.insert(out.certs.end(), certs.begin(), certs.end());
    }
    if (want_partition) {
        auto certs = certify_partition(ctx, the_partition());
        out.certs.insert(out.certs.end(), certs.begin(), certs.end());
    }
    if (want_group) {
        auto certs = certify_group(ctx, the_partition(), b);
        out.certs.insert(out.certs.end(), certs.begin(), certs.end());
    }

    std::optional<CodeBundle> bundle;
    auto the_bundle = [&]() -> const CodeBundle& {
        if (!bundle) {
            CodeBundle fresh = build_code_bundle(t);
            bundle = CodeBundle{
                detail::load_or_build(
                    dir / "code_cyclic.json", [&](const ordered_json& j) { return code_from_json(t, j); },
                    [&] { return fresh.cyclic; }),
                detail::load_or_build(
                    dir / "code_short.json", [&](const ordered_json& j) { return code_from_json(t, j); },
                    [&] { return fresh.shortened; }),
                detail::load_or_build(
                    dir / "code_augmented.json", [&](const ordered_json& j) { return code_from_json(t, j); },
                    [&] { return fresh.augmented; }),
                detail::load_or_build(
                    dir / "code_extended.json", [&](const ordered_json& j) { return code_from_json(t, j); },
                    [&] { return fresh.extended; }),
            };
        }
        return *bundle;
    };

    if (want_code) {
        auto res = certify_code(ctx, the_bundle());
        out.certs.insert(out.certs.end(), res.certs.begin(), res.certs.end());
        if (res.wd_cyclic) write_text_atomic(dir / "wd_cyclic.csv", weight_dist_csv(*res.wd_cyclic));
        if (res.wd_augmented) write_text_atomic(dir / "wd_augmented.csv", weight_dist_csv(*res.wd_augmented));
        if (res.wd_extended) write_text_atomic(dir / "wd_extended.csv", weight_dist_csv(*res.wd_extended));
    }
    if (want_designs) {
        auto res = certify_designs(ctx, the_bundle().extended);
        out.certs.insert(out.certs.end(), res.certs.begin(), res.certs.end());
        if (res.minweight)
            write_json_atomic(dir / "design_minweight.json", design_to_json(*res.minweight, 2, res.minweight_lambda));
        if (res.steiner) write_json_atomic(dir / "design_steiner.json", design_to_json(*res.steiner, 2, 1));
        if (res.dual3) write_json_atomic(dir / "design_dual3.json", design_to_json(*res.dual3, 2, res.dual3_lambda));
    }

    for (const auto& c : out.certs) {
        if (c.skipped)
            ++out.skipped;
        else if (c.pass)
            ++out.passed;
        else {
            ++out.failed;
            out.all_pass = false;
        }
    }
    write_json_atomic(dir / "certificates.json", detail::certificates_to_json(out.certs));
    if (cfg.format == "csv") write_text_atomic(dir / "certificates.csv", detail::certificates_to_csv(out.certs));
    detail::print_certificates(out.certs, cfg.verbosity);
    if (cfg.verbosity >= 0)
        std::cout << "verified m=" << cfg.m << " k=" << cfg.k << ": " << out.passed << " passed, " << out.failed
                  << " failed, " << out.skipped << " skipped\n";
    return out;
}

// ---- sweep ------------------------------------------------------------------

struct SweepRow {
    unsigned m, k;
    std::uint64_t q, d, n, N, r;
    std::uint64_t passed, failed, skipped;
};

inline std::vector<std::pair<unsigned, unsigned>> sweep_parameters(unsigned max_bits) {
    std::vector<std::pair<unsigned, unsigned>> params;
    for (unsigned m = 1; 2 * m <= max_bits; ++m)
        for (unsigned k = 1; 2 * m * k <= max_bits; ++k) params.emplace_back(m, k);
    std::sort(params.begin(), params.end(), [](auto a, auto b) {
        return std::make_pair(a.first * a.second, a.first) < std::make_pair(b.first * b.second, b.first);
    });
    return params;
}

// Runs construct + verify(all) for every (m,k) with 2km <= max_bits and
// writes a summary CSV; returns true when every row is failure-free.
inline bool run_sweep(unsigned max_bits, RunConfig base) {
    if (max_bits > Tower::kMaxBits)
        throw std::length_error("sweep: max_bits " + std::to_string(max_bits) + " exceeds the cap " +
                                std::to_string(Tower::kMaxBits));
    std::vector<SweepRow> rows;
    bool all_ok = true;
    for (const auto& [m, k] : sweep_parameters(max_bits)) {
        RunConfig cfg = base;
        cfg.m = m;
        cfg.k = k;
        cfg.verbosity = -1;
        run_construct(cfg);
        const auto outcome = run_verify(cfg, {"all"});
        const Tower t(m, k, cfg.modulus);
        rows.push_back({m, k, t.q(), t.d(), t.n(), t.N(), t.r(), outcome.passed, outcome.failed, outcome.skipped});
        all_ok = all_ok && outcome.all_pass;
        if (base.verbosity >= 0)
            std::cout << "sweep m=" << m << " k=" << k << " q=" << t.q() << " d=" << t.d() << ": " << outcome.passed
                      << " passed, " << outcome.failed << " failed, " << outcome.skipped << " skipped\n";
    }
    std::ostringstream os;
    os << "m,k,q,d,n,N,r,passed,failed,skipped\n";
    for (const auto& r : rows)
        os << r.m << "," << r.k << "," << r.q << "," << r.d << "," << r.n << "," << r.N << "," << r.r << ","
           << r.passed << "," << r.failed << "," << r.skipped << "\n";
    write_text_atomic(std::filesystem::path(base.out_dir) / "summary.csv", os.str());
    return all_ok;
}

}  // namespace maxarc
