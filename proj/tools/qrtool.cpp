// Command-line front end: builds (extended) binary quadratic residue codes,
// computes Jacobi polynomials, harmonic weight enumerators, and design
// reports, and re-derives the published length-42 results as named checks.
//
// Exit codes: 0 success, 2 enumeration budget refusal, 3 check failure,
// 4 bad input.

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <qrdesigns/designs.hpp>
#include <qrdesigns/enumerate.hpp>
#include <qrdesigns/harmonic.hpp>
#include <qrdesigns/jacobi.hpp>
#include <qrdesigns/json_io.hpp>
#include <qrdesigns/proj_geom.hpp>
#include <qrdesigns/qr.hpp>
#include <qrdesigns/reference42.hpp>

using namespace qrd;
using nlohmann::json;

namespace {

constexpr int kExitBudget = 2;
constexpr int kExitCheckFailed = 3;
constexpr int kExitBadInput = 4;

struct RunConfig {
    int p = 0;
    std::string T;
    int shell_weight = -1;
    int t = 3;
    bool all_shells = false;
    bool union_shells = false;
    bool extended = false;
    std::string format = "text";
    std::string out_file;
    int budget = default_enum_budget();
    int threads = 0;

    int effective_threads() const {
        if (threads > 0) return threads;
        unsigned h = std::thread::hardware_concurrency();
        return h ? static_cast<int>(h) : 1;
    }
};

LinearCode extended_qr(int p) { return cyclic_code(qr_generator_polynomial(p), p).extend_parity(); }

std::vector<int> parse_labels(const std::string& spec, int p) {
    std::vector<int> out;
    std::string cur;
    std::istringstream in(spec);
    while (std::getline(in, cur, ',')) {
        if (cur == "inf")
            out.push_back(infinity_point(p));
        else {
            try {
                out.push_back(std::stoi(cur));
            } catch (const std::exception&) {
                throw CLI::ValidationError("T", "bad coordinate label '" + cur + "'");
            }
        }
    }
    return out;
}

void require_design_prime(int p) {
    if (!is_prime(p) || p % 8 != 1)
        throw CLI::ValidationError("p", "design commands need a prime p = 1 mod 8");
}

int cmd_build(const RunConfig& cfg) {
    if (!is_prime(cfg.p) || (cfg.p % 8 != 1 && cfg.p % 8 != 7)) {
        std::cerr << "error: construction needs a prime p = +-1 mod 8\n";
        return kExitBadInput;
    }
    LinearCode C = cyclic_code(qr_generator_polynomial(cfg.p), cfg.p);
    if (cfg.extended) C = C.extend_parity();
    if (!cfg.out_file.empty()) {
        std::ofstream f(cfg.out_file);
        f << C.to_text();
    }
    if (cfg.format == "json") {
        json j = to_json(C);
        if (C.dimension() <= cfg.budget)
            j["weight_distribution"] = weight_distribution(C, cfg.effective_threads(), cfg.budget).counts;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "n = " << C.length() << ", k = " << C.dimension() << '\n';
        if (cfg.out_file.empty()) std::cout << C.to_text();
    }
    if (C.dimension() > cfg.budget) {
        std::cerr << "weight distribution refused: dimension " << C.dimension() << " exceeds budget "
                  << cfg.budget << " (raise --budget or QRD_ENUM_BUDGET)\n";
        return kExitBudget;
    }
    if (cfg.format != "json") {
        WeightDistribution wd = weight_distribution(C, cfg.effective_threads(), cfg.budget);
        std::cout << "weight distribution:\n";
        for (int ell = 0; ell <= C.length(); ++ell)
            if (wd.counts[ell]) std::cout << "  " << ell << ": " << wd.counts[ell] << '\n';
    }
    return 0;
}

int cmd_jacobi(const RunConfig& cfg) {
    require_design_prime(cfg.p);
    LinearCode C = extended_qr(cfg.p);
    std::vector<int> T = parse_labels(cfg.T, cfg.p);
    JacobiTable J = jacobi(C, T, cfg.effective_threads(), cfg.budget);
    if (cfg.format == "json")
        std::cout << to_json(J, cfg.p).dump(2) << '\n';
    else if (cfg.format == "paper-style")
        std::cout << J.pretty() << '\n';
    else {
        std::cout << "n=" << J.n << " t=" << J.t << '\n';
        for (int m1 = 0; m1 <= J.t; ++m1)
            for (int n1 = 0; n1 <= J.n - J.t; ++n1)
                if (J.at(m1, n1))
                    std::cout << "m1=" << m1 << " n1=" << n1 << " coeff=" << J.at(m1, n1) << '\n';
    }
    return 0;
}

int cmd_harmonic(const RunConfig& cfg) {
    require_design_prime(cfg.p);
    LinearCode C = extended_qr(cfg.p);
    OrbitPartition orb = orbit_partition(cfg.p, cfg.p <= 41);
    HarmonicFunction3 f = invariant_harmonic3(orb);
    HarmonicEnumerator w = harmonic_weight_enumerator(C, f, orb, cfg.effective_threads(), cfg.budget);
    if (cfg.format == "json") {
        json j = to_json(w);
        j["f"] = {{"orbit1", to_json(f.f1)}, {"orbit2", to_json(f.f2)}};
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "f = (" << f.f1 << ", " << f.f2 << ") on the two triple orbits\n";
        bool any = false;
        for (int ell = 0; ell <= w.n; ++ell)
            if (!w.coeff[ell].is_zero()) {
                std::cout << (any ? " + " : "") << "(" << w.coeff[ell] << ")x^" << (w.n - ell) << "y^"
                          << ell;
                any = true;
            }
        std::cout << (any ? "" : "0") << '\n';
    }
    return 0;
}

int cmd_design(const RunConfig& cfg) {
    require_design_prime(cfg.p);
    if (cfg.shell_weight < 0 && !cfg.all_shells)
        throw CLI::ValidationError("shell", "pass --shell L or --all");
    LinearCode C = extended_qr(cfg.p);
    OrbitPartition orb = orbit_partition(cfg.p, cfg.p <= 41);
    int threads = cfg.effective_threads();

    json out = json::array();
    int rc = 0;
    if (cfg.union_shells) {
        UnionDesignChecker checker(C, orb, threads, cfg.budget);
        for (int ell = 3; ell <= C.length(); ++ell) {
            if (!cfg.all_shells && ell != cfg.shell_weight) continue;
            UnionDesignResult r = checker.check(ell);
            if (cfg.all_shells && r.block_count == 0) continue;
            DesignReport rep;
            rep.shell_weight = ell;
            rep.block_count = r.block_count;
            rep.dedup_flagged = r.dedup_flagged;
            rep.verdicts.push_back(r.verdict);
            json jr = design_report_json(cfg.p, "union", rep);
            jr["raw_blocks"] = r.raw_count;
            out.push_back(std::move(jr));
        }
    } else {
        DeltaSProfile prof = delta_s_profile(C, orb, 4, threads, cfg.budget);
        for (const auto& rep : prof.reports) {
            if (!cfg.all_shells && rep.shell_weight != cfg.shell_weight) continue;
            DesignReport cut = rep;
            if (cfg.t < 4) cut.verdicts.resize(cfg.t);
            out.push_back(design_report_json(cfg.p, "Q~", cut));
        }
        if (cfg.all_shells) {
            json prof_j = {{"delta", prof.delta}, {"s", prof.s}};
            out.push_back(prof_j);
        }
    }
    if (cfg.format == "json")
        std::cout << out.dump(2) << '\n';
    else {
        for (const auto& j : out) {
            if (j.contains("delta")) {
                std::cout << "profile: delta = " << j["delta"] << ", s = " << j["s"] << '\n';
                continue;
            }
            std::cout << (j["code"] == "union" ? "union shell " : "shell ") << j["shell"] << " ("
                      << j["blocks"] << " blocks):";
            for (const auto& v : j["verdicts"]) {
                std::cout << "  t=" << v["t"] << " " << v["status"].get<std::string>();
                if (v.contains("lambda")) std::cout << " lambda=" << v["lambda"];
                if (v.contains("witness")) std::cout << " [" << v["witness"].get<std::string>() << "]";
            }
            std::cout << '\n';
        }
    }
    (void)rc;
    return 0;
}

struct CheckList {
    int failures = 0;
    void check(const std::string& name, bool ok) {
        std::printf("[%s] %s\n", ok ? "PASS" : "FAIL", name.c_str());
        if (!ok) ++failures;
    }
};

int cmd_reproduce(const RunConfig& cfg) {
    require_design_prime(cfg.p);
    int p = cfg.p;
    int threads = cfg.effective_threads();
    CheckList cl;

    LinearCode C = extended_qr(p);
    LinearCode D = C.dual();
    cl.check("extended code has dimension (p+1)/2", C.dimension() == (p + 1) / 2);

    bool aut_ok = true;
    for (const auto& g : psl2_generators(p))
        if (!same_code(C.permute(g), C)) aut_ok = false;
    cl.check("PSL_2 generators fix the code", aut_ok);

    OrbitPartition orb = orbit_partition(p, p <= 41);
    cl.check("3-subsets split into two orbit classes",
             orb.sizes[0] + orb.sizes[1] == binomial(p + 1, 3) && orb.sizes[0] > 0 && orb.sizes[1] > 0);

    bool sigma_ok = true, swap_ok = true;
    try {
        std::vector<int> sigma = duality_permutation(p, C);
        for (int k = 2; k <= p && swap_ok; ++k)
            for (int j = 1; j < k; ++j)
                for (int i = 0; i < j; ++i)
                    if (orb.labels[triple_colex_rank(i, j, k)] +
                            orb.label_of({sigma[i], sigma[j], sigma[k]}) != 3)
                        swap_ok = false;
    } catch (const std::exception&) {
        sigma_ok = false;
    }
    cl.check("a coordinate permutation maps the code onto its dual", sigma_ok);
    cl.check("the duality permutation swaps the two triple orbits", sigma_ok && swap_ok);

    BitVec ones(C.length());
    for (int i = 0; i < C.length(); ++i) ones.set(i, true);
    cl.check("code and dual intersect in {0, all-ones}",
             LinearCode::intersection_dimension(C, D) == 1 && C.contains(ones) && D.contains(ones));

    const auto& T1 = orb.representatives[0];
    const auto& T2 = orb.representatives[1];
    JacobiTable J1 = jacobi(C, {T1[0], T1[1], T1[2]}, threads, cfg.budget);
    JacobiTable J2 = jacobi(C, {T2[0], T2[1], T2[2]}, threads, cfg.budget);
    JacobiTable J1d = jacobi(D, {T1[0], T1[1], T1[2]}, threads, cfg.budget);
    JacobiTable J2d = jacobi(D, {T2[0], T2[1], T2[2]}, threads, cfg.budget);
    cl.check("J_C + J_dual is independent of the orbit representative",
             jacobi_sum(J1, J1d) == jacobi_sum(J2, J2d));

    HarmonicFunction3 f = invariant_harmonic3(orb);
    HarmonicEnumerator wC = harmonic_weight_enumerator(C, f, orb, threads, cfg.budget);
    HarmonicEnumerator wD = harmonic_weight_enumerator(D, f, orb, threads, cfg.budget);
    cl.check("harmonic enumerators of code and dual cancel", (wC + wD).is_zero());

    bool union_ok = true;
    WeightDistribution wdC = weight_distribution(C, threads, cfg.budget);
    WeightDistribution wdD = weight_distribution(D, threads, cfg.budget);
    for (int ell = 3; ell <= C.length(); ++ell) {
        if (wdC.counts[ell] + wdD.counts[ell] == 0) continue;
        if (J1.covering_count(ell) + J1d.covering_count(ell) !=
            J2.covering_count(ell) + J2d.covering_count(ell))
            union_ok = false;
    }
    cl.check("every nonempty union shell is a 3-design", union_ok);

    if (p == 41) {
        cl.check("J(T1) matches the published length-42 table",
                 J1.coeff == ref42::expected_jacobi(ref42::jacobi_T1_terms(), {0, 1, 41}).coeff);
        cl.check("J(T2) matches the published length-42 table",
                 J2.coeff == ref42::expected_jacobi(ref42::jacobi_T2_terms(), {0, 6, 41}).coeff);
        cl.check("J(T1)-J(T2) = x^9y^9(x^2-y^2)^9(wy-xz)^3",
                 jacobi_difference(J1, J2) == ref42::difference_closed_form());

        std::vector<Rat> target = ref42::harmonic_closed_form();
        Rat scale;
        bool found = false, prop_ok = true;
        for (int ell = 0; ell <= 42; ++ell) {
            if (target[ell].is_zero()) {
                if (!wC.coeff[ell].is_zero()) prop_ok = false;
            } else if (!found) {
                if (wC.coeff[ell].is_zero()) prop_ok = false;
                else {
                    scale = wC.coeff[ell] / target[ell];
                    found = true;
                }
            } else if (!(wC.coeff[ell] == scale * target[ell]))
                prop_ok = false;
        }
        cl.check("harmonic enumerator proportional to -5740 x^12 y^12 (x^2-y^2)^9", prop_ok && found);

        DeltaSProfile prof = delta_s_profile(C, orb, 4, threads, cfg.budget);
        bool class_ok = prof.delta == 2 && prof.s == 3;
        for (const auto& rep : prof.reports) {
            const DesignVerdict& v3 = rep.verdicts[2];
            if (rep.shell_weight == 10)
                class_ok = class_ok && rep.block_count == 1722 &&
                           v3.status == DesignStatus::design && *v3.lambda == Rat(18);
            else if (rep.shell_weight == 32)
                class_ok = class_ok && v3.status == DesignStatus::design && *v3.lambda == Rat(744);
            else
                class_ok = class_ok && v3.status == DesignStatus::not_design;
        }
        cl.check("shells 10 and 32 are 3-(42,10,18) and 3-(42,32,744) designs, no others; (delta,s)=(2,3)",
                 class_ok);
    }

    std::printf("%s: %d check(s) failed\n", cl.failures ? "FAIL" : "OK", cl.failures);
    return cl.failures ? kExitCheckFailed : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"extended quadratic residue codes, Jacobi polynomials, and 3-designs"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App* sub, bool needs_p = true) {
        if (needs_p) sub->add_option("--p", cfg.p, "prime length parameter")->required();
        sub->add_option("--budget", cfg.budget, "max code dimension for enumeration");
        sub->add_option("--threads", cfg.threads, "worker threads (default: available parallelism)");
        sub->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"text", "json", "paper-style"}));
    };

    CLI::App* build = app.add_subcommand("build", "construct the (extended) QR code");
    add_common(build);
    build->add_flag("--extended", cfg.extended, "append the parity coordinate");
    build->add_option("--out", cfg.out_file, "write the generator matrix to this file");

    CLI::App* jac = app.add_subcommand("jacobi", "Jacobi polynomial of the extended code");
    add_common(jac);
    jac->add_option("--T", cfg.T, "comma-separated coordinate labels, 'inf' for infinity")->required();

    CLI::App* harm = app.add_subcommand("harmonic", "degree-3 harmonic weight enumerator");
    add_common(harm);

    CLI::App* des = app.add_subcommand("design", "t-design verdicts for shells");
    add_common(des);
    des->add_option("--t", cfg.t, "design strength to report")->check(CLI::Range(1, 4));
    des->add_option("--shell", cfg.shell_weight, "shell weight");
    des->add_flag("--all", cfg.all_shells, "report every nonempty shell");
    des->add_flag("--union", cfg.union_shells, "check shells of C union dual shells");

    CLI::App* rep = app.add_subcommand("reproduce", "run all named checks for this p");
    add_common(rep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitBadInput : 0;
    }

    try {
        if (build->parsed()) return cmd_build(cfg);
        if (jac->parsed()) return cmd_jacobi(cfg);
        if (harm->parsed()) return cmd_harmonic(cfg);
        if (des->parsed()) return cmd_design(cfg);
        if (rep->parsed()) return cmd_reproduce(cfg);
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << " (raise --budget or QRD_ENUM_BUDGET)\n";
        return kExitBudget;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitCheckFailed;
    }
    return kExitBadInput;
}
