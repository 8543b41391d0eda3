// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 on any failure.
#include "translates/checks.hpp"
#include "translates/experiments.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

using namespace translates;

namespace {

const std::filesystem::path kDir = TRANSLATES_ACCEPTANCE_DIR;
constexpr std::uint64_t kSeed = 20240601;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Sweep {
    SweepResult result;
    std::string csv;
    double seconds = 0.0;
};

std::map<std::string, Sweep> g_sweeps;

const Sweep &sweep(const std::string &name) {
    auto it = g_sweeps.find(name);
    if (it != g_sweeps.end()) return it->second;
    const auto t0 = Clock::now();
    Sweep s;
    s.result = run_sweep(sweep_config_from(IniFile::load(kDir / (name + ".ini"))));
    s.csv = to_csv(s.result.rows);
    s.seconds = since(t0);
    return g_sweeps.emplace(name, std::move(s)).first->second;
}

int g_failures = 0;

void report(int id, bool pass, const std::string &detail, double seconds) {
    std::printf("[%s] criterion %2d: %s (%.2f s)\n", pass ? "PASS" : "FAIL", id, detail.c_str(), seconds);
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

std::string fmt(const char *f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

template <class Fn>
void guarded(int id, Fn &&fn) {
    const auto t0 = Clock::now();
    try {
        fn();
    } catch (const std::exception &e) {
        report(id, false, std::string("exception: ") + e.what(), since(t0));
    }
}

void korobov_rate(int id, double p, double tol, double r2_min, double limit, bool per_r) {
    guarded(id, [&] {
        bool pass = true;
        std::string detail;
        double total = 0.0;
        for (int r : {1, 2}) {
            const auto &s = sweep(fmt("korobov_r%d_p%d", r, static_cast<int>(p)));
            auto fit = fit_rate(s.result.rows, RateFit::Model::power);
            const bool ok = std::abs(fit.rate() - r) <= tol && fit.r2 >= r2_min && (!per_r || s.seconds < limit);
            pass = pass && ok;
            total += s.seconds;
            detail += fmt("r=%d rho=%.4f R2=%.4f t=%.1fs; ", r, fit.rate(), fit.r2, s.seconds);
        }
        if (!per_r) pass = pass && total < limit;
        detail += fmt("need |rho-r|<=%.1f", tol);
        if (r2_min > 0.0) detail += fmt(", R2>=%.2f", r2_min);
        detail += fmt(", runtime<%.0fs%s", limit, per_r ? " per r" : "");
        report(id, pass, detail, total);
    });
}

} // namespace

int main() {
    std::printf("acceptance configs: %s\n", kDir.string().c_str());

    korobov_rate(1, 2.0, 0.3, 0.98, 30.0, true);
    korobov_rate(2, 3.0, 0.4, 0.0, 60.0, false);

    guarded(3, [] {
        const auto &s = sweep("exponential_s05");
        auto fit = fit_rate(s.result.rows, RateFit::Model::exponential);
        const bool pass = std::abs(fit.rate() - 0.5) <= 0.1 && fit.r2 >= 0.98 && s.seconds < 30.0;
        report(3, pass, fmt("sigma=%.5f R2=%.5f; need |sigma-0.5|<=0.1, R2>=0.98, runtime<30s", fit.rate(), fit.r2),
               s.seconds);
    });

    guarded(4, [] {
        const auto t0 = Clock::now();
        const double gap = oracle_equivalence_max(100, kSeed);
        const double t = since(t0);
        report(4, gap <= 1e-6 && t < 20.0, fmt("max relative gap %.3e over 100 pairs; need <=1e-6, runtime<20s", gap),
               t);
    });

    guarded(5, [] {
        const auto t0 = Clock::now();
        const double dev = aliasing_identity_deviation(8, 50, 20, kSeed);
        const double t = since(t0);
        report(5, dev <= 1e-12 && t < 5.0, fmt("max deviation %.3e; need <=1e-12, runtime<5s", dev), t);
    });

    guarded(6, [] {
        const auto t0 = Clock::now();
        const double err = exact_reproduction_max(50, kSeed);
        const double t = since(t0);
        report(6, err <= 1e-12 && t < 5.0, fmt("max error %.3e over 50 cases; need <=1e-12, runtime<5s", err), t);
    });

    guarded(7, [] {
        const auto t0 = Clock::now();
        bool pass = true;
        std::string detail;
        for (const char *name : {"korobov_r1_p2", "korobov_r2_p2", "exponential_s05"}) {
            auto rep = verify_dominance(sweep(name).result.rows, 1.1);
            pass = pass && rep.pass && !rep.groups.empty();
            for (const auto &g : rep.groups)
                detail += fmt("%s C=%.4f worst=%.4f@m=%lld; ", name, g.constant, g.worst_excess,
                              static_cast<long long>(g.worst_m));
        }
        detail += "need error <= 1.1 C eps";
        report(7, pass, detail, since(t0));
    });

    guarded(8, [] {
        const auto t0 = Clock::now();
        const double dev = rk_identity_max(50, 20, kSeed);
        const double t = since(t0);
        report(8, dev <= 1e-9 && t < 5.0, fmt("max deviation %.3e; need <=1e-9, runtime<5s", dev), t);
    });

    guarded(9, [] {
        const auto &s = sweep("korobov_d2");
        auto fit = fit_rate(s.result.rows, RateFit::Model::power);
        std::vector<std::pair<double, double>> sup;
        auto lambda = CoefficientSequence::korobov(2.0, 2);
        for (const auto &r : s.result.rows)
            sup.emplace_back(static_cast<double>(r.m), sup_reciprocal_beyond_md(lambda, r.m));
        auto ref = fit_rate(sup, RateFit::Model::power);
        const bool pass = std::abs(fit.rate() - 2.0) <= 0.5 && s.seconds < 120.0;
        report(9, pass,
               fmt("rho=%.4f R2=%.4f (sup tail slope %.4f); need |rho-2|<=0.5, runtime<120s", fit.rate(), fit.r2,
                   ref.rate()),
               s.seconds);
    });

    std::string probe_first;
    guarded(10, [&] {
        const auto t0 = Clock::now();
        auto rows = run_probe(probe_config_from(IniFile::load(kDir / "probe_korobov_r1.ini")));
        const double t = since(t0);
        probe_first = probe_csv(rows);
        bool positive = true, nonincreasing = true;
        int above = 0;
        std::string detail;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            positive = positive && rows[i].statistic > 0.0;
            if (i > 0) nonincreasing = nonincreasing && rows[i].statistic <= rows[i - 1].statistic;
            above += rows[i].statistic >= 0.1 * rows[i].envelope_high;
            detail += fmt("n=%lld M=%.4g env=%.4g; ", static_cast<long long>(rows[i].design.n), rows[i].statistic,
                          rows[i].envelope_high);
        }
        const bool pass = rows.size() == 3 && positive && nonincreasing && above >= 2 && t < 120.0;
        detail += fmt("positive=%d nonincreasing=%d above=%d/3, runtime<120s", positive, nonincreasing, above);
        report(10, pass, detail, t);
    });

    guarded(11, [&] {
        const auto t0 = Clock::now();
        bool same = true;
        int files = 0;
        for (const auto &[name, s] : g_sweeps) {
            auto again = to_csv(run_sweep(sweep_config_from(IniFile::load(kDir / (name + ".ini")))).rows);
            same = same && again == s.csv;
            ++files;
        }
        if (!probe_first.empty()) {
            same = same && probe_csv(run_probe(probe_config_from(IniFile::load(kDir / "probe_korobov_r1.ini")))) ==
                               probe_first;
            ++files;
        }
        report(11, same && files == 7, fmt("%d CSVs regenerated, byte-identical=%d", files, same), since(t0));
    });

    std::printf("%s: %d criteria failed\n", g_failures ? "FAILED" : "ALL PASSED", g_failures);
    return g_failures ? 1 : 0;
}
