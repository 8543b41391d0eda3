#include "translates/checks.hpp"
#include "translates/experiments.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace translates;

namespace {

struct Common {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::string out;
    std::string format = "csv";
};

void add_common(CLI::App *cmd, Common &c, bool with_format) {
    cmd->add_option("--config", c.config, "config file")->required()->check(CLI::ExistingFile);
    cmd->add_option("--seed", c.seed, "override the config seed");
    cmd->add_option("--out", c.out, "output path (default: config 'out' key, else stdout)");
    if (with_format)
        cmd->add_option("--format", c.format, "csv or plot")->check(CLI::IsMember({"csv", "plot"}));
}

void report_fit(const SweepConfig &cfg, const SweepResult &res) {
    std::cerr << "prediction: " << res.prediction.describe();
    if (!res.prediction.rule.empty()) std::cerr << " [" << res.prediction.rule << "]";
    if (!res.prediction.note.empty()) std::cerr << " (" << res.prediction.note << ")";
    std::cerr << '\n';
    const auto model = res.prediction.kind == RatePrediction::Kind::exponential ? RateFit::Model::exponential
                                                                                 : RateFit::Model::power;
    try {
        const RateFit fit = fit_rate(res.rows, model);
        std::cerr << (model == RateFit::Model::power ? "power fit: rho = " : "exponential fit: sigma = ")
                  << format_number(fit.rate()) << ", R^2 = " << format_number(fit.r2);
        if (fit.excluded) std::cerr << " (" << fit.excluded << " zero-error rows excluded)";
        std::cerr << '\n';
    } catch (const std::exception &e) {
        std::cerr << "no rate fit: " << e.what() << '\n';
    }
    (void)cfg;
}

int run_sweep_cmd(const Common &c, bool errors) {
    SweepConfig cfg = sweep_config_from(IniFile::load(c.config));
    if (c.seed) cfg.seed = *c.seed;
    const SweepResult res = run_sweep(cfg, errors);
    std::ostringstream os;
    if (c.format == "plot")
        write_plotdata(os, res.rows);
    else
        write_csv(os, res.rows);
    write_output(c.out.empty() ? cfg.out : c.out, os.str());
    if (errors) report_fit(cfg, res);
    return 0;
}

int run_probe_cmd(const Common &c) {
    ProbeConfig cfg = probe_config_from(IniFile::load(c.config));
    if (c.seed) cfg.seed = *c.seed;
    write_output(c.out.empty() ? cfg.out : c.out, probe_csv(run_probe(cfg)));
    return 0;
}

int run_verify_cmd(const std::string &csv, double slack) {
    std::ifstream in(csv);
    if (!in) throw std::runtime_error("cannot open '" + csv + "'");
    const VerifyReport rep = verify_dominance(read_csv(in), slack);
    for (const auto &g : rep.groups)
        std::cout << (g.pass ? "PASS " : "FAIL ") << g.key << ": C = " << format_number(g.constant)
                  << ", worst error/(C eps) = " << format_number(g.worst_excess) << " at m = " << g.worst_m << '\n';
    std::cout << (rep.pass ? "dominance holds" : "dominance violated") << '\n';
    return rep.pass ? 0 : 1;
}

int run_selftest_cmd(std::uint64_t seed) {
    bool ok = true;
    for (const auto &r : run_selftest(seed)) {
        std::printf("%s %-60s measured %.3e (tol %.0e, %.2f s)\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                    r.measured, r.tolerance, r.seconds);
        ok = ok && r.pass;
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Approximation by translates of a single generator: sweeps, budgets and probes"};
    app.require_subcommand(1);

    Common sweep, eps, probe;
    add_common(app.add_subcommand("sweep", "convergence sweep over m_list"), sweep, true);
    add_common(app.add_subcommand("epsilon", "error budget table only"), eps, true);
    add_common(app.add_subcommand("probe-lower", "heuristic lower-bound probe"), probe, false);

    std::string csv;
    double slack = 1.1;
    auto *verify = app.add_subcommand("verify", "re-check budget dominance on a sweep CSV");
    verify->add_option("csv", csv, "sweep CSV")->required()->check(CLI::ExistingFile);
    verify->add_option("--slack", slack, "allowed excess over C*epsilon")->capture_default_str();

    std::uint64_t self_seed = 1;
    auto *self = app.add_subcommand("selftest", "fast invariant suite");
    self->add_option("--seed", self_seed)->capture_default_str();

    CLI11_PARSE(app, argc, argv);
    try {
        if (app.got_subcommand("sweep")) return run_sweep_cmd(sweep, true);
        if (app.got_subcommand("epsilon")) return run_sweep_cmd(eps, false);
        if (app.got_subcommand("probe-lower")) return run_probe_cmd(probe);
        if (app.got_subcommand("verify")) return run_verify_cmd(csv, slack);
        if (app.got_subcommand("selftest")) return run_selftest_cmd(self_seed);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
