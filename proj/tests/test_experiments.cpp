#include "translates/experiments.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace translates;
using doctest::Approx;

namespace {

IniFile ini_from(const std::string &text) {
    std::istringstream is(text);
    return IniFile::parse(is, "test.ini");
}

std::string error_of(const std::string &text) {
    try {
        sweep_config_from(ini_from(text));
    } catch (const ConfigError &e) {
        return e.what();
    }
    return {};
}

const char *const kSmall = R"(
[lambda]
family = korobov
r = 2
[sweep]
p = 2
m_list = 2, 4, 8
g_trials = 3
seed = 11
timing = false
)";

} // namespace

TEST_CASE("config parsing and errors") {
    auto cfg = sweep_config_from(ini_from(kSmall));
    CHECK(cfg.m_list == std::vector<Index>{2, 4, 8});
    CHECK(cfg.g_trials == 3);
    CHECK(cfg.seed == 11);
    CHECK_FALSE(cfg.timing);
    CHECK(cfg.beta.family() == Family::korobov);

    CHECK(error_of("[lambda]\nfamily = korobov\nr = 2\n[sweep]\np = 2\nm_list = 2\nbogus = 1\n") ==
          "test.ini:7: [sweep] bogus: unknown key");
    CHECK(error_of("[lambda]\nfamily = korobov\nr = x\n[sweep]\nm_list = 2\n").find("test.ini:3: [lambda] r") == 0);
    CHECK(error_of("[lambda]\nfamily = korobov\nr = 2\nr = 3\n") == "test.ini:4: duplicate key 'r' in [lambda]");
    CHECK(error_of("r = 2\n").find("key outside") != std::string::npos);
    CHECK(error_of("[lambda]\nfamily = korobov\nr = 2\n[sweep]\nm_list = 0\n") != "");
    CHECK(error_of("[lambda]\nfamily = korobov\nr = 2\n[extra]\n[sweep]\nm_list = 2\n").find("unknown section") !=
          std::string::npos);
    CHECK(error_of("[lambda]\nfamily = nope\n[sweep]\nm_list = 2\n") != "");
    CHECK_THROWS_AS(IniFile::load("/nonexistent/file.ini"), ConfigError);
}

TEST_CASE("sequence_from_config") {
    auto ini = ini_from("[a]\nfamily = exponential\ns = 0.5\n[b]\nfamily = mask_power\nr = 2\nmask = log_damped\n"
                        "mask_c = 1\n[c]\nfamily = korobov\nr = 1\ndegree = 3\ndim = 2\n");
    auto a = sequence_from_config(ini, "a");
    CHECK(a.reciprocal1(2).real() == Approx(std::exp(-1.0)));
    auto b = sequence_from_config(ini, "b");
    CHECK(b.family() == Family::mask_power);
    auto c = sequence_from_config(ini, "c");
    CHECK(c.dimension() == 2);
    CHECK(c.reciprocal({4, 0}) == cplx(0.0));
    CHECK(sequence_parameter(ini, "a") == 0.5);
}

TEST_CASE("fit_rate") {
    std::vector<std::pair<double, double>> pts;
    for (double m : {4.0, 8.0, 16.0, 32.0}) pts.emplace_back(m, 3.0 * std::pow(m, -1.5));
    auto f = fit_rate(pts, RateFit::Model::power);
    CHECK(f.rate() == Approx(1.5).epsilon(1e-12));
    CHECK(f.intercept == Approx(std::log(3.0)).epsilon(1e-12));
    CHECK(f.r2 == Approx(1.0));
    CHECK(f.used == 4);

    pts.clear();
    for (double m : {4.0, 6.0, 8.0, 10.0, 12.0}) pts.emplace_back(m, 2.0 * std::exp(-0.7 * m));
    pts.emplace_back(14.0, 0.0);
    auto e = fit_rate(pts, RateFit::Model::exponential);
    CHECK(e.rate() == Approx(0.7).epsilon(1e-12));
    CHECK(e.excluded == 1);
    CHECK(e.used == 5);

    CHECK_THROWS(fit_rate({{1.0, 1.0}, {2.0, 0.5}}, RateFit::Model::power));
}

TEST_CASE("sweep determinism, CSV round trip and plot data") {
    auto cfg = sweep_config_from(ini_from(kSmall));
    auto a = run_sweep(cfg);
    auto b = run_sweep(cfg);
    REQUIRE(a.rows.size() == 3);
    CHECK(to_csv(a.rows) == to_csv(b.rows));
    CHECK(a.prediction.kind == RatePrediction::Kind::power);

    const std::string csv = to_csv(a.rows);
    CHECK(csv.substr(0, csv.find('\n')) == kSweepHeader);
    CHECK(std::string(kSweepHeader) ==
          "family,d,p,param,m,n_translates,error_quadrature,error_parseval,epsilon,epsilon_tail,epsilon_variant,"
          "predicted,seconds");
    std::istringstream is(csv);
    auto back = read_csv(is);
    CHECK(back == a.rows);
    for (const auto &r : a.rows) {
        CHECK(r.n_translates == 2 * r.m + 1);
        CHECK_FALSE(r.seconds.has_value());
        REQUIRE(r.error_parseval.has_value());
        REQUIRE(r.error_quadrature.has_value());
        CHECK(*r.error_quadrature == Approx(*r.error_parseval).epsilon(1e-8));
        CHECK(*r.empirical_error() <= *r.epsilon);
    }

    std::ostringstream plot;
    write_plotdata(plot, a.rows);
    CHECK(plot.str().find("# series: error_parseval") != std::string::npos);

    std::istringstream bad("family,d\nkorobov,1\n");
    CHECK_THROWS(read_csv(bad));

    cfg.seed = 12;
    CHECK(to_csv(run_sweep(cfg).rows) != csv);
}

TEST_CASE("budget-only sweep") {
    auto cfg = sweep_config_from(ini_from(kSmall));
    auto r = run_sweep(cfg, false);
    for (const auto &row : r.rows) {
        CHECK_FALSE(row.error_parseval.has_value());
        CHECK(row.epsilon.has_value());
        CHECK(row.epsilon_variant == "p2_univariate");
    }
}

TEST_CASE("verify_dominance") {
    std::vector<SweepRow> rows;
    for (Index m : {4, 8, 16, 32}) {
        SweepRow r;
        r.family = "korobov";
        r.param = 1.0;
        r.m = m;
        r.epsilon = 1.0 / static_cast<double>(m);
        r.error_parseval = 0.7 / static_cast<double>(m);
        rows.push_back(r);
    }
    auto ok = verify_dominance(rows);
    CHECK(ok.pass);
    REQUIRE(ok.groups.size() == 1);
    CHECK(ok.groups[0].constant == Approx(0.7));
    rows[3].error_parseval = 1.4 / 32.0;
    auto bad = verify_dominance(rows);
    CHECK_FALSE(bad.pass);
    CHECK(bad.groups[0].worst_m == 32);
}

TEST_CASE("probe config and CSV") {
    auto ini = ini_from("[lambda]\nfamily = korobov\nr = 1\n[probe]\nn_list = 10, 20\ntrials = 2\nrestarts = 1\n");
    auto cfg = probe_config_from(ini);
    auto rows = run_probe(cfg);
    REQUIRE(rows.size() == 2);
    const std::string csv = probe_csv(rows);
    CHECK(csv.substr(0, csv.find('\n')) == kProbeHeader);
    CHECK(csv == probe_csv(run_probe(cfg)));
    CHECK(csv.find("heuristic") != std::string::npos);
    CHECK_THROWS_AS(probe_config_from(ini_from("[lambda]\nfamily = korobov\nr = 1\n[probe]\nn_list = 5\n")),
                    std::exception);
}
