#include "translates/experiments.hpp"

#include "translates/approximant.hpp"
#include "translates/approximant_md.hpp"
#include "translates/random.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace translates {

namespace {

MaskSpec mask_from(const IniFile &ini, std::string_view section) {
    const std::string name = ini.text(section, "mask", "constant_one");
    if (name == "constant_one") return MaskSpec::constant_one();
    if (name == "log_damped") {
        const double c = ini.real(section, "mask_c", 1.0);
        if (!(c > 0.0)) ini.fail(section, "mask_c", "must be positive");
        return MaskSpec::log_damped(c);
    }
    ini.fail(section, "mask", "unknown mask '" + name + "' (constant_one | log_damped)");
}

std::string cell(const std::optional<double> &v) { return v ? format_number(*v) : std::string(); }

std::vector<std::string> split_csv_line(const std::string &line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

double parse_double(const std::string &s, int line) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw std::runtime_error("csv line " + std::to_string(line) + ": bad number '" + s + "'");
    return v;
}

std::optional<double> parse_cell(const std::string &s, int line) {
    if (s.empty()) return std::nullopt;
    return parse_double(s, line);
}

std::uint64_t row_stream(Index m, int trial) {
    return (static_cast<std::uint64_t>(m) << 20) ^ static_cast<std::uint64_t>(trial);
}

struct RowErrors {
    double quadrature = 0.0;
    double parseval = 0.0;
};

void fold(RowErrors &acc, const ErrorValue *q, const ErrorValue *pv) {
    if (q) acc.quadrature = std::max(acc.quadrature, q->value);
    if (pv) acc.parseval = std::max(acc.parseval, pv->value);
}

SweepRow compute_row(const SweepConfig &cfg, const RatePrediction &pred, Index m, bool errors) {
    const auto t0 = std::chrono::steady_clock::now();
    const int d = cfg.dim;
    SweepRow row;
    row.family = cfg.family;
    row.d = d;
    row.p = cfg.p;
    row.param = cfg.param;
    row.m = m;
    row.n_translates = static_cast<Index>(std::llround(std::pow(2.0 * static_cast<double>(m) + 1.0, d)));

    if (errors) {
        const bool want_parseval = cfg.p == 2.0;
        const bool want_quad = cfg.quadrature || cfg.p != 2.0;
        BandPolicy pb = d == 1 ? BandPolicy{} : md_parseval_band();
        BandPolicy qb = d == 1 ? BandPolicy{} : md_quadrature_band();
        if (cfg.alias_blocks) pb.j_cap = *cfg.alias_blocks;
        if (cfg.quad_alias_blocks) qb.j_cap = *cfg.quad_alias_blocks;
        const ErrorMethod parseval = ErrorMethod::parseval(pb);
        const ErrorMethod quad = ErrorMethod::quadrature(cfg.oversample, qb);

        RowErrors acc;
        auto element_errors = [&](const SpectralFunction &g_raw) {
            ClassElement raw(cfg.lambda, g_raw, cfg.p);
            const double norm = raw.class_norm(cfg.oversample);
            if (!(norm > 0.0)) return;
            ClassElement elem(cfg.lambda, (1.0 / norm) * g_raw, cfg.p);
            std::optional<ErrorValue> q, pv;
            if (want_quad) q = approximation_error_md(elem, cfg.beta, m, cfg.p, quad);
            if (want_parseval) pv = approximation_error_md(elem, cfg.beta, m, cfg.p, parseval);
            fold(acc, q ? &*q : nullptr, pv ? &*pv : nullptr);
        };
        if (cfg.g_fixed) {
            element_errors(*cfg.g_fixed);
        } else {
            const Index bw = std::max<Index>(1, static_cast<Index>(std::ceil(cfg.g_bandwidth_factor * m)));
            for (int t = 0; t < cfg.g_trials; ++t) {
                auto rng = make_engine(cfg.seed, row_stream(m, t));
                element_errors(random_real_spectral(d, bw, rng));
            }
        }
        if (cfg.single_mode_probes) {
            // ||e^{ik.x}||_p = 1, so each probe is already in the unit ball
            SpectralFunction box(d, m);
            for (std::size_t i = 0; i < box.size(); ++i) {
                const FrequencyIndex k0 = box.index_of(i);
                std::optional<ErrorValue> q, pv;
                if (want_quad) q = single_mode_error_md(cfg.lambda, cfg.beta, m, k0, cfg.p, quad);
                if (want_parseval) pv = single_mode_error_md(cfg.lambda, cfg.beta, m, k0, cfg.p, parseval);
                fold(acc, q ? &*q : nullptr, pv ? &*pv : nullptr);
            }
        }
        if (want_quad) row.error_quadrature = acc.quadrature;
        if (want_parseval) row.error_parseval = acc.parseval;
    }

    std::optional<EpsilonReport> eps;
    if (cfg.p == 2.0)
        eps = d == 1 ? epsilon_p2(cfg.lambda, cfg.beta, m, cfg.j_max) : epsilon_p2_md(cfg.lambda, cfg.beta, m, cfg.j_max);
    else if (d == 1)
        eps = epsilon_general_p(cfg.lambda, cfg.beta, m, cfg.j_max);
    if (eps) {
        row.epsilon = eps->value;
        row.epsilon_tail = eps->tail_bound;
        row.epsilon_variant = to_string(eps->variant);
    }
    if (pred.applies()) row.predicted = pred.at(cfg.lambda, m);

    if (cfg.timing) {
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        row.seconds = std::round(s * 1000.0) / 1000.0;
    }
    return row;
}

} // namespace

CoefficientSequence sequence_from_config(const IniFile &ini, std::string_view section, int default_dim) {
    ini.require_known(section, {"family", "r", "s", "value", "dim", "mask", "mask_c", "degree"});
    const std::string family = ini.text(section, "family", "");
    if (family.empty()) ini.fail(section, "family", "missing (korobov | exponential | mask_power | exponent_mask | constant)");
    const Index dim = ini.integer(section, "dim", default_dim);
    if (dim < 1 || dim > 3) ini.fail(section, "dim", "must be 1, 2 or 3");
    const int d = static_cast<int>(dim);
    auto positive = [&](std::string_view key) {
        auto v = ini.real_opt(section, key);
        if (!v) ini.fail(section, key, "required for family " + family);
        if (!(*v > 0.0) || !std::isfinite(*v)) ini.fail(section, key, "must be positive");
        return *v;
    };
    auto univariate = [&] {
        if (d != 1) ini.fail(section, "dim", "family " + family + " is univariate");
    };
    CoefficientSequence seq = CoefficientSequence::constant(1.0);
    if (family == "korobov") {
        seq = CoefficientSequence::korobov(positive("r"), d);
    } else if (family == "exponential") {
        seq = CoefficientSequence::exponential(positive("s"), d);
    } else if (family == "mask_power") {
        univariate();
        seq = CoefficientSequence::mask_power(positive("r"), mask_from(ini, section));
    } else if (family == "exponent_mask") {
        univariate();
        seq = CoefficientSequence::exponent_mask(positive("s"), mask_from(ini, section));
    } else if (family == "constant") {
        const double v = ini.real(section, "value", 1.0);
        if (v == 0.0 || !std::isfinite(v)) ini.fail(section, "value", "must be finite and nonzero");
        seq = CoefficientSequence::constant(v, d);
    } else {
        ini.fail(section, "family", "unknown family '" + family + "'");
    }
    if (auto deg = ini.integer_opt(section, "degree")) {
        if (*deg < 0) ini.fail(section, "degree", "must be >= 0");
        seq = CoefficientSequence::band_limited(seq, *deg);
    }
    return seq;
}

double sequence_parameter(const IniFile &ini, std::string_view section) {
    const std::string family = ini.text(section, "family", "");
    if (family == "korobov" || family == "mask_power") return ini.real(section, "r", 0.0);
    if (family == "exponential" || family == "exponent_mask") return ini.real(section, "s", 0.0);
    return ini.real(section, "value", 1.0);
}

void SweepConfig::validate() const {
    if (!(p > 1.0) || !std::isfinite(p)) throw ConfigError("p must lie in (1, inf)");
    if (m_list.empty()) throw ConfigError("m_list is empty");
    for (std::size_t i = 0; i < m_list.size(); ++i) {
        if (m_list[i] < 1) throw ConfigError("m_list entries must be >= 1");
        if (i > 0 && m_list[i] <= m_list[i - 1]) throw ConfigError("m_list must be strictly increasing");
    }
    if (g_trials < 0) throw ConfigError("g_trials must be >= 0");
    if (oversample < 2) throw ConfigError("oversample must be >= 2");
    if (lambda.dimension() != dim || beta.dimension() != dim) throw ConfigError("lambda/beta dimension mismatch");
    if (g_fixed && g_fixed->dimension() != dim) throw ConfigError("g_file dimension differs from lambda");
}

SweepConfig sweep_config_from(const IniFile &ini) {
    ini.require_sections({"lambda", "beta", "sweep"});
    ini.require_known("sweep", {"p", "m_list", "g_trials", "g_bandwidth_factor", "g_file", "single_mode_probes",
                                "quadrature", "oversample", "alias_blocks", "quad_alias_blocks", "j_max",
                                "seed", "timing", "out"});
    if (!ini.has_section("lambda")) throw ConfigError(ini.source() + ": missing [lambda] section");
    if (!ini.has_section("sweep")) throw ConfigError(ini.source() + ": missing [sweep] section");
    SweepConfig cfg;
    cfg.lambda = sequence_from_config(ini, "lambda");
    cfg.dim = cfg.lambda.dimension();
    cfg.beta = ini.has_section("beta") ? sequence_from_config(ini, "beta", cfg.dim) : cfg.lambda;
    cfg.family = ini.text("lambda", "family", "");
    cfg.param = sequence_parameter(ini, "lambda");
    cfg.p = ini.real("sweep", "p", 2.0);
    if (!(cfg.p > 1.0) || !std::isfinite(cfg.p)) ini.fail("sweep", "p", "must lie in (1, inf)");
    cfg.m_list = ini.integer_list("sweep", "m_list");
    if (cfg.m_list.empty()) ini.fail("sweep", "m_list", "must list at least one m");
    for (std::size_t i = 0; i < cfg.m_list.size(); ++i)
        if (cfg.m_list[i] < 1 || (i > 0 && cfg.m_list[i] <= cfg.m_list[i - 1]))
            ini.fail("sweep", "m_list", "must be strictly increasing positive integers");
    cfg.g_trials = static_cast<int>(ini.integer("sweep", "g_trials", 20));
    if (cfg.g_trials < 0) ini.fail("sweep", "g_trials", "must be >= 0");
    cfg.g_bandwidth_factor = ini.real("sweep", "g_bandwidth_factor", 2.0);
    if (!(cfg.g_bandwidth_factor > 0.0)) ini.fail("sweep", "g_bandwidth_factor", "must be positive");
    if (auto path = ini.text("sweep", "g_file", ""); !path.empty()) {
        std::filesystem::path full = path;
        if (full.is_relative()) full = std::filesystem::path(ini.source()).parent_path() / full;
        std::ifstream in(full);
        if (!in) ini.fail("sweep", "g_file", "cannot open '" + full.string() + "'");
        try {
            cfg.g_fixed = read_text(in);
        } catch (const std::exception &e) {
            ini.fail("sweep", "g_file", e.what());
        }
    }
    cfg.single_mode_probes = ini.boolean("sweep", "single_mode_probes", true);
    cfg.quadrature = ini.boolean("sweep", "quadrature", true);
    cfg.oversample = static_cast<int>(ini.integer("sweep", "oversample", 8));
    if (cfg.oversample < 2) ini.fail("sweep", "oversample", "must be >= 2");
    auto positive_opt = [&](std::string_view key) {
        auto v = ini.integer_opt("sweep", key);
        if (v && *v < 1) ini.fail("sweep", key, "must be >= 1");
        return v;
    };
    cfg.alias_blocks = positive_opt("alias_blocks");
    cfg.quad_alias_blocks = positive_opt("quad_alias_blocks");
    cfg.j_max = positive_opt("j_max");
    cfg.seed = ini.unsigned64("sweep", "seed", 1);
    cfg.timing = ini.boolean("sweep", "timing", true);
    cfg.out = ini.text("sweep", "out", "");
    try {
        cfg.validate();
    } catch (const ConfigError &e) {
        throw ConfigError(ini.source() + ": " + e.what());
    }
    return cfg;
}

std::optional<double> SweepRow::empirical_error() const { return error_parseval ? error_parseval : error_quadrature; }

SweepResult run_sweep(const SweepConfig &cfg, bool errors) {
    cfg.validate();
    SweepResult out;
    out.prediction = predicted_rate(cfg.lambda, cfg.beta, cfg.p, cfg.dim);
    out.rows.resize(cfg.m_list.size());
    const auto count = static_cast<std::ptrdiff_t>(cfg.m_list.size());
    std::vector<std::string> failures(cfg.m_list.size());
    // largest m first for load balance; rows land in their own slots
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = count - 1; i >= 0; --i) {
        try {
            out.rows[static_cast<std::size_t>(i)] =
                compute_row(cfg, out.prediction, cfg.m_list[static_cast<std::size_t>(i)], errors);
        } catch (const std::exception &e) {
            failures[static_cast<std::size_t>(i)] = e.what();
        }
    }
    for (std::size_t i = 0; i < failures.size(); ++i)
        if (!failures[i].empty())
            throw std::runtime_error("m = " + std::to_string(cfg.m_list[i]) + ": " + failures[i]);
    return out;
}

RateFit fit_rate(const std::vector<std::pair<double, double>> &points, RateFit::Model model) {
    RateFit fit;
    fit.model = model;
    std::vector<double> xs, ys;
    for (const auto &[m, e] : points) {
        if (!std::isfinite(e) || e < 0.0) throw std::invalid_argument("fit_rate: errors must be finite and >= 0");
        if (e == 0.0) {
            ++fit.excluded;
            continue;
        }
        if (model == RateFit::Model::power && !(m > 0.0)) throw std::invalid_argument("fit_rate: m must be positive");
        xs.push_back(model == RateFit::Model::power ? std::log(m) : m);
        ys.push_back(std::log(e));
    }
    fit.used = static_cast<int>(xs.size());
    if (fit.used < 3) throw std::invalid_argument("fit_rate needs at least 3 rows with positive error");
    const double n = static_cast<double>(xs.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    if (sxx == 0.0) throw std::invalid_argument("fit_rate: all m values coincide");
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double sse = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
        sse += r * r;
    }
    fit.r2 = syy == 0.0 ? 1.0 : std::clamp(1.0 - sse / syy, 0.0, 1.0);
    return fit;
}

RateFit fit_rate(const std::vector<SweepRow> &rows, RateFit::Model model) {
    std::vector<std::pair<double, double>> pts;
    for (const auto &r : rows)
        if (auto e = r.empirical_error()) pts.emplace_back(static_cast<double>(r.m), *e);
    return fit_rate(pts, model);
}

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

const char *const kSweepHeader =
    "family,d,p,param,m,n_translates,error_quadrature,error_parseval,epsilon,epsilon_tail,epsilon_variant,predicted,"
    "seconds";

void write_csv(std::ostream &os, const std::vector<SweepRow> &rows) {
    os << kSweepHeader << '\n';
    for (const auto &r : rows) {
        os << r.family << ',' << r.d << ',' << format_number(r.p) << ',' << format_number(r.param) << ',' << r.m
           << ',' << r.n_translates << ',' << cell(r.error_quadrature) << ',' << cell(r.error_parseval) << ','
           << cell(r.epsilon) << ',' << cell(r.epsilon_tail) << ',' << r.epsilon_variant << ',' << cell(r.predicted)
           << ',';
        if (r.seconds) {
            char buf[32];
            auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, *r.seconds, std::chars_format::fixed, 3);
            os << std::string_view(buf, static_cast<std::size_t>(ptr - buf));
        }
        os << '\n';
    }
}

std::string to_csv(const std::vector<SweepRow> &rows) {
    std::ostringstream os;
    write_csv(os, rows);
    return os.str();
}

std::vector<SweepRow> read_csv(std::istream &is) {
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("csv: empty input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kSweepHeader) throw std::runtime_error("csv: unexpected header '" + line + "'");
    std::vector<SweepRow> rows;
    int ln = 1;
    while (std::getline(is, line)) {
        ++ln;
        if (line.empty() || line == "\r") continue;
        auto c = split_csv_line(line);
        if (c.size() != 13) throw std::runtime_error("csv line " + std::to_string(ln) + ": expected 13 columns");
        SweepRow r;
        r.family = c[0];
        r.d = static_cast<int>(parse_double(c[1], ln));
        r.p = parse_double(c[2], ln);
        r.param = parse_double(c[3], ln);
        r.m = static_cast<Index>(parse_double(c[4], ln));
        r.n_translates = static_cast<Index>(parse_double(c[5], ln));
        r.error_quadrature = parse_cell(c[6], ln);
        r.error_parseval = parse_cell(c[7], ln);
        r.epsilon = parse_cell(c[8], ln);
        r.epsilon_tail = parse_cell(c[9], ln);
        r.epsilon_variant = c[10];
        r.predicted = parse_cell(c[11], ln);
        r.seconds = parse_cell(c[12], ln);
        rows.push_back(std::move(r));
    }
    return rows;
}

void write_plotdata(std::ostream &os, const std::vector<SweepRow> &rows) {
    struct Series {
        const char *name;
        std::optional<double> SweepRow::*field;
    };
    const Series series[] = {{"error_quadrature", &SweepRow::error_quadrature},
                             {"error_parseval", &SweepRow::error_parseval},
                             {"epsilon", &SweepRow::epsilon},
                             {"predicted", &SweepRow::predicted}};
    if (!rows.empty())
        os << "# " << rows.front().family << " d=" << rows.front().d << " p=" << format_number(rows.front().p)
           << " param=" << format_number(rows.front().param) << '\n';
    bool first = true;
    for (const auto &s : series) {
        if (std::none_of(rows.begin(), rows.end(), [&](const SweepRow &r) { return (r.*s.field).has_value(); }))
            continue;
        if (!first) os << "\n\n";
        first = false;
        os << "# series: " << s.name << '\n';
        for (const auto &r : rows)
            if (auto v = r.*s.field) os << r.m << ' ' << format_number(*v) << '\n';
    }
}

void write_output(const std::string &path, const std::string &content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        std::cout.flush();
        return;
    }
    std::ofstream out(std::filesystem::path(reinterpret_cast<const char8_t *>(path.c_str())), std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

VerifyReport verify_dominance(const std::vector<SweepRow> &rows, double slack) {
    VerifyReport rep;
    rep.pass = true;
    std::vector<std::string> order;
    std::map<std::string, std::vector<const SweepRow *>> groups;
    for (const auto &r : rows) {
        std::string key = r.family + "," + std::to_string(r.d) + "," + format_number(r.p) + "," + format_number(r.param);
        if (!groups.count(key)) order.push_back(key);
        groups[key].push_back(&r);
    }
    for (const auto &key : order) {
        auto g = groups[key];
        std::sort(g.begin(), g.end(), [](auto a, auto b) { return a->m < b->m; });
        DominanceGroup dg;
        dg.key = key;
        dg.pass = true;
        bool have_c = false;
        for (const SweepRow *r : g) {
            auto e = r->empirical_error();
            if (!e || !r->epsilon) continue;
            if (!have_c) {
                if (!(*r->epsilon > 0.0)) continue;
                dg.constant = *e / *r->epsilon;
                have_c = true;
            }
            const double bound = dg.constant * *r->epsilon;
            const double excess = bound > 0.0 ? *e / bound : (*e > 0.0 ? INFINITY : 0.0);
            if (excess > dg.worst_excess) {
                dg.worst_excess = excess;
                dg.worst_m = r->m;
            }
            if (*e > slack * bound) dg.pass = false;
        }
        if (!have_c) dg.pass = false;
        rep.pass = rep.pass && dg.pass;
        rep.groups.push_back(dg);
    }
    if (rep.groups.empty()) rep.pass = false;
    return rep;
}

ProbeConfig probe_config_from(const IniFile &ini) {
    ini.require_sections({"lambda", "beta", "probe"});
    ini.require_known("probe", {"n_list", "c3", "trials", "restarts", "growth", "growth_a", "seed", "out"});
    if (!ini.has_section("lambda")) throw ConfigError(ini.source() + ": missing [lambda] section");
    ProbeConfig cfg;
    cfg.lambda = sequence_from_config(ini, "lambda");
    cfg.dim = cfg.lambda.dimension();
    cfg.beta = ini.has_section("beta") ? sequence_from_config(ini, "beta", cfg.dim) : cfg.lambda;
    cfg.n_list = ini.integer_list("probe", "n_list");
    if (cfg.n_list.empty()) ini.fail("probe", "n_list", "must list at least one n");
    for (Index n : cfg.n_list)
        if (n < 10) ini.fail("probe", "n_list", "every n must be >= 10");
    cfg.c3 = ini.real("probe", "c3", 1.0);
    if (!(cfg.c3 > 0.0)) ini.fail("probe", "c3", "must be positive");
    cfg.trials = static_cast<int>(ini.integer("probe", "trials", 20));
    if (cfg.trials < 1) ini.fail("probe", "trials", "must be >= 1");
    cfg.restarts = static_cast<int>(ini.integer("probe", "restarts", 4));
    if (cfg.restarts < 1) ini.fail("probe", "restarts", "must be >= 1");
    const std::string growth = ini.text("probe", "growth", "power");
    const double a = ini.real("probe", "growth_a", 1.0);
    if (!(a > 0.0)) ini.fail("probe", "growth_a", "must be positive");
    if (growth == "power")
        cfg.growth = GrowthFunction::power(a);
    else if (growth == "log_power")
        cfg.growth = GrowthFunction::log_power(a);
    else
        ini.fail("probe", "growth", "unknown growth '" + growth + "' (power | log_power)");
    cfg.seed = ini.unsigned64("probe", "seed", 1);
    cfg.out = ini.text("probe", "out", "");
    if (cfg.dim != 1) ini.fail("lambda", "dim", "the translate fit is implemented for d = 1");
    return cfg;
}

std::vector<ProbeResult> run_probe(const ProbeConfig &cfg) {
    std::vector<ProbeResult> out;
    for (Index n : cfg.n_list) {
        const LowerBoundDesign design = design_for_n(n, cfg.dim, cfg.lambda, cfg.c3);
        const SpectralFunction psi = truncated_generator(cfg.beta, design.s);
        out.push_back(probe_Mn(design, cfg.lambda, psi, cfg.growth, cfg.trials, cfg.restarts,
                               splitmix64(cfg.seed ^ static_cast<std::uint64_t>(n))));
    }
    return out;
}

const char *const kProbeHeader = "n,m,s,omega,statistic,envelope_low,envelope_high,flag";

std::string probe_csv(const std::vector<ProbeResult> &rows) {
    std::ostringstream os;
    os << kProbeHeader << '\n';
    for (const auto &r : rows)
        os << r.design.n << ',' << r.design.m << ',' << r.design.s << ',' << format_number(r.design.omega) << ','
           << format_number(r.statistic) << ',' << format_number(r.envelope_low) << ','
           << format_number(r.envelope_high) << ',' << (r.regularized ? "heuristic;regularized" : "heuristic") << '\n';
    return os.str();
}

} // namespace translates
