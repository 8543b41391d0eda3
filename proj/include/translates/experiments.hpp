#pragma once

#include "translates/config.hpp"
#include "translates/error_budget.hpp"
#include "translates/lower_bound.hpp"
#include "translates/sequences.hpp"
#include "translates/spectral.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace translates {

// Sequence from a config section: family = korobov | exponential | mask_power |
// exponent_mask | constant, with r / s / value, dim, mask = constant_one |
// log_damped, mask_c, and an optional degree that truncates to a polynomial.
CoefficientSequence sequence_from_config(const IniFile &ini, std::string_view section, int default_dim = 1);
// The family's shape parameter (r, s or the constant value).
double sequence_parameter(const IniFile &ini, std::string_view section);

struct SweepConfig {
    CoefficientSequence lambda = CoefficientSequence::korobov(2.0);
    CoefficientSequence beta = CoefficientSequence::korobov(2.0);
    std::string family = "korobov";
    double param = 2.0;
    int dim = 1;
    double p = 2.0;
    std::vector<Index> m_list;
    int g_trials = 20;
    double g_bandwidth_factor = 2.0;
    std::optional<SpectralFunction> g_fixed; // from g_file
    bool single_mode_probes = true;
    bool quadrature = true; // also for p = 2
    int oversample = 8;
    std::optional<Index> alias_blocks;      // Parseval band cap
    std::optional<Index> quad_alias_blocks; // quadrature band cap
    std::optional<Index> j_max;
    std::uint64_t seed = 1;
    bool timing = true;
    std::string out;

    void validate() const;
};

SweepConfig sweep_config_from(const IniFile &ini);

struct SweepRow {
    std::string family;
    int d = 1;
    double p = 2.0;
    double param = 0.0;
    Index m = 0;
    Index n_translates = 0;
    std::optional<double> error_quadrature;
    std::optional<double> error_parseval;
    std::optional<double> epsilon;
    std::optional<double> epsilon_tail;
    std::string epsilon_variant;
    std::optional<double> predicted;
    std::optional<double> seconds;

    // Parseval when available, else quadrature.
    std::optional<double> empirical_error() const;
    bool operator==(const SweepRow &) const = default;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    RatePrediction prediction;
};

// errors = false skips the approximation errors (budget table only).
SweepResult run_sweep(const SweepConfig &cfg, bool errors = true);

struct RateFit {
    enum class Model { power, exponential };
    Model model = Model::power;
    double slope = 0.0;     // d log(error) / d log(m) or d log(error) / dm
    double intercept = 0.0; // log C
    double r2 = 0.0;
    int used = 0;
    int excluded = 0; // rows with zero error

    // rho = -slope for power, sigma = -slope for exponential
    double rate() const { return -slope; }
};

RateFit fit_rate(const std::vector<std::pair<double, double>> &points, RateFit::Model model);
RateFit fit_rate(const std::vector<SweepRow> &rows, RateFit::Model model);

std::string format_number(double v);

extern const char *const kSweepHeader;
void write_csv(std::ostream &os, const std::vector<SweepRow> &rows);
std::string to_csv(const std::vector<SweepRow> &rows);
std::vector<SweepRow> read_csv(std::istream &is);
void write_plotdata(std::ostream &os, const std::vector<SweepRow> &rows);
// Writes to `path`, or to stdout when path is empty or "-".
void write_output(const std::string &path, const std::string &content);

struct DominanceGroup {
    std::string key; // family,d,p,param
    double constant = 0.0;
    double worst_excess = 0.0; // max over rows of error / (C epsilon)
    Index worst_m = 0;
    bool pass = false;
};

struct VerifyReport {
    std::vector<DominanceGroup> groups;
    bool pass = false;
};

// Fits C = error/epsilon at the smallest m of each group and checks every
// row against 1.1 C epsilon.
VerifyReport verify_dominance(const std::vector<SweepRow> &rows, double slack = 1.1);

struct ProbeConfig {
    CoefficientSequence lambda = CoefficientSequence::korobov(1.0);
    CoefficientSequence beta = CoefficientSequence::korobov(1.0);
    int dim = 1;
    std::vector<Index> n_list;
    double c3 = 1.0;
    int trials = 20;
    int restarts = 4;
    GrowthFunction growth = GrowthFunction::power(1.0);
    std::uint64_t seed = 1;
    std::string out;
};

ProbeConfig probe_config_from(const IniFile &ini);

extern const char *const kProbeHeader;
std::vector<ProbeResult> run_probe(const ProbeConfig &cfg);
std::string probe_csv(const std::vector<ProbeResult> &rows);

} // namespace translates
