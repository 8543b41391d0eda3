#pragma once

#include "translates/frequency.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace translates {

// Bounded smooth profile F used by mask-type and exponent-type sequences.
//
// For mask-type sequences F is evaluated at log|k|; its value and first
// derivative must stay below bound() for t > 1. For exponent-type sequences
// F is a decreasing envelope on [0, inf) evaluated at |k|.
class MaskSpec {
public:
    enum class Profile { constant_one, log_damped, table };

    static MaskSpec constant_one();
    // F(t) = 1 / (1 + c t^2)
    static MaskSpec log_damped(double c);
    // Piecewise-linear interpolation through (t_i, v_i), clamped outside the
    // table; bound is the user's declared c(b).
    static MaskSpec table(std::vector<double> t, std::vector<double> v, double bound);

    Profile profile() const { return profile_; }
    double parameter() const { return param_; }
    double bound() const { return bound_; }

    double operator()(double t) const;
    double derivative(double t) const;

    // Value used for k = 0 (continuous extension of the profile at log 1 = 0).
    double left_value() const { return (*this)(0.0); }

    // Samples |F| and |F'| on (1, t_max]; true when both stay below bound().
    bool check_bound(double t_max = 50.0, int samples = 4096) const;

    std::string describe() const;

private:
    Profile profile_ = Profile::constant_one;
    double param_ = 0.0;
    double bound_ = 1.0;
    std::vector<double> t_;
    std::vector<double> v_;
};

// (1+|k|)^{-r} F(log|k|), with F(0) at k = 0.
double mask_sequence_value(const MaskSpec &spec, double r, Index k);

// Envelope rule for the reciprocals: |lambda_k^{-1}| <= envelope(|k|_inf).
// Custom sequences also use it to define their values outside the table:
// power -> lambda_k = |k|^rate / scale, exponential -> lambda_k = e^{rate|k|} / scale.
struct TailRule {
    enum class Kind { zero, power, exponential, constant };
    Kind kind = Kind::power;
    double rate = 0.0;
    double scale = 1.0;

    static TailRule power(double rate, double scale = 1.0) { return {Kind::power, rate, scale}; }
    static TailRule exponential(double rate, double scale = 1.0) { return {Kind::exponential, rate, scale}; }
    static TailRule constant(double scale) { return {Kind::constant, 0.0, scale}; }
    static TailRule zero() { return {Kind::zero, 0.0, 0.0}; }

    double envelope(double t) const;
    // Upper bound on sum_{j>=0} envelope(first + stride*j)^q; infinity when divergent.
    double progression_sum(double first, double stride, double q) const;
};

enum class Family { korobov, exponential, mask_power, exponent_mask, constant, product, custom, power, band_limited };

std::string to_string(Family f);

// Coefficient sequence lambda = (lambda_k : k in Z^d), immutable after construction.
//
// Reciprocals lambda_k^{-1} are the Fourier coefficients of the generator
// phi_lambda. band_limited() sequences have infinite values (zero reciprocals)
// outside their box; every other family is finite and nonzero everywhere.
class CoefficientSequence {
public:
    static CoefficientSequence korobov(double r, int dim = 1);
    // lambda_k = e^{s|k|}, so phi_lambda has coefficients e^{-s|k|}.
    static CoefficientSequence exponential(double s, int dim = 1);
    // lambda_k^{-1} = (1+|k|)^{-r} F(log|k|)
    static CoefficientSequence mask_power(double r, MaskSpec oscillation);
    // lambda_k^{-1} = e^{-s|k|} F(|k|), F decreasing and positive
    static CoefficientSequence exponent_mask(double s, MaskSpec envelope);
    static CoefficientSequence constant(double v, int dim = 1);
    static CoefficientSequence product(std::vector<CoefficientSequence> factors);
    // Explicit table on a box |k|_inf <= R plus a rule for the rest of Z^d.
    static CoefficientSequence custom(int dim, std::map<FrequencyIndex, cplx> table, TailRule tail);
    // lambda_k = base_k^exponent (base must be real positive when exponent is fractional)
    static CoefficientSequence power(const CoefficientSequence &base, double exponent);
    // base on |k|_inf <= degree, infinite outside (reciprocal vanishes).
    static CoefficientSequence band_limited(const CoefficientSequence &base, Index degree);

    int dimension() const;
    Family family() const;
    // r for korobov/mask_power, s for exponential/exponent_mask, v for constant,
    // exponent for power, degree for band_limited; 0 otherwise.
    double parameter() const;
    std::string describe() const;

    cplx value(const FrequencyIndex &k) const;
    cplx reciprocal(const FrequencyIndex &k) const;
    // One-dimensional fast paths; require dimension() == 1.
    cplx value1(Index k) const;
    cplx reciprocal1(Index k) const;

    bool real_valued() const;
    bool symmetric() const;

    // Per-axis factors when the sequence is a coordinate product (d = 1
    // sequences are their own single factor). Empty when not factorizable.
    std::optional<std::vector<CoefficientSequence>> factors() const;

    // Nonincreasing bound on |lambda_k^{-1}| over |k|_inf >= t.
    double envelope(double t) const;
    // Upper bound on sum_{j>=0} envelope(first + stride*j)^q.
    double progression_sum(double first, double stride, double q) const;
    // sup_k |lambda_k^{-1}| over all of Z^d.
    double sup_reciprocal() const;

    // Base sequence of power/band_limited wrappers.
    std::optional<CoefficientSequence> base() const;
    const MaskSpec *mask() const;

    struct Node;

private:
    explicit CoefficientSequence(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

// lambda_k with dimension checking (throws std::invalid_argument).
cplx eval_lambda(const CoefficientSequence &seq, const FrequencyIndex &k);

// Result of a finite-range nondecreasing-type scan.
struct NondecreasingCertificate {
    bool holds = false;
    double constant = 0.0; // min theta_k / theta_l over admissible pairs
    std::optional<std::pair<FrequencyIndex, FrequencyIndex>> violated_at;
};

using ThetaFn = std::function<double(const FrequencyIndex &)>;

// Exhaustive scan over |k|_inf, |l|_inf <= probe_radius. In one dimension the
// admissible pairs are |k| > |l|; in d dimensions |k_j| >= |l_j| for every j.
// The sequence is reported as holding when the witnessed constant is at least
// min_constant; otherwise the first pair below that threshold is returned.
// skip_zero drops every index with a zero component (for theta like |lambda_k|/|k|^r).
NondecreasingCertificate check_nondecreasing_type(const ThetaFn &theta, int dim, Index probe_radius,
                                                  double min_constant = 1e-3, bool skip_zero = false);
// theta_k = |lambda_k|
NondecreasingCertificate check_nondecreasing_type(const CoefficientSequence &seq, Index probe_radius,
                                                  double min_constant = 1e-3);

} // namespace translates
