#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "barnes/errors.hpp"

namespace barnes {

// Exact rational arithmetic for parameter bookkeeping and multiplicity
// grouping; all analytic evaluation is binary64.
using Rational = mpq_class;

// Parses "p", "p/q", or a plain decimal such as "0.25" into an exact rational.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& r);

// s = sigma + i t. Constructors reject non-finite components.
struct ComplexPoint {
    double sigma = 0.0;
    double t = 0.0;

    ComplexPoint() = default;
    ComplexPoint(double sigma_, double t_);

    std::complex<double> value() const { return {sigma, t}; }
    ComplexPoint conjugate() const { return {sigma, -t}; }
};

enum class RegionTag {
    Theorem1,      // sigma > 2
    Theorem2,      // 3/2 < sigma <= 2
    Theorem3Strip, // 1 < sigma <= 3/2
    OutOfScope,    // sigma <= 1
};

const char* to_string(RegionTag tag);

// Pure function of sigma; breakpoints exactly at 1, 3/2, 2.
RegionTag classify_region(double sigma);

struct Tolerance {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;

    Tolerance() = default;
    Tolerance(double abs_tol_, double rel_tol_);
};

// Closed vocabulary of irrational scale multipliers accepted by the CLI and
// reused in tests.
namespace scales {
inline constexpr double sqrt2 = 1.4142135623730950488;
inline constexpr double sqrt3 = 1.7320508075688772935;
inline constexpr double sqrt5 = 2.2360679774997896964;
inline constexpr double golden = 1.6180339887498948482;
inline constexpr double pi = 3.1415926535897932385;
inline constexpr double e = 2.7182818284590452354;

// Returns nullopt for names outside the vocabulary.
std::optional<double> by_name(std::string_view name);
} // namespace scales

// Candidate parameters before validation.
struct RawParams {
    Rational alpha{1};
    Rational v{1};
    Rational w{1};
    bool ratio_irrational = false;
    std::optional<double> irrational_scale; // applied to w when flagged
};

// Validated parameter triple (alpha, v, w). When ratio_irrational is set the
// effective w is w * irrational_scale and no two lattice points share a
// lambda value (sanity-checked when tables are built). Immutable.
class BarnesParams {
public:
    static BarnesParams validate(const RawParams& raw);

    const Rational& alpha() const { return alpha_; }
    const Rational& v() const { return v_; }
    const Rational& w() const { return w_; }
    bool ratio_irrational() const { return ratio_irrational_; }
    double irrational_scale() const { return scale_; }

    double alpha_d() const { return alpha_d_; }
    double v_d() const { return v_d_; }
    // Effective w used in every analytic evaluation.
    double w_eff_d() const { return w_eff_d_; }

    // v/w = p/q in lowest terms; only meaningful for rational ratios.
    const mpz_class& ratio_p() const;
    const mpz_class& ratio_q() const;
    // Lattice gap g with v = p*g and w = q*g, so lambda = alpha + g*(p*m + q*n).
    const Rational& lambda_gap() const;

    RawParams raw() const;

private:
    BarnesParams() = default;

    Rational alpha_, v_, w_;
    bool ratio_irrational_ = false;
    double scale_ = 1.0;
    double alpha_d_ = 0, v_d_ = 0, w_eff_d_ = 0;
    mpz_class p_, q_;
    Rational gap_;
};

// Returns validated params; throws NonPositiveParameter or InvalidScale.
BarnesParams validate_params(const RawParams& raw);

} // namespace barnes
