#pragma once

#include <complex>
#include <cstdint>
#include <optional>

#include "barnes/core.hpp"

namespace barnes {

enum class Method { DirectSeries, EulerMaclaurin, Theorem3, HurwitzOracle };

const char* to_string(Method m);

struct EvalResult {
    std::complex<double> value;
    double error_bound = 0.0; // majorant of truncation + quadrature error
    Method method = Method::DirectSeries;
    std::int64_t terms_used = 1;
};

// Truncation parameters: x and C for the approximation formula, N for the
// Euler-Maclaurin cut. The height condition |t| <= 2*pi*x/C is checked at
// the evaluation site.
struct TruncationPlan {
    double x = 1.0;
    double C = 2.0 * scales::pi;
    std::int64_t N = 1;

    TruncationPlan() = default;
    TruncationPlan(double x_, double C_, std::int64_t N_);
};

// Caps on summation work. Exceeding one raises BudgetExceeded rather than
// silently degrading accuracy.
struct SeriesBudget {
    std::int64_t max_terms = 20'000'000;
};

// base^{-s} for base > 0, i.e. the value of one series term.
std::complex<double> complex_power(double base, ComplexPoint s);

// Closed-form correction of the truncated double sum at height x:
//   [(alpha+v x)^{2-s} + (alpha+w x)^{2-s} - (alpha+v x+w x)^{2-s}] / (v w (s-1)(s-2))
std::complex<double> theorem3_correction(ComplexPoint s, double alpha, double v, double w,
                                         double x);

// --- direct series ---------------------------------------------------------

// Analytic majorant of the tail over m+n > M: sum_{k>M} (k+1)(alpha+min(v,w)k)^{-sigma}.
double direct_series_tail(const BarnesParams& params, double sigma, std::int64_t M);

// Smallest M whose tail majorant meets tol.abs, respecting the term budget.
std::int64_t direct_series_cut(const BarnesParams& params, double sigma, const Tolerance& tol,
                               const SeriesBudget& budget = {});

// Triangle sum m+n <= M with the tail majorant as error_bound.
EvalResult direct_series_at(ComplexPoint s, const BarnesParams& params, std::int64_t M,
                            const SeriesBudget& budget = {});

EvalResult direct_series(ComplexPoint s, const BarnesParams& params, const Tolerance& tol,
                         const SeriesBudget& budget = {});

// --- Euler-Maclaurin row identity ------------------------------------------

struct SawtoothQuad {
    int max_subdiv = 32;          // per-unit-interval oscillation splits
    double per_interval_tol = 1e-11;
    double tail_tol = 1e-12;      // truncation target for b = infinity
};

// sum_{m=a+1}^{b} (alpha+v m+w n)^{-s} evaluated through the Euler-Maclaurin
// identity: boundary terms plus a sawtooth-kernel integral computed with
// fixed-order Gauss-Legendre per unit interval. b = nullopt means infinity
// (requires sigma > 1).
std::complex<double> em_row_sum(ComplexPoint s, const BarnesParams& params, std::int64_t n_fixed,
                                std::int64_t a, std::optional<std::int64_t> b,
                                const SawtoothQuad& quad = {});

// Finite double sum over [0,N]^2 plus the closed-form corner correction.
EvalResult euler_maclaurin_eval(ComplexPoint s, const BarnesParams& params, std::int64_t N,
                                double c_em = 10.0, const SeriesBudget& budget = {});

// Truncated double sum up to height x plus the correction term; valid for
// sigma > 1 under the height condition |t| <= 2 pi x / C.
EvalResult theorem3_eval(ComplexPoint s, const BarnesParams& params, const TruncationPlan& plan,
                         double c_t3 = 10.0, const SeriesBudget& budget = {});

// --- Hurwitz zeta oracle ----------------------------------------------------

// Euler-Maclaurin Hurwitz zeta with Bernoulli corrections up to B12 and a
// rigorous remainder majorant (<= 1e-12 in the region used by this project).
std::complex<double> hurwitz_zeta(ComplexPoint s, double a);

// Number of m-terms needed for the oracle tail majorant to meet tol.abs.
std::int64_t hurwitz_oracle_cut(const BarnesParams& params, double sigma, const Tolerance& tol,
                                const SeriesBudget& budget = {});

// w^{-s} sum_{m=0}^{M} zeta_H(s, (alpha+v m)/w) with the analytic tail
// majorant folded into error_bound. Requires sigma > 2.
EvalResult hurwitz_oracle(ComplexPoint s, const BarnesParams& params, std::int64_t M);

EvalResult hurwitz_oracle_auto(ComplexPoint s, const BarnesParams& params, const Tolerance& tol,
                               const SeriesBudget& budget = {});

// --- exponential-sum lemma check --------------------------------------------

// | sum_{x<n<=N} (alpha+v m+w n)^{-s} - closed-form integral |; the lemma
// predicts O((m+x)^{-sigma}) under |t| <= 2 pi x / C.
double verify_exp_sum_lemma(ComplexPoint s, const BarnesParams& params, std::int64_t m_fixed,
                            double x, std::int64_t N, double C);

} // namespace barnes
