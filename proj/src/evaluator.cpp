#include "barnes/evaluator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "barnes/quadrature.hpp"
#include "barnes/summation.hpp"

namespace barnes {

namespace {

constexpr double kPoleGuardRadius = 1e-6;

// base^{e} for positive base and complex exponent e.
std::complex<double> cpow_pos(double base, std::complex<double> e) {
    const double lb = std::log(base);
    return std::polar(std::exp(e.real() * lb), e.imag() * lb);
}

void check_pole_guard(ComplexPoint s) {
    const double d1 = std::hypot(s.sigma - 1.0, s.t);
    const double d2 = std::hypot(s.sigma - 2.0, s.t);
    if (std::min(d1, d2) < kPoleGuardRadius) {
        throw PoleProximity("s within 1e-6 of a pole at s=1 or s=2");
    }
}

struct SumCount {
    std::complex<double> value;
    std::int64_t terms;
};

bool collapsible(const BarnesParams& p) {
    return !p.ratio_irrational() && p.v() == p.w();
}

// sum over the square [0,N]^2 of (alpha+v m+w n)^{-s}. When v == w exactly the
// anti-diagonals are regrouped: lambda = alpha + v k with multiplicity k+1 for
// k <= N and 2N+1-k above. Fixed summation order either way.
SumCount square_sum(ComplexPoint s, const BarnesParams& p, std::int64_t N,
                    const SeriesBudget& budget) {
    if (N < 0) {
        throw DomainError("square sum needs N >= 0");
    }
    const double alpha = p.alpha_d();
    const double v = p.v_d();
    const double w = p.w_eff_d();
    ComplexNeumaierSum acc;
    if (collapsible(p)) {
        const std::int64_t kmax = 2 * N;
        if (kmax + 1 > budget.max_terms) {
            throw BudgetExceeded("square sum of " + std::to_string(kmax + 1) +
                                 " grouped terms exceeds budget");
        }
        for (std::int64_t k = 0; k <= kmax; ++k) {
            const double mult = static_cast<double>(k <= N ? k + 1 : 2 * N + 1 - k);
            const double lambda = alpha + v * static_cast<double>(k);
            const double ll = std::log(lambda);
            acc.add(mult * std::polar(std::exp(-s.sigma * ll), -s.t * ll));
        }
        return {acc.value(), kmax + 1};
    }
    if ((N + 1) > budget.max_terms / (N + 1)) {
        throw BudgetExceeded("square sum of (" + std::to_string(N + 1) +
                             ")^2 terms exceeds budget");
    }
    for (std::int64_t m = 0; m <= N; ++m) {
        const double base_m = alpha + v * static_cast<double>(m);
        for (std::int64_t n = 0; n <= N; ++n) {
            const double lambda = base_m + w * static_cast<double>(n);
            const double ll = std::log(lambda);
            acc.add(std::polar(std::exp(-s.sigma * ll), -s.t * ll));
        }
    }
    return {acc.value(), (N + 1) * (N + 1)};
}

// sum over the triangle m+n <= M, same regrouping when v == w.
SumCount triangle_sum(ComplexPoint s, const BarnesParams& p, std::int64_t M,
                      const SeriesBudget& budget) {
    const double alpha = p.alpha_d();
    const double v = p.v_d();
    const double w = p.w_eff_d();
    ComplexNeumaierSum acc;
    if (collapsible(p)) {
        if (M + 1 > budget.max_terms) {
            throw BudgetExceeded("triangle sum of " + std::to_string(M + 1) +
                                 " grouped terms exceeds budget");
        }
        for (std::int64_t k = 0; k <= M; ++k) {
            const double lambda = alpha + v * static_cast<double>(k);
            const double ll = std::log(lambda);
            acc.add(static_cast<double>(k + 1) *
                    std::polar(std::exp(-s.sigma * ll), -s.t * ll));
        }
        return {acc.value(), M + 1};
    }
    if ((M + 1) > 2 * (budget.max_terms / (M + 2))) {
        throw BudgetExceeded("triangle sum of ~" + std::to_string(M) +
                             "^2/2 terms exceeds budget");
    }
    std::int64_t terms = 0;
    for (std::int64_t m = 0; m <= M; ++m) {
        const double base_m = alpha + v * static_cast<double>(m);
        for (std::int64_t n = 0; n <= M - m; ++n) {
            const double lambda = base_m + w * static_cast<double>(n);
            const double ll = std::log(lambda);
            acc.add(std::polar(std::exp(-s.sigma * ll), -s.t * ll));
            ++terms;
        }
    }
    return {acc.value(), terms};
}

std::int64_t triangle_terms(const BarnesParams& p, std::int64_t M) {
    if (collapsible(p)) {
        return M + 1;
    }
    if (M > 3'000'000'000LL) {
        return std::numeric_limits<std::int64_t>::max();
    }
    return (M + 1) * (M + 2) / 2;
}

} // namespace

const char* to_string(Method m) {
    switch (m) {
    case Method::DirectSeries: return "direct";
    case Method::EulerMaclaurin: return "em";
    case Method::Theorem3: return "theorem3";
    case Method::HurwitzOracle: return "hurwitz";
    }
    return "?";
}

TruncationPlan::TruncationPlan(double x_, double C_, std::int64_t N_) : x(x_), C(C_), N(N_) {
    if (!(x >= 1.0)) {
        throw DomainError("truncation height x must be >= 1");
    }
    if (!(C > 1.0)) {
        throw DomainError("truncation constant C must be > 1");
    }
    if (N < 1) {
        throw DomainError("Euler-Maclaurin cut N must be >= 1");
    }
}

std::complex<double> complex_power(double base, ComplexPoint s) {
    if (!(base > 0.0)) {
        throw DomainError("complex_power requires base > 0");
    }
    const double lb = std::log(base);
    return std::polar(std::exp(-s.sigma * lb), -s.t * lb);
}

std::complex<double> theorem3_correction(ComplexPoint s, double alpha, double v, double w,
                                         double x) {
    const std::complex<double> e(2.0 - s.sigma, -s.t);
    const std::complex<double> numer =
        cpow_pos(alpha + v * x, e) + cpow_pos(alpha + w * x, e) - cpow_pos(alpha + v * x + w * x, e);
    const std::complex<double> sc = s.value();
    return numer / (v * w * (sc - 1.0) * (sc - 2.0));
}

// --- direct series ----------------------------------------------------------

double direct_series_tail(const BarnesParams& params, double sigma, std::int64_t M) {
    if (!(sigma > 2.0)) {
        throw RegionError("direct series tail requires sigma > 2");
    }
    const double alpha = params.alpha_d();
    const double mu = std::min(params.v_d(), params.w_eff_d());
    // f(k) = (k+1)(alpha+mu k)^{-sigma} is decreasing for k > (alpha-sigma mu)/(mu(sigma-1)).
    const double k_mono = (alpha - sigma * mu) / (mu * (sigma - 1.0));
    double extra = 0.0;
    double k0 = static_cast<double>(M) + 1.0;
    while (k0 < k_mono) {
        extra += (k0 + 1.0) * std::pow(alpha + mu * k0, -sigma);
        k0 += 1.0;
    }
    const double U = alpha + mu * k0;
    const double integral = (std::pow(U, 2.0 - sigma) / (sigma - 2.0) +
                             (mu - alpha) * std::pow(U, 1.0 - sigma) / (sigma - 1.0)) /
                            (mu * mu);
    const double first = (k0 + 1.0) * std::pow(U, -sigma);
    return extra + first + integral;
}

std::int64_t direct_series_cut(const BarnesParams& params, double sigma, const Tolerance& tol,
                               const SeriesBudget& budget) {
    if (!(sigma > 2.0)) {
        throw RegionError("direct series requires sigma > 2");
    }
    std::int64_t lo = 1;
    std::int64_t hi = 1;
    constexpr std::int64_t kSearchCap = 1'000'000'000'000'000LL;
    while (direct_series_tail(params, sigma, hi) > tol.abs_tol) {
        lo = hi;
        if (hi > kSearchCap) {
            throw BudgetExceeded("direct series cannot reach tol.abs at any tractable cut");
        }
        hi *= 4;
    }
    while (lo + 1 < hi) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        if (direct_series_tail(params, sigma, mid) <= tol.abs_tol) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    if (triangle_terms(params, hi) > budget.max_terms) {
        throw BudgetExceeded("direct series needs M=" + std::to_string(hi) +
                             " which exceeds the term budget");
    }
    return hi;
}

EvalResult direct_series_at(ComplexPoint s, const BarnesParams& params, std::int64_t M,
                            const SeriesBudget& budget) {
    if (!(s.sigma > 2.0)) {
        throw RegionError("direct series requires sigma > 2");
    }
    if (M < 0) {
        throw DomainError("direct series cut must be >= 0");
    }
    auto [value, terms] = triangle_sum(s, params, M, budget);
    return {value, direct_series_tail(params, s.sigma, M), Method::DirectSeries, terms};
}

EvalResult direct_series(ComplexPoint s, const BarnesParams& params, const Tolerance& tol,
                         const SeriesBudget& budget) {
    const std::int64_t M = direct_series_cut(params, s.sigma, tol, budget);
    return direct_series_at(s, params, M, budget);
}

// --- Euler-Maclaurin row identity -------------------------------------------

std::complex<double> em_row_sum(ComplexPoint s, const BarnesParams& params, std::int64_t n_fixed,
                                std::int64_t a, std::optional<std::int64_t> b,
                                const SawtoothQuad& quad) {
    if (n_fixed < 0 || a < 0) {
        throw DomainError("em_row_sum needs n_fixed >= 0 and a >= 0");
    }
    const bool infinite = !b.has_value();
    if (!infinite && *b <= a) {
        throw DomainError("em_row_sum needs a < b (empty range rejected)");
    }
    if (infinite && !(s.sigma > 1.0)) {
        throw RegionError("em_row_sum with b = infinity requires sigma > 1");
    }

    const double alpha = params.alpha_d();
    const double v = params.v_d();
    const double w = params.w_eff_d();
    const double row = alpha + w * static_cast<double>(n_fixed);
    const auto base = [&](double x) { return row + v * x; };
    const std::complex<double> sc = s.value();
    const std::complex<double> one_minus_s(1.0 - s.sigma, -s.t);
    const std::complex<double> minus_s(-s.sigma, -s.t);

    const double Ba = base(static_cast<double>(a));
    std::complex<double> boundary;
    if (infinite) {
        boundary = cpow_pos(Ba, one_minus_s) / (v * (sc - 1.0)) - 0.5 * cpow_pos(Ba, minus_s);
    } else {
        const double Bb = base(static_cast<double>(*b));
        boundary = (cpow_pos(Bb, one_minus_s) - cpow_pos(Ba, one_minus_s)) / (v * (1.0 - sc)) +
                   0.5 * (cpow_pos(Bb, minus_s) - cpow_pos(Ba, minus_s));
    }

    // sawtooth integral over [a, X], where X = b or the analytic switch point
    // beyond which the tail collapses to -g(X)/12 plus a bounded remainder.
    const std::complex<double> g_exponent(-(s.sigma + 1.0), -s.t);
    const auto g = [&](double x) { return cpow_pos(base(x), g_exponent); };

    std::int64_t X;
    if (infinite) {
        const double smag1 = std::hypot(s.sigma + 1.0, s.t);
        const double smag2 = std::hypot(s.sigma + 2.0, s.t);
        const double smag = std::hypot(s.sigma, s.t);
        X = a + 8;
        constexpr std::int64_t kIntervalCap = 2'000'000;
        while (true) {
            const double BX = base(static_cast<double>(X));
            const double rem = 0.00802 * v * smag1 * smag2 *
                               std::pow(BX, -(s.sigma + 2.0)) / (s.sigma + 2.0);
            if (v * std::max(smag, 1.0) * rem <= quad.tail_tol) {
                break;
            }
            if (X - a > kIntervalCap) {
                throw QuadratureFailure("sawtooth tail truncation target unreachable");
            }
            X += std::max<std::int64_t>(8, (X - a) / 2);
        }
    } else {
        X = *b;
    }

    const GaussRule rule = gauss_legendre_8();
    ComplexNeumaierSum integral;
    for (std::int64_t k = a; k < X; ++k) {
        const double Bk = base(static_cast<double>(k));
        // resolve both the oscillation t*v/B and the algebraic variation of g
        const double rate = (std::abs(s.t) + s.sigma + 2.0) * v / Bk;
        const int n_sub = std::clamp(static_cast<int>(std::ceil(rate / 1.2)), 1, quad.max_subdiv);
        const auto sweep = [&](int pieces) {
            ComplexNeumaierSum piece_acc;
            const double width = 1.0 / pieces;
            for (int p = 0; p < pieces; ++p) {
                const double lo = static_cast<double>(k) + p * width;
                const double mid = lo + 0.5 * width;
                std::complex<double> panel;
                for (int i = 0; i < rule.order; ++i) {
                    const double x = mid + 0.5 * width * rule.nodes[i];
                    const double saw = (x - static_cast<double>(k)) - 0.5;
                    panel += rule.weights[i] * saw * g(x);
                }
                piece_acc.add(panel * (0.5 * width));
            }
            return piece_acc.value();
        };
        const std::complex<double> coarse = sweep(n_sub);
        const std::complex<double> fine = sweep(2 * n_sub);
        const double scale = std::pow(Bk, -(s.sigma + 1.0));
        if (std::abs(fine - coarse) > quad.per_interval_tol * std::max(scale, std::abs(fine))) {
            throw QuadratureFailure("per-interval sawtooth quadrature missed its error target");
        }
        integral.add(fine);
    }
    std::complex<double> I = integral.value();
    if (infinite) {
        I += -g(static_cast<double>(X)) / 12.0;
    }

    return boundary - v * sc * I;
}

EvalResult euler_maclaurin_eval(ComplexPoint s, const BarnesParams& params, std::int64_t N,
                                double c_em, const SeriesBudget& budget) {
    if (!(s.sigma > 1.0)) {
        throw RegionError("Euler-Maclaurin evaluation requires sigma > 1");
    }
    check_pole_guard(s);
    if (N < 1) {
        throw DomainError("Euler-Maclaurin cut N must be >= 1");
    }
    auto [sum, terms] = square_sum(s, params, N, budget);
    const std::complex<double> corr = theorem3_correction(
        s, params.alpha_d(), params.v_d(), params.w_eff_d(), static_cast<double>(N));
    const double bound = c_em * std::pow(static_cast<double>(N), 1.0 - s.sigma);
    return {sum + corr, bound, Method::EulerMaclaurin, terms};
}

EvalResult theorem3_eval(ComplexPoint s, const BarnesParams& params, const TruncationPlan& plan,
                         double c_t3, const SeriesBudget& budget) {
    if (!(s.sigma > 1.0)) {
        throw RegionError("theorem3 evaluation requires sigma > 1");
    }
    if (std::abs(s.t) > 2.0 * scales::pi * plan.x / plan.C) {
        throw HeightViolation("|t| exceeds 2*pi*x/C");
    }
    check_pole_guard(s);
    const auto N = static_cast<std::int64_t>(std::floor(plan.x));
    auto [sum, terms] = square_sum(s, params, N, budget);
    const std::complex<double> corr =
        theorem3_correction(s, params.alpha_d(), params.v_d(), params.w_eff_d(), plan.x);
    const double bound = c_t3 * std::pow(plan.x, 1.0 - s.sigma);
    return {sum + corr, bound, Method::Theorem3, terms};
}

// --- Hurwitz zeta ------------------------------------------------------------

namespace detail {

struct HurwitzResult {
    std::complex<double> value;
    double remainder_bound;
};

// Euler-Maclaurin with Bernoulli corrections B2..B12. The shift M keeps
// (|s|+13)/(M+a) <= 1/2 so the remainder majorant lands below 1e-13.
HurwitzResult hurwitz_em(ComplexPoint s, double a) {
    // c_k = B_{2k} / (2k)!
    static constexpr std::array<double, 6> kBernoulliOverFact = {
        8.3333333333333333e-02,  -1.3888888888888889e-03, 3.3068783068783069e-05,
        -8.2671957671957672e-07, 2.0876756987868099e-08,  -5.2841901386874932e-10};
    static constexpr double kB14OverFact = 1.3382369694493133e-11;

    const double smag = std::hypot(s.sigma, s.t);
    auto remainder = [&](double x) {
        std::complex<double> poch = s.value();
        for (int j = 1; j <= 12; ++j) {
            poch *= s.value() + static_cast<double>(j);
        }
        return kB14OverFact * std::abs(poch) * std::pow(x, -(s.sigma + 13.0)) *
               std::hypot(s.sigma + 13.0, s.t) / (s.sigma + 13.0);
    };

    auto M = static_cast<std::int64_t>(std::max(0.0, std::ceil(2.0 * (smag + 13.0) - a)));
    while (remainder(static_cast<double>(M) + a) > 1e-13) {
        M += std::max<std::int64_t>(8, M / 4);
        if (M > 1'000'000) {
            throw BudgetExceeded("hurwitz_zeta shift did not converge");
        }
    }

    ComplexNeumaierSum head;
    for (std::int64_t n = 0; n < M; ++n) {
        head.add(complex_power(static_cast<double>(n) + a, s));
    }
    const double x = static_cast<double>(M) + a;
    const std::complex<double> sc = s.value();
    const std::complex<double> x_pow_ms = cpow_pos(x, -sc);

    std::complex<double> total = head.value();
    total += cpow_pos(x, 1.0 - sc) / (sc - 1.0);
    total += 0.5 * x_pow_ms;

    std::complex<double> poch = sc; // (s)(s+1)...(s+2k-2)
    const double inv_x2 = 1.0 / (x * x);
    double x_fac = 1.0 / x; // x^{-(2k-1)}
    for (std::size_t k = 0; k < kBernoulliOverFact.size(); ++k) {
        if (k > 0) {
            const double j = 2.0 * static_cast<double>(k);
            poch *= (sc + (j - 1.0)) * (sc + j);
            x_fac *= inv_x2;
        }
        total += kBernoulliOverFact[k] * poch * x_pow_ms * (x * x_fac / x);
    }
    return {total, remainder(x)};
}

} // namespace detail

std::complex<double> hurwitz_zeta(ComplexPoint s, double a) {
    if (!(a > 0.0)) {
        throw DomainError("hurwitz_zeta requires a > 0");
    }
    if (!(s.sigma > -10.0)) {
        throw RegionError("hurwitz_zeta supported only for sigma > -10");
    }
    if (std::hypot(s.sigma - 1.0, s.t) < kPoleGuardRadius) {
        throw PoleProximity("hurwitz_zeta within 1e-6 of the pole at s=1");
    }
    return detail::hurwitz_em(s, a).value;
}

namespace {

double hurwitz_oracle_tail(const BarnesParams& params, double sigma, std::int64_t M) {
    const double alpha = params.alpha_d();
    const double v = params.v_d();
    const double w = params.w_eff_d();
    const double a1 = (alpha + v * (static_cast<double>(M) + 1.0)) / w;
    const double wv = w / v;
    const double sum_pow_s = std::pow(a1, -sigma) + wv * std::pow(a1, 1.0 - sigma) / (sigma - 1.0);
    const double sum_pow_s1 =
        std::pow(a1, 1.0 - sigma) + wv * std::pow(a1, 2.0 - sigma) / (sigma - 2.0);
    return std::pow(w, -sigma) * (sum_pow_s + sum_pow_s1 / (sigma - 1.0));
}

} // namespace

std::int64_t hurwitz_oracle_cut(const BarnesParams& params, double sigma, const Tolerance& tol,
                                const SeriesBudget& budget) {
    if (!(sigma > 2.0)) {
        throw RegionError("hurwitz oracle requires sigma > 2");
    }
    std::int64_t lo = 1, hi = 1;
    while (hurwitz_oracle_tail(params, sigma, hi) > tol.abs_tol) {
        lo = hi;
        hi *= 4;
        if (hi > budget.max_terms) {
            throw BudgetExceeded("hurwitz oracle needs more than the term budget");
        }
    }
    while (lo + 1 < hi) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        if (hurwitz_oracle_tail(params, sigma, mid) <= tol.abs_tol) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

EvalResult hurwitz_oracle(ComplexPoint s, const BarnesParams& params, std::int64_t M) {
    if (!(s.sigma > 2.0)) {
        throw RegionError("hurwitz oracle requires sigma > 2");
    }
    if (M < 0) {
        throw DomainError("hurwitz oracle needs M >= 0");
    }
    const double alpha = params.alpha_d();
    const double v = params.v_d();
    const double w = params.w_eff_d();
    ComplexNeumaierSum acc;
    double eval_err = 0.0;
    for (std::int64_t m = 0; m <= M; ++m) {
        const auto hz = detail::hurwitz_em(s, (alpha + v * static_cast<double>(m)) / w);
        acc.add(hz.value);
        eval_err += hz.remainder_bound;
    }
    const std::complex<double> scale = complex_power(w, s);
    const double w_pow = std::pow(w, -s.sigma);
    const double bound = hurwitz_oracle_tail(params, s.sigma, M) + w_pow * eval_err;
    return {scale * acc.value(), bound, Method::HurwitzOracle, M + 1};
}

EvalResult hurwitz_oracle_auto(ComplexPoint s, const BarnesParams& params, const Tolerance& tol,
                               const SeriesBudget& budget) {
    return hurwitz_oracle(s, params, hurwitz_oracle_cut(params, s.sigma, tol, budget));
}

// --- exponential-sum lemma check ----------------------------------------------

double verify_exp_sum_lemma(ComplexPoint s, const BarnesParams& params, std::int64_t m_fixed,
                            double x, std::int64_t N, double C) {
    if (!(C > 1.0)) {
        throw DomainError("lemma check requires C > 1");
    }
    if (!(s.sigma > 0.0)) {
        throw RegionError("lemma check requires sigma > 0");
    }
    if (m_fixed < 0 || !(x >= 0.0) || static_cast<double>(N) < x) {
        throw DomainError("lemma check requires m >= 0 and 0 <= x <= N");
    }
    if (std::abs(s.t) > 2.0 * scales::pi * x / C) {
        throw HeightViolation("|t| exceeds 2*pi*x/C");
    }
    const double alpha = params.alpha_d();
    const double v = params.v_d();
    const double w = params.w_eff_d();
    const double row = alpha + v * static_cast<double>(m_fixed);

    ComplexNeumaierSum acc;
    const auto n_start = static_cast<std::int64_t>(std::floor(x)) + 1;
    for (std::int64_t n = n_start; n <= N; ++n) {
        acc.add(complex_power(row + w * static_cast<double>(n), s));
    }

    const std::complex<double> one_minus_s(1.0 - s.sigma, -s.t);
    const std::complex<double> integral =
        (cpow_pos(row + w * static_cast<double>(N), one_minus_s) - cpow_pos(row + w * x, one_minus_s)) /
        (w * (1.0 - s.value()));
    return std::abs(acc.value() - integral);
}

} // namespace barnes
