#include "barnes/core.hpp"

#include <cmath>
#include <stdexcept>

namespace barnes {

Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) {
        throw DomainError("empty rational literal");
    }
    auto slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            mpz_class num(s.substr(0, slash));
            mpz_class den(s.substr(slash + 1));
            if (den == 0) {
                throw DomainError("zero denominator in '" + s + "'");
            }
            Rational r(num, den);
            r.canonicalize();
            return r;
        }
        auto dot = s.find('.');
        if (dot != std::string::npos) {
            std::string digits = s.substr(0, dot) + s.substr(dot + 1);
            std::size_t frac_len = s.size() - dot - 1;
            if (digits.empty() || digits == "-" || digits == "+") {
                throw DomainError("malformed decimal '" + s + "'");
            }
            mpz_class num(digits);
            mpz_class den;
            mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
            Rational r(num, den);
            r.canonicalize();
            return r;
        }
        Rational r{mpz_class(s)};
        return r;
    } catch (const std::invalid_argument&) {
        throw DomainError("malformed rational '" + s + "'");
    }
}

std::string format_rational(const Rational& r) {
    if (r.get_den() == 1) {
        return r.get_num().get_str();
    }
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

ComplexPoint::ComplexPoint(double sigma_, double t_) : sigma(sigma_), t(t_) {
    if (!std::isfinite(sigma) || !std::isfinite(t)) {
        throw DomainError("ComplexPoint requires finite components");
    }
}

const char* to_string(RegionTag tag) {
    switch (tag) {
    case RegionTag::Theorem1: return "Theorem1";
    case RegionTag::Theorem2: return "Theorem2";
    case RegionTag::Theorem3Strip: return "Theorem3Strip";
    case RegionTag::OutOfScope: return "OutOfScope";
    }
    return "?";
}

RegionTag classify_region(double sigma) {
    if (!std::isfinite(sigma)) {
        throw DomainError("classify_region requires finite sigma");
    }
    if (sigma > 2.0) return RegionTag::Theorem1;
    if (sigma > 1.5) return RegionTag::Theorem2;
    if (sigma > 1.0) return RegionTag::Theorem3Strip;
    return RegionTag::OutOfScope;
}

Tolerance::Tolerance(double abs_tol_, double rel_tol_) : abs_tol(abs_tol_), rel_tol(rel_tol_) {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
        throw DomainError("tolerances must be strictly positive");
    }
}

namespace scales {
std::optional<double> by_name(std::string_view name) {
    if (name == "sqrt2") return sqrt2;
    if (name == "sqrt3") return sqrt3;
    if (name == "sqrt5") return sqrt5;
    if (name == "golden") return golden;
    if (name == "pi") return pi;
    if (name == "e") return e;
    return std::nullopt;
}
} // namespace scales

BarnesParams BarnesParams::validate(const RawParams& raw) {
    if (raw.alpha <= 0 || raw.v <= 0 || raw.w <= 0) {
        throw NonPositiveParameter("alpha, v and w must all be > 0");
    }
    double scale = 1.0;
    if (raw.ratio_irrational) {
        if (!raw.irrational_scale.has_value()) {
            throw InvalidScale("ratio_irrational set but no irrational_scale given");
        }
        scale = *raw.irrational_scale;
        if (!(scale > 0.0) || !std::isfinite(scale)) {
            throw InvalidScale("irrational_scale must be a positive finite real");
        }
    } else if (raw.irrational_scale.has_value()) {
        throw InvalidScale("irrational_scale given without the ratio_irrational flag");
    }

    BarnesParams p;
    p.alpha_ = raw.alpha;
    p.v_ = raw.v;
    p.w_ = raw.w;
    p.alpha_.canonicalize();
    p.v_.canonicalize();
    p.w_.canonicalize();
    p.ratio_irrational_ = raw.ratio_irrational;
    p.scale_ = scale;
    p.alpha_d_ = p.alpha_.get_d();
    p.v_d_ = p.v_.get_d();
    p.w_eff_d_ = p.w_.get_d() * scale;
    if (!p.ratio_irrational_) {
        Rational ratio = p.v_ / p.w_;
        ratio.canonicalize();
        p.p_ = ratio.get_num();
        p.q_ = ratio.get_den();
        p.gap_ = p.v_ / Rational(p.p_);
        p.gap_.canonicalize();
    }
    return p;
}

const mpz_class& BarnesParams::ratio_p() const {
    if (ratio_irrational_) {
        throw DomainError("ratio p/q undefined for irrational-flagged params");
    }
    return p_;
}

const mpz_class& BarnesParams::ratio_q() const {
    if (ratio_irrational_) {
        throw DomainError("ratio p/q undefined for irrational-flagged params");
    }
    return q_;
}

const Rational& BarnesParams::lambda_gap() const {
    if (ratio_irrational_) {
        throw DomainError("lambda gap undefined for irrational-flagged params");
    }
    return gap_;
}

RawParams BarnesParams::raw() const {
    RawParams r;
    r.alpha = alpha_;
    r.v = v_;
    r.w = w_;
    r.ratio_irrational = ratio_irrational_;
    if (ratio_irrational_) {
        r.irrational_scale = scale_;
    }
    return r;
}

BarnesParams validate_params(const RawParams& raw) {
    return BarnesParams::validate(raw);
}

} // namespace barnes
