#pragma once

#include <array>
#include <cstddef>

namespace barnes {

// Fixed Gauss-Legendre rules on [-1, 1]. Hard-coded nodes keep panel
// placement bit-reproducible across platforms and runs.
struct GaussRule {
    const double* nodes;
    const double* weights;
    int order;
};

namespace detail {
// Abramowitz & Stegun 25.4.29/.30, full binary64 precision.
inline constexpr std::array<double, 6> kGl6Nodes = {
    -0.93246951420315202781, -0.66120938646626451366, -0.23861918608319690863,
    0.23861918608319690863, 0.66120938646626451366, 0.93246951420315202781};
inline constexpr std::array<double, 6> kGl6Weights = {
    0.17132449237917034504, 0.36076157304813860757, 0.46791393457269104739,
    0.46791393457269104739, 0.36076157304813860757, 0.17132449237917034504};

inline constexpr std::array<double, 8> kGl8Nodes = {
    -0.96028985649753623168, -0.79666647741362673959, -0.52553240991632898582,
    -0.18343464249564980494, 0.18343464249564980494, 0.52553240991632898582,
    0.79666647741362673959, 0.96028985649753623168};
inline constexpr std::array<double, 8> kGl8Weights = {
    0.10122853629037625915, 0.22238103445337447054, 0.31370664587788728734,
    0.36268378337836198297, 0.36268378337836198297, 0.31370664587788728734,
    0.22238103445337447054, 0.10122853629037625915};
} // namespace detail

inline GaussRule gauss_legendre_6() {
    return {detail::kGl6Nodes.data(), detail::kGl6Weights.data(), 6};
}

inline GaussRule gauss_legendre_8() {
    return {detail::kGl8Nodes.data(), detail::kGl8Weights.data(), 8};
}

// Integrates f over [a, b] with one panel of the given rule.
template <typename F>
double integrate_panel(const GaussRule& rule, double a, double b, F&& f) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double acc = 0.0;
    for (int i = 0; i < rule.order; ++i) {
        acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
    }
    return acc * half;
}

} // namespace barnes
