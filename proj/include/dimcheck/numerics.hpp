#pragma once

#include <array>
#include <cstddef>

namespace dimcheck {

/// One classical fourth-order Runge-Kutta step for dy/dt = f(t, y).
template <std::size_t N, typename F>
std::array<double, N> rk4_step(F&& f, double t, const std::array<double, N>& y, double h) {
    std::array<double, N> k1 = f(t, y);
    std::array<double, N> mid{};
    for (std::size_t i = 0; i < N; ++i) mid[i] = y[i] + 0.5 * h * k1[i];
    std::array<double, N> k2 = f(t + 0.5 * h, mid);
    for (std::size_t i = 0; i < N; ++i) mid[i] = y[i] + 0.5 * h * k2[i];
    std::array<double, N> k3 = f(t + 0.5 * h, mid);
    for (std::size_t i = 0; i < N; ++i) mid[i] = y[i] + h * k3[i];
    std::array<double, N> k4 = f(t + h, mid);
    std::array<double, N> out{};
    for (std::size_t i = 0; i < N; ++i) {
        out[i] = y[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    return out;
}

/// Composite Simpson rule on a uniform grid (trapezoid fallback for a single
/// interval, 3/8 rule finishing an odd interval count).
double simpson_uniform(const double* values, std::size_t count, double h);

}  // namespace dimcheck
