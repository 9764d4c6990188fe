#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace dimcheck::growth {

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct NoSteadyStateError : std::runtime_error {
    NoSteadyStateError() : std::runtime_error("no steady state: c* would be nonpositive") {}
};

struct StepTooLargeError : std::runtime_error {
    StepTooLargeError() : std::runtime_error("first integration step leaves the domain") {}
};

struct ShootingFailedError : std::runtime_error {
    ShootingFailedError(int iterations_, double lo, double hi)
        : std::runtime_error("saddle-path shooting failed after " + std::to_string(iterations_) +
                             " iterations (bracket [" + std::to_string(lo) + ", " +
                             std::to_string(hi) + "])"),
          iterations(iterations_),
          bracket_lo(lo),
          bracket_hi(hi) {}

    int iterations;
    double bracket_lo;
    double bracket_hi;
};

struct GridTooShortError : std::runtime_error {
    GridTooShortError() : std::runtime_error("grid too short: need at least 3 points") {}
};

/// Model parameters. alpha is the capital share, a0 the productivity level,
/// rho the discount rate, n the population growth rate, delta the
/// depreciation rate and theta the (constant) relative curvature of utility.
struct Params {
    double alpha = 1.0 / 3.0;
    double a0 = 1.0;
    double rho = 0.05;
    double n = 0.01;
    double delta = 0.05;
    double theta = 2.0;

    /// Throws std::invalid_argument naming the violated bound.
    void validate() const;
};

/// Point in the (k, c) phase space: capital and consumption per capita.
struct State {
    double k = 0.0;
    double c = 0.0;
};

struct Derivs {
    double kdot = 0.0;
    double cdot = 0.0;
};

/// y = a0 * k^alpha.
double production(double k, const Params& p);

struct Utility {
    double u;
    double du;  // marginal utility
};

/// Isoelastic utility: u = c^(1-theta)/(1-theta), u' = c^-theta; the
/// theta == 1 limit is u = ln c, u' = 1/c.
Utility crra_utility(double c, double theta);

/// Right-hand side of the (k, c) dynamics:
///   kdot = a0 k^alpha - (n + delta) k - c
///   cdot = (c / theta) (a0 alpha k^(alpha-1) - (rho + n + delta))
Derivs rhs(const State& s, const Params& p);

struct SteadyState {
    State state;
    double r_star;  // net yield a0 alpha k*^(alpha-1) - delta == rho + n
};

/// Closed-form fixed point of rhs; throws NoSteadyStateError when
/// consumption there would be nonpositive.
SteadyState steady_state(const Params& p);

/// Analytic 2x2 Jacobian of rhs at a state.
struct Jacobian {
    double dk_dk, dk_dc;
    double dc_dk, dc_dc;

    double trace() const { return dk_dk + dc_dc; }
    double det() const { return dk_dk * dc_dc - dk_dc * dc_dk; }
};

Jacobian jacobian(const State& s, const Params& p);

/// Eigen decomposition of a 2x2 real matrix. A complex pair is a typed
/// result, not a failure. Real eigenvalues are ordered lambda1 <= lambda2 and
/// eigenvectors are unit length with their first nonzero component positive.
struct Eigen2 {
    bool complex_pair = false;
    double lambda1 = 0.0, lambda2 = 0.0;  // real parts when complex_pair
    double imag = 0.0;                    // +/- imaginary part when complex_pair
    std::array<double, 2> v1{}, v2{};     // only meaningful for real pairs
};

Eigen2 eigen2(const Jacobian& j);

/// Fixed-step RK4 trajectory on a uniform grid t0 + i*h. Integration halts
/// early (completed == false) when k or c would cross out of the domain; the
/// stored points all remain valid.
struct Trajectory {
    double t0 = 0.0;
    double h = 0.0;
    std::vector<double> k;
    std::vector<double> c;
    bool completed = true;

    std::size_t size() const { return k.size(); }
    double t(std::size_t i) const { return t0 + h * static_cast<double>(i); }
    State state(std::size_t i) const { return {k[i], c[i]}; }
};

/// Throws StepTooLargeError when even the first step cannot be taken.
Trajectory integrate(const State& s0, const Params& p, double h, double t_max);

/// Series derived pointwise from a trajectory: output y, yield rate r, labour
/// price w and the shadow price mu = u'(c).
struct DerivedSeries {
    std::vector<double> y;
    std::vector<double> r;
    std::vector<double> w;
    std::vector<double> mu;
};

DerivedSeries derived_series(const Trajectory& traj, const Params& p);

struct SaddlePath {
    Trajectory trajectory;
    double c0;          // consumption the shooting selected at t = 0
    int iterations;     // bisection steps used
    double closest;     // min distance to the steady state along the path
};

/// Bisection shooting on c(0): classify each shot by which side of the
/// stable arm it diverges to, shrink the bracket to machine precision, and
/// return the shot whose path reaches the steady-state ball.
SaddlePath saddle_path(const Params& p, double k0, double h = 0.01, double t_shoot = 200.0);

/// Present value of utility along a trajectory: composite Simpson quadrature
/// over the grid plus the closed-form constant-consumption tail for the
/// truncated horizon. `value` includes the tail; `tail` reports it alone.
struct Welfare {
    double value;
    double tail;
};

Welfare discounted_utility(const Trajectory& traj, const Params& p);

/// Max residuals of the necessary conditions along a trajectory, derivatives
/// taken by central differences: R1 for the costate law
/// mudot = mu (rho + n + delta - a0 alpha k^(alpha-1)) with mu = u'(c), and
/// R2 for kdot against the capital accumulation right-hand side.
struct EulerResiduals {
    double r1;
    double r2;
};

EulerResiduals euler_residual(const Trajectory& traj, const Params& p);

/// Max gap of the growth-decomposition identity
///   ydot/y = beta rdot/r + beta kdot/k + (1-beta) wdot/w,  beta = r k / y
/// on series with y = r k + w n, all rates by central differences.
double decomposition_residual(const std::vector<double>& r, const std::vector<double>& w,
                              const std::vector<double>& k, double n, double h);

/// rhs sampled on a rectangular grid plus both nullclines:
/// kdot = 0 along c = a0 k^alpha - (n + delta) k, cdot = 0 along k = k*.
struct PhaseGrid {
    struct FieldPoint {
        double k, c, kdot, cdot;
    };
    std::vector<FieldPoint> field;                          // row-major, k outer
    std::vector<std::pair<double, double>> nullcline_k;     // (k, c) with kdot = 0
    std::vector<std::pair<double, double>> nullcline_c;     // (k, c) with cdot = 0
};

PhaseGrid phase_grid(const Params& p, double k_min, double k_max, double c_min, double c_max,
                     std::size_t nk, std::size_t nc);

/// The dynamic system rendered as model-file text, so the checker can certify
/// the homogeneity of the very equations this module integrates.
std::string symbolic_model();

}  // namespace dimcheck::growth
