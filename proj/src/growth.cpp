#include "dimcheck/growth.hpp"

#include "dimcheck/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dimcheck {

double simpson_uniform(const double* values, std::size_t count, double h) {
    if (count < 2) return 0.0;
    std::size_t intervals = count - 1;
    if (intervals == 1) {
        return 0.5 * h * (values[0] + values[1]);
    }
    double total = 0.0;
    std::size_t even_part = intervals % 2 == 0 ? intervals : intervals - 3;
    if (even_part > 0) {
        double sum = values[0] + values[even_part];
        for (std::size_t i = 1; i < even_part; ++i) {
            sum += values[i] * (i % 2 == 1 ? 4.0 : 2.0);
        }
        total += h / 3.0 * sum;
    }
    if (intervals % 2 == 1) {
        const double* v = values + even_part;
        total += 3.0 * h / 8.0 * (v[0] + 3.0 * v[1] + 3.0 * v[2] + v[3]);
    }
    return total;
}

}  // namespace dimcheck

namespace dimcheck::growth {

namespace {

void check_finite(double v, const char* name) {
    if (!std::isfinite(v)) {
        throw std::invalid_argument(std::string(name) + " must be finite");
    }
}

Derivs derivs_raw(double k, double c, const Params& p) {
    double mpk = p.a0 * p.alpha * std::pow(k, p.alpha - 1.0);
    Derivs d;
    d.kdot = p.a0 * std::pow(k, p.alpha) - (p.n + p.delta) * k - c;
    d.cdot = c / p.theta * (mpk - (p.rho + p.n + p.delta));
    return d;
}

}  // namespace

void Params::validate() const {
    check_finite(alpha, "alpha");
    check_finite(a0, "a0");
    check_finite(rho, "rho");
    check_finite(n, "n");
    check_finite(delta, "delta");
    check_finite(theta, "theta");
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0, 1)");
    if (!(a0 > 0.0)) throw std::invalid_argument("a0 must be positive");
    if (!(rho > 0.0)) throw std::invalid_argument("rho must be positive");
    if (!(theta > 0.0)) throw std::invalid_argument("theta must be positive");
    if (delta < 0.0) throw std::invalid_argument("delta must be nonnegative");
    if (!(rho + n + delta > 0.0)) {
        throw std::invalid_argument("rho + n + delta must be positive");
    }
}

double production(double k, const Params& p) {
    if (k <= 0.0) throw DomainError("production requires k > 0");
    return p.a0 * std::pow(k, p.alpha);
}

Utility crra_utility(double c, double theta) {
    if (c <= 0.0) throw DomainError("utility requires c > 0");
    if (theta == 1.0) {
        return {std::log(c), 1.0 / c};
    }
    return {std::pow(c, 1.0 - theta) / (1.0 - theta), std::pow(c, -theta)};
}

Derivs rhs(const State& s, const Params& p) {
    if (s.k <= 0.0) throw DomainError("rhs requires k > 0");
    if (s.c < 0.0) throw DomainError("rhs requires c >= 0");
    return derivs_raw(s.k, s.c, p);
}

SteadyState steady_state(const Params& p) {
    p.validate();
    double s = p.rho + p.n + p.delta;
    double k_star = std::pow(p.alpha * p.a0 / s, 1.0 / (1.0 - p.alpha));
    double y_star = p.a0 * std::pow(k_star, p.alpha);
    double c_star = y_star - (p.n + p.delta) * k_star;
    if (!(c_star > 0.0)) throw NoSteadyStateError();
    double r_star = p.a0 * p.alpha * std::pow(k_star, p.alpha - 1.0) - p.delta;
    SteadyState ss{{k_star, c_star}, r_star};
    Derivs d = derivs_raw(k_star, c_star, p);
    double tol = 1e-10 * std::max(1.0, y_star);
    if (std::abs(d.kdot) > tol || std::abs(d.cdot) > tol) {
        throw std::logic_error("steady state failed its fixed-point check");
    }
    return ss;
}

Jacobian jacobian(const State& s, const Params& p) {
    if (s.k <= 0.0) throw DomainError("jacobian requires k > 0");
    double mpk = p.a0 * p.alpha * std::pow(s.k, p.alpha - 1.0);
    Jacobian j;
    j.dk_dk = mpk - (p.n + p.delta);
    j.dk_dc = -1.0;
    j.dc_dk = s.c / p.theta * p.a0 * p.alpha * (p.alpha - 1.0) * std::pow(s.k, p.alpha - 2.0);
    j.dc_dc = (mpk - (p.rho + p.n + p.delta)) / p.theta;
    return j;
}

namespace {

std::array<double, 2> eigenvector(const Jacobian& j, double lambda, int which) {
    std::array<double, 2> a{j.dk_dc, lambda - j.dk_dk};
    std::array<double, 2> b{lambda - j.dc_dc, j.dc_dk};
    double na = std::hypot(a[0], a[1]);
    double nb = std::hypot(b[0], b[1]);
    std::array<double, 2> v = na >= nb ? a : b;
    double n = std::max(na, nb);
    if (n == 0.0) {
        // scalar matrix: any direction is an eigenvector
        return which == 0 ? std::array<double, 2>{1.0, 0.0} : std::array<double, 2>{0.0, 1.0};
    }
    v[0] /= n;
    v[1] /= n;
    double lead = v[0] != 0.0 ? v[0] : v[1];
    if (lead < 0.0) {
        v[0] = -v[0];
        v[1] = -v[1];
    }
    return v;
}

}  // namespace

Eigen2 eigen2(const Jacobian& j) {
    Eigen2 out;
    double tr = j.trace();
    double det = j.det();
    double disc = tr * tr - 4.0 * det;
    if (disc < 0.0) {
        out.complex_pair = true;
        out.lambda1 = out.lambda2 = 0.5 * tr;
        out.imag = 0.5 * std::sqrt(-disc);
        return out;
    }
    double root = std::sqrt(disc);
    double l1, l2;
    if (root == 0.0) {
        l1 = l2 = 0.5 * tr;
    } else {
        // form the larger-magnitude root first to avoid cancellation
        double q = tr >= 0.0 ? 0.5 * (tr + root) : 0.5 * (tr - root);
        l1 = q;
        l2 = q != 0.0 ? det / q : tr - q;
        if (l1 > l2) std::swap(l1, l2);
    }
    out.lambda1 = l1;
    out.lambda2 = l2;
    out.v1 = eigenvector(j, l1, 0);
    out.v2 = eigenvector(j, l2, 1);
    return out;
}

namespace {

// RK4 with domain guards: evaluating a stage at k <= 0 means the step left
// the domain.
struct GuardedStep {
    bool ok = false;
    State next{};
};

GuardedStep guarded_step(const State& s, const Params& p, double h) {
    GuardedStep out;
    State stage = s;
    Derivs d1 = derivs_raw(stage.k, stage.c, p);
    stage = {s.k + 0.5 * h * d1.kdot, s.c + 0.5 * h * d1.cdot};
    if (stage.k <= 0.0) return out;
    Derivs d2 = derivs_raw(stage.k, stage.c, p);
    stage = {s.k + 0.5 * h * d2.kdot, s.c + 0.5 * h * d2.cdot};
    if (stage.k <= 0.0) return out;
    Derivs d3 = derivs_raw(stage.k, stage.c, p);
    stage = {s.k + h * d3.kdot, s.c + h * d3.cdot};
    if (stage.k <= 0.0) return out;
    Derivs d4 = derivs_raw(stage.k, stage.c, p);
    out.next = {s.k + h / 6.0 * (d1.kdot + 2.0 * d2.kdot + 2.0 * d3.kdot + d4.kdot),
                s.c + h / 6.0 * (d1.cdot + 2.0 * d2.cdot + 2.0 * d3.cdot + d4.cdot)};
    out.ok = true;
    return out;
}

}  // namespace

Trajectory integrate(const State& s0, const Params& p, double h, double t_max) {
    p.validate();
    if (s0.k <= 0.0) throw DomainError("initial k must be positive");
    if (s0.c < 0.0) throw DomainError("initial c must be nonnegative");
    if (!(h > 0.0)) throw std::invalid_argument("step size must be positive");
    if (!(t_max >= 0.0)) throw std::invalid_argument("t_max must be nonnegative");

    auto steps = static_cast<std::size_t>(std::llround(t_max / h));
    Trajectory traj;
    traj.h = h;
    traj.k.reserve(steps + 1);
    traj.c.reserve(steps + 1);
    traj.k.push_back(s0.k);
    traj.c.push_back(s0.c);

    State s = s0;
    for (std::size_t i = 0; i < steps; ++i) {
        GuardedStep step = guarded_step(s, p, h);
        bool exits = !step.ok || step.next.k <= 0.0 || (s.c > 0.0 && step.next.c <= 0.0);
        if (exits) {
            if (i == 0) throw StepTooLargeError();
            traj.completed = false;
            return traj;
        }
        s = step.next;
        traj.k.push_back(s.k);
        traj.c.push_back(s.c);
    }
    return traj;
}

DerivedSeries derived_series(const Trajectory& traj, const Params& p) {
    DerivedSeries out;
    out.y.reserve(traj.size());
    out.r.reserve(traj.size());
    out.w.reserve(traj.size());
    out.mu.reserve(traj.size());
    for (std::size_t i = 0; i < traj.size(); ++i) {
        double y = production(traj.k[i], p);
        out.y.push_back(y);
        out.r.push_back(p.a0 * p.alpha * std::pow(traj.k[i], p.alpha - 1.0) - p.delta);
        out.w.push_back((1.0 - p.alpha) * y / p.n);
        out.mu.push_back(crra_utility(traj.c[i], p.theta).du);
    }
    return out;
}

namespace {

struct ShotOutcome {
    bool too_high;       // consumption chosen too high: capital collapses
    double closest;      // min distance to the steady state along the shot
};

ShotOutcome shoot(double c0, double k0, const Params& p, const SteadyState& ss, double h,
                  double t_shoot) {
    double k_floor = 1e-9 * std::min(k0, ss.state.k);
    double k_cap = 10.0 * std::max(k0, ss.state.k);
    double c_floor = 1e-9 * ss.state.c;
    double c_cap = 10.0 * std::max({c0, ss.state.c, production(k0, p)});

    auto steps = static_cast<std::size_t>(std::llround(t_shoot / h));
    State s{k0, c0};
    double closest = std::hypot(s.k - ss.state.k, s.c - ss.state.c);
    for (std::size_t i = 0; i < steps; ++i) {
        GuardedStep step = guarded_step(s, p, h);
        if (!step.ok || step.next.k <= k_floor) return {true, closest};
        s = step.next;
        closest = std::min(closest, std::hypot(s.k - ss.state.k, s.c - ss.state.c));
        if (s.c >= c_cap) return {true, closest};
        if (s.c <= c_floor) return {false, closest};
        if (s.k >= k_cap) return {false, closest};
    }
    return {s.c > ss.state.c, closest};
}

}  // namespace

namespace {

// Bisection on the consumption choice at capital k, classifying every shot by
// its divergence side over the probe horizon.
double bisect_consumption(double k, const Params& p, const SteadyState& ss, double h,
                          double horizon, int& iterations) {
    double lo = 1e-9 * ss.state.c;
    double hi = production(k, p);
    ShotOutcome lo_shot = shoot(lo, k, p, ss, h, horizon);
    ShotOutcome hi_shot = shoot(hi, k, p, ss, h, horizon);
    for (int expand = 0; hi_shot.too_high == lo_shot.too_high && expand < 60; ++expand) {
        // widen until the endpoints classify to opposite sides
        if (!hi_shot.too_high) {
            hi *= 2.0;
            hi_shot = shoot(hi, k, p, ss, h, horizon);
        } else {
            lo *= 0.5;
            lo_shot = shoot(lo, k, p, ss, h, horizon);
        }
        ++iterations;
    }
    if (hi_shot.too_high == lo_shot.too_high) {
        throw ShootingFailedError(iterations, lo, hi);
    }
    if (lo_shot.too_high) std::swap(lo, hi);  // keep lo on the "too low" side

    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        ++iterations;
        if (shoot(mid, k, p, ss, h, horizon).too_high) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

SaddlePath saddle_path(const Params& p, double k0, double h, double t_shoot) {
    p.validate();
    if (k0 <= 0.0) throw DomainError("saddle path requires k0 > 0");
    if (!(h > 0.0)) throw std::invalid_argument("step size must be positive");
    SteadyState ss = steady_state(p);
    if (k0 == ss.state.k) {
        throw std::invalid_argument("k0 coincides with the steady state; nothing to shoot for");
    }

    // A single bisection pins c(0) to one ulp, but the unstable mode grows by
    // e^(lambda2 * t) and that resolution is not enough to hold the path near
    // the steady state over a long horizon. Re-anchoring the bisection every
    // segment keeps the whole trajectory on the stable arm to roughly the
    // per-segment amplification of one ulp.
    const double segment = 50.0;
    int iterations = 0;
    Trajectory traj;
    traj.h = h;
    traj.k.push_back(k0);
    traj.c.push_back(0.0);  // placeholder until the first bisection fixes c(0)

    double c0 = 0.0;
    double t_done = 0.0;
    bool first = true;
    while (t_done < t_shoot - 0.5 * h) {
        double t_left = t_shoot - t_done;
        double k_here = traj.k.back();
        double c_here = bisect_consumption(k_here, p, ss, h, t_shoot, iterations);
        if (first) {
            c0 = c_here;
            first = false;
        }
        double span = std::min(segment, t_left);
        Trajectory piece = integrate({k_here, c_here}, p, h, span);
        if (!piece.completed) {
            throw ShootingFailedError(iterations, c_here, c_here);
        }
        for (std::size_t i = 1; i < piece.size(); ++i) {
            traj.k.push_back(piece.k[i]);
            traj.c.push_back(piece.c[i]);
        }
        traj.c[traj.size() - piece.size()] = c_here;  // segment start uses the shot value
        t_done += span;
    }

    double closest = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < traj.size(); ++i) {
        closest = std::min(closest, std::hypot(traj.k[i] - ss.state.k, traj.c[i] - ss.state.c));
    }
    const double ball = 1e-6;
    if (!(closest <= ball)) {
        throw ShootingFailedError(iterations, c0, c0);
    }
    return {std::move(traj), c0, iterations, closest};
}

Welfare discounted_utility(const Trajectory& traj, const Params& p) {
    if (traj.size() < 1) throw std::invalid_argument("empty trajectory");
    for (double c : traj.c) {
        if (c <= 0.0) throw DomainError("welfare requires c > 0 throughout");
    }
    std::vector<double> g(traj.size());
    for (std::size_t i = 0; i < traj.size(); ++i) {
        g[i] = crra_utility(traj.c[i], p.theta).u * std::exp(-p.rho * traj.t(i));
    }
    double quad = simpson_uniform(g.data(), g.size(), traj.h);
    double t_end = traj.t(traj.size() - 1);
    double tail = crra_utility(traj.c.back(), p.theta).u * std::exp(-p.rho * t_end) / p.rho;
    return {quad + tail, tail};
}

EulerResiduals euler_residual(const Trajectory& traj, const Params& p) {
    if (traj.size() < 3) throw GridTooShortError();
    double r1 = 0.0;
    double r2 = 0.0;
    for (std::size_t i = 1; i + 1 < traj.size(); ++i) {
        double mu_prev = crra_utility(traj.c[i - 1], p.theta).du;
        double mu_here = crra_utility(traj.c[i], p.theta).du;
        double mu_next = crra_utility(traj.c[i + 1], p.theta).du;
        double mu_dot = (mu_next - mu_prev) / (2.0 * traj.h);
        double mpk = p.a0 * p.alpha * std::pow(traj.k[i], p.alpha - 1.0);
        r1 = std::max(r1, std::abs(mu_dot - mu_here * (p.rho + p.n + p.delta - mpk)));

        double k_dot = (traj.k[i + 1] - traj.k[i - 1]) / (2.0 * traj.h);
        Derivs d = rhs(traj.state(i), p);
        r2 = std::max(r2, std::abs(k_dot - d.kdot));
    }
    return {r1, r2};
}

double decomposition_residual(const std::vector<double>& r, const std::vector<double>& w,
                              const std::vector<double>& k, double n, double h) {
    if (r.size() != w.size() || r.size() != k.size()) {
        throw std::invalid_argument("series lengths differ");
    }
    if (r.size() < 3) throw GridTooShortError();
    if (!(h > 0.0)) throw std::invalid_argument("step size must be positive");

    auto rate = [h](const std::vector<double>& s, std::size_t i) {
        return (s[i + 1] - s[i - 1]) / (2.0 * h) / s[i];
    };
    std::vector<double> y(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        y[i] = r[i] * k[i] + w[i] * n;
        if (y[i] <= 0.0) throw DomainError("income series must stay positive");
    }
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < r.size(); ++i) {
        double beta = r[i] * k[i] / y[i];
        double lhs = rate(y, i);
        double rhs_v = beta * rate(r, i) + beta * rate(k, i) + (1.0 - beta) * rate(w, i);
        worst = std::max(worst, std::abs(lhs - rhs_v));
    }
    return worst;
}

PhaseGrid phase_grid(const Params& p, double k_min, double k_max, double c_min, double c_max,
                     std::size_t nk, std::size_t nc) {
    p.validate();
    if (!(k_min > 0.0)) throw DomainError("k range must be positive");
    if (c_min < 0.0) throw DomainError("c range must be nonnegative");
    if (!(k_max > k_min) || !(c_max > c_min)) throw DomainError("ranges must have positive width");
    if (nk < 2 || nc < 2) throw std::invalid_argument("grid needs at least 2 points per axis");

    PhaseGrid grid;
    grid.field.reserve(nk * nc);
    double dk = (k_max - k_min) / static_cast<double>(nk - 1);
    double dc = (c_max - c_min) / static_cast<double>(nc - 1);
    for (std::size_t i = 0; i < nk; ++i) {
        double k = k_min + dk * static_cast<double>(i);
        for (std::size_t j = 0; j < nc; ++j) {
            double c = c_min + dc * static_cast<double>(j);
            Derivs d = derivs_raw(k, c, p);
            grid.field.push_back({k, c, d.kdot, d.cdot});
        }
    }
    for (std::size_t i = 0; i < nk; ++i) {
        double k = k_min + dk * static_cast<double>(i);
        grid.nullcline_k.emplace_back(k, production(k, p) - (p.n + p.delta) * k);
    }
    SteadyState ss = steady_state(p);
    for (std::size_t j = 0; j < nc; ++j) {
        grid.nullcline_c.emplace_back(ss.state.k, c_min + dc * static_cast<double>(j));
    }
    return grid;
}

std::string symbolic_model() {
    return "dims QK QP U T\n"
           "var k : QK/QP\n"
           "var c : QK/(QP*T)\n"
           "var y : QK/(QP*T)\n"
           "var mu : U/QK\n"
           "var a0 : infer\n"
           "param alpha : 1 = 1/3\n"
           "param alpha_m1 : 1 = -2/3\n"
           "param rho : 1/T\n"
           "param n : 1/T\n"
           "param delta : 1/T\n"
           "param theta : 1\n"
           "eq production_fn: y = a0*k^alpha\n"
           "eq capital_accumulation: der(k) = a0*k^alpha - (n + delta)*k - c\n"
           "eq consumption_growth: der(c) = (c/theta)*(alpha*a0*k^alpha_m1 - (rho + n + delta))\n"
           "eq euler_costate: der(mu) = mu*(rho + n + delta - alpha*a0*k^alpha_m1)\n";
}

}  // namespace dimcheck::growth
