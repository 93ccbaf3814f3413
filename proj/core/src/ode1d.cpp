// Copyright (c) 2026 The polyharm authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "polyharm/ode1d.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace polyharm {

Nonlinearity1D power_nonlinearity(double q, double hbar, double kbar) {
    if (!(q > 1.0)) throw std::invalid_argument("power_nonlinearity: q > 1 required");
    Nonlinearity1D nl;
    nl.f = [q, hbar, kbar](double s) {
        if (s == 0.0) return 0.0;
        return s > 0.0 ? hbar * std::pow(s, q) : kbar * std::pow(-s, q);
    };
    nl.F = [q, hbar, kbar](double s) {
        if (s == 0.0) return 0.0;
        const double p = q + 1.0;
        return s > 0.0 ? hbar * std::pow(s, p) / p : kbar * std::pow(-s, p) / p;
    };
    return nl;
}

bool validate_nonlinearity(const Nonlinearity1D& nl, double lo, double hi,
                           int samples, double tol) {
    const double h = 1e-5 * std::max(1.0, hi - lo);
    for (int i = 0; i < samples; ++i) {
        const double s = lo + (hi - lo) * (i + 0.5) / samples;
        const double fd = (nl.F(s + h) - nl.F(s - h)) / (2.0 * h);
        if (std::abs(fd - nl.f(s)) > tol * (1.0 + std::abs(nl.f(s)))) return false;
    }
    return true;
}

double first_integral(const std::vector<double>& derivs, const Nonlinearity1D& nl,
                      int m) {
    if (static_cast<int>(derivs.size()) != 2 * m)
        throw std::invalid_argument("first_integral: need derivatives u^(0..2m-1)");
    double h = 0.0;
    for (int i = 1; i <= m - 1; ++i) {
        const double sign = (i % 2 == 0) ? 1.0 : -1.0;
        h += sign * derivs[static_cast<std::size_t>(i)] *
             derivs[static_cast<std::size_t>(2 * m - i)];
    }
    const double sm = (m % 2 == 0) ? 1.0 : -1.0;
    const double um = derivs[static_cast<std::size_t>(m)];
    h += sm * (0.5 * um * um + nl.F(derivs[0]));
    return h;
}

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double a21 = 1.0 / 5.0;
constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0,
                 a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0,
                 a63 = 46732.0 / 5247.0, a64 = 49.0 / 176.0,
                 a65 = -5103.0 / 18656.0;
constexpr double b1 = 35.0 / 384.0, b3 = 500.0 / 1113.0, b4 = 125.0 / 192.0,
                 b5 = -2187.0 / 6784.0, b6 = 11.0 / 84.0;
constexpr double e1 = b1 - 5179.0 / 57600.0, e3 = b3 - 7571.0 / 16695.0,
                 e4 = b4 - 393.0 / 640.0, e5 = b5 + 92097.0 / 339200.0,
                 e6 = b6 - 187.0 / 2100.0, e7 = -1.0 / 40.0;

using Vec = std::vector<double>;

void rhs(const Vec& y, int m, const Nonlinearity1D& nl, Vec& dy) {
    const std::size_t n = y.size();
    for (std::size_t i = 0; i + 1 < n; ++i) dy[i] = y[i + 1];
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    dy[n - 1] = sign * nl.f(y[0]);
}

}  // namespace

Trajectory integrate(const ODEState& initial, const Nonlinearity1D& nl, int m,
                     double t_end, double tol, const IntegrateOptions& opts) {
    if (m < 1) throw std::invalid_argument("integrate: m >= 1 required");
    if (static_cast<int>(initial.derivs.size()) != 2 * m)
        throw std::invalid_argument("integrate: state must carry 2m derivatives");
    if (!(tol > 0.0)) throw std::invalid_argument("integrate: tol > 0 required");

    const std::size_t n = initial.derivs.size();
    const double dir = (t_end >= initial.t) ? 1.0 : -1.0;
    const double span = std::abs(t_end - initial.t);

    Trajectory traj;
    Vec y = initial.derivs;
    double t = initial.t;
    const double h0_inv = first_integral(y, nl, m);
    traj.states.push_back({t, y, h0_inv});

    if (span == 0.0) return traj;

    double h = dir * std::min(0.01 * std::max(span, 1.0), span);
    Vec k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), yt(n), y5(n);
    double h_prev_inv = h0_inv;

    for (long step = 0; step < opts.max_steps; ++step) {
        if ((t - t_end) * dir >= 0.0) break;
        if (std::abs(h) > std::abs(t_end - t)) h = t_end - t;
        if (std::abs(h) < 1e-14 * std::max(1.0, std::abs(t)))
            throw StepFailureError("integrate: step size underflow");

        rhs(y, m, nl, k1);
        for (std::size_t i = 0; i < n; ++i) yt[i] = y[i] + h * a21 * k1[i];
        rhs(yt, m, nl, k2);
        for (std::size_t i = 0; i < n; ++i)
            yt[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        rhs(yt, m, nl, k3);
        for (std::size_t i = 0; i < n; ++i)
            yt[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        rhs(yt, m, nl, k4);
        for (std::size_t i = 0; i < n; ++i)
            yt[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        rhs(yt, m, nl, k5);
        for (std::size_t i = 0; i < n; ++i)
            yt[i] = y[i] +
                    h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] +
                         a65 * k5[i]);
        rhs(yt, m, nl, k6);
        for (std::size_t i = 0; i < n; ++i)
            y5[i] = y[i] +
                    h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
        rhs(y5, m, nl, k7);

        double err = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                                  e6 * k6[i] + e7 * k7[i]);
            const double sc = tol + tol * std::max(std::abs(y[i]), std::abs(y5[i]));
            err += (e / sc) * (e / sc);
        }
        err = std::sqrt(err / static_cast<double>(n));

        bool accept = err <= 1.0;
        double h_new_inv = 0.0;
        if (accept) {
            h_new_inv = first_integral(y5, nl, m);
            // Invariant-drift guard: a formally accepted step that moves H
            // beyond the local budget is rejected like a large-error step.
            const double budget = std::max(200.0 * tol * (1.0 + std::abs(h_prev_inv)), 5e-14);
            if (std::abs(h_new_inv - h_prev_inv) > budget &&
                std::abs(h) > 64e-14 * std::max(1.0, std::abs(t))) {
                accept = false;
                err = std::max(err, 4.0);
            }
        }

        if (accept) {
            t += h;
            y = y5;
            h_prev_inv = h_new_inv;
            traj.accepted++;
            traj.states.push_back({t, y, h_new_inv});
            traj.invariant_drift =
                std::max(traj.invariant_drift, std::abs(h_new_inv - h0_inv));
            if (std::abs(y[0]) > opts.blowup_cap)
                throw BlowUpError(t, "integrate: |u| exceeded the blow-up cap");
            for (double c : y)
                if (!std::isfinite(c))
                    throw BlowUpError(t, "integrate: state became non-finite");
        } else {
            traj.rejected++;
        }
        const double factor = std::clamp(0.9 * std::pow(std::max(err, 1e-10), -0.2), 0.2, 5.0);
        h *= factor;
    }

    if ((t - t_end) * dir < 0.0)
        throw StepFailureError("integrate: step budget exhausted before t_end");
    return traj;
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj) {
    if (traj.states.empty()) return;
    const std::size_t n = traj.states.front().derivs.size();
    out << "t";
    for (std::size_t i = 0; i < n; ++i) out << ",u" << i;
    out << ",H\n";
    out.precision(17);
    for (const auto& st : traj.states) {
        out << st.t;
        for (double d : st.derivs) out << "," << d;
        out << "," << st.invariant << "\n";
    }
}

const char* to_string(ScanVerdict v) {
    switch (v) {
        case ScanVerdict::StaysBounded: return "stays_bounded";
        case ScanVerdict::BlowsUp: return "blows_up";
        case ScanVerdict::Undetermined: return "undetermined";
    }
    return "unknown";
}

std::vector<ScanResult> bounded_solution_scan(
    const Nonlinearity1D& nl, int m,
    const std::vector<std::vector<double>>& free_deriv_grid, double t_end,
    double bound_cap, double tol) {
    std::vector<ScanResult> results;
    results.reserve(free_deriv_grid.size());
    for (const auto& free : free_deriv_grid) {
        if (static_cast<int>(free.size()) != m)
            throw std::invalid_argument("bounded_solution_scan: need m free derivatives");
        ODEState init;
        init.t = 0.0;
        init.derivs.assign(static_cast<std::size_t>(2 * m), 0.0);
        for (int i = 0; i < m; ++i) init.derivs[static_cast<std::size_t>(m + i)] = free[static_cast<std::size_t>(i)];
        init.invariant = first_integral(init.derivs, nl, m);

        ScanResult r;
        r.free_derivs = free;
        try {
            IntegrateOptions opts;
            opts.blowup_cap = bound_cap;
            const Trajectory traj = integrate(init, nl, m, t_end, tol, opts);
            r.verdict = ScanVerdict::StaysBounded;
            r.invariant_drift = traj.invariant_drift;
        } catch (const BlowUpError& e) {
            r.verdict = ScanVerdict::BlowsUp;
            r.escape_time = e.escape_time;
        } catch (const StepFailureError&) {
            r.verdict = ScanVerdict::Undetermined;
        }
        results.push_back(std::move(r));
    }
    return results;
}

std::string scan_to_json(const std::vector<ScanResult>& results, int m,
                         double t_end, double bound_cap,
                         const std::string& extension) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["m"] = m;
    j["t_end"] = t_end;
    j["bound_cap"] = bound_cap;
    j["f_extension"] = extension;
    j["verdicts"] = nlohmann::ordered_json::array();
    for (const auto& r : results) {
        nlohmann::ordered_json item;
        item["free_derivs"] = r.free_derivs;
        item["verdict"] = to_string(r.verdict);
        if (r.verdict == ScanVerdict::BlowsUp) item["escape_time"] = r.escape_time;
        if (r.verdict == ScanVerdict::StaysBounded)
            item["invariant_drift"] = r.invariant_drift;
        j["verdicts"].push_back(item);
    }
    return j.dump(2);
}

}  // namespace polyharm
