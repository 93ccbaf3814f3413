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

#ifndef POLYHARM_ODE1D_HPP
#define POLYHARM_ODE1D_HPP

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "polyharm/errors.hpp"

namespace polyharm {

/// Nonlinearity of the one-dimensional reduction (-1)^m u^(2m) = f(u),
/// together with its antiderivative F(s) = int_0^s f.
struct Nonlinearity1D {
    std::function<double(double)> f;
    std::function<double(double)> F;
};

/// f(s) = hbar s^q for s >= 0 and kbar |s|^q for s < 0, with the matching
/// antiderivative.  The default extension below zero uses hbar = kbar = 1.
Nonlinearity1D power_nonlinearity(double q, double hbar = 1.0, double kbar = 1.0);

/// F' = f checked by central differences at `samples` points of [lo, hi].
bool validate_nonlinearity(const Nonlinearity1D& nl, double lo, double hi,
                           int samples = 100, double tol = 1e-6);

/// State (u, u', ..., u^(2m-1)) at time t with the cached invariant value.
struct ODEState {
    double t = 0.0;
    std::vector<double> derivs;
    double invariant = 0.0;
};

/// First integral of the reduction:
///   H = sum_{i=1}^{m-1} (-1)^i u^(i) u^(2m-i)
///       + (-1)^m ( (u^(m))^2 / 2 + F(u) ).
double first_integral(const std::vector<double>& derivs, const Nonlinearity1D& nl,
                      int m);

struct Trajectory {
    std::vector<ODEState> states;
    long accepted = 0;
    long rejected = 0;
    double invariant_drift = 0.0;  // max |H - H(0)| along the trajectory
};

struct IntegrateOptions {
    double blowup_cap = 1e6;
    long max_steps = 2000000;
};

/// Adaptive embedded Dormand-Prince 5(4) integration of the first-order
/// system for (-1)^m u^(2m) = f(u), with the invariant drift as an
/// auxiliary step-rejection criterion.  Throws BlowUpError (with the escape
/// time) when |u| exceeds blowup_cap and StepFailureError when the step
/// size underflows.
Trajectory integrate(const ODEState& initial, const Nonlinearity1D& nl, int m,
                     double t_end, double tol, const IntegrateOptions& opts = {});

/// CSV columns: t,u0,...,u{2m-1},H
void write_trajectory_csv(std::ostream& out, const Trajectory& traj);

enum class ScanVerdict { StaysBounded, BlowsUp, Undetermined };
const char* to_string(ScanVerdict v);

struct ScanResult {
    std::vector<double> free_derivs;  // u^(m)(0) .. u^(2m-1)(0)
    ScanVerdict verdict = ScanVerdict::Undetermined;
    double escape_time = 0.0;      // for BlowsUp
    double invariant_drift = 0.0;  // for StaysBounded
};

/// Integrates from Dirichlet data (u(0) = ... = u^(m-1)(0) = 0) for every
/// tuple of free initial derivatives and classifies the trajectory against
/// the horizon [0, t_end] and the bound cap.
std::vector<ScanResult> bounded_solution_scan(
    const Nonlinearity1D& nl, int m,
    const std::vector<std::vector<double>>& free_deriv_grid, double t_end,
    double bound_cap, double tol = 1e-10);

/// JSON verdict map; records the horizon, cap, and f-extension convention.
std::string scan_to_json(const std::vector<ScanResult>& results, int m,
                         double t_end, double bound_cap,
                         const std::string& extension = "f(s)=|s|^q");

}  // namespace polyharm

#endif
