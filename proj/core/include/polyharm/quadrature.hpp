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

#ifndef POLYHARM_QUADRATURE_HPP
#define POLYHARM_QUADRATURE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "polyharm/geometry.hpp"

namespace polyharm {

/// Controls for the deterministic integration engines.  Output depends only
/// on the spec and the inputs; there is no randomized component (seed is
/// reserved for future stochastic fallbacks and for report bookkeeping).
struct QuadratureSpec {
    double target_rel_error = 1e-8;
    /// Maximum number of refinement rounds before BudgetExceededError.
    int max_subdivisions = 8;
    /// Fraction of the domain diameter forming the dyadically refined core
    /// around a declared singularity.
    double singularity_split_radius = 0.1;
    std::uint64_t seed = 0;
    /// When the integrand is rotationally symmetric about this axis, the
    /// angular rule aligns its polar direction with it and the remaining
    /// angles integrate exactly at minimal resolution.  For integrands
    /// without that symmetry leave it unset.
    std::optional<Point> symmetry_axis{};
};

struct QuadratureResult {
    double value = 0.0;
    /// Difference between the two finest refinement levels.
    double error_estimate = 0.0;
    int levels_used = 0;
};

/// Quadrature rule on the sphere S^{N-1}: unit directions with weights
/// summing to the exact sphere area.  Product of Gauss-Legendre polar
/// angles and an equispaced azimuth; each angular level is normalized so
/// its weight integral is the exact Wallis value, which makes constants
/// (and functions symmetric about the polar axis) integrate exactly.
struct SphereRule {
    std::vector<Point> directions;
    std::vector<double> weights;
};

SphereRule make_sphere_rule(int dim, int polar_order, int minor_order,
                            int azimuth_order);
/// Rule rotated so its polar axis is the given unit vector.
SphereRule make_sphere_rule_with_axis(int dim, int polar_order, int minor_order,
                                      int azimuth_order, const Point& axis);

/// Gauss-Legendre nodes/weights on [-1, 1] (cached).
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

/// Volume integral over a finite ball (possibly a shifted one).  The rule
/// integrates in spherical coordinates centered at singular_at when given
/// (so integrands blowing up like |y-x|^{2m-N} there become smooth along
/// rays), else at the ball center.  Refines until target_rel_error or
/// max_subdivisions rounds, then throws BudgetExceededError.
QuadratureResult integrate_ball(const Field& f, int dim, const BallGeometry& geom,
                                const QuadratureSpec& spec,
                                const std::optional<Point>& singular_at = std::nullopt);

/// Validity range for a spherical-cap integral on the shifted sphere
/// \partial B_R^+: the slice a <= y_1 <= b with 0 <= a <= b <= 2R.
struct CapRange {
    double a;
    double b;
    double R;
};

/// \oint_{B(a,b)} |x-y|^{-N} ds_y over the cap {y in \partial B_R^+ :
/// a <= y_1 <= b} for an axis point x = (x_1, 0, ..., 0) with
/// 0 < x_1 <= R/2.  Uses the explicit parameterization of the cap by
/// (y_1, angles): the Gram factor is R (2R y_1 - y_1^2)^{(N-3)/2} times the
/// product-of-sines angular density (whose integral is the exact sphere
/// area |S^{N-2}|), and |x-y|^2 = x_1^2 + 2R y_1 - 2 x_1 y_1 on the cap.
/// For N = 2, the two arc branches contribute the same factor |S^0| = 2.
double cap_surface_integral(const CapRange& range, const Point& x,
                            const QuadratureSpec& spec);

/// Surface integral of f over the sphere of the given center and radius.
QuadratureResult sphere_integral(const Field& f, const Point& center, double r,
                                 const QuadratureSpec& spec);

/// Spherical average (1/(r^{N-1} omega_N)) \oint_{\partial B_r(0)} w ds with
/// omega_N the unit-sphere area, so the average of a constant is that
/// constant; r = 0 returns w(0).
double spherical_average(const Field& w, int dim, double r,
                         const QuadratureSpec& spec);

/// Least-squares slope of log(values) against log(abscissae); used for the
/// power-law checks throughout the suite.
double fit_loglog_slope(const std::vector<double>& abscissae,
                        const std::vector<double>& values);

}  // namespace polyharm

#endif
