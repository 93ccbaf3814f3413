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

#include "polyharm/conformal.hpp"

#include <cmath>
#include <utility>

namespace polyharm {

namespace {

// |y + e1|^2 with the pole guard.
double pole_distance_sq(const Point& y) {
    double s = (y[0] + 1.0) * (y[0] + 1.0);
    for (std::size_t i = 1; i < y.size(); ++i) s += y[i] * y[i];
    return s;
}

double checked_pole_distance_sq(const Point& y) {
    const double s = pole_distance_sq(y);
    if (s < ConformalMap::kPoleRadius * ConformalMap::kPoleRadius)
        throw PoleSingularityError("conformal map evaluated at the pole -e1");
    return s;
}

}  // namespace

Point ConformalMap::map(const Point& y) const {
    const double s = checked_pole_distance_sq(y);
    Point x(y.size());
    // First coordinate via 2(y_1+1) - s = 1 - |y|^2, which avoids the
    // cancellation of the direct form near the boundary sphere.
    x[0] = one_minus_norm_sq(y) / s;
    for (std::size_t i = 1; i < y.size(); ++i) x[i] = 2.0 * y[i] / s;
    return x;
}

Point ConformalMap::inverse(const Point& x) const {
    // phi is an involution.
    return map(x);
}

double ConformalMap::jacobian_det(const Point& y) const {
    const double s = checked_pole_distance_sq(y);
    const int n = static_cast<int>(y.size());
    return std::pow(2.0, n) / std::pow(s, n);
}

Field ConformalMap::pullback_solution(Field u) const {
    const double power = 2.0 * params_.order() - params_.dim();
    ConformalMap self = *this;
    return [self, power, u = std::move(u)](const Point& x) {
        const double s = checked_pole_distance_sq(x);
        return std::pow(s, 0.5 * power) * u(self.map(x));
    };
}

double SemilinearWeight::weight(const Point& x) const {
    const double s = checked_pole_distance_sq(x);
    return std::pow(2.0, 2.0 * params_.order()) * std::pow(s, -0.5 * params_.alpha());
}

double SemilinearWeight::operator()(const Point& x, double t) const {
    if (t < 0.0)
        throw std::invalid_argument("SemilinearWeight: t >= 0 required");
    if (t == 0.0) return 0.0;
    return weight(x) * std::pow(t, params_.exponent());
}

double green_covariance_residual(const KernelParams& params, const Point& x,
                                 const Point& y) {
    const ConformalMap map(params);
    const Point X = map.map(x);
    const Point Y = map.map(y);
    const double lhs = green(params, BallGeometry::half_space(), X, Y);
    const double factor = std::pow(
        4.0 / (pole_distance_sq(x) * pole_distance_sq(y)),
        0.5 * (2.0 * params.order() - params.dim()));
    const double rhs = factor * green(params, BallGeometry::unit_ball(), x, y);
    return lhs - rhs;
}

}  // namespace polyharm
