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

#ifndef POLYHARM_GEOMETRY_HPP
#define POLYHARM_GEOMETRY_HPP

#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "polyharm/errors.hpp"

namespace polyharm {

/// Coordinate vector in R^N.
using Point = std::vector<double>;

/// Scalar field over R^N.
using Field = std::function<double(const Point&)>;

double dot(const Point& a, const Point& b);
double norm_sq(const Point& a);
double norm(const Point& a);
double dist_sq(const Point& a, const Point& b);
double dist(const Point& a, const Point& b);

/// 1 - |a|^2, computed so the rounding is shared by every caller that feeds
/// the same point into a psi-type quotient.
double one_minus_norm_sq(const Point& a);

Point add(const Point& a, const Point& b);
Point sub(const Point& a, const Point& b);
Point scale(double s, const Point& a);
/// a + s*b
Point axpy(const Point& a, double s, const Point& b);
Point unit_vector(int dim, int axis);

/// Volume of the unit ball in R^N.
double unit_ball_volume(int dim);
/// Area of the unit sphere S^{N-1} in R^N.
double unit_sphere_area(int dim);
/// Wallis integral of sin^k over [0, pi].
double sin_power_integral(int k);

/// Domain selector for the kernel family: a centered ball B_R, the shifted
/// ball B_R^+ tangent to {x_1 = 0} at the origin, or the half-space limit
/// {x_1 > 0}.
class BallGeometry {
  public:
    enum class Kind { Ball, ShiftedBall, HalfSpace };

    static BallGeometry unit_ball() { return BallGeometry(Kind::Ball, 1.0); }
    static BallGeometry ball(double radius);
    static BallGeometry shifted_ball(double radius);
    static BallGeometry half_space() {
        return BallGeometry(Kind::HalfSpace, std::numeric_limits<double>::infinity());
    }

    Kind kind() const { return kind_; }
    double radius() const { return radius_; }
    bool shifted() const { return kind_ != Kind::Ball; }
    bool finite() const { return kind_ != Kind::HalfSpace; }

    /// Center P_R = (R, 0, ..., 0) for the shifted ball, origin otherwise.
    Point center(int dim) const;

    /// Signed distance is not needed; membership in the closed domain is.
    /// Boundary points are admitted (the kernel vanishes there).
    bool contains_closed(const Point& x) const;
    bool contains_open(const Point& x) const;

  private:
    BallGeometry(Kind kind, double radius) : kind_(kind), radius_(radius) {}
    Kind kind_;
    double radius_;
};

}  // namespace polyharm

#endif
