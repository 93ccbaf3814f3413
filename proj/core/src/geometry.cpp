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

#include "polyharm/geometry.hpp"

#include <limits>
#include <stdexcept>

namespace polyharm {

double dot(const Point& a, const Point& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm_sq(const Point& a) { return dot(a, a); }

double norm(const Point& a) { return std::sqrt(norm_sq(a)); }

double dist_sq(const Point& a, const Point& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

double dist(const Point& a, const Point& b) { return std::sqrt(dist_sq(a, b)); }

double one_minus_norm_sq(const Point& a) { return 1.0 - norm_sq(a); }

Point add(const Point& a, const Point& b) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Point sub(const Point& a, const Point& b) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Point scale(double s, const Point& a) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

Point axpy(const Point& a, double s, const Point& b) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + s * b[i];
    return r;
}

Point unit_vector(int dim, int axis) {
    Point e(static_cast<std::size_t>(dim), 0.0);
    e.at(static_cast<std::size_t>(axis)) = 1.0;
    return e;
}

double unit_ball_volume(int dim) {
    return std::pow(M_PI, 0.5 * dim) / std::tgamma(0.5 * dim + 1.0);
}

double unit_sphere_area(int dim) {
    return 2.0 * std::pow(M_PI, 0.5 * dim) / std::tgamma(0.5 * dim);
}

double sin_power_integral(int k) {
    return std::sqrt(M_PI) * std::tgamma(0.5 * (k + 1)) / std::tgamma(0.5 * k + 1.0);
}

BallGeometry BallGeometry::ball(double radius) {
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw std::invalid_argument("BallGeometry: radius must be positive and finite");
    return BallGeometry(Kind::Ball, radius);
}

BallGeometry BallGeometry::shifted_ball(double radius) {
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw std::invalid_argument("BallGeometry: radius must be positive and finite");
    return BallGeometry(Kind::ShiftedBall, radius);
}

Point BallGeometry::center(int dim) const {
    Point c(static_cast<std::size_t>(dim), 0.0);
    if (kind_ == Kind::ShiftedBall) c[0] = radius_;
    return c;
}

namespace {
// Slack keeps points computed to sit exactly on a boundary from being
// rejected by rounding.
constexpr double kBoundarySlack = 1e-12;
}  // namespace

bool BallGeometry::contains_closed(const Point& x) const {
    if (kind_ == Kind::HalfSpace) return x[0] >= -kBoundarySlack;
    const Point c = center(static_cast<int>(x.size()));
    return dist(x, c) <= radius_ * (1.0 + kBoundarySlack);
}

bool BallGeometry::contains_open(const Point& x) const {
    if (kind_ == Kind::HalfSpace) return x[0] > 0.0;
    const Point c = center(static_cast<int>(x.size()));
    return dist(x, c) < radius_;
}

}  // namespace polyharm
