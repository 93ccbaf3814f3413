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

#include "polyharm/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace polyharm {

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
    static std::mutex mutex;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(n);
        if (it != cache.end()) {
            nodes = it->second.first;
            weights = it->second.second;
            return;
        }
    }
    if (n < 1) throw std::invalid_argument("gauss_legendre: n >= 1 required");
    std::vector<double> x(n), w(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        w[n - 1 - i] = w[i];
    }
    std::lock_guard<std::mutex> lock(mutex);
    cache.emplace(n, std::make_pair(x, w));
    nodes = x;
    weights = w;
}

namespace {

SphereRule build_sphere_rule(int dim, int polar_order, int minor_order, int azimuth_order) {
    SphereRule rule;
    if (dim == 1) {
        rule.directions = {Point{1.0}, Point{-1.0}};
        rule.weights = {1.0, 1.0};
        return rule;
    }
    if (dim == 2) {
        const int n = std::max(azimuth_order, 4);
        rule.directions.reserve(n);
        rule.weights.assign(n, 2.0 * M_PI / n);
        for (int k = 0; k < n; ++k) {
            const double phi = 2.0 * M_PI * (k + 0.5) / n;
            rule.directions.push_back(Point{std::cos(phi), std::sin(phi)});
        }
        return rule;
    }
    std::vector<double> t, wt;
    gauss_legendre(std::max(polar_order, 2), t, wt);
    const int npolar = static_cast<int>(t.size());
    std::vector<double> theta(npolar), wtheta(npolar);
    double wsum = 0.0;
    for (int i = 0; i < npolar; ++i) {
        theta[i] = 0.5 * M_PI * (t[i] + 1.0);
        wtheta[i] = 0.5 * M_PI * wt[i] * std::pow(std::sin(theta[i]), dim - 2);
        wsum += wtheta[i];
    }
    // Normalize the polar weights to the exact Wallis integral; constants
    // and polar-axis-symmetric integrands then integrate exactly.
    const double norm = sin_power_integral(dim - 2) / wsum;
    SphereRule inner = build_sphere_rule(dim - 1, minor_order, minor_order, azimuth_order);
    rule.directions.reserve(npolar * inner.directions.size());
    rule.weights.reserve(npolar * inner.directions.size());
    for (int i = 0; i < npolar; ++i) {
        const double c = std::cos(theta[i]);
        const double s = std::sin(theta[i]);
        const double wi = wtheta[i] * norm;
        for (std::size_t j = 0; j < inner.directions.size(); ++j) {
            Point d(static_cast<std::size_t>(dim));
            d[0] = c;
            for (int k = 1; k < dim; ++k) d[k] = s * inner.directions[j][k - 1];
            rule.directions.push_back(std::move(d));
            rule.weights.push_back(wi * inner.weights[j]);
        }
    }
    return rule;
}

const SphereRule& cached_sphere_rule(int dim, int polar, int minor, int azim) {
    using Key = std::tuple<int, int, int, int>;
    static std::map<Key, SphereRule> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    const Key key{dim, polar, minor, azim};
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, build_sphere_rule(dim, polar, minor, azim)).first;
    return it->second;
}

// Householder reflection mapping e1 onto the (unit) axis.
Point rotate_to_axis(const Point& d, const Point& v, double vnorm_sq) {
    if (vnorm_sq == 0.0) return d;
    const double f = 2.0 * dot(v, d) / vnorm_sq;
    Point r(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) r[i] = d[i] - f * v[i];
    return r;
}

}  // namespace

SphereRule make_sphere_rule(int dim, int polar_order, int minor_order, int azimuth_order) {
    return cached_sphere_rule(dim, polar_order, minor_order, azimuth_order);
}

SphereRule make_sphere_rule_with_axis(int dim, int polar_order, int minor_order,
                                      int azimuth_order, const Point& axis) {
    SphereRule rule = cached_sphere_rule(dim, polar_order, minor_order, azimuth_order);
    Point a = axis;
    const double n = norm(a);
    if (!(n > 0.0)) throw std::invalid_argument("sphere rule: zero symmetry axis");
    for (double& c : a) c /= n;
    Point v = sub(unit_vector(dim, 0), a);
    const double v2 = norm_sq(v);
    if (v2 < 1e-28) return rule;
    for (Point& d : rule.directions) d = rotate_to_axis(d, v, v2);
    return rule;
}

namespace {

struct BallRuleParams {
    int radial_order;
    int polar_order;
    int minor_order;
    int azimuth_order;
    int core_depth;
};

BallRuleParams ball_rule_params(int dim, int level, bool axis_mode, bool singular) {
    BallRuleParams p;
    p.radial_order = 10 + 4 * level;
    p.polar_order = 10 + 6 * level;
    if (axis_mode && dim > 2) {
        p.minor_order = 2;
        p.azimuth_order = 4;
    } else {
        p.minor_order = 4 + 2 * level;
        p.azimuth_order = (dim <= 3) ? 2 * p.polar_order : 2 * p.minor_order;
    }
    if (dim == 2) p.azimuth_order = 2 * p.polar_order;
    p.core_depth = (singular ? 5 : 1) + level;
    return p;
}

// Radial breakpoints as fractions of the ray length: geometric descent from
// 1 to the singular core, then dyadic refinement inside the core.
std::vector<double> radial_breakpoints(double core_frac, int core_depth) {
    std::vector<double> fr;
    fr.push_back(1.0);
    double f = 1.0;
    while (f > core_frac && f > 1e-12) {
        f *= 0.5;
        fr.push_back(f);
    }
    for (int j = 0; j < core_depth; ++j) {
        f *= 0.5;
        fr.push_back(f);
    }
    fr.push_back(0.0);
    std::reverse(fr.begin(), fr.end());
    return fr;
}

double integrate_ball_level(const Field& f, int dim, const BallGeometry& geom,
                            const QuadratureSpec& spec, const Point& center,
                            bool singular, int level) {
    const bool axis_mode = spec.symmetry_axis.has_value() && dim > 2;
    const BallRuleParams p = ball_rule_params(dim, level, axis_mode, singular);
    SphereRule rule;
    if (spec.symmetry_axis.has_value())
        rule = make_sphere_rule_with_axis(dim, p.polar_order, p.minor_order,
                                          p.azimuth_order, *spec.symmetry_axis);
    else
        rule = make_sphere_rule(dim, p.polar_order, p.minor_order, p.azimuth_order);

    const double R = geom.radius();
    const Point gc = geom.center(dim);
    const Point off = sub(center, gc);
    const double off2 = norm_sq(off);
    const double core_abs = std::max(spec.singularity_split_radius * 2.0 * R, 1e-8 * R);

    std::vector<double> gl_x, gl_w;
    gauss_legendre(p.radial_order, gl_x, gl_w);

    double total = 0.0;
    Point y(static_cast<std::size_t>(dim));
    for (std::size_t id = 0; id < rule.directions.size(); ++id) {
        const Point& w_dir = rule.directions[id];
        const double b = dot(off, w_dir);
        const double disc = b * b + R * R - off2;
        if (disc <= 0.0) continue;
        const double rmax = -b + std::sqrt(disc);
        if (rmax <= 0.0) continue;
        const double core_frac = std::clamp(core_abs / rmax, 1e-9, 0.5);
        const std::vector<double> fr = radial_breakpoints(core_frac, p.core_depth);
        double ray = 0.0;
        for (std::size_t k = 0; k + 1 < fr.size(); ++k) {
            const double r0 = fr[k] * rmax;
            const double r1 = fr[k + 1] * rmax;
            const double mid = 0.5 * (r0 + r1);
            const double half = 0.5 * (r1 - r0);
            double panel = 0.0;
            for (std::size_t q = 0; q < gl_x.size(); ++q) {
                const double r = mid + half * gl_x[q];
                for (int c = 0; c < dim; ++c) y[c] = center[c] + r * w_dir[c];
                panel += gl_w[q] * f(y) * std::pow(r, dim - 1);
            }
            ray += half * panel;
        }
        total += rule.weights[id] * ray;
    }
    return total;
}

}  // namespace

QuadratureResult integrate_ball(const Field& f, int dim, const BallGeometry& geom,
                                const QuadratureSpec& spec,
                                const std::optional<Point>& singular_at) {
    if (!geom.finite())
        throw std::invalid_argument("integrate_ball: finite domain required");
    if (!(spec.target_rel_error > 0.0) || spec.target_rel_error > 1e-2)
        throw std::invalid_argument("integrate_ball: target_rel_error must lie in (0, 1e-2]");
    Point center = singular_at.value_or(geom.center(dim));
    if (!geom.contains_open(center))
        throw OutsideDomainError("integrate_ball: expansion center outside the open domain");

    const bool singular = singular_at.has_value();
    QuadratureResult res;
    double prev = 0.0;
    for (int level = 0; level <= spec.max_subdivisions; ++level) {
        const double value = integrate_ball_level(f, dim, geom, spec, center, singular, level);
        if (level > 0) {
            const double est = std::abs(value - prev);
            if (est <= spec.target_rel_error * (std::abs(value) + 1.0)) {
                res.value = value;
                res.error_estimate = est;
                res.levels_used = level + 1;
                return res;
            }
        }
        prev = value;
    }
    throw BudgetExceededError("integrate_ball: refinement budget exhausted");
}

double cap_surface_integral(const CapRange& range, const Point& x,
                            const QuadratureSpec& spec) {
    const int dim = static_cast<int>(x.size());
    if (dim < 2)
        throw std::invalid_argument("cap_surface_integral: N >= 2 required");
    const double R = range.R;
    if (!(R > 0.0) || range.a < 0.0 || range.b < range.a || range.b > 2.0 * R * (1.0 + 1e-12))
        throw InvalidCapRangeError("cap_surface_integral: need 0 <= a <= b <= 2R");
    const double x1 = x[0];
    if (!(x1 > 0.0) || x1 > 0.5 * R * (1.0 + 1e-12))
        throw InvalidCapRangeError("cap_surface_integral: need 0 < x_1 <= R/2");
    for (int i = 1; i < dim; ++i)
        if (std::abs(x[i]) > 1e-9 * R)
            throw InvalidCapRangeError("cap_surface_integral: x must lie on the first axis");
    if (range.a == range.b) return 0.0;

    // Parameterize y_1 = R(1 - cos u); the Gram factor then collapses to
    // R^{N-1} sin^{N-2}(u) times the exact angular area |S^{N-2}|.
    const double ua = std::acos(std::clamp(1.0 - range.a / R, -1.0, 1.0));
    const double ub = std::acos(std::clamp(1.0 - range.b / R, -1.0, 1.0));
    const double area = unit_sphere_area(dim - 1);
    const auto integrand = [&](double u) {
        const double y1 = R * (1.0 - std::cos(u));
        const double d2 = x1 * x1 + 2.0 * (R - x1) * y1;
        return std::pow(std::sin(u), dim - 2) * std::pow(d2, -0.5 * dim);
    };

    std::vector<double> gl_x, gl_w;
    gauss_legendre(16, gl_x, gl_w);
    double prev = 0.0;
    for (int level = 0; level <= spec.max_subdivisions; ++level) {
        const int panels = 4 << level;
        double sum = 0.0;
        for (int p = 0; p < panels; ++p) {
            const double u0 = ua + (ub - ua) * p / panels;
            const double u1 = ua + (ub - ua) * (p + 1) / panels;
            const double mid = 0.5 * (u0 + u1), half = 0.5 * (u1 - u0);
            double acc = 0.0;
            for (std::size_t q = 0; q < gl_x.size(); ++q)
                acc += gl_w[q] * integrand(mid + half * gl_x[q]);
            sum += half * acc;
        }
        const double value = area * std::pow(R, dim - 1) * sum;
        if (level > 0 && std::abs(value - prev) <= spec.target_rel_error * (std::abs(value) + 1e-300))
            return value;
        prev = value;
    }
    throw BudgetExceededError("cap_surface_integral: refinement budget exhausted");
}

QuadratureResult sphere_integral(const Field& f, const Point& center, double r,
                                 const QuadratureSpec& spec) {
    const int dim = static_cast<int>(center.size());
    if (!(r > 0.0)) throw std::invalid_argument("sphere_integral: r > 0 required");
    QuadratureResult res;
    double prev = 0.0;
    Point y(center.size());
    for (int level = 0; level <= spec.max_subdivisions; ++level) {
        const bool axis_mode = spec.symmetry_axis.has_value() && dim > 2;
        const int polar = 12 + 6 * level;
        const int minor = axis_mode ? 2 : 4 + 2 * level;
        int azim = axis_mode ? 4 : ((dim <= 3) ? 2 * polar : 2 * minor);
        if (dim == 2) azim = 2 * polar;
        SphereRule rule;
        if (spec.symmetry_axis.has_value())
            rule = make_sphere_rule_with_axis(dim, polar, minor, azim, *spec.symmetry_axis);
        else
            rule = make_sphere_rule(dim, polar, minor, azim);
        double sum = 0.0;
        for (std::size_t i = 0; i < rule.directions.size(); ++i) {
            for (int c = 0; c < dim; ++c) y[c] = center[c] + r * rule.directions[i][c];
            sum += rule.weights[i] * f(y);
        }
        const double value = std::pow(r, dim - 1) * sum;
        if (level > 0) {
            const double est = std::abs(value - prev);
            if (est <= spec.target_rel_error * (std::abs(value) + 1.0)) {
                res.value = value;
                res.error_estimate = est;
                res.levels_used = level + 1;
                return res;
            }
        }
        prev = value;
    }
    throw BudgetExceededError("sphere_integral: refinement budget exhausted");
}

double spherical_average(const Field& w, int dim, double r, const QuadratureSpec& spec) {
    if (r < 0.0) throw std::invalid_argument("spherical_average: r >= 0 required");
    if (r == 0.0) return w(Point(static_cast<std::size_t>(dim), 0.0));
    const Point center(static_cast<std::size_t>(dim), 0.0);
    const double surf = sphere_integral(w, center, r, spec).value;
    return surf / (std::pow(r, dim - 1) * unit_sphere_area(dim));
}

double fit_loglog_slope(const std::vector<double>& abscissae,
                        const std::vector<double>& values) {
    if (abscissae.size() != values.size() || abscissae.size() < 2)
        throw std::invalid_argument("fit_loglog_slope: need matching lists of size >= 2");
    const std::size_t n = abscissae.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double lx = std::log(abscissae[i]);
        const double ly = std::log(std::abs(values[i]));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace polyharm
