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

#include "polyharm/movingplane.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "polyharm/sampling.hpp"
#include "polyharm/semilinear.hpp"

namespace polyharm {

ReflectionSpec::ReflectionSpec(Point e, double lambda) : e_(std::move(e)), lambda_(lambda) {
    if (lambda < 0.0)
        throw std::invalid_argument("ReflectionSpec: lambda >= 0 required");
    if (std::abs(norm(e_) - 1.0) > 1e-12)
        throw std::invalid_argument("ReflectionSpec: |e| = 1 required");
    if (std::abs(e_[0]) > 1e-12)
        throw std::invalid_argument("ReflectionSpec: e must be perpendicular to e1");
}

Point ReflectionSpec::reflect(const Point& x) const {
    const double t = dot(x, e_) - lambda_;
    return axpy(x, -2.0 * t, e_);
}

bool ReflectionSpec::in_half_space(const Point& x) const {
    return dot(x, e_) > lambda_;
}

bool ReflectionSpec::in_cap(const Point& x) const {
    return in_half_space(x) && norm_sq(x) < 1.0;
}

bool ReflectionSpec::in_reflected_exterior(const Point& x) const {
    if (!(dot(x, e_) < lambda_) || norm_sq(x) >= 1.0) return false;
    return norm_sq(reflect(x)) >= 1.0;
}

Point reflect(const ReflectionSpec& spec, const Point& x) { return spec.reflect(x); }

ReflectionReport check_reflection_inequalities(const KernelParams& params,
                                               const ReflectionSpec& spec,
                                               long n_samples, double margin_tol,
                                               std::uint64_t seed) {
    if (n_samples < 1)
        throw std::invalid_argument("check_reflection_inequalities: n_samples >= 1");
    const BallGeometry ball = BallGeometry::unit_ball();
    HaltonSampler cap_sampler(params.dim(), seed + 1);
    HaltonSampler ext_sampler(params.dim(), seed + 2);

    const auto draw_cap = [&]() {
        for (;;) {
            Point p = cap_sampler.next_unit_ball();
            if (spec.in_cap(p)) return p;
        }
    };
    const auto draw_exterior = [&]() {
        for (;;) {
            Point p = ext_sampler.next_unit_ball();
            if (spec.in_reflected_exterior(p)) return p;
        }
    };

    InequalityReport kernel{"refl-kernel", 0, std::numeric_limits<double>::infinity(), 0};
    InequalityReport difference{"refl-difference", 0, std::numeric_limits<double>::infinity(), 0};
    InequalityReport exterior{"refl-exterior", 0, std::numeric_limits<double>::infinity(), 0};

    for (long s = 0; s < n_samples; ++s) {
        const Point x = draw_cap();
        const Point y = draw_cap();
        const Point xl = spec.reflect(x);
        const Point yl = spec.reflect(y);
        const double g_xl_yl = green(params, ball, xl, yl);
        const double g_x_yl = green(params, ball, x, yl);
        const double g_x_y = green(params, ball, x, y);
        const double g_xl_y = green(params, ball, xl, y);

        const double m1 = g_xl_yl - g_x_yl;
        const double m2 = (g_xl_yl - g_x_y) - (g_x_yl - g_xl_y);
        kernel.samples++;
        kernel.min_margin = std::min(kernel.min_margin, m1);
        if (m1 < -margin_tol) kernel.violations++;
        difference.samples++;
        difference.min_margin = std::min(difference.min_margin, m2);
        if (m2 < -margin_tol) difference.violations++;

        const Point yj = draw_exterior();
        const double m3 = green(params, ball, xl, yj) - green(params, ball, x, yj);
        exterior.samples++;
        exterior.min_margin = std::min(exterior.min_margin, m3);
        if (m3 < -margin_tol) exterior.violations++;
    }

    ReflectionReport report;
    report.items = {kernel, difference, exterior};
    return report;
}

std::string ReflectionReport::to_json() const {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& r : items) {
        j.push_back({{"inequality_id", r.inequality_id},
                     {"samples", r.samples},
                     {"min_margin", r.min_margin},
                     {"violations", r.violations}});
    }
    return j.dump(2);
}

double axial_symmetry_defect(const GridFunction& field) {
    const BallLattice& lattice = field.lattice_ref();
    if (lattice.orbit.size() != lattice.nodes.size() || lattice.orbit.empty())
        throw IncompatibleLatticeError("axial_symmetry_defect: lattice lacks orbit metadata");

    const int n_orbits = 1 + *std::max_element(lattice.orbit.begin(), lattice.orbit.end());
    std::vector<std::vector<double>> orbit_values(static_cast<std::size_t>(n_orbits));
    for (std::size_t i = 0; i < lattice.nodes.size(); ++i)
        orbit_values[static_cast<std::size_t>(lattice.orbit[i])].push_back(field.values[i]);

    double defect = 0.0;
    for (auto& vals : orbit_values) {
        if (vals.size() < 2) continue;
        // Sort before accumulating so the defect is invariant under any
        // relabeling of the angular samples.
        std::sort(vals.begin(), vals.end());
        const double lo = vals.front();
        const double hi = vals.back();
        const double mean = std::accumulate(vals.begin(), vals.end(), 0.0) /
                            static_cast<double>(vals.size());
        defect = std::max(defect, (hi - lo) / (1.0 + std::abs(mean)));
    }
    return defect;
}

PointwiseBoundReport kernel_pointwise_bound_check(const KernelParams& params,
                                                  long n_samples, std::uint64_t seed) {
    if (params.dim() < 2)
        throw std::invalid_argument("kernel_pointwise_bound_check: N >= 2 required");
    const BallGeometry ball = BallGeometry::unit_ball();
    HaltonSampler sampler(params.dim(), seed + 3);
    PointwiseBoundReport report;
    for (long s = 0; s < n_samples; ++s) {
        const Point x = sampler.next_unit_ball();
        const Point y = sampler.next_unit_ball();
        const double r = dist(x, y);
        if (r < 1e-12) continue;
        const double g = green(params, ball, x, y);
        report.max_ratio = std::max(report.max_ratio,
                                    g * std::pow(r, params.dim() - 1.0));
        report.samples++;
    }
    return report;
}

}  // namespace polyharm
