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

#include "polyharm/rescale.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "polyharm/quadrature.hpp"
#include "polyharm/sampling.hpp"

namespace polyharm {

double RescaleSpec::zoom() const {
    return std::pow(M, (1.0 - q) / (2.0 * order));
}

namespace {

void validate(const RescaleSpec& spec) {
    if (!(spec.M > 0.0)) throw std::invalid_argument("RescaleSpec: M > 0 required");
    if (spec.order < 1) throw std::invalid_argument("RescaleSpec: m >= 1 required");
    if (!(spec.q > 1.0)) throw std::invalid_argument("RescaleSpec: q > 1 required");
    if (spec.center.empty()) throw std::invalid_argument("RescaleSpec: empty center");
}

}  // namespace

Field rescale_field(const RescaleSpec& spec, Field u) {
    validate(spec);
    const double zoom = spec.zoom();
    const double inv_m = 1.0 / spec.M;
    const Point center = spec.center;
    return [zoom, inv_m, center, u = std::move(u)](const Point& y) {
        return inv_m * u(axpy(center, zoom, y));
    };
}

int CoefficientMap::total_order() const {
    int t = 0;
    for (int k : multiindex) t += k;
    return t;
}

double coefficient_prefactor(const RescaleSpec& spec, int alpha_total) {
    validate(spec);
    if (alpha_total < 0 || alpha_total > 2 * spec.order)
        throw std::invalid_argument("coefficient_prefactor: |alpha| <= 2m required");
    if (alpha_total == 2 * spec.order) return 1.0;
    const double e = (spec.q - 1.0) * (alpha_total / (2.0 * spec.order) - 1.0);
    return std::pow(spec.M, e);
}

CoefficientMap rescale_coefficient(const RescaleSpec& spec, const CoefficientMap& c) {
    const double pre = coefficient_prefactor(spec, c.total_order());
    const double zoom = spec.zoom();
    const Point center = spec.center;
    const Field base = c.values;
    CoefficientMap out;
    out.multiindex = c.multiindex;
    out.values = [pre, zoom, center, base](const Point& y) {
        return pre * base(axpy(center, zoom, y));
    };
    return out;
}

RescaleSpec compose(const RescaleSpec& first, const RescaleSpec& second) {
    validate(first);
    validate(second);
    if (first.order != second.order || first.q != second.q)
        throw std::invalid_argument("compose: mismatched (m, q)");
    if (first.center.size() != second.center.size())
        throw std::invalid_argument("compose: dimension mismatch");
    RescaleSpec out;
    out.M = first.M * second.M;
    out.order = first.order;
    out.q = first.q;
    out.center = axpy(first.center, first.zoom(), second.center);
    return out;
}

Field translate_first_coordinate(Field u, double tau) {
    return [tau, u = std::move(u)](const Point& z) {
        Point y = z;
        y[0] -= tau;
        return u(y);
    };
}

VanishingReport lower_order_vanishing(const std::vector<double>& M_values,
                                      const Point& center, int order, double q,
                                      const CoefficientMap& c, const Point& box_lo,
                                      const Point& box_hi, int samples,
                                      std::uint64_t seed) {
    if (M_values.size() < 2)
        throw std::invalid_argument("lower_order_vanishing: need >= 2 M values");
    VanishingReport report;
    report.alpha_total = c.total_order();
    report.predicted_exponent =
        (q - 1.0) * (report.alpha_total / (2.0 * order) - 1.0);
    report.M_values = M_values;

    // One fixed sample cloud in the y-box, reused across all M.
    HaltonSampler sampler(static_cast<int>(center.size()), seed + 5);
    std::vector<Point> cloud;
    cloud.reserve(static_cast<std::size_t>(samples));
    for (int s = 0; s < samples; ++s) cloud.push_back(sampler.next_box(box_lo, box_hi));

    for (double M : M_values) {
        RescaleSpec spec{M, center, order, q};
        const CoefficientMap cb = rescale_coefficient(spec, c);
        double sup = 0.0;
        for (const Point& y : cloud) sup = std::max(sup, std::abs(cb.values(y)));
        report.sup_norms.push_back(sup);
    }
    report.fitted_exponent = fit_loglog_slope(report.M_values, report.sup_norms);
    return report;
}

}  // namespace polyharm
