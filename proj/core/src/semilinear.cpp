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

#include "polyharm/semilinear.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <stdexcept>

#include "polyharm/conformal.hpp"

namespace polyharm {

std::shared_ptr<const BallLattice> BallLattice::make(int dim, int radial_order,
                                                     int polar_order, int minor_order,
                                                     int azimuth_order,
                                                     double pole_exclusion) {
    auto lattice = std::make_shared<BallLattice>();
    lattice->dim = dim;
    lattice->pole_exclusion = pole_exclusion;

    // Radii r = sin(pi s / 2) cluster toward the boundary sphere, where the
    // transported weight degenerates.
    std::vector<double> sx, sw;
    gauss_legendre(radial_order, sx, sw);
    std::vector<double> radii(sx.size()), rweights(sx.size());
    double rsum = 0.0;
    for (std::size_t i = 0; i < sx.size(); ++i) {
        const double s = 0.5 * (sx[i] + 1.0);
        radii[i] = std::sin(0.5 * M_PI * s);
        const double jac = 0.25 * M_PI * std::cos(0.5 * M_PI * s);  // ds/2 * d r/d s
        rweights[i] = sw[i] * jac * std::pow(radii[i], dim - 1);
        rsum += rweights[i];
    }
    // Normalize so the radial rule integrates r^{N-1} exactly to 1/N; the
    // lattice weight total is then the exact ball volume.
    for (double& w : rweights) w *= (1.0 / dim) / rsum;

    const SphereRule sphere = make_sphere_rule(dim, polar_order, minor_order, azimuth_order);

    // Rotation orbits about the x1-axis: nodes sharing (radial index,
    // quantized polar cosine).  Assigned from geometry so they do not depend
    // on the sphere-rule construction order.
    std::vector<std::pair<long, std::size_t>> polar_key(sphere.directions.size());
    for (std::size_t j = 0; j < sphere.directions.size(); ++j)
        polar_key[j] = {std::lround(sphere.directions[j][0] * 1e12), j};
    std::map<long, int> polar_index;
    for (const auto& [key, idx] : polar_key)
        polar_index.emplace(key, 0);
    int next = 0;
    for (auto& [key, idx] : polar_index) idx = next++;

    double removed = 0.0;
    for (std::size_t i = 0; i < radii.size(); ++i) {
        for (std::size_t j = 0; j < sphere.directions.size(); ++j) {
            Point y = scale(radii[i], sphere.directions[j]);
            const double w = rweights[i] * sphere.weights[j];
            double pole_d2 = (y[0] + 1.0) * (y[0] + 1.0);
            for (int c = 1; c < dim; ++c) pole_d2 += y[c] * y[c];
            if (pole_d2 < pole_exclusion * pole_exclusion) {
                removed += w;
                continue;
            }
            lattice->nodes.push_back(std::move(y));
            lattice->weights.push_back(w);
            lattice->orbit.push_back(static_cast<int>(i) * static_cast<int>(polar_index.size()) +
                                     polar_index[polar_key[j].first]);
        }
    }
    if (removed > 0.0) {
        const double vol = unit_ball_volume(dim);
        const double factor = vol / (vol - removed);
        for (double& w : lattice->weights) w *= factor;
    }
    return lattice;
}

std::shared_ptr<const BallLattice> BallLattice::make_default(int dim) {
    switch (dim) {
        case 1: return make(1, 24, 2, 2, 2);
        case 2: return make(2, 16, 24, 4, 48);
        case 3: return make(3, 14, 12, 4, 24);
        case 4: return make(4, 12, 8, 6, 12);
        default: return make(dim, 10, 6, 4, 8);
    }
}

double BallLattice::total_weight() const {
    double s = 0.0;
    for (double w : weights) s += w;
    return s;
}

GridFunction::GridFunction(std::shared_ptr<const BallLattice> lat,
                           const KernelParams& p, double fill)
    : lattice(std::move(lat)), params(p),
      values(lattice ? lattice->nodes.size() : 0, fill) {
    if (!lattice) throw std::invalid_argument("GridFunction: null lattice");
    if (lattice->dim != p.dim())
        throw std::invalid_argument("GridFunction: lattice/params dimension mismatch");
}

double GridFunction::sup_norm() const {
    double s = 0.0;
    for (double v : values) s = std::max(s, std::abs(v));
    return s;
}

namespace {

// Cell-averaged diagonal kernel value: the kernel restricted to a ball of
// the cell's equivalent radius around the node.
double diagonal_kernel(const KernelParams& params, const Point& x, double cell_weight) {
    const int N = params.dim();
    const int m = params.order();
    const double k2 = 0.5 * params.normalization();
    const double rho = std::pow(cell_weight / unit_ball_volume(N), 1.0 / N);
    const double a = one_minus_norm_sq(x);  // psi ~ a^2 / r^2 near the diagonal
    if (N > 2 * m) {
        const double b_inf = std::beta(static_cast<double>(m), 0.5 * N - m);
        return k2 * b_inf * N * std::pow(rho, 2.0 * m - N) / (2.0 * m);
    }
    if (N == 2 * m) {
        // B(t) = ln t + c + o(1); cell average of -2 ln r over B_rho.
        const double t_big = 1e10;
        const double c = boggio_profile(t_big, m, N) - std::log(t_big);
        return k2 * (2.0 * std::log(a / rho) + 2.0 / N + c);
    }
    // N < 2m: the kernel extends continuously to the diagonal.
    return k2 * std::pow(a, 2.0 * m - N) / (m - 0.5 * N);
}

}  // namespace

GridFunction apply_green_operator(const GridFunction& v, const QuadratureSpec& spec) {
    (void)spec;
    const BallLattice& lat = v.lattice_ref();
    const KernelParams& params = v.params;
    const std::size_t n = lat.nodes.size();
    for (std::size_t j = 0; j < n; ++j)
        if (v.values[j] < 0.0)
            throw NegativeInputError("apply_green_operator: v >= 0 required");
    for (std::size_t j = 0; j < n; ++j) {
        double pole_d2 = (lat.nodes[j][0] + 1.0) * (lat.nodes[j][0] + 1.0);
        for (int c = 1; c < lat.dim; ++c) pole_d2 += lat.nodes[j][c] * lat.nodes[j][c];
        if (pole_d2 < 1e-6)
            throw PoleProximityError("apply_green_operator: lattice node at the pole");
    }

    const SemilinearWeight h(params);
    std::vector<double> weighted(n);
    for (std::size_t j = 0; j < n; ++j)
        weighted[j] = lat.weights[j] * h(lat.nodes[j], v.values[j]);

    const BallGeometry ball = BallGeometry::unit_ball();
    GridFunction out(v.lattice, params, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const Point& x = lat.nodes[i];
        double acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            acc += green(params, ball, x, lat.nodes[j]) * weighted[j];
        }
        acc += diagonal_kernel(params, x, lat.weights[i]) * weighted[i];
        out.values[i] = std::max(acc, 0.0);
    }
    return out;
}

const char* to_string(PicardStatus s) {
    switch (s) {
        case PicardStatus::Converged: return "converged";
        case PicardStatus::Diverged: return "diverged";
        case PicardStatus::Inconclusive: return "inconclusive";
    }
    return "unknown";
}

PicardResult picard_solve(const GridFunction& v0, const PicardConfig& cfg,
                          const QuadratureSpec& spec) {
    if (!(cfg.contraction_tol > 0.0))
        throw std::invalid_argument("picard_solve: contraction_tol > 0 required");
    if (!(cfg.divergence_cap > 1.0))
        throw std::invalid_argument("picard_solve: divergence_cap > 1 required");
    if (!(cfg.damping > 0.0) || cfg.damping > 1.0)
        throw std::invalid_argument("picard_solve: damping in (0,1] required");

    PicardResult result{PicardStatus::Inconclusive, v0, {}};
    GridFunction v = v0;
    for (int k = 0; k < cfg.max_iters; ++k) {
        if (v.sup_norm() > cfg.divergence_cap) {
            result.status = PicardStatus::Diverged;
            result.field = v;
            return result;
        }
        GridFunction tv = apply_green_operator(v, spec);
        double residual = 0.0;
        for (std::size_t i = 0; i < v.values.size(); ++i)
            residual = std::max(residual, std::abs(tv.values[i] - v.values[i]));
        result.history.push_back({k, v.sup_norm(), residual});

        for (std::size_t i = 0; i < v.values.size(); ++i)
            v.values[i] = (1.0 - cfg.damping) * v.values[i] + cfg.damping * tv.values[i];

        if (cfg.damping * residual < cfg.contraction_tol) {
            result.status = PicardStatus::Converged;
            result.field = v;
            return result;
        }
    }
    result.field = v;
    return result;
}

void write_picard_history_csv(std::ostream& out,
                              const std::vector<PicardHistoryRow>& history) {
    out << "iter,sup_norm,residual\n";
    out.precision(17);
    for (const auto& row : history)
        out << row.iter << "," << row.sup_norm << "," << row.residual << "\n";
}

double LimitNonlinearity::operator()(double s) const {
    if (s == 0.0) return 0.0;
    if (s > 0.0) return hbar * std::pow(s, q);
    return kbar * std::pow(-s, q);
}

}  // namespace polyharm
