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

#ifndef POLYHARM_SEMILINEAR_HPP
#define POLYHARM_SEMILINEAR_HPP

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "polyharm/geometry.hpp"
#include "polyharm/kernels.hpp"
#include "polyharm/quadrature.hpp"

namespace polyharm {

/// Product polar lattice on the unit ball: Gauss-Legendre radii clustered
/// toward the boundary sphere (cosine map) crossed with a polar-axis-aligned
/// sphere rule.  Weights are the full volume element and sum to the exact
/// ball volume; nodes within pole_exclusion of -e1 are dropped and their
/// weight redistributed proportionally.  Orbit ids group nodes lying on the
/// same rotation orbit about the x1-axis.
struct BallLattice {
    int dim = 0;
    std::vector<Point> nodes;
    std::vector<double> weights;
    std::vector<int> orbit;
    double pole_exclusion = 1e-3;

    static std::shared_ptr<const BallLattice> make(int dim, int radial_order,
                                                   int polar_order, int minor_order,
                                                   int azimuth_order,
                                                   double pole_exclusion = 1e-3);
    /// Sizes tuned per dimension for the Picard probes.
    static std::shared_ptr<const BallLattice> make_default(int dim);

    double total_weight() const;
};

/// Sampled field over a ball lattice.
struct GridFunction {
    std::shared_ptr<const BallLattice> lattice;
    KernelParams params;
    std::vector<double> values;

    GridFunction(std::shared_ptr<const BallLattice> lat, const KernelParams& p,
                 double fill = 0.0);

    const BallLattice& lattice_ref() const { return *lattice; }
    double sup_norm() const;
};

/// One application of the Green operator of the transported problem:
///   T[v](x) = sum_y w(y) G_1(x,y) h(y, v(y)),
/// h(y,t) = 2^{2m} |y+e1|^{-alpha} t^q, with a local cell-averaged kernel
/// value on the diagonal.  Requires v >= 0 nodewise.
GridFunction apply_green_operator(const GridFunction& v, const QuadratureSpec& spec);

struct PicardConfig {
    int max_iters = 60;
    double contraction_tol = 1e-10;
    double divergence_cap = 1e3;
    double damping = 1.0;
};

enum class PicardStatus { Converged, Diverged, Inconclusive };
const char* to_string(PicardStatus s);

struct PicardHistoryRow {
    int iter;
    double sup_norm;
    double residual;  // ||T[v_k] - v_k||_inf
};

struct PicardResult {
    PicardStatus status = PicardStatus::Inconclusive;
    GridFunction field;
    std::vector<PicardHistoryRow> history;
};

/// Damped Picard iteration v_{k+1} = (1-damping) v_k + damping T[v_k].
/// Terminates on increment below contraction_tol (Converged), sup-norm
/// above divergence_cap (Diverged), or max_iters (Inconclusive).
PicardResult picard_solve(const GridFunction& v0, const PicardConfig& cfg,
                          const QuadratureSpec& spec);

/// CSV columns: iter,sup_norm,residual
void write_picard_history_csv(std::ostream& out,
                              const std::vector<PicardHistoryRow>& history);

/// Two-branch limit nonlinearity g(s) = hbar s^q (s >= 0), kbar |s|^q (s <= 0).
struct LimitNonlinearity {
    double hbar = 1.0;
    double kbar = 1.0;
    double q = 2.0;
    double operator()(double s) const;
};

}  // namespace polyharm

#endif
