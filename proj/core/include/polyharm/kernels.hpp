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

#ifndef POLYHARM_KERNELS_HPP
#define POLYHARM_KERNELS_HPP

#include <vector>

#include "polyharm/geometry.hpp"

namespace polyharm {

/// Normalization constant k_N^m of the polyharmonic ball Green function,
/// k_N^m = 1 / (N e_N 4^{m-1} ((m-1)!)^2) with e_N the unit-ball volume.
/// Its correctness is anchored to the delta-reproduction identity exercised
/// by the representation tests, not to the closed form alone.
double normalization_constant(int order, int dim);

/// Parameter bundle shared by every kernel evaluation: dimension N >= 1,
/// polyharmonic order m >= 1 (operator (-Delta)^m), and the nonlinearity
/// exponent q > 1.  alpha is always derived, never stored.
class KernelParams {
  public:
    KernelParams(int dim, int order, double exponent);

    int dim() const { return dim_; }
    int order() const { return order_; }
    double exponent() const { return exponent_; }

    /// alpha = N + 2m - q (N - 2m); nonnegative for subcritical/critical q.
    double alpha() const {
        return dim_ + 2.0 * order_ - exponent_ * (dim_ - 2.0 * order_);
    }
    /// (N + 2m)/(N - 2m) for N > 2m, +infinity otherwise.
    double critical_exponent() const;
    double normalization() const { return k_norm_; }

  private:
    int dim_;
    int order_;
    double exponent_;
    double k_norm_;
};

/// psi-argument of the Boggio profile for the domain selected by geom:
///   ball B_R:      (R^2-|x|^2)(R^2-|y|^2) / (R^2 |x-y|^2)
///   shifted B_R^+: same with |.-P_R| distances
///   half-space:    4 x_1 y_1 / |x-y|^2
/// Points may lie in the closed domain; psi vanishes on the boundary.
double psi(const KernelParams& params, const BallGeometry& geom,
           const Point& x, const Point& y);

/// Profile integral  B(t) = \int_0^t z^{m-1} (1+z)^{-N/2} dz,  t >= 0.
/// t = infinity is admitted when N > 2m (the integral converges to
/// Beta(m, N/2 - m)); otherwise InfiniteProfileError.
double boggio_profile(double t, const KernelParams& params);
double boggio_profile(double t, int order, int dim);

/// Green function of (-Delta)^m with Dirichlet boundary conditions on the
/// domain selected by geom:
///   G(x,y) = (k_N^m / 2) |x-y|^{2m-N} B(psi(x,y)).
/// Strictly positive inside, symmetric in (x,y), zero when either point is
/// on the boundary.  Throws CoincidentPointsError at x == y and
/// OutsideDomainError for points beyond the closed domain.
double green(const KernelParams& params, const BallGeometry& geom,
             const Point& x, const Point& y);

/// Same value as green() but without domain validation: evaluates the
/// closed-form expression as long as psi > -1, which extends G real-
/// analytically a short distance across the boundary.  Finite-difference
/// stencils for boundary derivatives rely on this extension.
double green_extended(const KernelParams& params, const BallGeometry& geom,
                      const Point& x, const Point& y);

/// Central finite-difference approximation of D_y^k G(x, y) for a
/// multi-index k with |k| <= 2m, Richardson-extrapolated once.
/// Step h = max(1e-5, 1e-2 |x-y|); StepUnderflowError when the stencil
/// would reach the singularity.
double kernel_derivative(const KernelParams& params, const BallGeometry& geom,
                         const Point& x, const Point& y,
                         const std::vector<int>& multiindex);

}  // namespace polyharm

#endif
