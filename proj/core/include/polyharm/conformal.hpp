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

#ifndef POLYHARM_CONFORMAL_HPP
#define POLYHARM_CONFORMAL_HPP

#include "polyharm/geometry.hpp"
#include "polyharm/kernels.hpp"

namespace polyharm {

/// Moebius map phi(y) = 2 (y + e1)/|y + e1|^2 - e1 carrying the open unit
/// ball onto the open half-space {x_1 > 0}.  The map is an involution, so
/// it is its own inverse.  Its only singular point is -e1; evaluations
/// within kPoleRadius of it are rejected.
class ConformalMap {
  public:
    explicit ConformalMap(const KernelParams& params) : params_(params) {}

    static constexpr double kPoleRadius = 1e-8;

    const KernelParams& params() const { return params_; }

    Point map(const Point& y) const;
    Point inverse(const Point& x) const;

    /// |J_phi(y)| = 2^N / |y + e1|^{2N}.
    double jacobian_det(const Point& y) const;

    /// Half-space field u pulled back to the ball:
    /// v(x) = |x + e1|^{2m-N} u(phi(x)).
    Field pullback_solution(Field u) const;

  private:
    KernelParams params_;
};

/// Weight of the transported nonlinearity h(x,t) = 2^{2m} |x+e1|^{-alpha} t^q.
class SemilinearWeight {
  public:
    explicit SemilinearWeight(const KernelParams& params) : params_(params) {}
    const KernelParams& params() const { return params_; }
    /// The x-dependent factor 2^{2m} |x+e1|^{-alpha}.
    double weight(const Point& x) const;
    double operator()(const Point& x, double t) const;

  private:
    KernelParams params_;
};

/// G_inf^+(phi(x), phi(y)) - (2/(|x+e1||y+e1|))^{2m-N} G_1(x,y); both sides
/// evaluated independently.  Zero up to roundoff for interior pairs.
double green_covariance_residual(const KernelParams& params, const Point& x,
                                 const Point& y);

}  // namespace polyharm

#endif
