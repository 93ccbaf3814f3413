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

#ifndef POLYHARM_MOVINGPLANE_HPP
#define POLYHARM_MOVINGPLANE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "polyharm/geometry.hpp"
#include "polyharm/kernels.hpp"

namespace polyharm {

struct GridFunction;  // defined in semilinear.hpp

/// Hyperplane {x . e = lambda} with unit e perpendicular to e1.
class ReflectionSpec {
  public:
    ReflectionSpec(Point e, double lambda);
    const Point& direction() const { return e_; }
    double lambda() const { return lambda_; }

    /// x - 2 (x.e - lambda) e; involution fixing the hyperplane.
    Point reflect(const Point& x) const;

    /// Membership predicates for the sets the inequalities quantify over.
    bool in_half_space(const Point& x) const;      // x.e > lambda
    bool in_cap(const Point& x) const;             // H_lambda intersected with B
    bool in_reflected_exterior(const Point& x) const;  // J_lambda

  private:
    Point e_;
    double lambda_;
};

Point reflect(const ReflectionSpec& spec, const Point& x);

struct InequalityReport {
    std::string inequality_id;
    long samples = 0;
    double min_margin = 0.0;
    long violations = 0;  // margins below -margin_tol
};

struct ReflectionReport {
    std::vector<InequalityReport> items;
    bool all_clean() const {
        for (const auto& r : items)
            if (r.violations > 0) return false;
        return true;
    }
    std::string to_json() const;
};

/// Samples admissible tuples with a fixed-seed low-discrepancy stream and
/// evaluates the three reflection-inequality margins for G_1:
///   refl-kernel:    G(x^l, y^l) - G(x, y^l)                     > 0
///   refl-difference:[G(x^l,y^l) - G(x,y)] - [G(x,y^l) - G(x^l,y)] > 0
///   refl-exterior:  G(x^l, y) - G(x, y)  for y in J_lambda      > 0
/// Violations are report content, never exceptions.
ReflectionReport check_reflection_inequalities(const KernelParams& params,
                                               const ReflectionSpec& spec,
                                               long n_samples, double margin_tol,
                                               std::uint64_t seed = 0);

/// Max over rotation orbits about the x1-axis of (max-min)/(1+|mean|) of the
/// field values; orbits come from the lattice metadata.
double axial_symmetry_defect(const GridFunction& field);

struct PointwiseBoundReport {
    long samples = 0;
    /// Empirical constant sup G(x,y) |x-y|^{N-1}.
    double max_ratio = 0.0;
};

/// Verifies 0 < G_1(x,y) <= c |x-y|^{1-N} by sampling the ratio.
PointwiseBoundReport kernel_pointwise_bound_check(const KernelParams& params,
                                                  long n_samples,
                                                  std::uint64_t seed = 0);

}  // namespace polyharm

#endif
