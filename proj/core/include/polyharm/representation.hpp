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

#ifndef POLYHARM_REPRESENTATION_HPP
#define POLYHARM_REPRESENTATION_HPP

#include <string>
#include <vector>

#include "polyharm/geometry.hpp"
#include "polyharm/kernels.hpp"
#include "polyharm/quadrature.hpp"

namespace polyharm {

/// A field with caller-supplied iterated Laplacians, used to exercise the
/// Green-Poisson reconstruction without a second numerical differentiation
/// layer.  laplacians[i] evaluates Delta^i v for i = 0..m, and source is
/// (-Delta)^m v.
struct ManufacturedSolution {
    std::string descriptor;
    int order = 1;  // m
    int dim = 1;    // N
    /// Degree of the solid-harmonic factor (0 = radial field).
    int harmonic_degree = 0;
    /// True when v and its normal derivatives through order m-1 vanish on
    /// the unit sphere, making every boundary term of the formula vanish.
    bool dirichlet = false;
    std::vector<Field> laplacians;
    Field source;

    const Field& v() const { return laplacians.at(0); }
};

/// Registry of manufactured solutions on the unit ball.  Known descriptors:
///   bubble          (1-|x|^2)^m
///   bubble-plus     (1-|x|^2)^{m+1}
///   bubble-axial    (1-|x|^2)^m x_1
///   bubble-gauss    (1-|x|^2)^m exp(-|x|^2)
///   harmonic-axial  x_1
///   harmonic-xy     x_1 x_2          (N >= 2)
/// All iterated Laplacians are exact (symbolic radial-polynomial algebra).
ManufacturedSolution make_manufactured(const std::string& descriptor, int order, int dim);
std::vector<std::string> manufactured_descriptors();

/// Source constant of the bubble field: (-Delta)^m (1-|x|^2)^m is the
/// constant 2^m m! prod_{j=0}^{m-1} (N + 2j).
double bubble_source_constant(int order, int dim);

/// Numerical check of the Dirichlet-compatibility flag: samples boundary
/// points and verifies v and its radial derivatives through order m-1
/// vanish within tol.
bool check_dirichlet_flag(const ManufacturedSolution& ms, int samples = 100,
                          double tol = 1e-8);

struct ReconstructionBreakdown {
    double boundary_sum = 0.0;   // signed sum of the paired boundary terms
    double middle_term = 0.0;    // odd-m middle boundary term
    bool middle_evaluated = false;
    double volume_term = 0.0;
    double value = 0.0;
};

/// Green-Poisson reconstruction of ms.v at an interior point x of the
/// centered ball described by geom.  Boundary derivatives of the kernel are
/// nested central differences with one Richardson extrapolation; the
/// even/odd-m formulas dispatch structurally (the odd middle term is never
/// touched for even m and vice versa).
ReconstructionBreakdown green_poisson_reconstruct_detailed(
    const ManufacturedSolution& ms, const BallGeometry& geom, const Point& x,
    const QuadratureSpec& spec);

double green_poisson_reconstruct(const ManufacturedSolution& ms,
                                 const BallGeometry& geom, const Point& x,
                                 const QuadratureSpec& spec);

/// Bounded half-space field with enough derivative data for the truncated
/// representation and its boundary estimates.  laplacians[i] = Delta^i u.
struct HalfSpaceFieldPack {
    std::string descriptor;
    int order = 1;  // m
    int dim = 1;    // N
    /// (-Delta)^m u, nonnegative on the half-space.
    Field source;
    std::vector<Field> laplacians;
    /// True when the source is rotationally symmetric about the first axis,
    /// enabling the aligned angular rule.
    bool axisymmetric_about_e1 = false;
};

struct HalfSpaceRepresentation {
    std::vector<double> radii;
    /// Truncated volume integrals over B_R^+, nondecreasing in R.
    std::vector<double> truncated;
    /// Cap-based boundary discrepancy estimates (constants not pinned).
    std::vector<double> tail_bounds;
    double value = 0.0;  // largest-R truncated integral
};

/// Monotone truncated representation of u at an axis point x = (x_1, 0...)
/// over an increasing radius schedule (each R > 2 x_1).  The strip width
/// delta feeds the epsilon-split of the boundary estimate.  Throws
/// NonMonotoneSequenceError if the sequence decreases beyond 1e-10 slack.
HalfSpaceRepresentation halfspace_representation(
    const HalfSpaceFieldPack& pack, const Point& x,
    const std::vector<double>& radius_schedule, const QuadratureSpec& spec,
    double delta = 1e-3);

/// Geometric default schedule {4 x_1, 8 x_1, ..., 1024 x_1}.
std::vector<double> default_radius_schedule(double x1);

/// Sampled sup over the strip {0 <= y_1 <= delta, |y_j| <= extent} of
/// sum_i (|Delta^i u| + |grad Delta^i u|) for the orders entering the
/// boundary terms of the order-m formula.
double boundary_smallness_profile(const HalfSpaceFieldPack& pack, double delta,
                                  double transverse_extent, int samples = 1000);

/// Manifest entries for the manufactured-solution corpus.
struct CorpusEntry {
    std::string descriptor;
    int order;
    int dim;
};

std::vector<CorpusEntry> load_corpus_manifest(const std::string& path);
void save_corpus_manifest(const std::string& path,
                          const std::vector<CorpusEntry>& entries);

}  // namespace polyharm

#endif
