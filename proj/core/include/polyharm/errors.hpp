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

#ifndef POLYHARM_ERRORS_HPP
#define POLYHARM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polyharm {

/// Kernel evaluation was requested at x == y, where the Green function is
/// singular.  Callers that integrate across the diagonal must treat that
/// cell explicitly instead of relying on an infinite return value.
struct CoincidentPointsError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A point lies strictly outside the domain of the requested Green function.
struct OutsideDomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// The profile integral diverges (t = infinity with N <= 2m).
struct InfiniteProfileError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A finite-difference step small enough for the requested accuracy would
/// cross the kernel singularity.
struct StepUnderflowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Evaluation at (or too close to) the conformal pole -e1.
struct PoleSingularityError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Quadrature refinement budget exhausted before reaching the tolerance.
struct BudgetExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Cap range violates 0 <= a <= b <= 2R or the axis restriction on x.
struct InvalidCapRangeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A manufactured solution does not carry the Laplacian powers the
/// reconstruction formula needs.
struct MissingLaplacianPowerError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The truncated half-space volume integrals failed to be nondecreasing;
/// signals a quadrature or kernel bug, never expected for valid input.
struct NonMonotoneSequenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Radius schedule incompatible with the evaluation point (needs R > 2 x1).
struct ScheduleTooSmallError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A grid function carried negative node values where a nonnegative field
/// is required.
struct NegativeInputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Lattice nodes are too close to the conformal pole.
struct PoleProximityError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Grid function lattice lacks the rotation-orbit metadata needed for
/// axial symmetry measurements.
struct IncompatibleLatticeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// ODE trajectory escaped the blow-up cap; carries the escape time.
struct BlowUpError : std::runtime_error {
    double escape_time;
    explicit BlowUpError(double t, const std::string& what)
        : std::runtime_error(what), escape_time(t) {}
};

/// Adaptive step size underflowed.
struct StepFailureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace polyharm

#endif
