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

#ifndef POLYHARM_SAMPLING_HPP
#define POLYHARM_SAMPLING_HPP

#include <cstdint>

#include "polyharm/geometry.hpp"

namespace polyharm {

/// Deterministic low-discrepancy point stream (Halton bases 2,3,5,...).
/// The seed selects a fixed offset into the sequence, so runs are
/// reproducible and distinct seeds give distinct sample sets.
class HaltonSampler {
  public:
    HaltonSampler(int dim, std::uint64_t seed = 0);

    /// Next point in [0,1)^dim.
    Point next_unit_cube();
    /// Next point in the open unit ball (rejection from [-1,1]^dim).
    Point next_unit_ball();
    /// Next point in the box [lo, hi]^dim (componentwise bounds).
    Point next_box(const Point& lo, const Point& hi);

    int dim() const { return dim_; }

  private:
    int dim_;
    std::uint64_t index_;
};

}  // namespace polyharm

#endif
