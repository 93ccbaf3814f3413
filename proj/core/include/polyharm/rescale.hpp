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

#ifndef POLYHARM_RESCALE_HPP
#define POLYHARM_RESCALE_HPP

#include <cstdint>
#include <vector>

#include "polyharm/geometry.hpp"

namespace polyharm {

/// Blow-up normalization: sup-norm M at center x0 for the operator order m
/// and growth exponent q.  The coordinate zoom is M^{(1-q)/(2m)}.
struct RescaleSpec {
    double M = 1.0;
    Point center;
    int order = 1;   // m
    double q = 2.0;

    double zoom() const;  // M^{(1-q)/(2m)}
};

/// v(y) = u(zoom * y + x0) / M.  If sup|u| = M is attained at x0 the
/// rescaled field has value +-1 at the origin.
Field rescale_field(const RescaleSpec& spec, Field u);

/// Lower-order coefficient map c_alpha with its multi-index.
struct CoefficientMap {
    std::vector<int> multiindex;
    Field values;
    int total_order() const;
};

/// Prefactor M^{(q-1)(|alpha|/(2m) - 1)}; exactly 1 at top order |alpha|=2m.
double coefficient_prefactor(const RescaleSpec& spec, int alpha_total);

/// c_bar(y) = prefactor * c(zoom * y + x0).
CoefficientMap rescale_coefficient(const RescaleSpec& spec, const CoefficientMap& c);

/// Rescaling with M1 at c1 followed by M2 at c2 equals a single rescale
/// with M = M1 M2 and center c1 + zoom(M1) c2.
RescaleSpec compose(const RescaleSpec& first, const RescaleSpec& second);

/// Half-ball shift w(z) = u(z_1 - tau, z').
Field translate_first_coordinate(Field u, double tau);

struct VanishingReport {
    int alpha_total = 0;
    double predicted_exponent = 0.0;
    double fitted_exponent = 0.0;
    std::vector<double> M_values;
    std::vector<double> sup_norms;
};

/// Sampled sup-norms of the rescaled coefficient over a box, across a
/// sequence of M values, with the fitted log-log slope against the
/// predicted exponent (q-1)(|alpha|/(2m) - 1).
VanishingReport lower_order_vanishing(const std::vector<double>& M_values,
                                      const Point& center, int order, double q,
                                      const CoefficientMap& c, const Point& box_lo,
                                      const Point& box_hi, int samples = 200,
                                      std::uint64_t seed = 0);

}  // namespace polyharm

#endif
