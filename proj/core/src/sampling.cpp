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

#include "polyharm/sampling.hpp"

#include <array>
#include <stdexcept>

namespace polyharm {

namespace {

constexpr std::array<int, 10> kPrimes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29};

double radical_inverse(std::uint64_t i, int base) {
    double inv = 1.0 / base;
    double f = inv;
    double r = 0.0;
    while (i > 0) {
        r += f * static_cast<double>(i % static_cast<std::uint64_t>(base));
        i /= static_cast<std::uint64_t>(base);
        f *= inv;
    }
    return r;
}

}  // namespace

HaltonSampler::HaltonSampler(int dim, std::uint64_t seed)
    : dim_(dim), index_(1 + seed * 7919ull) {
    if (dim < 1 || dim > static_cast<int>(kPrimes.size()))
        throw std::invalid_argument("HaltonSampler: unsupported dimension");
}

Point HaltonSampler::next_unit_cube() {
    Point p(static_cast<std::size_t>(dim_));
    for (int d = 0; d < dim_; ++d) p[d] = radical_inverse(index_, kPrimes[d]);
    ++index_;
    return p;
}

Point HaltonSampler::next_unit_ball() {
    for (;;) {
        Point p = next_unit_cube();
        double s = 0.0;
        for (double& c : p) {
            c = 2.0 * c - 1.0;
            s += c * c;
        }
        if (s < 1.0) return p;
    }
}

Point HaltonSampler::next_box(const Point& lo, const Point& hi) {
    Point p = next_unit_cube();
    for (int d = 0; d < dim_; ++d) p[d] = lo[d] + (hi[d] - lo[d]) * p[d];
    return p;
}

}  // namespace polyharm
