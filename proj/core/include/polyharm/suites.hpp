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

#ifndef POLYHARM_SUITES_HPP
#define POLYHARM_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "polyharm/kernels.hpp"

namespace polyharm {

struct SuiteCase {
    std::string name;
    bool pass = false;
    /// Distance to the failure threshold; positive margins are healthy.
    double margin = 0.0;
    std::string details;
};

struct SuiteReport {
    std::string suite;
    std::vector<SuiteCase> cases;

    int passed() const;
    int failed() const;
    bool all_pass() const { return failed() == 0; }
    /// Deterministic JSON body; volatile metadata (timestamp) lives in a
    /// separate field the caller may strip before comparison.
    std::string to_json(std::uint64_t seed, const std::string& timestamp) const;
};

struct SuiteOptions {
    long samples = 2000;
    std::uint64_t seed = 0;
};

SuiteReport run_kernels_suite(const KernelParams& params, const SuiteOptions& opts);
SuiteReport run_conformal_suite(const KernelParams& params, const SuiteOptions& opts);
SuiteReport run_quadrature_suite(const KernelParams& params, const SuiteOptions& opts);
SuiteReport run_representation_suite(const KernelParams& params, const SuiteOptions& opts);
SuiteReport run_movingplane_suite(const KernelParams& params, const SuiteOptions& opts);
SuiteReport run_semilinear_suite(const KernelParams& params, const SuiteOptions& opts);
SuiteReport run_ode1d_suite(const KernelParams& params, const SuiteOptions& opts);
SuiteReport run_rescale_suite(const KernelParams& params, const SuiteOptions& opts);

std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name, const KernelParams& params,
                      const SuiteOptions& opts);

}  // namespace polyharm

#endif
