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

#include "polyharm/kernels.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace polyharm {

namespace {

// Crossover between the power series (accurate near 0, where the binomial
// expansion of the closed form cancels catastrophically for m >= 2) and the
// elementary closed form.
constexpr double kProfileSeriesCutoff = 0.6;

double binomial(int n, int k) {
    double b = 1.0;
    for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
    return b;
}

// \int_0^t z^{m-1}(1+z)^{-N/2} dz as a truncated binomial series in t.
// Valid for |t| < 1; used for |t| <= kProfileSeriesCutoff.
double profile_series(double t, int m, int dim) {
    double coeff = 1.0;  // binom(-N/2, k), k = 0
    double tpow = std::pow(t, m);
    double sum = 0.0;
    for (int k = 0; k < 500; ++k) {
        const double term = coeff * tpow / (m + k);
        sum += term;
        if (std::abs(term) <= 1e-18 * std::abs(sum) + 1e-308) break;
        coeff *= (-0.5 * dim - k) / (k + 1);
        tpow *= t;
    }
    return sum;
}

// Elementary antiderivative via z^{m-1} = ((1+z) - 1)^{m-1}.
double profile_closed_form(double t, int m, int dim) {
    double sum = 0.0;
    for (int j = 0; j < m; ++j) {
        const double sign = ((m - 1 - j) % 2 == 0) ? 1.0 : -1.0;
        const double c = sign * binomial(m - 1, j);
        double term;
        if (dim == 2 * (j + 1)) {
            term = std::log1p(t);
        } else {
            const double p1 = j - 0.5 * dim + 1.0;
            term = (std::pow(1.0 + t, p1) - 1.0) / p1;
        }
        sum += c * term;
    }
    return sum;
}

// Profile on the analytic continuation range t > -1.  The public
// boggio_profile restricts to t >= 0; the extension is what finite
// differences across the boundary evaluate.
double profile_ext(double t, int m, int dim) {
    if (t == 0.0) return 0.0;
    if (std::isinf(t)) {
        if (dim > 2 * m) return std::beta(static_cast<double>(m), 0.5 * dim - m);
        throw InfiniteProfileError("boggio_profile: integral diverges at t=inf for N <= 2m");
    }
    if (t <= -0.9)
        throw std::domain_error("boggio_profile: argument beyond the analytic range");
    if (std::abs(t) <= kProfileSeriesCutoff) return profile_series(t, m, dim);
    return profile_closed_form(t, m, dim);
}

double pow_int(double base, int e) {
    if (e == 0) return 1.0;
    bool inv = e < 0;
    unsigned int n = static_cast<unsigned int>(inv ? -e : e);
    double r = 1.0, b = base;
    while (n) {
        if (n & 1u) r *= b;
        b *= b;
        n >>= 1;
    }
    return inv ? 1.0 / r : r;
}

double psi_checked(const BallGeometry& geom, const Point& x, const Point& y,
                   bool validate) {
    const double r2 = dist_sq(x, y);
    if (r2 == 0.0)
        throw CoincidentPointsError("psi: coincident evaluation points");
    if (validate) {
        if (!geom.contains_closed(x) || !geom.contains_closed(y))
            throw OutsideDomainError("psi: point outside the closed domain");
    }
    if (geom.kind() == BallGeometry::Kind::HalfSpace)
        return 4.0 * x[0] * y[0] / r2;

    const double R = geom.radius();
    if (geom.kind() == BallGeometry::Kind::Ball && R == 1.0) {
        // Share one_minus_norm_sq with the conformal map so the psi
        // invariance identity holds to roundoff near the boundary.
        return one_minus_norm_sq(x) * one_minus_norm_sq(y) / r2;
    }
    const Point c = geom.center(static_cast<int>(x.size()));
    const double dx = dist(x, c);
    const double dy = dist(y, c);
    const double sx = (R - dx) * (R + dx);
    const double sy = (R - dy) * (R + dy);
    return sx * sy / (R * R * r2);
}

}  // namespace

double normalization_constant(int order, int dim) {
    if (order < 1 || dim < 1)
        throw std::invalid_argument("normalization_constant: need m >= 1, N >= 1");
    double fact = 1.0;
    for (int i = 2; i < order; ++i) fact *= i;
    const double denom = dim * unit_ball_volume(dim) * pow_int(4.0, order - 1) * fact * fact;
    return 1.0 / denom;
}

KernelParams::KernelParams(int dim, int order, double exponent)
    : dim_(dim), order_(order), exponent_(exponent),
      k_norm_(normalization_constant(order, dim)) {
    if (dim < 1) throw std::invalid_argument("KernelParams: N >= 1 required");
    if (order < 1) throw std::invalid_argument("KernelParams: m >= 1 required");
    if (!(exponent > 1.0))
        throw std::invalid_argument("KernelParams: q > 1 required");
    if (!(k_norm_ > 0.0) || !std::isfinite(k_norm_))
        throw std::invalid_argument("KernelParams: invalid normalization");
}

double KernelParams::critical_exponent() const {
    if (dim_ <= 2 * order_) return std::numeric_limits<double>::infinity();
    return (dim_ + 2.0 * order_) / (dim_ - 2.0 * order_);
}

double psi(const KernelParams& params, const BallGeometry& geom,
           const Point& x, const Point& y) {
    if (static_cast<int>(x.size()) != params.dim() ||
        static_cast<int>(y.size()) != params.dim())
        throw std::invalid_argument("psi: point dimension mismatch");
    double v = psi_checked(geom, x, y, true);
    // Boundary points may produce a tiny negative value through rounding.
    return v < 0.0 && v > -1e-12 ? 0.0 : v;
}

double boggio_profile(double t, int order, int dim) {
    if (t < 0.0)
        throw std::invalid_argument("boggio_profile: t >= 0 required");
    return profile_ext(t, order, dim);
}

double boggio_profile(double t, const KernelParams& params) {
    return boggio_profile(t, params.order(), params.dim());
}

namespace {

double green_impl(const KernelParams& params, const BallGeometry& geom,
                  const Point& x, const Point& y, bool validate) {
    const int m = params.order();
    const int N = params.dim();
    double t = psi_checked(geom, x, y, validate);
    if (validate && t < 0.0) t = 0.0;
    const double profile = profile_ext(t, m, N);
    double pre = 1.0;
    if (2 * m != N) pre = std::pow(dist(x, y), 2.0 * m - N);
    return 0.5 * params.normalization() * pre * profile;
}

}  // namespace

double green(const KernelParams& params, const BallGeometry& geom,
             const Point& x, const Point& y) {
    return green_impl(params, geom, x, y, true);
}

double green_extended(const KernelParams& params, const BallGeometry& geom,
                      const Point& x, const Point& y) {
    return green_impl(params, geom, x, y, false);
}

namespace {

// Nested central differences for a mixed partial D^k in y.  Recursion depth
// equals |k|; cost 2^{|k|} kernel evaluations per call.
double mixed_partial(const KernelParams& params, const BallGeometry& geom,
                     const Point& x, Point& y, std::vector<int>& k, double h) {
    int axis = -1;
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (k[i] > 0) {
            axis = static_cast<int>(i);
            break;
        }
    }
    if (axis < 0) return green_extended(params, geom, x, y);
    k[axis] -= 1;
    y[axis] += h;
    const double fp = mixed_partial(params, geom, x, y, k, h);
    y[axis] -= 2.0 * h;
    const double fm = mixed_partial(params, geom, x, y, k, h);
    y[axis] += h;
    k[axis] += 1;
    return (fp - fm) / (2.0 * h);
}

}  // namespace

double kernel_derivative(const KernelParams& params, const BallGeometry& geom,
                         const Point& x, const Point& y,
                         const std::vector<int>& multiindex) {
    if (static_cast<int>(multiindex.size()) != params.dim())
        throw std::invalid_argument("kernel_derivative: multiindex dimension mismatch");
    int total = 0;
    for (int k : multiindex) {
        if (k < 0) throw std::invalid_argument("kernel_derivative: negative multiindex entry");
        total += k;
    }
    if (total > 2 * params.order())
        throw std::invalid_argument("kernel_derivative: |k| <= 2m required");
    if (!geom.finite())
        throw std::invalid_argument("kernel_derivative: finite geometry required");
    if (total == 0) return green(params, geom, x, y);

    const double r = dist(x, y);
    const double h = std::max(1e-5, 1e-2 * r);
    // The widest stencil displaces y by |k| h per axis; keep it clear of x.
    if (2.0 * total * h * std::sqrt(static_cast<double>(params.dim())) >= 0.5 * r)
        throw StepUnderflowError("kernel_derivative: point too close to the singularity");

    Point yw = y;
    std::vector<int> kw = multiindex;
    const double coarse = mixed_partial(params, geom, x, yw, kw, h);
    const double fine = mixed_partial(params, geom, x, yw, kw, 0.5 * h);
    return (4.0 * fine - coarse) / 3.0;
}

}  // namespace polyharm
