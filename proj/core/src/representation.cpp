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

#include "polyharm/representation.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "polyharm/sampling.hpp"

namespace polyharm {

// ---------------------------------------------------------------------------
// Symbolic fields Y_l(x) g(|x|^2) with g(s) = p(s) + q(s) e^{-s}.
// The iterated Laplacian stays in this ring:
//   Delta(Y_l g(s)) = Y_l (4 s g'' + (2N + 4 l) g').
// ---------------------------------------------------------------------------
namespace {

using Poly = std::vector<double>;  // coefficients in s, ascending

Poly poly_deriv(const Poly& p) {
    if (p.size() <= 1) return {};
    Poly d(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<double>(i);
    return d;
}

Poly poly_shift_mul_s(const Poly& p) {  // s * p(s)
    if (p.empty()) return {};
    Poly r(p.size() + 1, 0.0);
    for (std::size_t i = 0; i < p.size(); ++i) r[i + 1] = p[i];
    return r;
}

Poly poly_axpy(double a, const Poly& x, const Poly& y) {  // a*x + y
    Poly r = y;
    if (r.size() < x.size()) r.resize(x.size(), 0.0);
    for (std::size_t i = 0; i < x.size(); ++i) r[i] += a * x[i];
    return r;
}

double poly_eval(const Poly& p, double s) {
    double v = 0.0;
    for (std::size_t i = p.size(); i-- > 0;) v = v * s + p[i];
    return v;
}

Poly poly_one_minus_s_pow(int k) {  // (1-s)^k
    Poly r{1.0};
    for (int j = 0; j < k; ++j) {
        Poly next(r.size() + 1, 0.0);
        for (std::size_t i = 0; i < r.size(); ++i) {
            next[i] += r[i];
            next[i + 1] -= r[i];
        }
        r = next;
    }
    return r;
}

struct RadialProfile {
    Poly p;  // polynomial part
    Poly q;  // coefficient of e^{-s}

    double eval(double s) const {
        double v = poly_eval(p, s);
        if (!q.empty()) v += poly_eval(q, s) * std::exp(-s);
        return v;
    }
    RadialProfile deriv() const {
        // (q e^{-s})' = (q' - q) e^{-s}
        return {poly_deriv(p), poly_axpy(-1.0, q, poly_deriv(q))};
    }
};

RadialProfile radial_laplacian(const RadialProfile& g, int dim, int harmonic_degree) {
    const RadialProfile g1 = g.deriv();
    const RadialProfile g2 = g1.deriv();
    const double c = 2.0 * dim + 4.0 * harmonic_degree;
    RadialProfile out;
    out.p = poly_axpy(4.0, poly_shift_mul_s(g2.p), poly_axpy(c, g1.p, {}));
    out.q = poly_axpy(4.0, poly_shift_mul_s(g2.q), poly_axpy(c, g1.q, {}));
    return out;
}

double harmonic_factor(int degree, const Point& x) {
    switch (degree) {
        case 0: return 1.0;
        case 1: return x[0];
        case 2: return x[0] * x[1];
        default: throw std::invalid_argument("manufactured: unsupported harmonic degree");
    }
}

Field make_symbolic_field(const RadialProfile& g, int degree) {
    return [g, degree](const Point& x) {
        return harmonic_factor(degree, x) * g.eval(norm_sq(x));
    };
}

}  // namespace

std::vector<std::string> manufactured_descriptors() {
    return {"bubble", "bubble-plus", "bubble-axial", "bubble-gauss",
            "harmonic-axial", "harmonic-xy"};
}

double bubble_source_constant(int order, int dim) {
    double c = 1.0;
    for (int j = 0; j < order; ++j) c *= 2.0 * (j + 1) * (dim + 2.0 * j);
    return c;
}

ManufacturedSolution make_manufactured(const std::string& descriptor, int order, int dim) {
    if (order < 1 || dim < 1)
        throw std::invalid_argument("make_manufactured: m >= 1, N >= 1 required");
    RadialProfile g;
    int degree = 0;
    bool dirichlet = true;
    if (descriptor == "bubble") {
        g.p = poly_one_minus_s_pow(order);
    } else if (descriptor == "bubble-plus") {
        g.p = poly_one_minus_s_pow(order + 1);
    } else if (descriptor == "bubble-axial") {
        g.p = poly_one_minus_s_pow(order);
        degree = 1;
    } else if (descriptor == "bubble-gauss") {
        g.q = poly_one_minus_s_pow(order);
    } else if (descriptor == "harmonic-axial") {
        g.p = {1.0};
        degree = 1;
        dirichlet = false;
    } else if (descriptor == "harmonic-xy") {
        if (dim < 2) throw std::invalid_argument("harmonic-xy needs N >= 2");
        g.p = {1.0};
        degree = 2;
        dirichlet = false;
    } else {
        throw std::invalid_argument("make_manufactured: unknown descriptor " + descriptor);
    }

    ManufacturedSolution ms;
    ms.descriptor = descriptor;
    ms.order = order;
    ms.dim = dim;
    ms.harmonic_degree = degree;
    ms.dirichlet = dirichlet;
    RadialProfile cur = g;
    for (int i = 0; i <= order; ++i) {
        ms.laplacians.push_back(make_symbolic_field(cur, degree));
        cur = radial_laplacian(cur, dim, degree);
    }
    const double sign = (order % 2 == 0) ? 1.0 : -1.0;
    const Field top = ms.laplacians.back();
    ms.source = [sign, top](const Point& x) { return sign * top(x); };
    return ms;
}

bool check_dirichlet_flag(const ManufacturedSolution& ms, int samples, double tol) {
    HaltonSampler sampler(ms.dim, 17);
    const double h = 1e-3;
    for (int s = 0; s < samples; ++s) {
        Point d = sampler.next_unit_ball();
        const double n = norm(d);
        if (n < 1e-6) continue;
        for (double& c : d) c /= n;
        // k-th radial derivative of t -> v(t d) at t = 1, k = 0..m-1, by a
        // centered k-th difference with one Richardson extrapolation.
        const auto kth_diff = [&](int k, double step) {
            double acc = 0.0;
            for (int j = 0; j <= k; ++j) {
                double binom = 1.0;
                for (int t = 0; t < j; ++t) binom = binom * (k - t) / (t + 1);
                const double tpos = 1.0 + (0.5 * k - j) * step;
                acc += ((j % 2 == 0) ? 1.0 : -1.0) * binom * ms.v()(scale(tpos, d));
            }
            return acc / std::pow(step, k);
        };
        for (int k = 0; k < ms.order; ++k) {
            const double est = (4.0 * kth_diff(k, 0.5 * h) - kth_diff(k, h)) / 3.0;
            if (std::abs(est) > tol) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Kernel boundary derivatives by nested central differences.
// ---------------------------------------------------------------------------
namespace {

using ScalarField = std::function<double(const Point&)>;

// Iterated Laplacian Delta^j f at y0 with step h; one memoized evaluation
// tree over the integer offset lattice.
class IteratedLaplacian {
  public:
    IteratedLaplacian(const ScalarField& f, const Point& y0, double h)
        : f_(f), y0_(y0), h_(h), dim_(static_cast<int>(y0.size())) {}

    double eval(int j) {
        std::vector<int> offsets(static_cast<std::size_t>(dim_), 0);
        return rec(offsets, j);
    }

  private:
    double rec(std::vector<int>& off, int j) {
        const auto key = std::make_pair(j, off);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        double value;
        if (j == 0) {
            Point y = y0_;
            for (int c = 0; c < dim_; ++c) y[c] += h_ * off[c];
            value = f_(y);
        } else {
            double acc = -2.0 * dim_ * rec(off, j - 1);
            for (int c = 0; c < dim_; ++c) {
                off[c] += 1;
                acc += rec(off, j - 1);
                off[c] -= 2;
                acc += rec(off, j - 1);
                off[c] += 1;
            }
            value = acc / (h_ * h_);
        }
        memo_.emplace(key, value);
        return value;
    }

    const ScalarField& f_;
    Point y0_;
    double h_;
    int dim_;
    std::map<std::pair<int, std::vector<int>>, double> memo_;
};

double laplacian_pow_fd(const ScalarField& f, const Point& y0, int j, double h) {
    if (j == 0) return f(y0);
    IteratedLaplacian coarse(f, y0, h);
    IteratedLaplacian fine(f, y0, 0.5 * h);
    return (4.0 * fine.eval(j) - coarse.eval(j)) / 3.0;
}

// d/dc Delta^j f (y0 + c nu) at c = 0, Richardson-extrapolated.
double normal_deriv_laplacian_pow_fd(const ScalarField& f, const Point& y0,
                                     const Point& nu, int j, double h) {
    const auto at = [&](double c) {
        return laplacian_pow_fd(f, axpy(y0, c, nu), j, h);
    };
    const double d1 = (at(h) - at(-h)) / (2.0 * h);
    const double d2 = (at(0.5 * h) - at(-0.5 * h)) / h;
    return (4.0 * d2 - d1) / 3.0;
}

// Richardson-extrapolated radial derivative of a manufactured field.
double directional_deriv(const Field& f, const Point& y0, const Point& nu, double h) {
    const auto at = [&](double c) { return f(axpy(y0, c, nu)); };
    const double d1 = (at(h) - at(-h)) / (2.0 * h);
    const double d2 = (at(0.5 * h) - at(-0.5 * h)) / h;
    return (4.0 * d2 - d1) / 3.0;
}

}  // namespace

ReconstructionBreakdown green_poisson_reconstruct_detailed(
    const ManufacturedSolution& ms, const BallGeometry& geom, const Point& x,
    const QuadratureSpec& spec) {
    if (geom.kind() != BallGeometry::Kind::Ball)
        throw std::invalid_argument("green_poisson_reconstruct: centered finite ball required");
    const int m = ms.order;
    const int N = ms.dim;
    if (static_cast<int>(ms.laplacians.size()) < m + 1)
        throw MissingLaplacianPowerError("manufactured solution lacks Delta^i v up to i=m");
    const KernelParams params(N, m, 2.0);
    const double R = geom.radius();
    if (!(norm(x) < R))
        throw OutsideDomainError("green_poisson_reconstruct: x must be interior");

    ReconstructionBreakdown out;

    // Volume term \int_B G(x,y) (-Delta)^m v(y) dy (skip zero sources fast).
    const Field volume_integrand = [&](const Point& y) {
        const double s = ms.source(y);
        if (s == 0.0) return 0.0;
        return green_extended(params, geom, x, y) * s;
    };
    QuadratureSpec vspec = spec;
    if (ms.harmonic_degree == 0 && norm(x) > 1e-12) vspec.symmetry_axis = x;
    out.volume_term = integrate_ball(volume_integrand, N, geom, vspec, x).value;

    // Boundary terms; every integrand evaluates kernel derivatives only when
    // the field factor is nonzero, so Dirichlet-compatible fields skip the
    // expensive finite-difference stencils entirely.
    const ScalarField gk = [&](const Point& y) {
        return green_extended(params, geom, x, y);
    };
    const auto fd_step = [&](const Point& y) {
        const double r = dist(x, y);
        return 0.004 * R * std::clamp(r / R, 0.4, 1.5);
    };
    const double hv = 1e-3 * R;

    QuadratureSpec bspec = spec;
    bspec.symmetry_axis.reset();
    const Point origin(static_cast<std::size_t>(N), 0.0);

    const auto boundary_pair_term = [&](int i) {
        // \oint ( Delta^{i-1} v  d_nu Delta^{m-i} G - Delta^{m-i} G  d_nu Delta^{i-1} v ) ds
        const Field integrand = [&, i](const Point& y) {
            Point nu = scale(1.0 / norm(y), y);
            const double vi = ms.laplacians[static_cast<std::size_t>(i - 1)](y);
            const double dvi = directional_deriv(ms.laplacians[static_cast<std::size_t>(i - 1)], y, nu, hv);
            if (vi == 0.0 && dvi == 0.0) return 0.0;
            const double h = fd_step(y);
            double term = 0.0;
            if (vi != 0.0)
                term += vi * normal_deriv_laplacian_pow_fd(gk, y, nu, m - i, h);
            if (dvi != 0.0)
                term -= laplacian_pow_fd(gk, y, m - i, h) * dvi;
            return term;
        };
        return sphere_integral(integrand, origin, R, bspec).value;
    };

    if (m % 2 == 0) {
        for (int i = 1; i <= m / 2; ++i) out.boundary_sum += boundary_pair_term(i);
        out.middle_evaluated = false;
    } else {
        for (int i = 1; i <= (m - 1) / 2; ++i) out.boundary_sum -= boundary_pair_term(i);
        const int half = (m - 1) / 2;
        const Field middle = [&](const Point& y) {
            const double vi = ms.laplacians[static_cast<std::size_t>(half)](y);
            if (vi == 0.0) return 0.0;
            Point nu = scale(1.0 / norm(y), y);
            return vi * normal_deriv_laplacian_pow_fd(gk, y, nu, half, fd_step(y));
        };
        out.middle_term = -sphere_integral(middle, origin, R, bspec).value;
        out.middle_evaluated = true;
    }

    out.value = out.boundary_sum + out.middle_term + out.volume_term;
    return out;
}

double green_poisson_reconstruct(const ManufacturedSolution& ms,
                                 const BallGeometry& geom, const Point& x,
                                 const QuadratureSpec& spec) {
    return green_poisson_reconstruct_detailed(ms, geom, x, spec).value;
}

std::vector<double> default_radius_schedule(double x1) {
    std::vector<double> r;
    for (double f = 4.0; f <= 1024.0; f *= 2.0) r.push_back(f * x1);
    return r;
}

double boundary_smallness_profile(const HalfSpaceFieldPack& pack, double delta,
                                  double transverse_extent, int samples) {
    if (!(delta > 0.0))
        throw std::invalid_argument("boundary_smallness_profile: delta > 0 required");
    const int m = pack.order;
    const int N = pack.dim;
    const int n_lap = (m % 2 == 0) ? m / 2 - 1 : (m - 1) / 2;
    const int n_grad = (m % 2 == 0) ? m / 2 - 1 : (m - 3) / 2;
    if (static_cast<int>(pack.laplacians.size()) <= std::max(n_lap, n_grad))
        throw MissingLaplacianPowerError("field pack lacks Delta^i u for the boundary profile");

    HaltonSampler sampler(N, 11);
    Point lo(static_cast<std::size_t>(N), -transverse_extent);
    Point hi(static_cast<std::size_t>(N), transverse_extent);
    lo[0] = 0.0;
    hi[0] = delta;
    const double hg = 1e-4 * std::max(1.0, delta);
    double sup = 0.0;
    for (int s = 0; s < samples; ++s) {
        const Point y = sampler.next_box(lo, hi);
        double acc = 0.0;
        for (int i = 0; i <= n_lap; ++i)
            acc += std::abs(pack.laplacians[static_cast<std::size_t>(i)](y));
        for (int i = 0; i <= n_grad; ++i) {
            double g2 = 0.0;
            for (int c = 0; c < N; ++c) {
                const Point e = unit_vector(N, c);
                const double d = directional_deriv(
                    pack.laplacians[static_cast<std::size_t>(i)], y, e, hg);
                g2 += d * d;
            }
            acc += std::sqrt(g2);
        }
        sup = std::max(sup, acc);
    }
    return sup;
}

HalfSpaceRepresentation halfspace_representation(
    const HalfSpaceFieldPack& pack, const Point& x,
    const std::vector<double>& radius_schedule, const QuadratureSpec& spec,
    double delta) {
    const int N = pack.dim;
    if (static_cast<int>(x.size()) != N)
        throw std::invalid_argument("halfspace_representation: dimension mismatch");
    const double x1 = x[0];
    if (!(x1 > 0.0))
        throw std::invalid_argument("halfspace_representation: x_1 > 0 required");
    for (int i = 1; i < N; ++i)
        if (std::abs(x[i]) > 1e-12)
            throw std::invalid_argument("halfspace_representation: x must lie on the first axis");
    if (radius_schedule.empty())
        throw ScheduleTooSmallError("halfspace_representation: empty schedule");
    for (std::size_t i = 0; i < radius_schedule.size(); ++i) {
        if (radius_schedule[i] <= 2.0 * x1)
            throw ScheduleTooSmallError("halfspace_representation: need R > 2 x_1");
        if (i > 0 && radius_schedule[i] <= radius_schedule[i - 1])
            throw std::invalid_argument("halfspace_representation: schedule must increase");
    }

    const KernelParams params(N, pack.order, 2.0);
    HalfSpaceRepresentation rep;
    const double s_small = boundary_smallness_profile(pack, delta, 2.0 * radius_schedule.back());
    const double s_glob = boundary_smallness_profile(
        pack, std::max(1.0, 2.0 * radius_schedule.back()), 2.0 * radius_schedule.back());

    for (const double R : radius_schedule) {
        const BallGeometry geom = BallGeometry::shifted_ball(R);
        const Field integrand = [&](const Point& y) {
            const double s = pack.source(y);
            if (s == 0.0) return 0.0;
            return green_extended(params, geom, x, y) * s;
        };
        QuadratureSpec vspec = spec;
        if (pack.axisymmetric_about_e1) vspec.symmetry_axis = unit_vector(N, 0);
        const double truncated = integrate_ball(integrand, N, geom, vspec, x).value;

        double tail = 0.0;
        if (N >= 2) {
            const double d = std::min(delta, 2.0 * R);
            tail = s_small * cap_surface_integral({0.0, d, R}, x, spec);
            if (d < 2.0 * R)
                tail += s_glob * cap_surface_integral({d, 2.0 * R, R}, x, spec);
        }
        rep.radii.push_back(R);
        rep.truncated.push_back(truncated);
        rep.tail_bounds.push_back(tail);
    }

    for (std::size_t i = 1; i < rep.truncated.size(); ++i) {
        if (rep.truncated[i] < rep.truncated[i - 1] - 1e-10)
            throw NonMonotoneSequenceError("halfspace_representation: truncated integrals decreased");
    }
    rep.value = rep.truncated.back();
    return rep;
}

std::vector<CorpusEntry> load_corpus_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open corpus manifest: " + path);
    nlohmann::json j;
    in >> j;
    std::vector<CorpusEntry> entries;
    for (const auto& item : j.at("fields")) {
        entries.push_back({item.at("descriptor").get<std::string>(),
                           item.at("m").get<int>(), item.at("N").get<int>()});
    }
    return entries;
}

void save_corpus_manifest(const std::string& path,
                          const std::vector<CorpusEntry>& entries) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["fields"] = nlohmann::ordered_json::array();
    for (const auto& e : entries)
        j["fields"].push_back({{"descriptor", e.descriptor}, {"m", e.order}, {"N", e.dim}});
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write corpus manifest: " + path);
    out << j.dump(2) << "\n";
}

}  // namespace polyharm
