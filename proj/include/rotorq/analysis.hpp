// Copyright 2026 The rotorq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Probability that an approximant's angle lands outside the correctable
// window |u| < pi/m:
//
//     p_e = 2 int_{pi/m}^{pi} rho(u) du/2pi,     rho = |psi|^2 w.r.t. du/2pi
//
// which is the same quantity as twice the mass of rho(theta - pi) on
// [0, pi(1 - 1/m)].

#pragma once

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rotorq/approximant.hpp"
#include "rotorq/code_params.hpp"
#include "rotorq/error.hpp"
#include "rotorq/parallel.hpp"
#include "rotorq/quadrature.hpp"
#include "rotorq/random.hpp"
#include "rotorq/rotor_state.hpp"
#include "rotorq/special.hpp"

namespace rotorq {

enum class PeMethod { quadrature, closed_form, asymptotic, monte_carlo };

inline std::string_view method_name(PeMethod m) {
    switch (m) {
        case PeMethod::quadrature: return "quadrature";
        case PeMethod::closed_form: return "closed_form";
        case PeMethod::asymptotic: return "asymptotic";
        case PeMethod::monte_carlo: return "monte_carlo";
    }
    return "?";
}

inline PeMethod parse_method(std::string_view s) {
    for (auto m : {PeMethod::quadrature, PeMethod::closed_form, PeMethod::asymptotic, PeMethod::monte_carlo}) {
        if (s == method_name(m)) {
            return m;
        }
    }
    throw InvalidArgument("unknown method '" + std::string(s) +
                          "' (expected quadrature, closed_form, asymptotic or monte_carlo)");
}

struct PeResult {
    double value = 0.0;
    PeMethod method = PeMethod::quadrature;
    double error_estimate = 0.0;
    /// log10 of the value, finite even where `value` underflows to 0
    /// (closed form and asymptotic); -inf when the value is exactly 0.
    double log10_value = -INFINITY;
};

namespace detail {

inline PeResult from_log(double ln_value, PeMethod method) {
    PeResult r;
    r.method = method;
    r.log10_value = ln_value / std::numbers::ln10;
    r.value = std::exp(ln_value);
    if (r.value == 0.0 || r.value < DBL_MIN) {
        // Deep tail: the value is below the normal range. Report 0 and
        // bound the error by the underflow threshold.
        r.value = 0.0;
        r.error_estimate = DBL_MIN;
    } else {
        r.error_estimate = 4.0 * DBL_EPSILON * r.value;
    }
    return r;
}

inline double safe_log10(double v) {
    return v > 0.0 ? std::log10(v) : -INFINITY;
}

}  // namespace detail

inline double pe_pure_guess(const CodeParams &params) {
    return 1.0 - 1.0 / static_cast<double>(params.m());
}

/// Adaptive quadrature of the tail mass, absolute tolerance 1e-10.
inline PeResult pe_quadrature(const Approximant &approx, const CodeParams &params, quad::Options opt = {}) {
    const Profile prof(approx);
    const double lo = params.angle_bound();
    const double hi = std::numbers::pi;
    // The integrand carries a factor 2/2pi; tighten the tolerance on the
    // raw integral accordingly.
    auto raw = opt;
    raw.abs_tol = opt.abs_tol * std::numbers::pi;
    const auto r = quad::integrate_or_throw([&prof](double u) { return prof.density(u); }, lo, hi,
                                            prof.peak_breakpoints(lo, hi), raw, "pe_quadrature");
    PeResult out;
    out.method = PeMethod::quadrature;
    out.value = std::clamp(r.value / std::numbers::pi, 0.0, 1.0);
    out.error_estimate = r.abs_error / std::numbers::pi;
    out.log10_value = detail::safe_log10(out.value);
    return out;
}

/// Truncated Gaussian: p_e = 1 - erf(pi xi/m) / erf(pi xi), evaluated in log
/// space as (erf(pi xi) - erf(pi xi/m)) / erf(pi xi).
inline PeResult pe_closed_form(double xi, const CodeParams &params) {
    if (!(std::isfinite(xi) && xi > 0.0)) {
        throw InvalidArgument("pe_closed_form: xi must be a positive finite number");
    }
    const double b = std::numbers::pi * xi;
    const double a = b / static_cast<double>(params.m());
    const double ln = special::log_erf_difference(a, b) - std::log(std::erf(b));
    return detail::from_log(std::min(ln, 0.0), PeMethod::closed_form);
}

/// Large-xi behaviour m exp(-(pi xi/m)^2) / (pi^(3/2) xi).
inline PeResult pe_asymptotic(double xi, const CodeParams &params) {
    if (!(std::isfinite(xi) && xi > 0.0)) {
        throw InvalidArgument("pe_asymptotic: xi must be a positive finite number");
    }
    const double m = static_cast<double>(params.m());
    const double x = std::numbers::pi * xi / m;
    const double ln = std::log(m) - x * x - 1.5 * std::log(std::numbers::pi) - std::log(xi);
    auto r = detail::from_log(ln, PeMethod::asymptotic);
    // The expression is a scaling law, not a probability; keep it raw.
    if (r.value > 0.0) {
        r.error_estimate = 0.0;
    }
    return r;
}

/// Sample u from the approximant centered at pi and count readings whose
/// distance from pi exceeds pi/m. The density is tabulated on `resolution`
/// points and sampled by piecewise-linear inverse CDF.
inline PeResult pe_monte_carlo(const Approximant &approx, const CodeParams &params, int trials, Rng &rng,
                               int resolution = 1 << 16) {
    if (trials < 100) {
        throw InvalidArgument("pe_monte_carlo: trials must be >= 100");
    }
    if (resolution < 16) {
        throw InvalidArgument("pe_monte_carlo: resolution must be >= 16");
    }
    const Profile prof(approx);
    AngleGrid g;
    g.points.resize(static_cast<std::size_t>(resolution));
    g.densities.resize(static_cast<std::size_t>(resolution));
    for (int i = 0; i < resolution; ++i) {
        const double theta = -std::numbers::pi + kTwoPi * i / resolution;
        g.points[static_cast<std::size_t>(i)] = theta;
        g.densities[static_cast<std::size_t>(i)] = prof.density(theta - std::numbers::pi);
    }
    const AngleSampler sampler(std::move(g));
    const double bound = params.angle_bound();
    long long fails = 0;
    for (int t = 0; t < trials; ++t) {
        const double theta = sampler.sample(rng);
        if (std::abs(reduce_angle(theta - std::numbers::pi)) > bound) {
            ++fails;
        }
    }
    PeResult out;
    out.method = PeMethod::monte_carlo;
    out.value = static_cast<double>(fails) / trials;
    out.error_estimate = std::sqrt(out.value * (1.0 - out.value) / trials);
    out.log10_value = detail::safe_log10(out.value);
    return out;
}

inline PeResult pe_monte_carlo(const Approximant &approx, const CodeParams &params, int trials, std::uint64_t seed) {
    Rng rng = make_rng(seed);
    return pe_monte_carlo(approx, params, trials, rng);
}

// ---------------------------------------------------------------------------
// Sweeps

struct SweepSpec {
    Family family = Family::TruncatedGaussian;
    CodeParams params{2, 1, 0};
    std::vector<double> grid;
    std::vector<PeMethod> methods{PeMethod::quadrature};
    /// Monte Carlo only.
    int trials = 100000;
    std::optional<std::uint64_t> seed;
    unsigned threads = 0;
};

struct SweepRow {
    Family family;
    CodeParams params;
    double parameter;
    PeMethod method;
    PeResult result;
    /// Seed of the Monte Carlo stream behind this row.
    std::optional<std::uint64_t> seed;
};

/// Evaluate every grid point with every method. Rows come out sorted by
/// parameter, then in the order the methods were given.
inline std::vector<SweepRow> sweep(const SweepSpec &spec) {
    if (spec.grid.empty()) {
        throw InvalidArgument("sweep: empty grid");
    }
    if (spec.methods.empty()) {
        throw InvalidArgument("sweep: no methods requested");
    }
    for (std::size_t i = 1; i < spec.grid.size(); ++i) {
        if (!(spec.grid[i] > spec.grid[i - 1])) {
            throw InvalidArgument("sweep: grid must be strictly increasing");
        }
    }
    for (auto m : spec.methods) {
        const bool gaussian_only = m == PeMethod::closed_form || m == PeMethod::asymptotic;
        if (gaussian_only && spec.family != Family::TruncatedGaussian) {
            throw InvalidArgument("sweep: method " + std::string(method_name(m)) +
                                  " exists only for the trunc-gauss family");
        }
        if (m == PeMethod::monte_carlo && !spec.seed) {
            throw InvalidArgument("sweep: monte_carlo requires a seed");
        }
    }
    // Validate every parameter up front so errors do not surface from a worker.
    for (double p : spec.grid) {
        (void)Approximant(spec.family, p);
    }
    const std::size_t nm = spec.methods.size();
    std::vector<SweepRow> rows(spec.grid.size() * nm, SweepRow{spec.family, spec.params, 0.0, PeMethod::quadrature,
                                                                {}, std::nullopt});
    parallel_for(
        rows.size(),
        [&](std::size_t i) {
            const std::size_t gi = i / nm;
            const PeMethod method = spec.methods[i % nm];
            const double p = spec.grid[gi];
            const Approximant a(spec.family, p);
            SweepRow row{spec.family, spec.params, p, method, {}, std::nullopt};
            switch (method) {
                case PeMethod::quadrature: row.result = pe_quadrature(a, spec.params); break;
                case PeMethod::closed_form: row.result = pe_closed_form(p, spec.params); break;
                case PeMethod::asymptotic: row.result = pe_asymptotic(p, spec.params); break;
                case PeMethod::monte_carlo: {
                    Rng rng = make_rng(*spec.seed, gi);
                    row.result = pe_monte_carlo(a, spec.params, spec.trials, rng);
                    row.seed = spec.seed;
                    break;
                }
            }
            rows[i] = row;
        },
        spec.threads);
    return rows;
}

}  // namespace rotorq
