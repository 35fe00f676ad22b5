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

// Normalizable stand-ins for the angular eigenstate |theta = 0>.
//
// With u = theta - theta0 reduced to [-pi, pi) and densities taken w.r.t.
// du/2pi, the four families are
//
//   trunc-gauss  psi(u) = xi sqrt(2 pi / C) exp(-xi^2 u^2 / 2),   C = xi sqrt(pi) erf(pi xi)
//   cos-power    psi(u) = 2 pi / sqrt(C) cos^gamma(u/2),         C = 4 pi^(3/2) G(gamma+1/2)/G(gamma+1)
//   gauss-env    psi(u) = sum_l exp(-l^2 / 2 sigma^2) e^{i l u} / sqrt(C),  C = sum_l exp(-l^2/sigma^2)
//   grating      psi(u) = sum_{|l| <= L} e^{i l u} / sqrt(2L + 1)
//
// All four are real and even in u, so their Fourier coefficients are real
// and even in l.

#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "rotorq/code_params.hpp"
#include "rotorq/error.hpp"
#include "rotorq/quadrature.hpp"
#include "rotorq/rotor_state.hpp"

namespace rotorq {

enum class Family { TruncatedGaussian, CosinePower, GaussianEnvelope, Grating };

inline std::string_view family_name(Family f) {
    switch (f) {
        case Family::TruncatedGaussian: return "trunc-gauss";
        case Family::CosinePower: return "cos-power";
        case Family::GaussianEnvelope: return "gauss-env";
        case Family::Grating: return "grating";
    }
    return "?";
}

/// Name of the family's parameter: xi, gamma, sigma or L_M.
inline std::string_view parameter_name(Family f) {
    switch (f) {
        case Family::TruncatedGaussian: return "xi";
        case Family::CosinePower: return "gamma";
        case Family::GaussianEnvelope: return "sigma";
        case Family::Grating: return "L_M";
    }
    return "?";
}

inline Family parse_family(std::string_view s) {
    for (auto f : {Family::TruncatedGaussian, Family::CosinePower, Family::GaussianEnvelope, Family::Grating}) {
        if (s == family_name(f)) {
            return f;
        }
    }
    throw InvalidArgument("unknown approximant family '" + std::string(s) +
                          "' (expected trunc-gauss, cos-power, gauss-env or grating)");
}

struct Approximant {
    Family family;
    double parameter;

    Approximant(Family f, double p) : family(f), parameter(p) {
        if (!(std::isfinite(p) && p > 0.0)) {
            std::ostringstream msg;
            msg << "Approximant: " << parameter_name(f) << " must be a positive finite number, got " << p;
            throw InvalidArgument(msg.str());
        }
        if (f == Family::Grating && (p != std::floor(p) || p > 1e9)) {
            std::ostringstream msg;
            msg << "Approximant: grating L_M must be a positive integer, got " << p;
            throw InvalidArgument(msg.str());
        }
    }

    Ell grating_L() const {
        return static_cast<Ell>(parameter);
    }

    std::string describe() const {
        std::ostringstream s;
        s << family_name(family) << "(" << parameter_name(family) << "=" << parameter << ")";
        return s.str();
    }

    friend bool operator==(const Approximant &, const Approximant &) = default;
};

inline Approximant truncated_gaussian(double xi) {
    return {Family::TruncatedGaussian, xi};
}
inline Approximant cosine_power(double gamma) {
    return {Family::CosinePower, gamma};
}
inline Approximant gaussian_envelope(double sigma) {
    return {Family::GaussianEnvelope, sigma};
}
inline Approximant grating(Ell L) {
    return {Family::Grating, static_cast<double>(L)};
}

/// Closed-form normalization constant C of each family (see header comment).
inline double normalization_constant(const Approximant &a) {
    const double p = a.parameter;
    switch (a.family) {
        case Family::TruncatedGaussian:
            return p * std::sqrt(std::numbers::pi) * std::erf(std::numbers::pi * p);
        case Family::CosinePower:
            return 4.0 * std::pow(std::numbers::pi, 1.5) * std::exp(std::lgamma(p + 0.5) - std::lgamma(p + 1.0));
        case Family::GaussianEnvelope: {
            const Ell cut = static_cast<Ell>(std::ceil(8.0 * p)) + 8;
            double c = 1.0;
            for (Ell l = 1; l <= cut; ++l) {
                c += 2.0 * std::exp(-static_cast<double>(l * l) / (p * p));
            }
            return c;
        }
        case Family::Grating:
            return 2.0 * p + 1.0;
    }
    return 1.0;
}

/// Tail tolerance: Fourier mass dropped by a window must stay below this.
inline constexpr double kTailTolerance = 1e-12;
/// Upper limit on automatically chosen windows for the quadrature families.
inline constexpr Ell kMaxAutoWindow = Ell{1} << 14;

/// Evaluator for one approximant: wavefunction, density, Fourier
/// coefficients, and quadrature breakpoints. The numeric normalization of
/// the cosine power is done once at construction.
class Profile {
   public:
    explicit Profile(Approximant a) : a_(a) {
        const double p = a_.parameter;
        switch (a_.family) {
            case Family::TruncatedGaussian:
                amp_ = p * std::sqrt(kTwoPi / normalization_constant(a_));
                break;
            case Family::CosinePower: {
                // || cos^gamma(u/2) ||^2 under du/2pi, by quadrature; the
                // Gamma-function form of C is only a cross-check.
                const auto bp = peak_breakpoints(0.0, std::numbers::pi);
                quad::Options opt;
                opt.abs_tol = 1e-13;
                auto r = quad::integrate_or_throw(
                    [p](double u) { return std::pow(std::cos(0.5 * u), 2.0 * p); }, 0.0, std::numbers::pi, bp, opt,
                    "cos-power normalization");
                numeric_norm_ = r.value / std::numbers::pi;
                amp_ = 1.0 / std::sqrt(numeric_norm_);
                break;
            }
            case Family::GaussianEnvelope:
                amp_ = 1.0 / std::sqrt(normalization_constant(a_));
                break;
            case Family::Grating:
                amp_ = 1.0 / std::sqrt(2.0 * p + 1.0);
                break;
        }
    }

    const Approximant &approximant() const {
        return a_;
    }

    /// C as implied by the normalization actually used (numeric for cos-power).
    double effective_normalization() const {
        switch (a_.family) {
            case Family::CosinePower:
                return 4.0 * std::numbers::pi * std::numbers::pi * numeric_norm_;
            default:
                return normalization_constant(a_);
        }
    }

    /// psi(u), normalized under du/2pi. u is reduced to [-pi, pi).
    double psi(double u) const {
        u = reduce_angle(u);
        const double p = a_.parameter;
        switch (a_.family) {
            case Family::TruncatedGaussian:
                return amp_ * std::exp(-0.5 * p * p * u * u);
            case Family::CosinePower:
                return amp_ * std::pow(std::cos(0.5 * u), p);
            case Family::GaussianEnvelope:
                return amp_ * envelope_sum(u);
            case Family::Grating: {
                const double h = std::sin(0.5 * u);
                if (std::abs(h) < 1e-9) {
                    return amp_ * (2.0 * p + 1.0) * std::cos(0.5 * u);  // Dirichlet kernel at its peak
                }
                return amp_ * std::sin((p + 0.5) * u) / h;
            }
        }
        return 0.0;
    }

    /// |psi(u)|^2 w.r.t. du/2pi.
    double density(double u) const {
        const double v = psi(u);
        return v * v;
    }

    /// Width of the central peak.
    double peak_width() const {
        const double p = a_.parameter;
        switch (a_.family) {
            case Family::TruncatedGaussian: return 1.0 / p;
            case Family::CosinePower: return 2.0 / std::sqrt(p);
            case Family::GaussianEnvelope: return 1.0 / p;
            case Family::Grating: return std::numbers::pi / (p + 0.5);
        }
        return 1.0;
    }

    /// Breakpoints in (lo, hi) for integrands built from psi on [0, pi]:
    /// geometric steps away from the peak, plus the grating's kernel zeros.
    std::vector<double> peak_breakpoints(double lo, double hi) const {
        std::vector<double> bp;
        for (double x = peak_width() / 8.0; x < hi; x *= 2.0) {
            if (x > lo) {
                bp.push_back(x);
            }
        }
        if (a_.family == Family::Grating) {
            const double step = kTwoPi / (2.0 * a_.parameter + 1.0);
            for (double x = step; x < hi; x += step) {
                if (x > lo) {
                    bp.push_back(x);
                }
            }
        }
        std::sort(bp.begin(), bp.end());
        return bp;
    }

    /// Fourier coefficients c_0..c_W of psi (c_{-l} = c_l), so that
    /// psi(u) = sum_l c_l e^{i l u}.
    std::vector<double> coefficients(Ell W) const {
        if (W < 0) {
            throw InvalidArgument("Profile::coefficients: negative window");
        }
        std::vector<double> c(static_cast<std::size_t>(W + 1));
        const double p = a_.parameter;
        switch (a_.family) {
            case Family::GaussianEnvelope:
                for (Ell l = 0; l <= W; ++l) {
                    const double x = static_cast<double>(l) / p;
                    c[static_cast<std::size_t>(l)] = amp_ * std::exp(-0.5 * x * x);
                }
                return c;
            case Family::Grating:
                for (Ell l = 0; l <= std::min(W, a_.grating_L()); ++l) {
                    c[static_cast<std::size_t>(l)] = amp_;
                }
                return c;
            default:
                break;
        }
        // c_l = (1/pi) int_0^pi psi(u) cos(l u) du. Beyond u_cut the
        // envelope is negligible, so the oscillation nodes are only seeded
        // below it.
        double u_cut = std::numbers::pi;
        if (a_.family == Family::TruncatedGaussian) {
            u_cut = std::min(u_cut, 9.0 / p);
        }
        const auto peak = peak_breakpoints(0.0, std::numbers::pi);
        quad::Options opt;
        opt.abs_tol = 1e-13;
        for (Ell l = 0; l <= W; ++l) {
            std::vector<double> bp = peak;
            const double dl = static_cast<double>(l);
            for (Ell k = 0; l > 0; ++k) {
                const double x = (static_cast<double>(k) + 0.5) * std::numbers::pi / dl;
                if (x >= u_cut) {
                    break;
                }
                bp.push_back(x);
            }
            auto r = quad::integrate_or_throw([this, dl](double u) { return psi(u) * std::cos(dl * u); }, 0.0,
                                              std::numbers::pi, bp, opt, "Fourier coefficient");
            c[static_cast<std::size_t>(l)] = r.value / std::numbers::pi;
        }
        return c;
    }

    /// 1 - sum_{|l| <= W} c_l^2, the Fourier mass a window [-W, W] drops.
    double tail_mass(const std::vector<double> &c) const {
        if (a_.family == Family::GaussianEnvelope) {
            // Sum the dropped terms directly instead of forming 1 - (1 - tiny).
            const double p = a_.parameter;
            const Ell W = static_cast<Ell>(c.size()) - 1;
            double t = 0.0;
            for (Ell l = W + 1; l <= W + static_cast<Ell>(10.0 * p) + 10; ++l) {
                const double x = static_cast<double>(l) / p;
                t += 2.0 * amp_ * amp_ * std::exp(-x * x);
            }
            return t;
        }
        double s = c.empty() ? 0.0 : c[0] * c[0];
        for (std::size_t l = 1; l < c.size(); ++l) {
            s += 2.0 * c[l] * c[l];
        }
        return 1.0 - s;
    }

   private:
    double envelope_sum(double u) const {
        const double p = a_.parameter;
        if (p >= 1.0) {
            // Poisson dual: sum_l e^{-l^2/2s^2} e^{ilu} = s sqrt(2pi) sum_k e^{-s^2 (u - 2pi k)^2 / 2}
            double acc = 0.0;
            for (int k = -3; k <= 3; ++k) {
                const double x = p * (u - kTwoPi * k);
                acc += std::exp(-0.5 * x * x);
            }
            return p * std::sqrt(kTwoPi) * acc;
        }
        const Ell cut = static_cast<Ell>(std::ceil(10.0 * p)) + 10;
        double acc = 1.0;
        for (Ell l = 1; l <= cut; ++l) {
            const double x = static_cast<double>(l) / p;
            acc += 2.0 * std::exp(-0.5 * x * x) * std::cos(static_cast<double>(l) * u);
        }
        return acc;
    }

    Approximant a_;
    double amp_ = 1.0;
    double numeric_norm_ = 1.0;
};

/// Default momentum window half-width for an approximant in a code:
/// max(4m, 8 * bandwidth, L_M) rounded up to a multiple of m, widened for
/// the slowly decaying Fourier tails of the two quadrature families
/// (kink of the truncated Gaussian at u = +-pi, power-law tail of cos^gamma).
inline Ell default_window_half(const Approximant &a, const CodeParams &params) {
    const double p = a.parameter;
    double want = 4.0 * static_cast<double>(params.m());
    switch (a.family) {
        case Family::TruncatedGaussian: {
            want = std::max(want, 8.0 * p);
            // Derivative jump of the periodic extension: c_l ~ psi'(pi)/(pi l^2).
            const double edge = Profile(a).psi(std::numbers::pi - 1e-300);
            const double slope = p * p * std::numbers::pi * std::abs(edge);
            want = std::max(want, std::cbrt(2.0 * slope * slope / (3.0 * std::numbers::pi * std::numbers::pi * 1e-13)));
            break;
        }
        case Family::CosinePower: {
            want = std::max(want, 8.0 * std::sqrt(p));
            const double half = 0.5 * p;
            if (half != std::floor(half)) {
                want = std::max(want, 2.0 * std::pow(10.0, 12.0 / (2.0 * p + 1.0)));
            }
            break;
        }
        case Family::GaussianEnvelope:
            want = std::max(want, 8.0 * p);
            break;
        case Family::Grating:
            want = std::max(want, p);
            break;
    }
    const Ell m = params.m();
    if (a.family != Family::Grating && a.family != Family::GaussianEnvelope) {
        want = std::min(want, static_cast<double>(std::max(kMaxAutoWindow, 4 * m)));
    }
    const Ell w = static_cast<Ell>(std::ceil(want));
    return ((w + m - 1) / m) * m;
}

}  // namespace rotorq
