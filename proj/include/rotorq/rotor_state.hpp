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

// Rotor states in a finite window of the angular-momentum basis, their
// angular wavefunction, and Born-rule sampling in either basis.
//
// Angular densities are always taken with respect to the measure dtheta/2pi,
// so a normalized state has unit total angular mass.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <utility>
#include <vector>

#include "rotorq/error.hpp"
#include "rotorq/random.hpp"

namespace rotorq {

using cplx = std::complex<double>;
/// Angular-momentum quantum number.
using Ell = std::int64_t;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
/// |sum |a|^2 - 1| below which a state counts as normalized.
inline constexpr double kNormTolerance = 1e-12;
inline constexpr int kDefaultAngleResolution = 4096;

/// Floor division (rounds toward -infinity), d > 0.
constexpr Ell floor_div(Ell n, Ell d) {
    Ell q = n / d;
    if ((n % d != 0) && (n < 0)) {
        --q;
    }
    return q;
}

/// Representative of n modulo d in [0, d), d > 0.
constexpr Ell floor_mod(Ell n, Ell d) {
    return n - d * floor_div(n, d);
}

/// Immutable complex amplitude vector over the window [l_min, l_max].
class RotorState {
   public:
    RotorState(Ell l_min, std::vector<cplx> amplitudes) : l_min_(l_min), amp_(std::move(amplitudes)) {
        if (amp_.empty()) {
            throw InvalidArgument("RotorState: empty amplitude window");
        }
        norm2_ = 0.0;
        for (const auto &a : amp_) {
            if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
                throw InvalidArgument("RotorState: non-finite amplitude");
            }
            norm2_ += std::norm(a);
        }
        normalized_ = std::abs(norm2_ - 1.0) <= kNormTolerance;
    }

    /// |ell> stored with `padding` empty slots on each side.
    static RotorState basis(Ell ell, Ell padding = 0) {
        std::vector<cplx> a(static_cast<std::size_t>(2 * padding + 1));
        a[static_cast<std::size_t>(padding)] = 1.0;
        return RotorState(ell - padding, std::move(a));
    }

    Ell l_min() const {
        return l_min_;
    }
    Ell l_max() const {
        return l_min_ + static_cast<Ell>(amp_.size()) - 1;
    }
    std::size_t size() const {
        return amp_.size();
    }
    bool normalized() const {
        return normalized_;
    }
    double norm_squared() const {
        return norm2_;
    }
    bool contains(Ell ell) const {
        return ell >= l_min() && ell <= l_max();
    }
    /// Amplitude at ell; zero outside the window.
    cplx amplitude(Ell ell) const {
        return contains(ell) ? amp_[static_cast<std::size_t>(ell - l_min_)] : cplx{};
    }
    std::span<const cplx> amplitudes() const {
        return amp_;
    }

    /// First and last ell carrying nonzero amplitude.
    std::optional<std::pair<Ell, Ell>> support() const {
        auto nz = [](const cplx &a) { return a != cplx{}; };
        auto first = std::find_if(amp_.begin(), amp_.end(), nz);
        if (first == amp_.end()) {
            return std::nullopt;
        }
        auto last = std::find_if(amp_.rbegin(), amp_.rend(), nz);
        return std::pair<Ell, Ell>{l_min_ + (first - amp_.begin()),
                                   l_min_ + static_cast<Ell>(amp_.rend() - last) - 1};
    }

    RotorState normalized_copy() const {
        if (!(norm2_ > 0.0)) {
            throw InvalidArgument("RotorState: cannot normalize the zero vector");
        }
        return scaled(1.0 / std::sqrt(norm2_));
    }

    RotorState scaled(cplx factor) const {
        std::vector<cplx> a(amp_);
        for (auto &x : a) {
            x *= factor;
        }
        return RotorState(l_min_, std::move(a));
    }

    /// Same amplitudes in the window [lo, hi], which must cover the support.
    RotorState rewindowed(Ell lo, Ell hi) const {
        if (lo > hi) {
            throw InvalidArgument("RotorState::rewindowed: empty window");
        }
        if (auto s = support(); s && (s->first < lo || s->second > hi)) {
            throw InvalidArgument("RotorState::rewindowed: window would cut nonzero amplitude");
        }
        std::vector<cplx> a(static_cast<std::size_t>(hi - lo + 1));
        for (Ell ell = std::max(lo, l_min()); ell <= std::min(hi, l_max()); ++ell) {
            a[static_cast<std::size_t>(ell - lo)] = amplitude(ell);
        }
        return RotorState(lo, std::move(a));
    }

   private:
    Ell l_min_;
    std::vector<cplx> amp_;
    double norm2_ = 0.0;
    bool normalized_ = false;
};

/// Build a state from (ell, amplitude) entries. The window is the tight hull
/// of the given ell values widened by `padding` on each side.
inline RotorState make_state(std::span<const std::pair<Ell, cplx>> entries, bool normalize, Ell padding = 0) {
    if (entries.empty()) {
        throw InvalidArgument("make_state: no entries");
    }
    if (padding < 0) {
        throw InvalidArgument("make_state: negative padding");
    }
    std::set<Ell> seen;
    Ell lo = entries.front().first, hi = lo;
    for (const auto &[ell, a] : entries) {
        if (!seen.insert(ell).second) {
            std::ostringstream msg;
            msg << "make_state: duplicate angular momentum " << ell;
            throw InvalidArgument(msg.str());
        }
        lo = std::min(lo, ell);
        hi = std::max(hi, ell);
    }
    lo -= padding;
    hi += padding;
    std::vector<cplx> a(static_cast<std::size_t>(hi - lo + 1));
    for (const auto &[ell, amp] : entries) {
        a[static_cast<std::size_t>(ell - lo)] = amp;
    }
    RotorState s(lo, std::move(a));
    if (normalize) {
        if (s.norm_squared() == 0.0) {
            throw InvalidArgument("make_state: all amplitudes are zero, cannot normalize");
        }
        return s.normalized_copy();
    }
    return s;
}

inline RotorState make_state(std::initializer_list<std::pair<Ell, cplx>> entries, bool normalize,
                             Ell padding = 0) {
    return make_state(std::span<const std::pair<Ell, cplx>>(entries.begin(), entries.size()), normalize,
                      padding);
}

/// <a|b> over the intersection of the two windows.
inline cplx inner(const RotorState &a, const RotorState &b) {
    const Ell lo = std::max(a.l_min(), b.l_min());
    const Ell hi = std::min(a.l_max(), b.l_max());
    cplx acc{};
    for (Ell ell = lo; ell <= hi; ++ell) {
        acc += std::conj(a.amplitude(ell)) * b.amplitude(ell);
    }
    return acc;
}

/// || a - b ||, aligning windows.
inline double distance(const RotorState &a, const RotorState &b) {
    const Ell lo = std::min(a.l_min(), b.l_min());
    const Ell hi = std::max(a.l_max(), b.l_max());
    double acc = 0.0;
    for (Ell ell = lo; ell <= hi; ++ell) {
        acc += std::norm(a.amplitude(ell) - b.amplitude(ell));
    }
    return std::sqrt(acc);
}

/// Reduce an angle to [-pi, pi). Exact (no rounding) for every finite input.
inline double reduce_angle(double theta) {
    double r = std::remainder(theta, kTwoPi);
    if (r >= std::numbers::pi) {
        r -= kTwoPi;
    }
    return r;
}

/// psi(theta) = <theta|s> = sum_ell a_ell exp(i ell theta).
inline cplx theta_wavefunction(const RotorState &s, double theta) {
    const double t = reduce_angle(theta);
    cplx acc{};
    Ell ell = s.l_min();
    for (const auto &a : s.amplitudes()) {
        if (a != cplx{}) {
            acc += a * std::polar(1.0, static_cast<double>(ell) * t);
        }
        ++ell;
    }
    return acc;
}

/// Fidelity |<a|b>|^2 between normalized states.
inline double fidelity(const RotorState &a, const RotorState &b) {
    if (!a.normalized() || !b.normalized()) {
        throw InvalidArgument("fidelity: both states must be normalized");
    }
    return std::norm(inner(a, b));
}

/// Uniform grid over [-pi, pi) with angular densities w.r.t. dtheta/2pi.
struct AngleGrid {
    std::vector<double> points;
    std::vector<double> densities;

    /// Periodic trapezoid estimate of the integral of density * dtheta/2pi.
    double total_mass() const {
        double acc = 0.0;
        for (double d : densities) {
            acc += d;
        }
        return acc / static_cast<double>(densities.size());
    }
};

/// Density |psi(theta)|^2 on `resolution` uniform points. Exact at the grid
/// points: the phases exp(i ell theta_k) are read from a table of roots of
/// unity rather than accumulated.
inline AngleGrid angle_distribution(const RotorState &s, int resolution = kDefaultAngleResolution) {
    if (!s.normalized()) {
        throw InvalidArgument("angle_distribution: state must be normalized");
    }
    if (resolution < 16) {
        throw InvalidArgument("angle_distribution: resolution must be >= 16");
    }
    const auto R = static_cast<Ell>(resolution);
    std::vector<cplx> roots(static_cast<std::size_t>(R));
    for (Ell k = 0; k < R; ++k) {
        roots[static_cast<std::size_t>(k)] = std::polar(1.0, kTwoPi * static_cast<double>(k) / static_cast<double>(R));
    }
    // exp(i ell theta_k) with theta_k = -pi + 2 pi k / R equals
    // (-1)^ell * root[(ell k) mod R].
    struct Term {
        Ell ell_mod;
        cplx amp;
    };
    std::vector<Term> terms;
    Ell ell = s.l_min();
    for (const auto &a : s.amplitudes()) {
        if (a != cplx{}) {
            terms.push_back({floor_mod(ell, R), (floor_mod(ell, 2) == 0) ? a : -a});
        }
        ++ell;
    }
    AngleGrid g;
    g.points.resize(static_cast<std::size_t>(R));
    g.densities.resize(static_cast<std::size_t>(R));
    for (Ell k = 0; k < R; ++k) {
        cplx acc{};
        for (const auto &t : terms) {
            acc += t.amp * roots[static_cast<std::size_t>((t.ell_mod * k) % R)];
        }
        g.points[static_cast<std::size_t>(k)] = -std::numbers::pi + kTwoPi * static_cast<double>(k) / static_cast<double>(R);
        g.densities[static_cast<std::size_t>(k)] = std::norm(acc);
    }
    return g;
}

/// Inverse-CDF sampler over an AngleGrid, with the density interpolated
/// linearly between grid points (periodically across theta = pi).
class AngleSampler {
   public:
    explicit AngleSampler(AngleGrid grid) : grid_(std::move(grid)) {
        const std::size_t n = grid_.densities.size();
        if (n < 2) {
            throw InvalidArgument("AngleSampler: grid too small");
        }
        step_ = kTwoPi / static_cast<double>(n);
        cumulative_.resize(n);
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            acc += 0.5 * (grid_.densities[i] + grid_.densities[(i + 1) % n]);
            cumulative_[i] = acc;
        }
        if (!(acc > 0.0)) {
            throw InvalidArgument("AngleSampler: density vanishes on the grid");
        }
    }

    double sample(Rng &rng) const {
        const double target = uniform01(rng) * cumulative_.back();
        auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), target);
        if (it == cumulative_.end()) {
            --it;
        }
        const auto i = static_cast<std::size_t>(it - cumulative_.begin());
        const double before = (i == 0) ? 0.0 : cumulative_[i - 1];
        const double f0 = grid_.densities[i];
        const double f1 = grid_.densities[(i + 1) % cumulative_.size()];
        const double seg_mass = 0.5 * (f0 + f1);
        const double w = std::clamp(target - before, 0.0, seg_mass);
        // Solve f0 t + (f1 - f0) t^2 / 2 = w for t in [0, 1].
        const double slope = f1 - f0;
        const double disc = f0 * f0 + 2.0 * slope * w;
        const double denom = f0 + std::sqrt(std::max(disc, 0.0));
        const double t = std::clamp(denom > 0.0 ? 2.0 * w / denom : 0.5, 0.0, 1.0);
        double theta = grid_.points[i] + t * step_;
        if (theta >= std::numbers::pi) {
            theta -= kTwoPi;
        }
        return theta;
    }

    const AngleGrid &grid() const {
        return grid_;
    }

   private:
    AngleGrid grid_;
    std::vector<double> cumulative_;
    double step_ = 0.0;
};

/// Draw ell with probability |a_ell|^2.
inline Ell sample_momentum(const RotorState &s, Rng &rng) {
    if (!s.normalized()) {
        throw InvalidArgument("sample_momentum: state must be normalized");
    }
    const double target = uniform01(rng) * s.norm_squared();
    double acc = 0.0;
    Ell ell = s.l_min();
    Ell last_nonzero = ell;
    for (const auto &a : s.amplitudes()) {
        const double p = std::norm(a);
        if (p > 0.0) {
            acc += p;
            last_nonzero = ell;
            if (target < acc) {
                return ell;
            }
        }
        ++ell;
    }
    return last_nonzero;
}

/// One Born-rule angle draw. Builds the grid on every call; use AngleSampler
/// for repeated draws from the same state.
inline double sample_angle(const RotorState &s, Rng &rng, int resolution = kDefaultAngleResolution) {
    return AngleSampler(angle_distribution(s, resolution)).sample(rng);
}

}  // namespace rotorq
