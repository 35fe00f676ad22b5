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

// Error channels, syndrome extraction and correction.
//
// Errors are E(eps, e) = V^e exp(i eps L): an angle drift (|theta> ->
// |theta - eps>) followed by a momentum shift. The syndrome is the pair
// (t, q): t in (-pi/m, pi/m] is the inferred angle drift, q in
// [-(r-1)/2, (r-1)/2] the centered momentum residue. Correction applies
// V^-q exp(-i t L).
//
// Only the momentum residue is measured projectively. The angle residue is
// read off without collapsing the state: either as the eigenphase of the
// stabilizer V^m (exact for rigidly shifted combs) or from one Born-rule
// angle sample.

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rotorq/approximant.hpp"
#include "rotorq/code_params.hpp"
#include "rotorq/code_space.hpp"
#include "rotorq/error.hpp"
#include "rotorq/parallel.hpp"
#include "rotorq/random.hpp"
#include "rotorq/rotor_state.hpp"
#include "rotorq/weyl_algebra.hpp"

namespace rotorq {

struct ErrorEvent {
    double epsilon = 0.0;
    Ell e_shift = 0;
};

struct Syndrome {
    double theta_residue = 0.0;
    Ell q_residue = 0;
};

/// ell mod r, centered into [-(r-1)/2, (r-1)/2] (r odd).
inline Ell centered_residue(Ell ell, Ell r) {
    const Ell q = floor_mod(ell, r);
    return q > (r - 1) / 2 ? q - r : q;
}

/// x modulo 2pi/m, centered into (-pi/m, pi/m]. The boundary -pi/m maps to +pi/m.
inline double centered_angle_residue(double x, Ell m) {
    const double w = kTwoPi / static_cast<double>(m);
    double t = std::remainder(x, w);
    if (t <= -0.5 * w) {
        t += w;
    }
    return t;
}

inline RotorState apply_error(const RotorState &s, const ErrorEvent &err, const SupportPolicy &policy = {}) {
    if (!std::isfinite(err.epsilon)) {
        throw InvalidArgument("apply_error: epsilon must be finite");
    }
    return apply(momentum_shift(err.e_shift), apply(angle_shift(err.epsilon), s, policy), policy);
}

inline RotorState correct(const RotorState &s, const Syndrome &syn, const SupportPolicy &policy = {}) {
    return apply(momentum_shift(-syn.q_residue), apply(angle_shift(-syn.theta_residue), s, policy), policy);
}

enum class AngleReadout { eigenphase, born };

inline AngleReadout parse_angle_readout(const std::string &s) {
    if (s == "eigenphase") {
        return AngleReadout::eigenphase;
    }
    if (s == "born") {
        return AngleReadout::born;
    }
    throw InvalidArgument("unknown angle readout '" + s + "' (expected eigenphase or born)");
}

struct MeasureOptions {
    AngleReadout readout = AngleReadout::eigenphase;
    int angle_resolution = kDefaultAngleResolution;
};

/// Smallest projection probability accepted by the momentum residue measurement.
inline constexpr double kMinProjectionProbability = 1e-15;

/// Projection onto ell = residue (mod r). Returns the unnormalized projection.
inline RotorState project_residue(const RotorState &s, Ell residue, Ell r) {
    std::vector<cplx> a(s.amplitudes().begin(), s.amplitudes().end());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (centered_residue(s.l_min() + static_cast<Ell>(i), r) != residue) {
            a[i] = 0.0;
        }
    }
    return RotorState(s.l_min(), std::move(a));
}

/// <psi|V^m|psi> for any state.
inline cplx stabilizer_expectation(const RotorState &s, Ell m) {
    cplx acc{};
    for (Ell ell = s.l_min() + m; ell <= s.l_max(); ++ell) {
        acc += std::conj(s.amplitude(ell)) * s.amplitude(ell - m);
    }
    return acc;
}

/// Angle residue inferred from the stabilizer eigenphase: t = -arg<V^m>/m.
inline double eigenphase_residue(const RotorState &s, Ell m) {
    const cplx z = stabilizer_expectation(s, m);
    if (!(std::abs(z) > 1e-12 * s.norm_squared())) {
        throw InvalidArgument("eigenphase_residue: <V^m> vanishes, the state has no comb coherence");
    }
    return centered_angle_residue(-std::arg(z) / static_cast<double>(m), m);
}

/// One syndrome measurement: Born-sampled momentum residue with projective
/// collapse, then a non-collapsing angle read-off.
inline std::pair<Syndrome, RotorState> measure_syndrome_sampled(const RotorState &s, const CodeParams &params, Rng &rng,
                                                                const MeasureOptions &opt = {}) {
    if (!s.normalized()) {
        throw InvalidArgument("measure_syndrome_sampled: state must be normalized");
    }
    Syndrome syn;
    syn.q_residue = centered_residue(sample_momentum(s, rng), params.r());
    RotorState proj = project_residue(s, syn.q_residue, params.r());
    if (!(proj.norm_squared() > kMinProjectionProbability)) {
        std::ostringstream msg;
        msg << "measure_syndrome_sampled: residue " << syn.q_residue << " has probability " << proj.norm_squared();
        throw InvalidArgument(msg.str());
    }
    proj = proj.normalized_copy();
    if (opt.readout == AngleReadout::eigenphase) {
        syn.theta_residue = eigenphase_residue(proj, params.m());
    } else {
        const double theta = sample_angle(proj, rng, opt.angle_resolution);
        syn.theta_residue = centered_angle_residue(-theta, params.m());
    }
    return {syn, std::move(proj)};
}

struct SyndromeDistribution {
    /// probabilities[q + (r-1)/2] = P(q_residue = q).
    std::vector<double> q_probabilities;
    /// Eigenphase angle residue of the unprojected state, if defined.
    std::optional<double> theta_residue;
    /// |<V^m>|: 1 for an infinite shifted comb.
    double coherence = 0.0;
};

inline SyndromeDistribution syndrome_distribution(const RotorState &s, const CodeParams &params) {
    if (!s.normalized()) {
        throw InvalidArgument("syndrome_distribution: state must be normalized");
    }
    const Ell r = params.r();
    SyndromeDistribution out;
    out.q_probabilities.assign(static_cast<std::size_t>(r), 0.0);
    Ell ell = s.l_min();
    for (const auto &a : s.amplitudes()) {
        out.q_probabilities[static_cast<std::size_t>(centered_residue(ell, r) + (r - 1) / 2)] += std::norm(a);
        ++ell;
    }
    const cplx z = stabilizer_expectation(s, params.m());
    out.coherence = std::abs(z);
    if (out.coherence > 1e-12) {
        out.theta_residue = centered_angle_residue(-std::arg(z) / static_cast<double>(params.m()), params.m());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Round trips

struct RoundTripConfig {
    std::vector<int> digits;
    CodeParams params{2, 1, 0};
    CodewordKind kind = IdealComb{};
    ErrorEvent error;
    int trials = 1;
    std::uint64_t seed = 0;
    /// 0: default_window_half for the code word kind.
    Ell window_half = 0;
    /// Angle read-off for ideal combs.
    AngleReadout readout = AngleReadout::eigenphase;
    int angle_resolution = 1 << 14;
    unsigned threads = 0;
};

struct TrialRecord {
    int trial = 0;
    double epsilon = 0.0;
    Ell e_shift = 0;
    double theta_residue = 0.0;
    Ell q_residue = 0;
    double fidelity = 0.0;
    bool logical_ok = false;
};

struct RoundTripReport {
    std::uint64_t seed = 0;
    std::vector<TrialRecord> trials;
    int logical_errors = 0;
    double logical_error_rate = 0.0;
    /// Binomial standard error of the rate.
    double standard_error = 0.0;
};

/// encode -> error -> measure -> correct -> compare, `trials` times.
///
/// For approximate code words the angle read-off is sampled from the
/// classical model behind the error probability: the state is a sum of m
/// peaks at 2 pi j/m - eps, so a reading is 2 pi j/m - eps + u with j
/// uniform and u drawn from the approximant's angular density. A trial is
/// a logical success when the momentum residue is right (e - q = 0 mod m)
/// and the residual drift eps - u - t did not wrap past a neighbouring peak.
inline RoundTripReport run_round_trip(const RoundTripConfig &cfg) {
    if (cfg.trials < 1) {
        throw InvalidArgument("run_round_trip: trials must be >= 1");
    }
    const CodeParams &params = cfg.params;
    const Ell W = cfg.window_half > 0 ? cfg.window_half : default_window_half(cfg.kind, params);
    const RotorState original = logical_encode(cfg.digits, params, cfg.kind, W);
    const RotorState corrupted = apply_error(original, cfg.error);
    const Ell m = params.m();
    const double bound = params.angle_bound();

    std::optional<AngleSampler> sampler;
    if (const auto *a = std::get_if<Approximant>(&cfg.kind)) {
        const Profile prof(*a);
        AngleGrid g;
        const int R = cfg.angle_resolution;
        if (R < 16) {
            throw InvalidArgument("run_round_trip: angle_resolution must be >= 16");
        }
        g.points.resize(static_cast<std::size_t>(R));
        g.densities.resize(static_cast<std::size_t>(R));
        for (int i = 0; i < R; ++i) {
            const double u = -std::numbers::pi + kTwoPi * i / R;
            g.points[static_cast<std::size_t>(i)] = u;
            g.densities[static_cast<std::size_t>(i)] = prof.density(u);
        }
        sampler.emplace(std::move(g));
    }

    RoundTripReport report;
    report.seed = cfg.seed;
    report.trials.resize(static_cast<std::size_t>(cfg.trials));
    parallel_for(
        report.trials.size(),
        [&](std::size_t i) {
            Rng rng = make_rng(cfg.seed, i);
            TrialRecord rec;
            rec.trial = static_cast<int>(i);
            rec.epsilon = cfg.error.epsilon;
            rec.e_shift = cfg.error.e_shift;
            Syndrome syn;
            syn.q_residue = centered_residue(sample_momentum(corrupted, rng), params.r());
            RotorState proj = project_residue(corrupted, syn.q_residue, params.r());
            if (!(proj.norm_squared() > kMinProjectionProbability)) {
                throw NumericalFailure("run_round_trip: sampled a residue of vanishing probability");
            }
            proj = proj.normalized_copy();
            double u = 0.0;
            if (sampler) {
                const auto j = static_cast<Ell>(uniform01(rng) * static_cast<double>(m));
                u = sampler->sample(rng);
                const double reading = kTwoPi * static_cast<double>(j) / static_cast<double>(m) - cfg.error.epsilon + u;
                syn.theta_residue = centered_angle_residue(-reading, m);
            } else if (cfg.readout == AngleReadout::eigenphase) {
                syn.theta_residue = eigenphase_residue(proj, m);
            } else {
                const double theta = sample_angle(proj, rng, cfg.angle_resolution);
                syn.theta_residue = centered_angle_residue(-theta, m);
            }
            const RotorState fixed = correct(proj, syn);
            rec.theta_residue = syn.theta_residue;
            rec.q_residue = syn.q_residue;
            rec.fidelity = fidelity(fixed, original);
            const double drift = cfg.error.epsilon - u - syn.theta_residue;
            rec.logical_ok = floor_mod(cfg.error.e_shift - syn.q_residue, m) == 0 && std::abs(drift) < bound;
            report.trials[i] = rec;
        },
        cfg.threads);

    for (const auto &t : report.trials) {
        report.logical_errors += t.logical_ok ? 0 : 1;
    }
    const double n = static_cast<double>(cfg.trials);
    report.logical_error_rate = report.logical_errors / n;
    const double p = report.logical_error_rate;
    report.standard_error = std::sqrt(p * (1.0 - p) / n);
    return report;
}

}  // namespace rotorq
