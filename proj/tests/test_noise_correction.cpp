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


#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "rotorq/analysis.hpp"
#include "rotorq/approximant.hpp"
#include "rotorq/code_space.hpp"
#include "rotorq/noise_correction.hpp"

using namespace rotorq;

namespace {

const double kPi = std::numbers::pi;

TEST(Residues, Centered) {
    EXPECT_EQ(centered_residue(4, 3), 1);
    EXPECT_EQ(centered_residue(5, 3), -1);
    EXPECT_EQ(centered_residue(-1, 3), -1);
    EXPECT_EQ(centered_residue(7, 1), 0);
    EXPECT_EQ(centered_residue(-7, 5), -2);
    const Ell m = 6;
    EXPECT_NEAR(centered_angle_residue(0.1, m), 0.1, 1e-15);
    EXPECT_NEAR(centered_angle_residue(0.1 + kTwoPi / m, m), 0.1, 1e-14);
    EXPECT_NEAR(centered_angle_residue(-0.1 - 3 * kTwoPi / m, m), -0.1, 1e-14);
    // Tie: -pi/m maps to +pi/m.
    EXPECT_DOUBLE_EQ(centered_angle_residue(-kPi / m, m), kPi / m);
    EXPECT_DOUBLE_EQ(centered_angle_residue(kPi / m, m), kPi / m);
}

TEST(ApplyError, Examples) {
    const CodeParams P(2, 1, 0);
    const auto w0 = ideal_codeword(0, P, 16);
    EXPECT_EQ(distance(apply_error(w0, {0.0, 0}), w0), 0.0);
    const auto moved = apply_error(w0, {0.0, 1});
    EXPECT_NEAR(fidelity(moved, ideal_codeword(1, P, 16, -1, 1)), 1.0, 1e-14);
    const auto k = RotorState::basis(5);
    const auto phased = apply_error(k, {0.3, 0});
    EXPECT_NEAR(std::abs(phased.amplitude(5) - std::polar(1.0, 1.5)), 0.0, 1e-15);
    EXPECT_NEAR(std::norm(phased.amplitude(5)), 1.0, 1e-15);
    EXPECT_THROW(apply_error(w0, {NAN, 0}), InvalidArgument);
    EXPECT_THROW(apply_error(RotorState::basis(0), {0.0, 1}), SupportViolation);
}

TEST(ApplyError, OrderIndependentUpToPhase) {
    const CodeParams P(2, 2, 1);
    const auto w = ideal_codeword(3, P, 48);
    for (double eps : {0.05, -0.2}) {
        for (Ell e : {-1, 0, 2}) {
            const auto a = apply(momentum_shift(e), apply(angle_shift(eps), w));
            const auto b = apply(angle_shift(eps), apply(momentum_shift(e), w));
            EXPECT_NEAR(fidelity(a, b), 1.0, 1e-12);
            EXPECT_LT(distance(a.scaled(std::polar(1.0, eps * e)), b), 1e-12);
        }
    }
}

TEST(MeasureSyndrome, CleanCodeword) {
    const CodeParams P(2, 1, 1);
    Rng rng = make_rng(4);
    for (Ell k = 0; k < P.n(); ++k) {
        const auto w = ideal_codeword(k, P, 48);
        for (int i = 0; i < 10; ++i) {
            const auto [syn, post] = measure_syndrome_sampled(w, P, rng);
            EXPECT_EQ(syn.q_residue, 0);
            EXPECT_LT(std::abs(syn.theta_residue), 1e-9);
            EXPECT_NEAR(fidelity(post, w), 1.0, 1e-14);
        }
        const auto dist = syndrome_distribution(w, P);
        EXPECT_EQ(dist.q_probabilities, (std::vector<double>{0.0, 1.0, 0.0}));
        ASSERT_TRUE(dist.theta_residue.has_value());
        EXPECT_LT(std::abs(*dist.theta_residue), 1e-12);
    }
}

TEST(MeasureSyndrome, ShiftedComb) {
    const CodeParams P(2, 1, 1);
    Rng rng = make_rng(5);
    const auto w = apply_error(ideal_codeword(0, P, 48), {0.1, 1});
    const auto [syn, post] = measure_syndrome_sampled(w, P, rng);
    EXPECT_EQ(syn.q_residue, 1);
    EXPECT_NEAR(syn.theta_residue, 0.1, 1e-12);
    // Born read-off lands on the angular grid next to the drift.
    MeasureOptions born{AngleReadout::born, 1 << 14};
    const auto wide = apply_error(ideal_codeword(0, P, 600), {0.1, 1});
    for (int i = 0; i < 20; ++i) {
        const auto [s2, p2] = measure_syndrome_sampled(wide, P, rng, born);
        EXPECT_EQ(s2.q_residue, 1);
        EXPECT_NEAR(s2.theta_residue, 0.1, 0.2);
    }
    // r-shift keeps the residue: undetectable.
    const auto wrapped = apply_error(ideal_codeword(0, P, 48), {0.0, 3});
    EXPECT_EQ(measure_syndrome_sampled(wrapped, P, rng).first.q_residue, 0);
}

TEST(MeasureSyndrome, Rejections) {
    const CodeParams P(2, 1, 1);
    Rng rng = make_rng(1);
    EXPECT_THROW(measure_syndrome_sampled(RotorState(0, {2.0}), P, rng), InvalidArgument);
    // A single momentum ket has no comb coherence for the eigenphase read-off.
    EXPECT_THROW(measure_syndrome_sampled(RotorState::basis(0, 10), P, rng), InvalidArgument);
    EXPECT_THROW(parse_angle_readout("magic"), InvalidArgument);
}

TEST(Correct, IdentityAndRoundTrip) {
    const CodeParams P(2, 1, 1);
    const auto w = ideal_codeword(1, P, 48);
    EXPECT_EQ(distance(correct(w, {0.0, 0}), w), 0.0);
    Rng rng = make_rng(2);
    const double eps = 0.9 * P.angle_bound();
    const auto bad = apply_error(w, {eps, P.delta_L()});
    const auto [syn, post] = measure_syndrome_sampled(bad, P, rng);
    const auto fixed = correct(post, syn);
    EXPECT_GT(fidelity(fixed, w), 1.0 - 1e-10);
    // Re-measuring after correction gives a clean syndrome.
    const auto [again, _] = measure_syndrome_sampled(fixed, P, rng);
    EXPECT_EQ(again.q_residue, 0);
    EXPECT_LT(std::abs(again.theta_residue), 1e-12);
}

TEST(Correct, OutOfBoundShiftIsLogicalError) {
    const CodeParams P(2, 1, 1);
    Rng rng = make_rng(3);
    const Ell W = 48;
    const auto w = ideal_codeword(0, P, W);
    const auto bad = apply_error(w, {0.0, P.delta_L() + 1});
    const auto [syn, post] = measure_syndrome_sampled(bad, P, rng);
    EXPECT_EQ(syn.q_residue, -P.delta_L());
    const auto fixed = correct(post, syn);
    EXPECT_LT(fidelity(fixed, w), 1e-10);
    EXPECT_GT(fidelity(fixed, ideal_codeword(1, P, W, -1, P.r())), 1.0 - 1e-10);
}

TEST(Correct, WrapAroundShiftsActLogically) {
    for (const CodeParams &P : {CodeParams(2, 1, 1), CodeParams(2, 2, 0), CodeParams(3, 1, 1)}) {
        const Ell W = 8 * P.m();
        for (Ell k = 0; k < P.n(); ++k) {
            const auto w = ideal_codeword(k, P, W);
            for (Ell t : {1, 2, -1}) {
                // e = t r shifts the code word index by t in the undetectable direction.
                const auto moved = apply_error(w, {0.0, t * P.r()});
                EXPECT_NEAR(fidelity(moved, ideal_codeword(k + t, P, W, -1, t * P.r())), 1.0, 1e-12);
            }
            const auto full = apply_error(w, {0.0, P.m()});
            EXPECT_NEAR(fidelity(full, ideal_codeword(k, P, W, -1, P.m())), 1.0, 1e-12);
        }
    }
}

TEST(Correct, DigitDistributionPreserved) {
    const CodeParams P(2, 2, 1);
    Rng rng = make_rng(8);
    const Ell W = 48;
    for (Ell k = 0; k < P.n(); ++k) {
        const auto w = ideal_codeword(k, P, W);
        const auto bad = apply_error(w, {-0.2, -1});
        const auto [syn, post] = measure_syndrome_sampled(bad, P, rng);
        const auto fixed = correct(post, syn);
        for (Ell ell = fixed.l_min(); ell <= fixed.l_max(); ++ell) {
            if (std::norm(fixed.amplitude(ell)) > 1e-20) {
                ASSERT_EQ(logical_labels(ell, P).digits, codeword_digits(k, P));
                ASSERT_EQ(logical_labels(ell, P).q, 0);
            }
        }
    }
}

TEST(RoundTrip, IdealInBoundNeverFails) {
    RoundTripConfig cfg;
    cfg.params = CodeParams(2, 2, 1);
    cfg.digits = {1, 0};
    cfg.error = {0.8 * cfg.params.angle_bound(), -1};
    cfg.trials = 100;
    cfg.seed = 12;
    const auto rep = run_round_trip(cfg);
    EXPECT_EQ(rep.logical_errors, 0);
    EXPECT_EQ(rep.logical_error_rate, 0.0);
    EXPECT_EQ(rep.seed, 12u);
    ASSERT_EQ(rep.trials.size(), 100u);
    for (const auto &t : rep.trials) {
        EXPECT_GT(t.fidelity, 1.0 - 1e-10);
        EXPECT_TRUE(t.logical_ok);
    }
    // A Born-sampled angle of a truncated comb occasionally lands in a
    // side lobe of the finite-comb kernel; errors are rare, not absent.
    cfg.readout = AngleReadout::born;
    cfg.error.epsilon = 0.3 * cfg.params.angle_bound();
    cfg.window_half = 100 * cfg.params.m();
    const auto born = run_round_trip(cfg);
    EXPECT_LE(born.logical_error_rate, 0.05);
}

TEST(RoundTrip, IdealOutOfBoundAlwaysFails) {
    RoundTripConfig cfg;
    cfg.params = CodeParams(2, 1, 1);
    cfg.digits = {0};
    cfg.trials = 20;
    cfg.seed = 1;
    cfg.error = {0.0, 2};
    EXPECT_EQ(run_round_trip(cfg).logical_errors, 20);
    cfg.error = {1.1 * cfg.params.angle_bound(), 0};
    EXPECT_EQ(run_round_trip(cfg).logical_errors, 20);
    cfg.trials = 0;
    EXPECT_THROW(run_round_trip(cfg), InvalidArgument);
}

TEST(RoundTrip, ReproducibleAndThreadIndependent) {
    RoundTripConfig cfg;
    cfg.params = CodeParams(2, 1, 1);
    cfg.digits = {1};
    cfg.kind = truncated_gaussian(4.0);
    cfg.trials = 500;
    cfg.seed = 99;
    cfg.threads = 1;
    const auto a = run_round_trip(cfg);
    cfg.threads = 4;
    const auto b = run_round_trip(cfg);
    ASSERT_EQ(a.trials.size(), b.trials.size());
    for (std::size_t i = 0; i < a.trials.size(); ++i) {
        EXPECT_EQ(a.trials[i].theta_residue, b.trials[i].theta_residue);
        EXPECT_EQ(a.trials[i].fidelity, b.trials[i].fidelity);
    }
    EXPECT_EQ(a.logical_errors, b.logical_errors);
}

TEST(RoundTrip, ApproximantRateMatchesQuadrature) {
    RoundTripConfig cfg;
    cfg.params = CodeParams(2, 1, 1);
    cfg.digits = {0};
    cfg.kind = truncated_gaussian(static_cast<double>(cfg.params.m()) / 2.0);
    cfg.trials = 10000;
    cfg.seed = 2024;
    const auto rep = run_round_trip(cfg);
    const double pe = pe_quadrature(truncated_gaussian(3.0), cfg.params).value;
    const double sigma = std::sqrt(pe * (1 - pe) / cfg.trials);
    EXPECT_NEAR(rep.logical_error_rate, pe, 3 * sigma) << "pe=" << pe;
}

TEST(RoundTrip, GratingRateNearTenth) {
    RoundTripConfig cfg;
    cfg.params = CodeParams(2, 1, 1);
    cfg.digits = {1};
    cfg.kind = grating(cfg.params.m());
    cfg.trials = 10000;
    cfg.seed = 31;
    const auto rep = run_round_trip(cfg);
    EXPECT_GT(rep.logical_error_rate, 3e-2);
    EXPECT_LT(rep.logical_error_rate, 3e-1);
    const double pe = pe_quadrature(grating(cfg.params.m()), cfg.params).value;
    EXPECT_NEAR(rep.logical_error_rate, pe, 3 * rep.standard_error + 1e-3);
}

}  // namespace
