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

#include "rotorq/code_params.hpp"
#include "rotorq/code_space.hpp"
#include "rotorq/invariants.hpp"
#include "rotorq/weyl_algebra.hpp"

using namespace rotorq;

namespace {

const double kPi = std::numbers::pi;

std::vector<RotorState> probes(int count, Ell W, Ell margin, std::uint64_t seed = 99) {
    return detail::random_probes(count, W, margin, seed);
}

double diag(const ShiftDiagonalOperator &op, Ell ell) {
    EXPECT_EQ(op.terms().size(), 1u);
    return op.terms()[0].diagonal(ell).real();
}

TEST(Apply, IdentityAndShifts) {
    const auto s = make_state({{-1, 1.0}, {2, cplx(0, 1)}}, true, 3);
    EXPECT_EQ(distance(apply(identity_operator(), s), s), 0.0);
    const auto v = apply(momentum_shift(1), RotorState::basis(0, 1));
    EXPECT_EQ(v.amplitude(1), cplx(1.0));
    EXPECT_EQ(v.amplitude(0), cplx(0.0));
    const auto p = apply(angle_shift(kPi), RotorState::basis(3));
    EXPECT_NEAR(std::abs(p.amplitude(3) + 1.0), 0.0, 1e-15);
}

TEST(Apply, StrictRejectsEdgeSupportNamingEll) {
    try {
        apply(momentum_shift(2), RotorState(0, {0.0, 1.0, 0.0, 0.0}));
        FAIL() << "expected SupportViolation";
    } catch (const SupportViolation &e) {
        EXPECT_EQ(e.offending_ell(), 1);
        EXPECT_NE(std::string(e.what()).find("ell=1"), std::string::npos);
    }
    // A margin below the operator's reach is itself invalid.
    EXPECT_THROW(apply(momentum_shift(3), RotorState::basis(0, 5), {SupportMode::strict, 1}), InvalidArgument);
    // A wider margin than necessary is enforced.
    EXPECT_THROW(apply(momentum_shift(1), RotorState::basis(0, 2), {SupportMode::strict, 3}), SupportViolation);
}

TEST(Apply, StrictWidensWindow) {
    const auto s = RotorState::basis(0, 2);
    const auto out = apply(momentum_shift(2), s);
    EXPECT_EQ(out.l_min(), -2);
    EXPECT_EQ(out.l_max(), 4);
    EXPECT_EQ(out.amplitude(2), cplx(1.0));
}

TEST(Apply, ClipRecordsLeakageAndRenormalizes) {
    const auto s = make_state({{0, 1.0}, {2, 1.0}}, true);  // window [0, 2]
    const auto r = apply_with_leakage(momentum_shift(1), s, SupportPolicy::clip());
    EXPECT_NEAR(r.leakage, 0.5, 1e-15);
    EXPECT_EQ(r.state.l_min(), 0);
    EXPECT_EQ(r.state.l_max(), 2);
    EXPECT_NEAR(std::abs(r.state.amplitude(1)), 1.0, 1e-15);
    EXPECT_TRUE(r.state.normalized());
    const auto none = apply_with_leakage(angle_shift(0.3), s, SupportPolicy::clip());
    EXPECT_EQ(none.leakage, 0.0);
}

TEST(AngleShift, Examples) {
    const auto s = make_state({{0, 1.0}, {1, 1.0}}, true);
    EXPECT_EQ(distance(apply(angle_shift(0.0), s), s), 0.0);
    auto probe = probes(5, 40, 0);
    EXPECT_LT(action_difference(angle_shift(kTwoPi), identity_operator(), probe), 1e-13);
    const auto t = make_state({{0, 1.0}, {1, -1.0}}, true);
    EXPECT_LT(distance(apply(angle_shift(kPi), s), t), 1e-15);
}

TEST(MomentumShift, Examples) {
    const auto s = RotorState::basis(-1, 3);
    EXPECT_EQ(distance(apply(momentum_shift(0), s), s), 0.0);
    EXPECT_EQ(apply(momentum_shift(2), s).amplitude(1), cplx(1.0));
    EXPECT_LT(action_difference_on_kets(compose(momentum_shift(-1), momentum_shift(1)), identity_operator(), -5, 5),
              1e-16);
}

TEST(QubitZ, TableLabels) {
    const int expected[] = {0, 1, 0, 1, 0, 1, 0, 1, 0};
    const auto z = qubit_Z(1, 1);
    for (Ell ell = -4; ell <= 4; ++ell) {
        EXPECT_EQ(diag(z, ell), expected[ell + 4] ? -1.0 : 1.0) << ell;
    }
    EXPECT_EQ(diag(qubit_Z(3, 1), 4), -1.0);
    EXPECT_EQ(diag(qubit_Z(2, 3), 7), -1.0);
    EXPECT_EQ(diag(qubit_Z(2, 1), -3), 1.0);  // floor(-3/2) = -2 is even
    EXPECT_THROW(qubit_Z(0, 1), InvalidArgument);
}

TEST(QubitX, ExpandedAction) {
    const auto x = qubit_X(1, 1);
    EXPECT_EQ(x.terms().size(), 4u);
    EXPECT_EQ(x.max_abs_shift(), 1);
    EXPECT_LT(distance(apply(x, RotorState::basis(0, 2)), RotorState::basis(1)), 1e-16);
    EXPECT_LT(distance(apply(x, RotorState::basis(1, 2)), RotorState::basis(0)), 1e-16);
    EXPECT_LT(distance(apply(x, RotorState::basis(-1, 2)), RotorState::basis(-2)), 1e-16);
    const auto x2 = qubit_X(2, 3);
    EXPECT_EQ(x2.max_abs_shift(), 6);
    // l = 7: floor(7/6) = 1 is odd, so X_2 sends it down one block.
    EXPECT_LT(distance(apply(x2, RotorState::basis(7, 6)), RotorState::basis(1)), 1e-16);
}

TEST(QubitX, Involution) {
    for (int j = 1; j <= 3; ++j) {
        const auto x = qubit_X(j, 3);
        for (const auto &p : probes(20, 256, 64)) {
            EXPECT_LT(distance(apply(x, apply(x, p)), p), 1e-12);
        }
    }
}

TEST(QuditPair, ReducesToQubitForD2) {
    for (int j = 1; j <= 3; ++j) {
        for (Ell r : {1, 3}) {
            const auto [z, x] = qudit_pair(j, 2, r);
            const Ell span = 4 * (Ell{1} << j) * r;
            EXPECT_LT(action_difference_on_kets(z, qubit_Z(j, r), -span, span), 1e-15);
            EXPECT_LT(action_difference_on_kets(x, qubit_X(j, r), -span, span), 1e-15);
        }
    }
}

TEST(QuditPair, ThreeLevelExamples) {
    const auto [z, x] = qudit_pair(1, 3, 1);
    EXPECT_LT(distance(apply(x, RotorState::basis(0, 3)), RotorState::basis(1)), 1e-15);
    EXPECT_LT(distance(apply(x, RotorState::basis(2, 3)), RotorState::basis(0)), 1e-15);
    EXPECT_LT(distance(apply(x, RotorState::basis(5, 3)), RotorState::basis(3)), 1e-15);
    EXPECT_LT(distance(apply(x, RotorState::basis(-1, 3)), RotorState::basis(-3)), 1e-15);
    const cplx w = root_of_unity(1, 3);
    EXPECT_LT(std::abs(z.terms()[0].diagonal(1) - w), 1e-15);
    EXPECT_LT(std::abs(z.terms()[0].diagonal(-1) - w * w), 1e-15);
    EXPECT_THROW(qudit_pair(1, 1, 1), InvalidArgument);
}

TEST(QuditPair, CyclicPowers) {
    for (int d : {3, 4, 5}) {
        const auto [z, x] = qudit_pair(1, d, 1);
        for (const auto &p : probes(10, 200, 40)) {
            RotorState sx = p, sz = p;
            for (int i = 0; i < d; ++i) {
                sx = apply(x, sx);
                sz = apply(z, sz);
            }
            EXPECT_LT(distance(sx, p), 1e-12) << d;
            EXPECT_LT(distance(sz, p), 1e-12) << d;
            EXPECT_LT(distance(apply(z, apply(x, p)), apply(x, apply(z, p)).scaled(root_of_unity(1, d))), 1e-12);
        }
    }
}

TEST(RootOfUnity, ExactAtQuarterTurns) {
    EXPECT_EQ(root_of_unity(0, 7), cplx(1.0));
    EXPECT_EQ(root_of_unity(1, 4), cplx(0.0, 1.0));
    EXPECT_EQ(root_of_unity(2, 4), cplx(-1.0));
    EXPECT_EQ(root_of_unity(-1, 4), cplx(0.0, -1.0));
    EXPECT_EQ(root_of_unity(3, 2), cplx(-1.0));
}

TEST(PhaseGate, Values) {
    const auto r12 = phase_gate(1, 2, 1);
    EXPECT_EQ(diag(r12, 3), -1.0);
    EXPECT_EQ(diag(r12, 1), 1.0);
    EXPECT_EQ(diag(r12, 2), 1.0);
    EXPECT_EQ(diag(r12, 0), 1.0);
    EXPECT_THROW(phase_gate(2, 2, 1), InvalidArgument);
    for (Ell r : {1, 3}) {
        EXPECT_EQ(action_difference_on_kets(phase_gate(1, 2, r), phase_gate(2, 1, r), -50, 50), 0.0);
        EXPECT_EQ(action_difference_on_kets(compose(phase_gate(1, 3, r), phase_gate(1, 3, r)), identity_operator(),
                                            -50, 50),
                  0.0);
    }
}

TEST(PhaseGate, ControlledZOnCodeWords) {
    const CodeParams P(2, 2, 1);
    for (int b1 : {0, 1}) {
        for (int b2 : {0, 1}) {
            const auto w = logical_encode({b1, b2}, P, IdealComb{}, 4 * P.m());
            const double sign = (b1 && b2) ? -1.0 : 1.0;
            EXPECT_EQ(distance(apply(phase_gate(1, 2, P.r()), w), w.scaled(sign)), 0.0);
        }
    }
}

TEST(Stabilizers, Examples) {
    const auto trivial = stabilizer_ops(CodeParams(2, 1, 0));
    EXPECT_EQ(action_difference_on_kets(trivial.s_L, identity_operator(), -20, 20), 0.0);
    const CodeParams P(2, 2, 1);
    const auto st = stabilizer_ops(P);
    EXPECT_EQ(st.s_theta.max_shift(), 12);
    EXPECT_EQ(logical_labels(7, P).q, 1);
    EXPECT_LT(std::abs(st.s_L.terms()[0].diagonal(7) - root_of_unity(1, 3)), 1e-15);
    EXPECT_LT(commutator_norm(st.s_theta, st.s_L, probes(20, 256, 12)), 1e-13);
}

TEST(Compose, Examples) {
    EXPECT_LT(action_difference_on_kets(compose(momentum_shift(1), adjoint(momentum_shift(1))), identity_operator(),
                                        -10, 10),
              1e-16);
    EXPECT_LT(action_difference_on_kets(compose(qubit_Z(1, 1), qubit_Z(1, 1)), identity_operator(), -10, 10), 1e-16);
    const double alpha = 0.7;
    const auto ev = compose(angle_shift(alpha), momentum_shift(1));
    const auto ve = compose(momentum_shift(1), angle_shift(alpha));
    EXPECT_LT(action_difference(ev, std::polar(1.0, alpha) * ve, probes(10, 60, 2)), 1e-13);
}

TEST(Compose, MatchesSequentialApplication) {
    const auto a = qubit_X(2, 1) + cplx(0.3, -0.2) * angle_shift(0.4);
    const auto b = compose(momentum_shift(-3), qudit_pair(1, 3, 1).second);
    for (const auto &p : probes(5, 100, 20)) {
        EXPECT_LT(distance(apply(compose(a, b), p), apply(a, apply(b, p))), 1e-13);
    }
}

TEST(Adjoint, IsInnerProductAdjoint) {
    const auto a = qubit_X(1, 3) + cplx(0.0, 0.5) * compose(momentum_shift(2), angle_shift(1.1));
    const auto ps = probes(6, 80, 10);
    for (std::size_t i = 0; i + 1 < ps.size(); ++i) {
        const cplx lhs = inner(ps[i], apply(a, ps[i + 1]));
        const cplx rhs = inner(apply(adjoint(a), ps[i]), ps[i + 1]);
        EXPECT_LT(std::abs(lhs - rhs), 1e-13);
    }
    for (int j = 1; j <= 3; ++j) {
        EXPECT_LT(action_difference_on_kets(adjoint(qubit_X(j, 1)), qubit_X(j, 1), -20, 20), 1e-16);
    }
}

TEST(Power, Repeats) {
    EXPECT_LT(action_difference_on_kets(power(momentum_shift(2), 3), momentum_shift(6), -5, 5), 1e-16);
    EXPECT_LT(action_difference_on_kets(power(qubit_X(1, 1), 0), identity_operator(), -5, 5), 1e-16);
}

TEST(CommutatorNorm, Examples) {
    const auto ps = probes(10, 128, 4);
    const auto z = qubit_Z(1, 1);
    EXPECT_EQ(commutator_norm(z, z, ps), 0.0);
    EXPECT_LT(commutator_norm(z, momentum_shift(2), ps), 1e-13);
    EXPECT_GT(commutator_norm(z, momentum_shift(1), ps), 0.1);
    EXPECT_THROW(commutator_norm(z, momentum_shift(1), std::vector{RotorState::basis(0)}), SupportViolation);
}

TEST(InvariantSuite, AllPassForDefaultsAndVariants) {
    for (const CodeParams &P : {CodeParams(2, 3, 1), CodeParams(2, 1, 0), CodeParams(3, 2, 1)}) {
        CheckOptions opt;
        opt.params = P;
        const auto results = run_algebra_suite(opt);
        EXPECT_EQ(results.size(), 7u);
        for (const auto &r : results) {
            EXPECT_TRUE(r.passed) << P.describe() << ": " << r.name << " residual " << r.max_residual;
        }
    }
}

TEST(InvariantSuite, DetectsCorruptedOperator) {
    CheckOptions opt;
    opt.corrupt = "X1";
    opt.probes = 5;
    const auto results = run_algebra_suite(opt);
    EXPECT_FALSE(all_passed(results));
}

TEST(Traceless, FiniteWindowSum) {
    for (int j = 1; j <= 3; ++j) {
        for (Ell r : {1, 3, 5}) {
            const auto z = qubit_Z(j, r);
            const Ell period = (Ell{1} << j) * r;
            for (Ell h : {period / 2, period, 7 * period / 2}) {
                double tr = 0;
                for (Ell ell = -h; ell < h; ++ell) {
                    tr += diag(z, ell);
                }
                EXPECT_EQ(tr, 0.0);
            }
        }
    }
}

}  // namespace
