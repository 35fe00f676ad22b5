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

// Operator-algebra invariant suite: Weyl relations, cross-digit
// commutation, stabilizer compatibility, residual-rotor factorization,
// qudit relations, and the logical action of X_j and R_jk on code words.
// Every check reports its worst residual over random probe states.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rotorq/code_params.hpp"
#include "rotorq/code_space.hpp"
#include "rotorq/random.hpp"
#include "rotorq/rotor_state.hpp"
#include "rotorq/weyl_algebra.hpp"

namespace rotorq {

struct SuiteResult {
    std::string name;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

struct CheckOptions {
    CodeParams params{2, 3, 1};
    int probes = 20;
    Ell window_half = 256;
    std::uint64_t seed = 20240101;
    double tolerance = 1e-12;
    /// Test hook: name of an operator ("X1", "Z2", ...) to perturb, so the
    /// suite can be shown to fail.
    std::string corrupt;
};

namespace detail {

inline ShiftDiagonalOperator maybe_corrupt(ShiftDiagonalOperator op, const std::string &name,
                                           const std::string &corrupt) {
    if (corrupt != name) {
        return op;
    }
    return compose(diagonal_operator([](Ell ell) { return cplx{floor_mod(ell, 3) == 0 ? 1.0 + 1e-6 : 1.0}; },
                                     "corruption"),
                   op)
        .relabeled(op.label() + "~");
}

/// Random normalized states supported on [-W + margin, W - margin], stored in [-W, W].
inline std::vector<RotorState> random_probes(int count, Ell W, Ell margin, std::uint64_t seed) {
    std::vector<RotorState> probes;
    for (int i = 0; i < count; ++i) {
        Rng rng = make_rng(seed, static_cast<std::uint64_t>(i));
        std::vector<cplx> a(static_cast<std::size_t>(2 * W + 1));
        for (Ell ell = -W + margin; ell <= W - margin; ++ell) {
            a[static_cast<std::size_t>(ell + W)] = {2.0 * uniform01(rng) - 1.0, 2.0 * uniform01(rng) - 1.0};
        }
        probes.push_back(RotorState(-W, std::move(a)).normalized_copy());
    }
    return probes;
}

}  // namespace detail

/// Run every suite. Qudit relations use d = params.d() when d > 2, else d = 3.
inline std::vector<SuiteResult> run_algebra_suite(const CheckOptions &opt = {}) {
    const CodeParams &P = opt.params;
    const Ell r = P.r();
    const int nq = std::max(P.N(), 3);  // qubit digits probed by the cross-commutation suite
    const int dq = P.d() > 2 ? P.d() : 3;
    const CodeParams Q(dq, P.N(), P.delta_L());
    const CodeParams B(2, P.N(), P.delta_L());

    Ell margin = std::max({B.m(), (Ell{1} << (nq - 1)) * r, static_cast<Ell>(dq) * Q.block(Q.N()), Q.m()});
    const Ell W = std::max(opt.window_half, 2 * margin + 64);
    const auto probes = detail::random_probes(opt.probes, W, margin, opt.seed);

    auto Zq = [&](int j) { return detail::maybe_corrupt(qubit_Z(j, r), "Z" + std::to_string(j), opt.corrupt); };
    auto Xq = [&](int j) { return detail::maybe_corrupt(qubit_X(j, r), "X" + std::to_string(j), opt.corrupt); };
    auto qudit = [&](int j) {
        auto [z, x] = qudit_pair(j, dq, r);
        return std::pair{detail::maybe_corrupt(z, "Zd" + std::to_string(j), opt.corrupt),
                         detail::maybe_corrupt(x, "Xd" + std::to_string(j), opt.corrupt)};
    };
    // Worst || f(p) || over probes.
    auto worst = [&](const std::function<double(const RotorState &)> &f) {
        double w = 0.0;
        for (const auto &p : probes) {
            w = std::max(w, f(p));
        }
        return w;
    };
    // Strict action widens the window by the operator's shifts, so the
    // probes' margin survives repeated application.
    auto wide = [](const ShiftDiagonalOperator &op, const RotorState &s) { return apply(op, s); };

    std::vector<SuiteResult> out;
    auto record = [&](std::string name, double residual) {
        out.push_back({std::move(name), residual, opt.tolerance, residual < opt.tolerance});
    };

    // Qubit Weyl relations per digit.
    {
        double res = 0.0;
        for (int j = 1; j <= nq; ++j) {
            const auto z = Zq(j), x = Xq(j);
            res = std::max(res, worst([&](const RotorState &p) { return distance(wide(z, wide(z, p)), p); }));
            res = std::max(res, worst([&](const RotorState &p) { return distance(wide(x, wide(x, p)), p); }));
            res = std::max(res, worst([&](const RotorState &p) {
                return distance(wide(z, wide(x, p)), wide(x, wide(z, p)).scaled(-1.0));
            }));
        }
        record("qubit Weyl pairs (Z^2 = X^2 = 1; ZX = -XZ)", res);
    }
    // Cross-digit commutation.
    {
        double res = 0.0;
        for (int j = 1; j <= nq; ++j) {
            for (int k = 1; k <= nq; ++k) {
                if (j == k) {
                    continue;
                }
                for (const auto &a : {Zq(j), Xq(j)}) {
                    for (const auto &b : {Zq(k), Xq(k)}) {
                        res = std::max(res, commutator_norm(a, b, probes));
                    }
                }
            }
        }
        record("cross-qubit commutation", res);
    }
    // Stabilizers against the logical operators of the same code.
    {
        const auto st = stabilizer_ops(B);
        double res = commutator_norm(st.s_theta, st.s_L, probes);
        for (int j = 1; j <= B.N(); ++j) {
            for (const auto &a : {Zq(j), Xq(j)}) {
                res = std::max(res, commutator_norm(st.s_theta, a, probes));
                res = std::max(res, commutator_norm(st.s_L, a, probes));
            }
        }
        record("stabilizer compatibility", res);
    }
    // Residual rotor (exp(i alpha floor(L/m)), V^m) against the logical operators.
    {
        double res = 0.0;
        const auto vm = momentum_shift(B.m());
        for (double alpha : {0.37, 1.0, 2.9}) {
            const auto ra = residual_angle_shift(alpha, B.m());
            for (int j = 1; j <= B.N(); ++j) {
                for (const auto &a : {Zq(j), Xq(j)}) {
                    res = std::max(res, commutator_norm(ra, a, probes));
                    res = std::max(res, commutator_norm(vm, a, probes));
                }
            }
        }
        record("residual-rotor factorization", res);
    }
    // Qudit relations.
    {
        double res = 0.0;
        const cplx omega = root_of_unity(1, dq);
        for (int j = 1; j <= Q.N(); ++j) {
            const auto pair_j = qudit(j);
            const auto &z = pair_j.first;
            const auto &x = pair_j.second;
            res = std::max(res, worst([&](const RotorState &p) {
                return distance(wide(z, wide(x, p)), wide(x, wide(z, p)).scaled(omega));
            }));
            res = std::max(res, worst([&](const RotorState &p) {
                RotorState s = p;
                for (int i = 0; i < dq; ++i) {
                    s = wide(z, s);
                }
                return distance(s, p);
            }));
            res = std::max(res, worst([&](const RotorState &p) {
                RotorState s = p;
                for (int i = 0; i < dq; ++i) {
                    s = wide(x, s);
                }
                return distance(s, p);
            }));
            for (int k = 1; k <= Q.N(); ++k) {
                if (k == j) {
                    continue;
                }
                const auto pair_k = qudit(k);
                for (const auto &a : {z, x}) {
                    for (const auto &b : {pair_k.first, pair_k.second}) {
                        res = std::max(res, commutator_norm(a, b, probes));
                    }
                }
            }
            const auto st = stabilizer_ops(Q);
            for (const auto &a : {z, x}) {
                res = std::max(res, commutator_norm(st.s_theta, a, probes));
                res = std::max(res, commutator_norm(st.s_L, a, probes));
            }
        }
        record("qudit Weyl pairs (d=" + std::to_string(dq) + ")", res);
    }
    // Logical X_j and R_12 on ideal code words.
    {
        const CodeParams C(2, std::max(P.N(), 2), P.delta_L());
        const Ell cw = 4 * C.m();
        double res = 0.0;
        for (Ell k = 0; k < C.n(); ++k) {
            const auto digits = codeword_digits(k, C);
            const auto word = ideal_codeword(k, C, cw);
            for (int j = 1; j <= C.N(); ++j) {
                auto flipped = digits;
                flipped[static_cast<std::size_t>(j - 1)] ^= 1;
                const auto target = logical_encode(flipped, C, IdealComb{}, cw);
                res = std::max(res, distance(apply(Xq(j), word), target));
            }
            const double sign = (digits[0] == 1 && digits[1] == 1) ? -1.0 : 1.0;
            res = std::max(res, distance(apply(phase_gate(1, 2, C.r()), word), word.scaled(sign)));
        }
        record("logical X_j and R_12 on code words", res);
    }
    // Finite-window tracelessness of Z_j.
    {
        double res = 0.0;
        for (int j = 1; j <= nq; ++j) {
            const Ell period = (Ell{1} << j) * r;
            const auto z = Zq(j);
            for (Ell h : {period / 2, 3 * period / 2, 5 * period}) {
                cplx tr{};
                for (Ell ell = -h; ell < h; ++ell) {
                    tr += z.terms()[0].diagonal(ell);
                }
                res = std::max(res, std::abs(tr));
            }
        }
        record("finite-window trace of Z_j", res);
    }
    return out;
}

inline bool all_passed(const std::vector<SuiteResult> &results) {
    return std::all_of(results.begin(), results.end(), [](const SuiteResult &s) { return s.passed; });
}

}  // namespace rotorq
