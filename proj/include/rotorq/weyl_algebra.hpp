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

// Operators on the rotor, kept symbolic as finite sums of
//
//     (momentum shift s) x (diagonal phase function f)
//
// where a term maps a_ell |ell> to f(ell) a_ell |ell + s>. Every operator the
// encoding needs is of this form: the rotor Weyl pair exp(i alpha L) and V,
// the encoded qubit and qudit Weyl pairs, the phase gate and the stabilizer.
// Nothing is materialized as a matrix, so the same operator acts exactly on
// a state of any window.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rotorq/code_params.hpp"
#include "rotorq/error.hpp"
#include "rotorq/rotor_state.hpp"

namespace rotorq {

using Diagonal = std::function<cplx(Ell)>;

struct ShiftTerm {
    Ell shift = 0;
    Diagonal diagonal;
};

class ShiftDiagonalOperator {
   public:
    ShiftDiagonalOperator(std::vector<ShiftTerm> terms, std::string label)
        : terms_(std::move(terms)), label_(std::move(label)) {
        for (const auto &t : terms_) {
            if (!t.diagonal) {
                throw InvalidArgument("ShiftDiagonalOperator: empty diagonal function");
            }
        }
    }

    const std::vector<ShiftTerm> &terms() const {
        return terms_;
    }
    const std::string &label() const {
        return label_;
    }
    ShiftDiagonalOperator relabeled(std::string label) const {
        return ShiftDiagonalOperator(terms_, std::move(label));
    }

    Ell min_shift() const {
        Ell s = 0;
        for (const auto &t : terms_) {
            s = std::min(s, t.shift);
        }
        return s;
    }
    Ell max_shift() const {
        Ell s = 0;
        for (const auto &t : terms_) {
            s = std::max(s, t.shift);
        }
        return s;
    }
    Ell max_abs_shift() const {
        return std::max(-min_shift(), max_shift());
    }

   private:
    std::vector<ShiftTerm> terms_;
    std::string label_;
};

// ---------------------------------------------------------------------------
// Construction and algebra

/// exp(2 pi i k / d), exact at multiples of a quarter turn.
inline cplx root_of_unity(Ell k, Ell d) {
    k = floor_mod(k, d);
    if ((4 * k) % d == 0) {
        switch ((4 * k) / d) {
            case 0: return {1.0, 0.0};
            case 1: return {0.0, 1.0};
            case 2: return {-1.0, 0.0};
            default: return {0.0, -1.0};
        }
    }
    return std::polar(1.0, kTwoPi * static_cast<double>(k) / static_cast<double>(d));
}

inline ShiftDiagonalOperator diagonal_operator(Diagonal f, std::string label) {
    return ShiftDiagonalOperator({{0, std::move(f)}}, std::move(label));
}

inline ShiftDiagonalOperator identity_operator() {
    return diagonal_operator([](Ell) { return cplx{1.0, 0.0}; }, "1");
}

/// Term-product expansion: (s_a, f_a)(s_b, f_b) = (s_a + s_b, l -> f_a(l + s_b) f_b(l)).
/// Applying the result equals applying b, then a.
inline ShiftDiagonalOperator compose(const ShiftDiagonalOperator &a, const ShiftDiagonalOperator &b) {
    std::vector<ShiftTerm> terms;
    terms.reserve(a.terms().size() * b.terms().size());
    for (const auto &ta : a.terms()) {
        for (const auto &tb : b.terms()) {
            terms.push_back({ta.shift + tb.shift, [fa = ta.diagonal, fb = tb.diagonal, sb = tb.shift](Ell ell) {
                                 return fa(ell + sb) * fb(ell);
                             }});
        }
    }
    return ShiftDiagonalOperator(std::move(terms), a.label() + "*" + b.label());
}

inline ShiftDiagonalOperator operator+(const ShiftDiagonalOperator &a, const ShiftDiagonalOperator &b) {
    std::vector<ShiftTerm> terms(a.terms());
    terms.insert(terms.end(), b.terms().begin(), b.terms().end());
    return ShiftDiagonalOperator(std::move(terms), "(" + a.label() + "+" + b.label() + ")");
}

inline ShiftDiagonalOperator operator*(cplx c, const ShiftDiagonalOperator &a) {
    std::vector<ShiftTerm> terms;
    for (const auto &t : a.terms()) {
        terms.push_back({t.shift, [c, f = t.diagonal](Ell ell) { return c * f(ell); }});
    }
    std::ostringstream label;
    label << c << "*" << a.label();
    return ShiftDiagonalOperator(std::move(terms), label.str());
}

inline ShiftDiagonalOperator operator-(const ShiftDiagonalOperator &a, const ShiftDiagonalOperator &b) {
    return (a + cplx{-1.0, 0.0} * b).relabeled("(" + a.label() + "-" + b.label() + ")");
}

/// Hermitian adjoint: (s, f) -> (-s, l -> conj f(l - s)).
inline ShiftDiagonalOperator adjoint(const ShiftDiagonalOperator &a) {
    std::vector<ShiftTerm> terms;
    for (const auto &t : a.terms()) {
        terms.push_back({-t.shift, [s = t.shift, f = t.diagonal](Ell ell) { return std::conj(f(ell - s)); }});
    }
    return ShiftDiagonalOperator(std::move(terms), a.label() + "^dag");
}

/// a^k for k >= 0, by repeated composition.
inline ShiftDiagonalOperator power(const ShiftDiagonalOperator &a, int k) {
    if (k < 0) {
        throw InvalidArgument("power: negative exponent");
    }
    ShiftDiagonalOperator out = identity_operator();
    for (int i = 0; i < k; ++i) {
        out = compose(a, out);
    }
    return out.relabeled(a.label() + "^" + std::to_string(k));
}

// ---------------------------------------------------------------------------
// Application

enum class SupportMode { strict, clip };

/// strict: the state's nonzero amplitudes must sit at least safe_margin
/// inside its window; the result window grows so nothing is lost.
/// clip: the window is kept, shifted-out amplitude is discarded and
/// recorded as leakage, and a normalized input is renormalized.
/// A negative safe_margin means "the operator's max |shift|".
struct SupportPolicy {
    SupportMode mode = SupportMode::strict;
    Ell safe_margin = -1;

    static SupportPolicy clip() {
        return {SupportMode::clip, 0};
    }
};

struct Applied {
    RotorState state;
    /// Fraction of the output norm^2 discarded at the window edge.
    double leakage = 0.0;
};

namespace detail {

inline Ell strict_margin(const ShiftDiagonalOperator &op, const SupportPolicy &policy) {
    const Ell need = op.max_abs_shift();
    const Ell margin = policy.safe_margin < 0 ? need : policy.safe_margin;
    if (margin < need) {
        std::ostringstream msg;
        msg << "SupportPolicy: safe_margin " << margin << " is below the max shift " << need << " of "
            << op.label();
        throw InvalidArgument(msg.str());
    }
    return margin;
}

inline void require_safe_support(const RotorState &s, Ell margin, const std::string &what) {
    auto sup = s.support();
    if (!sup) {
        return;
    }
    if (sup->first - s.l_min() < margin) {
        std::ostringstream msg;
        msg << what << ": amplitude at ell=" << sup->first << " lies within " << margin
            << " of the window edge " << s.l_min();
        throw SupportViolation(msg.str(), sup->first);
    }
    if (s.l_max() - sup->second < margin) {
        std::ostringstream msg;
        msg << what << ": amplitude at ell=" << sup->second << " lies within " << margin
            << " of the window edge " << s.l_max();
        throw SupportViolation(msg.str(), sup->second);
    }
}

/// Full term-sum action on the widened window.
inline RotorState act(const ShiftDiagonalOperator &op, const RotorState &s) {
    const Ell lo = s.l_min() + op.min_shift();
    const Ell hi = s.l_max() + op.max_shift();
    std::vector<cplx> out(static_cast<std::size_t>(hi - lo + 1));
    const auto amps = s.amplitudes();
    for (const auto &t : op.terms()) {
        for (std::size_t i = 0; i < amps.size(); ++i) {
            if (amps[i] == cplx{}) {
                continue;
            }
            const Ell ell = s.l_min() + static_cast<Ell>(i);
            out[static_cast<std::size_t>(ell + t.shift - lo)] += t.diagonal(ell) * amps[i];
        }
    }
    return RotorState(lo, std::move(out));
}

}  // namespace detail

inline Applied apply_with_leakage(const ShiftDiagonalOperator &op, const RotorState &s,
                                  const SupportPolicy &policy = {}) {
    if (policy.mode == SupportMode::strict) {
        const Ell margin = detail::strict_margin(op, policy);
        detail::require_safe_support(s, margin, "apply(" + op.label() + ")");
        return {detail::act(op, s), 0.0};
    }
    RotorState wide = detail::act(op, s);
    const double total = wide.norm_squared();
    std::vector<cplx> kept(s.size());
    double kept_mass = 0.0;
    for (Ell ell = s.l_min(); ell <= s.l_max(); ++ell) {
        const cplx a = wide.amplitude(ell);
        kept[static_cast<std::size_t>(ell - s.l_min())] = a;
        kept_mass += std::norm(a);
    }
    RotorState clipped(s.l_min(), std::move(kept));
    const double leakage = total > 0.0 ? (total - kept_mass) / total : 0.0;
    if (s.normalized() && kept_mass > 0.0) {
        clipped = clipped.normalized_copy();
    }
    return {std::move(clipped), std::max(leakage, 0.0)};
}

inline RotorState apply(const ShiftDiagonalOperator &op, const RotorState &s, const SupportPolicy &policy = {}) {
    return apply_with_leakage(op, s, policy).state;
}

/// max over probes of || (ab - ba) |probe> ||. Probes must have strict-safe
/// support for both operators.
inline double commutator_norm(const ShiftDiagonalOperator &a, const ShiftDiagonalOperator &b,
                              std::span<const RotorState> probes) {
    const Ell margin = std::max(a.max_abs_shift(), b.max_abs_shift());
    double worst = 0.0;
    for (const auto &p : probes) {
        detail::require_safe_support(p, margin, "commutator_norm(" + a.label() + ", " + b.label() + ")");
        const RotorState ab = detail::act(a, detail::act(b, p));
        const RotorState ba = detail::act(b, detail::act(a, p));
        worst = std::max(worst, distance(ab, ba));
    }
    return worst;
}

/// max over probes of || a|probe> - b|probe> ||.
inline double action_difference(const ShiftDiagonalOperator &a, const ShiftDiagonalOperator &b,
                                std::span<const RotorState> probes) {
    double worst = 0.0;
    for (const auto &p : probes) {
        worst = std::max(worst, distance(detail::act(a, p), detail::act(b, p)));
    }
    return worst;
}

/// Operator equality up to term order: compare actions on the basis kets
/// |lo>, ..., |hi>.
inline double action_difference_on_kets(const ShiftDiagonalOperator &a, const ShiftDiagonalOperator &b, Ell lo,
                                        Ell hi) {
    double worst = 0.0;
    for (Ell ell = lo; ell <= hi; ++ell) {
        const RotorState k = RotorState::basis(ell);
        worst = std::max(worst, distance(detail::act(a, k), detail::act(b, k)));
    }
    return worst;
}

// ---------------------------------------------------------------------------
// Named operators

/// exp(i alpha L): shifts angular position, |theta> -> |theta - alpha>.
inline ShiftDiagonalOperator angle_shift(double alpha) {
    std::ostringstream label;
    label << "exp(i*" << alpha << "*L)";
    return diagonal_operator([alpha](Ell ell) { return std::polar(1.0, alpha * static_cast<double>(ell)); },
                             label.str());
}

/// V^k: |ell> -> |ell + k>.
inline ShiftDiagonalOperator momentum_shift(Ell k) {
    return ShiftDiagonalOperator({{k, [](Ell) { return cplx{1.0, 0.0}; }}}, "V^" + std::to_string(k));
}

/// exp(i alpha floor(L/block)): angle shift of the residual rotor left after
/// factoring out the first `block` momenta.
inline ShiftDiagonalOperator residual_angle_shift(double alpha, Ell block) {
    if (block < 1) {
        throw InvalidArgument("residual_angle_shift: block must be >= 1");
    }
    std::ostringstream label;
    label << "exp(i*" << alpha << "*floor(L/" << block << "))";
    return diagonal_operator(
        [alpha, block](Ell ell) { return std::polar(1.0, alpha * static_cast<double>(floor_div(ell, block))); },
        label.str());
}

namespace detail {

inline Ell digit_block(int j, Ell base, Ell r, const char *what) {
    if (j < 1) {
        throw InvalidArgument(std::string(what) + ": digit index j must be >= 1");
    }
    if (r < 1) {
        throw InvalidArgument(std::string(what) + ": r must be >= 1");
    }
    Ell b = r;
    for (int i = 1; i < j; ++i) {
        if (b > (Ell{1} << 52) / base) {
            throw InvalidArgument(std::string(what) + ": block size overflows");
        }
        b *= base;
    }
    return b;
}

}  // namespace detail

/// Z_j = (-1)^floor(L / (2^(j-1) r)).
inline ShiftDiagonalOperator qubit_Z(int j, Ell r) {
    const Ell b = detail::digit_block(j, 2, r, "qubit_Z");
    return diagonal_operator([b](Ell ell) { return floor_mod(floor_div(ell, b), 2) == 0 ? cplx{1.0} : cplx{-1.0}; },
                             "Z_" + std::to_string(j));
}

/// X_j = ((1 + Z_j) V^(-s) + V^s (1 + Z_j)) / 2 with s = 2^(j-1) r,
/// expanded into four shift-diagonal terms.
inline ShiftDiagonalOperator qubit_X(int j, Ell r) {
    const Ell s = detail::digit_block(j, 2, r, "qubit_X");
    const auto one_plus_z = identity_operator() + qubit_Z(j, r);
    const auto x = cplx{0.5} * (compose(one_plus_z, momentum_shift(-s)) + compose(momentum_shift(s), one_plus_z));
    return x.relabeled("X_" + std::to_string(j));
}

/// Projector onto the +1 eigenspace of Z_j^(d): floor(L/s) = 0 mod d.
inline ShiftDiagonalOperator qudit_projector(int j, int d, Ell r) {
    if (d < 2) {
        throw InvalidArgument("qudit_projector: d must be >= 2");
    }
    const Ell s = detail::digit_block(j, d, r, "qudit_projector");
    return diagonal_operator([s, d](Ell ell) { return floor_mod(floor_div(ell, s), d) == 0 ? cplx{1.0} : cplx{}; },
                             "P_" + std::to_string(j));
}

/// Qudit Weyl pair (Z_j^(d), X_j^(d)) with s = d^(j-1) r:
///   Z = omega^floor(L/s),  omega = exp(2 pi i / d)
///   X = V^s - (1 - V^(-d s)) P V^s
/// where P projects onto floor(L/s) = 0 mod d. X advances digit j cyclically.
inline std::pair<ShiftDiagonalOperator, ShiftDiagonalOperator> qudit_pair(int j, int d, Ell r) {
    if (d < 2) {
        throw InvalidArgument("qudit_pair: d must be >= 2");
    }
    const Ell s = detail::digit_block(j, d, r, "qudit_pair");
    auto z = diagonal_operator([s, d](Ell ell) { return root_of_unity(floor_div(ell, s), d); },
                               "Z_" + std::to_string(j) + "^(" + std::to_string(d) + ")");
    const auto vs = momentum_shift(s);
    const auto wrap = identity_operator() - momentum_shift(-static_cast<Ell>(d) * s);
    auto x = (vs - compose(wrap, compose(qudit_projector(j, d, r), vs)))
                 .relabeled("X_" + std::to_string(j) + "^(" + std::to_string(d) + ")");
    return {std::move(z), std::move(x)};
}

/// Entangling phase gate on digits j and k:
///   l -> (1 + (-1)^l_j)/2 + (1 - (-1)^l_j)/2 (-1)^l_k,  l_i = floor(l / (2^(i-1) r)).
inline ShiftDiagonalOperator phase_gate(int j, int k, Ell r) {
    if (j == k) {
        throw InvalidArgument("phase_gate: j and k must differ");
    }
    const Ell bj = detail::digit_block(j, 2, r, "phase_gate");
    const Ell bk = detail::digit_block(k, 2, r, "phase_gate");
    auto sign = [](Ell x) { return floor_mod(x, 2) == 0 ? 1.0 : -1.0; };
    return diagonal_operator(
        [bj, bk, sign](Ell ell) {
            const double pj = sign(floor_div(ell, bj));
            const double pk = sign(floor_div(ell, bk));
            return cplx{(1.0 + pj) / 2.0 + (1.0 - pj) / 2.0 * pk};
        },
        "R_" + std::to_string(j) + std::to_string(k));
}

/// Stabilizer generators S_theta = V^m and S_L = exp(2 pi i (n/m) L) = exp(2 pi i L / r).
struct Stabilizers {
    ShiftDiagonalOperator s_theta;
    ShiftDiagonalOperator s_L;
};

inline Stabilizers stabilizer_ops(const CodeParams &params) {
    const Ell r = params.r();
    return {momentum_shift(params.m()).relabeled("S_theta"),
            diagonal_operator([r](Ell ell) { return root_of_unity(ell, r); }, "S_L")};
}

/// Operators for digit j of a code: the qubit pair when d = 2, the qudit pair otherwise.
inline std::pair<ShiftDiagonalOperator, ShiftDiagonalOperator> digit_pair(int j, const CodeParams &params) {
    if (params.d() == 2) {
        return {qubit_Z(j, params.r()), qubit_X(j, params.r())};
    }
    return qudit_pair(j, params.d(), params.r());
}

}  // namespace rotorq
