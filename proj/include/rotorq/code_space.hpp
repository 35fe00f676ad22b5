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

// Code words and the relabeling of |ell> by digits, momentum residue and
// residual rotor index:
//
//     ell = sum_j p_j d^(j-1) r + q + floor(ell/m) m
//
// Code word k is the comb on ell = k r (mod m). Finite states are unit
// normalized in ell-space; the infinite-comb prefactors are not used.

#pragma once

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>
#include <variant>
#include <vector>

#include "rotorq/approximant.hpp"
#include "rotorq/code_params.hpp"
#include "rotorq/error.hpp"
#include "rotorq/rotor_state.hpp"

namespace rotorq {

struct LogicalLabels {
    /// p_1..p_N; digits[j-1] is p_j.
    std::vector<int> digits;
    Ell q = 0;
    Ell rotor_index = 0;

    friend bool operator==(const LogicalLabels &, const LogicalLabels &) = default;
};

inline LogicalLabels logical_labels(Ell ell, const CodeParams &params) {
    LogicalLabels out;
    out.rotor_index = floor_div(ell, params.m());
    Ell rest = floor_mod(ell, params.m());
    out.q = rest % params.r();
    rest /= params.r();
    out.digits.resize(static_cast<std::size_t>(params.N()));
    for (auto &p : out.digits) {
        p = static_cast<int>(rest % params.d());
        rest /= params.d();
    }
    return out;
}

/// Inverse of logical_labels.
inline Ell reconstruct(const LogicalLabels &labels, const CodeParams &params) {
    Ell ell = labels.q + labels.rotor_index * params.m();
    for (int j = 1; j <= params.N(); ++j) {
        ell += labels.digits[static_cast<std::size_t>(j - 1)] * params.block(j);
    }
    return ell;
}

/// Sign-and-magnitude binary labels: Z_1 = 1 for ell < 0, Z_k (k >= 2) is
/// bit k-2 of |ell| mod 2^(N-1).
inline std::vector<int> binary_labels(Ell ell, int N, Ell window_half) {
    if (N < 1 || N > 62) {
        throw InvalidArgument("binary_labels: N must be in [1, 62]");
    }
    if (window_half < 0 || std::llabs(ell) > window_half) {
        std::ostringstream msg;
        msg << "binary_labels: ell=" << ell << " outside the window [-" << window_half << ", " << window_half << "]";
        throw InvalidArgument(msg.str());
    }
    std::vector<int> bits(static_cast<std::size_t>(N));
    bits[0] = ell < 0 ? 1 : 0;
    const Ell mag = std::llabs(ell) % (Ell{1} << (N - 1));
    for (int k = 2; k <= N; ++k) {
        bits[static_cast<std::size_t>(k - 1)] = static_cast<int>((mag >> (k - 2)) & 1);
    }
    return bits;
}

struct TableRow {
    Ell ell;
    LogicalLabels labels;
};

inline std::vector<TableRow> encoding_table(const CodeParams &params, Ell lo, Ell hi) {
    if (lo > hi) {
        throw InvalidArgument("encoding_table: empty range");
    }
    std::vector<TableRow> rows;
    for (Ell ell = lo; ell <= hi; ++ell) {
        rows.push_back({ell, logical_labels(ell, params)});
    }
    return rows;
}

/// Ideal code word |k>: equal amplitudes on ell = k r (mod m) inside the
/// half-open window [center - W, center + W), stored with `padding` empty
/// slots on each side (negative: m). With W a multiple of m every code
/// word has exactly 2W/m teeth and X_j, V^r, ... map code words onto each
/// other without truncation loss. `center` lets a comb that was rigidly
/// translated be compared against its code word.
inline RotorState ideal_codeword(Ell k, const CodeParams &params, Ell window_half, Ell padding = -1, Ell center = 0) {
    const Ell m = params.m();
    if (window_half < m) {
        std::ostringstream msg;
        msg << "ideal_codeword: window_half " << window_half << " is below m = " << m;
        throw InvalidArgument(msg.str());
    }
    if (padding < 0) {
        padding = m;
    }
    const Ell lo = center - window_half;
    const Ell hi = center + window_half - 1;
    const Ell residue = floor_mod(k, params.n()) * params.r();
    Ell first = lo + floor_mod(residue - lo, m);
    std::vector<Ell> teeth;
    for (Ell ell = first; ell <= hi; ell += m) {
        teeth.push_back(ell);
    }
    if (teeth.size() < 2) {
        throw InvalidArgument("ideal_codeword: window holds fewer than two comb teeth");
    }
    std::vector<cplx> a(static_cast<std::size_t>(hi - lo + 1 + 2 * padding));
    const double amp = 1.0 / std::sqrt(static_cast<double>(teeth.size()));
    for (Ell ell : teeth) {
        a[static_cast<std::size_t>(ell - lo + padding)] = amp;
    }
    return RotorState(lo - padding, std::move(a));
}

/// Approximate |theta0>: Fourier coefficients of psi(theta - theta0) on
/// [-W, W], after checking the dropped tail mass.
inline RotorState approx_basis_state(double theta0, const Approximant &approx, Ell window_half, Ell padding = 0) {
    if (window_half < 0 || padding < 0) {
        throw InvalidArgument("approx_basis_state: negative window or padding");
    }
    const Profile prof(approx);
    const auto c = prof.coefficients(window_half);
    const double tail = prof.tail_mass(c);
    if (!(tail < kTailTolerance)) {
        std::ostringstream msg;
        msg << "approx_basis_state: window_half " << window_half << " drops Fourier mass " << tail << " of "
            << approx.describe() << " (limit " << kTailTolerance << "); use a larger window";
        throw InvalidArgument(msg.str());
    }
    const Ell lo = -window_half - padding;
    std::vector<cplx> a(static_cast<std::size_t>(2 * (window_half + padding) + 1));
    for (Ell ell = -window_half; ell <= window_half; ++ell) {
        const double cl = c[static_cast<std::size_t>(std::llabs(ell))];
        a[static_cast<std::size_t>(ell - lo)] = cl * std::polar(1.0, -static_cast<double>(ell) * theta0);
    }
    return RotorState(lo, std::move(a)).normalized_copy();
}

/// Approximate code word
///     sum_{j<m} e^{2 pi i k j / n} |psi(theta_j)>,  theta_j = 2 pi j / m,
/// normalized after summation. Since
///     sum_j e^{2 pi i j (k r - ell) / m} = m [ell = k r mod m],
/// the sum is the approximant's Fourier envelope restricted to the comb
/// of code word k; it is built in that form.
inline RotorState approx_codeword(Ell k, const CodeParams &params, const Approximant &approx, Ell window_half,
                                  Ell padding = -1) {
    const Ell m = params.m();
    if (padding < 0) {
        padding = m;
    }
    const Profile prof(approx);
    const auto c = prof.coefficients(window_half);
    const double tail = prof.tail_mass(c);
    if (!(tail < kTailTolerance)) {
        std::ostringstream msg;
        msg << "approx_codeword: window_half " << window_half << " drops Fourier mass " << tail << " of "
            << approx.describe() << " (limit " << kTailTolerance << "); use a larger window";
        throw InvalidArgument(msg.str());
    }
    const Ell residue = floor_mod(k, params.n()) * params.r();
    const Ell lo = -window_half - padding;
    std::vector<cplx> a(static_cast<std::size_t>(2 * (window_half + padding) + 1));
    bool any = false;
    for (Ell ell = -window_half; ell <= window_half; ++ell) {
        if (floor_mod(ell - residue, m) == 0) {
            const double cl = c[static_cast<std::size_t>(std::llabs(ell))];
            a[static_cast<std::size_t>(ell - lo)] = cl;
            any = any || cl != 0.0;
        }
    }
    if (!any) {
        std::ostringstream msg;
        msg << "approx_codeword: " << approx.describe() << " has no Fourier weight on the comb of code word " << k
            << " (" << params.describe() << ")";
        throw InvalidArgument(msg.str());
    }
    return RotorState(lo, std::move(a)).normalized_copy();
}

/// Marker for the ideal (comb) code words in logical_encode.
struct IdealComb {};
using CodewordKind = std::variant<IdealComb, Approximant>;

/// k = sum_j digits_j d^(j-1).
inline Ell codeword_index(const std::vector<int> &digits, const CodeParams &params) {
    if (static_cast<int>(digits.size()) != params.N()) {
        std::ostringstream msg;
        msg << "codeword_index: expected " << params.N() << " digits, got " << digits.size();
        throw InvalidArgument(msg.str());
    }
    Ell k = 0;
    Ell w = 1;
    for (int p : digits) {
        if (p < 0 || p >= params.d()) {
            std::ostringstream msg;
            msg << "codeword_index: digit " << p << " outside [0, " << params.d() << ")";
            throw InvalidArgument(msg.str());
        }
        k += p * w;
        w *= params.d();
    }
    return k;
}

inline std::vector<int> codeword_digits(Ell k, const CodeParams &params) {
    std::vector<int> digits(static_cast<std::size_t>(params.N()));
    k = floor_mod(k, params.n());
    for (auto &p : digits) {
        p = static_cast<int>(k % params.d());
        k /= params.d();
    }
    return digits;
}

inline Ell default_window_half(const CodewordKind &kind, const CodeParams &params) {
    if (const auto *a = std::get_if<Approximant>(&kind)) {
        return default_window_half(*a, params);
    }
    return 4 * params.m();
}

inline RotorState logical_encode(const std::vector<int> &digits, const CodeParams &params, const CodewordKind &kind,
                                 Ell window_half, Ell padding = -1) {
    const Ell k = codeword_index(digits, params);
    if (const auto *a = std::get_if<Approximant>(&kind)) {
        return approx_codeword(k, params, *a, window_half, padding);
    }
    return ideal_codeword(k, params, window_half, padding);
}

}  // namespace rotorq
