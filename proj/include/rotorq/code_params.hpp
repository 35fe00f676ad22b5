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

#pragma once

#include <cstdint>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include "rotorq/error.hpp"
#include "rotorq/rotor_state.hpp"

namespace rotorq {

/// Arithmetic skeleton of the rotor code: N digits of dimension d protected
/// against momentum shifts |e| <= delta_L.
///
///   r = 2 delta_L + 1   momentum residue classes
///   n = d^N             logical dimension
///   m = n r             comb spacing; S_theta = V^m
///
/// Correctable drifts satisfy |eps| < pi/m and |e| < r/2.
class CodeParams {
   public:
    CodeParams(int d, int N, int delta_L) : d_(d), N_(N), delta_L_(delta_L) {
        if (d < 2) {
            throw InvalidArgument("CodeParams: d must be >= 2");
        }
        if (N < 1) {
            throw InvalidArgument("CodeParams: N must be >= 1");
        }
        if (delta_L < 0) {
            throw InvalidArgument("CodeParams: delta_L must be >= 0");
        }
        r_ = 2 * static_cast<Ell>(delta_L) + 1;
        // Keep m well inside int64 so that ell + m shifts never overflow.
        constexpr Ell limit = Ell{1} << 52;
        Ell n = 1;
        for (int j = 0; j < N; ++j) {
            if (n > limit / d) {
                throw InvalidArgument("CodeParams: d^N too large");
            }
            n *= d;
        }
        if (n > limit / r_) {
            throw InvalidArgument("CodeParams: d^N (2 delta_L + 1) too large");
        }
        n_ = n;
        m_ = n * r_;
    }

    int d() const {
        return d_;
    }
    int N() const {
        return N_;
    }
    int delta_L() const {
        return delta_L_;
    }
    Ell r() const {
        return r_;
    }
    Ell n() const {
        return n_;
    }
    Ell m() const {
        return m_;
    }
    /// d^(j-1) r: the momentum block size addressed by digit j (1-based).
    Ell block(int j) const {
        if (j < 1 || j > N_) {
            throw InvalidArgument("CodeParams::block: digit index out of range");
        }
        Ell b = r_;
        for (int i = 1; i < j; ++i) {
            b *= d_;
        }
        return b;
    }
    double angle_bound() const {
        return std::numbers::pi / static_cast<double>(m_);
    }
    double momentum_bound() const {
        return static_cast<double>(r_) / 2.0;
    }

    std::string describe() const {
        std::ostringstream s;
        s << "d=" << d_ << " N=" << N_ << " delta_L=" << delta_L_ << " r=" << r_ << " n=" << n_ << " m=" << m_;
        return s.str();
    }

    friend bool operator==(const CodeParams &, const CodeParams &) = default;

   private:
    int d_;
    int N_;
    int delta_L_;
    Ell r_ = 1, n_ = 1, m_ = 1;
};

}  // namespace rotorq
