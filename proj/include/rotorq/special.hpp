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

// Error-function helpers that stay accurate in the far tail, where erfc
// itself underflows long before the quantities built from it do.

#pragma once

#include <cmath>
#include <numbers>

#include "rotorq/error.hpp"

namespace rotorq::special {

namespace detail {

// Below this the product exp(x^2) * erfc(x) loses nothing: erfc is
// accurate to a few ulp and exp(x^2) stays far from overflow.
inline constexpr double kErfcxDirectLimit = 5.0;

// Laplace continued fraction
//   erfc(x) = exp(-x^2)/sqrt(pi) / (x + (1/2)/(x + (2/2)/(x + (3/2)/(x + ...))))
// evaluated bottom-up. 120 levels reach full double precision for x >= 5.
inline double erfcx_continued_fraction(double x) {
    double tail = 0.0;
    for (int k = 120; k >= 1; --k) {
        tail = (0.5 * k) / (x + tail);
    }
    return 1.0 / (std::sqrt(std::numbers::pi) * (x + tail));
}

}  // namespace detail

/// Scaled complementary error function exp(x^2) erfc(x).
inline double erfcx(double x) {
    if (std::isnan(x)) {
        return x;
    }
    if (x < 0.0) {
        return 2.0 * std::exp(x * x) - erfcx(-x);
    }
    if (x < detail::kErfcxDirectLimit) {
        return std::exp(x * x) * std::erfc(x);
    }
    return detail::erfcx_continued_fraction(x);
}

/// Natural log of erfc(x), finite for every finite x.
inline double log_erfc(double x) {
    if (x < detail::kErfcxDirectLimit) {
        return std::log(std::erfc(x));
    }
    return -x * x + std::log(detail::erfcx_continued_fraction(x));
}

/// ln(erf(b) - erf(a)) for 0 <= a <= b. Avoids forming 1 - erf(.) so the
/// result keeps full relative accuracy down to values far below the double
/// underflow threshold.
inline double log_erf_difference(double a, double b) {
    if (!(a >= 0.0) || !(b >= a)) {
        throw InvalidArgument("log_erf_difference: requires 0 <= a <= b");
    }
    if (a == b) {
        return -INFINITY;
    }
    if (a < 0.5) {
        return std::log(std::erf(b) - std::erf(a));
    }
    const double la = log_erfc(a);
    const double lb = log_erfc(b);
    return la + std::log1p(-std::exp(lb - la));
}

/// erf(b) - erf(a) for 0 <= a <= b, evaluated as exp of log_erf_difference.
inline double erf_difference(double a, double b) {
    return std::exp(log_erf_difference(a, b));
}

}  // namespace rotorq::special
