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

// Globally adaptive Gauss-Kronrod (10/21) integration in the style of
// QUADPACK's QAG, with optional user breakpoints for integrands that have
// known narrow features or oscillation nodes.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <queue>
#include <sstream>
#include <vector>

#include "rotorq/error.hpp"

namespace rotorq::quad {

struct Options {
    double abs_tol = 1e-10;
    double rel_tol = 0.0;
    std::size_t max_evaluations = 1'000'000;
};

struct Result {
    double value = 0.0;
    double abs_error = 0.0;
    std::size_t evaluations = 0;
    bool converged = false;
};

namespace detail {

inline constexpr double kXgk[11] = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
inline constexpr double kWgk[11] = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
// 10-point Gauss weights at the odd-indexed Kronrod abscissae.
inline constexpr double kWg[5] = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Segment {
    double a, b, value, error;
    bool operator<(const Segment &o) const {
        return error < o.error;
    }
};

template <class F>
Segment gk21(const F &f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double resk = fc * kWgk[10];
    double resabs = std::abs(resk);
    double resg = 0.0;
    double fv1[10], fv2[10];
    for (int j = 0; j < 10; ++j) {
        const double x = half * kXgk[j];
        fv1[j] = f(center - x);
        fv2[j] = f(center + x);
        const double sum = fv1[j] + fv2[j];
        resk += kWgk[j] * sum;
        resabs += kWgk[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
        if (j % 2 == 1) {
            resg += kWg[j / 2] * sum;
        }
    }
    const double reskh = 0.5 * resk;
    double resasc = kWgk[10] * std::abs(fc - reskh);
    for (int j = 0; j < 10; ++j) {
        resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
    }
    const double value = resk * half;
    resabs *= std::abs(half);
    resasc *= std::abs(half);
    double err = std::abs((resk - resg) * half);
    if (resasc != 0.0 && err != 0.0) {
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    }
    constexpr double eps = std::numeric_limits<double>::epsilon();
    if (resabs > std::numeric_limits<double>::min() / (50.0 * eps)) {
        err = std::max(50.0 * eps * resabs, err);
    }
    return {a, b, value, err};
}

}  // namespace detail

/// Integrate f over [a, b]. `breakpoints` (any order, out-of-range values
/// ignored) seed the initial partition.
template <class F>
Result integrate(const F &f, double a, double b, const std::vector<double> &breakpoints = {},
                 const Options &opt = {}) {
    if (!(std::isfinite(a) && std::isfinite(b))) {
        throw InvalidArgument("quad::integrate: limits must be finite");
    }
    Result out;
    if (a == b) {
        out.converged = true;
        return out;
    }
    double sign = 1.0;
    if (a > b) {
        std::swap(a, b);
        sign = -1.0;
    }
    std::vector<double> cuts{a};
    for (double p : breakpoints) {
        if (p > a && p < b) {
            cuts.push_back(p);
        }
    }
    cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::priority_queue<detail::Segment> heap;
    double total = 0.0;
    double total_err = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        auto s = detail::gk21(f, cuts[i], cuts[i + 1]);
        out.evaluations += 21;
        total += s.value;
        total_err += s.error;
        heap.push(s);
    }
    auto tolerance = [&] { return std::max(opt.abs_tol, opt.rel_tol * std::abs(total)); };
    while (total_err > tolerance()) {
        if (out.evaluations + 42 > opt.max_evaluations) {
            break;
        }
        auto worst = heap.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            break;  // interval exhausted at machine resolution
        }
        heap.pop();
        auto left = detail::gk21(f, worst.a, mid);
        auto right = detail::gk21(f, mid, worst.b);
        out.evaluations += 42;
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }
    // Re-sum to shed the drift of the running updates.
    total = 0.0;
    total_err = 0.0;
    while (!heap.empty()) {
        total += heap.top().value;
        total_err += heap.top().error;
        heap.pop();
    }
    out.value = sign * total;
    out.abs_error = total_err;
    out.converged = total_err <= std::max(opt.abs_tol, opt.rel_tol * std::abs(total));
    return out;
}

/// As integrate(), but throws NumericalFailure when the tolerance is missed.
template <class F>
Result integrate_or_throw(const F &f, double a, double b, const std::vector<double> &breakpoints,
                          const Options &opt, const char *what) {
    auto r = integrate(f, a, b, breakpoints, opt);
    if (!r.converged) {
        std::ostringstream msg;
        msg << what << ": quadrature did not converge on [" << a << ", " << b
            << "] (estimated error " << r.abs_error << ", tolerance " << opt.abs_tol << ", "
            << r.evaluations << " evaluations)";
        throw NumericalFailure(msg.str());
    }
    return r;
}

}  // namespace rotorq::quad
