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

#include "rotorq/quadrature.hpp"

namespace quad = rotorq::quad;

namespace {

TEST(Quadrature, KronrodRuleIsExactForHighDegreePolynomials) {
    // Both embedded rules are exact through degree 19, so the error
    // estimate vanishes and one 21-point panel suffices.
    const auto r = quad::integrate([](double x) { return std::pow(x, 19); }, 0.0, 1.0);
    EXPECT_NEAR(r.value, 1.0 / 20.0, 1e-16);
    EXPECT_EQ(r.evaluations, 21u);
    // Degree 30 is beyond the Gauss rule; subdivision still converges.
    const auto s = quad::integrate([](double x) { return std::pow(x, 30); }, 0.0, 1.0);
    EXPECT_TRUE(s.converged);
    EXPECT_NEAR(s.value, 1.0 / 31.0, 1e-15);
}

TEST(Quadrature, SmoothIntegrand) {
    const auto r = quad::integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi);
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.value, 2.0, 1e-13);
}

TEST(Quadrature, EndpointSingularity) {
    quad::Options opt;
    opt.abs_tol = 1e-9;
    const auto r = quad::integrate([](double x) { return x > 0 ? 1.0 / std::sqrt(x) : 0.0; }, 0.0, 1.0, {}, opt);
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.value, 2.0, 1e-8);
}

TEST(Quadrature, OscillatoryWithBreakpoints) {
    std::vector<double> bp;
    for (int k = 1; k < 200; ++k) {
        bp.push_back(k * std::numbers::pi / 200.0);
    }
    const auto r = quad::integrate([](double x) { return std::cos(200.0 * x) * std::exp(-x); }, 0.0,
                                   std::numbers::pi, bp);
    // int_0^pi e^{-x} cos(a x) dx = (1 - e^{-pi}) / (1 + a^2) for even a.
    EXPECT_NEAR(r.value, (1.0 - std::exp(-std::numbers::pi)) / (1.0 + 200.0 * 200.0), 1e-12);
}

TEST(Quadrature, ReversedLimitsFlipSign) {
    const auto f = [](double x) { return x * x; };
    EXPECT_NEAR(quad::integrate(f, 1.0, 0.0).value, -1.0 / 3.0, 1e-15);
    EXPECT_EQ(quad::integrate(f, 0.5, 0.5).value, 0.0);
}

TEST(Quadrature, BudgetExhaustionIsReported) {
    quad::Options opt;
    opt.abs_tol = 1e-14;
    opt.max_evaluations = 100;
    const auto f = [](double x) { return std::sin(1.0 / (x + 1e-3)); };
    EXPECT_FALSE(quad::integrate(f, 0.0, 1.0, {}, opt).converged);
    EXPECT_THROW(quad::integrate_or_throw(f, 0.0, 1.0, {}, opt, "test"), rotorq::NumericalFailure);
}

TEST(Quadrature, RejectsNonFiniteLimits) {
    EXPECT_THROW(quad::integrate([](double) { return 1.0; }, 0.0, INFINITY), rotorq::InvalidArgument);
}

}  // namespace
