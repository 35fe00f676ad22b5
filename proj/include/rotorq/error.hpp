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

#include <stdexcept>
#include <string>

namespace rotorq {

/// Rejected input: a precondition of the called operation does not hold.
/// The CLI maps this to exit status 1.
class InvalidArgument : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A strict-mode operator application would push amplitude across the
/// state's storage window.
class SupportViolation : public InvalidArgument {
   public:
    SupportViolation(const std::string &what, long long offending_ell)
        : InvalidArgument(what), offending_ell_(offending_ell) {
    }
    long long offending_ell() const noexcept {
        return offending_ell_;
    }

   private:
    long long offending_ell_;
};

/// A numerical procedure (quadrature, projection) could not deliver the
/// requested accuracy. The CLI maps this to exit status 2.
class NumericalFailure : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace rotorq
