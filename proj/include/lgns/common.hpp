// Copyright 2026 The lgns Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file common.hpp
 * @brief Shared point types, exceptions and the dimension guard.
 */
#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace lgns {

template <int Dim>
using Point = std::array<double, Dim>;

/// Base class of all runtime failures raised by the solver.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An upwind foot left the closed domain: Δt‖w‖_{1,∞} < 1 did not hold.
class CflViolation : public Error {
public:
    using Error::Error;
};

class SolverFailure : public Error {
public:
    using Error::Error;
};

/// Only the unit square and unit cube are supported.
inline void validate_dimension(int d)
{
    if (d != 2 && d != 3) {
        throw std::invalid_argument("dimension must be 2 or 3, got " + std::to_string(d));
    }
}

template <int Dim>
constexpr void check_dim()
{
    static_assert(Dim == 2 || Dim == 3, "lgns supports d = 2 and d = 3 only");
}

/// Reference simplex volume 1/d!.
template <int Dim>
constexpr double reference_volume()
{
    return Dim == 2 ? 0.5 : 1.0 / 6.0;
}

}  // namespace lgns
