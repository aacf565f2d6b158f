#!/usr/bin/env python3
# Copyright 2026 The lgns Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Generate include/lgns/detail/mms_closed_forms.hpp.

Differentiates the stream functions of the 2D/3D manufactured Navier-Stokes
solutions symbolically and emits CSE-optimized C++ for the velocity, its
gradient, time derivative and Laplacian, and the pressure gradient.

    python3 tools/gen_mms.py > include/lgns/detail/mms_closed_forms.hpp
"""
import re

import sympy as sp

x1, x2, x3, t = sp.symbols("x1 x2 x3 t", real=True)
pi = sp.pi
S = sp.sin


def stream_2d():
    psi = sp.sqrt(3) / (2 * pi) * S(pi * x1) ** 2 * S(pi * x2) ** 2 * S(pi * (x1 + x2 + t))
    u = [sp.diff(psi, x2), -sp.diff(psi, x1)]
    p = S(pi * (x1 + 2 * x2 + t))
    return [x1, x2], u, p


def stream_3d():
    c = 8 * sp.sqrt(3) / (27 * pi)
    s1, s2, s3 = S(pi * x1), S(pi * x2), S(pi * x3)
    psi = [
        c * s1 * s2**2 * s3**2 * S(pi * (x2 + x3 + t)),
        c * s1**2 * s2 * s3**2 * S(pi * (x3 + x1 + t)),
        c * s1**2 * s2**2 * s3 * S(pi * (x1 + x2 + t)),
    ]
    X = [x1, x2, x3]
    u = [
        sp.diff(psi[2], X[1]) - sp.diff(psi[1], X[2]),
        sp.diff(psi[0], X[2]) - sp.diff(psi[2], X[0]),
        sp.diff(psi[1], X[0]) - sp.diff(psi[0], X[1]),
    ]
    p = S(pi * (x1 + 2 * x2 + x3 + t))
    return X, u, p


def emit(name, X, outputs, out_decl):
    """outputs: flat list of expressions written to out[k]."""
    repl, reduced = sp.cse(outputs, symbols=sp.numbered_symbols("c"), optimizations="basic")
    args = ", ".join(f"double {s}" for s in [*map(str, X), "t"])
    lines = [f"inline void {name}({args}, {out_decl}) {{"]
    for sym, expr in repl:
        lines.append(f"  const double {sym} = {sp.ccode(expr)};")
    for k, expr in enumerate(reduced):
        lines.append(f"  out[{k}] = {sp.ccode(expr)};")
    lines.append("}")
    return "\n".join(lines)


def build(tag, X, u, p):
    d = len(X)
    blocks = []
    blocks.append(emit(f"velocity_{tag}", X, u, f"std::array<double, {d}>& out"))
    blocks.append(emit(f"pressure_{tag}", X, [p], "std::array<double, 1>& out"))
    grad = [sp.diff(u[i], X[j]) for i in range(d) for j in range(d)]
    blocks.append(emit(f"velocity_gradient_{tag}", X, grad, f"std::array<double, {d * d}>& out"))
    blocks.append(emit(f"velocity_dt_{tag}", X, [sp.diff(ui, t) for ui in u], f"std::array<double, {d}>& out"))
    lap = [sum(sp.diff(ui, xj, 2) for xj in X) for ui in u]
    blocks.append(emit(f"velocity_laplacian_{tag}", X, lap, f"std::array<double, {d}>& out"))
    blocks.append(emit(f"pressure_gradient_{tag}", X, [sp.diff(p, xj) for xj in X], f"std::array<double, {d}>& out"))
    return blocks


HEADER = """// Copyright 2026 The lgns Authors
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

// GENERATED by tools/gen_mms.py -- do not edit by hand.

#pragma once

#include <array>
#include <cmath>

namespace lgns::detail::mms {

// NOLINTBEGIN
"""

FOOTER = """
// NOLINTEND

}  // namespace lgns::detail::mms
"""

if __name__ == "__main__":
    out = [HEADER]
    out += build("2d", *stream_2d())
    out += build("3d", *stream_3d())
    text = "\n\n".join(out) + FOOTER
    text = text.replace("M_PI", "3.14159265358979323846")
    text = re.sub(r"(?<![\w:])(sin|cos|sqrt|pow)\(", r"std::\1(", text)
    print(text)
