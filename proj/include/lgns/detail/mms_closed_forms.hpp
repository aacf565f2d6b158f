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

// GENERATED by tools/gen_mms.py -- do not edit by hand.

#pragma once

#include <array>
#include <cmath>

namespace lgns::detail::mms {

// NOLINTBEGIN


inline void velocity_2d(double x1, double x2, double t, std::array<double, 2>& out) {
  const double c0 = std::sqrt(3);
  const double c1 = 3.14159265358979323846*x2;
  const double c2 = std::sin(c1);
  const double c3 = 3.14159265358979323846*x1;
  const double c4 = std::sin(c3);
  const double c5 = 3.14159265358979323846*(t + x1 + x2);
  const double c6 = std::sin(c5);
  const double c7 = (1.0/2.0)*std::cos(c5);
  out[0] = c0*c2*std::pow(c4, 2)*(c2*c7 + c6*std::cos(c1));
  out[1] = -c0*std::pow(c2, 2)*c4*(c4*c7 + c6*std::cos(c3));
}

inline void pressure_2d(double x1, double x2, double t, std::array<double, 1>& out) {
  out[0] = std::sin(3.14159265358979323846*(t + x1 + 2*x2));
}

inline void velocity_gradient_2d(double x1, double x2, double t, std::array<double, 4>& out) {
  const double c0 = 3.14159265358979323846*x2;
  const double c1 = std::cos(c0);
  const double c2 = 3.14159265358979323846*(t + x1 + x2);
  const double c3 = std::cos(c2);
  const double c4 = 3.14159265358979323846*x1;
  const double c5 = std::sin(c4);
  const double c6 = c3*c5;
  const double c7 = std::cos(c4);
  const double c8 = std::sin(c0);
  const double c9 = c3*c8;
  const double c10 = std::sin(c2);
  const double c11 = c5*c8;
  const double c12 = 2*c1;
  const double c13 = c1*c6 - 1.0/2.0*c10*c11 + c10*c12*c7 + c7*c9;
  const double c14 = std::sqrt(3)*3.14159265358979323846;
  const double c15 = c11*c14;
  const double c16 = std::pow(c5, 2);
  const double c17 = std::pow(c8, 2);
  out[0] = c13*c15;
  out[1] = c14*c16*(std::pow(c1, 2)*c10 - 3.0/2.0*c10*c17 + c12*c9);
  out[2] = c14*c17*((3.0/2.0)*c10*c16 - c10*std::pow(c7, 2) - 2*c6*c7);
  out[3] = -c13*c15;
}

inline void velocity_dt_2d(double x1, double x2, double t, std::array<double, 2>& out) {
  const double c0 = 3.14159265358979323846*x2;
  const double c1 = std::sin(c0);
  const double c2 = 3.14159265358979323846*x1;
  const double c3 = std::sin(c2);
  const double c4 = 3.14159265358979323846*(t + x1 + x2);
  const double c5 = (1.0/2.0)*std::sin(c4);
  const double c6 = std::cos(c4);
  const double c7 = std::sqrt(3)*3.14159265358979323846;
  out[0] = c1*std::pow(c3, 2)*c7*(-c1*c5 + c6*std::cos(c0));
  out[1] = std::pow(c1, 2)*c3*c7*(c3*c5 - c6*std::cos(c2));
}

inline void velocity_laplacian_2d(double x1, double x2, double t, std::array<double, 2>& out) {
  const double c0 = 3.14159265358979323846*x1;
  const double c1 = std::sin(c0);
  const double c2 = std::pow(c1, 2);
  const double c3 = 3.14159265358979323846*x2;
  const double c4 = std::sin(c3);
  const double c5 = std::pow(c4, 2);
  const double c6 = 3.14159265358979323846*(t + x1 + x2);
  const double c7 = std::cos(c6);
  const double c8 = 7*c7;
  const double c9 = std::cos(c3);
  const double c10 = std::pow(c9, 2);
  const double c11 = 6*c7;
  const double c12 = std::sin(c6);
  const double c13 = c12*c9;
  const double c14 = c13*c4;
  const double c15 = c4*c7;
  const double c16 = std::cos(c0);
  const double c17 = std::pow(c16, 2);
  const double c18 = c12*c16;
  const double c19 = c1*c18;
  const double c20 = c1*c7;
  const double c21 = 8*c16*c9;
  const double c22 = (1.0/2.0)*std::sqrt(3)*std::pow(3.14159265358979323846, 2);
  out[0] = -c22*(c2*(-c10*c11 + 14*c14 + c5*c8) + c4*(-4*c13*c17 + 6*c13*c2 - 2*c15*c17 + 3*c15*c2 + 4*c19*c4 - c20*c21));
  out[1] = c22*(c1*(4*c1*c14 - 4*c10*c18 - 2*c10*c20 - c15*c21 + 6*c18*c5 + 3*c20*c5) + c5*(-c11*c17 + 14*c19 + c2*c8));
}

inline void pressure_gradient_2d(double x1, double x2, double t, std::array<double, 2>& out) {
  const double c0 = 3.14159265358979323846*std::cos(3.14159265358979323846*(t + x1 + 2*x2));
  out[0] = c0;
  out[1] = 2*c0;
}

inline void velocity_3d(double x1, double x2, double x3, double t, std::array<double, 3>& out) {
  const double c0 = 3.14159265358979323846*x2;
  const double c1 = std::sin(c0);
  const double c2 = 3.14159265358979323846*x1;
  const double c3 = std::sin(c2);
  const double c4 = t + x1;
  const double c5 = 3.14159265358979323846*(c4 + x2);
  const double c6 = std::cos(c5);
  const double c7 = 3.14159265358979323846*x3;
  const double c8 = std::sin(c7);
  const double c9 = 3.14159265358979323846*(c4 + x3);
  const double c10 = std::cos(c9);
  const double c11 = std::cos(c0);
  const double c12 = 2*std::sin(c5);
  const double c13 = std::sin(c9);
  const double c14 = std::cos(c7);
  const double c15 = std::sqrt(3);
  const double c16 = (8.0/27.0)*c15*c8;
  const double c17 = 3.14159265358979323846*(t + x2 + x3);
  const double c18 = std::cos(c17);
  const double c19 = std::cos(c2);
  const double c20 = std::sin(c17);
  out[0] = c1*c16*std::pow(c3, 2)*(c1*c6 - c10*c8 + c11*c12 - 2*c13*c14);
  out[1] = std::pow(c1, 2)*c16*c3*(-c12*c19 + 2*c14*c20 + c18*c8 - c3*c6);
  out[2] = (8.0/27.0)*c1*c15*c3*std::pow(c8, 2)*(-c1*c18 + c10*c3 - 2*c11*c20 + 2*c13*c19);
}

inline void pressure_3d(double x1, double x2, double x3, double t, std::array<double, 1>& out) {
  out[0] = std::sin(3.14159265358979323846*(t + x1 + 2*x2 + x3));
}

inline void velocity_gradient_3d(double x1, double x2, double x3, double t, std::array<double, 9>& out) {
  const double c0 = t + x1;
  const double c1 = 3.14159265358979323846*(c0 + x3);
  const double c2 = std::sin(c1);
  const double c3 = 3.14159265358979323846*x1;
  const double c4 = std::sin(c3);
  const double c5 = 3.14159265358979323846*x3;
  const double c6 = std::sin(c5);
  const double c7 = c4*c6;
  const double c8 = c2*c7;
  const double c9 = std::cos(c3);
  const double c10 = std::cos(c1);
  const double c11 = 2*c10;
  const double c12 = c11*c6*c9;
  const double c13 = std::cos(c5);
  const double c14 = c11*c13*c4;
  const double c15 = 4*c9;
  const double c16 = c13*c15*c2;
  const double c17 = 3.14159265358979323846*x2;
  const double c18 = std::sin(c17);
  const double c19 = 3.14159265358979323846*(c0 + x2);
  const double c20 = std::sin(c19);
  const double c21 = std::cos(c17);
  const double c22 = std::cos(c19);
  const double c23 = 2*c22;
  const double c24 = -c15*c20*c21 + c18*c20*c4 - c18*c23*c9 - c21*c23*c4;
  const double c25 = (8.0/27.0)*std::sqrt(3)*3.14159265358979323846;
  const double c26 = c18*c25*c7;
  const double c27 = std::pow(c18, 2);
  const double c28 = 3*c20;
  const double c29 = std::pow(c21, 2);
  const double c30 = c10*c21;
  const double c31 = 2*c2;
  const double c32 = c13*c21;
  const double c33 = std::pow(c4, 2);
  const double c34 = c25*c33;
  const double c35 = std::pow(c6, 2);
  const double c36 = 3*c35;
  const double c37 = std::pow(c13, 2);
  const double c38 = c13*c22;
  const double c39 = 2*c20;
  const double c40 = std::pow(c9, 2);
  const double c41 = 3.14159265358979323846*(t + x2 + x3);
  const double c42 = std::cos(c41);
  const double c43 = c42*c9;
  const double c44 = std::sin(c41);
  const double c45 = 2*c44;
  const double c46 = c13*c9;
  const double c47 = c25*c27;
  const double c48 = 2*c42;
  const double c49 = c13*c18*c48 - c18*c44*c6 + c21*c48*c6 + 4*c32*c44;
  const double c50 = c21*c9;
  const double c51 = c25*c35;
  out[0] = c26*(-c12 - c14 - c16 - c24 + c8);
  out[1] = c34*c6*(4*c18*c21*c22 + 2*c20*c29 - c27*c28 - c30*c6 - c31*c32);
  out[2] = c18*c34*(-4*c10*c13*c6 + c18*c38 + c2*c36 - 2*c2*c37 + c32*c39);
  out[3] = c47*c6*(-c15*c22*c4 + c28*c33 - c39*c40 + c43*c6 + c45*c46);
  out[4] = c26*(c24 + c49);
  out[5] = c4*c47*(4*c13*c42*c6 - c36*c44 + 2*c37*c44 - c38*c4 - c39*c46);
  out[6] = c18*c51*(4*c10*c4*c9 - c18*c43 - 3*c2*c33 + 2*c2*c40 - c45*c50);
  out[7] = c4*c51*(-4*c18*c21*c42 + 3*c27*c44 - c29*c45 + c30*c4 + c31*c50);
  out[8] = c26*(c12 + c14 + c16 - c49 - c8);
}

inline void velocity_dt_3d(double x1, double x2, double x3, double t, std::array<double, 3>& out) {
  const double c0 = 3.14159265358979323846*x2;
  const double c1 = std::sin(c0);
  const double c2 = 3.14159265358979323846*x1;
  const double c3 = std::sin(c2);
  const double c4 = t + x1;
  const double c5 = 3.14159265358979323846*(c4 + x2);
  const double c6 = std::sin(c5);
  const double c7 = 3.14159265358979323846*x3;
  const double c8 = std::sin(c7);
  const double c9 = 3.14159265358979323846*(c4 + x3);
  const double c10 = std::sin(c9);
  const double c11 = std::cos(c0);
  const double c12 = std::cos(c5);
  const double c13 = std::cos(c9);
  const double c14 = 2*std::cos(c7);
  const double c15 = std::sqrt(3);
  const double c16 = (8.0/27.0)*3.14159265358979323846*c15*c8;
  const double c17 = 3.14159265358979323846*(t + x2 + x3);
  const double c18 = std::sin(c17);
  const double c19 = std::cos(c2);
  const double c20 = std::cos(c17);
  out[0] = c1*c16*std::pow(c3, 2)*(-c1*c6 + c10*c8 + 2*c11*c12 - c13*c14);
  out[1] = std::pow(c1, 2)*c16*c3*(-2*c12*c19 + c14*c20 - c18*c8 + c3*c6);
  out[2] = (8.0/27.0)*3.14159265358979323846*c1*c15*c3*std::pow(c8, 2)*(c1*c18 - c10*c3 - 2*c11*c20 + 2*c13*c19);
}

inline void velocity_laplacian_3d(double x1, double x2, double x3, double t, std::array<double, 3>& out) {
  const double c0 = t + x1;
  const double c1 = 3.14159265358979323846*(c0 + x3);
  const double c2 = std::cos(c1);
  const double c3 = 3.14159265358979323846*x3;
  const double c4 = std::sin(c3);
  const double c5 = std::pow(c4, 2);
  const double c6 = 7*c5;
  const double c7 = std::cos(c3);
  const double c8 = std::pow(c7, 2);
  const double c9 = 6*c8;
  const double c10 = 3.14159265358979323846*(c0 + x2);
  const double c11 = std::cos(c10);
  const double c12 = 3.14159265358979323846*x2;
  const double c13 = std::sin(c12);
  const double c14 = c13*c4;
  const double c15 = std::cos(c12);
  const double c16 = std::sin(c10);
  const double c17 = c15*c16;
  const double c18 = 2*c4;
  const double c19 = std::sin(c1);
  const double c20 = c19*c7;
  const double c21 = 14*c4;
  const double c22 = 3.14159265358979323846*x1;
  const double c23 = std::sin(c22);
  const double c24 = std::pow(c23, 2);
  const double c25 = c13*c24;
  const double c26 = std::pow(c13, 2);
  const double c27 = 7*c11;
  const double c28 = std::pow(c15, 2);
  const double c29 = 6*c11;
  const double c30 = 14*c13;
  const double c31 = 2*c13;
  const double c32 = 3*c11;
  const double c33 = 3*c2;
  const double c34 = 6*c24;
  const double c35 = std::cos(c22);
  const double c36 = std::pow(c35, 2);
  const double c37 = c2*c36;
  const double c38 = 4*c36;
  const double c39 = c16*c35;
  const double c40 = c13*c23;
  const double c41 = 4*c40;
  const double c42 = c19*c35;
  const double c43 = c23*c4;
  const double c44 = 4*c43;
  const double c45 = c23*c35;
  const double c46 = 8*c15;
  const double c47 = c11*c46;
  const double c48 = 8*c2*c7;
  const double c49 = (8.0/27.0)*std::sqrt(3)*std::pow(3.14159265358979323846, 2);
  const double c50 = 3.14159265358979323846*(t + x2 + x3);
  const double c51 = std::cos(c50);
  const double c52 = std::sin(c50);
  const double c53 = c52*c7;
  const double c54 = c23*c26;
  const double c55 = 14*c23;
  const double c56 = 2*c23;
  const double c57 = c26*c4;
  const double c58 = 3*c51;
  const double c59 = 6*c26;
  const double c60 = c28*c51;
  const double c61 = 4*c28;
  const double c62 = c15*c52;
  const double c63 = 4*c14;
  const double c64 = c46*c51*c7;
  const double c65 = c23*c5;
  const double c66 = 6*c5;
  const double c67 = 4*c8;
  out[0] = c49*(-c14*(-c11*c31*c36 + c17*c34 - c17*c38 + c18*c37 - c20*c34 + c20*c38 - c24*c33*c4 + c25*c32 + c39*c41 - c42*c44 - c45*c47 + c45*c48) + c24*c4*(c14*c2 - c17*c30 + c20*c31 - c26*c27 + c28*c29) - c25*(c11*c14 + c17*c18 - c2*c6 + c2*c9 - c20*c21));
  out[1] = c49*(c43*(-c11*c28*c56 - c13*c35*c47 + c13*c64 + c17*c41 + c18*c60 + c32*c54 + c39*c59 - c39*c61 - c53*c59 + c53*c61 - c57*c58 - c62*c63) + c54*(c11*c43 + c18*c39 - c21*c53 - c51*c6 + c51*c9) - c57*(-c24*c27 + c29*c36 - c39*c55 + c43*c51 + c53*c56));
  out[2] = c49*(c13*c5*(-7*c2*c24 + 6*c37 + c40*c51 - c42*c55 + c56*c62) - c40*(-c13*c5*c58 - c2*c56*c8 + c20*c44 + c31*c51*c8 + c33*c65 - c35*c4*c48 + c4*c64 + c42*c66 - c42*c67 - c53*c63 - c62*c66 + c62*c67) - c65*(c2*c40 - 7*c26*c51 - c30*c62 + c31*c42 + 6*c60));
}

inline void pressure_gradient_3d(double x1, double x2, double x3, double t, std::array<double, 3>& out) {
  const double c0 = 3.14159265358979323846*std::cos(3.14159265358979323846*(t + x1 + 2*x2 + x3));
  out[0] = c0;
  out[1] = 2*c0;
  out[2] = c0;
}
// NOLINTEND

}  // namespace lgns::detail::mms

