// Copyright 2026 The qtm Authors
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

// Test-only reference implementations. Nothing here calls into the library
// code paths it is used to check: operators are built as dense matrices from
// Kronecker products, words from closed-form letter rules.

#pragma once

#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
using Mat2 = std::array<std::array<cplx, 2>, 2>;
using Mat4 = std::array<std::array<cplx, 4>, 4>;
using Vec4 = std::array<cplx, 4>;

inline constexpr cplx I{0.0, 1.0};

// Local basis (|-1>, |1>).
inline Mat2 identity2() { return {{{1.0, 0.0}, {0.0, 1.0}}}; }
inline Mat2 pauli1() { return {{{0.0, 1.0}, {1.0, 0.0}}}; }
inline Mat2 pauli2() { return {{{0.0, I}, {-I, 0.0}}}; }
inline Mat2 pauli3() { return {{{-1.0, 0.0}, {0.0, 1.0}}}; }
inline Mat2 proj_m1() { return {{{1.0, 0.0}, {0.0, 0.0}}}; }
inline Mat2 proj_p1() { return {{{0.0, 0.0}, {0.0, 1.0}}}; }

inline Mat2 add(const Mat2& a, const Mat2& b, cplx sb = 1.0) {
  Mat2 r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = a[i][j] + sb * b[i][j];
  return r;
}

inline Mat2 scale(const Mat2& a, cplx s) {
  Mat2 r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = s * a[i][j];
  return r;
}

/// exp(-i sigma_1 alpha / 2) by its power series, summed to convergence.
inline Mat2 rotation_series(double alpha) {
  Mat2 term = identity2();
  Mat2 sum = identity2();
  const Mat2 gen = scale(pauli1(), -I * alpha / 2.0);
  for (int k = 1; k < 60; ++k) {
    Mat2 next{};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int l = 0; l < 2; ++l) next[i][j] += term[i][l] * gen[l][j];
    term = scale(next, 1.0 / k);
    sum = add(sum, term);
  }
  return sum;
}

/// Head operator a acts on the high (first) factor.
inline Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) r[2 * i + k][2 * j + l] = a[i][j] * b[k][l];
  return r;
}

inline Mat4 add(const Mat4& a, const Mat4& b) {
  Mat4 r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i][j] = a[i][j] + b[i][j];
  return r;
}

inline Vec4 apply(const Mat4& m, const Vec4& v) {
  Vec4 r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i] += m[i][j] * v[j];
  return r;
}

inline Mat4 head_rotation(double alpha) { return kron(rotation_series(alpha), identity2()); }

/// P_{-1,-1} (x) sigma_1 + P_{1,1} (x) 1
inline Mat4 qcnot() { return add(kron(proj_m1(), pauli1()), kron(proj_p1(), identity2())); }

inline double expectation(const Mat4& op, const Vec4& v) {
  cplx s{};
  const Vec4 w = apply(op, v);
  for (int i = 0; i < 4; ++i) s += std::conj(v[i]) * w[i];
  return s.real();
}

/// <psi| sigma_j (x) 1 |psi>, j = 1..3
inline double head_expectation(int j, const Vec4& v) {
  const Mat2 p = j == 1 ? pauli1() : j == 2 ? pauli2() : pauli3();
  return expectation(kron(p, identity2()), v);
}

inline double tape_expectation(int j, const Vec4& v) {
  const Mat2 p = j == 1 ? pauli1() : j == 2 ? pauli2() : pauli3();
  return expectation(kron(identity2(), p), v);
}

/// Thue-Morse letter at zero-based position i: parity of the binary digits.
inline char thue_morse_letter(std::uint64_t i) { return std::popcount(i) % 2 == 0 ? 'a' : 'b'; }

/// F_1 = F_2 = 1
inline std::uint64_t fibonacci(unsigned k) {
  std::uint64_t a = 0, b = 1;
  for (unsigned i = 0; i < k; ++i) {
    const std::uint64_t t = a + b;
    a = b;
    b = t;
  }
  return a;
}

/// Haar-ish random normalized 4-vector (Gaussian components).
inline Vec4 random_state(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Vec4 v;
  double n = 0.0;
  for (auto& x : v) {
    x = {g(rng), g(rng)};
    n += std::norm(x);
  }
  for (auto& x : v) x /= std::sqrt(n);
  return v;
}

inline double max_abs_diff(const Vec4& a, const Vec4& b) {
  double m = 0.0;
  for (int i = 0; i < 4; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace oracle
