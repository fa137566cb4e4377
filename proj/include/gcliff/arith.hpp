// Copyright 2026 The gcliff Authors
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
#include <numeric>
#include <utility>
#include <vector>

namespace gcliff {

struct BezoutResult {
    int64_t g;
    int64_t x;
    int64_t y;
};

/// x*a + y*b = g = gcd(a, b) with g >= 0. When b != 0 the coefficient x is
/// normalized into [0, |b/g|).
BezoutResult bezout(int64_t a, int64_t b);

/// Representative of a in [0, m).
inline int64_t mod(int64_t a, int64_t m) {
    int64_t r = a % m;
    return r < 0 ? r + m : r;
}

inline int64_t mul_mod(int64_t a, int64_t b, int64_t m) {
    return static_cast<int64_t>(mod(static_cast<int64_t>((static_cast<__int128>(a) * b) % m), m));
}

inline int64_t add_mod(int64_t a, int64_t b, int64_t m) { return mod(mod(a, m) + mod(b, m), m); }

inline int64_t gcd64(int64_t a, int64_t b) { return std::gcd(a, b); }

inline int64_t lcm64(int64_t a, int64_t b) { return a / std::gcd(a, b) * b; }

/// Multiplicative inverse of a modulo m, or -1 when a is not a unit.
int64_t inverse_mod(int64_t a, int64_t m);

/// Smallest k in [0, m) with gcd(a + k*b, m) == gcd(a, b, m). Such a k always
/// exists (Z/m has stable rank one).
int64_t unit_shift(int64_t a, int64_t b, int64_t m);

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<int64_t, int>> factorize(int64_t n);

/// Idempotent of Z/n projecting onto the p-primary part: e == 1 mod p^k and
/// e == 0 mod the cofactor, where p^k exactly divides n.
int64_t primary_idempotent(int64_t n, int64_t p);

}  // namespace gcliff
