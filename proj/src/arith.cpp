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

#include "gcliff/arith.hpp"

#include <cstdlib>
#include <tuple>

#include "gcliff/error.hpp"

namespace gcliff {

const char *error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument:
            return "InvalidArgument";
        case ErrorCode::GroupMismatch:
            return "GroupMismatch";
        case ErrorCode::NotInvertible:
            return "NotInvertible";
        case ErrorCode::NotExtendable:
            return "NotExtendable";
        case ErrorCode::NotSymplectic:
            return "NotSymplectic";
        case ErrorCode::InternalReductionFailure:
            return "InternalReductionFailure";
        case ErrorCode::DegenerateForm:
            return "DegenerateForm";
        case ErrorCode::IncompleteTable:
            return "IncompleteTable";
        case ErrorCode::PreconditionFailed:
            return "PreconditionFailed";
        case ErrorCode::NonClifford:
            return "NonClifford";
        case ErrorCode::CapExceeded:
            return "CapExceeded";
        case ErrorCode::ParseError:
            return "ParseError";
    }
    return "Unknown";
}

BezoutResult bezout(int64_t a, int64_t b) {
    require(a != 0 || b != 0, ErrorCode::InvalidArgument, "bezout(0, 0) is undefined");
    // Extended Euclid on (a, b).
    int64_t old_r = a, r = b;
    int64_t old_s = 1, s = 0;
    int64_t old_t = 0, t = 1;
    while (r != 0) {
        int64_t q = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
        std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
        std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    BezoutResult res{old_r, old_s, old_t};
    if (b != 0) {
        // Shift along the solution line (x + k*b/g, y - k*a/g).
        int64_t step = std::llabs(b / res.g);
        int64_t x = mod(res.x, step);
        int64_t k = (x - res.x) / step;
        int64_t sign = (b / res.g) > 0 ? 1 : -1;
        res.x = x;
        res.y = res.y - k * sign * (a / res.g);
    }
    return res;
}

int64_t inverse_mod(int64_t a, int64_t m) {
    if (m == 1) {
        return 0;
    }
    a = mod(a, m);
    if (a == 0) {
        return -1;
    }
    auto r = bezout(a, m);
    if (r.g != 1) {
        return -1;
    }
    return mod(r.x, m);
}

int64_t unit_shift(int64_t a, int64_t b, int64_t m) {
    int64_t target = std::gcd(std::gcd(mod(a, m), mod(b, m)), m);
    for (int64_t k = 0; k < m; k++) {
        int64_t v = mod(static_cast<int64_t>((static_cast<__int128>(b) * k + a) % m), m);
        if (std::gcd(v, m) == target) {
            return k;
        }
    }
    fail(ErrorCode::InternalReductionFailure, "unit_shift found no shift");
}

std::vector<std::pair<int64_t, int>> factorize(int64_t n) {
    require(n >= 1, ErrorCode::InvalidArgument, "factorize needs n >= 1");
    std::vector<std::pair<int64_t, int>> out;
    for (int64_t p = 2; p * p <= n; p++) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                e++;
            }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) {
        out.emplace_back(n, 1);
    }
    return out;
}

int64_t primary_idempotent(int64_t n, int64_t p) {
    int64_t pk = 1;
    int64_t rest = n;
    while (rest % p == 0) {
        rest /= p;
        pk *= p;
    }
    if (pk == 1) {
        return 0;
    }
    if (rest == 1) {
        return mod(1, n);
    }
    // e = rest * (rest^{-1} mod pk)
    int64_t inv = inverse_mod(rest, pk);
    return mod(rest * inv, n);
}

}  // namespace gcliff
