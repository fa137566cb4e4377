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

// Brute-force helpers shared by the unit tests.

#include <doctest.h>

#include <random>
#include <set>

#include "gcliff/dense.hpp"
#include "gcliff/group.hpp"

namespace gcliff::testing {

/// Every element of the image, found by enumerating the source.
inline std::set<std::vector<int64_t>> image_set(const HomMatrix &m) {
    std::set<std::vector<int64_t>> out;
    for (const GroupElement &a : enumerate_elements(m.source())) {
        out.insert(hom_apply(m, a).residues());
    }
    return out;
}

/// Bijective and additive on every pair, by enumeration.
inline bool brute_force_isomorphism(const HomMatrix &m) {
    if (m.source().size() != m.target().size() || image_set(m).size() != m.target().size()) {
        return false;
    }
    const auto elems = enumerate_elements(m.source());
    for (const GroupElement &a : elems) {
        for (const GroupElement &b : elems) {
            if (hom_apply(m, a + b) != hom_apply(m, a) + hom_apply(m, b)) {
                return false;
            }
        }
    }
    return true;
}

inline HomMatrix random_hom(const Group &src, const Group &dst, std::mt19937_64 &rng) {
    HomMatrix m = HomMatrix::zero(src, dst);
    for (size_t i = 0; i < dst.rank(); i++) {
        for (size_t j = 0; j < src.rank(); j++) {
            // Entries must be multiples of q'_i / gcd(q'_i, q_j).
            const int64_t step = dst.order(i) / std::gcd(dst.order(i), src.order(j));
            m.set(i, j, step * static_cast<int64_t>(rng() % static_cast<uint64_t>(dst.order(i) / step)));
        }
    }
    return m;
}

inline GroupElement random_element(const Group &g, std::mt19937_64 &rng) {
    std::vector<int64_t> r(g.rank());
    for (size_t i = 0; i < g.rank(); i++) {
        r[i] = static_cast<int64_t>(rng() % static_cast<uint64_t>(g.order(i)));
    }
    return GroupElement(g, r);
}

inline bool close(cplx a, cplx b, double tol = kStateTolerance) { return std::abs(a - b) <= tol; }

}  // namespace gcliff::testing
