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

#include "gcliff/kernels.hpp"

#include <algorithm>

namespace gcliff {

uint64_t SlotLayout::dim() const {
    uint64_t d = 1;
    for (size_t s = 0; s < n; s++) {
        d *= slot_dim;
    }
    return d;
}

uint64_t SlotLayout::stride(size_t slot) const {
    uint64_t st = 1;
    for (size_t s = slot + 1; s < n; s++) {
        st *= slot_dim;
    }
    return st;
}

namespace {

struct LocalPlan {
    std::vector<uint64_t> offsets;  // local index -> offset in psi
    std::vector<uint64_t> rest_strides;
    uint64_t rest_count = 1;
    uint64_t local_dim = 1;
};

LocalPlan make_plan(const SlotLayout &layout, const std::vector<size_t> &slots) {
    LocalPlan plan;
    for (size_t k = 0; k < slots.size(); k++) {
        plan.local_dim *= layout.slot_dim;
    }
    plan.offsets.assign(plan.local_dim, 0);
    for (uint64_t t = 0; t < plan.local_dim; t++) {
        uint64_t rem = t, off = 0;
        for (size_t k = slots.size(); k-- > 0;) {
            off += (rem % layout.slot_dim) * layout.stride(slots[k]);
            rem /= layout.slot_dim;
        }
        plan.offsets[t] = off;
    }
    for (size_t s = 0; s < layout.n; s++) {
        if (std::find(slots.begin(), slots.end(), s) == slots.end()) {
            plan.rest_strides.push_back(layout.stride(s));
            plan.rest_count *= layout.slot_dim;
        }
    }
    return plan;
}

uint64_t rest_base(const LocalPlan &plan, uint64_t r, uint64_t slot_dim) {
    uint64_t base = 0;
    for (size_t k = plan.rest_strides.size(); k-- > 0;) {
        base += (r % slot_dim) * plan.rest_strides[k];
        r /= slot_dim;
    }
    return base;
}

inline void apply_block(std::vector<cplx> &psi, const LocalPlan &plan, uint64_t base, const std::vector<cplx> &m,
                        std::vector<cplx> &in, std::vector<cplx> &out) {
    const uint64_t ld = plan.local_dim;
    for (uint64_t t = 0; t < ld; t++) {
        in[t] = psi[base + plan.offsets[t]];
    }
    for (uint64_t i = 0; i < ld; i++) {
        cplx acc = 0;
        const cplx *row = &m[i * ld];
        for (uint64_t j = 0; j < ld; j++) {
            acc += row[j] * in[j];
        }
        out[i] = acc;
    }
    for (uint64_t t = 0; t < ld; t++) {
        psi[base + plan.offsets[t]] = out[t];
    }
}

}  // namespace

void apply_local_matrix_serial(std::vector<cplx> &psi, const SlotLayout &layout, const std::vector<size_t> &slots,
                               const std::vector<cplx> &m) {
    LocalPlan plan = make_plan(layout, slots);
    std::vector<cplx> in(plan.local_dim), out(plan.local_dim);
    for (uint64_t r = 0; r < plan.rest_count; r++) {
        apply_block(psi, plan, rest_base(plan, r, layout.slot_dim), m, in, out);
    }
}

void apply_local_matrix_parallel(std::vector<cplx> &psi, const SlotLayout &layout, const std::vector<size_t> &slots,
                                 const std::vector<cplx> &m) {
    LocalPlan plan = make_plan(layout, slots);
    const int64_t count = static_cast<int64_t>(plan.rest_count);
#pragma omp parallel if (count >= 64)
    {
        std::vector<cplx> in(plan.local_dim), out(plan.local_dim);
#pragma omp for schedule(static)
        for (int64_t r = 0; r < count; r++) {
            apply_block(psi, plan, rest_base(plan, static_cast<uint64_t>(r), layout.slot_dim), m, in, out);
        }
    }
}

void apply_monomial_serial(const std::vector<cplx> &psi, std::vector<cplx> &out, const std::vector<uint64_t> &perm,
                           const std::vector<cplx> &phase) {
    out.assign(psi.size(), cplx(0));
    for (size_t i = 0; i < psi.size(); i++) {
        out[perm[i]] = phase[i] * psi[i];
    }
}

void apply_monomial_parallel(const std::vector<cplx> &psi, std::vector<cplx> &out, const std::vector<uint64_t> &perm,
                             const std::vector<cplx> &phase) {
    out.assign(psi.size(), cplx(0));
    const int64_t n = static_cast<int64_t>(psi.size());
#pragma omp parallel for schedule(static) if (n >= 4096)
    for (int64_t i = 0; i < n; i++) {
        out[perm[i]] = phase[i] * psi[i];
    }
}

}  // namespace gcliff
