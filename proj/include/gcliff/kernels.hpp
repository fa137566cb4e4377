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

#include <complex>
#include <cstdint>
#include <vector>

namespace gcliff {

using cplx = std::complex<double>;

/// Layout of a register of `n` slots, each of dimension `slot_dim`, with the
/// last slot varying fastest.
struct SlotLayout {
    uint64_t slot_dim;
    size_t n;

    uint64_t dim() const;
    uint64_t stride(size_t slot) const;
};

/// psi <- (M on `slots`) psi, M a dense row-major matrix of size
/// slot_dim^k x slot_dim^k with slots[0] the most significant local digit.
/// The parallel version splits the untouched-slot index range across OpenMP
/// threads; the serial version is the reference it is tested against.
void apply_local_matrix_serial(std::vector<cplx> &psi, const SlotLayout &layout, const std::vector<size_t> &slots,
                               const std::vector<cplx> &m);
void apply_local_matrix_parallel(std::vector<cplx> &psi, const SlotLayout &layout, const std::vector<size_t> &slots,
                                 const std::vector<cplx> &m);

/// out[perm[i]] = phase[i] * psi[i]: the action of a monomial operator such
/// as a Pauli on the full register.
void apply_monomial_serial(const std::vector<cplx> &psi, std::vector<cplx> &out, const std::vector<uint64_t> &perm,
                           const std::vector<cplx> &phase);
void apply_monomial_parallel(const std::vector<cplx> &psi, std::vector<cplx> &out, const std::vector<uint64_t> &perm,
                             const std::vector<cplx> &phase);

}  // namespace gcliff
