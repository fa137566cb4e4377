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
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gcliff {

/// A finite abelian group Z_{q_0} x ... x Z_{q_d}, stored as its list of
/// cyclic orders. Copies share the order list.
class Group {
   public:
    /// The orders must all be >= 2 and the list non-empty.
    explicit Group(std::vector<int64_t> orders);

    size_t rank() const { return data_->orders.size(); }
    int64_t order(size_t i) const { return data_->orders[i]; }
    const std::vector<int64_t> &orders() const { return data_->orders; }

    /// True iff q_{i+1} divides q_i for every i.
    bool canonical() const { return data_->canonical; }
    int64_t exponent() const { return data_->exponent; }
    /// |G|, saturating at UINT64_MAX.
    uint64_t size() const { return data_->size; }

    /// G^n with the factors of each copy contiguous.
    Group power(size_t n) const;
    std::string literal() const;

    bool operator==(const Group &other) const {
        return data_ == other.data_ || data_->orders == other.data_->orders;
    }
    bool operator!=(const Group &other) const { return !(*this == other); }

   private:
    struct Data {
        std::vector<int64_t> orders;
        bool canonical;
        int64_t exponent;
        uint64_t size;
    };
    std::shared_ptr<const Data> data_;
};

Group make_group(const std::vector<int64_t> &orders);
/// Parses a literal such as "4,2".
Group parse_group(const std::string &literal);
/// G x H with the factors of G first.
Group group_product(const Group &a, const Group &b);

/// An element of G in additive notation, residues[i] in [0, q_i).
class GroupElement {
   public:
    GroupElement(Group group, std::vector<int64_t> residues);

    static GroupElement zero(const Group &group);
    static GroupElement basis(const Group &group, size_t i);

    const Group &group() const { return group_; }
    const std::vector<int64_t> &residues() const { return residues_; }
    int64_t operator[](size_t i) const { return residues_[i]; }
    bool is_zero() const;

    bool operator==(const GroupElement &other) const {
        return group_ == other.group_ && residues_ == other.residues_;
    }
    bool operator!=(const GroupElement &other) const { return !(*this == other); }

   private:
    Group group_;
    std::vector<int64_t> residues_;
};

GroupElement elem_add(const GroupElement &a, const GroupElement &b);
GroupElement elem_sub(const GroupElement &a, const GroupElement &b);
GroupElement elem_neg(const GroupElement &a);
GroupElement elem_zero(const Group &g);
GroupElement elem_scale(const GroupElement &a, int64_t k);
int64_t elem_order(const GroupElement &a);

inline GroupElement operator+(const GroupElement &a, const GroupElement &b) { return elem_add(a, b); }
inline GroupElement operator-(const GroupElement &a, const GroupElement &b) { return elem_sub(a, b); }
inline GroupElement operator-(const GroupElement &a) { return elem_neg(a); }

/// Mixed-radix index of an element, the last factor varying fastest.
uint64_t element_index(const GroupElement &a);
GroupElement element_at(const Group &g, uint64_t index);
/// All elements in index order. Throws CapExceeded above `cap` elements.
std::vector<GroupElement> enumerate_elements(const Group &g, uint64_t cap = 1u << 20);

void check_same_group(const Group &a, const Group &b, const char *context);

/// A homomorphism between products of cyclic groups. Entry (i, j) is the
/// multiple of the i-th target generator that the j-th source generator maps
/// to; entries are reduced modulo the target orders.
class HomMatrix {
   public:
    HomMatrix(Group source, Group target, const std::vector<std::vector<int64_t>> &rows);
    HomMatrix(Group source, Group target, std::vector<int64_t> row_major, int /*tag*/);

    static HomMatrix identity(const Group &g);
    static HomMatrix zero(const Group &source, const Group &target);

    const Group &source() const { return source_; }
    const Group &target() const { return target_; }
    size_t rows() const { return target_.rank(); }
    size_t cols() const { return source_.rank(); }
    int64_t at(size_t i, size_t j) const { return entries_[i * cols() + j]; }
    void set(size_t i, size_t j, int64_t v);
    std::vector<std::vector<int64_t>> to_rows() const;
    GroupElement column(size_t j) const;

    bool operator==(const HomMatrix &other) const {
        return source_ == other.source_ && target_ == other.target_ && entries_ == other.entries_;
    }
    bool operator!=(const HomMatrix &other) const { return !(*this == other); }

   private:
    Group source_;
    Group target_;
    std::vector<int64_t> entries_;
};

/// m[i][j] * q_j == 0 (mod q'_i) for every entry.
bool hom_is_valid(const HomMatrix &m);
GroupElement hom_apply(const HomMatrix &m, const GroupElement &a);
/// m2 after m1. Throws InvalidArgument if either input is not well defined.
HomMatrix hom_compose(const HomMatrix &m2, const HomMatrix &m1);
bool is_automorphism(const HomMatrix &m);
/// Two-sided inverse; throws NotInvertibleError carrying a target element that
/// is not hit.
HomMatrix invert_automorphism(const HomMatrix &m);
/// Block-diagonal sum a (+) b acting on source(a) x source(b).
HomMatrix hom_direct_sum(const HomMatrix &a, const HomMatrix &b);
/// The transpose map on characters: for m: A -> B, returns the matrix of
/// chi -> chi o m from B^ to A^, with characters written in the canonical
/// coordinates of each cyclic factor.
HomMatrix dual_hom(const HomMatrix &m);

/// Exact linear algebra for a homomorphism over mixed moduli: a column
/// echelon form built from Bezout column operations, with each row reduced
/// modulo its own target order.
class HomSolver {
   public:
    explicit HomSolver(const HomMatrix &m);

    std::optional<GroupElement> preimage(const GroupElement &y) const;
    /// Generators of the kernel (possibly redundant, zero entries dropped).
    std::vector<GroupElement> kernel() const;
    bool surjective() const;
    /// |image|, saturating.
    uint64_t image_order() const;

   private:
    struct Column {
        std::vector<int64_t> image;
        std::vector<int64_t> coeffs;
    };
    Group source_;
    Group target_;
    std::vector<std::optional<Column>> pivots_;
    std::vector<Column> rest_;
};

struct Isomorphism {
    HomMatrix forward;
    HomMatrix backward;
};

/// Divisibility-chain form q_0 >= q_1 >= ..., q_{i+1} | q_i, plus the
/// isomorphism from the input group to it.
std::pair<Group, Isomorphism> canonicalize(const Group &g);

/// Splits every factor into its prime-power parts (factor order preserved,
/// primes increasing within a factor).
std::pair<Group, Isomorphism> primary_decomposition(const Group &g);

/// Conversion to and from the representation in which Z_{q_i} sits inside
/// Z_E (E the exponent of G) as the multiples of E / q_i.
std::vector<int64_t> to_embedded(const GroupElement &a);
GroupElement from_embedded(const Group &g, const std::vector<int64_t> &values);
/// Matrix conversions for endomorphisms in the same convention; the
/// embedded matrix acts on embedded vectors modulo E.
std::vector<std::vector<int64_t>> hom_to_embedded(const HomMatrix &m);
HomMatrix hom_from_embedded(const Group &g, const std::vector<std::vector<int64_t>> &rows);

}  // namespace gcliff
