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
#include <map>
#include <string>
#include <vector>

#include "gcliff/group.hpp"

namespace gcliff {

/// An exact element of Q/Z, standing for the root of unity e^{2 pi i num/den}.
class PhaseRational {
   public:
    PhaseRational() = default;
    PhaseRational(int64_t num, int64_t den);

    int64_t num() const { return num_; }
    int64_t den() const { return den_; }
    bool is_zero() const { return num_ == 0; }

    PhaseRational operator+(const PhaseRational &o) const;
    PhaseRational operator-(const PhaseRational &o) const;
    PhaseRational operator-() const;
    /// Multiplication by an integer, i.e. raising the root of unity to a power.
    PhaseRational operator*(int64_t k) const;
    bool operator==(const PhaseRational &o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const PhaseRational &o) const { return !(*this == o); }
    bool operator<(const PhaseRational &o) const;

    std::complex<double> to_complex() const;
    /// "num/den".
    std::string str() const;
    static PhaseRational parse(const std::string &text);

   private:
    int64_t num_ = 0;
    int64_t den_ = 1;
};

/// A character of G, in the coordinates of the canonical generators
/// n -> e^{2 pi i n/q_i} of each factor.
class Character : public GroupElement {
   public:
    using GroupElement::GroupElement;
    explicit Character(const GroupElement &e) : GroupElement(e) {}
    static Character trivial(const Group &g) { return Character(GroupElement::zero(g)); }
};

PhaseRational char_eval(const Character &chi, const GroupElement &g);
/// The symmetric pairing sum_i x_i y_i / q_i; char_eval is this pairing.
PhaseRational pairing(const GroupElement &x, const GroupElement &y);

/// b(g, h) = sum_{ij} c_ij g_i h_j / gcd(q_i, q_j).
class SymmetricBilinearForm {
   public:
    SymmetricBilinearForm(Group group, std::vector<std::vector<int64_t>> coeffs);
    static SymmetricBilinearForm zero(const Group &g);

    const Group &group() const { return group_; }
    int64_t coeff(size_t i, size_t j) const { return coeffs_[i][j]; }
    const std::vector<std::vector<int64_t>> &coeffs() const { return coeffs_; }
    bool operator==(const SymmetricBilinearForm &o) const { return group_ == o.group_ && coeffs_ == o.coeffs_; }

   private:
    Group group_;
    std::vector<std::vector<int64_t>> coeffs_;
};

PhaseRational bilinear_eval(const SymmetricBilinearForm &b, const GroupElement &g, const GroupElement &h);
/// The induced map g -> b(g, .) from G to its character group, as a matrix
/// over G under the canonical identification.
HomMatrix induced_map(const SymmetricBilinearForm &b);

/// xi(g) = sum_i a_i g_i^2/(2 q_i) + sum_{i<j} c_ij g_i g_j/gcd(q_i,q_j)
///         + sum_i l_i g_i/q_i.
class QuadraticForm {
   public:
    /// `cross` is a full d x d matrix of which only the strict upper triangle
    /// is read.
    QuadraticForm(Group group, std::vector<int64_t> diag, std::vector<std::vector<int64_t>> cross,
                  std::vector<int64_t> linear);
    static QuadraticForm zero(const Group &g);
    static QuadraticForm diagonal(const Group &g, std::vector<int64_t> diag);

    const Group &group() const { return group_; }
    const std::vector<int64_t> &diag() const { return diag_; }
    const std::vector<std::vector<int64_t>> &cross() const { return cross_; }
    const Character &linear() const { return linear_; }

   private:
    Group group_;
    std::vector<int64_t> diag_;
    std::vector<std::vector<int64_t>> cross_;
    Character linear_;
};

PhaseRational quad_eval(const QuadraticForm &xi, const GroupElement &g);
/// -xi, the form of the inverse phase gate.
QuadraticForm quad_negate(const QuadraticForm &xi);
/// Equality of value tables, decided from values on generators and the
/// polarization rather than by enumeration.
bool quad_equal(const QuadraticForm &a, const QuadraticForm &b);
SymmetricBilinearForm polarize(const QuadraticForm &xi);
QuadraticForm lift_bilinear(const SymmetricBilinearForm &b);
bool is_nondegenerate(const QuadraticForm &xi);
/// The form g -> xi(phi(g)) on the source of phi.
QuadraticForm pullback(const QuadraticForm &xi, const HomMatrix &phi);
/// The form on G x H equal to xi on the G factors and 0 on H.
QuadraticForm extend_by_zero(const QuadraticForm &xi, const Group &h, bool xi_first = true);

using PhaseTable = std::map<std::vector<int64_t>, PhaseRational>;

/// Value table of xi over all of G.
PhaseTable quad_table(const QuadraticForm &xi);
/// Throws IncompleteTable unless every element of g has an entry.
void check_table(const Group &g, const PhaseTable &table);
bool is_quadratic_table(const Group &g, const PhaseTable &table);
/// The QuadraticForm with the given value table. Throws PreconditionFailed
/// when the table is not quadratic.
QuadraticForm fit_quadratic_form(const Group &g, const PhaseTable &table);

/// The element t with -b_xi(t, g) = chi(g) for all g.
GroupElement i_xi(const QuadraticForm &xi, const Character &chi);
/// Inverse direction: the character -b_xi(t, .).
Character i_xi_inverse(const QuadraticForm &xi, const GroupElement &t);
/// i_xi as a matrix from the character group to G.
HomMatrix i_xi_matrix(const QuadraticForm &xi);

}  // namespace gcliff
