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

#include <doctest.h>

#include "gcliff/error.hpp"
#include "gcliff/forms.hpp"
#include "gcliff/symplectic.hpp"
#include "oracles.hpp"

using namespace gcliff;
using namespace gcliff::testing;

namespace {

PhaseRational b_of(const QuadraticForm &xi, const GroupElement &g, const GroupElement &h) {
    return quad_eval(xi, g + h) - quad_eval(xi, g) - quad_eval(xi, h);
}

bool brute_bilinear(const Group &g, const PhaseTable &t) {
    auto b = [&](const GroupElement &x, const GroupElement &y) {
        return t.at((x + y).residues()) - t.at(x.residues()) - t.at(y.residues());
    };
    const auto elems = enumerate_elements(g);
    for (const GroupElement &x : elems) {
        for (const GroupElement &y : elems) {
            for (const GroupElement &z : elems) {
                if (b(x + y, z) != b(x, z) + b(y, z)) {
                    return false;
                }
            }
        }
    }
    return t.at(elem_zero(g).residues()).is_zero();
}

bool brute_nondegenerate(const QuadraticForm &xi) {
    const auto elems = enumerate_elements(xi.group());
    for (const GroupElement &t : elems) {
        if (t.is_zero()) {
            continue;
        }
        bool witness = false;
        for (const GroupElement &g : elems) {
            witness = witness || !b_of(xi, t, g).is_zero();
        }
        if (!witness) {
            return false;
        }
    }
    return true;
}

const std::vector<std::vector<int64_t>> kGroups{{2}, {3}, {4}, {6}, {2, 2}, {4, 2}, {2, 4}, {3, 3}, {8}, {9}};

}  // namespace

TEST_CASE("phase rationals are reduced into [0, 1)") {
    CHECK(PhaseRational(-1, 4) == PhaseRational(3, 4));
    CHECK(PhaseRational(4, 3) == PhaseRational(1, 3));
    CHECK(PhaseRational(2, 4).den() == 2);
    CHECK(PhaseRational(5, 5).is_zero());
    CHECK(PhaseRational(1, 4) + PhaseRational(3, 4) == PhaseRational());
    CHECK(PhaseRational::parse("3/8") == PhaseRational(3, 8));
    CHECK(PhaseRational(3, 8).str() == "3/8");
    CHECK_THROWS_AS(PhaseRational::parse("3/0"), Error);
    CHECK_THROWS_AS(PhaseRational::parse("x"), Error);
    CHECK(close(PhaseRational(1, 4).to_complex(), cplx(0, 1)));
}

TEST_CASE("character evaluation") {
    const Group z4 = make_group({4});
    CHECK(char_eval(Character(z4, {1}), GroupElement(z4, {2})) == PhaseRational(1, 2));
    const Group g = make_group({4, 2});
    for (const GroupElement &x : enumerate_elements(g)) {
        CHECK(char_eval(Character::trivial(g), x).is_zero());
    }
    CHECK(char_eval(Character(g, {1, 1}), GroupElement(g, {1, 1})) == PhaseRational(3, 4));
}

TEST_CASE("quadratic form values") {
    const Group z2 = make_group({2}), z3 = make_group({3});
    CHECK(quad_eval(QuadraticForm::diagonal(z2, {1}), GroupElement(z2, {1})) == PhaseRational(1, 4));
    const QuadraticForm x3 = QuadraticForm::diagonal(z3, {2});
    CHECK(quad_eval(x3, GroupElement(z3, {1})) == PhaseRational(1, 3));
    CHECK(quad_eval(x3, GroupElement(z3, {2})) == PhaseRational(1, 3));
    std::mt19937_64 rng(21);
    for (const auto &orders : kGroups) {
        const Group g = make_group(orders);
        for (int t = 0; t < 10; t++) {
            CHECK(quad_eval(random_quadratic_form(g, rng), elem_zero(g)).is_zero());
        }
    }
}

TEST_CASE("polarization examples and definition") {
    const Group z2 = make_group({2}), z4 = make_group({4});
    const GroupElement one2(z2, {1}), one4(z4, {1});
    CHECK(bilinear_eval(polarize(QuadraticForm::diagonal(z2, {1})), one2, one2) == PhaseRational(1, 2));
    CHECK(bilinear_eval(polarize(QuadraticForm::diagonal(z4, {2})), one4, one4) == PhaseRational(1, 2));
    const Group g = make_group({4, 2});
    const QuadraticForm linear_only(g, {0, 0}, {{0, 0}, {0, 0}}, {3, 1});
    CHECK(polarize(linear_only) == SymmetricBilinearForm::zero(g));
    std::mt19937_64 rng(22);
    for (const auto &orders : kGroups) {
        const Group h = make_group(orders);
        const auto elems = enumerate_elements(h);
        for (int t = 0; t < 10; t++) {
            const QuadraticForm xi = random_quadratic_form(h, rng);
            const SymmetricBilinearForm b = polarize(xi);
            for (const GroupElement &x : elems) {
                for (const GroupElement &y : elems) {
                    CHECK(bilinear_eval(b, x, y) == b_of(xi, x, y));
                }
            }
        }
    }
}

TEST_CASE("lifting a bilinear form") {
    const Group z3 = make_group({3});
    CHECK(quad_equal(lift_bilinear(SymmetricBilinearForm::zero(z3)), QuadraticForm::zero(z3)));
    // B(1,1) = 1/3 on Z3: the lift has even diagonal coefficient 4 (value 2/3 at 1).
    const SymmetricBilinearForm b3(z3, {{1}});
    const QuadraticForm l3 = lift_bilinear(b3);
    CHECK(l3.diag()[0] % 2 == 0);
    CHECK(polarize(l3) == b3);
    const Group g = make_group({4, 2});
    const SymmetricBilinearForm cross(g, {{0, 1}, {1, 0}});
    const QuadraticForm lc = lift_bilinear(cross);
    CHECK(polarize(lc) == cross);
    for (const GroupElement &x : enumerate_elements(g)) {
        CHECK(quad_eval(lc, x) == PhaseRational(x[0] * x[1], 2));
    }
    std::mt19937_64 rng(23);
    for (const auto &orders : kGroups) {
        const Group h = make_group(orders);
        for (int t = 0; t < 10; t++) {
            const SymmetricBilinearForm bb = polarize(random_quadratic_form(h, rng));
            CHECK(polarize(lift_bilinear(bb)) == bb);
        }
    }
}

TEST_CASE("quadratic tables") {
    const Group z2 = make_group({2}), z3 = make_group({3});
    CHECK_FALSE(is_quadratic_table(z2, {{{0}, PhaseRational()}, {{1}, PhaseRational(1, 8)}}));
    CHECK_FALSE(is_quadratic_table(
        z3, {{{0}, PhaseRational()}, {{1}, PhaseRational(1, 9)}, {{2}, PhaseRational(8, 9)}}));
    CHECK_THROWS_AS(check_table(z3, {{{0}, PhaseRational()}}), Error);
    std::mt19937_64 rng(24);
    for (const auto &orders : kGroups) {
        const Group g = make_group(orders);
        for (int t = 0; t < 10; t++) {
            const QuadraticForm xi = random_quadratic_form(g, rng);
            const PhaseTable table = quad_table(xi);
            CHECK(is_quadratic_table(g, table));
            CHECK(quad_equal(fit_quadratic_form(g, table), xi));
            CHECK(quad_table(fit_quadratic_form(g, table)) == table);
        }
        // Perturbed tables agree with the brute-force bilinearity test.
        if (g.size() <= 16) {
            for (int t = 0; t < 10; t++) {
                PhaseTable table = quad_table(random_quadratic_form(g, rng));
                const GroupElement e = random_element(g, rng);
                table[e.residues()] = table[e.residues()] + PhaseRational(1, 2 * g.exponent() * 2);
                CHECK(is_quadratic_table(g, table) == brute_bilinear(g, table));
            }
        }
    }
}

TEST_CASE("nondegeneracy") {
    const Group z2 = make_group({2}), z4 = make_group({4});
    CHECK(is_nondegenerate(QuadraticForm::diagonal(z2, {1})));
    CHECK(is_nondegenerate(QuadraticForm::diagonal(z4, {1})));
    for (const auto &orders : kGroups) {
        CHECK_FALSE(is_nondegenerate(QuadraticForm::zero(make_group(orders))));
    }
    std::mt19937_64 rng(25);
    for (const auto &orders : kGroups) {
        const Group g = make_group(orders);
        for (int t = 0; t < 20; t++) {
            const QuadraticForm xi = random_quadratic_form(g, rng);
            CHECK(is_nondegenerate(xi) == brute_nondegenerate(xi));
        }
    }
}

TEST_CASE("the isomorphism i_xi") {
    const Group z2 = make_group({2}), z3 = make_group({3});
    const QuadraticForm s2 = QuadraticForm::diagonal(z2, {1});
    CHECK(i_xi(s2, Character(z2, {1})) == GroupElement(z2, {1}));
    CHECK(i_xi(s2, Character::trivial(z2)).is_zero());
    const QuadraticForm s3 = QuadraticForm::diagonal(z3, {2});
    const GroupElement t = i_xi(s3, Character(z3, {1}));
    for (const GroupElement &g : enumerate_elements(z3)) {
        CHECK(-b_of(s3, t, g) == char_eval(Character(z3, {1}), g));
    }
    CHECK_THROWS_AS(i_xi(QuadraticForm::zero(z3), Character(z3, {1})), Error);
    std::mt19937_64 rng(26);
    for (const auto &orders : kGroups) {
        const Group g = make_group(orders);
        for (int n = 0; n < 10; n++) {
            const QuadraticForm xi = random_quadratic_form(g, rng);
            if (!is_nondegenerate(xi)) {
                continue;
            }
            const HomMatrix m = i_xi_matrix(xi);
            CHECK(is_automorphism(m));
            for (const GroupElement &c : enumerate_elements(g)) {
                const GroupElement tt = i_xi(xi, Character(c));
                CHECK(hom_apply(m, c) == tt);
                CHECK(i_xi_inverse(xi, tt) == Character(c));
                for (const GroupElement &x : enumerate_elements(g)) {
                    CHECK(-b_of(xi, tt, x) == char_eval(Character(c), x));
                }
            }
        }
    }
}

TEST_CASE("pullback and extension by zero") {
    std::mt19937_64 rng(27);
    const Group g = make_group({4, 2});
    const Group h = make_group({3});
    for (int t = 0; t < 10; t++) {
        const QuadraticForm xi = random_quadratic_form(g, rng);
        const HomMatrix phi = random_hom(g, g, rng);
        const QuadraticForm pb = pullback(xi, phi);
        const QuadraticForm ext = extend_by_zero(xi, h);
        const QuadraticForm neg = quad_negate(xi);
        for (const GroupElement &x : enumerate_elements(g)) {
            CHECK(quad_eval(pb, x) == quad_eval(xi, hom_apply(phi, x)));
            CHECK(quad_eval(neg, x) == -quad_eval(xi, x));
            for (const GroupElement &y : enumerate_elements(h)) {
                std::vector<int64_t> r = x.residues();
                r.push_back(y[0]);
                CHECK(quad_eval(ext, GroupElement(ext.group(), r)) == quad_eval(xi, x));
            }
        }
    }
}
