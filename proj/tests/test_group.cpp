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

#include "gcliff/arith.hpp"
#include "gcliff/error.hpp"
#include "gcliff/group.hpp"
#include "oracles.hpp"

using namespace gcliff;
using namespace gcliff::testing;

TEST_CASE("groups record whether they are in divisibility-chain form") {
    CHECK(make_group({4, 2}).canonical());
    CHECK(make_group({2}).canonical());
    CHECK_FALSE(make_group({2, 3}).canonical());
    CHECK(make_group({4, 2}).size() == 8);
    CHECK(parse_group("4,2") == make_group({4, 2}));
    CHECK_THROWS_AS(make_group({1}), Error);
    CHECK_THROWS_AS(parse_group("4,x"), Error);
}

TEST_CASE("element arithmetic") {
    const Group g = make_group({4, 2});
    CHECK(GroupElement(g, {3, 1}) + GroupElement(g, {2, 1}) == GroupElement(g, {1, 0}));
    CHECK(elem_order(GroupElement(g, {2, 0})) == 2);
    CHECK(elem_order(elem_zero(g)) == 1);
    CHECK(elem_order(GroupElement(g, {1, 1})) == 4);
    CHECK(-GroupElement(g, {1, 1}) == GroupElement(g, {3, 1}));
    for (uint64_t i = 0; i < g.size(); i++) {
        CHECK(element_index(element_at(g, i)) == i);
    }
}

TEST_CASE("bezout coefficients") {
    const BezoutResult a = bezout(4, 6);
    CHECK(a.g == 2);
    CHECK(a.x * 4 + a.y * 6 == 2);
    const BezoutResult b = bezout(1, 0);
    CHECK(b.g == 1);
    CHECK(b.x == 1);
    CHECK(b.y == 0);
    const BezoutResult c = bezout(35, 15);
    CHECK(c.g == 5);
    CHECK(c.x == 1);
    CHECK(c.y == -2);
    std::mt19937_64 rng(5);
    for (int t = 0; t < 1000; t++) {
        const int64_t x = static_cast<int64_t>(rng() % 2000) - 1000;
        const int64_t y = static_cast<int64_t>(rng() % 2000) - 1000;
        if (x == 0 && y == 0) {
            continue;
        }
        const BezoutResult r = bezout(x, y);
        CHECK(r.g == std::gcd(x, y));
        CHECK(r.x * x + r.y * y == r.g);
    }
}

TEST_CASE("homomorphism validity and automorphisms") {
    const Group g = make_group({4, 2});
    CHECK_FALSE(hom_is_valid(HomMatrix(g, g, std::vector<int64_t>{1, 1, 0, 1}, 0)));
    const HomMatrix m(g, g, {{1, 2}, {1, 1}});
    CHECK(hom_is_valid(m));
    CHECK(is_automorphism(m));
    CHECK(brute_force_isomorphism(m));
    CHECK(hom_compose(invert_automorphism(m), m) == HomMatrix::identity(g));
    CHECK(is_automorphism(HomMatrix::identity(g)));
    CHECK(invert_automorphism(HomMatrix::identity(g)) == HomMatrix::identity(g));
    const GroupElement v(g, {3, 1});
    CHECK(hom_apply(HomMatrix::identity(g), v) == v);
    CHECK(hom_apply(HomMatrix::zero(g, g), v).is_zero());
}

TEST_CASE("automorphism test agrees with enumeration") {
    std::mt19937_64 rng(7);
    for (const auto &orders : std::vector<std::vector<int64_t>>{{4, 2}, {2, 4}, {6}, {2, 2}, {3, 9}, {4, 4}}) {
        const Group g = make_group(orders);
        for (int t = 0; t < 60; t++) {
            const HomMatrix m = random_hom(g, g, rng);
            const bool bf = brute_force_isomorphism(m);
            CHECK(is_automorphism(m) == bf);
            if (bf) {
                CHECK(hom_compose(m, invert_automorphism(m)) == HomMatrix::identity(g));
            } else {
                CHECK_THROWS_AS(invert_automorphism(m), Error);
            }
        }
    }
}

TEST_CASE("solver preimages, kernels and image orders match enumeration") {
    std::mt19937_64 rng(8);
    const std::vector<std::pair<std::vector<int64_t>, std::vector<int64_t>>> shapes{
        {{4, 2}, {4, 2}}, {{6}, {2, 3}}, {{2, 4, 2}, {8}}, {{12}, {4, 6}}, {{3, 3}, {9}}};
    for (const auto &[so, to] : shapes) {
        const Group src = make_group(so), dst = make_group(to);
        for (int t = 0; t < 30; t++) {
            const HomMatrix m = random_hom(src, dst, rng);
            const HomSolver solver(m);
            const auto img = image_set(m);
            CHECK(solver.image_order() == img.size());
            CHECK(solver.surjective() == (img.size() == dst.size()));
            for (const GroupElement &y : enumerate_elements(dst)) {
                const auto pre = solver.preimage(y);
                CHECK(pre.has_value() == (img.count(y.residues()) == 1));
                if (pre) {
                    CHECK(hom_apply(m, *pre) == y);
                }
            }
            // Kernel generators lie in the kernel and generate all of it.
            std::set<std::vector<int64_t>> span{elem_zero(src).residues()};
            for (const GroupElement &k : solver.kernel()) {
                CHECK(hom_apply(m, k).is_zero());
                std::set<std::vector<int64_t>> next = span;
                for (const auto &s : span) {
                    GroupElement acc(src, s);
                    for (int64_t j = 0; j < elem_order(k); j++) {
                        next.insert(acc.residues());
                        acc = acc + k;
                    }
                }
                span = next;
            }
            CHECK(span.size() * img.size() == src.size());
        }
    }
}

TEST_CASE("canonicalize examples") {
    {
        const auto [c, iso] = canonicalize(make_group({2, 3}));
        CHECK(c == make_group({6}));
        CHECK(brute_force_isomorphism(iso.forward));
    }
    {
        const Group g = make_group({4, 2});
        const auto [c, iso] = canonicalize(g);
        CHECK(c == g);
        CHECK(iso.forward == HomMatrix::identity(g));
    }
    {
        const auto [c, iso] = canonicalize(make_group({2, 4}));
        CHECK(c == make_group({4, 2}));
        CHECK(brute_force_isomorphism(iso.forward));
    }
}

TEST_CASE("canonicalize is an isomorphism onto a chain for every group of order at most 64") {
    std::vector<std::vector<int64_t>> lists;
    for (int64_t a = 2; a <= 64; a++) {
        lists.push_back({a});
        for (int64_t b = 2; a * b <= 64; b++) {
            lists.push_back({a, b});
            for (int64_t c = 2; a * b * c <= 64; c++) {
                lists.push_back({a, b, c});
            }
        }
    }
    for (const auto &orders : lists) {
        const Group g = make_group(orders);
        const auto [c, iso] = canonicalize(g);
        CHECK(c.canonical());
        CHECK(c.size() == g.size());
        for (size_t i = 0; i + 1 < c.rank(); i++) {
            CHECK(c.order(i) % c.order(i + 1) == 0);
        }
        CHECK(hom_is_valid(iso.forward));
        CHECK(hom_is_valid(iso.backward));
        CHECK(hom_compose(iso.backward, iso.forward) == HomMatrix::identity(g));
        CHECK(hom_compose(iso.forward, iso.backward) == HomMatrix::identity(c));
    }
}

TEST_CASE("primary decomposition") {
    const Group g = make_group({12, 2});
    const auto [p, iso] = primary_decomposition(g);
    CHECK(p.size() == g.size());
    for (int64_t q : p.orders()) {
        CHECK(factorize(q).size() == 1);
    }
    CHECK(brute_force_isomorphism(iso.forward));
}

TEST_CASE("embedded convention worked example") {
    // G x G^ for G = Z4 x Z2, Z2 slots carrying values in {0, 2}.
    const Group gg = make_group({4, 2, 4, 2});
    const HomMatrix m = hom_from_embedded(gg, {{2, 1, 3, 0}, {2, 0, 2, 0}, {1, 0, 0, 1}, {0, 1, 0, 1}});
    const GroupElement v = from_embedded(gg, {1, 0, 3, 2});
    CHECK(to_embedded(hom_apply(m, v)) == std::vector<int64_t>{3, 0, 3, 2});
    CHECK(hom_from_embedded(gg, hom_to_embedded(m)) == m);
    CHECK_THROWS_AS(from_embedded(gg, {1, 1, 0, 0}), Error);
}
