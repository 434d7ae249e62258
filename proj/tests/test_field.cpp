/*
   Copyright 2026 The strata-forge Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <random>
#include <set>

#include "doctest.h"
#include "strata/error.hpp"
#include "strata/field.hpp"

using namespace strata;

namespace {

/* Monic quadratic x^2 + c1 x + c0 over Z/p has no root. */
bool quadratic_has_no_root(unsigned p, unsigned c0, unsigned c1) {
    for (unsigned x = 0; x < p; ++x)
        if ((x * x + c1 * x + c0) % p == 0) return false;
    return true;
}

}  // namespace

TEST_CASE("field_new: prime field has modulus x") {
    Field f = Field::make(3, 1);
    CHECK(f.q() == 3);
    CHECK(f.modulus() == std::vector<elem_t>{0, 1});
}

TEST_CASE("field_new: canonical quadratic modulus over Z/3 matches root-search oracle") {
    // enumerate all 9 monic quadratics, keep root-free ones, least under (c0, c1) order
    std::vector<elem_t> expected;
    for (unsigned c0 = 0; c0 < 3 && expected.empty(); ++c0)
        for (unsigned c1 = 0; c1 < 3 && expected.empty(); ++c1)
            if (quadratic_has_no_root(3, c0, c1)) expected = {c0, c1, 1};
    REQUIRE(expected.size() == 3);
    CHECK(Field::make(3, 2).modulus() == expected);
    CHECK(expected == std::vector<elem_t>{1, 0, 1});
}

TEST_CASE("field_new: rejects bad parameters") {
    CHECK_THROWS_AS(Field::make(2, 1), ValidationError);
    CHECK_THROWS_AS(Field::make(9, 1), ValidationError);
    CHECK_THROWS_AS(Field::make(3, 0), ValidationError);
    CHECK_THROWS_AS(Field::make(101, 1), ValidationError);
    CHECK_THROWS_AS(Field::with_modulus(3, {1, 1, 1}), ValidationError);  // x^2+x+1 = (x-1)^2 mod 3
    CHECK_THROWS_AS(Field::with_modulus(5, {1, 0, 2}), ValidationError);  // not monic
}

TEST_CASE("field_new: equal (p, n) give equal descriptors") {
    CHECK(Field::make(5, 3) == Field::make(5, 3));
    CHECK(Field::make(5, 3).modulus() == canonical_modulus(5, 3));
}

TEST_CASE("is_square examples") {
    Field f = Field::make(3);
    std::set<elem_t> squares;
    for (elem_t b = 0; b < 3; ++b) squares.insert(f.mul(b, b));
    CHECK(f.is_square(0));
    CHECK(f.is_square(1));
    CHECK_FALSE(f.is_square(2));
    CHECK(squares.count(2) == 0);
}

TEST_CASE("is_square agrees with exhaustive squaring") {
    for (auto [p, n] : {std::pair{3u, 3u}, {5u, 2u}, {7u, 1u}, {3u, 4u}}) {
        Field f = Field::make(p, n);
        std::vector<bool> sq(f.q(), false);
        for (elem_t b = 0; b < f.q(); ++b) sq[f.mul(b, b)] = true;
        for (elem_t a = 0; a < f.q(); ++a) CHECK(f.is_square(a) == sq[a]);
    }
}

TEST_CASE("field axioms and Frobenius on random samples, table and schoolbook routes agree") {
    std::mt19937_64 rng(7);
    for (auto [p, n] : {std::pair{3u, 1u}, {3u, 2u}, {3u, 5u}, {5u, 3u}, {7u, 2u}, {97u, 1u}, {13u, 2u}}) {
        Field f = Field::make(p, n);
        Field slow = Field::with_modulus(p, f.modulus(), false);
        REQUIRE(f.has_tables());
        REQUIRE_FALSE((slow.has_tables() && n > 1));
        std::uniform_int_distribution<elem_t> pick(0, f.q() - 1);
        for (int trial = 0; trial < 300; ++trial) {
            elem_t a = pick(rng), b = pick(rng), c = pick(rng);
            CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
            CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
            CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
            CHECK(f.frobenius(f.add(a, b)) == f.add(f.frobenius(a), f.frobenius(b)));
            CHECK(f.pow(a, f.q()) == a);
            CHECK(slow.mul(a, b) == f.mul(a, b));
            CHECK(slow.add(a, b) == f.add(a, b));
            CHECK(slow.sub(a, b) == f.sub(a, b));
            CHECK(slow.is_square(a) == f.is_square(a));
            if (a != 0) CHECK(slow.inv(a) == f.inv(a));
        }
    }
}

TEST_CASE("coordinates round trip and prime subfield labels") {
    Field f = Field::make(5, 3);
    std::vector<elem_t> c{4, 0, 2};
    elem_t a = f.from_coords(c);
    CHECK(f.coords(a) == c);
    CHECK(f.from_int(-1) == 4);
    CHECK_THROWS_AS(f.from_coords(std::vector<elem_t>{5}), ValidationError);
    FqElement x(f, a);
    CHECK((x * x.inverse()).value() == 1);
}

TEST_CASE("embedding F_9 -> F_729 is a ring homomorphism") {
    Field small = Field::make(3, 2), large = Field::make(3, 6);
    FieldEmbedding emb(small, large);
    for (elem_t a = 0; a < small.q(); ++a) {
        for (elem_t b = 0; b < small.q(); ++b) {
            CHECK(emb(small.mul(a, b)) == large.mul(emb(a), emb(b)));
            CHECK(emb(small.add(a, b)) == large.add(emb(a), emb(b)));
        }
    }
    CHECK_THROWS_AS(FieldEmbedding(Field::make(3, 2), Field::make(3, 3)), ValidationError);
}

TEST_CASE("Zech view matches field arithmetic") {
    Field f = Field::make(7, 3);
    ZechView z = f.zech();
    for (elem_t a = 0; a < f.q(); a += 5) {
        for (elem_t b = 0; b < f.q(); b += 7) {
            auto la = a == 0 ? z.zero : z.to_log(a);
            auto lb = b == 0 ? z.zero : z.to_log(b);
            CHECK(z.from_log(z.add(la, lb)) == f.add(a, b));
            CHECK(z.from_log(z.mul(la, lb)) == f.mul(a, b));
        }
    }
}
