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

#include <cmath>
#include <random>

#include "doctest.h"
#include "strata/error.hpp"
#include "strata/hyperelliptic.hpp"

using namespace strata;

namespace {

/* Count (x, y) pairs over F_{q^k} directly, then add the points at infinity. */
std::uint64_t brute_count(const FqPoly& f, unsigned k) {
    const Field& F = f.field();
    Field big = Field::make(F.p(), F.n() * k);
    FieldEmbedding emb(F, big);
    std::vector<elem_t> c;
    for (elem_t a : f.coeffs()) c.push_back(emb(a));
    std::uint64_t n = 0;
    for (elem_t x = 0; x < big.q(); ++x) {
        elem_t v = 0;
        for (std::size_t i = c.size(); i-- > 0;) v = big.add(big.mul(v, x), c[i]);
        for (elem_t y = 0; y < big.q(); ++y)
            if (big.mul(y, y) == v) ++n;
    }
    const std::size_t d = c.size() - 1;
    if (d % 2 == 1) return n + 1;
    bool sq = false;
    for (elem_t y = 0; y < big.q(); ++y)
        if (big.mul(y, y) == c.back()) sq = true;
    return n + (sq ? 2 : 0);
}

FqPoly poly(const Field& F, std::vector<elem_t> c) { return FqPoly(F, std::move(c)); }

}  // namespace

TEST_CASE("curve construction validates the model") {
    Field F3 = Field::make(3);
    HyperellipticCurve c(F3, poly(F3, {1, 0, 1, 1}));
    CHECK(c.genus() == 1);
    CHECK(c.odd_model());
    CHECK_THROWS_AS(HyperellipticCurve(F3, poly(F3, {0, 0, 1})), ValidationError);
    CHECK_THROWS_AS(HyperellipticCurve(F3, poly(F3, {0, 0, 0, 1})), ValidationError);
    CHECK_THROWS_AS(HyperellipticCurve(F3, poly(F3, {1, 0, 1, 2})), ValidationError);

    Field F5 = Field::make(5);
    FqPoly f = poly(F5, {1, 1, 0, 0, 0, 1});
    REQUIRE(gcd(f, f.derivative()).is_constant());
    CHECK(HyperellipticCurve(F5, f).genus() == 2);
    CHECK(HyperellipticCurve(F5, poly(F5, {1, 0, 0, 0, 0, 0, 1})).genus() == 2);
    CHECK(HyperellipticCurve(F5, poly(F5, {1, 0, 0, 0, 0, 0, 0, 1})).genus() == 3);
}

TEST_CASE("point counts on the small examples") {
    Field F3 = Field::make(3);
    HyperellipticCurve ss(F3, poly(F3, {0, 1, 0, 1}));
    HyperellipticCurve ord(F3, poly(F3, {1, 0, 1, 1}));
    CHECK(brute_count(ss.f(), 1) == 4);
    CHECK(brute_count(ord.f(), 1) == 6);
    CHECK(point_count(ss, 1) == 4);
    CHECK(point_count(ord, 1) == 6);

    LPolynomial Ls = l_polynomial(ss);
    LPolynomial Lo = l_polynomial(ord);
    CHECK(Ls.a == std::vector<BigInt>{1, 0, 3});
    CHECK(Lo.a == std::vector<BigInt>{1, 2, 3});
    CHECK(picard_order(Ls) == 4);
    CHECK(picard_order(Lo) == 6);
    CHECK(Lo.frobenius_charpoly() == IntPoly{3, 2, 1});
}

TEST_CASE("fast counts agree with brute force") {
    for (auto [p, n] : std::vector<std::pair<unsigned, unsigned>>{{3, 1}, {5, 1}, {3, 2}, {7, 1}}) {
        Field F = Field::make(p, n);
        std::mt19937_64 rng(p * 100 + n);
        for (std::size_t deg : {3, 4, 5, 6}) {
            unsigned maxk = F.q() <= 5 ? 3 : 2;
            PointCounter pc(F, maxk);
            for (int t = 0; t < 6; ++t) {
                FqPoly f = monic_at(F, deg, rng() % monic_count(F, deg));
                auto counts = pc.counts(f);
                for (unsigned k = 1; k <= maxk; ++k) {
                    if (std::pow(double(F.q()), double(k)) > 800) continue;
                    CHECK_MESSAGE(counts[k - 1] == brute_count(f, k), f << " k=" << k);
                }
            }
        }
    }
}

TEST_CASE("L-polynomial properties over exhaustive small families") {
    for (auto [p, n, g] : std::vector<std::tuple<unsigned, unsigned, unsigned>>{
             {3, 1, 1}, {5, 1, 1}, {7, 1, 1}, {3, 1, 2}, {5, 1, 2}, {3, 2, 1}}) {
        Field F = Field::make(p, n);
        const double q = F.q();
        PointCounter pc(F, 2 * g);
        MonicStream s(F, 2 * g + 1, true);
        FqPoly f(F);
        while (s.next(f)) {
            auto counts = pc.counts(f);
            LPolynomial L = l_polynomial_from_counts(F.q(), g, counts);
            CHECK(L.satisfies_functional_equation());
            CHECK(L.a[2 * g] == BigInt(static_cast<unsigned long>(std::pow(q, g))));
            double lo = std::pow(std::sqrt(q) - 1, 2 * g), hi = std::pow(std::sqrt(q) + 1, 2 * g);
            double ord = L.at_one().get_d();
            CHECK(ord >= lo - 1e-9);
            CHECK(ord <= hi + 1e-9);
            if (g == 1) CHECK(L.at_one() == BigInt(static_cast<unsigned long>(counts[0])));
            // base change: power sums of the reciprocal roots predict N_k for k > g
            IntPoly P = L.frobenius_charpoly();
            std::vector<BigInt> e(2 * g + 1);
            for (unsigned i = 0; i <= 2 * g; ++i) e[i] = L.a[i];
            std::vector<BigInt> s_(2 * g + 1, 0);
            for (unsigned k = 1; k <= 2 * g; ++k) {
                BigInt acc = -BigInt(k) * e[k];
                for (unsigned i = 1; i < k; ++i) acc -= e[i] * s_[k - i];
                s_[k] = acc;  // sum of alpha^k
                BigInt predicted = 1 - s_[k];
                BigInt qk = 1;
                for (unsigned j = 0; j < k; ++j) qk *= static_cast<unsigned long>(F.q());
                predicted += qk;
                CHECK(predicted == BigInt(static_cast<unsigned long>(counts[k - 1])));
            }
        }
    }
}

TEST_CASE("inconsistent counts are rejected") {
    CHECK_THROWS_AS(l_polynomial_from_counts(3, 1, {20}), ConsistencyError);
    CHECK_THROWS_AS(l_polynomial_from_counts(3, 2, {4, 1}), ConsistencyError);
    CHECK_THROWS_AS(PointCounter(Field::make(97), 5), BudgetError);
    CHECK_THROWS_AS(point_count(HyperellipticCurve(Field::make(3), poly(Field::make(3), {0, 1, 0, 1})), 4, 50),
                    BudgetError);
}
