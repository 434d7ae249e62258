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

#ifndef STRATA_INT_POLY_HPP
#define STRATA_INT_POLY_HPP

#include <gmpxx.h>

#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace strata {

using BigInt = mpz_class;

/* Dense polynomial in Z[x], coefficients low-to-high, trailing zeros trimmed. */
class IntPoly {
   public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);
    IntPoly(std::initializer_list<long long> coeffs);

    static IntPoly monomial(const BigInt& c, std::size_t k);

    const std::vector<BigInt>& coeffs() const noexcept { return c_; }
    std::optional<std::size_t> degree() const noexcept {
        if (c_.empty()) return std::nullopt;
        return c_.size() - 1;
    }
    bool is_zero() const noexcept { return c_.empty(); }
    BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }
    const BigInt& leading() const;

    BigInt operator()(const BigInt& x) const;

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator-() const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly scaled(const BigInt& s) const;
    IntPoly derivative() const;

    /* gcd of coefficients, nonnegative (0 for the zero polynomial). */
    BigInt content() const;
    /* Divided by content, leading coefficient made positive. */
    IntPoly primitive_part() const;
    /* x^deg * f(1/x). */
    IntPoly reversed() const;

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

    std::string str() const;

   private:
    void trim();
    std::vector<BigInt> c_;
};

std::ostream& operator<<(std::ostream& os, const IntPoly& f);

/* True iff d divides f in Z[x]; quotient written when non-null. d nonzero. */
bool divides(const IntPoly& d, const IntPoly& f, IntPoly* quotient = nullptr);

/* Primitive gcd with positive leading coefficient, times gcd of contents. */
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/* Sylvester-matrix resultant (fraction-free elimination). */
BigInt resultant(const IntPoly& a, const IntPoly& b);
BigInt discriminant(const IntPoly& f);

bool is_squarefree(const IntPoly& f);

/* det(xI - A) for a square integer matrix (Faddeev-LeVerrier; all divisions exact). */
IntPoly charpoly(const std::vector<std::vector<BigInt>>& a);

/*
 * Irreducible factors of f over Z with multiplicities; the content is dropped.
 * Uses a modular factorization, Hensel lifting and exhaustive recombination, so it is
 * meant for the small degrees (<= 12 or so) that arise here.
 */
std::vector<std::pair<IntPoly, int>> factor(const IntPoly& f);

/* Irreducible over Q (degree >= 1, primitive part has a single factor of multiplicity 1). */
bool is_irreducible(const IntPoly& f);

bool is_perfect_square(const BigInt& n);

}  // namespace strata

#endif
