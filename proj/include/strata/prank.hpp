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

#ifndef STRATA_PRANK_HPP
#define STRATA_PRANK_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "strata/hyperelliptic.hpp"

namespace strata {

/* Reduced fraction with positive denominator. */
class Rational {
   public:
    Rational(long long num = 0, long long den = 1);
    long long num() const noexcept { return num_; }
    long long den() const noexcept { return den_; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
        return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
    }
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);

   private:
    long long num_;
    long long den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

using FqMatrix = std::vector<std::vector<elem_t>>;

/* Cartier-Manin matrix A_ij = c_{ip-j}, 1 <= i, j <= g, with f^((p-1)/2) = sum c_m x^m. */
struct HasseWittMatrix {
    Field field;
    unsigned g = 0;
    FqMatrix a;
};

HasseWittMatrix hasse_witt(const HyperellipticCurve& c);

std::size_t matrix_rank(const Field& F, FqMatrix m);
FqMatrix matrix_mul(const Field& F, const FqMatrix& a, const FqMatrix& b);
/* Raise every entry to the p^k-th power. */
FqMatrix frobenius_twist(const Field& F, const FqMatrix& a, unsigned k);

/* rank(A A^(p) ... A^(p^{g-1})). */
unsigned p_rank(const HasseWittMatrix& hw);
unsigned p_rank(const HyperellipticCurve& c);

struct Segment {
    Rational slope;
    unsigned length = 0;
    friend bool operator==(const Segment&, const Segment&) = default;
};

/* Lower convex hull of (i, v_p(a_i)/n); segments ordered by strictly increasing slope. */
struct NewtonPolygon {
    std::vector<Segment> segments;

    unsigned width() const noexcept;
    Rational height() const;
    /* Slope multiset mapped by s -> 1 - s equals the original. */
    bool is_symmetric() const;
    friend bool operator==(const NewtonPolygon&, const NewtonPolygon&) = default;
};

std::ostream& operator<<(std::ostream& os, const NewtonPolygon& np);

/* Throws ValidationError unless q == p^n. */
NewtonPolygon newton_polygon(const LPolynomial& L, unsigned p, unsigned n);

unsigned slope_zero_length(const NewtonPolygon& np);

enum class NpClass { ordinary, supersingular, other };

NpClass classify(const NewtonPolygon& np);
std::string to_string(NpClass c);

}  // namespace strata

#endif
