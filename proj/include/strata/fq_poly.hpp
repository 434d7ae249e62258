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

#ifndef STRATA_FQ_POLY_HPP
#define STRATA_FQ_POLY_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "strata/field.hpp"

namespace strata {

/* Univariate polynomial over F_q, coefficients low-to-high, trailing zeros trimmed. */
class FqPoly {
   public:
    explicit FqPoly(Field field) : field_(std::move(field)) {}
    FqPoly(Field field, std::vector<elem_t> coeffs);

    static FqPoly constant(const Field& field, elem_t c) { return FqPoly(field, {c}); }
    static FqPoly monomial(const Field& field, elem_t c, std::size_t k);

    const Field& field() const noexcept { return field_; }
    const std::vector<elem_t>& coeffs() const noexcept { return c_; }

    /* std::nullopt is the zero polynomial's degree (-infinity). */
    std::optional<std::size_t> degree() const noexcept {
        if (c_.empty()) return std::nullopt;
        return c_.size() - 1;
    }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
    elem_t coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    elem_t leading() const noexcept { return c_.empty() ? 0 : c_.back(); }

    elem_t operator()(elem_t x) const noexcept;

    FqPoly operator+(const FqPoly& o) const;
    FqPoly operator-(const FqPoly& o) const;
    FqPoly operator*(const FqPoly& o) const;
    FqPoly scaled(elem_t s) const;
    FqPoly derivative() const;
    FqPoly monic() const;

    friend bool operator==(const FqPoly& a, const FqPoly& b) noexcept {
        return a.c_ == b.c_ && a.field_ == b.field_;
    }

   private:
    void trim() noexcept;
    Field field_;
    std::vector<elem_t> c_;
};

std::ostream& operator<<(std::ostream& os, const FqPoly& f);

/* Quotient and remainder; b nonzero. */
std::pair<FqPoly, FqPoly> divmod(const FqPoly& a, const FqPoly& b);
/* Monic gcd (zero if both are zero). */
FqPoly gcd(const FqPoly& a, const FqPoly& b);
FqPoly mulmod(const FqPoly& a, const FqPoly& b, const FqPoly& m);
FqPoly powmod(const FqPoly& a, std::uint64_t e, const FqPoly& m);

/* gcd(f, f') constant. Throws ValidationError on the zero polynomial. */
bool squarefree(const FqPoly& f);

/* Exact power f^e by repeated squaring. */
FqPoly poly_pow(const FqPoly& f, std::uint64_t e);

/* Number of monic polynomials of degree d, q^d. Throws BudgetError above 2^63. */
std::uint64_t monic_count(const Field& field, std::size_t d);

/*
 * The index-th monic polynomial of degree d in the enumeration order: base-q digits of
 * index are (c_0, ..., c_{d-1}) with the constant term varying fastest.
 */
FqPoly monic_at(const Field& field, std::size_t d, std::uint64_t index);

/* Deterministic stream over monic degree-d polynomials, optionally squarefree only. */
class MonicStream {
   public:
    MonicStream(Field field, std::size_t d, bool squarefree_only);
    /* Advances; returns false at the end. */
    bool next(FqPoly& out);
    /* Enumeration index of the polynomial most recently returned. */
    std::uint64_t index() const noexcept { return index_ - 1; }

   private:
    Field field_;
    std::size_t d_;
    bool squarefree_only_;
    std::uint64_t total_;
    std::uint64_t index_ = 0;
};

/*
 * Complete factorization of a monic squarefree polynomial over F_q into monic irreducibles
 * (distinct-degree then Cantor-Zassenhaus splitting). Deterministic for a given seed.
 */
std::vector<FqPoly> factor_squarefree(const FqPoly& f, std::uint64_t seed = 0x5eed);

}  // namespace strata

#endif
