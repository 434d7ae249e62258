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

#ifndef STRATA_HYPERELLIPTIC_HPP
#define STRATA_HYPERELLIPTIC_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "strata/field.hpp"
#include "strata/fq_poly.hpp"
#include "strata/int_poly.hpp"

namespace strata {

/* Largest extension field F_{q^k} that point counting may enumerate. */
inline constexpr std::uint64_t kDefaultPointBudget = kTableCap;

/* Smooth projective model of y^2 = f(x), f monic squarefree of degree 2g+1 or 2g+2. */
class HyperellipticCurve {
   public:
    /* Throws ValidationError for non-monic, non-squarefree or degree <= 2 input. */
    HyperellipticCurve(Field field, FqPoly f);

    const Field& field() const noexcept { return field_; }
    const FqPoly& f() const noexcept { return f_; }
    unsigned genus() const noexcept { return genus_; }
    std::size_t model_degree() const noexcept { return *f_.degree(); }
    bool odd_model() const noexcept { return model_degree() % 2 == 1; }

   private:
    Field field_;
    FqPoly f_;
    unsigned genus_;
};

/* Numerator L(T) = sum a_i T^i of the zeta function; a_0 = 1, degree 2g. */
struct LPolynomial {
    std::uint64_t q = 0;
    unsigned g = 0;
    std::vector<BigInt> a;

    IntPoly poly() const { return IntPoly(a); }
    /* T^{2g} L(1/T): the characteristic polynomial of Frobenius. */
    IntPoly frobenius_charpoly() const { return IntPoly(a).reversed(); }
    BigInt at_one() const;
    bool satisfies_functional_equation() const;

    friend bool operator==(const LPolynomial& x, const LPolynomial& y) {
        return x.q == y.q && x.g == y.g && x.a == y.a;
    }
};

/*
 * Point counter for all curves of one genus over one base field. Holds the extension
 * fields F_{q^k} (k = 1..max_degree), the embeddings of F_q, and Frobenius orbit
 * representatives so that each orbit is evaluated once.
 */
class PointCounter {
   public:
    PointCounter(Field base, unsigned max_degree, std::uint64_t budget = kDefaultPointBudget);

    /* N_k for k = 1..max_degree, in order. */
    std::vector<std::uint64_t> counts(const FqPoly& f) const;
    std::uint64_t count(const FqPoly& f, unsigned k) const;
    unsigned max_degree() const noexcept { return static_cast<unsigned>(ext_.size()); }

   private:
    struct Extension;
    Field base_;
    std::vector<std::shared_ptr<const Extension>> ext_;
};

/* N_k: points on the smooth projective model over F_{q^k}. */
std::uint64_t point_count(const HyperellipticCurve& c, unsigned k, std::uint64_t budget = kDefaultPointBudget);

/*
 * a_1..a_g from power sums via Newton's identities, the rest from the functional
 * equation. counts must hold N_1..N_g. Throws ConsistencyError when the counts are
 * incompatible with a genus-g curve (Weil bound, inexact recurrence, series mismatch).
 */
LPolynomial l_polynomial_from_counts(std::uint64_t q, unsigned g, const std::vector<std::uint64_t>& counts);

LPolynomial l_polynomial(const HyperellipticCurve& c, std::uint64_t budget = kDefaultPointBudget);

/* #Pic^0(F_q) = L(1). */
BigInt picard_order(const LPolynomial& L);
BigInt picard_order(const HyperellipticCurve& c, std::uint64_t budget = kDefaultPointBudget);

}  // namespace strata

#endif
