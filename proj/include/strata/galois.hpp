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

#ifndef STRATA_GALOIS_HPP
#define STRATA_GALOIS_HPP

#include <optional>
#include <string>
#include <vector>

#include "strata/hyperelliptic.hpp"

namespace strata {

/* h with L(T) = T^g h(T + q/T) after reversal, i.e. P(x) = x^g h(x + q/x). Monic, degree g. */
IntPoly real_weil_polynomial(const LPolynomial& L);

/* Whether u + v sqrt(D) is a square in Q(sqrt(D)); D not a rational square. */
bool is_square_in_quadratic(const BigInt& u, const BigInt& v, const BigInt& D);

/* Whether c0 + c1 t + c2 t^2 is a square in Q(t), t a root of the irreducible monic cubic h. */
bool is_square_in_cubic(const IntPoly& h, const std::vector<BigInt>& alpha);

struct SplittingDegree {
    enum class Status { exact, certified_maximal, undetermined };
    Status status = Status::undetermined;
    /* Exact degree, or 2^g g! when certified maximal; 0 when undetermined. */
    unsigned degree = 0;
    /* 2^g g! */
    unsigned maximum = 0;
    bool reducible = false;
    /* Degree strictly below 2^g g! is known (reducible L or exact degree below the bound). */
    bool known_non_maximal() const;
};

std::string to_string(SplittingDegree::Status s);

/*
 * Degree over Q of the splitting field of L. Exact for g <= 2 (closed form via the real
 * Weil polynomial and sign discriminants); for g = 3 either certified maximal or
 * undetermined. Throws ValidationError for g > 3.
 */
SplittingDegree splitting_degree(const LPolynomial& L);

/* prod (x - alpha_i^d) over the reciprocal roots of L, via power sums. */
IntPoly frobenius_power_charpoly(const LPolynomial& L, unsigned d);

unsigned euler_phi(unsigned n);

/* All d >= 1 with phi(d) <= bound, ascending. */
std::vector<unsigned> phi_bounded(unsigned bound);

struct SimplicityCheck {
    bool irreducible = false;
    /* d values whose power char poly was tested. */
    std::vector<unsigned> checked;
    /* First d for which pi^d fails to generate Q(pi). */
    std::optional<unsigned> failing_d;
    bool certified() const { return irreducible && !failing_d; }
};

/*
 * Irreducible L plus squarefree char poly of pi^d for every d with phi(d) <= 2g(2g-1), a
 * bound covering every root of unity in Q(alpha_i, alpha_j) and containing the list phi(d) <= 2g.
 */
SimplicityCheck absolutely_simple(const LPolynomial& L);

}  // namespace strata

#endif
