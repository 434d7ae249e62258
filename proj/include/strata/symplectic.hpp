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

#ifndef STRATA_SYMPLECTIC_HPP
#define STRATA_SYMPLECTIC_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "strata/hyperelliptic.hpp"

namespace strata {

/* Square matrix over Z/l, row-major, entries in [0, l). */
class ModlMatrix {
   public:
    ModlMatrix(unsigned l, std::size_t dim);
    ModlMatrix(unsigned l, std::size_t dim, std::vector<std::uint32_t> entries);
    static ModlMatrix identity(unsigned l, std::size_t dim);
    static ModlMatrix scalar(unsigned l, std::size_t dim, std::uint32_t c);

    unsigned modulus() const noexcept { return l_; }
    std::size_t dim() const noexcept { return n_; }
    std::uint32_t operator()(std::size_t i, std::size_t j) const noexcept { return e_[i * n_ + j]; }
    std::uint32_t& operator()(std::size_t i, std::size_t j) noexcept { return e_[i * n_ + j]; }
    const std::vector<std::uint32_t>& entries() const noexcept { return e_; }

    ModlMatrix operator*(const ModlMatrix& o) const;
    ModlMatrix transpose() const;
    friend bool operator==(const ModlMatrix&, const ModlMatrix&) = default;
    friend bool operator<(const ModlMatrix& a, const ModlMatrix& b) { return a.e_ < b.e_; }

    std::uint32_t det() const;
    /* Characteristic polynomial det(T I - M), low-to-high, monic. */
    std::vector<std::uint32_t> charpoly() const;

   private:
    unsigned l_;
    std::size_t n_;
    std::vector<std::uint32_t> e_;
};

/* J[i][2g+1-i] = +1 for i <= g and -1 for i > g (1-based). */
ModlMatrix symplectic_form(unsigned g, unsigned l);

/* m with M^T J M = m J. Throws ValidationError if M is not in GSp. */
std::uint32_t multiplier(const ModlMatrix& M);

/* l^{g^2} prod_{i=1..g} (l^{2i} - 1). */
BigInt sp_order(unsigned g, unsigned l);

/* 2^g g! */
BigInt weyl_order(unsigned g);

/* x -> x + <x, v> v, i.e. I - v v^T J. */
ModlMatrix transvection(unsigned g, unsigned l, const std::vector<std::uint32_t>& v);

/* T_{e_i} for all i and T_{e_i + e_j} for i < j; generates Sp_{2g}(Z/l). */
std::vector<ModlMatrix> standard_generators(unsigned g, unsigned l);

/* diag(m, ..., m, 1, ..., 1); multiplier m. */
ModlMatrix coset_representative(unsigned g, unsigned l, std::uint32_t m);

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/* Order of the generated group, or nullopt when it exceeds cap. Generators must be symplectic. */
std::optional<std::uint64_t> group_bfs(const std::vector<ModlMatrix>& generators, std::uint64_t cap);

/* All elements of the generated group in BFS order. Throws BudgetError above cap. */
std::vector<ModlMatrix> group_elements(const std::vector<ModlMatrix>& generators, std::uint64_t cap);

inline constexpr unsigned kDefaultWalkLength = 50;

/*
 * Product of `walk` transvections x -> x + c <x, v> v, with v uniform nonzero and c uniform
 * in (Z/l)^*. A random scalar is needed for Sp_2(Z/3), which is not perfect.
 */
ModlMatrix random_sp(unsigned g, unsigned l, std::mt19937_64& rng, unsigned walk = kDefaultWalkLength);
ModlMatrix random_sp(unsigned g, unsigned l, std::uint64_t seed, unsigned walk = kDefaultWalkLength);

/* Seed of sample `index` in a stream: depends only on (seed, index). */
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) noexcept;

struct ExactProportion {
    std::uint64_t count = 0;
    std::uint64_t total = 0;
    /* Reduced fraction. */
    std::uint64_t num() const;
    std::uint64_t den() const;
    double value() const { return total ? static_cast<double>(count) / static_cast<double>(total) : 0.0; }
};

struct Estimate {
    double estimate = 0;
    double ci_low = 0;
    double ci_high = 0;
    std::uint64_t samples = 0;
};

/* Share of Sp * D_m having a nonzero fixed vector, i.e. det(M - I) = 0. */
ExactProportion fixed_vector_proportion_exact(unsigned g, unsigned l, std::uint32_t m,
                                              std::uint64_t cap = kDefaultEnumerationCap);
/* Monte Carlo with a 95% Wilson interval; sample i uses substream_seed(seed, i). */
Estimate fixed_vector_proportion_mc(unsigned g, unsigned l, std::uint32_t m, std::uint64_t samples, std::uint64_t seed,
                                    unsigned workers = 1, unsigned walk = kDefaultWalkLength);

using ModlPoly = std::vector<std::uint32_t>;

/* Counts of det(T I - M) over the coset Sp * D_m. */
std::map<ModlPoly, std::uint64_t> charpoly_distribution_exact(unsigned g, unsigned l, std::uint32_t m,
                                                              std::uint64_t cap = kDefaultEnumerationCap);
std::map<ModlPoly, std::uint64_t> charpoly_distribution_mc(unsigned g, unsigned l, std::uint32_t m,
                                                           std::uint64_t samples, std::uint64_t seed,
                                                           unsigned walk = kDefaultWalkLength);

/* T^{2g} L(1/T) mod l, monic, low-to-high. Throws ValidationError when l divides q. */
ModlPoly charpoly_mod(const LPolynomial& L, unsigned l);

/* Evaluate a mod-l polynomial. */
std::uint32_t eval_mod(const ModlPoly& f, std::uint32_t x, unsigned l);

struct BaselineRow {
    unsigned g = 0;
    unsigned l = 0;
    std::uint32_t m = 0;
    std::optional<ExactProportion> exact;
    std::optional<Estimate> estimate;
};

/* Header g,l,m,proportion_num,proportion_den,estimate,ci_low,ci_high,N; unused cells empty. */
std::string baseline_csv(const std::vector<BaselineRow>& rows);

}  // namespace strata

#endif
