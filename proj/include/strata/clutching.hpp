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

#ifndef STRATA_CLUTCHING_HPP
#define STRATA_CLUTCHING_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "strata/hyperelliptic.hpp"

namespace strata {

using Edge = std::pair<std::size_t, std::size_t>;

/* Vertex-labelled tree with g_v >= 1 and deg(v) <= 2 g_v + 2. */
class ClutchingTree {
   public:
    /* Throws ValidationError unless the data is a valid clutching tree. */
    ClutchingTree(std::vector<unsigned> genera, std::vector<Edge> edges);

    static ClutchingTree single(unsigned g);
    static ClutchingTree path(std::vector<unsigned> genera);
    static ClutchingTree star(unsigned center, std::vector<unsigned> leaves);

    const std::vector<unsigned>& genera() const noexcept { return genera_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    /* |Lambda| */
    std::size_t size() const noexcept { return genera_.size(); }
    /* g(Lambda) = sum of g_v */
    unsigned genus() const noexcept;
    std::size_t degree(std::size_t v) const;
    /* Isomorphism invariant including labels; equal iff the labelled trees are isomorphic. */
    std::string canonical_form() const;

   private:
    std::vector<unsigned> genera_;
    std::vector<Edge> edges_;
};

/* f_v per vertex, indexed like the tree's vertices. */
using PRankLabeling = std::vector<unsigned>;

/* All labelings with 0 <= f_v <= g_v and sum f_v = f, in lexicographic order. */
std::vector<PRankLabeling> labelings(const ClutchingTree& t, unsigned f);

/* g(Lambda) + f - |Lambda|. */
long stratum_dim(const ClutchingTree& t, unsigned f);

/* Identify the endpoints of edges()[edge]; the merged vertex takes the smaller index. */
ClutchingTree coalesce(const ClutchingTree& t, std::size_t edge);

/* Whether b is isomorphic to the result of some sequence of coalesce steps on a. */
bool refines(const ClutchingTree& a, const ClutchingTree& b);

unsigned prank_compact(const ClutchingTree& t, const PRankLabeling& labeling);

/* Connected graph of components (g_v, f_v); loops and multi-edges allowed. */
class DualGraph {
   public:
    DualGraph(std::vector<unsigned> genera, std::vector<unsigned> pranks, std::vector<Edge> edges);

    const std::vector<unsigned>& genera() const noexcept { return genera_; }
    const std::vector<unsigned>& pranks() const noexcept { return pranks_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::size_t betti() const noexcept { return edges_.size() + 1 - genera_.size(); }
    /* Arithmetic genus sum g_v + b_1. */
    unsigned genus() const noexcept;

   private:
    std::vector<unsigned> genera_;
    std::vector<unsigned> pranks_;
    std::vector<Edge> edges_;
};

/* sum f_v + b_1. */
unsigned prank_stable(const DualGraph& g);

/* Boundary divisor of the compactified hyperelliptic locus, by canonical index. */
struct BoundaryDivisor {
    enum class Kind { delta, xi };
    Kind kind;
    unsigned index;
    unsigned g;

    std::string name() const;
    /* Component genera of the generic point (one entry for Xi_0). */
    std::vector<unsigned> component_genera() const;
    /* Admissible component p-ranks for total p-rank f (empty when the stratum is empty). */
    std::vector<std::pair<unsigned, unsigned>> splits(unsigned f) const;
    /* Dual graph of a generic point with the given component p-ranks. */
    DualGraph dual_graph(unsigned f1, unsigned f2 = 0) const;
    /* g - 2 + f. */
    long stratum_dim(unsigned f) const;
};

/* Delta_i for 1 <= i <= g/2, then Xi_i for 0 <= i <= (g-1)/2. Throws for g < 2. */
std::vector<BoundaryDivisor> boundary_catalog(unsigned g);

struct DegenerationWitness {
    ClutchingTree tree;
    PRankLabeling labeling;
    std::vector<HyperellipticCurve> curves;
};

/*
 * Path of g elliptic vertices whose first f are ordinary, each carrying the first
 * ordinary (resp. supersingular) monic cubic over the field in enumeration order.
 */
DegenerationWitness degeneration_witness(unsigned g, unsigned f, const Field& field);

}  // namespace strata

#endif
