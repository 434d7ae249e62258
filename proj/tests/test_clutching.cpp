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

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "strata/clutching.hpp"
#include "strata/error.hpp"
#include "strata/prank.hpp"

using namespace strata;

namespace {

unsigned long long binom(unsigned n, unsigned k) {
    unsigned long long r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/* Random clutching tree: attach each new vertex to a random earlier vertex with spare degree. */
ClutchingTree random_tree(std::mt19937_64& rng, std::size_t n, unsigned max_genus) {
    std::vector<unsigned> g(n);
    for (auto& x : g) x = 1 + static_cast<unsigned>(rng() % max_genus);
    std::vector<std::size_t> deg(n, 0);
    std::vector<Edge> e;
    for (std::size_t v = 1; v < n; ++v) {
        std::vector<std::size_t> ok;
        for (std::size_t u = 0; u < v; ++u)
            if (deg[u] < 2 * g[u] + 2) ok.push_back(u);
        std::size_t u = ok[rng() % ok.size()];
        ++deg[u];
        ++deg[v];
        e.emplace_back(u, v);
    }
    return ClutchingTree(g, e);
}

/* Brute-force labelled isomorphism over all vertex permutations. */
bool isomorphic(const ClutchingTree& a, const ClutchingTree& b) {
    if (a.size() != b.size()) return false;
    std::vector<std::size_t> perm(a.size());
    std::iota(perm.begin(), perm.end(), 0);
    auto norm = [](std::vector<Edge> e) {
        for (auto& [x, y] : e)
            if (x > y) std::swap(x, y);
        std::sort(e.begin(), e.end());
        return e;
    };
    const auto eb = norm(b.edges());
    do {
        bool ok = true;
        for (std::size_t v = 0; v < a.size() && ok; ++v) ok = a.genera()[v] == b.genera()[perm[v]];
        if (!ok) continue;
        std::vector<Edge> ea;
        for (auto [x, y] : a.edges()) ea.emplace_back(perm[x], perm[y]);
        if (norm(ea) == eb) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

ClutchingTree shuffled(const ClutchingTree& t, std::mt19937_64& rng) {
    std::vector<std::size_t> perm(t.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<unsigned> g(t.size());
    for (std::size_t v = 0; v < t.size(); ++v) g[perm[v]] = t.genera()[v];
    std::vector<Edge> e;
    for (auto [x, y] : t.edges()) e.emplace_back(perm[y], perm[x]);
    std::shuffle(e.begin(), e.end(), rng);
    return ClutchingTree(g, e);
}

}  // namespace

TEST_CASE("tree genus and size") {
    CHECK(ClutchingTree::single(4).genus() == 4);
    CHECK(ClutchingTree::single(4).size() == 1);
    CHECK(ClutchingTree::path({1, 1, 1}).genus() == 3);
    CHECK(ClutchingTree::path({1, 1, 1}).size() == 3);
    CHECK(ClutchingTree::star(2, {1, 1, 1}).genus() == 5);
    CHECK(ClutchingTree::star(2, {1, 1, 1}).size() == 4);
}

TEST_CASE("tree validation") {
    CHECK_THROWS_AS(ClutchingTree({1, 1, 1}, {{0, 1}, {1, 2}, {0, 2}}), ValidationError);
    CHECK_THROWS_AS(ClutchingTree({1, 1, 1}, {{0, 1}}), ValidationError);
    CHECK_THROWS_AS(ClutchingTree({0, 1}, {{0, 1}}), ValidationError);
    CHECK_THROWS_AS(ClutchingTree::star(1, {1, 1, 1, 1, 1}), ValidationError);
    CHECK_NOTHROW(ClutchingTree::star(1, {1, 1, 1, 1}));
}

TEST_CASE("labelings") {
    CHECK(labelings(ClutchingTree::path({1, 1, 1}), 1).size() == 3);
    CHECK(labelings(ClutchingTree::path({2, 1}), 2) == std::vector<PRankLabeling>{{1, 1}, {2, 0}});
    CHECK_THROWS_AS(labelings(ClutchingTree::path({1, 1}), 3), ValidationError);
    for (unsigned g = 1; g <= 8; ++g)
        for (unsigned f = 0; f <= g; ++f)
            CHECK(labelings(ClutchingTree::path(std::vector<unsigned>(g, 1)), f).size() == binom(g, f));

    std::mt19937_64 rng(11);
    for (int t = 0; t < 60; ++t) {
        ClutchingTree el = random_tree(rng, 1 + rng() % 8, 1);
        for (unsigned f = 0; f <= el.genus(); ++f) CHECK(labelings(el, f).size() == binom(el.size(), f));

        ClutchingTree tr = random_tree(rng, 1 + rng() % 6, 3);
        std::size_t total = 0, prod = 1;
        for (unsigned f = 0; f <= tr.genus(); ++f) {
            auto ls = labelings(tr, f);
            total += ls.size();
            std::set<PRankLabeling> set(ls.begin(), ls.end());
            CHECK(set.size() == ls.size());
            for (const auto& l : ls) {
                CHECK(prank_compact(tr, l) == f);
                // swapping the labels of two elliptic vertices stays inside the set
                for (std::size_t a = 0; a < tr.size(); ++a)
                    for (std::size_t b = a + 1; b < tr.size(); ++b) {
                        if (tr.genera()[a] != 1 || tr.genera()[b] != 1) continue;
                        PRankLabeling s = l;
                        std::swap(s[a], s[b]);
                        CHECK(set.count(s) == 1);
                    }
            }
        }
        for (unsigned g : tr.genera()) prod *= g + 1;
        CHECK(total == prod);
    }
}

TEST_CASE("stratum dimension") {
    for (unsigned g = 1; g <= 6; ++g)
        for (unsigned f = 0; f <= g; ++f) {
            CHECK(stratum_dim(ClutchingTree::single(g), f) == long(g) - 1 + long(f));
            CHECK(stratum_dim(ClutchingTree::path(std::vector<unsigned>(g, 1)), f) == long(f));
        }
    CHECK(stratum_dim(ClutchingTree::path({1, 1, 1}), 0) == 0);
    std::mt19937_64 rng(5);
    for (int t = 0; t < 50; ++t) {
        ClutchingTree tr = random_tree(rng, 2 + rng() % 5, 3);
        std::size_t e = rng() % tr.edges().size();
        for (unsigned f = 0; f <= tr.genus(); ++f) CHECK(stratum_dim(coalesce(tr, e), f) == stratum_dim(tr, f) + 1);
    }
}

TEST_CASE("coalesce") {
    ClutchingTree p3 = ClutchingTree::path({1, 1, 1});
    CHECK(coalesce(p3, 0).genera() == std::vector<unsigned>{2, 1});
    CHECK(coalesce(p3, 0).edges() == std::vector<Edge>{{0, 1}});
    CHECK(coalesce(ClutchingTree::path({1, 1}), 0).genera() == std::vector<unsigned>{2});
    CHECK_THROWS_AS(coalesce(p3, 2), ValidationError);
    std::mt19937_64 rng(9);
    for (int t = 0; t < 40; ++t) {
        ClutchingTree tr = random_tree(rng, 1 + rng() % 7, 3);
        const unsigned g = tr.genus();
        while (tr.size() > 1) {
            std::size_t n = tr.size();
            tr = coalesce(tr, rng() % tr.edges().size());
            CHECK(tr.size() == n - 1);
            CHECK(tr.genus() == g);
        }
        CHECK(tr.genera() == std::vector<unsigned>{g});
    }
}

TEST_CASE("canonical form decides labelled isomorphism") {
    std::mt19937_64 rng(3);
    std::vector<ClutchingTree> pool;
    for (int t = 0; t < 40; ++t) pool.push_back(random_tree(rng, 1 + rng() % 6, 2));
    for (const auto& a : pool) CHECK(shuffled(a, rng).canonical_form() == a.canonical_form());
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = i + 1; j < pool.size(); ++j)
            CHECK((pool[i].canonical_form() == pool[j].canonical_form()) == isomorphic(pool[i], pool[j]));
}

TEST_CASE("refines") {
    ClutchingTree p111 = ClutchingTree::path({1, 1, 1});
    CHECK(refines(p111, ClutchingTree::path({2, 1})));
    CHECK(refines(p111, ClutchingTree::path({1, 2})));
    CHECK(refines(p111, ClutchingTree::single(3)));
    CHECK_FALSE(refines(ClutchingTree::path({2, 1}), p111));
    CHECK(refines(ClutchingTree::star(1, {1, 1, 1}), ClutchingTree::path({1, 2, 1})));
    CHECK_FALSE(refines(ClutchingTree::star(1, {1, 1, 1}), ClutchingTree::path({2, 1, 1})));
    CHECK(refines(ClutchingTree::star(1, {1, 1, 1}), ClutchingTree::star(2, {1, 1})));
    CHECK(refines(ClutchingTree::path({1, 2, 1}), ClutchingTree::path({3, 1})));
    CHECK_FALSE(refines(ClutchingTree::path({1, 2, 1}), ClutchingTree::path({2, 2})));
    std::mt19937_64 rng(21);
    for (int t = 0; t < 30; ++t) {
        ClutchingTree tr = random_tree(rng, 1 + rng() % 6, 2);
        CHECK(refines(tr, tr));
        CHECK(refines(tr, ClutchingTree::single(tr.genus())));
        if (tr.size() > 1) {
            ClutchingTree c = coalesce(tr, rng() % tr.edges().size());
            CHECK(refines(tr, shuffled(c, rng)));
            CHECK_FALSE(refines(c, tr));
        }
    }
}

TEST_CASE("p-rank of compact type and stable curves") {
    CHECK(prank_compact(ClutchingTree::path({1, 1}), {1, 0}) == 1);
    for (unsigned g = 4; g <= 7; ++g)
        for (unsigned f = 2; f <= g; ++f) CHECK(prank_compact(ClutchingTree::path({1, g - 2, 1}), {1, f - 2, 1}) == f);
    ClutchingTree s = ClutchingTree::star(2, {1, 1, 1});
    CHECK(prank_compact(s, PRankLabeling(4, 0)) == 0);
    CHECK_THROWS_AS(prank_compact(s, {3, 0, 0, 0}), ValidationError);

    for (unsigned g = 2; g <= 6; ++g)
        for (unsigned f = 1; f <= g; ++f) CHECK(prank_stable(DualGraph({g - 1}, {f - 1}, {{0, 0}})) == f);
    for (unsigned g = 3; g <= 6; ++g)
        for (unsigned i = 1; i + 1 < g; ++i)
            for (unsigned f1 = 0; f1 <= i; ++f1)
                for (unsigned f2 = 0; f2 <= g - 1 - i; ++f2)
                    CHECK(prank_stable(DualGraph({i, g - 1 - i}, {f1, f2}, {{0, 1}, {0, 1}})) == f1 + f2 + 1);
    CHECK_THROWS_AS(DualGraph({1, 1}, {0, 0}, {}), ValidationError);
    CHECK_THROWS_AS(DualGraph({1}, {2}, {}), ValidationError);

    std::mt19937_64 rng(17);
    for (int t = 0; t < 200; ++t) {
        std::size_t n = 1 + rng() % 5;
        std::vector<unsigned> g(n), f(n);
        for (std::size_t v = 0; v < n; ++v) {
            g[v] = 1 + rng() % 3;
            f[v] = rng() % (g[v] + 1);
        }
        std::vector<Edge> e;
        for (std::size_t v = 1; v < n; ++v) e.emplace_back(rng() % v, v);
        ClutchingTree tree(g, e);
        const unsigned extra = rng() % 4;
        for (unsigned k = 0; k < extra; ++k) e.emplace_back(rng() % n, rng() % n);
        DualGraph G(g, f, e);
        CHECK(G.betti() == extra);
        CHECK(prank_stable(G) == prank_compact(tree, f) + extra);
    }
}

TEST_CASE("boundary catalog") {
    auto names = [](unsigned g) {
        std::vector<std::string> out;
        for (const auto& d : boundary_catalog(g)) out.push_back(d.name());
        return out;
    };
    CHECK(names(2) == std::vector<std::string>{"Delta_1", "Xi_0"});
    CHECK(names(3) == std::vector<std::string>{"Delta_1", "Xi_0", "Xi_1"});
    CHECK(names(4) == std::vector<std::string>{"Delta_1", "Delta_2", "Xi_0", "Xi_1"});
    CHECK_THROWS_AS(boundary_catalog(1), ValidationError);

    for (unsigned g = 2; g <= 6; ++g)
        for (const auto& d : boundary_catalog(g)) {
            auto comp = d.component_genera();
            for (unsigned f = 0; f <= g; ++f) {
                CHECK(d.stratum_dim(f) == long(g) - 2 + long(f));
                auto sp = d.splits(f);
                // hand enumeration of admissible component p-ranks
                std::vector<std::pair<unsigned, unsigned>> expect;
                const unsigned g2 = comp.size() > 1 ? comp[1] : 0;
                const long want = d.kind == BoundaryDivisor::Kind::delta ? long(f) : long(f) - 1;
                for (unsigned f1 = 0; f1 <= comp[0]; ++f1)
                    for (unsigned f2 = 0; f2 <= g2; ++f2)
                        if (long(f1 + f2) == want) expect.emplace_back(f1, f2);
                CHECK(sp == expect);
                for (auto [f1, f2] : sp) {
                    DualGraph G = d.dual_graph(f1, f2);
                    CHECK(G.genus() == g);
                    CHECK(prank_stable(G) == f);
                }
            }
        }
}

TEST_CASE("degeneration witness") {
    Field F3 = Field::make(3);
    DegenerationWitness w = degeneration_witness(2, 1, F3);
    CHECK(w.tree.genera() == std::vector<unsigned>{1, 1});
    CHECK(prank_compact(w.tree, w.labeling) == 1);
    for (std::size_t v = 0; v < 2; ++v) CHECK(p_rank(w.curves[v]) == w.labeling[v]);

    DegenerationWitness ss = degeneration_witness(4, 0, F3);
    for (const auto& c : ss.curves) CHECK(c.f() == FqPoly(F3, {0, 1, 0, 1}));

    for (unsigned p : {3u, 5u, 7u, 11u})
        for (unsigned g = 2; g <= 5; ++g)
            for (unsigned f = 0; f <= g; ++f) {
                DegenerationWitness x = degeneration_witness(g, f, Field::make(p));
                CHECK(x.tree.size() == g);
                CHECK(prank_compact(x.tree, x.labeling) == f);
                for (std::size_t v = 0; v < g; ++v) CHECK(p_rank(x.curves[v]) == x.labeling[v]);
            }
    CHECK_THROWS_AS(degeneration_witness(1, 0, F3), ValidationError);
    CHECK_THROWS_AS(degeneration_witness(2, 3, F3), ValidationError);
}
