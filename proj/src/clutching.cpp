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

#include "strata/clutching.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <queue>
#include <set>

#include "strata/error.hpp"
#include "strata/prank.hpp"

namespace strata {

namespace {

struct DisjointSets {
    std::vector<std::size_t> parent;
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

std::vector<std::vector<std::size_t>> adjacency(std::size_t n, const std::vector<Edge>& edges) {
    std::vector<std::vector<std::size_t>> adj(n);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

std::string rooted_form(const std::vector<std::vector<std::size_t>>& adj, const std::vector<unsigned>& genera,
                        std::size_t v, std::size_t parent) {
    std::vector<std::string> kids;
    for (std::size_t w : adj[v])
        if (w != parent) kids.push_back(rooted_form(adj, genera, w, v));
    std::sort(kids.begin(), kids.end());
    std::string s = "(" + std::to_string(genera[v]);
    for (const auto& k : kids) s += k;
    return s + ")";
}

}  // namespace

ClutchingTree::ClutchingTree(std::vector<unsigned> genera, std::vector<Edge> edges)
    : genera_(std::move(genera)), edges_(std::move(edges)) {
    const std::size_t n = genera_.size();
    if (n == 0) throw ValidationError("tree: no vertices");
    for (unsigned g : genera_)
        if (g < 1) throw ValidationError("tree: vertex genus must be >= 1");
    if (edges_.size() != n - 1) throw ValidationError("tree: a tree on n vertices has n-1 edges");
    DisjointSets ds(n);
    for (auto& [a, b] : edges_) {
        if (a >= n || b >= n) throw ValidationError("tree: edge endpoint out of range");
        if (!ds.unite(a, b)) throw ValidationError("tree: edges contain a cycle");
        if (a > b) std::swap(a, b);
    }
    for (std::size_t v = 0; v < n; ++v)
        if (degree(v) > 2 * std::size_t{genera_[v]} + 2) throw ValidationError("tree: deg(v) > 2 g_v + 2");
}

ClutchingTree ClutchingTree::single(unsigned g) { return ClutchingTree({g}, {}); }

ClutchingTree ClutchingTree::path(std::vector<unsigned> genera) {
    std::vector<Edge> e;
    for (std::size_t i = 1; i < genera.size(); ++i) e.emplace_back(i - 1, i);
    return ClutchingTree(std::move(genera), std::move(e));
}

ClutchingTree ClutchingTree::star(unsigned center, std::vector<unsigned> leaves) {
    std::vector<unsigned> g{center};
    std::vector<Edge> e;
    for (unsigned l : leaves) {
        e.emplace_back(0, g.size());
        g.push_back(l);
    }
    return ClutchingTree(std::move(g), std::move(e));
}

unsigned ClutchingTree::genus() const noexcept { return std::accumulate(genera_.begin(), genera_.end(), 0u); }

std::size_t ClutchingTree::degree(std::size_t v) const {
    if (v >= size()) throw ValidationError("tree: vertex out of range");
    std::size_t d = 0;
    for (auto [a, b] : edges_) d += (a == v) + (b == v);
    return d;
}

std::string ClutchingTree::canonical_form() const {
    const std::size_t n = size();
    auto adj = adjacency(n, edges_);
    // centroid(s): vertices minimising the largest remaining component
    std::vector<std::size_t> sub(n, 1), order, parent(n, n);
    order.reserve(n);
    order.push_back(0);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t w : adj[order[i]])
            if (w != parent[order[i]]) {
                parent[w] = order[i];
                order.push_back(w);
            }
    for (std::size_t i = n; i-- > 1;) sub[parent[order[i]]] += sub[order[i]];
    std::size_t best = n;
    std::vector<std::size_t> centroids;
    for (std::size_t v = 0; v < n; ++v) {
        std::size_t worst = n - sub[v];
        for (std::size_t w : adj[v])
            if (w != parent[v]) worst = std::max(worst, sub[w]);
        if (worst < best) {
            best = worst;
            centroids = {v};
        } else if (worst == best) {
            centroids.push_back(v);
        }
    }
    std::string out;
    for (std::size_t c : centroids) {
        std::string s = rooted_form(adj, genera_, c, n);
        if (out.empty() || s < out) out = s;
    }
    return out;
}

std::vector<PRankLabeling> labelings(const ClutchingTree& t, unsigned f) {
    if (f > t.genus()) throw ValidationError("labelings: f exceeds g(Lambda)");
    const auto& g = t.genera();
    const std::size_t n = g.size();
    std::vector<unsigned> rest(n + 1, 0);
    for (std::size_t i = n; i-- > 0;) rest[i] = rest[i + 1] + g[i];
    std::vector<PRankLabeling> out;
    PRankLabeling cur(n, 0);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
        if (i == n) {
            if (left == 0) out.push_back(cur);
            return;
        }
        for (unsigned v = 0; v <= g[i] && v <= left; ++v) {
            if (left - v > rest[i + 1]) continue;
            cur[i] = v;
            rec(i + 1, left - v);
        }
    };
    rec(0, f);
    return out;
}

long stratum_dim(const ClutchingTree& t, unsigned f) {
    if (f > t.genus()) throw ValidationError("stratum_dim: f exceeds g(Lambda)");
    return static_cast<long>(t.genus()) + static_cast<long>(f) - static_cast<long>(t.size());
}

ClutchingTree coalesce(const ClutchingTree& t, std::size_t edge) {
    if (edge >= t.edges().size()) throw ValidationError("coalesce: no such edge");
    auto [keep, drop] = t.edges()[edge];
    if (keep > drop) std::swap(keep, drop);
    std::vector<unsigned> g = t.genera();
    g[keep] += g[drop];
    g.erase(g.begin() + static_cast<std::ptrdiff_t>(drop));
    auto relabel = [&](std::size_t v) {
        if (v == drop) return keep;
        return v > drop ? v - 1 : v;
    };
    std::vector<Edge> e;
    for (std::size_t i = 0; i < t.edges().size(); ++i)
        if (i != edge) e.emplace_back(relabel(t.edges()[i].first), relabel(t.edges()[i].second));
    try {
        return ClutchingTree(std::move(g), std::move(e));
    } catch (const ValidationError& err) {
        throw ConsistencyError(std::string("coalesce produced an invalid tree: ") + err.what());
    }
}

bool refines(const ClutchingTree& a, const ClutchingTree& b) {
    if (a.genus() != b.genus() || a.size() < b.size()) return false;
    const std::string target = b.canonical_form();
    std::set<std::string> seen{a.canonical_form()};
    std::queue<ClutchingTree> todo;
    todo.push(a);
    while (!todo.empty()) {
        ClutchingTree t = std::move(todo.front());
        todo.pop();
        if (t.size() == b.size()) {
            if (t.canonical_form() == target) return true;
            continue;
        }
        for (std::size_t e = 0; e < t.edges().size(); ++e) {
            ClutchingTree c = coalesce(t, e);
            if (seen.insert(c.canonical_form()).second) todo.push(std::move(c));
        }
    }
    return false;
}

unsigned prank_compact(const ClutchingTree& t, const PRankLabeling& labeling) {
    if (labeling.size() != t.size()) throw ValidationError("labeling size does not match tree");
    unsigned s = 0;
    for (std::size_t v = 0; v < t.size(); ++v) {
        if (labeling[v] > t.genera()[v]) throw ValidationError("labeling: f_v > g_v");
        s += labeling[v];
    }
    return s;
}

DualGraph::DualGraph(std::vector<unsigned> genera, std::vector<unsigned> pranks, std::vector<Edge> edges)
    : genera_(std::move(genera)), pranks_(std::move(pranks)), edges_(std::move(edges)) {
    const std::size_t n = genera_.size();
    if (n == 0) throw ValidationError("dual graph: no vertices");
    if (pranks_.size() != n) throw ValidationError("dual graph: one p-rank per vertex");
    for (std::size_t v = 0; v < n; ++v)
        if (pranks_[v] > genera_[v]) throw ValidationError("dual graph: f_v > g_v");
    DisjointSets ds(n);
    std::size_t comps = n;
    for (auto [a, b] : edges_) {
        if (a >= n || b >= n) throw ValidationError("dual graph: edge endpoint out of range");
        if (ds.unite(a, b)) --comps;
    }
    if (comps != 1) throw ValidationError("dual graph: not connected");
}

unsigned DualGraph::genus() const noexcept {
    return std::accumulate(genera_.begin(), genera_.end(), 0u) + static_cast<unsigned>(betti());
}

unsigned prank_stable(const DualGraph& g) {
    return std::accumulate(g.pranks().begin(), g.pranks().end(), 0u) + static_cast<unsigned>(g.betti());
}

std::string BoundaryDivisor::name() const {
    return (kind == Kind::delta ? "Delta_" : "Xi_") + std::to_string(index);
}

std::vector<unsigned> BoundaryDivisor::component_genera() const {
    if (kind == Kind::delta) return {index, g - index};
    if (index == 0) return {g - 1};
    return {index, g - 1 - index};
}

std::vector<std::pair<unsigned, unsigned>> BoundaryDivisor::splits(unsigned f) const {
    std::vector<std::pair<unsigned, unsigned>> out;
    if (f > g) return out;
    auto comp = component_genera();
    if (kind == Kind::xi) {
        if (f == 0) return out;
        --f;
    }
    if (comp.size() == 1) {
        if (f <= comp[0]) out.emplace_back(f, 0);
        return out;
    }
    for (unsigned f1 = 0; f1 <= comp[0] && f1 <= f; ++f1)
        if (f - f1 <= comp[1]) out.emplace_back(f1, f - f1);
    return out;
}

DualGraph BoundaryDivisor::dual_graph(unsigned f1, unsigned f2) const {
    auto comp = component_genera();
    if (comp.size() == 1) return DualGraph(comp, {f1}, {{0, 0}});
    std::vector<Edge> e{{0, 1}};
    if (kind == Kind::xi) e.emplace_back(0, 1);
    return DualGraph(comp, {f1, f2}, e);
}

long BoundaryDivisor::stratum_dim(unsigned f) const {
    if (f > g) throw ValidationError("boundary stratum: f exceeds g");
    return static_cast<long>(g) - 2 + static_cast<long>(f);
}

std::vector<BoundaryDivisor> boundary_catalog(unsigned g) {
    if (g < 2) throw ValidationError("boundary catalog needs g >= 2");
    std::vector<BoundaryDivisor> out;
    for (unsigned i = 1; i <= g / 2; ++i) out.push_back({BoundaryDivisor::Kind::delta, i, g});
    for (unsigned i = 0; i <= (g - 1) / 2; ++i) out.push_back({BoundaryDivisor::Kind::xi, i, g});
    return out;
}

DegenerationWitness degeneration_witness(unsigned g, unsigned f, const Field& field) {
    if (g < 2) throw ValidationError("degeneration witness needs g >= 2");
    if (f > g) throw ValidationError("degeneration witness: f exceeds g");
    std::optional<HyperellipticCurve> ordinary, supersingular;
    MonicStream s(field, 3, true);
    FqPoly cubic(field);
    while ((!ordinary || !supersingular) && s.next(cubic)) {
        HyperellipticCurve c(field, cubic);
        if (p_rank(c) == 1) {
            if (!ordinary) ordinary = c;
        } else if (!supersingular) {
            supersingular = c;
        }
    }
    if ((f > 0 && !ordinary) || (f < g && !supersingular))
        throw ValidationError("degeneration witness: no suitable elliptic curve over " + field.describe());
    DegenerationWitness w{ClutchingTree::path(std::vector<unsigned>(g, 1)), PRankLabeling(g, 0), {}};
    for (unsigned v = 0; v < g; ++v) {
        w.labeling[v] = v < f ? 1 : 0;
        w.curves.push_back(v < f ? *ordinary : *supersingular);
    }
    return w;
}

}  // namespace strata
