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

#include "strata/symplectic.hpp"

#include <cmath>
#include <deque>
#include <numeric>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "strata/error.hpp"

namespace strata {

namespace {

std::uint32_t inv_mod(std::uint32_t a, unsigned l) {
    if (a % l == 0) throw ValidationError("inverse of zero mod l");
    std::uint64_t r = 1, b = a % l;
    for (unsigned e = l - 2; e; e >>= 1, b = b * b % l)
        if (e & 1) r = r * b % l;
    return static_cast<std::uint32_t>(r);
}

void check_modulus(unsigned l) {
    if (l < 3 || l > 255 || !is_prime(l)) throw ValidationError("l must be an odd prime below 256");
}

std::string key(const ModlMatrix& m) {
    std::string s(m.entries().size(), '\0');
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = static_cast<char>(m.entries()[i]);
    return s;
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

template <class Visit>
void for_each_coset_element(unsigned g, unsigned l, std::uint32_t m, std::uint64_t cap, Visit visit) {
    if (m % l == 0) throw ValidationError("multiplier must be a unit mod l");
    if (sp_order(g, l) > BigInt(static_cast<unsigned long>(cap)))
        throw BudgetError("Sp_" + std::to_string(2 * g) + "(Z/" + std::to_string(l) + ") exceeds the enumeration cap");
    const ModlMatrix D = coset_representative(g, l, m);
    for (const auto& M : group_elements(standard_generators(g, l), cap)) visit(M * D);
}

}  // namespace

ModlMatrix::ModlMatrix(unsigned l, std::size_t dim) : l_(l), n_(dim), e_(dim * dim, 0) {}

ModlMatrix::ModlMatrix(unsigned l, std::size_t dim, std::vector<std::uint32_t> entries)
    : l_(l), n_(dim), e_(std::move(entries)) {
    if (e_.size() != n_ * n_) throw ValidationError("matrix: wrong number of entries");
    for (auto& x : e_) x %= l_;
}

ModlMatrix ModlMatrix::identity(unsigned l, std::size_t dim) { return scalar(l, dim, 1); }

ModlMatrix ModlMatrix::scalar(unsigned l, std::size_t dim, std::uint32_t c) {
    ModlMatrix m(l, dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = c % l;
    return m;
}

ModlMatrix ModlMatrix::operator*(const ModlMatrix& o) const {
    if (o.n_ != n_ || o.l_ != l_) throw ValidationError("matrix product: shape or modulus mismatch");
    ModlMatrix r(l_, n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            std::uint64_t s = 0;
            for (std::size_t k = 0; k < n_; ++k) s += std::uint64_t{e_[i * n_ + k]} * o.e_[k * n_ + j];
            r.e_[i * n_ + j] = static_cast<std::uint32_t>(s % l_);
        }
    return r;
}

ModlMatrix ModlMatrix::transpose() const {
    ModlMatrix r(l_, n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

std::uint32_t ModlMatrix::det() const {
    std::vector<std::uint32_t> a = e_;
    std::uint64_t d = 1;
    for (std::size_t c = 0; c < n_; ++c) {
        std::size_t piv = c;
        while (piv < n_ && a[piv * n_ + c] == 0) ++piv;
        if (piv == n_) return 0;
        if (piv != c) {
            for (std::size_t j = 0; j < n_; ++j) std::swap(a[piv * n_ + j], a[c * n_ + j]);
            d = (l_ - d) % l_;
        }
        d = d * a[c * n_ + c] % l_;
        const std::uint64_t inv = inv_mod(a[c * n_ + c], l_);
        for (std::size_t r = c + 1; r < n_; ++r) {
            const std::uint64_t k = a[r * n_ + c] * inv % l_;
            if (!k) continue;
            for (std::size_t j = c; j < n_; ++j)
                a[r * n_ + j] = static_cast<std::uint32_t>((a[r * n_ + j] + (l_ - k) * a[c * n_ + j]) % l_);
        }
    }
    return static_cast<std::uint32_t>(d);
}

std::vector<std::uint32_t> ModlMatrix::charpoly() const {
    const std::size_t n = n_;
    const std::uint64_t l = l_;
    std::vector<std::uint64_t> h(e_.begin(), e_.end());
    auto H = [&](std::size_t i, std::size_t j) -> std::uint64_t& { return h[i * n + j]; };
    // similarity reduction to upper Hessenberg form
    for (std::size_t c = 0; c + 2 < n; ++c) {
        std::size_t piv = c + 1;
        while (piv < n && H(piv, c) == 0) ++piv;
        if (piv == n) continue;
        if (piv != c + 1) {
            for (std::size_t j = 0; j < n; ++j) std::swap(H(piv, j), H(c + 1, j));
            for (std::size_t i = 0; i < n; ++i) std::swap(H(i, piv), H(i, c + 1));
        }
        const std::uint64_t inv = inv_mod(static_cast<std::uint32_t>(H(c + 1, c)), l_);
        for (std::size_t r = c + 2; r < n; ++r) {
            const std::uint64_t k = H(r, c) * inv % l;
            if (!k) continue;
            for (std::size_t j = 0; j < n; ++j) H(r, j) = (H(r, j) + (l - k) * H(c + 1, j)) % l;
            for (std::size_t i = 0; i < n; ++i) H(i, c + 1) = (H(i, c + 1) + k * H(i, r)) % l;
        }
    }
    // p_k = (T - h_kk) p_{k-1} - sum_{i<k} h_ik (prod_{j=i+1..k} h_{j,j-1}) p_{i-1}
    std::vector<std::vector<std::uint64_t>> p(n + 1);
    p[0] = {1};
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::uint64_t> cur(k + 1, 0);
        for (std::size_t d = 0; d < p[k - 1].size(); ++d) {
            cur[d + 1] = (cur[d + 1] + p[k - 1][d]) % l;
            cur[d] = (cur[d] + (l - H(k - 1, k - 1)) * p[k - 1][d]) % l;
        }
        std::uint64_t prod = 1;
        for (std::size_t i = k - 1; i-- > 0;) {
            prod = prod * H(i + 1, i) % l;
            const std::uint64_t coef = H(i, k - 1) * prod % l;
            if (!coef) continue;
            for (std::size_t d = 0; d < p[i].size(); ++d) cur[d] = (cur[d] + (l - coef) * p[i][d]) % l;
        }
        p[k] = std::move(cur);
    }
    return {p[n].begin(), p[n].end()};
}

ModlMatrix symplectic_form(unsigned g, unsigned l) {
    check_modulus(l);
    ModlMatrix J(l, 2 * g);
    for (std::size_t i = 0; i < 2 * g; ++i) J(i, 2 * g - 1 - i) = i < g ? 1 : l - 1;
    return J;
}

std::uint32_t multiplier(const ModlMatrix& M) {
    if (M.dim() % 2 || M.dim() == 0) throw ValidationError("multiplier: dimension must be even");
    const unsigned g = static_cast<unsigned>(M.dim() / 2);
    const ModlMatrix J = symplectic_form(g, M.modulus());
    const ModlMatrix S = M.transpose() * J * M;
    const std::uint32_t m = S(0, 2 * g - 1);
    if (m == 0 || !(S == ModlMatrix::scalar(M.modulus(), M.dim(), m) * J))
        throw ValidationError("matrix is not in GSp");
    return m;
}

BigInt sp_order(unsigned g, unsigned l) {
    if (g < 1) throw ValidationError("sp_order: g >= 1");
    check_modulus(l);
    BigInt L = l, r;
    mpz_pow_ui(r.get_mpz_t(), L.get_mpz_t(), std::uint64_t{g} * g);
    for (unsigned i = 1; i <= g; ++i) {
        BigInt t;
        mpz_pow_ui(t.get_mpz_t(), L.get_mpz_t(), 2 * i);
        r *= t - 1;
    }
    return r;
}

BigInt weyl_order(unsigned g) {
    if (g < 1) throw ValidationError("weyl_order: g >= 1");
    BigInt r = 1;
    for (unsigned i = 1; i <= g; ++i) r *= 2 * i;
    return r;
}

ModlMatrix transvection(unsigned g, unsigned l, const std::vector<std::uint32_t>& v) {
    if (v.size() != 2 * g) throw ValidationError("transvection: vector length must be 2g");
    const ModlMatrix J = symplectic_form(g, l);
    ModlMatrix T = ModlMatrix::identity(l, 2 * g);
    // (v^T J)_j
    std::vector<std::uint64_t> w(2 * g, 0);
    for (std::size_t j = 0; j < 2 * g; ++j)
        for (std::size_t k = 0; k < 2 * g; ++k) w[j] = (w[j] + std::uint64_t{v[k] % l} * J(k, j)) % l;
    for (std::size_t i = 0; i < 2 * g; ++i)
        for (std::size_t j = 0; j < 2 * g; ++j)
            T(i, j) = static_cast<std::uint32_t>((T(i, j) + l - std::uint64_t{v[i] % l} * w[j] % l) % l);
    return T;
}

std::vector<ModlMatrix> standard_generators(unsigned g, unsigned l) {
    std::vector<ModlMatrix> out;
    for (std::size_t i = 0; i < 2 * g; ++i) {
        std::vector<std::uint32_t> v(2 * g, 0);
        v[i] = 1;
        out.push_back(transvection(g, l, v));
    }
    for (std::size_t i = 0; i < 2 * g; ++i)
        for (std::size_t j = i + 1; j < 2 * g; ++j) {
            std::vector<std::uint32_t> v(2 * g, 0);
            v[i] = v[j] = 1;
            out.push_back(transvection(g, l, v));
        }
    return out;
}

ModlMatrix coset_representative(unsigned g, unsigned l, std::uint32_t m) {
    check_modulus(l);
    if (m % l == 0) throw ValidationError("multiplier must be a unit mod l");
    ModlMatrix D = ModlMatrix::identity(l, 2 * g);
    for (std::size_t i = 0; i < g; ++i) D(i, i) = m % l;
    return D;
}

std::vector<ModlMatrix> group_elements(const std::vector<ModlMatrix>& generators, std::uint64_t cap) {
    if (generators.empty()) throw ValidationError("group_bfs: no generators");
    const unsigned l = generators[0].modulus();
    const std::size_t n = generators[0].dim();
    for (const auto& G : generators) {
        if (G.modulus() != l || G.dim() != n) throw ValidationError("group_bfs: generators of mixed shape");
        if (multiplier(G) != 1) throw ValidationError("group_bfs: generator is not symplectic");
    }
    std::vector<ModlMatrix> elems{ModlMatrix::identity(l, n)};
    std::unordered_set<std::string> seen{key(elems[0])};
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (const auto& G : generators) {
            ModlMatrix x = elems[i] * G;
            if (seen.insert(key(x)).second) {
                if (elems.size() >= cap) throw BudgetError("group_bfs: group exceeds the enumeration cap");
                elems.push_back(std::move(x));
            }
        }
    return elems;
}

std::optional<std::uint64_t> group_bfs(const std::vector<ModlMatrix>& generators, std::uint64_t cap) {
    try {
        return group_elements(generators, cap).size();
    } catch (const BudgetError&) {
        return std::nullopt;
    }
}

ModlMatrix random_sp(unsigned g, unsigned l, std::mt19937_64& rng, unsigned walk) {
    check_modulus(l);
    const std::size_t n = 2 * std::size_t{g};
    ModlMatrix M = ModlMatrix::identity(l, n);
    std::uniform_int_distribution<std::uint32_t> digit(0, l - 1), unit(1, l - 1);
    std::vector<std::uint32_t> v(n), w(n);
    std::vector<std::uint64_t> mv(n);
    for (unsigned s = 0; s < walk; ++s) {
        bool zero = true;
        while (zero) {
            for (auto& x : v) {
                x = digit(rng);
                if (x) zero = false;
            }
        }
        const std::uint64_t c = unit(rng);
        // M <- M (I - c v v^T J); (v^T J)_j = +-v_{2g-1-j}
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t k = n - 1 - j;
            w[j] = k < g ? v[k] : (l - v[k]) % l;
        }
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t t = 0;
            for (std::size_t k = 0; k < n; ++k) t += std::uint64_t{M(i, k)} * v[k];
            mv[i] = t % l * c % l;
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                M(i, j) = static_cast<std::uint32_t>((M(i, j) + l - mv[i] * w[j] % l) % l);
    }
    return M;
}

ModlMatrix random_sp(unsigned g, unsigned l, std::uint64_t seed, unsigned walk) {
    std::mt19937_64 rng(seed);
    return random_sp(g, l, rng, walk);
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    return splitmix64(splitmix64(seed) ^ index);
}

std::uint64_t ExactProportion::num() const {
    std::uint64_t d = std::gcd(count, total);
    return d ? count / d : 0;
}

std::uint64_t ExactProportion::den() const {
    std::uint64_t d = std::gcd(count, total);
    return d ? total / d : 1;
}

ExactProportion fixed_vector_proportion_exact(unsigned g, unsigned l, std::uint32_t m, std::uint64_t cap) {
    ExactProportion r;
    for_each_coset_element(g, l, m, cap, [&](const ModlMatrix& M) {
        ModlMatrix d = M;
        for (std::size_t i = 0; i < 2 * g; ++i) d(i, i) = (d(i, i) + l - 1) % l;
        ++r.total;
        if (d.det() == 0) ++r.count;
    });
    return r;
}

Estimate fixed_vector_proportion_mc(unsigned g, unsigned l, std::uint32_t m, std::uint64_t samples,
                                    std::uint64_t seed, unsigned workers, unsigned walk) {
    if (samples == 0) throw ValidationError("Monte Carlo needs at least one sample");
    const ModlMatrix D = coset_representative(g, l, m);
    workers = std::max(1u, workers);
    std::vector<std::uint64_t> hits(workers, 0);
    auto run = [&](unsigned w) {
        for (std::uint64_t i = w; i < samples; i += workers) {
            ModlMatrix M = random_sp(g, l, substream_seed(seed, i), walk) * D;
            for (std::size_t k = 0; k < 2 * g; ++k) M(k, k) = (M(k, k) + l - 1) % l;
            if (M.det() == 0) ++hits[w];
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run, w);
    run(0);
    for (auto& t : pool) t.join();
    const double n = static_cast<double>(samples);
    const double phat = static_cast<double>(std::accumulate(hits.begin(), hits.end(), std::uint64_t{0})) / n;
    const double z = 1.96, z2 = z * z;
    const double centre = (phat + z2 / (2 * n)) / (1 + z2 / n);
    const double half = z * std::sqrt(phat * (1 - phat) / n + z2 / (4 * n * n)) / (1 + z2 / n);
    return {phat, std::max(0.0, centre - half), std::min(1.0, centre + half), samples};
}

std::map<ModlPoly, std::uint64_t> charpoly_distribution_exact(unsigned g, unsigned l, std::uint32_t m,
                                                              std::uint64_t cap) {
    std::map<ModlPoly, std::uint64_t> out;
    for_each_coset_element(g, l, m, cap, [&](const ModlMatrix& M) { ++out[M.charpoly()]; });
    return out;
}

std::map<ModlPoly, std::uint64_t> charpoly_distribution_mc(unsigned g, unsigned l, std::uint32_t m,
                                                           std::uint64_t samples, std::uint64_t seed, unsigned walk) {
    const ModlMatrix D = coset_representative(g, l, m);
    std::map<ModlPoly, std::uint64_t> out;
    for (std::uint64_t i = 0; i < samples; ++i) ++out[(random_sp(g, l, substream_seed(seed, i), walk) * D).charpoly()];
    return out;
}

ModlPoly charpoly_mod(const LPolynomial& L, unsigned l) {
    check_modulus(l);
    if (L.q % l == 0) throw ValidationError("charpoly_mod: l must differ from the characteristic");
    const std::size_t d = L.a.size() - 1;
    ModlPoly out(d + 1);
    const BigInt Lb = l;
    for (std::size_t k = 0; k <= d; ++k) {
        BigInt r;
        mpz_fdiv_r(r.get_mpz_t(), L.a[d - k].get_mpz_t(), Lb.get_mpz_t());
        out[k] = static_cast<std::uint32_t>(r.get_ui());
    }
    return out;
}

std::uint32_t eval_mod(const ModlPoly& f, std::uint32_t x, unsigned l) {
    std::uint64_t acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = (acc * x + f[i]) % l;
    return static_cast<std::uint32_t>(acc);
}

std::string baseline_csv(const std::vector<BaselineRow>& rows) {
    std::ostringstream os;
    os.precision(10);
    os << "g,l,m,proportion_num,proportion_den,estimate,ci_low,ci_high,N\n";
    for (const auto& r : rows) {
        os << r.g << ',' << r.l << ',' << r.m << ',';
        if (r.exact)
            os << r.exact->num() << ',' << r.exact->den() << ',';
        else
            os << ",,";
        if (r.estimate)
            os << r.estimate->estimate << ',' << r.estimate->ci_low << ',' << r.estimate->ci_high << ','
               << r.estimate->samples;
        else
            os << ",,," << (r.exact ? std::to_string(r.exact->total) : "");
        os << '\n';
    }
    return os.str();
}

}  // namespace strata
