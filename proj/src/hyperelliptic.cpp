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

#include "strata/hyperelliptic.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "strata/error.hpp"

namespace strata {

HyperellipticCurve::HyperellipticCurve(Field field, FqPoly f) : field_(std::move(field)), f_(std::move(f)) {
    if (!(f_.field() == field_)) throw ValidationError("curve: polynomial is over a different field");
    if (f_.is_zero() || *f_.degree() <= 2) throw ValidationError("curve: deg f <= 2 gives genus 0");
    if (!f_.is_monic()) throw ValidationError("curve: f must be monic");
    if (!squarefree(f_)) throw ValidationError("curve: f is not squarefree (singular model)");
    genus_ = static_cast<unsigned>((*f_.degree() + 1) / 2 - 1);
}

BigInt LPolynomial::at_one() const {
    BigInt s = 0;
    for (const auto& x : a) s += x;
    return s;
}

bool LPolynomial::satisfies_functional_equation() const {
    if (a.size() != 2 * std::size_t{g} + 1 || a[0] != 1) return false;
    BigInt qpow = 1;
    const BigInt Q = static_cast<unsigned long>(q);
    for (unsigned i = g + 1; i-- > 0;) {
        // i runs g..0, qpow = q^{g-i}
        if (a[2 * g - i] != qpow * a[i]) return false;
        qpow *= Q;
    }
    return true;
}

struct PointCounter::Extension {
    explicit Extension(Field f) : field(std::move(f)) {}
    Field field;
    unsigned degree = 1;
    std::vector<elem_t> embed;  // image of each base-field element
    // nonzero Frobenius-orbit representatives (as logs) with orbit sizes
    std::vector<std::uint32_t> rep_log;
    std::vector<std::uint32_t> rep_weight;
};

PointCounter::PointCounter(Field base, unsigned max_degree, std::uint64_t budget) : base_(std::move(base)) {
    static std::mutex mu;
    static std::map<std::tuple<unsigned, unsigned, unsigned>, std::shared_ptr<const Extension>> cache;
    std::uint64_t qk = 1;
    for (unsigned k = 1; k <= max_degree; ++k) {
        qk *= base_.q();
        if (qk > budget || qk > kTableCap)
            throw BudgetError("point count over F_{" + std::to_string(base_.q()) + "^" + std::to_string(k) +
                              "} exceeds the enumeration budget");
        std::lock_guard<std::mutex> lock(mu);
        auto& slot = cache[{base_.p(), base_.n(), k}];
        if (!slot) {
            auto e = std::make_shared<Extension>(Field::make(base_.p(), base_.n() * k));
            e->degree = k;
            FieldEmbedding emb(base_, e->field);
            e->embed.resize(base_.q());
            for (elem_t a = 0; a < base_.q(); ++a) e->embed[a] = emb(a);
            const ZechView z = e->field.zech();
            const std::uint64_t order = z.order;
            std::vector<bool> seen(order, false);
            for (std::uint64_t l = 0; l < order; ++l) {
                if (seen[l]) continue;
                std::uint32_t w = 0;
                std::uint64_t cur = l;
                do {
                    seen[cur] = true;
                    ++w;
                    cur = cur * base_.q() % order;
                } while (cur != l);
                e->rep_log.push_back(static_cast<std::uint32_t>(l));
                e->rep_weight.push_back(w);
            }
            slot = std::move(e);
        }
        ext_.push_back(slot);
    }
}

std::uint64_t PointCounter::count(const FqPoly& f, unsigned k) const {
    if (k < 1 || k > ext_.size()) throw ValidationError("point count: extension degree out of range");
    const Extension& e = *ext_[k - 1];
    const ZechView z = e.field.zech();
    const auto& c = f.coeffs();
    const std::size_t deg = c.size() - 1;
    std::uint32_t cl[64];
    if (c.size() > 64) throw ValidationError("point count: degree too large");
    for (std::size_t i = 0; i < c.size(); ++i) {
        elem_t img = e.embed[c[i]];
        cl[i] = img == 0 ? z.zero : z.to_log(img);
    }
    auto chi = [&](std::uint32_t l) -> int { return l == z.zero ? 0 : (l % 2 == 0 ? 1 : -1); };
    std::int64_t total = 1 + chi(cl[0]);  // x = 0
    for (std::size_t r = 0; r < e.rep_log.size(); ++r) {
        const std::uint32_t lx = e.rep_log[r];
        std::uint32_t acc = cl[deg];
        for (std::size_t i = deg; i-- > 0;) acc = z.add(z.mul(acc, lx), cl[i]);
        total += static_cast<std::int64_t>(e.rep_weight[r]) * (1 + chi(acc));
    }
    if (deg % 2 == 1) {
        total += 1;
    } else {
        total += 1 + chi(cl[deg]);
    }
    return static_cast<std::uint64_t>(total);
}

std::vector<std::uint64_t> PointCounter::counts(const FqPoly& f) const {
    std::vector<std::uint64_t> out;
    out.reserve(ext_.size());
    for (unsigned k = 1; k <= ext_.size(); ++k) out.push_back(count(f, k));
    return out;
}

std::uint64_t point_count(const HyperellipticCurve& c, unsigned k, std::uint64_t budget) {
    if (k < 1) throw ValidationError("point count: k must be >= 1");
    PointCounter pc(c.field(), k, budget);
    return pc.count(c.f(), k);
}

LPolynomial l_polynomial_from_counts(std::uint64_t q, unsigned g, const std::vector<std::uint64_t>& counts) {
    if (counts.size() < g) throw ValidationError("l_polynomial: need N_1..N_g");
    const BigInt Q = static_cast<unsigned long>(q);
    // power sums of the Frobenius eigenvalues: P_k = q^k + 1 - N_k
    std::vector<BigInt> P(g + 1, 0);
    BigInt qk = 1;
    for (unsigned k = 1; k <= g; ++k) {
        qk *= Q;
        BigInt N = static_cast<unsigned long>(counts[k - 1]);
        P[k] = qk + 1 - N;
        // Weil: |N_k - q^k - 1| <= 2g sqrt(q^k)
        BigInt lhs = P[k] * P[k];
        BigInt rhs = qk * 4 * g * g;
        if (lhs > rhs) throw ConsistencyError("point count violates the Weil bound");
    }
    LPolynomial L;
    L.q = q;
    L.g = g;
    L.a.assign(2 * std::size_t{g} + 1, 0);
    L.a[0] = 1;
    // k a_k = -sum_{i=1..k} P_i a_{k-i}
    for (unsigned k = 1; k <= g; ++k) {
        BigInt s = 0;
        for (unsigned i = 1; i <= k; ++i) s += P[i] * L.a[k - i];
        BigInt kk = k;
        if (!mpz_divisible_p(s.get_mpz_t(), kk.get_mpz_t()))
            throw ConsistencyError("Newton identities: inexact division");
        L.a[k] = -s / kk;
    }
    BigInt qpow = Q;
    for (unsigned i = g; i-- > 0;) {
        // a_{2g-i} = q^{g-i} a_i
        L.a[2 * g - i] = qpow * L.a[i];
        qpow *= Q;
    }
    // Z(T) = exp(sum N_k T^k / k) to order g, then Z (1-T)(1-qT) must agree with L
    std::vector<BigInt> z(g + 1, 0);
    z[0] = 1;
    for (unsigned n = 1; n <= g; ++n) {
        BigInt s = 0;
        for (unsigned k = 1; k <= n; ++k) s += BigInt(static_cast<unsigned long>(counts[k - 1])) * z[n - k];
        BigInt nn = n;
        if (!mpz_divisible_p(s.get_mpz_t(), nn.get_mpz_t())) throw ConsistencyError("zeta series: inexact division");
        z[n] = s / nn;
    }
    for (unsigned n = 1; n <= g; ++n) {
        BigInt c = z[n] - (Q + 1) * z[n - 1];
        if (n >= 2) c += Q * z[n - 2];
        if (c != L.a[n]) throw ConsistencyError("zeta series does not match L(T)");
    }
    return L;
}

LPolynomial l_polynomial(const HyperellipticCurve& c, std::uint64_t budget) {
    PointCounter pc(c.field(), c.genus(), budget);
    return l_polynomial_from_counts(c.field().q(), c.genus(), pc.counts(c.f()));
}

BigInt picard_order(const LPolynomial& L) { return L.at_one(); }

BigInt picard_order(const HyperellipticCurve& c, std::uint64_t budget) { return l_polynomial(c, budget).at_one(); }

}  // namespace strata
