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

#include "strata/galois.hpp"

#include "strata/error.hpp"
#include "strata/symplectic.hpp"

namespace strata {

namespace {

IntPoly reversed_charpoly(const LPolynomial& L) { return L.frobenius_charpoly(); }

/* Trivial square class; 0 counts as trivial since the root is then rational. */
bool trivial_class(const BigInt& d) { return d == 0 || is_perfect_square(d); }

/* Power sums s_1..s_n of the roots of the monic polynomial P. */
std::vector<BigInt> power_sums(const IntPoly& P, std::size_t n) {
    const std::size_t deg = *P.degree();
    // P = x^deg + c_1 x^{deg-1} + ... + c_deg
    std::vector<BigInt> c(deg + 1);
    for (std::size_t i = 0; i <= deg; ++i) c[i] = P.coeff(deg - i);
    std::vector<BigInt> s(n + 1, 0);
    for (std::size_t k = 1; k <= n; ++k) {
        BigInt acc = 0;
        for (std::size_t i = 1; i < k && i <= deg; ++i) acc += c[i] * s[k - i];
        if (k <= deg) acc += BigInt(static_cast<unsigned long>(k)) * c[k];
        s[k] = -acc;
    }
    return s;
}

}  // namespace

IntPoly real_weil_polynomial(const LPolynomial& L) {
    const unsigned g = L.g;
    const BigInt q = static_cast<unsigned long>(L.q);
    IntPoly R = reversed_charpoly(L);
    const IntPoly base{0, 0, 1};
    const IntPoly x2q = base + IntPoly(std::vector<BigInt>{q});
    std::vector<BigInt> b(g + 1, 0);
    for (unsigned j = g + 1; j-- > 0;) {
        b[j] = R.coeff(g + j);
        IntPoly term = IntPoly::monomial(b[j], g - j);
        for (unsigned k = 0; k < j; ++k) term = term * x2q;
        R = R - term;
    }
    if (!R.is_zero()) throw ConsistencyError("L-polynomial does not satisfy the functional equation");
    return IntPoly(b);
}

bool is_square_in_quadratic(const BigInt& u, const BigInt& v, const BigInt& D) {
    if (v == 0) return trivial_class(u) || is_perfect_square(u * D);
    const BigInt N = u * u - D * v * v;
    if (!is_perfect_square(N)) return false;
    BigInt n;
    mpz_sqrt(n.get_mpz_t(), N.get_mpz_t());
    for (const BigInt& t : {BigInt(2 * (u + n)), BigInt(2 * (u - n))})
        if (t != 0 && is_perfect_square(t)) return true;
    return false;
}

bool is_square_in_cubic(const IntPoly& h, const std::vector<BigInt>& alpha) {
    if (h.degree() != 3 || h.leading() != 1) throw ValidationError("cubic field: h must be a monic cubic");
    std::vector<BigInt> a(3, 0);
    for (std::size_t i = 0; i < alpha.size() && i < 3; ++i) a[i] = alpha[i];
    if (a[1] == 0 && a[2] == 0) return is_perfect_square(a[0]);
    // multiplication-by-alpha matrix in the basis 1, t, t^2
    std::vector<std::vector<BigInt>> M(3, std::vector<BigInt>(3, 0));
    IntPoly cur(a);
    for (std::size_t k = 0; k < 3; ++k) {
        for (std::size_t i = 0; i < 3; ++i) M[i][k] = cur.coeff(i);
        IntPoly next = cur * IntPoly{0, 1};
        if (next.degree() && *next.degree() == 3) next = next - h.scaled(next.coeff(3));
        cur = next;
    }
    IntPoly c = charpoly(M);
    std::vector<BigInt> cx2(7, 0);
    for (std::size_t i = 0; i <= 3; ++i) cx2[2 * i] = c.coeff(i);
    for (const auto& [fac, mult] : factor(IntPoly(cx2)))
        if (fac.degree() == 3) return true;
    return false;
}

bool SplittingDegree::known_non_maximal() const {
    return reducible || (status == Status::exact && degree < maximum);
}

std::string to_string(SplittingDegree::Status s) {
    switch (s) {
        case SplittingDegree::Status::exact:
            return "exact";
        case SplittingDegree::Status::certified_maximal:
            return "certified_maximal";
        default:
            return "undetermined";
    }
}

SplittingDegree splitting_degree(const LPolynomial& L) {
    const unsigned g = L.g;
    if (g < 1 || g > 3) throw ValidationError("splitting degree supports 1 <= g <= 3");
    if (L.a.size() != 2 * std::size_t{g} + 1) throw ValidationError("L-polynomial has the wrong length");
    const BigInt q = static_cast<unsigned long>(L.q);
    SplittingDegree out;
    out.maximum = static_cast<unsigned>(weyl_order(g).get_ui());
    out.reducible = !is_irreducible(reversed_charpoly(L));
    if (g == 1) {
        out.status = SplittingDegree::Status::exact;
        out.degree = trivial_class(L.a[1] * L.a[1] - 4 * q) ? 1 : 2;
        return out;
    }
    const IntPoly h = real_weil_polynomial(L);
    if (g == 2) {
        out.status = SplittingDegree::Status::exact;
        const BigInt a1 = h.coeff(1), a0 = h.coeff(0);
        const BigInt Delta = a1 * a1 - 4 * a0;
        if (is_perfect_square(Delta)) {
            BigInt s;
            mpz_sqrt(s.get_mpz_t(), Delta.get_mpz_t());
            const BigInt y1 = (-a1 + s) / 2, y2 = (-a1 - s) / 2;
            const BigInt d1 = y1 * y1 - 4 * q, d2 = y2 * y2 - 4 * q;
            const bool t1 = trivial_class(d1), t2 = trivial_class(d2);
            if (t1 && t2)
                out.degree = 1;
            else if (t1 || t2 || is_perfect_square(d1 * d2))
                out.degree = 2;
            else
                out.degree = 4;
            return out;
        }
        // 4 d_1 = u + v sqrt(Delta)
        const BigInt u = a1 * a1 + Delta - 16 * q, v = -2 * a1;
        if (u == 0 && v == 0) {
            out.degree = 2;
            return out;
        }
        if (is_square_in_quadratic(u, v, Delta)) {
            out.degree = 2;
        } else {
            const BigInt N = u * u - Delta * v * v;
            out.degree = (is_perfect_square(N) || is_perfect_square(N * Delta)) ? 4 : 8;
        }
        return out;
    }
    // g = 3: certificate for the full signed-permutation group
    if (out.reducible || !is_irreducible(h)) return out;
    const BigInt Delta = discriminant(h);
    if (is_perfect_square(Delta)) return out;
    const std::vector<BigInt> d1{-4 * q, 0, 1};
    auto times = [](const std::vector<BigInt>& x, const BigInt& k) {
        std::vector<BigInt> r = x;
        for (auto& c : r) c *= k;
        return r;
    };
    // N = d_1 d_2 d_3 = prod (y_i^2 - 4q)
    const BigInt N = resultant(h, IntPoly(std::vector<BigInt>{-4 * q, 0, 1}));
    if (N == 0) return out;
    if (is_perfect_square(N) || is_perfect_square(N * Delta)) return out;
    for (const auto& alpha : {d1, times(d1, Delta), times(d1, N), times(d1, N * Delta)})
        if (is_square_in_cubic(h, alpha)) return out;
    out.status = SplittingDegree::Status::certified_maximal;
    out.degree = 48;
    return out;
}

IntPoly frobenius_power_charpoly(const LPolynomial& L, unsigned d) {
    if (d < 1) throw ValidationError("power must be >= 1");
    const IntPoly P = reversed_charpoly(L);
    const std::size_t n = *P.degree();
    const std::vector<BigInt> s = power_sums(P, n * d);
    std::vector<BigInt> e(n + 1, 0);
    e[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        BigInt acc = 0;
        for (std::size_t i = 1; i <= k; ++i) {
            BigInt t = e[k - i] * s[i * d];
            if (i % 2 == 1)
                acc += t;
            else
                acc -= t;
        }
        const BigInt kk = static_cast<unsigned long>(k);
        if (!mpz_divisible_p(acc.get_mpz_t(), kk.get_mpz_t())) throw ConsistencyError("Newton identities: inexact");
        e[k] = acc / kk;
    }
    std::vector<BigInt> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k) c[n - k] = k % 2 ? BigInt(-e[k]) : e[k];
    return IntPoly(c);
}

unsigned euler_phi(unsigned n) {
    unsigned r = n;
    for (unsigned p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            r -= r / p;
        }
    if (n > 1) r -= r / n;
    return r;
}

std::vector<unsigned> phi_bounded(unsigned bound) {
    std::vector<unsigned> out;
    // phi(d) >= sqrt(d / 2)
    const unsigned top = 2 * bound * bound + 2;
    for (unsigned d = 1; d <= top; ++d)
        if (euler_phi(d) <= bound) out.push_back(d);
    return out;
}

SimplicityCheck absolutely_simple(const LPolynomial& L) {
    SimplicityCheck r;
    r.irreducible = is_irreducible(reversed_charpoly(L));
    if (!r.irreducible) return r;
    const unsigned n = 2 * L.g;
    for (unsigned d : phi_bounded(n * (n - 1))) {
        if (d == 1) continue;
        r.checked.push_back(d);
        if (!is_squarefree(frobenius_power_charpoly(L, d))) {
            r.failing_d = d;
            break;
        }
    }
    return r;
}

}  // namespace strata
