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

#include "strata/int_poly.hpp"

#include <algorithm>
#include <sstream>

#include "strata/error.hpp"
#include "strata/field.hpp"
#include "strata/fq_poly.hpp"

namespace strata {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long long> coeffs) {
    for (long long c : coeffs) c_.emplace_back(static_cast<long>(c));
    trim();
}

IntPoly IntPoly::monomial(const BigInt& c, std::size_t k) {
    std::vector<BigInt> v(k + 1, 0);
    v[k] = c;
    return IntPoly(std::move(v));
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const BigInt& IntPoly::leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

BigInt IntPoly::operator()(const BigInt& x) const {
    BigInt acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<BigInt> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<BigInt> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-() const { return scaled(-1); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (c_.empty() || o.c_.empty()) return {};
    std::vector<BigInt> r(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::scaled(const BigInt& s) const {
    std::vector<BigInt> r(c_);
    for (auto& c : r) c *= s;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<BigInt> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return IntPoly(std::move(r));
}

BigInt IntPoly::content() const {
    BigInt g = 0;
    for (const auto& c : c_) g = ::gcd(g, c);
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (c_.empty()) return {};
    BigInt g = content();
    if (c_.back() < 0) g = -g;
    std::vector<BigInt> r(c_);
    for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return IntPoly(std::move(r));
}

IntPoly IntPoly::reversed() const {
    std::vector<BigInt> r(c_.rbegin(), c_.rend());
    return IntPoly(std::move(r));
}

std::string IntPoly::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPoly& f) {
    if (f.is_zero()) return os << "0";
    bool first = true;
    const auto& c = f.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        BigInt a = abs(c[i]);
        if (first) {
            if (c[i] < 0) os << "-";
        } else {
            os << (c[i] < 0 ? " - " : " + ");
        }
        first = false;
        if (a != 1 || i == 0) os << a;
        if (i >= 1) os << (a != 1 ? "*" : "") << "x";
        if (i >= 2) os << "^" << i;
    }
    return os;
}

bool divides(const IntPoly& d, const IntPoly& f, IntPoly* quotient) {
    if (d.is_zero()) throw std::domain_error("divides: zero divisor");
    std::vector<BigInt> r = f.coeffs();
    const auto& dc = d.coeffs();
    if (r.empty()) {
        if (quotient) *quotient = IntPoly();
        return true;
    }
    if (r.size() < dc.size()) return false;
    std::vector<BigInt> quot(r.size() - dc.size() + 1, 0);
    for (std::size_t k = r.size(); k-- >= dc.size();) {
        if (r[k] == 0) continue;
        if (!mpz_divisible_p(r[k].get_mpz_t(), dc.back().get_mpz_t())) return false;
        BigInt c = r[k] / dc.back();
        std::size_t shift = k + 1 - dc.size();
        quot[shift] = c;
        for (std::size_t i = 0; i < dc.size(); ++i) r[shift + i] -= c * dc[i];
    }
    for (std::size_t i = 0; i + 1 < dc.size(); ++i)
        if (r[i] != 0) return false;
    if (quotient) *quotient = IntPoly(std::move(quot));
    return true;
}

namespace {

/* Pseudo-remainder: lc(b)^{deg a - deg b + 1} a mod b. */
IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> r = a.coeffs();
    const auto& bc = b.coeffs();
    const BigInt& lb = bc.back();
    while (r.size() >= bc.size()) {
        BigInt c = r.back();
        std::size_t shift = r.size() - bc.size();
        for (auto& x : r) x *= lb;
        for (std::size_t i = 0; i < bc.size(); ++i) r[shift + i] -= c * bc[i];
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    return IntPoly(std::move(r));
}

}  // namespace

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return b.primitive_part().scaled(b.content());
    if (b.is_zero()) return a.primitive_part().scaled(a.content());
    BigInt cg = ::gcd(a.content(), b.content());
    IntPoly x = a.primitive_part(), y = b.primitive_part();
    if (*x.degree() < *y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        IntPoly r = pseudo_rem(x, y);
        x = std::move(y);
        y = r.is_zero() ? r : r.primitive_part();
    }
    return x.primitive_part().scaled(cg);
}

BigInt resultant(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return 0;
    const std::size_t m = *a.degree(), n = *b.degree();
    if (m == 0 && n == 0) return 1;
    if (m == 0) {
        BigInt r;
        mpz_pow_ui(r.get_mpz_t(), a.leading().get_mpz_t(), n);
        return r;
    }
    if (n == 0) {
        BigInt r;
        mpz_pow_ui(r.get_mpz_t(), b.leading().get_mpz_t(), m);
        return r;
    }
    const std::size_t N = m + n;
    std::vector<std::vector<BigInt>> s(N, std::vector<BigInt>(N, 0));
    // rows hold coefficients high-to-low
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= m; ++j) s[i][i + j] = a.coeff(m - j);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= n; ++j) s[n + i][i + j] = b.coeff(n - j);
    // Bareiss
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < N; ++k) {
        if (s[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < N && s[piv][k] == 0) ++piv;
            if (piv == N) return 0;
            std::swap(s[k], s[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < N; ++i) {
            for (std::size_t j = k + 1; j < N; ++j) {
                s[i][j] = s[i][j] * s[k][k] - s[i][k] * s[k][j];
                mpz_divexact(s[i][j].get_mpz_t(), s[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            s[i][k] = 0;
        }
        prev = s[k][k];
    }
    return sign * s[N - 1][N - 1];
}

BigInt discriminant(const IntPoly& f) {
    if (!f.degree() || *f.degree() < 1) throw ValidationError("discriminant of a constant");
    const std::size_t n = *f.degree();
    BigInt r = resultant(f, f.derivative());
    mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), f.leading().get_mpz_t());
    if ((n * (n - 1) / 2) % 2 == 1) r = -r;
    return r;
}

bool is_squarefree(const IntPoly& f) {
    if (f.is_zero()) throw ValidationError("is_squarefree: zero polynomial");
    if (*f.degree() == 0) return true;
    return *gcd(f, f.derivative()).degree() == 0;
}

IntPoly charpoly(const std::vector<std::vector<BigInt>>& a) {
    const std::size_t n = a.size();
    std::vector<BigInt> c(n + 1, 0);
    c[n] = 1;
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n, 0));
    for (std::size_t k = 1; k <= n; ++k) {
        // M_k = A M_{k-1} + c_{n-k+1} I
        std::vector<std::vector<BigInt>> next(n, std::vector<BigInt>(n, 0));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                BigInt s = 0;
                for (std::size_t l = 0; l < n; ++l) s += a[i][l] * m[l][j];
                next[i][j] = s;
            }
            next[i][i] += c[n - k + 1];
        }
        m = std::move(next);
        BigInt tr = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) tr += a[i][l] * m[l][i];
        BigInt kk = static_cast<unsigned long>(k);
        if (!mpz_divisible_p(tr.get_mpz_t(), kk.get_mpz_t())) throw ConsistencyError("charpoly: inexact division");
        c[n - k] = -tr / kk;
    }
    return IntPoly(std::move(c));
}

bool is_perfect_square(const BigInt& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

namespace {

BigInt mod_nonneg(const BigInt& a, const BigInt& m) {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

IntPoly reduce(const IntPoly& f, const BigInt& m, bool symmetric) {
    std::vector<BigInt> c(f.coeffs());
    BigInt half = m / 2;
    for (auto& x : c) {
        x = mod_nonneg(x, m);
        if (symmetric && x > half) x -= m;
    }
    return IntPoly(std::move(c));
}

FqPoly to_fp(const IntPoly& f, const Field& F) {
    std::vector<elem_t> c(f.coeffs().size());
    BigInt p = F.p();
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = static_cast<elem_t>(mod_nonneg(f.coeffs()[i], p).get_ui());
    return FqPoly(F, std::move(c));
}

IntPoly from_fp(const FqPoly& f) {
    std::vector<BigInt> c;
    for (auto x : f.coeffs()) c.emplace_back(static_cast<unsigned long>(x));
    return IntPoly(std::move(c));
}

/* s*a + t*b = 1 over F_p for coprime a, b. */
std::pair<FqPoly, FqPoly> bezout(const FqPoly& a, const FqPoly& b) {
    const Field& F = a.field();
    FqPoly r0 = a, r1 = b;
    FqPoly s0 = FqPoly::constant(F, 1), s1(F), t0(F), t1 = FqPoly::constant(F, 1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        FqPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (!r0.is_constant() || r0.is_zero()) throw ConsistencyError("bezout: factors not coprime mod p");
    elem_t li = F.inv(r0.leading());
    return {s0.scaled(li), t0.scaled(li)};
}

/* f = g*h mod p with g monic; lifts in place to f = g*h mod p^k. */
void hensel_lift(const IntPoly& f, IntPoly& g, IntPoly& h, const Field& F, unsigned k) {
    const BigInt p = F.p();
    BigInt pk;
    mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), k);
    const FqPoly gb = to_fp(g, F), hb = to_fp(h, F);
    auto [s, t] = bezout(gb, hb);
    BigInt pj = p;
    for (unsigned j = 1; j < k; ++j) {
        IntPoly e = reduce(f - g * h, pk, false);
        std::vector<BigInt> ec(e.coeffs());
        for (auto& c : ec) {
            if (!mpz_divisible_p(c.get_mpz_t(), pj.get_mpz_t())) throw ConsistencyError("hensel: lost congruence");
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), pj.get_mpz_t());
        }
        FqPoly eb = to_fp(IntPoly(std::move(ec)), F);
        FqPoly dg = divmod(t * eb, gb).second;
        auto [dh, rem] = divmod(eb - dg * hb, gb);
        if (!rem.is_zero()) throw ConsistencyError("hensel: inexact correction");
        g = reduce(g + from_fp(dg).scaled(pj), pk, false);
        h = reduce(h + from_fp(dh).scaled(pj), pk, false);
        pj *= p;
    }
}

std::vector<IntPoly> lift_all(const IntPoly& f, const std::vector<FqPoly>& factors, const Field& F, unsigned k) {
    BigInt pk;
    mpz_pow_ui(pk.get_mpz_t(), BigInt(F.p()).get_mpz_t(), k);
    std::vector<IntPoly> out;
    IntPoly cur = reduce(f, pk, false);
    for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
        FqPoly rest = FqPoly::constant(F, static_cast<elem_t>(mod_nonneg(cur.leading(), BigInt(F.p())).get_ui()));
        for (std::size_t j = i + 1; j < factors.size(); ++j) rest = rest * factors[j];
        IntPoly g = from_fp(factors[i]);
        IntPoly h = from_fp(rest);
        hensel_lift(cur, g, h, F, k);
        out.push_back(g);
        cur = h;
    }
    // last factor: cur = lc * u_r mod p^k
    BigInt lc_inv;
    BigInt lc = mod_nonneg(cur.leading(), pk);
    mpz_invert(lc_inv.get_mpz_t(), lc.get_mpz_t(), pk.get_mpz_t());
    out.push_back(reduce(cur.scaled(lc_inv), pk, false));
    return out;
}

/* Zassenhaus on a primitive squarefree polynomial of degree >= 2 with positive lc. */
std::vector<IntPoly> factor_squarefree_primitive(const IntPoly& f) {
    const std::size_t n = *f.degree();
    const BigInt& lc = f.leading();
    // choose the good prime with the fewest modular factors among the first few
    std::optional<Field> best;
    std::vector<FqPoly> best_factors;
    int good = 0;
    for (unsigned p = 3; p <= kMaxCharacteristic && good < 6; p += 2) {
        if (!is_prime(p)) continue;
        if (mpz_divisible_ui_p(lc.get_mpz_t(), p)) continue;
        Field F = Field::make(p);
        FqPoly fb = to_fp(f, F);
        if (!squarefree(fb)) continue;
        ++good;
        auto facs = factor_squarefree(fb.monic());
        if (!best || facs.size() < best_factors.size()) {
            best = F;
            best_factors = std::move(facs);
        }
        if (best_factors.size() == 1) break;
    }
    if (!best) throw BudgetError("factor: no suitable prime <= 97");
    if (best_factors.size() == 1) return {f};

    BigInt maxc = 0;
    for (const auto& c : f.coeffs()) maxc = std::max(maxc, BigInt(abs(c)));
    BigInt bound = maxc * static_cast<unsigned long>(n + 1) * abs(lc) * 2;
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n);
    unsigned k = 1;
    BigInt pk = best->p();
    while (pk <= bound) {
        pk *= best->p();
        ++k;
    }
    std::vector<IntPoly> lifted = lift_all(f, best_factors, *best, k);

    std::vector<IntPoly> out;
    IntPoly rest = f;
    std::vector<std::size_t> remaining(lifted.size());
    for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
    std::size_t s = 1;
    while (2 * s <= remaining.size()) {
        bool found = false;
        std::vector<std::size_t> pick(s);
        for (std::size_t i = 0; i < s; ++i) pick[i] = i;
        for (;;) {
            IntPoly cand = IntPoly({1}).scaled(rest.leading());
            for (auto i : pick) cand = reduce(cand * lifted[remaining[i]], pk, true);
            IntPoly pp = cand.primitive_part();
            IntPoly quot;
            if (*pp.degree() >= 1 && divides(pp, rest, &quot)) {
                out.push_back(pp);
                rest = quot;
                std::vector<std::size_t> keep;
                for (std::size_t i = 0, j = 0; i < remaining.size(); ++i) {
                    if (j < s && pick[j] == i) {
                        ++j;
                        continue;
                    }
                    keep.push_back(remaining[i]);
                }
                remaining = std::move(keep);
                found = true;
                break;
            }
            // next combination
            std::size_t i = s;
            while (i-- > 0) {
                if (pick[i] < remaining.size() - s + i) break;
            }
            if (i == static_cast<std::size_t>(-1)) break;
            ++pick[i];
            for (std::size_t j = i + 1; j < s; ++j) pick[j] = pick[j - 1] + 1;
        }
        if (!found) ++s;
    }
    if (rest.degree() && *rest.degree() >= 1) out.push_back(rest.primitive_part());
    return out;
}

}  // namespace

std::vector<std::pair<IntPoly, int>> factor(const IntPoly& f) {
    if (f.is_zero()) throw ValidationError("factor: zero polynomial");
    std::vector<std::pair<IntPoly, int>> out;
    IntPoly pp = f.primitive_part();
    if (*pp.degree() == 0) return out;
    // squarefree kernel: pp / gcd(pp, pp')
    IntPoly g = gcd(pp, pp.derivative());
    IntPoly kernel;
    if (!divides(g, pp, &kernel)) throw ConsistencyError("factor: squarefree kernel");
    kernel = kernel.primitive_part();
    std::vector<IntPoly> irreducibles;
    if (*kernel.degree() == 1) {
        irreducibles.push_back(kernel);
    } else {
        irreducibles = factor_squarefree_primitive(kernel);
    }
    for (auto& irr : irreducibles) {
        irr = irr.primitive_part();
        int mult = 0;
        IntPoly cur = pp, quot;
        while (divides(irr, cur, &quot)) {
            ++mult;
            cur = quot;
        }
        if (mult == 0) throw ConsistencyError("factor: factor does not divide input");
        out.emplace_back(irr, mult);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (*a.first.degree() != *b.first.degree()) return *a.first.degree() < *b.first.degree();
        return a.first.coeffs() < b.first.coeffs();
    });
    return out;
}

bool is_irreducible(const IntPoly& f) {
    if (f.is_zero() || *f.degree() == 0) return false;
    auto facs = factor(f);
    return facs.size() == 1 && facs[0].second == 1;
}

}  // namespace strata
