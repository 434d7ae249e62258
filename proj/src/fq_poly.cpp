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

#include "strata/fq_poly.hpp"

#include <algorithm>
#include <random>

#include "strata/error.hpp"

namespace strata {

FqPoly::FqPoly(Field field, std::vector<elem_t> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    for (auto c : c_)
        if (!field_.contains(c)) throw ValidationError("coefficient out of range for " + field_.describe());
    trim();
}

FqPoly FqPoly::monomial(const Field& field, elem_t c, std::size_t k) {
    std::vector<elem_t> v(k + 1, 0);
    v[k] = c;
    return FqPoly(field, std::move(v));
}

void FqPoly::trim() noexcept {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

elem_t FqPoly::operator()(elem_t x) const noexcept {
    elem_t acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, x), c_[i]);
    return acc;
}

FqPoly FqPoly::operator+(const FqPoly& o) const {
    std::vector<elem_t> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_.add(coeff(i), o.coeff(i));
    return FqPoly(field_, std::move(r));
}

FqPoly FqPoly::operator-(const FqPoly& o) const {
    std::vector<elem_t> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_.sub(coeff(i), o.coeff(i));
    return FqPoly(field_, std::move(r));
}

FqPoly FqPoly::operator*(const FqPoly& o) const {
    if (c_.empty() || o.c_.empty()) return FqPoly(field_);
    std::vector<elem_t> r(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = field_.add(r[i + j], field_.mul(c_[i], o.c_[j]));
    }
    return FqPoly(field_, std::move(r));
}

FqPoly FqPoly::scaled(elem_t s) const {
    std::vector<elem_t> r(c_);
    for (auto& c : r) c = field_.mul(c, s);
    return FqPoly(field_, std::move(r));
}

FqPoly FqPoly::derivative() const {
    if (c_.size() <= 1) return FqPoly(field_);
    std::vector<elem_t> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = field_.mul(field_.from_int(static_cast<long long>(i)), c_[i]);
    return FqPoly(field_, std::move(r));
}

FqPoly FqPoly::monic() const {
    if (c_.empty()) return *this;
    return scaled(field_.inv(c_.back()));
}

std::ostream& operator<<(std::ostream& os, const FqPoly& f) {
    if (f.is_zero()) return os << "0";
    bool first = true;
    for (std::size_t i = f.coeffs().size(); i-- > 0;) {
        elem_t c = f.coeffs()[i];
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (c != 1 || i == 0) os << FqElement(f.field(), c);
        if (i >= 1) os << (c != 1 ? "*" : "") << "x";
        if (i >= 2) os << "^" << i;
    }
    return os;
}

std::pair<FqPoly, FqPoly> divmod(const FqPoly& a, const FqPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const Field& F = a.field();
    std::vector<elem_t> r = a.coeffs();
    const auto& bc = b.coeffs();
    if (r.size() < bc.size()) return {FqPoly(F), a};
    std::vector<elem_t> quot(r.size() - bc.size() + 1, 0);
    const elem_t lead_inv = F.inv(bc.back());
    for (std::size_t k = r.size(); k-- >= bc.size();) {
        elem_t c = F.mul(r[k], lead_inv);
        std::size_t shift = k + 1 - bc.size();
        quot[shift] = c;
        if (c == 0) continue;
        for (std::size_t i = 0; i < bc.size(); ++i) r[shift + i] = F.sub(r[shift + i], F.mul(c, bc[i]));
    }
    r.resize(bc.size() - 1);
    return {FqPoly(F, std::move(quot)), FqPoly(F, std::move(r))};
}

FqPoly gcd(const FqPoly& a, const FqPoly& b) {
    FqPoly x = a, y = b;
    while (!y.is_zero()) {
        FqPoly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

FqPoly mulmod(const FqPoly& a, const FqPoly& b, const FqPoly& m) { return divmod(a * b, m).second; }

FqPoly powmod(const FqPoly& a, std::uint64_t e, const FqPoly& m) {
    FqPoly r = divmod(FqPoly::constant(a.field(), 1), m).second;
    FqPoly base = divmod(a, m).second;
    while (e > 0) {
        if (e & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        e >>= 1;
    }
    return r;
}

bool squarefree(const FqPoly& f) {
    if (f.is_zero()) throw ValidationError("squarefree: zero polynomial");
    return gcd(f, f.derivative()).is_constant();
}

FqPoly poly_pow(const FqPoly& f, std::uint64_t e) {
    FqPoly r = FqPoly::constant(f.field(), 1);
    FqPoly base = f;
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return r;
}

std::uint64_t monic_count(const Field& field, std::size_t d) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < d; ++i) {
        if (total > (std::uint64_t{1} << 62) / field.q()) throw BudgetError("q^d overflows the enumeration index");
        total *= field.q();
    }
    return total;
}

FqPoly monic_at(const Field& field, std::size_t d, std::uint64_t index) {
    std::vector<elem_t> c(d + 1, 0);
    for (std::size_t i = 0; i < d; ++i) {
        c[i] = static_cast<elem_t>(index % field.q());
        index /= field.q();
    }
    c[d] = 1;
    return FqPoly(field, std::move(c));
}

MonicStream::MonicStream(Field field, std::size_t d, bool squarefree_only)
    : field_(std::move(field)), d_(d), squarefree_only_(squarefree_only), total_(monic_count(field_, d)) {
    if (d < 1) throw ValidationError("enumerate_monic: degree must be >= 1");
}

bool MonicStream::next(FqPoly& out) {
    while (index_ < total_) {
        FqPoly f = monic_at(field_, d_, index_++);
        if (!squarefree_only_ || squarefree(f)) {
            out = std::move(f);
            return true;
        }
    }
    return false;
}

namespace {

/* r^{(q^d - 1)/2} mod f computed as (r^{1+q+...+q^{d-1}})^{(q-1)/2}, avoiding overflow. */
FqPoly half_norm_power(const FqPoly& r, std::size_t d, const FqPoly& f) {
    const std::uint64_t q = r.field().q();
    FqPoly acc = divmod(r, f).second;
    FqPoly conj = acc;
    for (std::size_t i = 1; i < d; ++i) {
        conj = powmod(conj, q, f);
        acc = mulmod(acc, conj, f);
    }
    return powmod(acc, (q - 1) / 2, f);
}

void equal_degree_split(const FqPoly& f, std::size_t d, std::mt19937_64& rng, std::vector<FqPoly>& out) {
    const std::size_t n = *f.degree();
    if (n == d) {
        out.push_back(f);
        return;
    }
    const Field& F = f.field();
    std::uniform_int_distribution<elem_t> coeff(0, F.q() - 1);
    for (;;) {
        std::vector<elem_t> rc(n);
        for (auto& c : rc) c = coeff(rng);
        FqPoly r(F, std::move(rc));
        if (r.is_constant()) continue;
        FqPoly g = gcd(r, f);
        if (!g.is_constant() && *g.degree() < n) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(divmod(f, g).first, d, rng, out);
            return;
        }
        FqPoly h = half_norm_power(r, d, f) - FqPoly::constant(F, 1);
        g = gcd(h, f);
        if (!g.is_constant() && *g.degree() < n) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(divmod(f, g).first, d, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<FqPoly> factor_squarefree(const FqPoly& f, std::uint64_t seed) {
    if (f.is_zero() || !f.is_monic()) throw ValidationError("factor_squarefree: input must be monic");
    std::vector<FqPoly> out;
    if (f.is_constant()) return out;
    const Field& F = f.field();
    std::mt19937_64 rng(seed);
    FqPoly rest = f;
    const FqPoly x = FqPoly::monomial(F, 1, 1);
    FqPoly h = x;
    for (std::size_t i = 1; rest.degree() && *rest.degree() >= 2 * i; ++i) {
        h = powmod(h, F.q(), rest);
        FqPoly g = gcd(h - x, rest);
        if (!g.is_constant()) {
            equal_degree_split(g, i, rng, out);
            rest = divmod(rest, g).first;
            h = divmod(h, rest).second;
        }
    }
    if (!rest.is_constant()) out.push_back(rest.monic());
    std::sort(out.begin(), out.end(), [](const FqPoly& a, const FqPoly& b) {
        if (a.coeffs().size() != b.coeffs().size()) return a.coeffs().size() < b.coeffs().size();
        return a.coeffs() < b.coeffs();
    });
    return out;
}

}  // namespace strata
