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

#include "strata/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <utility>

#include "strata/error.hpp"

namespace strata {

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

using Coeffs = std::vector<elem_t>;

void trim(Coeffs& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

/* a * b mod m over Z/p; m monic, deg a, deg b < deg m. */
Coeffs mulmod_p(const Coeffs& a, const Coeffs& b, const Coeffs& m, unsigned p) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint64_t> prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
    }
    const std::size_t d = m.size() - 1;
    for (std::size_t k = prod.size(); k-- > d;) {
        std::uint64_t c = prod[k];
        if (c == 0) continue;
        for (std::size_t i = 0; i <= d; ++i) prod[k - d + i] = (prod[k - d + i] + (p - c) * m[i]) % p;
    }
    Coeffs r(std::min(prod.size(), d));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = static_cast<elem_t>(prod[i]);
    trim(r);
    return r;
}

Coeffs powmod_p(Coeffs base, std::uint64_t e, const Coeffs& m, unsigned p) {
    Coeffs r{1};
    while (e > 0) {
        if (e & 1) r = mulmod_p(r, base, m, p);
        base = mulmod_p(base, base, m, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    std::int64_t t = 0, nt = 1, r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
    while (nr != 0) {
        std::int64_t qt = r / nr;
        t -= qt * nt;
        std::swap(t, nt);
        r -= qt * nr;
        std::swap(r, nr);
    }
    return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(p) : t);
}

/* Monic gcd over Z/p. */
Coeffs gcd_p(Coeffs a, Coeffs b, unsigned p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b
        std::uint64_t lead_inv = inv_mod(b.back(), p);
        while (a.size() >= b.size()) {
            std::uint64_t c = a.back() * lead_inv % p;
            std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i)
                a[shift + i] = static_cast<elem_t>((a[shift + i] + (p - c) * b[i]) % p);
            trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    if (!a.empty()) {
        std::uint64_t li = inv_mod(a.back(), p);
        for (auto& c : a) c = static_cast<elem_t>(c * li % p);
    }
    return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

bool is_irreducible_mod_p(unsigned p, std::span<const elem_t> monic) {
    Coeffs m(monic.begin(), monic.end());
    trim(m);
    if (m.size() < 2 || m.back() != 1) return false;
    const unsigned n = static_cast<unsigned>(m.size() - 1);
    if (n == 1) return true;
    const Coeffs x{0, 1};
    // x^{p^n} = x mod m
    Coeffs xp = x;
    std::vector<Coeffs> frob_powers;  // x^{p^k} for k = 1..n
    for (unsigned k = 1; k <= n; ++k) {
        xp = powmod_p(xp, p, m, p);
        frob_powers.push_back(xp);
    }
    if (frob_powers.back() != x) return false;
    for (std::uint64_t r : prime_factors(n)) {
        Coeffs h = frob_powers[n / r - 1];
        // h - x
        if (h.size() < 2) h.resize(2, 0);
        h[1] = static_cast<elem_t>((h[1] + p - 1) % p);
        trim(h);
        Coeffs g = gcd_p(m, h, p);
        if (g.size() != 1) return false;
    }
    return true;
}

std::vector<elem_t> canonical_modulus(unsigned p, unsigned n) {
    if (n == 1) return {0, 1};
    // Candidates ordered by (c_0, c_1, ..., c_{n-1}) lexicographically, c_{n-1} fastest.
    Coeffs m(n + 1, 0);
    m[n] = 1;
    for (;;) {
        if (is_irreducible_mod_p(p, m)) return m;
        std::size_t i = n;
        while (i-- > 0) {
            if (++m[i] < p) break;
            m[i] = 0;
        }
        if (i == static_cast<std::size_t>(-1)) break;
    }
    throw ConsistencyError("no irreducible polynomial found");
}

namespace detail {

struct FieldData {
    unsigned p = 0;
    unsigned n = 0;
    std::uint32_t q = 0;
    Coeffs modulus;
    std::vector<std::uint32_t> pw;  // p^i
    bool tables = false;
    std::vector<std::uint32_t> log;
    std::vector<elem_t> exp;  // length 2(q-1) so exp[a+b] needs no reduction
    std::vector<std::uint32_t> zech;

    Coeffs unpack(elem_t a) const {
        Coeffs c(n);
        for (unsigned i = 0; i < n; ++i) {
            c[i] = a % p;
            a /= p;
        }
        trim(c);
        return c;
    }
    elem_t pack(const Coeffs& c) const {
        elem_t v = 0;
        for (std::size_t i = c.size(); i-- > 0;) v = v * p + c[i];
        return v;
    }
    elem_t schoolbook_add(elem_t a, elem_t b) const {
        elem_t r = 0;
        for (unsigned i = 0; i < n; ++i) {
            elem_t s = a % p + b % p;
            if (s >= p) s -= p;
            r += s * pw[i];
            a /= p;
            b /= p;
        }
        return r;
    }
    elem_t schoolbook_mul(elem_t a, elem_t b) const {
        if (n == 1) return static_cast<elem_t>(std::uint64_t{a} * b % p);
        return pack(mulmod_p(unpack(a), unpack(b), modulus, p));
    }
    elem_t schoolbook_pow(elem_t a, std::uint64_t e) const {
        elem_t r = 1;
        while (e > 0) {
            if (e & 1) r = schoolbook_mul(r, a);
            a = schoolbook_mul(a, a);
            e >>= 1;
        }
        return r;
    }

    void build_tables() {
        const std::uint32_t order = q - 1;
        const auto factors = prime_factors(order);
        elem_t gen = 0;
        for (elem_t c = 1; c < q; ++c) {
            bool primitive = true;
            for (auto r : factors) {
                if (schoolbook_pow(c, order / r) == 1) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) {
                gen = c;
                break;
            }
        }
        if (gen == 0) throw ConsistencyError("no primitive element; modulus not irreducible");
        exp.assign(2 * std::size_t{order}, 0);
        log.assign(q, order);
        elem_t x = 1;
        for (std::uint32_t i = 0; i < order; ++i) {
            exp[i] = x;
            exp[i + order] = x;
            log[x] = i;
            x = schoolbook_mul(x, gen);
        }
        zech.assign(order, order);
        for (std::uint32_t d = 0; d < order; ++d) zech[d] = log[schoolbook_add(1, exp[d])];
        tables = true;
    }
};

}  // namespace detail

namespace {

std::shared_ptr<const detail::FieldData> build(unsigned p, Coeffs modulus, bool tables) {
    if (p == 2) throw ValidationError("characteristic 2 is not supported");
    if (!is_prime(p)) throw ValidationError("p = " + std::to_string(p) + " is not prime");
    if (p > kMaxCharacteristic)
        throw ValidationError("p = " + std::to_string(p) + " exceeds supported maximum " +
                              std::to_string(kMaxCharacteristic));
    trim(modulus);
    if (modulus.size() < 2) throw ValidationError("modulus must have degree >= 1");
    for (auto c : modulus)
        if (c >= p) throw ValidationError("modulus coefficient out of range");
    if (modulus.back() != 1) throw ValidationError("modulus must be monic");
    if (!is_irreducible_mod_p(p, modulus)) throw ValidationError("modulus is not irreducible");
    auto d = std::make_shared<detail::FieldData>();
    d->p = p;
    d->n = static_cast<unsigned>(modulus.size() - 1);
    std::uint64_t q = 1;
    for (unsigned i = 0; i < d->n; ++i) {
        d->pw.push_back(static_cast<std::uint32_t>(q));
        q *= p;
        if (q > kMaxFieldOrder) throw BudgetError("field order exceeds 2^31");
    }
    d->q = static_cast<std::uint32_t>(q);
    d->modulus = std::move(modulus);
    if (tables && q <= kTableCap) d->build_tables();
    return d;
}

}  // namespace

Field Field::make(unsigned p, unsigned n) {
    if (n < 1) throw ValidationError("extension degree must be >= 1");
    if (p == 2) throw ValidationError("characteristic 2 is not supported");
    if (!is_prime(p)) throw ValidationError("p = " + std::to_string(p) + " is not prime");
    if (p > kMaxCharacteristic)
        throw ValidationError("p = " + std::to_string(p) + " exceeds supported maximum " +
                              std::to_string(kMaxCharacteristic));
    {
        std::uint64_t q = 1;
        for (unsigned i = 0; i < n; ++i) {
            q *= p;
            if (q > kMaxFieldOrder) throw BudgetError("field order exceeds 2^31");
        }
    }
    static std::mutex mu;
    static std::map<std::pair<unsigned, unsigned>, std::shared_ptr<const detail::FieldData>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{p, n}];
    if (!slot) slot = build(p, canonical_modulus(p, n), true);
    return Field(slot);
}

Field Field::with_modulus(unsigned p, std::vector<elem_t> modulus, bool build_tables) {
    return Field(build(p, std::move(modulus), build_tables));
}

unsigned Field::p() const noexcept { return d_->p; }
unsigned Field::n() const noexcept { return d_->n; }
std::uint32_t Field::q() const noexcept { return d_->q; }
const std::vector<elem_t>& Field::modulus() const noexcept { return d_->modulus; }
bool Field::has_tables() const noexcept { return d_->tables; }

ZechView Field::zech() const {
    if (!d_->tables) throw BudgetError("field " + describe() + " has no log tables");
    return ZechView{d_->q - 1, d_->q - 1, d_->zech.data(), d_->log.data(), d_->exp.data()};
}

elem_t Field::from_int(long long v) const noexcept {
    long long r = v % static_cast<long long>(d_->p);
    if (r < 0) r += d_->p;
    return static_cast<elem_t>(r);
}

elem_t Field::from_coords(std::span<const elem_t> coords) const {
    if (coords.size() > d_->n) throw ValidationError("too many coordinates for " + describe());
    for (auto c : coords)
        if (c >= d_->p) throw ValidationError("coordinate out of range [0, p)");
    return d_->pack(Coeffs(coords.begin(), coords.end()));
}

std::vector<elem_t> Field::coords(elem_t a) const {
    std::vector<elem_t> c(d_->n);
    for (unsigned i = 0; i < d_->n; ++i) {
        c[i] = a % d_->p;
        a /= d_->p;
    }
    return c;
}

elem_t Field::add(elem_t a, elem_t b) const noexcept {
    const auto& d = *d_;
    if (d.n == 1) {
        elem_t s = a + b;
        return s >= d.p ? s - d.p : s;
    }
    if (d.tables) {
        if (a == 0) return b;
        if (b == 0) return a;
        const std::uint32_t order = d.q - 1;
        std::uint32_t la = d.log[a], lb = d.log[b];
        std::uint32_t z = d.zech[lb >= la ? lb - la : lb + order - la];
        return z == order ? 0 : d.exp[la + z];
    }
    return d.schoolbook_add(a, b);
}

elem_t Field::neg(elem_t a) const noexcept {
    const auto& d = *d_;
    if (d.n == 1) return a == 0 ? 0 : d.p - a;
    elem_t r = 0;
    for (unsigned i = 0; i < d.n; ++i) {
        elem_t c = a % d.p;
        r += (c == 0 ? 0 : d.p - c) * d.pw[i];
        a /= d.p;
    }
    return r;
}

elem_t Field::sub(elem_t a, elem_t b) const noexcept { return add(a, neg(b)); }

elem_t Field::mul(elem_t a, elem_t b) const noexcept {
    const auto& d = *d_;
    if (a == 0 || b == 0) return 0;
    if (d.n == 1) return static_cast<elem_t>(std::uint64_t{a} * b % d.p);
    if (d.tables) return d.exp[d.log[a] + d.log[b]];
    return d.schoolbook_mul(a, b);
}

elem_t Field::inv(elem_t a) const {
    const auto& d = *d_;
    if (a == 0) throw std::domain_error("inverse of zero in " + describe());
    if (d.n == 1) return static_cast<elem_t>(inv_mod(a, d.p));
    if (d.tables) {
        std::uint32_t l = d.log[a];
        return l == 0 ? 1 : d.exp[d.q - 1 - l];
    }
    return d.schoolbook_pow(a, d.q - 2);
}

elem_t Field::pow(elem_t a, std::uint64_t e) const noexcept {
    const auto& d = *d_;
    if (e == 0) return 1;
    if (a == 0) return 0;
    if (d.tables) {
        const std::uint64_t order = d.q - 1;
        return d.exp[static_cast<std::uint64_t>(d.log[a]) * (e % order) % order];
    }
    return d.schoolbook_pow(a, e);
}

bool Field::is_square(elem_t a) const noexcept {
    const auto& d = *d_;
    if (a == 0) return true;
    if (d.tables) return d.log[a] % 2 == 0;
    return d.schoolbook_pow(a, (d.q - 1) / 2) == 1;
}

std::string Field::describe() const {
    std::ostringstream os;
    if (d_->n == 1) {
        os << "F_" << d_->p;
    } else {
        os << "F_{" << d_->p << "^" << d_->n << "}[";
        for (std::size_t i = 0; i < d_->modulus.size(); ++i) os << (i ? "," : "") << d_->modulus[i];
        os << "]";
    }
    return os.str();
}

bool operator==(const Field& a, const Field& b) noexcept {
    return a.d_ == b.d_ || (a.d_->p == b.d_->p && a.d_->modulus == b.d_->modulus);
}

FqElement::FqElement(Field field, elem_t v) : field_(std::move(field)), v_(v) {
    if (!field_.contains(v_)) throw ValidationError("element index out of range for " + field_.describe());
}

namespace {
void same_field(const FqElement& a, const FqElement& b) {
    if (!(a.field() == b.field())) throw ValidationError("mixed-field arithmetic");
}
}  // namespace

FqElement FqElement::operator+(const FqElement& o) const {
    same_field(*this, o);
    return {field_, field_.add(v_, o.v_)};
}
FqElement FqElement::operator-(const FqElement& o) const {
    same_field(*this, o);
    return {field_, field_.sub(v_, o.v_)};
}
FqElement FqElement::operator*(const FqElement& o) const {
    same_field(*this, o);
    return {field_, field_.mul(v_, o.v_)};
}
FqElement FqElement::operator/(const FqElement& o) const {
    same_field(*this, o);
    return {field_, field_.div(v_, o.v_)};
}

bool is_square(const FqElement& a) noexcept { return a.field().is_square(a.value()); }

std::ostream& operator<<(std::ostream& os, const FqElement& a) {
    if (a.field().n() == 1) return os << a.value();
    auto c = a.coords();
    os << "[";
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    return os << "]";
}

FieldEmbedding::FieldEmbedding(Field small, Field large) : small_(std::move(small)), large_(std::move(large)) {
    if (small_.p() != large_.p() || large_.n() % small_.n() != 0)
        throw ValidationError("no embedding " + small_.describe() + " -> " + large_.describe());
    const auto& m = small_.modulus();
    elem_t root = 0;
    bool found = false;
    if (small_.n() == 1) {
        found = true;  // prime field maps identically
    } else {
        for (elem_t x = 0; x < large_.q() && !found; ++x) {
            elem_t acc = 0;
            for (std::size_t i = m.size(); i-- > 0;) acc = large_.add(large_.mul(acc, x), m[i]);
            if (acc == 0) {
                root = x;
                found = true;
            }
        }
    }
    if (!found) throw ConsistencyError("modulus has no root in extension");
    basis_image_.resize(small_.n());
    elem_t pw = 1;
    for (unsigned i = 0; i < small_.n(); ++i) {
        basis_image_[i] = pw;
        pw = large_.mul(pw, root);
    }
}

elem_t FieldEmbedding::operator()(elem_t a) const {
    if (small_.n() == 1) return a;
    auto c = small_.coords(a);
    elem_t r = 0;
    for (unsigned i = 0; i < c.size(); ++i)
        if (c[i] != 0) r = large_.add(r, large_.mul(c[i], basis_image_[i]));
    return r;
}

}  // namespace strata
