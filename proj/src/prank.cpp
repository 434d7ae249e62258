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

#include "strata/prank.hpp"

#include <numeric>

#include "strata/error.hpp"

namespace strata {

Rational::Rational(long long num, long long den) {
    if (den == 0) throw ValidationError("rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long d = std::gcd(num, den);
    num_ = num / d;
    den_ = den / d;
}

Rational operator+(const Rational& a, const Rational& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

Rational operator-(const Rational& a, const Rational& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

Rational operator*(const Rational& a, const Rational& b) { return {a.num_ * b.num_, a.den_ * b.den_}; }

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    os << r.num();
    if (r.den() != 1) os << '/' << r.den();
    return os;
}

HasseWittMatrix hasse_witt(const HyperellipticCurve& c) {
    const Field& F = c.field();
    const unsigned p = F.p(), g = c.genus();
    FqPoly h = poly_pow(c.f(), (p - 1) / 2);
    HasseWittMatrix hw{F, g, FqMatrix(g, std::vector<elem_t>(g, 0))};
    for (unsigned i = 1; i <= g; ++i)
        for (unsigned j = 1; j <= g; ++j) hw.a[i - 1][j - 1] = h.coeff(std::size_t{i} * p - j);
    return hw;
}

std::size_t matrix_rank(const Field& F, FqMatrix m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        const elem_t inv = F.inv(m[rank][c]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (m[r][c] == 0) continue;
            const elem_t k = F.mul(m[r][c], inv);
            for (std::size_t j = c; j < cols; ++j) m[r][j] = F.sub(m[r][j], F.mul(k, m[rank][j]));
        }
        ++rank;
    }
    return rank;
}

FqMatrix matrix_mul(const Field& F, const FqMatrix& a, const FqMatrix& b) {
    const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    FqMatrix out(n, std::vector<elem_t>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) out[i][j] = F.add(out[i][j], F.mul(a[i][t], b[t][j]));
        }
    return out;
}

FqMatrix frobenius_twist(const Field& F, const FqMatrix& a, unsigned k) {
    if (F.n() == 1 || k % F.n() == 0) return a;
    std::uint64_t e = 1;
    for (unsigned i = 0; i < k % F.n(); ++i) e *= F.p();
    FqMatrix out = a;
    for (auto& row : out)
        for (auto& x : row) x = F.pow(x, e);
    return out;
}

unsigned p_rank(const HasseWittMatrix& hw) {
    FqMatrix prod = hw.a;
    for (unsigned k = 1; k < hw.g; ++k) prod = matrix_mul(hw.field, prod, frobenius_twist(hw.field, hw.a, k));
    return static_cast<unsigned>(matrix_rank(hw.field, std::move(prod)));
}

unsigned p_rank(const HyperellipticCurve& c) { return p_rank(hasse_witt(c)); }

unsigned NewtonPolygon::width() const noexcept {
    unsigned w = 0;
    for (const auto& s : segments) w += s.length;
    return w;
}

Rational NewtonPolygon::height() const {
    Rational h;
    for (const auto& s : segments) h = h + s.slope * Rational(s.length);
    return h;
}

bool NewtonPolygon::is_symmetric() const {
    const std::size_t n = segments.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Segment& a = segments[i];
        const Segment& b = segments[n - 1 - i];
        if (a.length != b.length || a.slope + b.slope != Rational(1)) return false;
    }
    return true;
}

std::ostream& operator<<(std::ostream& os, const NewtonPolygon& np) {
    os << '{';
    for (std::size_t i = 0; i < np.segments.size(); ++i) {
        if (i) os << ", ";
        os << np.segments[i].slope << 'x' << np.segments[i].length;
    }
    return os << '}';
}

NewtonPolygon newton_polygon(const LPolynomial& L, unsigned p, unsigned n) {
    if (!is_prime(p) || n < 1) throw ValidationError("newton polygon: bad characteristic or degree");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < n; ++i) q *= p;
    if (q != L.q) throw ValidationError("newton polygon: q != p^n");
    if (L.a.empty() || L.a[0] == 0) throw ValidationError("newton polygon: a_0 must be nonzero");

    // points (i, v_p(a_i)) in units of 1/n vertically
    std::vector<std::pair<long long, long long>> pts;
    const BigInt P = p;
    for (std::size_t i = 0; i < L.a.size(); ++i) {
        if (L.a[i] == 0) continue;
        BigInt r;
        long long v = static_cast<long long>(mpz_remove(r.get_mpz_t(), L.a[i].get_mpz_t(), P.get_mpz_t()));
        pts.emplace_back(static_cast<long long>(i), v);
    }
    // Andrew's monotone chain, lower hull
    std::vector<std::pair<long long, long long>> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull.back();
            long long cross = (b.first - a.first) * (pt.second - a.second) - (b.second - a.second) * (pt.first - a.first);
            if (cross <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(pt);
    }
    NewtonPolygon np;
    for (std::size_t i = 1; i < hull.size(); ++i) {
        long long dx = hull[i].first - hull[i - 1].first;
        long long dy = hull[i].second - hull[i - 1].second;
        np.segments.push_back({Rational(dy, dx * static_cast<long long>(n)), static_cast<unsigned>(dx)});
    }
    return np;
}

unsigned slope_zero_length(const NewtonPolygon& np) {
    for (const auto& s : np.segments)
        if (s.slope == Rational(0)) return s.length;
    return 0;
}

NpClass classify(const NewtonPolygon& np) {
    bool only01 = true, onlyhalf = true;
    for (const auto& s : np.segments) {
        if (s.slope != Rational(0) && s.slope != Rational(1)) only01 = false;
        if (s.slope != Rational(1, 2)) onlyhalf = false;
    }
    if (only01) return NpClass::ordinary;
    if (onlyhalf) return NpClass::supersingular;
    return NpClass::other;
}

std::string to_string(NpClass c) {
    switch (c) {
        case NpClass::ordinary:
            return "ordinary";
        case NpClass::supersingular:
            return "supersingular";
        default:
            return "other";
    }
}

}  // namespace strata
