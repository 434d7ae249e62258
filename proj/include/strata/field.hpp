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

#ifndef STRATA_FIELD_HPP
#define STRATA_FIELD_HPP

#include <cstdint>
#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace strata {

/*
 * Elements of F_q are packed as an integer v = c_0 + c_1 p + ... + c_{n-1} p^{n-1}
 * where (c_0, ..., c_{n-1}) are the coordinates in the power basis of the field
 * modulus. The prime subfield is therefore {0, ..., p-1} with its usual labels.
 */
using elem_t = std::uint32_t;

inline constexpr unsigned kMaxCharacteristic = 97;
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 31;
/* Log/exp/Zech tables are built for fields up to this order. */
inline constexpr std::uint64_t kTableCap = std::uint64_t{1} << 22;

bool is_prime(std::uint64_t n) noexcept;

namespace detail {
struct FieldData;
}

/*
 * Zech-logarithm view for inner loops. A nonzero element is stored as its discrete log
 * with respect to a fixed primitive element; `zero` is the sentinel for 0.
 */
struct ZechView {
    std::uint32_t order;  // q - 1
    std::uint32_t zero;   // sentinel, equal to q - 1
    const std::uint32_t* zech;
    const std::uint32_t* log;
    const elem_t* exp;

    std::uint32_t to_log(elem_t a) const noexcept { return log[a]; }
    elem_t from_log(std::uint32_t l) const noexcept { return l == zero ? 0 : exp[l]; }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
        if (a == zero || b == zero) return zero;
        std::uint32_t s = a + b;
        return s >= order ? s - order : s;
    }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
        if (a == zero) return b;
        if (b == zero) return a;
        std::uint32_t d = b >= a ? b - a : b + order - a;
        std::uint32_t z = zech[d];
        if (z == zero) return zero;
        std::uint32_t s = a + z;
        return s >= order ? s - order : s;
    }
};

/*
 * Immutable descriptor of F_{p^n} with a fixed monic irreducible modulus. Copies share
 * state. Field::make always returns the canonical modulus, so equal (p, n) means equal
 * modulus and serializations are reproducible.
 */
class Field {
   public:
    /* F_{p^n} with the lexicographically least monic irreducible modulus. Cached. */
    static Field make(unsigned p, unsigned n = 1);

    /*
     * Explicit modulus (low-to-high, monic, degree n). Irreducibility is verified.
     * build_tables = false forces schoolbook arithmetic; tests use it as a second route.
     */
    static Field with_modulus(unsigned p, std::vector<elem_t> modulus, bool build_tables = true);

    unsigned p() const noexcept;
    unsigned n() const noexcept;
    std::uint32_t q() const noexcept;
    const std::vector<elem_t>& modulus() const noexcept;
    bool has_tables() const noexcept;
    /* Requires has_tables(). */
    ZechView zech() const;

    elem_t zero() const noexcept { return 0; }
    elem_t one() const noexcept { return 1; }
    elem_t from_int(long long v) const noexcept;
    elem_t from_coords(std::span<const elem_t> coords) const;
    std::vector<elem_t> coords(elem_t a) const;
    bool contains(elem_t a) const noexcept { return a < q(); }

    elem_t add(elem_t a, elem_t b) const noexcept;
    elem_t sub(elem_t a, elem_t b) const noexcept;
    elem_t neg(elem_t a) const noexcept;
    elem_t mul(elem_t a, elem_t b) const noexcept;
    elem_t inv(elem_t a) const;
    elem_t div(elem_t a, elem_t b) const { return mul(a, inv(b)); }
    elem_t pow(elem_t a, std::uint64_t e) const noexcept;
    elem_t frobenius(elem_t a) const noexcept { return pow(a, p()); }
    bool is_square(elem_t a) const noexcept;

    /* "F_p" or "F_{p^n}[modulus]". */
    std::string describe() const;

    friend bool operator==(const Field& a, const Field& b) noexcept;

   private:
    explicit Field(std::shared_ptr<const detail::FieldData> d) : d_(std::move(d)) {}
    std::shared_ptr<const detail::FieldData> d_;
};

/* Lexicographically least monic irreducible of degree n over Z/p (low-to-high comparison). */
std::vector<elem_t> canonical_modulus(unsigned p, unsigned n);

/* Rabin's test over Z/p; coefficients low-to-high, monic. */
bool is_irreducible_mod_p(unsigned p, std::span<const elem_t> monic);

/* Value type pairing a field handle with an element; convenient outside hot loops. */
class FqElement {
   public:
    FqElement(Field field, elem_t v);
    static FqElement from_coords(const Field& field, std::span<const elem_t> coords) {
        return {field, field.from_coords(coords)};
    }

    const Field& field() const noexcept { return field_; }
    elem_t value() const noexcept { return v_; }
    std::vector<elem_t> coords() const { return field_.coords(v_); }
    bool is_zero() const noexcept { return v_ == 0; }

    FqElement operator+(const FqElement& o) const;
    FqElement operator-(const FqElement& o) const;
    FqElement operator-() const { return {field_, field_.neg(v_)}; }
    FqElement operator*(const FqElement& o) const;
    FqElement operator/(const FqElement& o) const;
    FqElement inverse() const { return {field_, field_.inv(v_)}; }
    FqElement pow(std::uint64_t e) const { return {field_, field_.pow(v_, e)}; }
    FqElement frobenius() const { return {field_, field_.frobenius(v_)}; }

    friend bool operator==(const FqElement& a, const FqElement& b) noexcept {
        return a.v_ == b.v_ && a.field_ == b.field_;
    }

   private:
    Field field_;
    elem_t v_;
};

bool is_square(const FqElement& a) noexcept;

std::ostream& operator<<(std::ostream& os, const FqElement& a);

/*
 * Embedding F_{p^m} -> F_{p^n} for m | n, sending the generator of the small field to
 * a fixed root of its modulus in the large one.
 */
class FieldEmbedding {
   public:
    FieldEmbedding(Field small, Field large);
    const Field& source() const noexcept { return small_; }
    const Field& target() const noexcept { return large_; }
    elem_t operator()(elem_t a) const;

   private:
    Field small_;
    Field large_;
    std::vector<elem_t> basis_image_;
};

}  // namespace strata

#endif
