/**************************************************************************
 * gf.hpp
 *
 * Copyright 2026 The psca Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace psca {

class FieldError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public FieldError {
public:
    DivisionByZero() : FieldError("division by zero in finite field") {}
};

/// Element of GF(p^m) in polynomial basis. `value` packs the coefficient
/// vector as base-p digits, constant term in the lowest digit.
struct FieldElement {
    std::uint32_t value = 0;

    friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

/// GF(p^m) with a fixed primitive modulus and exp/log tables.
///
/// The modulus is the least monic primitive polynomial of degree m when
/// coefficient vectors are compared from x^(m-1) down to the constant
/// term; the primitive element is the class of x. For m = 1 the primitive
/// element is the least primitive root g mod p and the modulus is x - g.
class Field {
public:
    static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 20;

    static Field build(std::uint32_t p, std::uint32_t m);

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t degree() const { return m_; }
    std::uint32_t order() const { return q_; }

    /// Coefficients of the modulus, highest degree first (length m + 1).
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    FieldElement primitive() const { return exp_[1 % (q_ - 1)]; }

    FieldElement zero() const { return {0}; }
    FieldElement one() const { return {1}; }

    bool contains(FieldElement a) const { return a.value < q_; }
    FieldElement element(std::uint32_t value) const;
    /// Coefficient i is the coefficient of x^i.
    FieldElement from_coeffs(std::span<const std::uint32_t> coeffs) const;
    std::vector<std::uint32_t> coeffs(FieldElement a) const;

    FieldElement add(FieldElement a, FieldElement b) const;
    FieldElement sub(FieldElement a, FieldElement b) const;
    FieldElement neg(FieldElement a) const;
    FieldElement mul(FieldElement a, FieldElement b) const;
    FieldElement inv(FieldElement a) const;
    FieldElement div(FieldElement a, FieldElement b) const;
    FieldElement pow(FieldElement a, std::int64_t k) const;

    /// k in [0, q-2] with primitive^k = a.
    std::uint32_t log(FieldElement a) const;
    FieldElement exp(std::int64_t k) const;

    /// Total order used for canonical enumeration: 0 first, then by log.
    std::uint32_t ordinal(FieldElement a) const;
    FieldElement from_ordinal(std::uint32_t ord) const;

    std::string to_string(FieldElement a) const;

    friend bool operator==(const Field& a, const Field& b) {
        return a.p_ == b.p_ && a.m_ == b.m_ && a.modulus_ == b.modulus_;
    }

private:
    Field() = default;

    void check(FieldElement a) const;

    std::uint32_t p_ = 0;
    std::uint32_t m_ = 0;
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::vector<FieldElement> exp_;   // length 2(q-1)
    std::vector<std::uint32_t> log_;  // length q, log_[0] unused
};

bool is_prime(std::uint64_t n);

/// Decomposes q = p^m; returns false if q is not a prime power.
bool prime_power(std::uint64_t q, std::uint32_t& p, std::uint32_t& m);
bool is_prime_power(std::uint64_t q);

/// Field of order q (a prime power), see Field::build.
Field field_of_order(std::uint64_t q);

// Free-function spellings of the field operations.
inline FieldElement gf_add(FieldElement a, FieldElement b, const Field& f) { return f.add(a, b); }
inline FieldElement gf_neg(FieldElement a, const Field& f) { return f.neg(a); }
inline FieldElement gf_mul(FieldElement a, FieldElement b, const Field& f) { return f.mul(a, b); }
inline FieldElement gf_inv(FieldElement a, const Field& f) { return f.inv(a); }
inline std::uint32_t gf_discrete_log(FieldElement a, const Field& f) { return f.log(a); }

}  // namespace psca
