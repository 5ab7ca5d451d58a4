/**************************************************************************
 * gf.cpp
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

#include "psca/gf.hpp"

#include <sstream>

namespace psca {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

bool prime_power(std::uint64_t q, std::uint32_t& p, std::uint32_t& m) {
    if (q < 2) return false;
    std::uint64_t d = 2;
    while (d * d <= q && q % d != 0) ++d;
    if (q % d != 0) d = q;
    std::uint32_t e = 0;
    std::uint64_t rest = q;
    while (rest % d == 0) {
        rest /= d;
        ++e;
    }
    if (rest != 1) return false;
    p = static_cast<std::uint32_t>(d);
    m = e;
    return true;
}

bool is_prime_power(std::uint64_t q) {
    std::uint32_t p = 0, m = 0;
    return prime_power(q, p, m);
}

Field field_of_order(std::uint64_t q) {
    std::uint32_t p = 0, m = 0;
    if (!prime_power(q, p, m)) {
        throw FieldError("field order " + std::to_string(q) + " is not a prime power");
    }
    return Field::build(p, m);
}

namespace {

// Multiplies the residue `state` (base-p digits) by x modulo the monic
// polynomial with lower coefficients `low` (low[j] = coefficient of x^j).
std::uint32_t times_x(std::uint32_t state, std::span<const std::uint32_t> low, std::uint32_t p,
                      std::vector<std::uint32_t>& digits) {
    const std::size_t m = low.size();
    for (std::size_t j = 0; j < m; ++j) {
        digits[j] = state % p;
        state /= p;
    }
    const std::uint32_t top = digits[m - 1];
    for (std::size_t j = m - 1; j > 0; --j) digits[j] = digits[j - 1];
    digits[0] = 0;
    std::uint32_t out = 0;
    for (std::size_t j = m; j-- > 0;) {
        const std::uint32_t d = (digits[j] + (p - (top * low[j]) % p)) % p;
        out = out * p + d;
    }
    return out;
}

}  // namespace

Field Field::build(std::uint32_t p, std::uint32_t m) {
    if (!is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
    if (m < 1) throw FieldError("extension degree must be at least 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxOrder) throw FieldError("field order exceeds 2^20");
    }

    Field f;
    f.p_ = p;
    f.m_ = m;
    f.q_ = static_cast<std::uint32_t>(q);
    const std::uint32_t units = f.q_ - 1;
    f.exp_.assign(2 * std::size_t{units}, FieldElement{});
    f.log_.assign(f.q_, 0);

    if (m == 1) {
        std::uint32_t g = 1;
        for (;; ++g) {
            std::uint64_t x = g % p;
            std::uint32_t order = 1;
            while (x != 1) {
                x = x * g % p;
                ++order;
            }
            if (order == units) break;
        }
        f.modulus_ = {1, (p - g) % p};
        std::uint64_t x = 1;
        for (std::uint32_t k = 0; k < units; ++k) {
            f.exp_[k] = f.exp_[k + units] = FieldElement{static_cast<std::uint32_t>(x)};
            f.log_[x] = k;
            x = x * g % p;
        }
        return f;
    }

    // Candidates in lexicographic order: the integer c read as base-p digits
    // has the x^(m-1) coefficient as its most significant digit.
    std::vector<std::uint32_t> low(m), digits(m);
    for (std::uint32_t c = 0; c < f.q_; ++c) {
        std::uint32_t rest = c;
        for (std::uint32_t j = 0; j < m; ++j) {
            low[j] = rest % p;
            rest /= p;
        }
        if (low[0] == 0) continue;  // divisible by x

        std::uint32_t state = 1;
        std::uint32_t k = 0;
        bool primitive = true;
        do {
            state = times_x(state, low, p, digits);
            ++k;
            if (state == 1 && k < units) {
                primitive = false;
                break;
            }
        } while (k < units);
        if (!primitive || state != 1) continue;

        f.modulus_.assign(m + 1, 0);
        f.modulus_[0] = 1;
        for (std::uint32_t j = 0; j < m; ++j) f.modulus_[m - j] = low[j];
        state = 1;
        for (std::uint32_t e = 0; e < units; ++e) {
            f.exp_[e] = f.exp_[e + units] = FieldElement{state};
            f.log_[state] = e;
            state = times_x(state, low, p, digits);
        }
        return f;
    }
    throw FieldError("no primitive polynomial found");  // unreachable for valid p, m
}

void Field::check(FieldElement a) const {
    if (a.value >= q_) {
        throw FieldError("element " + std::to_string(a.value) + " does not belong to GF(" +
                         std::to_string(q_) + ")");
    }
}

FieldElement Field::element(std::uint32_t value) const {
    check(FieldElement{value});
    return FieldElement{value};
}

FieldElement Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
    if (coeffs.size() != m_) throw FieldError("coefficient vector has wrong length");
    std::uint32_t v = 0;
    for (std::size_t j = m_; j-- > 0;) {
        if (coeffs[j] >= p_) throw FieldError("coefficient out of range");
        v = v * p_ + coeffs[j];
    }
    return FieldElement{v};
}

std::vector<std::uint32_t> Field::coeffs(FieldElement a) const {
    check(a);
    std::vector<std::uint32_t> out(m_);
    for (std::uint32_t j = 0; j < m_; ++j) {
        out[j] = a.value % p_;
        a.value /= p_;
    }
    return out;
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
    check(a);
    check(b);
    if (p_ == 2) return FieldElement{a.value ^ b.value};
    if (m_ == 1) return FieldElement{(a.value + b.value) % p_};
    std::uint32_t out = 0, scale = 1;
    for (std::uint32_t j = 0; j < m_; ++j) {
        out += ((a.value % p_ + b.value % p_) % p_) * scale;
        a.value /= p_;
        b.value /= p_;
        scale *= p_;
    }
    return FieldElement{out};
}

FieldElement Field::neg(FieldElement a) const {
    check(a);
    if (p_ == 2) return a;
    std::uint32_t out = 0, scale = 1;
    for (std::uint32_t j = 0; j < m_; ++j) {
        out += ((p_ - a.value % p_) % p_) * scale;
        a.value /= p_;
        scale *= p_;
    }
    return FieldElement{out};
}

FieldElement Field::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement Field::mul(FieldElement a, FieldElement b) const {
    check(a);
    check(b);
    if (a.value == 0 || b.value == 0) return zero();
    return exp_[log_[a.value] + log_[b.value]];
}

FieldElement Field::inv(FieldElement a) const {
    check(a);
    if (a.value == 0) throw DivisionByZero();
    const std::uint32_t units = q_ - 1;
    return exp_[(units - log_[a.value]) % units];
}

FieldElement Field::div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

FieldElement Field::pow(FieldElement a, std::int64_t k) const {
    check(a);
    if (a.value == 0) {
        if (k < 0) throw DivisionByZero();
        return k == 0 ? one() : zero();
    }
    return exp(static_cast<std::int64_t>(log_[a.value]) * k);
}

std::uint32_t Field::log(FieldElement a) const {
    check(a);
    if (a.value == 0) throw DivisionByZero();
    return log_[a.value];
}

FieldElement Field::exp(std::int64_t k) const {
    const std::int64_t units = q_ - 1;
    std::int64_t e = k % units;
    if (e < 0) e += units;
    return exp_[static_cast<std::size_t>(e)];
}

std::uint32_t Field::ordinal(FieldElement a) const {
    check(a);
    return a.value == 0 ? 0 : log_[a.value] + 1;
}

FieldElement Field::from_ordinal(std::uint32_t ord) const {
    if (ord >= q_) throw FieldError("ordinal out of range");
    return ord == 0 ? zero() : exp_[ord - 1];
}

std::string Field::to_string(FieldElement a) const {
    if (m_ == 1) return std::to_string(a.value);
    const auto c = coeffs(a);
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = m_; j-- > 0;) {
        if (c[j] == 0) continue;
        if (!first) os << '+';
        first = false;
        if (j == 0 || c[j] != 1) os << c[j];
        if (j >= 1) os << 'x';
        if (j >= 2) os << '^' << j;
    }
    if (first) os << '0';
    return os.str();
}

}  // namespace psca
