/**************************************************************************
 * combinatorics.hpp
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

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace psca {

using BigInt = boost::multiprecision::cpp_int;

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t out = 1;
    for (std::uint64_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

/// n (n-1) ... (n-k+1)
inline std::uint64_t falling_factorial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t out = 1;
    for (std::uint64_t i = 0; i < k; ++i) out *= n - i;
    return out;
}

inline std::uint64_t factorial(std::uint64_t n) { return falling_factorial(n, n); }

/// Narrowing from BigInt that refuses to truncate.
inline std::uint64_t to_u64(const BigInt& x) {
    if (x < 0 || x > std::numeric_limits<std::uint64_t>::max()) {
        throw std::overflow_error("integer does not fit in 64 bits");
    }
    return x.convert_to<std::uint64_t>();
}

/// Calls fn(const std::vector<uint32_t>& subset) for every k-subset of
/// [n] in lexicographic order, subset sorted ascending.
template <class Fn>
void for_each_combination(std::uint32_t n, std::uint32_t k, Fn&& fn) {
    if (k > n) return;
    std::vector<std::uint32_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0u);
    while (true) {
        fn(static_cast<const std::vector<std::uint32_t>&>(idx));
        std::int64_t i = static_cast<std::int64_t>(k) - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (std::uint32_t j = static_cast<std::uint32_t>(i) + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace psca
