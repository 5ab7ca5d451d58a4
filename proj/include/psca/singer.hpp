/**************************************************************************
 * singer.hpp
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
#include <span>
#include <stdexcept>
#include <vector>

#include "psca/grp.hpp"
#include "psca/projgeom.hpp"

namespace psca {

class DifferenceSetError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Some nonzero residue is not a difference of two elements.
class NotADifferenceSet : public DifferenceSetError {
public:
    using DifferenceSetError::DifferenceSetError;
};

/// Every nonzero residue is a difference, but some more than once.
class NonPlanarDifferenceSet : public DifferenceSetError {
public:
    using DifferenceSetError::DifferenceSetError;
};

/// Planar difference set of Z_r, r = q^2 + q + 1, sorted with elems[0] = 0.
struct DifferenceSet {
    std::uint64_t q = 0;
    std::uint64_t r = 0;
    std::vector<std::uint32_t> elems;

    friend bool operator==(const DifferenceSet&, const DifferenceSet&) = default;
};

/// Checks the difference property and normalizes: residues are reduced mod
/// r, sorted, and translated so the least element is 0.
DifferenceSet validate_difference_set(std::uint64_t q, std::span<const std::int64_t> elems);

/// {k mod r : w^k in span{1, w}} where w is the primitive element of
/// GF(q^3) = GF(p^(3m)) from Field::build.
DifferenceSet singer_difference_set(std::uint64_t q);

/// a_k with the index taken mod q+1 (the value is not shifted).
std::uint32_t cyclic_index(const DifferenceSet& d, std::int64_t k);

/// The translates D + j, j = 0..r-1, each sorted.
std::vector<std::vector<std::uint32_t>> translate_lines(const DifferenceSet& d);

struct SingerLabeling {
    Labeling psi;
    DifferenceSet difference_set;
    /// lines[j] = sorted(D + j)
    std::vector<std::vector<std::uint32_t>> lines;
};

/// Labels the point spanned by (c0, c1, c2) with the discrete log, mod r,
/// of c0 + c1 w + c2 w^2 in GF(q^3). Lines become the translates of the
/// Singer set; this is verified before returning.
SingerLabeling labeling_from_singer(const Geometry& g);

/// Labeling whose lines are the translates of a user-supplied planar
/// difference set. The set must be an affine image u D + c of the Singer
/// set (u a unit mod r); otherwise DifferenceSetError is thrown.
SingerLabeling labeling_from_difference_set(const Geometry& g, const DifferenceSet& d);

}  // namespace psca
