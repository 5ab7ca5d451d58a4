/**************************************************************************
 * linalg.hpp
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

#include <cstddef>
#include <optional>
#include <vector>

#include "psca/gf.hpp"

namespace psca {

/// Dense row-major matrix over a Field.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<FieldElement> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

    static Matrix identity(std::size_t n, const Field& f);

    FieldElement& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    FieldElement at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    friend bool operator==(const Matrix&, const Matrix&) = default;
};

/// Reduces `m` in place to reduced row echelon form; returns the rank.
std::size_t row_reduce(Matrix& m, const Field& f);

std::size_t rank(Matrix m, const Field& f);
Matrix multiply(const Matrix& a, const Matrix& b, const Field& f);
std::vector<FieldElement> apply(const Matrix& a, const std::vector<FieldElement>& x, const Field& f);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& a, const Field& f);

/// Basis (as rows) of {x : a x = 0}.
std::vector<std::vector<FieldElement>> nullspace(const Matrix& a, const Field& f);

}  // namespace psca
