/**************************************************************************
 * linalg.cpp
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

#include "psca/linalg.hpp"

#include <stdexcept>

namespace psca {

Matrix Matrix::identity(std::size_t n, const Field& f) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
}

std::size_t row_reduce(Matrix& m, const Field& f) {
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols && pivot_row < m.rows; ++col) {
        std::size_t sel = pivot_row;
        while (sel < m.rows && m.at(sel, col).value == 0) ++sel;
        if (sel == m.rows) continue;
        if (sel != pivot_row) {
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(pivot_row, j));
        }
        const FieldElement scale = f.inv(m.at(pivot_row, col));
        for (std::size_t j = 0; j < m.cols; ++j) m.at(pivot_row, j) = f.mul(m.at(pivot_row, j), scale);
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == pivot_row || m.at(i, col).value == 0) continue;
            const FieldElement factor = m.at(i, col);
            for (std::size_t j = 0; j < m.cols; ++j) {
                m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(pivot_row, j)));
            }
        }
        ++pivot_row;
    }
    return pivot_row;
}

std::size_t rank(Matrix m, const Field& f) { return row_reduce(m, f); }

Matrix multiply(const Matrix& a, const Matrix& b, const Field& f) {
    if (a.cols != b.rows) throw std::invalid_argument("matrix shape mismatch");
    Matrix out(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t j = 0; j < b.cols; ++j) {
            FieldElement acc = f.zero();
            for (std::size_t k = 0; k < a.cols; ++k) acc = f.add(acc, f.mul(a.at(i, k), b.at(k, j)));
            out.at(i, j) = acc;
        }
    }
    return out;
}

std::vector<FieldElement> apply(const Matrix& a, const std::vector<FieldElement>& x, const Field& f) {
    if (a.cols != x.size()) throw std::invalid_argument("matrix shape mismatch");
    std::vector<FieldElement> out(a.rows, f.zero());
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t k = 0; k < a.cols; ++k) out[i] = f.add(out[i], f.mul(a.at(i, k), x[k]));
    }
    return out;
}

std::optional<Matrix> inverse(const Matrix& a, const Field& f) {
    if (a.rows != a.cols) throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = a.rows;
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n + i) = f.one();
    }
    row_reduce(aug, f);
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (aug.at(i, i) != f.one()) return std::nullopt;
        for (std::size_t j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
    }
    return out;
}

std::vector<std::vector<FieldElement>> nullspace(const Matrix& a, const Field& f) {
    Matrix m = a;
    const std::size_t r = row_reduce(m, f);
    std::vector<std::size_t> pivot_col(r);
    std::vector<bool> is_pivot(m.cols, false);
    for (std::size_t i = 0, col = 0; i < r; ++i) {
        while (m.at(i, col).value == 0) ++col;
        pivot_col[i] = col;
        is_pivot[col] = true;
    }
    std::vector<std::vector<FieldElement>> basis;
    for (std::size_t free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<FieldElement> v(m.cols, f.zero());
        v[free] = f.one();
        for (std::size_t i = 0; i < r; ++i) v[pivot_col[i]] = f.neg(m.at(i, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace psca
