// Copyright 2026 The lgns Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file sparse.hpp
 * @brief Compressed sparse row matrices built from (row, col, value)
 *        triplets.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

namespace lgns {

class CsrMatrix {
public:
    CsrMatrix() = default;
    CsrMatrix(std::size_t rows, std::size_t cols, std::vector<std::size_t> row_ptr, std::vector<std::uint32_t> col_idx,
              std::vector<double> values)
        : rows_(rows), cols_(cols), row_ptr_(std::move(row_ptr)), col_idx_(std::move(col_idx)),
          values_(std::move(values))
    {
        if (row_ptr_.size() != rows_ + 1 || col_idx_.size() != values_.size() || row_ptr_.back() != values_.size()) {
            throw std::invalid_argument("CsrMatrix: inconsistent storage");
        }
    }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] std::size_t nnz() const { return values_.size(); }

    [[nodiscard]] std::span<const std::size_t> row_ptr() const { return row_ptr_; }
    [[nodiscard]] std::span<const std::uint32_t> col_idx() const { return col_idx_; }
    [[nodiscard]] std::span<const double> values() const { return values_; }
    [[nodiscard]] std::span<double> values() { return values_; }

    /// y = A x
    void multiply(std::span<const double> x, std::span<double> y) const
    {
        for (std::size_t i = 0; i < rows_; ++i) {
            double s = 0.0;
            for (std::size_t p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p) s += values_[p] * x[col_idx_[p]];
            y[i] = s;
        }
    }

    [[nodiscard]] std::vector<double> operator*(std::span<const double> x) const
    {
        std::vector<double> y(rows_);
        multiply(x, y);
        return y;
    }

    /// Entry (i, j), zero if not stored.
    [[nodiscard]] double at(std::size_t i, std::size_t j) const
    {
        const auto first = col_idx_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[i]);
        const auto last = col_idx_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[i + 1]);
        const auto it = std::lower_bound(first, last, static_cast<std::uint32_t>(j));
        return (it != last && *it == j) ? values_[static_cast<std::size_t>(it - col_idx_.begin())] : 0.0;
    }

    [[nodiscard]] std::vector<double> diagonal() const
    {
        std::vector<double> d(std::min(rows_, cols_));
        for (std::size_t i = 0; i < d.size(); ++i) d[i] = at(i, i);
        return d;
    }

    [[nodiscard]] CsrMatrix transpose() const;

    CsrMatrix& operator*=(double s)
    {
        for (double& v : values_) v *= s;
        return *this;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::size_t> row_ptr_{0};
    std::vector<std::uint32_t> col_idx_;
    std::vector<double> values_;
};

/// Accumulates scattered contributions; duplicates are summed on compress().
/// Summation order is the insertion order, so results are reproducible.
class TripletList {
public:
    void reserve(std::size_t n) { entries_.reserve(n); }

    void add(std::size_t row, std::size_t col, double value) { entries_.push_back({row, col, value}); }

    /// Scatter a whole matrix at an offset, optionally transposed.
    void add_block(const CsrMatrix& m, std::size_t row_offset, std::size_t col_offset, bool transposed = false,
                   double scale = 1.0)
    {
        const auto rp = m.row_ptr();
        const auto ci = m.col_idx();
        const auto vals = m.values();
        for (std::size_t i = 0; i < m.rows(); ++i) {
            for (std::size_t p = rp[i]; p < rp[i + 1]; ++p) {
                const std::size_t r = transposed ? ci[p] : i;
                const std::size_t c = transposed ? i : ci[p];
                add(row_offset + r, col_offset + c, scale * vals[p]);
            }
        }
    }

    [[nodiscard]] CsrMatrix compress(std::size_t rows, std::size_t cols) const
    {
        std::vector<std::size_t> order(entries_.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [this](std::size_t a, std::size_t b) {
            const auto& ea = entries_[a];
            const auto& eb = entries_[b];
            return ea.row != eb.row ? ea.row < eb.row : ea.col < eb.col;
        });

        std::vector<std::size_t> row_ptr(rows + 1, 0);
        std::vector<std::uint32_t> col_idx;
        std::vector<double> values;
        col_idx.reserve(entries_.size());
        values.reserve(entries_.size());
        std::size_t last_row = static_cast<std::size_t>(-1);
        std::size_t last_col = static_cast<std::size_t>(-1);
        for (std::size_t idx : order) {
            const auto& e = entries_[idx];
            if (e.row >= rows || e.col >= cols) throw std::out_of_range("TripletList: entry outside matrix");
            if (e.row == last_row && e.col == last_col) {
                values.back() += e.value;
                continue;
            }
            col_idx.push_back(static_cast<std::uint32_t>(e.col));
            values.push_back(e.value);
            ++row_ptr[e.row + 1];
            last_row = e.row;
            last_col = e.col;
        }
        for (std::size_t i = 0; i < rows; ++i) row_ptr[i + 1] += row_ptr[i];
        return {rows, cols, std::move(row_ptr), std::move(col_idx), std::move(values)};
    }

private:
    struct Entry {
        std::size_t row;
        std::size_t col;
        double value;
    };
    std::vector<Entry> entries_;
};

inline CsrMatrix CsrMatrix::transpose() const
{
    TripletList t;
    t.reserve(nnz());
    t.add_block(*this, 0, 0, true);
    return t.compress(cols_, rows_);
}

/// max_{ij} |A_ij − A_ji|
inline double symmetry_defect(const CsrMatrix& a)
{
    if (a.rows() != a.cols()) return std::numeric_limits<double>::infinity();
    const CsrMatrix at = a.transpose();
    double d = 0.0;
    const auto rp = a.row_ptr();
    const auto ci = a.col_idx();
    const auto v = a.values();
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t p = rp[i]; p < rp[i + 1]; ++p) d = std::max(d, std::abs(v[p] - at.at(i, ci[p])));
    // Entries stored only in the transpose.
    const auto trp = at.row_ptr();
    const auto tci = at.col_idx();
    const auto tv = at.values();
    for (std::size_t i = 0; i < at.rows(); ++i)
        for (std::size_t p = trp[i]; p < trp[i + 1]; ++p) d = std::max(d, std::abs(tv[p] - a.at(i, tci[p])));
    return d;
}

/// Keep the rows/columns whose map entry is non-negative, renumbered by the map.
inline CsrMatrix extract(const CsrMatrix& a, std::span<const std::int64_t> row_map, std::size_t new_rows,
                         std::span<const std::int64_t> col_map, std::size_t new_cols)
{
    TripletList t;
    t.reserve(a.nnz());
    const auto rp = a.row_ptr();
    const auto ci = a.col_idx();
    const auto v = a.values();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (row_map[i] < 0) continue;
        for (std::size_t p = rp[i]; p < rp[i + 1]; ++p) {
            if (col_map[ci[p]] < 0) continue;
            t.add(static_cast<std::size_t>(row_map[i]), static_cast<std::size_t>(col_map[ci[p]]), v[p]);
        }
    }
    return t.compress(new_rows, new_cols);
}

inline double dot(std::span<const double> a, std::span<const double> b)
{
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

}  // namespace lgns
