// Copyright 2026 The qverify Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qverify/linalg.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace qverify {

bool is_power_of_two(std::size_t n) {
    return std::has_single_bit(n);
}

int log2_exact(std::size_t n) {
    if (!is_power_of_two(n)) {
        throw std::invalid_argument(std::to_string(n) + " is not a power of two");
    }
    return std::countr_zero(n);
}

StateVector::StateVector(std::vector<double> amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (!is_power_of_two(amplitudes_.size())) {
        throw std::invalid_argument(
            "state vector length " + std::to_string(amplitudes_.size()) + " is not a power of two");
    }
}

StateVector StateVector::basis(std::size_t dim, std::size_t index) {
    if (index >= dim) {
        throw std::out_of_range("basis index out of range");
    }
    std::vector<double> amps(dim, 0.0);
    amps[index] = 1.0;
    return StateVector(std::move(amps));
}

double StateVector::norm_squared() const {
    double total = 0;
    for (double a : amplitudes_) {
        total += a * a;
    }
    return total;
}

bool StateVector::is_normalized(double tol) const {
    return std::abs(norm_squared() - 1.0) <= tol;
}

StateVector StateVector::negated() const {
    std::vector<double> out(amplitudes_.size());
    std::transform(amplitudes_.begin(), amplitudes_.end(), out.begin(), [](double a) { return -a; });
    return StateVector(std::move(out));
}

MatrixBuilder::MatrixBuilder(std::size_t dim, std::size_t expected_nonzeros) {
    if (dim == 0 || dim > kMaxDimension) {
        throw std::invalid_argument("matrix dimension " + std::to_string(dim) + " outside [1, 2^16]");
    }
    m_.dim_ = dim;
    m_.row_start_.reserve(dim + 1);
    m_.columns_.reserve(expected_nonzeros);
    m_.values_.reserve(expected_nonzeros);
}

void MatrixBuilder::push(std::uint32_t col, double value) {
    if (rows_done_ >= m_.dim_ || col >= m_.dim_) {
        throw std::out_of_range("matrix entry out of range");
    }
    if (m_.columns_.size() > m_.row_start_.back() && m_.columns_.back() >= col) {
        throw std::invalid_argument("columns must be strictly increasing within a row");
    }
    if (value == 0.0) {
        return;
    }
    m_.columns_.push_back(col);
    m_.values_.push_back(value);
}

void MatrixBuilder::end_row() {
    if (rows_done_ >= m_.dim_) {
        throw std::out_of_range("too many rows");
    }
    m_.row_start_.push_back(m_.columns_.size());
    rows_done_++;
}

SquareMatrix MatrixBuilder::finish() && {
    if (rows_done_ != m_.dim_) {
        throw std::logic_error("matrix finished with missing rows");
    }
    return std::move(m_);
}

SquareMatrix SquareMatrix::identity(std::size_t dim) {
    MatrixBuilder b(dim, dim);
    for (std::size_t i = 0; i < dim; i++) {
        b.push(static_cast<std::uint32_t>(i), 1.0);
        b.end_row();
    }
    return std::move(b).finish();
}

SquareMatrix SquareMatrix::zeros(std::size_t dim) {
    MatrixBuilder b(dim);
    for (std::size_t i = 0; i < dim; i++) {
        b.end_row();
    }
    return std::move(b).finish();
}

SquareMatrix SquareMatrix::from_dense(std::size_t dim, std::span<const double> entries) {
    if (entries.size() != dim * dim) {
        throw std::invalid_argument(
            "expected " + std::to_string(dim * dim) + " entries for a " + std::to_string(dim) + "x" +
            std::to_string(dim) + " matrix, got " + std::to_string(entries.size()));
    }
    MatrixBuilder b(dim);
    for (std::size_t i = 0; i < dim; i++) {
        for (std::size_t j = 0; j < dim; j++) {
            b.push(static_cast<std::uint32_t>(j), entries[i * dim + j]);
        }
        b.end_row();
    }
    return std::move(b).finish();
}

SquareMatrix SquareMatrix::from_rows(const std::vector<std::vector<double>> &rows) {
    std::vector<double> flat;
    flat.reserve(rows.size() * rows.size());
    for (const auto &row : rows) {
        if (row.size() != rows.size()) {
            throw std::invalid_argument("matrix rows must all have length equal to the row count");
        }
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return from_dense(rows.size(), flat);
}

SquareMatrix SquareMatrix::diagonal(std::span<const double> values) {
    MatrixBuilder b(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); i++) {
        b.push(static_cast<std::uint32_t>(i), values[i]);
        b.end_row();
    }
    return std::move(b).finish();
}

double SquareMatrix::at(std::size_t row, std::size_t col) const {
    if (row >= dim_ || col >= dim_) {
        throw std::out_of_range("matrix index out of range");
    }
    auto cols = row_columns(row);
    auto it = std::lower_bound(cols.begin(), cols.end(), static_cast<std::uint32_t>(col));
    if (it == cols.end() || *it != col) {
        return 0.0;
    }
    return row_values(row)[it - cols.begin()];
}

std::vector<double> SquareMatrix::dense() const {
    std::vector<double> out(dim_ * dim_, 0.0);
    for (std::size_t i = 0; i < dim_; i++) {
        auto cols = row_columns(i);
        auto vals = row_values(i);
        for (std::size_t e = 0; e < cols.size(); e++) {
            out[i * dim_ + cols[e]] = vals[e];
        }
    }
    return out;
}

SquareMatrix SquareMatrix::with_entry(std::size_t row, std::size_t col, double value) const {
    if (row >= dim_ || col >= dim_) {
        throw std::out_of_range("matrix index out of range");
    }
    MatrixBuilder b(dim_, nonzeros() + 1);
    for (std::size_t i = 0; i < dim_; i++) {
        auto cols = row_columns(i);
        auto vals = row_values(i);
        bool placed = i != row;
        for (std::size_t e = 0; e < cols.size(); e++) {
            if (!placed && cols[e] >= col) {
                b.push(static_cast<std::uint32_t>(col), value);
                placed = true;
                if (cols[e] == col) {
                    continue;
                }
            }
            b.push(cols[e], vals[e]);
        }
        if (!placed) {
            b.push(static_cast<std::uint32_t>(col), value);
        }
        b.end_row();
    }
    return std::move(b).finish();
}

SquareMatrix SquareMatrix::transposed() const {
    std::vector<std::size_t> counts(dim_ + 1, 0);
    for (auto c : columns_) {
        counts[c + 1]++;
    }
    for (std::size_t i = 0; i < dim_; i++) {
        counts[i + 1] += counts[i];
    }
    SquareMatrix t;
    t.dim_ = dim_;
    t.row_start_ = counts;
    t.columns_.resize(columns_.size());
    t.values_.resize(values_.size());
    std::vector<std::size_t> cursor(counts.begin(), counts.end() - 1);
    for (std::size_t i = 0; i < dim_; i++) {
        for (std::size_t e = row_start_[i]; e < row_start_[i + 1]; e++) {
            std::size_t dst = cursor[columns_[e]]++;
            t.columns_[dst] = static_cast<std::uint32_t>(i);
            t.values_[dst] = values_[e];
        }
    }
    return t;
}

StateVector apply(const SquareMatrix &m, const StateVector &v) {
    if (m.dim() != v.size()) {
        throw std::invalid_argument(
            "cannot apply a " + std::to_string(m.dim()) + "-dimensional matrix to a vector of length " +
            std::to_string(v.size()));
    }
    std::vector<double> out(m.dim(), 0.0);
    for (std::size_t i = 0; i < m.dim(); i++) {
        auto cols = m.row_columns(i);
        auto vals = m.row_values(i);
        double acc = 0;
        for (std::size_t e = 0; e < cols.size(); e++) {
            acc += vals[e] * v[cols[e]];
        }
        out[i] = acc;
    }
    return StateVector(std::move(out));
}

SquareMatrix tensor(const SquareMatrix &a, const SquareMatrix &b) {
    std::size_t bd = b.dim();
    std::size_t dim = a.dim() * bd;
    MatrixBuilder out(dim, a.nonzeros() * b.nonzeros());
    for (std::size_t i = 0; i < a.dim(); i++) {
        auto a_cols = a.row_columns(i);
        auto a_vals = a.row_values(i);
        for (std::size_t k = 0; k < bd; k++) {
            auto b_cols = b.row_columns(k);
            auto b_vals = b.row_values(k);
            for (std::size_t ea = 0; ea < a_cols.size(); ea++) {
                for (std::size_t eb = 0; eb < b_cols.size(); eb++) {
                    out.push(static_cast<std::uint32_t>(a_cols[ea] * bd + b_cols[eb]), a_vals[ea] * b_vals[eb]);
                }
            }
            out.end_row();
        }
    }
    return std::move(out).finish();
}

namespace {

double hadamard_scale(int t) {
    return std::sqrt(std::ldexp(1.0, -t));
}

void check_hadamard_power(int t) {
    if (t < 1 || t > kMaxHadamardPower) {
        throw std::invalid_argument(
            "Hadamard power " + std::to_string(t) + " outside [1, " + std::to_string(kMaxHadamardPower) + "]");
    }
}

}  // namespace

SquareMatrix hadamard_power(int t) {
    check_hadamard_power(t);
    std::size_t dim = std::size_t{1} << t;
    double scale = hadamard_scale(t);
    MatrixBuilder b(dim, dim * dim);
    for (std::size_t i = 0; i < dim; i++) {
        for (std::size_t j = 0; j < dim; j++) {
            b.push(static_cast<std::uint32_t>(j), (std::popcount(i & j) & 1) ? -scale : scale);
        }
        b.end_row();
    }
    return std::move(b).finish();
}

bool is_hadamard_power(const SquareMatrix &m, int t) {
    if (t < 1 || t > kMaxHadamardPower) {
        return false;
    }
    std::size_t dim = std::size_t{1} << t;
    if (m.dim() != dim || m.nonzeros() != dim * dim) {
        return false;
    }
    double scale = hadamard_scale(t);
    for (std::size_t i = 0; i < dim; i++) {
        auto vals = m.row_values(i);
        for (std::size_t j = 0; j < dim; j++) {
            if (vals[j] != ((std::popcount(i & j) & 1) ? -scale : scale)) {
                return false;
            }
        }
    }
    return true;
}

void fast_hadamard_apply(std::span<double> v) {
    int t = log2_exact(v.size());
    for (std::size_t half = 1; half < v.size(); half <<= 1) {
        for (std::size_t block = 0; block < v.size(); block += 2 * half) {
            for (std::size_t j = block; j < block + half; j++) {
                double lo = v[j];
                double hi = v[j + half];
                v[j] = lo + hi;
                v[j + half] = lo - hi;
            }
        }
    }
    if (t > 0) {
        double scale = hadamard_scale(t);
        for (double &x : v) {
            x *= scale;
        }
    }
}

namespace {

double dot(const double *a, const double *b, std::size_t n) {
    double s0 = 0, s1 = 0, s2 = 0, s3 = 0;
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        s0 += a[k] * b[k];
        s1 += a[k + 1] * b[k + 1];
        s2 += a[k + 2] * b[k + 2];
        s3 += a[k + 3] * b[k + 3];
    }
    for (; k < n; k++) {
        s0 += a[k] * b[k];
    }
    return (s0 + s1) + (s2 + s3);
}

// Stops scanning once the running maximum exceeds `stop_above`. Rows i are
// taken in blocks so each row j is streamed from memory once per block.
double defect_dense(const SquareMatrix &m, double stop_above) {
    constexpr std::size_t kBlock = 16;
    std::size_t dim = m.dim();
    std::vector<double> d = m.dense();
    double worst = 0;
    for (std::size_t i0 = 0; i0 < dim; i0 += kBlock) {
        std::size_t i1 = std::min(dim, i0 + kBlock);
        for (std::size_t j = i0; j < dim; j++) {
            const double *rj = d.data() + j * dim;
            for (std::size_t i = i0; i < i1 && i <= j; i++) {
                double v = dot(d.data() + i * dim, rj, dim);
                worst = std::max(worst, std::abs(v - (i == j ? 1.0 : 0.0)));
            }
        }
        if (worst > stop_above) {
            return worst;
        }
    }
    return worst;
}

double defect_sparse(const SquareMatrix &m, double stop_above) {
    std::size_t dim = m.dim();
    SquareMatrix by_column = m.transposed();
    std::vector<double> acc(dim, 0.0);
    std::vector<char> seen(dim, 0);
    std::vector<std::size_t> touched;
    double worst = 0;
    for (std::size_t i = 0; i < dim; i++) {
        auto cols = m.row_columns(i);
        auto vals = m.row_values(i);
        for (std::size_t e = 0; e < cols.size(); e++) {
            auto rows = by_column.row_columns(cols[e]);
            auto col_vals = by_column.row_values(cols[e]);
            for (std::size_t f = 0; f < rows.size(); f++) {
                std::size_t j = rows[f];
                if (!seen[j]) {
                    seen[j] = 1;
                    touched.push_back(j);
                }
                acc[j] += vals[e] * col_vals[f];
            }
        }
        if (!seen[i]) {
            worst = std::max(worst, 1.0);
        }
        for (std::size_t j : touched) {
            worst = std::max(worst, std::abs(acc[j] - (i == j ? 1.0 : 0.0)));
            acc[j] = 0;
            seen[j] = 0;
        }
        touched.clear();
        if (worst > stop_above) {
            return worst;
        }
    }
    return worst;
}

double defect(const SquareMatrix &m, double stop_above) {
    if (m.dim() == 0) {
        return 0;
    }
    if (m.nonzeros() * 8 > m.dim() * m.dim()) {
        return defect_dense(m, stop_above);
    }
    return defect_sparse(m, stop_above);
}

}  // namespace

double unitarity_defect(const SquareMatrix &m) {
    return defect(m, std::numeric_limits<double>::infinity());
}

bool is_unitary(const SquareMatrix &m, double tol) {
    return defect(m, tol) <= tol;
}

}  // namespace qverify
