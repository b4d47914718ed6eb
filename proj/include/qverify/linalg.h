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

#ifndef QVERIFY_LINALG_H
#define QVERIFY_LINALG_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qverify {

/// Tolerance for matrix identities such as M * M^T == I.
inline constexpr double kMatrixTolerance = 1e-12;
/// Tolerance for norms and measurement probabilities.
inline constexpr double kProbabilityTolerance = 1e-9;
/// Largest supported matrix dimension.
inline constexpr std::size_t kMaxDimension = std::size_t{1} << 16;
/// Largest supported Hadamard power (4096 x 4096, the N = 24 final transform).
inline constexpr int kMaxHadamardPower = 12;

/// Real amplitude vector over K = 2^t computational basis states.
///
/// All amplitudes in this model are real. The length is validated to be a power
/// of two; unit norm is a property of physically meaningful states and is
/// checked where states enter an algorithm (see `is_normalized`), not on every
/// intermediate product.
class StateVector {
   public:
    StateVector() = default;
    explicit StateVector(std::vector<double> amplitudes);

    /// |index>, the computational basis state.
    static StateVector basis(std::size_t dim, std::size_t index);

    std::size_t size() const {
        return amplitudes_.size();
    }
    double operator[](std::size_t i) const {
        return amplitudes_[i];
    }
    std::span<const double> amplitudes() const {
        return amplitudes_;
    }

    double norm_squared() const;
    bool is_normalized(double tol = kProbabilityTolerance) const;
    StateVector negated() const;

    bool operator==(const StateVector &other) const = default;

   private:
    std::vector<double> amplitudes_;
};

/// Square real matrix with row-major semantics.
///
/// Entries are held in compressed-row form: the builder's stage unitaries have
/// at most two nonzeros per row, and the only dense matrix, H^{(x)T}, is still
/// stored entry for entry. Exact zeros are never stored, so `at` returns 0.0
/// for them.
class SquareMatrix {
   public:
    SquareMatrix() = default;

    static SquareMatrix identity(std::size_t dim);
    static SquareMatrix zeros(std::size_t dim);
    /// `entries` holds dim*dim values in row-major order.
    static SquareMatrix from_dense(std::size_t dim, std::span<const double> entries);
    static SquareMatrix from_rows(const std::vector<std::vector<double>> &rows);
    static SquareMatrix diagonal(std::span<const double> values);

    std::size_t dim() const {
        return dim_;
    }
    std::size_t nonzeros() const {
        return values_.size();
    }
    double at(std::size_t row, std::size_t col) const;
    std::vector<double> dense() const;

    std::span<const std::uint32_t> row_columns(std::size_t row) const {
        return {columns_.data() + row_start_[row], columns_.data() + row_start_[row + 1]};
    }
    std::span<const double> row_values(std::size_t row) const {
        return {values_.data() + row_start_[row], values_.data() + row_start_[row + 1]};
    }

    /// Copy with one entry replaced. Setting 0.0 removes the entry.
    SquareMatrix with_entry(std::size_t row, std::size_t col, double value) const;
    SquareMatrix transposed() const;

    bool operator==(const SquareMatrix &other) const = default;

   private:
    friend class MatrixBuilder;

    std::size_t dim_ = 0;
    std::vector<std::size_t> row_start_{0};
    std::vector<std::uint32_t> columns_;
    std::vector<double> values_;
};

/// Row-by-row construction of a SquareMatrix. Rows must be appended in order
/// and, within a row, columns strictly increasing.
class MatrixBuilder {
   public:
    explicit MatrixBuilder(std::size_t dim, std::size_t expected_nonzeros = 0);

    void push(std::uint32_t col, double value);
    void end_row();
    SquareMatrix finish() &&;

   private:
    SquareMatrix m_;
    std::size_t rows_done_ = 0;
};

/// result[i] = sum_j m[i][j] * v[j]. Throws std::invalid_argument on dimension
/// mismatch.
StateVector apply(const SquareMatrix &m, const StateVector &v);

/// Kronecker product: result[i*b.dim + k][j*b.dim + l] = a[i][j] * b[k][l].
SquareMatrix tensor(const SquareMatrix &a, const SquareMatrix &b);

/// H^{(x)t}, entry[i][j] = 2^{-t/2} * (-1)^{popcount(i & j)}.
/// Throws std::invalid_argument for t outside [1, kMaxHadamardPower].
SquareMatrix hadamard_power(int t);

/// True when `m` equals hadamard_power(t) entry for entry (bitwise).
bool is_hadamard_power(const SquareMatrix &m, int t);

/// In-place v <- H^{(x)t} v using the fast Walsh-Hadamard butterfly.
/// Agrees with apply(hadamard_power(t), v) to within rounding.
void fast_hadamard_apply(std::span<double> v);

/// max |(M M^T - I)[i][j]| <= tol.
bool is_unitary(const SquareMatrix &m, double tol = kMatrixTolerance);

/// max |(M M^T - I)[i][j]|, the quantity is_unitary compares against tol.
double unitarity_defect(const SquareMatrix &m);

bool is_power_of_two(std::size_t n);
int log2_exact(std::size_t n);

}  // namespace qverify

#endif
