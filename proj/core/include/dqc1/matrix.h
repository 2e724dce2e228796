// Copyright 2026 The dqc1k Authors
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

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace dqc1 {

using Complex = std::complex<double>;

/// Qubit label inside a register. Qubit 0 is the top wire.
using Qubit = std::size_t;

/// Computational basis index. Qubit 0 is the most significant bit, so the
/// index reads left to right in wire order.
using BasisIndex = std::uint64_t;

/// Mask selecting `qubit` in an `num_qubits`-qubit basis index.
constexpr BasisIndex qubit_mask(Qubit qubit, std::size_t num_qubits) {
    return BasisIndex{1} << (num_qubits - 1 - qubit);
}

constexpr bool qubit_bit(BasisIndex index, Qubit qubit, std::size_t num_qubits) {
    return (index & qubit_mask(qubit, num_qubits)) != 0;
}

/// Packs the bits of `index` at `qubits` into a compact value; `qubits[0]`
/// becomes the most significant bit of the result.
BasisIndex gather_bits(BasisIndex index, std::span<const Qubit> qubits, std::size_t num_qubits);

/// Inverse of gather_bits: spreads `packed` onto `qubits` (other bits zero).
BasisIndex scatter_bits(BasisIndex packed, std::span<const Qubit> qubits, std::size_t num_qubits);

/// Dense row-major complex matrix.
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static Matrix identity(std::size_t dim);
    static Matrix diagonal(std::span<const Complex> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return data_.empty(); }
    bool is_square() const { return rows_ == cols_; }

    Complex &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Complex> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Complex> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<const Complex> data() const { return data_; }
    std::span<Complex> data() { return data_; }

    Matrix adjoint() const;
    Complex trace() const;

    /// Largest entrywise |a - b|. Shapes must match.
    double max_abs_diff(const Matrix &other) const;
    /// Largest entrywise deviation of M M^dagger from the identity.
    double unitarity_residual() const;
    bool is_unitary(double tolerance) const;

    friend Matrix operator*(const Matrix &a, const Matrix &b);
    friend Matrix operator*(Complex s, const Matrix &a);
    friend Matrix operator+(const Matrix &a, const Matrix &b);
    friend Matrix operator-(const Matrix &a, const Matrix &b);
    bool operator==(const Matrix &other) const = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

Matrix kron(const Matrix &a, const Matrix &b);
/// |v><w| for column vectors v, w.
Matrix outer(std::span<const Complex> v, std::span<const Complex> w);

/// Column-compressed operator on a 2^m-dimensional space. Used to embed a
/// small local matrix into a register without materializing zeros.
class SparseOperator {
   public:
    struct Entry {
        BasisIndex row;
        Complex value;
    };

    SparseOperator() = default;
    explicit SparseOperator(std::size_t dim) : col_start_(dim + 1, 0), dim_(dim) {}

    /// Embeds `local` acting on `local_qubits` (local_qubits[0] is the most
    /// significant local bit) into an `num_qubits`-qubit register.
    static SparseOperator embed(const Matrix &local, std::span<const Qubit> local_qubits, std::size_t num_qubits);

    std::size_t dim() const { return dim_; }
    std::span<const Entry> column(BasisIndex c) const {
        return {entries_.data() + col_start_[c], col_start_[c + 1] - col_start_[c]};
    }

    /// Returns this * m.
    Matrix apply_left(const Matrix &m) const;
    Matrix to_dense() const;

   private:
    std::vector<std::size_t> col_start_;
    std::vector<Entry> entries_;
    std::size_t dim_ = 0;
};

}  // namespace dqc1
