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

#include "dqc1/matrix.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dqc1 {

BasisIndex gather_bits(BasisIndex index, std::span<const Qubit> qubits, std::size_t num_qubits) {
    BasisIndex out = 0;
    for (Qubit q : qubits) {
        out = (out << 1) | (qubit_bit(index, q, num_qubits) ? 1 : 0);
    }
    return out;
}

BasisIndex scatter_bits(BasisIndex packed, std::span<const Qubit> qubits, std::size_t num_qubits) {
    BasisIndex out = 0;
    const std::size_t k = qubits.size();
    for (std::size_t j = 0; j < k; ++j) {
        if ((packed >> (k - 1 - j)) & 1) {
            out |= qubit_mask(qubits[j], num_qubits);
        }
    }
    return out;
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto &r : rows) {
        if (r.size() != cols_) {
            throw std::invalid_argument("ragged matrix literal");
        }
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t dim) {
    Matrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

Matrix Matrix::diagonal(std::span<const Complex> entries) {
    Matrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        m(i, i) = entries[i];
    }
    return m;
}

Matrix Matrix::adjoint() const {
    Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

Complex Matrix::trace() const {
    Complex t = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) {
        t += (*this)(i, i);
    }
    return t;
}

double Matrix::max_abs_diff(const Matrix &other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw std::invalid_argument("max_abs_diff: shape mismatch");
    }
    double worst = 0;
    for (std::size_t i = 0; i < data_.size(); ++i) {
        worst = std::max(worst, std::abs(data_[i] - other.data_[i]));
    }
    return worst;
}

double Matrix::unitarity_residual() const {
    if (!is_square() || empty()) {
        return INFINITY;
    }
    double worst = 0;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < rows_; ++c) {
            Complex s = 0;
            for (std::size_t k = 0; k < cols_; ++k) {
                s += (*this)(r, k) * std::conj((*this)(c, k));
            }
            worst = std::max(worst, std::abs(s - (r == c ? 1.0 : 0.0)));
        }
    }
    return worst;
}

bool Matrix::is_unitary(double tolerance) const {
    return unitarity_residual() <= tolerance;
}

Matrix operator*(const Matrix &a, const Matrix &b) {
    if (a.cols_ != b.rows_) {
        throw std::invalid_argument("matrix product: shape mismatch");
    }
    Matrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Complex v = a(r, k);
            if (v == Complex{}) {
                continue;
            }
            for (std::size_t c = 0; c < b.cols_; ++c) {
                out(r, c) += v * b(k, c);
            }
        }
    }
    return out;
}

Matrix operator*(Complex s, const Matrix &a) {
    Matrix out = a;
    for (auto &v : out.data_) {
        v *= s;
    }
    return out;
}

Matrix operator+(const Matrix &a, const Matrix &b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        throw std::invalid_argument("matrix sum: shape mismatch");
    }
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) {
        out.data_[i] += b.data_[i];
    }
    return out;
}

Matrix operator-(const Matrix &a, const Matrix &b) {
    return a + Complex{-1.0} * b;
}

Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ar = 0; ar < a.rows(); ++ar) {
        for (std::size_t ac = 0; ac < a.cols(); ++ac) {
            const Complex v = a(ar, ac);
            for (std::size_t br = 0; br < b.rows(); ++br) {
                for (std::size_t bc = 0; bc < b.cols(); ++bc) {
                    out(ar * b.rows() + br, ac * b.cols() + bc) = v * b(br, bc);
                }
            }
        }
    }
    return out;
}

Matrix outer(std::span<const Complex> v, std::span<const Complex> w) {
    Matrix out(v.size(), w.size());
    for (std::size_t r = 0; r < v.size(); ++r) {
        for (std::size_t c = 0; c < w.size(); ++c) {
            out(r, c) = v[r] * std::conj(w[c]);
        }
    }
    return out;
}

SparseOperator SparseOperator::embed(const Matrix &local, std::span<const Qubit> local_qubits, std::size_t num_qubits) {
    const std::size_t local_dim = std::size_t{1} << local_qubits.size();
    if (local.rows() != local_dim || local.cols() != local_dim) {
        throw std::invalid_argument("embed: local matrix does not match qubit count");
    }
    const std::size_t dim = std::size_t{1} << num_qubits;
    SparseOperator op(dim);
    BasisIndex local_mask = 0;
    for (Qubit q : local_qubits) {
        local_mask |= qubit_mask(q, num_qubits);
    }
    std::vector<BasisIndex> deposit(local_dim);
    for (std::size_t l = 0; l < local_dim; ++l) {
        deposit[l] = scatter_bits(l, local_qubits, num_qubits);
    }
    for (BasisIndex c = 0; c < dim; ++c) {
        op.col_start_[c] = op.entries_.size();
        const BasisIndex lc = gather_bits(c, local_qubits, num_qubits);
        const BasisIndex rest = c & ~local_mask;
        for (std::size_t lr = 0; lr < local_dim; ++lr) {
            const Complex v = local(lr, lc);
            if (v != Complex{}) {
                op.entries_.push_back({rest | deposit[lr], v});
            }
        }
    }
    op.col_start_[dim] = op.entries_.size();
    return op;
}

Matrix SparseOperator::apply_left(const Matrix &m) const {
    if (m.rows() != dim_) {
        throw std::invalid_argument("apply_left: shape mismatch");
    }
    Matrix out(dim_, m.cols());
    for (BasisIndex k = 0; k < dim_; ++k) {
        const auto src = m.row(k);
        for (const Entry &e : column(k)) {
            auto dst = out.row(e.row);
            for (std::size_t c = 0; c < src.size(); ++c) {
                dst[c] += e.value * src[c];
            }
        }
    }
    return out;
}

Matrix SparseOperator::to_dense() const {
    Matrix out(dim_, dim_);
    for (BasisIndex c = 0; c < dim_; ++c) {
        for (const Entry &e : column(c)) {
            out(e.row, c) = e.value;
        }
    }
    return out;
}

}  // namespace dqc1
