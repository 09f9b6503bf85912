#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

#include "immanant/bigint.hpp"
#include "immanant/errors.hpp"

namespace immanant {

/// Dense square matrix of arbitrary-precision integers, row-major.
/// Indices are 0-based; dimension 0 is a legal value.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t k) : k_(k), data_(k * k) {}

    IntMatrix(std::initializer_list<std::initializer_list<long>> rows) : k_(rows.size()), data_(k_ * k_) {
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != k_)
                throw ContractError("IntMatrix rows must form a square");
            std::size_t j = 0;
            for (long v : row)
                data_[i * k_ + j++] = v;
            ++i;
        }
    }

    static IntMatrix identity(std::size_t k) {
        IntMatrix m(k);
        for (std::size_t i = 0; i < k; ++i)
            m(i, i) = 1;
        return m;
    }

    std::size_t size() const noexcept { return k_; }
    bool empty() const noexcept { return k_ == 0; }

    BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * k_ + j]; }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * k_ + j]; }

    std::span<const BigInt> row(std::size_t i) const { return {data_.data() + i * k_, k_}; }

    bool is_symmetric() const {
        for (std::size_t i = 0; i < k_; ++i)
            for (std::size_t j = i + 1; j < k_; ++j)
                if ((*this)(i, j) != (*this)(j, i))
                    return false;
        return true;
    }

    IntMatrix transposed() const {
        IntMatrix t(k_);
        for (std::size_t i = 0; i < k_; ++i)
            for (std::size_t j = 0; j < k_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    BigInt trace() const {
        BigInt t = 0;
        for (std::size_t i = 0; i < k_; ++i)
            t += (*this)(i, i);
        return t;
    }

    std::size_t count_nonzero() const {
        return static_cast<std::size_t>(std::count_if(data_.begin(), data_.end(), [](const BigInt& v) { return v != 0; }));
    }

    /// Submatrix with the given (sorted, distinct) rows and columns removed.
    /// Row and column counts must agree so the result stays square.
    IntMatrix without(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
        if (rows.size() != cols.size() || rows.size() > k_)
            throw ContractError("minor must delete equally many rows and columns");
        auto keep = [this](std::span<const std::size_t> removed) {
            std::vector<std::size_t> kept;
            kept.reserve(k_ - removed.size());
            for (std::size_t i = 0; i < k_; ++i)
                if (std::find(removed.begin(), removed.end(), i) == removed.end())
                    kept.push_back(i);
            return kept;
        };
        const auto kr = keep(rows);
        const auto kc = keep(cols);
        if (kr.size() != kc.size())
            throw ContractError("minor indices out of range or repeated");
        IntMatrix out(kr.size());
        for (std::size_t a = 0; a < kr.size(); ++a)
            for (std::size_t b = 0; b < kc.size(); ++b)
                out(a, b) = (*this)(kr[a], kc[b]);
        return out;
    }

    /// Row i and column j deleted.
    IntMatrix without(std::size_t i, std::size_t j) const {
        const std::size_t r[1] = {i};
        const std::size_t c[1] = {j};
        return without(std::span<const std::size_t>(r), std::span<const std::size_t>(c));
    }

    /// M(i): row and column i deleted.
    IntMatrix principal_minor(std::size_t i) const { return without(i, i); }

    /// Rows and columns i and j (i != j) deleted.
    IntMatrix principal_minor(std::size_t i, std::size_t j) const {
        std::size_t idx[2] = {std::min(i, j), std::max(i, j)};
        return without(std::span<const std::size_t>(idx), std::span<const std::size_t>(idx));
    }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.k_ != b.k_)
            throw ContractError("dimension mismatch in matrix product");
        IntMatrix c(a.k_);
        for (std::size_t i = 0; i < a.k_; ++i)
            for (std::size_t l = 0; l < a.k_; ++l) {
                const BigInt& ail = a(i, l);
                if (ail == 0)
                    continue;
                for (std::size_t j = 0; j < a.k_; ++j)
                    c(i, j) += ail * b(l, j);
            }
        return c;
    }

    friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) {
        if (a.k_ != b.k_)
            throw ContractError("dimension mismatch in matrix sum");
        for (std::size_t i = 0; i < a.data_.size(); ++i)
            a.data_[i] += b.data_[i];
        return a;
    }

    friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) {
        if (a.k_ != b.k_)
            throw ContractError("dimension mismatch in matrix difference");
        for (std::size_t i = 0; i < a.data_.size(); ++i)
            a.data_[i] -= b.data_[i];
        return a;
    }

    friend IntMatrix operator*(const BigInt& s, IntMatrix a) {
        for (auto& v : a.data_)
            v *= s;
        return a;
    }

    friend std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
        os << '[';
        for (std::size_t i = 0; i < m.k_; ++i) {
            os << (i ? ",[" : "[");
            for (std::size_t j = 0; j < m.k_; ++j)
                os << (j ? "," : "") << m(i, j);
            os << ']';
        }
        return os << ']';
    }

private:
    std::size_t k_ = 0;
    std::vector<BigInt> data_;
};

/// Deleted row/column index sets (0-based) describing a submatrix.
struct MinorSpec {
    std::vector<std::size_t> deleted_rows;
    std::vector<std::size_t> deleted_cols;

    void validate(std::size_t k) const {
        auto ok = [k](const std::vector<std::size_t>& v) {
            for (std::size_t i = 0; i < v.size(); ++i)
                if (v[i] >= k || (i > 0 && v[i] <= v[i - 1]))
                    return false;
            return true;
        };
        if (!ok(deleted_rows) || !ok(deleted_cols) || deleted_rows.size() != deleted_cols.size())
            throw ContractError("MinorSpec indices must be strictly increasing, in range and balanced");
    }

    IntMatrix apply(const IntMatrix& m) const {
        validate(m.size());
        return m.without(deleted_rows, deleted_cols);
    }
};

}  // namespace immanant
