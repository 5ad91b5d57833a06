#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace specht {

/// Dense row-major matrix over F_p with entries kept in [0, p).
class FpMatrix {
public:
    FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p);
    FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p, std::vector<std::uint32_t> entries);

    static FpMatrix identity(std::size_t n, std::uint32_t p);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::uint32_t modulus() const noexcept { return p_; }

    std::uint32_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, std::uint64_t value) { data_[r * cols_ + c] = value % p_; }

    std::span<const std::uint32_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    const std::vector<std::uint32_t>& entries() const noexcept { return data_; }

    FpMatrix operator*(const FpMatrix& rhs) const;
    FpMatrix operator+(const FpMatrix& rhs) const;
    FpMatrix operator-(const FpMatrix& rhs) const;
    bool is_identity() const noexcept;

    friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::uint32_t p_;
    std::vector<std::uint32_t> data_;
};

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);

struct RankNullspace {
    std::size_t rank;
    /// Basis of {x : M x = 0}: one vector per free column, with a 1 there and
    /// zeros at the other free columns, in increasing free-column order.
    std::vector<std::vector<std::uint32_t>> nullspace;
};

/// Gauss-Jordan elimination over F_p.
RankNullspace rank_and_nullspace(const FpMatrix& m);

FpMatrix inverse(const FpMatrix& m);

/// Row space built one row at a time. Each stored row has a leading 1 and is
/// zero at the pivots of every row stored before it, which is all that rank
/// needs. Rows are accumulated without reduction between updates and reduced
/// only when the next update could overflow 32 bits.
class EchelonBasis {
public:
    EchelonBasis(std::size_t cols, std::uint32_t p);

    std::size_t cols() const noexcept { return cols_; }
    std::size_t rank() const noexcept { return rows_.size(); }

    /// Reduces the row (entries in [0, p)) against the basis; returns true and
    /// stores it if it was independent.
    bool insert(std::vector<std::uint32_t> row);

private:
    void reduce_all(std::vector<std::uint32_t>& row) const;

    std::size_t cols_;
    std::uint32_t p_;
    std::uint64_t lazy_limit_;
    std::vector<std::vector<std::uint32_t>> rows_;
    std::vector<std::size_t> pivots_;
};

} // namespace specht
