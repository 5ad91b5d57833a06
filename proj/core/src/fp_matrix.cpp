#include "specht/fp_matrix.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#include "specht/error.hpp"

namespace specht {

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0)
{
    if (p < 2 || p >= (1U << 16))
        throw Error(ErrorKind::PreconditionFailed, "matrix modulus must be below 2^16");
}

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p, std::vector<std::uint32_t> entries)
    : FpMatrix(rows, cols, p)
{
    if (entries.size() != rows * cols)
        throw Error(ErrorKind::SizeMismatch, "entry count does not match dimensions");
    for (auto& x : entries)
        x %= p;
    data_ = std::move(entries);
}

FpMatrix FpMatrix::identity(std::size_t n, std::uint32_t p)
{
    FpMatrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i)
        m.data_[i * n + i] = 1;
    return m;
}

FpMatrix FpMatrix::operator*(const FpMatrix& rhs) const
{
    if (cols_ != rhs.rows_ || p_ != rhs.p_)
        throw Error(ErrorKind::SizeMismatch, "matrix product shape mismatch");
    FpMatrix out(rows_, rhs.cols_, p_);
    std::vector<std::uint64_t> acc(rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        for (std::size_t k = 0; k < cols_; ++k) {
            const std::uint64_t a = data_[i * cols_ + k];
            if (a == 0)
                continue;
            const std::uint32_t* b = rhs.data_.data() + k * rhs.cols_;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                acc[j] += a * b[j];
        }
        for (std::size_t j = 0; j < rhs.cols_; ++j)
            out.data_[i * rhs.cols_ + j] = static_cast<std::uint32_t>(acc[j] % p_);
    }
    return out;
}

FpMatrix FpMatrix::operator+(const FpMatrix& rhs) const
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_ || p_ != rhs.p_)
        throw Error(ErrorKind::SizeMismatch, "matrix sum shape mismatch");
    FpMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = (data_[i] + rhs.data_[i]) % p_;
    return out;
}

FpMatrix FpMatrix::operator-(const FpMatrix& rhs) const
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_ || p_ != rhs.p_)
        throw Error(ErrorKind::SizeMismatch, "matrix difference shape mismatch");
    FpMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = (data_[i] + p_ - rhs.data_[i]) % p_;
    return out;
}

bool FpMatrix::is_identity() const noexcept
{
    if (rows_ != cols_)
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (data_[i * cols_ + j] != (i == j ? 1U : 0U))
                return false;
    return true;
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p)
{
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p, new_r = a % p;
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1)
        throw Error(ErrorKind::PreconditionFailed, "zero has no inverse");
    return static_cast<std::uint32_t>(t < 0 ? t + p : t);
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(std::vector<std::uint32_t>& a, std::size_t rows, std::size_t cols,
                              std::uint32_t p)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && a[sel * cols + c] == 0)
            ++sel;
        if (sel == rows)
            continue;
        if (sel != r)
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(a[sel * cols + j], a[r * cols + j]);
        const std::uint64_t inv = inverse_mod(a[r * cols + c], p);
        for (std::size_t j = c; j < cols; ++j)
            a[r * cols + j] = static_cast<std::uint32_t>(a[r * cols + j] * inv % p);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i * cols + c] == 0)
                continue;
            const std::uint64_t f = p - a[i * cols + c];
            for (std::size_t j = c; j < cols; ++j)
                a[i * cols + j] = static_cast<std::uint32_t>((a[i * cols + j] + f * a[r * cols + j]) % p);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

RankNullspace rank_and_nullspace(const FpMatrix& m)
{
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    const std::uint32_t p = m.modulus();
    std::vector<std::uint32_t> a = m.entries();
    const auto pivots = rref(a, rows, cols, p);

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivots)
        is_pivot[c] = true;
    RankNullspace out{pivots.size(), {}};
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f])
            continue;
        std::vector<std::uint32_t> v(cols, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = (p - a[i * cols + f]) % p;
        out.nullspace.push_back(std::move(v));
    }
    return out;
}

FpMatrix inverse(const FpMatrix& m)
{
    const std::size_t n = m.rows();
    if (m.cols() != n)
        throw Error(ErrorKind::SizeMismatch, "inverse of a non-square matrix");
    const std::uint32_t p = m.modulus();
    std::vector<std::uint32_t> a(n * 2 * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            a[i * 2 * n + j] = m(i, j);
        a[i * 2 * n + n + i] = 1;
    }
    const auto pivots = rref(a, n, 2 * n, p);
    if (pivots.size() < n || pivots[n - 1] != n - 1)
        throw Error(ErrorKind::PreconditionFailed, "matrix is singular");
    std::vector<std::uint32_t> out(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out[i * n + j] = a[i * 2 * n + n + j];
    return FpMatrix(n, n, p, std::move(out));
}

EchelonBasis::EchelonBasis(std::size_t cols, std::uint32_t p) : cols_(cols), p_(p)
{
    if (p < 2 || p >= (1U << 16))
        throw Error(ErrorKind::PreconditionFailed, "modulus must be below 2^16");
    const std::uint64_t step = std::uint64_t{p - 1} * (p - 1);
    lazy_limit_ = (std::numeric_limits<std::uint32_t>::max() - p) / std::max<std::uint64_t>(step, 1);
}

void EchelonBasis::reduce_all(std::vector<std::uint32_t>& row) const
{
    for (auto& x : row)
        x %= p_;
}

bool EchelonBasis::insert(std::vector<std::uint32_t> row)
{
    if (row.size() != cols_)
        throw Error(ErrorKind::SizeMismatch, "row length does not match basis width");
    std::uint64_t pending = 0;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const std::size_t pc = pivots_[k];
        const std::uint32_t v = row[pc] % p_;
        if (v == 0) {
            row[pc] = 0;
            continue;
        }
        if (pending == lazy_limit_) {
            reduce_all(row);
            pending = 0;
        }
        const std::uint32_t f = p_ - v;
        const std::uint32_t* b = rows_[k].data();
        std::uint32_t* r = row.data();
        for (std::size_t j = pc; j < cols_; ++j)
            r[j] += f * b[j];
        ++pending;
        row[pc] = 0;
    }
    reduce_all(row);
    std::size_t lead = 0;
    while (lead < cols_ && row[lead] == 0)
        ++lead;
    if (lead == cols_)
        return false;
    const std::uint64_t inv = inverse_mod(row[lead], p_);
    for (std::size_t j = lead; j < cols_; ++j)
        row[j] = static_cast<std::uint32_t>(row[j] * inv % p_);
    rows_.push_back(std::move(row));
    pivots_.push_back(lead);
    return true;
}

} // namespace specht
