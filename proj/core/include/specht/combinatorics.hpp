#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "specht/bounds.hpp"

namespace specht {

/// Odd prime. Construction fails for 2, composites, and values that do not
/// fit in 32 bits.
class Prime {
public:
    explicit Prime(std::uint64_t value);

    std::uint64_t value() const noexcept { return value_; }
    operator std::uint64_t() const noexcept { return value_; }

    friend bool operator==(Prime, Prime) = default;

private:
    std::uint64_t value_;
};

bool is_prime(std::uint64_t n) noexcept;

// Checked 64-bit arithmetic; overflow raises ErrorKind::Overflow.
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exponent);
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Weakly decreasing sequence of positive parts. Trailing zeros are dropped
/// on construction, so equal partitions compare equal by value.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<std::uint64_t> parts);
    Partition(std::initializer_list<std::uint64_t> parts)
        : Partition(std::vector<std::uint64_t>(parts))
    {}

    const std::vector<std::uint64_t>& parts() const noexcept { return parts_; }
    std::uint64_t size() const noexcept { return size_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    /// Zero beyond the last stored part.
    std::uint64_t operator[](std::size_t i) const noexcept
    {
        return i < parts_.size() ? parts_[i] : 0;
    }
    /// True for () and (d).
    bool is_row() const noexcept { return parts_.size() <= 1; }
    bool is_two_part() const noexcept { return parts_.size() == 2; }

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<std::uint64_t> parts_;
    std::uint64_t size_ = 0;
};

/// Fixed-length sequence of nonnegative integers.
class Composition {
public:
    explicit Composition(std::vector<std::uint64_t> parts);

    const std::vector<std::uint64_t>& parts() const noexcept { return parts_; }
    std::uint64_t size() const noexcept { return size_; }
    std::size_t length() const noexcept { return parts_.size(); }

    friend bool operator==(const Composition&, const Composition&) = default;

private:
    std::vector<std::uint64_t> parts_;
    std::uint64_t size_ = 0;
};

/// Base-p digits, least significant first; zero has no digits.
struct PAdicDigits {
    std::vector<std::uint64_t> digits;
    std::uint64_t base;

    std::uint64_t digit(std::size_t j) const noexcept { return j < digits.size() ? digits[j] : 0; }
    std::uint64_t value() const;
};

PAdicDigits p_adic_digits(std::uint64_t t, Prime p);

/// Least l with t < p^l.
std::uint64_t l_p(std::uint64_t t, Prime p);

enum class Dominance { Less, Greater, Equal, Incomparable };

std::string_view to_string(Dominance d) noexcept;

/// Partial-sum comparison; both partitions must have the same size.
Dominance dominance_compare(const Partition& lambda, const Partition& mu);
/// lambda ⊵ mu.
bool dominates(const Partition& lambda, const Partition& mu);
/// lambda ⊳ mu.
bool strictly_dominates(const Partition& lambda, const Partition& mu);

Partition scale_partition(const Partition& lambda, std::uint64_t m);
/// (lambda_1 + p^r, lambda_2, ...).
Partition add_power_to_first_part(const Partition& lambda, Prime p, std::uint64_t r);

/// Partitions of d with at most max_parts parts, in decreasing
/// lexicographic order.
std::vector<Partition> enumerate_partitions(std::uint64_t d,
                                            std::optional<std::uint64_t> max_parts = std::nullopt,
                                            const Bounds& bounds = {});

/// Streaming variant of enumerate_partitions; same order, no materialization.
void for_each_partition(std::uint64_t d, std::optional<std::uint64_t> max_parts,
                        const Bounds& bounds, const std::function<void(const Partition&)>& visit);

/// All two-part partitions (a, b), a >= b >= 1, of sizes 2..d_max, ordered by size then a
/// descending.
std::vector<Partition> enumerate_two_part(std::uint64_t d_max);

/// Length-n compositions of d. Order: first part descending, recursively.
std::vector<Composition> enumerate_compositions(std::uint64_t d, std::uint64_t n,
                                                const Bounds& bounds = {});

} // namespace specht
