#include "specht/combinatorics.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "specht/error.hpp"

namespace specht {

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::InvalidPrime: return "InvalidPrime";
    case ErrorKind::InvalidPartition: return "InvalidPartition";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::NonUniqueMaximum: return "NonUniqueMaximum";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::OddMultiple: return "OddMultiple";
    case ErrorKind::NotDominant: return "NotDominant";
    case ErrorKind::RankBound: return "RankBound";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::FalsifiedLemma: return "FalsifiedLemma";
    case ErrorKind::NotTwoPart: return "NotTwoPart";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::RelationCheckFailed: return "RelationCheckFailed";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

bool is_prime(std::uint64_t n) noexcept
{
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (std::uint64_t f = 3; f * f <= n; f += 2)
        if (n % f == 0)
            return false;
    return true;
}

Prime::Prime(std::uint64_t value) : value_(value)
{
    if (value > std::numeric_limits<std::uint32_t>::max())
        throw Error(ErrorKind::InvalidPrime, std::to_string(value) + " exceeds 32 bits");
    if (value == 2)
        throw Error(ErrorKind::InvalidPrime, "characteristic 2 is not supported");
    if (!is_prime(value))
        throw Error(ErrorKind::InvalidPrime, std::to_string(value) + " is not prime");
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw Error(ErrorKind::Overflow, std::to_string(a) + " + " + std::to_string(b));
    return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw Error(ErrorKind::Overflow, std::to_string(a) + " * " + std::to_string(b));
    return r;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exponent)
{
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exponent; ++i)
        r = checked_mul(r, base);
    return r;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    // r * (n - i) is divisible by (i + 1) at every step; divide via the gcd to
    // keep the intermediate small.
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        std::uint64_t num = n - i;
        std::uint64_t den = i + 1;
        std::uint64_t g = std::gcd(r, den);
        r /= g;
        den /= g;
        num /= den;
        r = checked_mul(r, num);
    }
    return r;
}

Partition::Partition(std::vector<std::uint64_t> parts) : parts_(std::move(parts))
{
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    for (std::size_t i = 0; i + 1 < parts_.size(); ++i)
        if (parts_[i] < parts_[i + 1])
            throw Error(ErrorKind::InvalidPartition, "parts must be weakly decreasing");
    for (std::uint64_t x : parts_) {
        if (x == 0)
            throw Error(ErrorKind::InvalidPartition, "zero part before a positive part");
        size_ = checked_add(size_, x);
    }
}

std::string Partition::to_string() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i)
        os << (i ? "," : "") << parts_[i];
    os << ')';
    return os.str();
}

Composition::Composition(std::vector<std::uint64_t> parts) : parts_(std::move(parts))
{
    for (std::uint64_t x : parts_)
        size_ = checked_add(size_, x);
}

std::uint64_t PAdicDigits::value() const
{
    std::uint64_t v = 0;
    std::uint64_t w = 1;
    for (std::size_t j = 0; j < digits.size(); ++j) {
        v = checked_add(v, checked_mul(digits[j], w));
        if (j + 1 < digits.size())
            w = checked_mul(w, base);
    }
    return v;
}

PAdicDigits p_adic_digits(std::uint64_t t, Prime p)
{
    PAdicDigits out{{}, p.value()};
    while (t > 0) {
        out.digits.push_back(t % p.value());
        t /= p.value();
    }
    return out;
}

std::uint64_t l_p(std::uint64_t t, Prime p)
{
    std::uint64_t l = 0;
    while (t > 0) {
        t /= p.value();
        ++l;
    }
    return l;
}

std::string_view to_string(Dominance d) noexcept
{
    switch (d) {
    case Dominance::Less: return "Less";
    case Dominance::Greater: return "Greater";
    case Dominance::Equal: return "Equal";
    case Dominance::Incomparable: return "Incomparable";
    }
    return "?";
}

Dominance dominance_compare(const Partition& lambda, const Partition& mu)
{
    if (lambda.size() != mu.size())
        throw Error(ErrorKind::SizeMismatch,
                    lambda.to_string() + " and " + mu.to_string() + " partition different sizes");
    bool ge = true;
    bool le = true;
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    const std::size_t n = std::max(lambda.length(), mu.length());
    for (std::size_t k = 0; k < n; ++k) {
        a += lambda[k];
        b += mu[k];
        ge = ge && a >= b;
        le = le && a <= b;
    }
    if (ge && le)
        return Dominance::Equal;
    if (ge)
        return Dominance::Greater;
    if (le)
        return Dominance::Less;
    return Dominance::Incomparable;
}

bool dominates(const Partition& lambda, const Partition& mu)
{
    auto c = dominance_compare(lambda, mu);
    return c == Dominance::Greater || c == Dominance::Equal;
}

bool strictly_dominates(const Partition& lambda, const Partition& mu)
{
    return dominance_compare(lambda, mu) == Dominance::Greater;
}

Partition scale_partition(const Partition& lambda, std::uint64_t m)
{
    std::vector<std::uint64_t> parts;
    parts.reserve(lambda.length());
    for (std::uint64_t x : lambda.parts())
        parts.push_back(checked_mul(x, m));
    return Partition(std::move(parts));
}

Partition add_power_to_first_part(const Partition& lambda, Prime p, std::uint64_t r)
{
    std::vector<std::uint64_t> parts = lambda.parts();
    const std::uint64_t q = checked_pow(p.value(), r);
    if (parts.empty())
        parts.push_back(q);
    else
        parts[0] = checked_add(parts[0], q);
    return Partition(std::move(parts));
}

namespace {

void check_partition_bound(std::uint64_t d, const Bounds& bounds)
{
    if (d > bounds.max_partition_size)
        throw Error(ErrorKind::BoundExceeded, "partition enumeration for d = " + std::to_string(d)
                                                  + " exceeds max_partition_size = "
                                                  + std::to_string(bounds.max_partition_size));
}

void partitions_rec(std::uint64_t remaining, std::uint64_t max_part, std::uint64_t parts_left,
                    std::vector<std::uint64_t>& prefix,
                    const std::function<void(const Partition&)>& visit)
{
    if (remaining == 0) {
        visit(Partition(prefix));
        return;
    }
    if (parts_left == 0)
        return;
    for (std::uint64_t x = std::min(remaining, max_part); x >= 1; --x) {
        // The remaining parts_left - 1 parts are each at most x.
        if ((parts_left - 1) * x < remaining - x)
            break;
        prefix.push_back(x);
        partitions_rec(remaining - x, x, parts_left - 1, prefix, visit);
        prefix.pop_back();
    }
}

} // namespace

void for_each_partition(std::uint64_t d, std::optional<std::uint64_t> max_parts,
                        const Bounds& bounds, const std::function<void(const Partition&)>& visit)
{
    check_partition_bound(d, bounds);
    std::vector<std::uint64_t> prefix;
    const std::uint64_t limit = max_parts.value_or(std::max<std::uint64_t>(d, 1));
    partitions_rec(d, d, limit, prefix, visit);
}

std::vector<Partition> enumerate_partitions(std::uint64_t d, std::optional<std::uint64_t> max_parts,
                                            const Bounds& bounds)
{
    std::vector<Partition> out;
    for_each_partition(d, max_parts, bounds, [&](const Partition& p) { out.push_back(p); });
    return out;
}

std::vector<Partition> enumerate_two_part(std::uint64_t d_max)
{
    std::vector<Partition> out;
    for (std::uint64_t d = 2; d <= d_max; ++d)
        for (std::uint64_t b = 1; 2 * b <= d; ++b)
            out.push_back(Partition{d - b, b});
    std::stable_sort(out.begin(), out.end(), [](const Partition& x, const Partition& y) {
        return x.size() != y.size() ? x.size() < y.size() : x[0] > y[0];
    });
    return out;
}

std::vector<Composition> enumerate_compositions(std::uint64_t d, std::uint64_t n,
                                                const Bounds& bounds)
{
    if (n == 0)
        throw Error(ErrorKind::PreconditionFailed, "compositions need at least one part");
    std::uint64_t count;
    try {
        count = binomial(d + n - 1, n - 1);
    } catch (const Error&) {
        throw Error(ErrorKind::BoundExceeded, "composition count overflows 64 bits");
    }
    if (count > bounds.max_compositions)
        throw Error(ErrorKind::BoundExceeded, std::to_string(count)
                                                  + " compositions exceed max_compositions = "
                                                  + std::to_string(bounds.max_compositions));
    std::vector<Composition> out;
    out.reserve(count);
    std::vector<std::uint64_t> cur(n, 0);
    auto rec = [&](auto& self, std::size_t pos, std::uint64_t remaining) -> void {
        if (pos + 1 == n) {
            cur[pos] = remaining;
            out.emplace_back(cur);
            return;
        }
        for (std::uint64_t x = remaining + 1; x-- > 0;) {
            cur[pos] = x;
            self(self, pos + 1, remaining - x);
        }
    };
    rec(rec, 0, d);
    return out;
}

} // namespace specht
