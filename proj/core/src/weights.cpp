#include "specht/weights.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "specht/carry_lattice.hpp"
#include "specht/error.hpp"

namespace specht {

Weight Weight::from_partition(const Partition& lambda, std::size_t n)
{
    if (lambda.length() > n)
        throw Error(ErrorKind::SizeMismatch,
                    lambda.to_string() + " has more than " + std::to_string(n) + " parts");
    std::vector<std::int64_t> coords(n, 0);
    for (std::size_t i = 0; i < lambda.length(); ++i) {
        if (lambda[i] > static_cast<std::uint64_t>(INT64_MAX))
            throw Error(ErrorKind::Overflow, "part does not fit a signed weight coordinate");
        coords[i] = static_cast<std::int64_t>(lambda[i]);
    }
    return Weight(std::move(coords));
}

std::int64_t Weight::coordinate_sum() const noexcept
{
    return std::accumulate(coords_.begin(), coords_.end(), std::int64_t{0});
}

Weight& Weight::operator+=(const Weight& other)
{
    if (rank() != other.rank())
        throw Error(ErrorKind::SizeMismatch, "weights of different rank");
    for (std::size_t i = 0; i < coords_.size(); ++i)
        coords_[i] += other.coords_[i];
    return *this;
}

Weight& Weight::operator-=(const Weight& other)
{
    if (rank() != other.rank())
        throw Error(ErrorKind::SizeMismatch, "weights of different rank");
    for (std::size_t i = 0; i < coords_.size(); ++i)
        coords_[i] -= other.coords_[i];
    return *this;
}

std::string Weight::to_string() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < coords_.size(); ++i)
        os << (i ? "," : "") << coords_[i];
    os << ')';
    return os.str();
}

RootContext::RootContext(std::size_t rank) : n(rank), two_rho(rho_multiple(2, rank)) {}

std::int64_t pairing(const Weight& gamma, std::size_t i)
{
    if (i < 1 || i + 1 > gamma.rank())
        throw Error(ErrorKind::IndexOutOfRange, "simple root index " + std::to_string(i)
                                                    + " outside 1.." + std::to_string(gamma.rank() - 1));
    return gamma[i - 1] - gamma[i];
}

std::vector<std::int64_t> pairings(const Weight& gamma)
{
    std::vector<std::int64_t> out;
    for (std::size_t i = 1; i < gamma.rank(); ++i)
        out.push_back(pairing(gamma, i));
    return out;
}

Weight rho_multiple(std::int64_t k, std::size_t n)
{
    if (k % 2 != 0)
        throw Error(ErrorKind::OddMultiple, std::to_string(k) + " * rho is not integral in general");
    std::vector<std::int64_t> coords(n);
    const auto rank = static_cast<std::int64_t>(n);
    for (std::int64_t j = 0; j < rank; ++j)
        coords[j] = (k / 2) * (rank - 1 - 2 * j);
    return Weight(std::move(coords));
}

Weight dominant_conjugate(Weight gamma)
{
    auto coords = gamma.coords();
    std::sort(coords.begin(), coords.end(), std::greater<>());
    return Weight(std::move(coords));
}

bool is_dominant(const Weight& gamma) noexcept
{
    const auto& c = gamma.coords();
    return std::is_sorted(c.begin(), c.end(), std::greater<>());
}

namespace {

void require_dominant(const Weight& kappa)
{
    if (!is_dominant(kappa))
        throw Error(ErrorKind::NotDominant, kappa.to_string() + " is not dominant");
}

} // namespace

bool weyl_weights_contain(const Weight& kappa, const Weight& nu)
{
    require_dominant(kappa);
    if (kappa.rank() != nu.rank())
        throw Error(ErrorKind::SizeMismatch, "weights of different rank");
    if (kappa.coordinate_sum() != nu.coordinate_sum())
        return false;
    const Weight sorted = dominant_conjugate(nu);
    std::int64_t a = 0;
    std::int64_t b = 0;
    for (std::size_t i = 0; i < kappa.rank(); ++i) {
        a += kappa[i];
        b += sorted[i];
        if (b > a)
            return false;
    }
    return true;
}

FreudenthalCalculator::FreudenthalCalculator(Weight kappa, const Bounds& bounds)
    : kappa_(std::move(kappa)), two_rho_(rho_multiple(2, kappa_.rank())), norm_kappa_(0)
{
    require_dominant(kappa_);
    if (kappa_.rank() > bounds.max_freudenthal_rank)
        throw Error(ErrorKind::RankBound, "rank " + std::to_string(kappa_.rank()) + " exceeds "
                                               + std::to_string(bounds.max_freudenthal_rank));
    for (std::size_t i = 0; i < kappa_.rank(); ++i) {
        const std::int64_t x = 2 * kappa_[i] + two_rho_[i];
        norm_kappa_ += x * x;
    }
}

bool FreudenthalCalculator::below_highest(const Weight& nu) const
{
    std::int64_t partial = 0;
    for (std::size_t i = 0; i < nu.rank(); ++i) {
        partial += kappa_[i] - nu[i];
        if (partial < 0)
            return false;
    }
    return partial == 0;
}

std::uint64_t FreudenthalCalculator::multiplicity(const Weight& nu)
{
    if (nu.rank() != kappa_.rank())
        throw Error(ErrorKind::SizeMismatch, "weights of different rank");
    if (nu == kappa_)
        return 1;
    if (!below_highest(nu))
        return 0;
    if (auto it = memo_.find(nu); it != memo_.end())
        return it->second;

    // With everything doubled: (|2k + 2rho|^2 - |2nu + 2rho|^2) m(nu)
    //   = 8 * sum_{alpha > 0} sum_{j >= 1} (nu + j alpha, alpha) m(nu + j alpha).
    std::int64_t norm_nu = 0;
    for (std::size_t i = 0; i < nu.rank(); ++i) {
        const std::int64_t x = 2 * nu[i] + two_rho_[i];
        norm_nu += x * x;
    }
    const std::int64_t denominator = norm_kappa_ - norm_nu;
    std::uint64_t result = 0;
    if (denominator > 0) {
        std::int64_t sum = 0;
        const std::size_t n = nu.rank();
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b) {
                auto coords = nu.coords();
                for (;;) {
                    ++coords[a];
                    --coords[b];
                    Weight up(coords);
                    if (!below_highest(up))
                        break;
                    const auto m = static_cast<std::int64_t>(multiplicity(up));
                    sum += (up[a] - up[b]) * m;
                }
            }
        const std::int64_t numerator = 8 * sum;
        if (numerator % denominator != 0 || numerator < 0)
            throw Error(ErrorKind::RelationCheckFailed,
                        "Freudenthal recursion produced a non-integral multiplicity at " + nu.to_string());
        result = static_cast<std::uint64_t>(numerator / denominator);
    }
    memo_.emplace(nu, result);
    return result;
}

std::uint64_t freudenthal_multiplicity(const Weight& kappa, const Weight& nu, const Bounds& bounds)
{
    FreudenthalCalculator calc(kappa, bounds);
    return calc.multiplicity(nu);
}

bool steinberg_contains(const Weight& gamma, Prime p, std::uint64_t r, std::size_t n)
{
    if (gamma.rank() != n)
        throw Error(ErrorKind::SizeMismatch, "weight rank differs from n");
    const std::uint64_t q = checked_pow(p.value(), r);
    if (q - 1 > static_cast<std::uint64_t>(INT64_MAX / 2))
        throw Error(ErrorKind::Overflow, "p^r - 1 too large");
    return weyl_weights_contain(rho_multiple(static_cast<std::int64_t>(q - 1), n), gamma);
}

bool lemma62_admissible(const Partition& lambda, const Partition& mu, Prime p)
{
    const std::uint64_t p2 = checked_mul(p.value(), p.value());
    if (lambda.size() != checked_mul(p2, mu.size()))
        return false;
    if (!is_h0_factor(lambda, p))
        return false;
    const bool is_twist = std::all_of(lambda.parts().begin(), lambda.parts().end(),
                                      [&](std::uint64_t x) { return x % p.value() == 0; });
    if (is_twist)
        return false;
    return strictly_dominates(lambda, scale_partition(mu, p2));
}

namespace {

void require_admissible(const Partition& lambda, const Partition& mu, Prime p)
{
    if (!lemma62_admissible(lambda, mu, p))
        throw Error(ErrorKind::PreconditionFailed,
                    "(" + lambda.to_string() + ", " + mu.to_string() + ") is not an admissible pair at p = "
                        + std::to_string(p.value()));
}

} // namespace

SimpleRootWitness lemma62_witness(const Partition& lambda, const Partition& mu, Prime p)
{
    require_admissible(lambda, mu, p);
    const std::uint64_t p2 = p.value() * p.value();
    const std::size_t n = std::max(lambda.length(), mu.length());
    const Weight diff = Weight::from_partition(lambda, n) - Weight::from_partition(scale_partition(mu, p2), n);
    for (std::size_t i = 1; i < n; ++i) {
        const std::int64_t v = pairing(diff, i);
        if (v >= static_cast<std::int64_t>(p2))
            return {i, v, n};
    }
    throw Error(ErrorKind::FalsifiedLemma, "no simple root pairs to >= p^2 for lambda = "
                                                + lambda.to_string() + ", mu = " + mu.to_string());
}

Weight steinberg_offset(const Partition& lambda, const Partition& nu, Prime p)
{
    const std::size_t n = std::max(lambda.length(), nu.length());
    return Weight::from_partition(lambda, n) - Weight::from_partition(nu, n)
         - rho_multiple(static_cast<std::int64_t>(p.value() - 1), n);
}

bool corollary63_check(const Partition& lambda, const Partition& mu, Prime p)
{
    require_admissible(lambda, mu, p);
    const Partition twisted = scale_partition(mu, p.value() * p.value());
    const Weight gamma = steinberg_offset(lambda, twisted, p);
    return !steinberg_contains(gamma, p, 1, gamma.rank());
}

} // namespace specht
