#include "specht/criteria.hpp"

#include "specht/error.hpp"

namespace specht {

std::string_view to_string(Source s) noexcept
{
    return s == Source::Criterion ? "criterion" : "oracle";
}

JamesReport james_h0_report(const Partition& lambda, Prime p)
{
    JamesReport report{1, {}};
    for (std::size_t i = 0; i + 1 < lambda.length(); ++i) {
        CongruenceCheck check;
        check.row = i + 1;
        check.value = lambda[i];
        check.modulus = checked_pow(p.value(), l_p(lambda[i + 1], p));
        check.residue = lambda[i] % check.modulus;
        check.satisfied = check.residue == check.modulus - 1;
        if (!check.satisfied)
            report.dim = 0;
        report.checks.push_back(check);
    }
    return report;
}

int james_h0(const Partition& lambda, Prime p)
{
    return james_h0_report(lambda, p).dim;
}

PsiQuery::PsiQuery(std::uint64_t value, Prime p) : r(value), digits(p_adic_digits(value, p))
{
    for (std::uint64_t x : digits.digits)
        complements.push_back(p.value() - 1 - x);
}

std::uint64_t PsiQuery::complement(std::size_t i) const noexcept
{
    return i < complements.size() ? complements[i] : digits.base - 1;
}

std::optional<PsiWitness> psi_witness(std::uint64_t r, std::uint64_t x, Prime p)
{
    const PsiQuery q(r, p);
    const std::uint64_t top = p.value() - 1;
    const std::uint64_t u_max = l_p(std::max(r, x), p) + 1;
    std::uint64_t below = 0;  // sum_{i<u} complement_i p^i
    std::uint64_t power = 1;  // p^u
    for (std::uint64_t u = 0; u <= u_max; ++u) {
        const std::uint64_t through = checked_add(below, checked_mul(q.complement(u), power));
        if (q.digit(u) != top) {
            if (x == through)
                return PsiWitness{2, u, 0};
            if (x > below) {
                std::uint64_t t = x - below;
                std::uint64_t e = 0;
                while (t % p.value() == 0) {
                    t /= p.value();
                    ++e;
                }
                if (t == 1 && e > u)
                    return PsiWitness{1, u, e - u};
            }
        }
        below = through;
        power = checked_mul(power, p.value());
    }
    return std::nullopt;
}

bool psi_contains(std::uint64_t r, std::uint64_t x, Prime p)
{
    return psi_witness(r, x, p).has_value();
}

namespace {

void require_two_part(std::uint64_t lambda1, std::uint64_t lambda2)
{
    if (lambda2 == 0 || lambda1 < lambda2)
        throw Error(ErrorKind::NotTwoPart, "need lambda1 >= lambda2 >= 1, got (" + std::to_string(lambda1)
                                               + "," + std::to_string(lambda2) + ")");
}

} // namespace

int h1_twopart_psi(std::uint64_t lambda1, std::uint64_t lambda2, Prime p)
{
    require_two_part(lambda1, lambda2);
    return psi_contains(lambda1 - lambda2, lambda2, p) ? 1 : 0;
}

std::vector<TwoPartCase> h1_twopart_cases(std::uint64_t lambda1, std::uint64_t lambda2, Prime p)
{
    require_two_part(lambda1, lambda2);
    std::vector<TwoPartCase> fired;
    if (james_h0(Partition{lambda1, lambda2}, p) == 1)
        fired.push_back({1});

    const std::uint64_t u_max = l_p(lambda1, p) + 1;
    std::uint64_t pu = 1;  // p^u
    for (std::uint64_t u = 0; u <= u_max; ++u) {
        const std::uint64_t next = checked_mul(pu, p.value());
        // lambda1 ≡ -1 mod p^u and not mod p^(u+1)
        const bool exact = (lambda1 + 1) % pu == 0 && (lambda1 + 1) % next != 0;
        if (exact) {
            std::uint64_t pb = next;
            for (std::uint64_t b = u + 1; pb <= lambda2; ++b) {
                const std::uint64_t c = lambda2 - pb;
                if (c < pu)
                    fired.push_back({2, u, c, b});
                if (pb > lambda2 / p.value())
                    break;
                pb *= p.value();
            }
        }
        pu = next;
    }
    return fired;
}

int h1_twopart_criterion(std::uint64_t lambda1, std::uint64_t lambda2, Prime p)
{
    return h1_twopart_cases(lambda1, lambda2, p).empty() ? 0 : 1;
}

bool andersen_implication(const Partition& lambda, Prime p, std::uint64_t h1dim)
{
    return james_h0(lambda, p) == 0 || lambda.is_row() || h1dim > 0;
}

namespace {

void require_degree_one(const CohomologyResult& known)
{
    if (known.degree != 1)
        throw Error(ErrorKind::DegreeMismatch, "transport rules apply to H^1 only, got degree "
                                                   + std::to_string(known.degree));
}

} // namespace

CohomologyResult predict_generic_h1(const Partition& lambda, Prime p, const CohomologyResult& known)
{
    require_degree_one(known);
    const Partition once = scale_partition(lambda, p.value());
    if (known.p != p || known.lambda != once)
        throw Error(ErrorKind::PreconditionFailed,
                    "known result is for " + known.lambda.to_string() + ", expected " + once.to_string());
    return {1, known.dim, Source::Criterion, p, scale_partition(once, p.value())};
}

CohomologyResult predict_shift_h1(const Partition& lambda, Prime p, std::uint64_t r,
                                  const CohomologyResult& known)
{
    require_degree_one(known);
    if (checked_pow(p.value(), r) <= lambda.size())
        throw Error(ErrorKind::PreconditionFailed, "need p^r > d for " + lambda.to_string());
    if (known.p != p || known.lambda != lambda)
        throw Error(ErrorKind::PreconditionFailed,
                    "known result is for " + known.lambda.to_string() + ", expected " + lambda.to_string());
    return {1, known.dim, Source::Criterion, p, add_power_to_first_part(lambda, p, r)};
}

} // namespace specht
