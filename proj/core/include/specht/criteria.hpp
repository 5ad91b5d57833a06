#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "specht/combinatorics.hpp"

namespace specht {

enum class Source { Criterion, Oracle };

std::string_view to_string(Source s) noexcept;

/// dim H^degree(Sigma_d, S^lambda) over F_p, with where the number came from.
struct CohomologyResult {
    int degree;
    std::uint64_t dim;
    Source source;
    Prime p;
    Partition lambda;
};

// ---------------------------------------------------------------------------
// Degree zero

/// One consecutive-row congruence lambda_i ≡ -1 (mod p^l_p(lambda_{i+1})).
struct CongruenceCheck {
    std::size_t row;           // i, 1-based
    std::uint64_t value;       // lambda_i
    std::uint64_t modulus;     // p^l_p(lambda_{i+1})
    std::uint64_t residue;     // lambda_i mod modulus
    bool satisfied;
};

struct JamesReport {
    int dim;  // 0 or 1
    std::vector<CongruenceCheck> checks;
};

JamesReport james_h0_report(const Partition& lambda, Prime p);
int james_h0(const Partition& lambda, Prime p);

// ---------------------------------------------------------------------------
// Degree one, two-part partitions

/// The digits r_i of r and their complements p-1-r_i.
struct PsiQuery {
    std::uint64_t r;
    PAdicDigits digits;
    std::vector<std::uint64_t> complements;

    PsiQuery(std::uint64_t r, Prime p);
    std::uint64_t digit(std::size_t i) const noexcept { return digits.digit(i); }
    /// p-1 beyond the stored expansion.
    std::uint64_t complement(std::size_t i) const noexcept;
};

/// Which member of the Psi families matched x.
struct PsiWitness {
    int family;          // 1: sum_{i<u} + p^(u+a); 2: sum_{i<=u}
    std::uint64_t u;
    std::uint64_t a;     // family 1 only
};

std::optional<PsiWitness> psi_witness(std::uint64_t r, std::uint64_t x, Prime p);
bool psi_contains(std::uint64_t r, std::uint64_t x, Prime p);

int h1_twopart_psi(std::uint64_t lambda1, std::uint64_t lambda2, Prime p);

struct TwoPartCase {
    int which;           // 1: nonzero H^0; 2: lambda2 = c + p^b
    std::uint64_t u = 0;
    std::uint64_t c = 0;
    std::uint64_t b = 0;
};

/// Both cases that fire (they may overlap); empty when H^1 vanishes.
std::vector<TwoPartCase> h1_twopart_cases(std::uint64_t lambda1, std::uint64_t lambda2, Prime p);
int h1_twopart_criterion(std::uint64_t lambda1, std::uint64_t lambda2, Prime p);

// ---------------------------------------------------------------------------
// Implications and transport rules

/// H^0 != 0 and lambda != (d) must force H^1 != 0.
bool andersen_implication(const Partition& lambda, Prime p, std::uint64_t h1dim);

/// Carries dim H^1(Sigma_pd, S^{p lambda}) to S^{p^2 lambda}.
CohomologyResult predict_generic_h1(const Partition& lambda, Prime p, const CohomologyResult& known);

/// Carries dim H^1(Sigma_d, S^lambda) to S^{lambda + p^r}; needs p^r > d.
CohomologyResult predict_shift_h1(const Partition& lambda, Prime p, std::uint64_t r,
                                  const CohomologyResult& known);

} // namespace specht
