#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "specht/bounds.hpp"
#include "specht/combinatorics.hpp"
#include "specht/criteria.hpp"
#include "specht/fp_matrix.hpp"

namespace specht {

/// Rows of entries 1..d filling the diagram of a partition.
using Tableau = std::vector<std::vector<std::uint32_t>>;

/// Row index of each entry 1..d (entry e at position e-1). Two tableaux give
/// the same tabloid iff their row assignments agree.
struct Tabloid {
    std::vector<std::uint8_t> row_of;

    friend bool operator==(const Tabloid&, const Tabloid&) = default;
    friend auto operator<=>(const Tabloid&, const Tabloid&) = default;
};

Tabloid tabloid_of(const Tableau& t, std::size_t d);

/// Standard tableaux sorted by their row-reading words.
std::vector<Tableau> standard_tableaux(const Partition& lambda);

/// d! / prod(lambda_i!), saturating at UINT64_MAX.
std::uint64_t tabloid_count(const Partition& lambda);

/// S^lambda over F_p in its standard-polytabloid basis: generators[i] is the
/// action of the adjacent transposition s_{i+1} = (i+1, i+2).
struct SpechtRep {
    Prime p;
    Partition lambda;
    std::size_t dim;
    std::vector<FpMatrix> generators;
    std::vector<Tableau> basis;  // standard tableaux indexing the basis
};

/// Builds the representation from polytabloids in the permutation module on
/// tabloids and checks the Coxeter relations before returning.
SpechtRep build_specht_rep(const Partition& lambda, Prime p, const Bounds& bounds = {});

/// Throws RelationCheckFailed unless s_i^2, (s_i s_{i+1})^3 and (s_i s_j)^2
/// (|i-j| >= 2) all act as the identity.
void check_coxeter_relations(const SpechtRep& rep);

/// dim of the Sigma_d-fixed points.
std::uint64_t h0_dim(const SpechtRep& rep);

/// dim H^1 from 1-cocycles on the Coxeter presentation modulo coboundaries.
/// Each f(s_i) is parametrized inside the (-1)-eigenspace of s_i, which is
/// exactly the solution set of the s_i^2 relation, so only braid and
/// commuting relations are assembled.
std::uint64_t h1_dim(const SpechtRep& rep, const Bounds& bounds = {});

/// Same quantity from the unreduced system: unknowns f(s_1..s_{d-1}) in
/// S^lambda and every relation, s_i^2 included. Slower; kept as a cross-check.
std::uint64_t h1_dim_full_presentation(const SpechtRep& rep, const Bounds& bounds = {});

struct OracleRow {
    std::uint64_t p;
    Partition lambda;
    std::size_t dim = 0;
    std::optional<std::uint64_t> h0_oracle;
    std::optional<int> h0_criterion;
    std::optional<std::uint64_t> h1_oracle;
    std::optional<int> h1_criterion;  // two-part lambda only
    bool match = true;
    std::string error;  // nonempty when the row could not be computed
};

/// Every lambda |- d for d_min <= d <= d_max, in enumeration order, with the
/// requested degrees and the closed-form comparisons.
std::vector<OracleRow> oracle_sweep(std::uint64_t d_min, std::uint64_t d_max, Prime p,
                                    const std::set<int>& degrees, const Bounds& bounds = {},
                                    unsigned threads = 1);

/// One oracle row for a single partition.
OracleRow oracle_row(const Partition& lambda, Prime p, const std::set<int>& degrees,
                     const Bounds& bounds = {});

} // namespace specht
