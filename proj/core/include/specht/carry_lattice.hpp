#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "specht/bounds.hpp"
#include "specht/combinatorics.hpp"

namespace specht {

/// Carries produced by base-p column addition of a composition's parts.
/// carries()[i] is the total carried into the p^(i+1) column. Trailing zeros
/// are trimmed, so the all-zero pattern is the empty vector.
class CarryPattern {
public:
    CarryPattern() = default;
    explicit CarryPattern(std::vector<std::uint64_t> carries);

    const std::vector<std::uint64_t>& carries() const noexcept { return carries_; }
    std::uint64_t operator[](std::size_t i) const noexcept
    {
        return i < carries_.size() ? carries_[i] : 0;
    }

    /// Componentwise order.
    bool leq(const CarryPattern& other) const noexcept;
    /// Componentwise <= and not equal.
    bool strictly_below(const CarryPattern& other) const noexcept { return *this != other && leq(other); }

    std::string to_string() const;

    friend bool operator==(const CarryPattern&, const CarryPattern&) = default;
    /// Lexicographic; a total order used only for deterministic output.
    friend auto operator<=>(const CarryPattern& a, const CarryPattern& b)
    {
        return a.carries_ <=> b.carries_;
    }

private:
    std::vector<std::uint64_t> carries_;
};

CarryPattern carry_pattern(std::span<const std::uint64_t> parts, Prime p);
inline CarryPattern carry_pattern(const Composition& beta, Prime p) { return carry_pattern(beta.parts(), p); }
inline CarryPattern carry_pattern(const Partition& lambda, Prime p) { return carry_pattern(lambda.parts(), p); }

/// Digit test for [H0(d) : L(lambda)] != 0: in each p-adic column, a digit
/// other than p-1 forces every digit below it in that column to be zero.
bool is_h0_factor(const Partition& lambda, Prime p);

/// Carry pattern -> dominance-maximal partition of d (at most n parts)
/// carrying that pattern.
using FactorMap = std::map<CarryPattern, Partition>;

FactorMap h0_composition_factors(std::uint64_t d, std::uint64_t n, Prime p, const Bounds& bounds = {});

/// is_h0_factor(p * lambda) == is_h0_factor(lambda).
bool twist_multiplicity_equal(const Partition& lambda, Prime p);

struct CarryPoset {
    Prime p;
    std::uint64_t d;
    std::uint64_t n;
    std::vector<CarryPattern> patterns;  // sorted
    std::vector<std::uint64_t> weight_counts;  // #{beta in B(d) : c(beta) = patterns[i]}
    std::vector<Partition> factors;            // maximal partition per pattern
    std::vector<std::pair<std::size_t, std::size_t>> cover_edges;  // (lower, upper)

    std::size_t index_of(const CarryPattern& c) const;
};

CarryPoset carry_poset(std::uint64_t d, std::uint64_t n, Prime p, const Bounds& bounds = {});

struct SubmoduleLattice {
    struct Node {
        std::vector<std::size_t> members;  // pattern indices into poset.patterns, ascending
        std::uint64_t dimension;
        std::vector<Partition> labels;  // factor partitions of the members
    };
    struct Edge {
        std::size_t from;
        std::size_t to;
        std::size_t added_pattern;
        Partition factor;
    };

    CarryPoset poset;
    std::vector<Node> nodes;  // sorted by (size, members)
    std::vector<Edge> edges;

    const Node& bottom() const { return nodes.front(); }
    const Node& top() const { return nodes.back(); }
    std::size_t index_of(const std::vector<std::size_t>& members) const;
};

/// Every order ideal of carry_poset(d, n, p), i.e. every submodule of the
/// symmetric power, with dimensions and composition-factor labels.
SubmoduleLattice submodule_lattice(std::uint64_t d, std::uint64_t n, Prime p, const Bounds& bounds = {});

/// dim Hom_B(H0(d), lambda) from carry patterns: 1 iff lambda is a factor and
/// no factor mu ⊳ lambda has a strictly larger carry pattern.
int hom_b_via_carry(const Partition& lambda, Prime p, const Bounds& bounds = {});

std::string to_dot(const CarryPoset& poset);
std::string to_dot(const SubmoduleLattice& lattice);

} // namespace specht
