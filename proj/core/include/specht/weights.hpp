#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "specht/bounds.hpp"
#include "specht/combinatorics.hpp"

namespace specht {

/// Element of the GL_n weight lattice Z^n.
class Weight {
public:
    Weight() = default;
    explicit Weight(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}
    Weight(std::initializer_list<std::int64_t> coords) : coords_(coords) {}
    /// Partition padded with zeros to rank n (n >= lambda.length()).
    static Weight from_partition(const Partition& lambda, std::size_t n);
    static Weight zero(std::size_t n) { return Weight(std::vector<std::int64_t>(n, 0)); }

    std::size_t rank() const noexcept { return coords_.size(); }
    const std::vector<std::int64_t>& coords() const noexcept { return coords_; }
    std::int64_t operator[](std::size_t i) const { return coords_[i]; }
    std::int64_t coordinate_sum() const noexcept;

    Weight& operator+=(const Weight& other);
    Weight& operator-=(const Weight& other);
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }

    std::string to_string() const;

    friend bool operator==(const Weight&, const Weight&) = default;
    friend auto operator<=>(const Weight& a, const Weight& b) { return a.coords_ <=> b.coords_; }

private:
    std::vector<std::int64_t> coords_;
};

/// Rank-n root datum; rho is kept doubled so every quantity stays integral.
struct RootContext {
    std::size_t n;
    Weight two_rho;  // (n-1, n-3, ..., 1-n)

    explicit RootContext(std::size_t rank);
};

/// <gamma, alpha_i^vee> = gamma_i - gamma_{i+1}, for simple root index 1 <= i <= n-1.
std::int64_t pairing(const Weight& gamma, std::size_t i);
/// All n-1 simple-coroot pairings.
std::vector<std::int64_t> pairings(const Weight& gamma);

/// k * rho for even k.
Weight rho_multiple(std::int64_t k, std::size_t n);

/// Weyl-orbit representative: coordinates sorted weakly decreasing.
Weight dominant_conjugate(Weight gamma);

bool is_dominant(const Weight& gamma) noexcept;

/// Weight-set membership for the Weyl module V(kappa): equal coordinate sums
/// and the dominant conjugate of nu lies below kappa in dominance.
bool weyl_weights_contain(const Weight& kappa, const Weight& nu);

/// Freudenthal's recursion for weight multiplicities of V(kappa). Memoizes
/// over the lifetime of the object, so reuse one instance per highest weight.
class FreudenthalCalculator {
public:
    explicit FreudenthalCalculator(Weight kappa, const Bounds& bounds = {});

    const Weight& highest_weight() const noexcept { return kappa_; }
    std::uint64_t multiplicity(const Weight& nu);

private:
    // kappa - nu as a nonnegative combination of simple roots, if it is one.
    bool below_highest(const Weight& nu) const;

    Weight kappa_;
    Weight two_rho_;
    std::int64_t norm_kappa_;
    std::map<Weight, std::uint64_t> memo_;
};

std::uint64_t freudenthal_multiplicity(const Weight& kappa, const Weight& nu, const Bounds& bounds = {});

/// gamma is a weight of St_r = L((p^r - 1) rho) in rank n.
bool steinberg_contains(const Weight& gamma, Prime p, std::uint64_t r, std::size_t n);

/// Admissible pairs for the p^2-twist weight lemma: |lambda| = p^2 |mu|,
/// lambda a symmetric-power factor, lambda not p * tau, lambda ⊳ p^2 mu.
bool lemma62_admissible(const Partition& lambda, const Partition& mu, Prime p);

struct SimpleRootWitness {
    std::size_t index;        // simple root index, 1-based
    std::int64_t pairing;     // <lambda - p^2 mu, alpha_index^vee>, >= p^2
    std::size_t rank;         // common padded length
};

/// Index i with <lambda - p^2 mu, alpha_i^vee> >= p^2. Throws
/// PreconditionFailed on inadmissible input and FalsifiedLemma if no index works.
SimpleRootWitness lemma62_witness(const Partition& lambda, const Partition& mu, Prime p);

/// lambda - p^2 mu - (p-1) rho is not a weight of St_1.
bool corollary63_check(const Partition& lambda, const Partition& mu, Prime p);

/// lambda - nu - (p-1) rho in rank max(len lambda, len nu). With nu = p^2 mu
/// this is the weight tested in corollary63_check; with nu = p mu it exhibits
/// why a single twist is not enough.
Weight steinberg_offset(const Partition& lambda, const Partition& nu, Prime p);

} // namespace specht
