#include <gtest/gtest.h>

#include <functional>

#include "generators.hpp"
#include "specht/error.hpp"
#include "specht/weights.hpp"

using namespace specht;

namespace {

// Semistandard tableaux of shape kappa and content nu, peeled off one
// horizontal strip (the largest entry) at a time.
std::uint64_t kostka(std::vector<std::int64_t> shape, const std::vector<std::int64_t>& content, std::size_t letter)
{
    if (letter == 0) {
        for (auto x : shape)
            if (x != 0)
                return 0;
        return 1;
    }
    const std::int64_t strip = content[letter - 1];
    std::uint64_t total = 0;
    std::vector<std::int64_t> inner(shape.size(), 0);
    // inner[j] ranges over [shape[j+1], shape[j]].
    auto rec = [&](auto& self, std::size_t j, std::int64_t removed) -> void {
        if (j == shape.size()) {
            if (removed == strip)
                total += kostka(inner, content, letter - 1);
            return;
        }
        const std::int64_t lo = j + 1 < shape.size() ? shape[j + 1] : 0;
        for (std::int64_t v = shape[j]; v >= lo; --v) {
            if (removed + shape[j] - v > strip)
                break;
            inner[j] = v;
            self(self, j + 1, removed + shape[j] - v);
        }
    };
    rec(rec, 0, 0);
    return total;
}

void for_each_composition(std::int64_t d, std::size_t n, const std::function<void(const std::vector<std::int64_t>&)>& f)
{
    std::vector<std::int64_t> c(n, 0);
    auto rec = [&](auto& self, std::size_t i, std::int64_t left) -> void {
        if (i + 1 == n) {
            c[i] = left;
            f(c);
            return;
        }
        for (std::int64_t x = 0; x <= left; ++x) {
            c[i] = x;
            self(self, i + 1, left - x);
        }
    };
    if (n > 0)
        rec(rec, 0, d);
}

std::uint64_t weyl_dimension(const Weight& kappa)
{
    // prod_{i<j} (kappa_i - kappa_j + j - i) / (j - i), accumulated exactly.
    std::uint64_t num = 1, den = 1;
    for (std::size_t i = 0; i < kappa.rank(); ++i)
        for (std::size_t j = i + 1; j < kappa.rank(); ++j) {
            num *= static_cast<std::uint64_t>(kappa[i] - kappa[j] + static_cast<std::int64_t>(j - i));
            den *= j - i;
        }
    return num / den;
}

} // namespace

TEST(Weight, ArithmeticAndPairings)
{
    const Weight a{9, 1};
    const Weight b{5, 5};
    EXPECT_EQ(a - b, Weight({4, -4}));
    EXPECT_EQ((a + b).coordinate_sum(), 20);
    EXPECT_EQ(pairing(Weight{4, -4}, 1), 8);
    EXPECT_EQ(pairings(Weight{3, 1, -1}), (std::vector<std::int64_t>{2, 2}));
    EXPECT_THROW(pairing(Weight{1, 2}, 2), Error);
    EXPECT_THROW(pairing(Weight{1, 2}, 0), Error);
    EXPECT_THROW(Weight({1}) + Weight({1, 2}), Error);
    EXPECT_EQ(Weight::from_partition({3, 1}, 4), Weight({3, 1, 0, 0}));
    EXPECT_THROW(Weight::from_partition({3, 1, 1}, 2), Error);
}

TEST(Rho, EvenMultiples)
{
    EXPECT_EQ(rho_multiple(2, 4), Weight({3, 1, -1, -3}));
    EXPECT_EQ(rho_multiple(4, 2), Weight({2, -2}));
    EXPECT_EQ(rho_multiple(4, 3), Weight({4, 0, -4}));
    try {
        rho_multiple(3, 2);
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::OddMultiple);
    }
    EXPECT_EQ(RootContext(3).two_rho, Weight({2, 0, -2}));
    // <rho, alpha_i^vee> = 1 for every simple root.
    for (std::size_t n = 2; n <= 6; ++n)
        for (auto v : pairings(rho_multiple(2, n)))
            EXPECT_EQ(v, 2);
}

TEST(Dominant, ConjugateSortsDecreasing)
{
    EXPECT_EQ(dominant_conjugate(Weight{-2, 3, 0}), Weight({3, 0, -2}));
    EXPECT_TRUE(is_dominant(Weight{2, 2, -1}));
    EXPECT_FALSE(is_dominant(Weight{1, 2}));
    EXPECT_THROW(weyl_weights_contain(Weight{1, 2}, Weight{2, 1}), Error);
}

TEST(Freudenthal, MatchesKostkaNumbers)
{
    for (std::size_t n = 2; n <= 4; ++n)
        for (std::uint64_t d = 0; d <= 6; ++d)
            for (const auto& kappa : enumerate_partitions(d, n)) {
                const Weight k = Weight::from_partition(kappa, n);
                FreudenthalCalculator calc(k);
                for_each_composition(static_cast<std::int64_t>(d), n, [&](const std::vector<std::int64_t>& nu) {
                    const std::uint64_t want = kostka(k.coords(), nu, n);
                    ASSERT_EQ(calc.multiplicity(Weight(nu)), want) << kappa.to_string() << " " << Weight(nu).to_string();
                    ASSERT_EQ(weyl_weights_contain(k, Weight(nu)), want > 0);
                });
            }
}

TEST(Freudenthal, TotalMultiplicityIsWeylDimension)
{
    for (std::size_t n = 2; n <= 4; ++n)
        for (std::uint64_t p : {3, 5}) {
            const Weight kappa = rho_multiple(static_cast<std::int64_t>(p) - 1, n);
            FreudenthalCalculator calc(kappa);
            const std::int64_t reach = kappa[0];
            std::uint64_t total = 0;
            std::vector<std::int64_t> nu(n, -reach);
            for (;;) {
                total += calc.multiplicity(Weight(nu));
                std::size_t k = 0;
                while (k < n && nu[k] == reach)
                    nu[k++] = -reach;
                if (k == n)
                    break;
                ++nu[k];
            }
            // St_1 has dimension p^(number of positive roots).
            EXPECT_EQ(total, weyl_dimension(kappa));
            EXPECT_EQ(total, checked_pow(p, n * (n - 1) / 2));
        }
}

TEST(Freudenthal, Preconditions)
{
    try {
        FreudenthalCalculator calc(Weight{0, 1});
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotDominant);
    }
    Bounds b;
    b.max_freudenthal_rank = 3;
    try {
        FreudenthalCalculator calc(Weight{1, 0, 0, 0}, b);
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::RankBound);
    }
    EXPECT_EQ(freudenthal_multiplicity(Weight{2, 0}, Weight{1, 1}), 1U);
    EXPECT_EQ(freudenthal_multiplicity(Weight{2, 0}, Weight{3, -1}), 0U);
}

TEST(Steinberg, SingleTwistOffsetIsAWeight)
{
    const Weight w = steinberg_offset({9, 1}, {5, 5}, Prime(5));
    EXPECT_EQ(w, Weight({2, -2}));
    EXPECT_TRUE(steinberg_contains(w, Prime(5), 1, 2));
    EXPECT_FALSE(steinberg_contains(Weight{3, -3}, Prime(3), 1, 2));
    EXPECT_TRUE(steinberg_contains(Weight{3, -3}, Prime(3), 2, 2));
    EXPECT_THROW(steinberg_contains(Weight{1, -1}, Prime(3), 1, 3), Error);
}

TEST(TwistedDifference, AdmissibilityPinned)
{
    const Prime p(3);
    EXPECT_TRUE(lemma62_admissible({17, 1}, {1, 1}, p));
    EXPECT_FALSE(lemma62_admissible({18}, {2}, p));   // divisible by p
    EXPECT_FALSE(lemma62_admissible({9, 9}, {1, 1}, p));  // not strictly above
    EXPECT_FALSE(lemma62_admissible({17, 1}, {1}, p));  // wrong size
    const auto w = lemma62_witness({17, 1}, {1, 1}, p);
    EXPECT_EQ(w.index, 1U);
    EXPECT_EQ(w.pairing, 16);
    EXPECT_TRUE(corollary63_check({17, 1}, {1, 1}, p));
    try {
        lemma62_witness({9, 9}, {1, 1}, p);
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::PreconditionFailed);
    }
}

TEST(TwistedDifference, NoAdmissiblePairsInDegreeOne)
{
    // p^2 (1) = (p^2) dominates every partition of p^2.
    for (std::uint64_t p : {3, 5})
        for (const auto& lambda : enumerate_partitions(p * p))
            EXPECT_FALSE(lemma62_admissible(lambda, {1}, Prime(p)));
}

TEST(TwistedDifference, WitnessAndSteinbergOnWiderSweep)
{
    const std::pair<std::uint64_t, std::uint64_t> settings[] = {{3, 2}, {3, 3}, {5, 2}};
    for (const auto& [pv, d] : settings) {
        const Prime p(pv);
        std::size_t pairs = 0;
        for (const auto& mu : enumerate_partitions(d))
            for_each_partition(pv * pv * d, std::nullopt, {}, [&](const Partition& lambda) {
                if (!lemma62_admissible(lambda, mu, p))
                    return;
                ++pairs;
                const auto w = lemma62_witness(lambda, mu, p);
                ASSERT_GE(w.pairing, static_cast<std::int64_t>(pv * pv));
                ASSERT_TRUE(corollary63_check(lambda, mu, p)) << lambda.to_string() << " " << mu.to_string();
            });
        EXPECT_GT(pairs, 0U) << "p=" << pv << " d=" << d;
    }
}
