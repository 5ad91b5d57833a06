#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "generators.hpp"
#include "specht/carry_lattice.hpp"
#include "specht/error.hpp"

using namespace specht;

namespace {

// Carry into the p^i column from the residues mod p^i alone.
CarryPattern carries_from_residues(const std::vector<std::uint64_t>& parts, std::uint64_t p)
{
    std::uint64_t d = 0;
    for (auto x : parts)
        d += x;
    std::vector<std::uint64_t> out;
    for (std::uint64_t pi = p;; pi *= p) {
        std::uint64_t low = 0;
        for (auto x : parts)
            low += x % pi;
        out.push_back((low - d % pi) / pi);
        bool all_small = d < pi;
        for (auto x : parts)
            all_small = all_small && x < pi;
        if (all_small)
            break;
    }
    while (!out.empty() && out.back() == 0)
        out.pop_back();
    return CarryPattern(out);
}

std::uint64_t digit_sum(std::uint64_t x, std::uint64_t p)
{
    std::uint64_t s = 0;
    for (; x; x /= p)
        s += x % p;
    return s;
}

struct NaivePoset {
    std::map<CarryPattern, std::uint64_t> counts;
    std::map<CarryPattern, std::vector<Partition>> shapes;
};

NaivePoset naive_poset(std::uint64_t d, std::uint64_t n, Prime p)
{
    NaivePoset out;
    for (const auto& beta : enumerate_compositions(d, n)) {
        const auto c = carry_pattern(beta, p);
        ++out.counts[c];
        auto sorted = beta.parts();
        std::sort(sorted.rbegin(), sorted.rend());
        auto& v = out.shapes[c];
        const Partition lambda(sorted);
        if (std::find(v.begin(), v.end(), lambda) == v.end())
            v.push_back(lambda);
    }
    return out;
}

} // namespace

TEST(CarryPattern, PinnedExamples)
{
    EXPECT_EQ(carry_pattern(Partition{5, 5, 2}, Prime(3)), CarryPattern({2, 1}));
    EXPECT_EQ(carry_pattern(Partition{24, 1}, Prime(5)), CarryPattern({1, 1}));
    EXPECT_EQ(carry_pattern(Partition{20, 5}, Prime(5)), CarryPattern({0, 1}));
    EXPECT_EQ(carry_pattern(Partition{25}, Prime(5)), CarryPattern());
    EXPECT_EQ(carry_pattern(Partition{}, Prime(5)), CarryPattern());
    EXPECT_EQ(CarryPattern({2, 1}).to_string(), "(2,1)");
    EXPECT_EQ(CarryPattern({1, 0, 0}), CarryPattern({1}));
}

TEST(CarryPattern, ComponentwiseOrder)
{
    EXPECT_TRUE(CarryPattern({0, 1}).strictly_below(CarryPattern({1, 1})));
    EXPECT_FALSE(CarryPattern({2}).leq(CarryPattern({1, 1})));
    EXPECT_FALSE(CarryPattern({1, 1}).strictly_below(CarryPattern({1, 1})));
    EXPECT_TRUE(CarryPattern().leq(CarryPattern({0, 3})));
}

TEST(CarryPattern, MatchesResidueFormulaAndDigitSums)
{
    testgen::Gen gen(3);
    for (int trial = 0; trial < 4000; ++trial) {
        const Prime p = gen.prime();
        std::vector<std::uint64_t> parts(gen.uniform(1, 6));
        for (auto& x : parts)
            x = gen.uniform(0, 400);
        const CarryPattern c = carry_pattern(parts, p);
        ASSERT_EQ(c, carries_from_residues(parts, p)) << "seed " << gen.seed() << " trial " << trial;
        // Sum of digit sums drops by p-1 per carry.
        std::uint64_t d = 0, lhs = 0, total = 0;
        for (auto x : parts) {
            d += x;
            lhs += digit_sum(x, p);
        }
        for (auto k : c.carries())
            total += k;
        ASSERT_EQ(lhs - digit_sum(d, p), (p.value() - 1) * total);
        // Permutation invariance.
        auto shuffled = parts;
        std::reverse(shuffled.begin(), shuffled.end());
        ASSERT_EQ(carry_pattern(shuffled, p), c);
    }
}

TEST(H0Factor, DigitTestPinned)
{
    EXPECT_TRUE(is_h0_factor({20, 5}, Prime(5)));
    EXPECT_TRUE(is_h0_factor({24, 1}, Prime(5)));
    EXPECT_TRUE(is_h0_factor({25}, Prime(5)));
    EXPECT_FALSE(is_h0_factor({3, 3}, Prime(5)));
    EXPECT_TRUE(is_h0_factor({2, 2}, Prime(3)));
    EXPECT_FALSE(is_h0_factor({1, 1}, Prime(5)));
}

TEST(CarryPoset, MatchesCompositionEnumeration)
{
    for (std::uint64_t p : {3, 5})
        for (std::uint64_t d = 0; d <= 10; ++d)
            for (std::uint64_t n = 1; n <= 4; ++n) {
                const auto poset = carry_poset(d, n, Prime(p));
                const auto naive = naive_poset(d, n, Prime(p));
                ASSERT_EQ(poset.patterns.size(), naive.counts.size());
                for (std::size_t i = 0; i < poset.patterns.size(); ++i) {
                    const auto& c = poset.patterns[i];
                    ASSERT_EQ(poset.weight_counts[i], naive.counts.at(c)) << p << " " << d << " " << n;
                    for (const auto& other : naive.shapes.at(c))
                        ASSERT_TRUE(dominates(poset.factors[i], other));
                    const auto& group = naive.shapes.at(c);
                    ASSERT_NE(std::find(group.begin(), group.end(), poset.factors[i]), group.end());
                }
            }
}

TEST(CarryPoset, CoverEdgesAreCovers)
{
    const auto poset = carry_poset(12, 12, Prime(3));
    for (const auto& [lo, hi] : poset.cover_edges) {
        ASSERT_TRUE(poset.patterns[lo].strictly_below(poset.patterns[hi]));
        for (const auto& mid : poset.patterns)
            ASSERT_FALSE(poset.patterns[lo].strictly_below(mid) && mid.strictly_below(poset.patterns[hi]));
    }
    EXPECT_EQ(poset.index_of(poset.patterns[1]), 1U);
    EXPECT_THROW(poset.index_of(CarryPattern({99})), Error);
}

TEST(FactorMap, EnumerationEqualsDigitTest)
{
    for (std::uint64_t p : {3, 5, 7})
        for (std::uint64_t d = 1; d <= 18; ++d) {
            std::set<Partition> enumerated, digit;
            for (const auto& [c, l] : h0_composition_factors(d, d, Prime(p)))
                enumerated.insert(l);
            for (const auto& l : enumerate_partitions(d))
                if (is_h0_factor(l, Prime(p)))
                    digit.insert(l);
            ASSERT_EQ(enumerated, digit) << "p=" << p << " d=" << d;
        }
}

TEST(FactorMap, DegreeTwentyFiveNamesBothFactors)
{
    const auto factors = h0_composition_factors(25, 25, Prime(5));
    EXPECT_EQ(factors.at(CarryPattern({1, 1})), Partition({24, 1}));
    EXPECT_EQ(factors.at(CarryPattern({0, 1})), Partition({20, 5}));
    EXPECT_EQ(factors.at(CarryPattern()), Partition({25}));
}

TEST(FactorMap, RejectsZeroVariables)
{
    try {
        h0_composition_factors(3, 0, Prime(3));
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::PreconditionFailed);
    }
}

TEST(Twist, MultiplicityStableUnderScaling)
{
    for (const auto& lambda : enumerate_partitions(12))
        EXPECT_TRUE(twist_multiplicity_equal(lambda, Prime(3))) << lambda.to_string();
    testgen::Gen gen(5);
    for (int trial = 0; trial < 500; ++trial) {
        const Prime p = gen.prime();
        EXPECT_TRUE(twist_multiplicity_equal(gen.partition(gen.uniform(1, 30)), p));
    }
}

TEST(SubmoduleLattice, SmallChain)
{
    const auto lattice = submodule_lattice(4, 4, Prime(3));
    ASSERT_EQ(lattice.nodes.size(), 3U);
    EXPECT_EQ(lattice.bottom().dimension, 0U);
    EXPECT_EQ(lattice.nodes[1].dimension, 16U);
    EXPECT_EQ(lattice.top().dimension, 35U);
    EXPECT_EQ(lattice.nodes[1].labels, (std::vector<Partition>{{4}}));
    ASSERT_EQ(lattice.edges.size(), 2U);
    EXPECT_EQ(lattice.edges[1].factor, Partition({2, 2}));
    EXPECT_EQ(to_dot(lattice), "digraph submodule_lattice {\n"
                               "  n0 [label=\"dim=0\"];\n"
                               "  n1 [label=\"dim=16\"];\n"
                               "  n2 [label=\"dim=35\"];\n"
                               "  n0 -> n1 [label=\"(4)\"];\n"
                               "  n1 -> n2 [label=\"(2,2)\"];\n"
                               "}\n");
}

TEST(SubmoduleLattice, DegreeZero)
{
    const auto lattice = submodule_lattice(0, 1, Prime(3));
    EXPECT_EQ(lattice.nodes.size(), 2U);
    EXPECT_EQ(lattice.top().dimension, 1U);
}

TEST(SubmoduleLattice, IdealsMatchSubsetSearch)
{
    for (std::uint64_t p : {3, 5, 7})
        for (std::uint64_t d = 1; d <= 12; ++d) {
            const auto lattice = submodule_lattice(d, d, Prime(p));
            const auto& pats = lattice.poset.patterns;
            const std::size_t m = pats.size();
            if (m > 14)
                continue;
            std::set<std::vector<std::size_t>> ideals;
            for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
                bool closed = true;
                for (std::size_t a = 0; a < m && closed; ++a)
                    for (std::size_t b = 0; b < m && closed; ++b)
                        if ((mask >> a & 1U) && pats[b].strictly_below(pats[a]) && !(mask >> b & 1U))
                            closed = false;
                if (!closed)
                    continue;
                std::vector<std::size_t> members;
                for (std::size_t i = 0; i < m; ++i)
                    if (mask >> i & 1U)
                        members.push_back(i);
                ideals.insert(members);
            }
            std::set<std::vector<std::size_t>> got;
            for (const auto& node : lattice.nodes)
                got.insert(node.members);
            ASSERT_EQ(got, ideals) << "p=" << p << " d=" << d;
            EXPECT_EQ(lattice.top().dimension, binomial(2 * d - 1, d - 1));
            for (const auto& e : lattice.edges) {
                const auto& from = lattice.nodes[e.from];
                const auto& to = lattice.nodes[e.to];
                EXPECT_EQ(to.members.size(), from.members.size() + 1);
                EXPECT_EQ(to.dimension, from.dimension + lattice.poset.weight_counts[e.added_pattern]);
                EXPECT_EQ(e.factor, lattice.poset.factors[e.added_pattern]);
            }
        }
}

TEST(SubmoduleLattice, NodesSortedDeterministically)
{
    const auto a = submodule_lattice(9, 9, Prime(3));
    const auto b = submodule_lattice(9, 9, Prime(3));
    EXPECT_EQ(to_dot(a), to_dot(b));
    for (std::size_t i = 0; i + 1 < a.nodes.size(); ++i) {
        const auto& x = a.nodes[i].members;
        const auto& y = a.nodes[i + 1].members;
        EXPECT_TRUE(x.size() < y.size() || (x.size() == y.size() && x < y));
    }
}

TEST(SubmoduleLattice, IdealBound)
{
    Bounds b;
    b.max_ideals = 2;
    try {
        submodule_lattice(4, 4, Prime(3), b);
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::BoundExceeded);
    }
}

TEST(HomB, PinnedValues)
{
    EXPECT_EQ(hom_b_via_carry({20, 5}, Prime(5)), 0);
    EXPECT_EQ(hom_b_via_carry({24, 1}, Prime(5)), 1);
    EXPECT_EQ(hom_b_via_carry({7}, Prime(3)), 1);
    EXPECT_EQ(hom_b_via_carry({3, 3}, Prime(5)), 0);
}

TEST(CarryPosetDot, LabelsPatternAndFactor)
{
    const std::string dot = to_dot(carry_poset(4, 4, Prime(3)));
    EXPECT_NE(dot.find("digraph"), std::string::npos);
    EXPECT_NE(dot.find("(2,2)"), std::string::npos);
    EXPECT_NE(dot.find("c0 -> c1"), std::string::npos);
}
