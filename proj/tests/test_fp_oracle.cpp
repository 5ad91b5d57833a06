#include <gtest/gtest.h>

#include "generators.hpp"
#include "specht/error.hpp"
#include "specht/fp_matrix.hpp"
#include "specht/fp_oracle.hpp"

using namespace specht;

namespace {

std::uint64_t hook_length_dim(const Partition& lambda)
{
    std::uint64_t hooks = 1;
    for (std::size_t r = 0; r < lambda.length(); ++r)
        for (std::uint64_t c = 0; c < lambda[r]; ++c) {
            std::uint64_t below = 0;
            while (lambda[r + 1 + below] > c)
                ++below;
            hooks *= lambda[r] - c + below;
        }
    std::uint64_t fact = 1;
    for (std::uint64_t i = 2; i <= lambda.size(); ++i)
        fact *= i;
    return fact / hooks;
}

// chi^lambda((1 2)) = dim * (sum of contents) / C(d, 2).
std::int64_t transposition_character(const Partition& lambda)
{
    std::int64_t contents = 0;
    for (std::size_t r = 0; r < lambda.length(); ++r)
        for (std::uint64_t c = 0; c < lambda[r]; ++c)
            contents += static_cast<std::int64_t>(c) - static_cast<std::int64_t>(r);
    const auto d = static_cast<std::int64_t>(lambda.size());
    return static_cast<std::int64_t>(hook_length_dim(lambda)) * contents * 2 / (d * (d - 1));
}

std::uint32_t reduce(std::int64_t x, std::uint32_t p)
{
    const std::int64_t m = x % static_cast<std::int64_t>(p);
    return static_cast<std::uint32_t>(m < 0 ? m + p : m);
}

std::int64_t symmetric_lift(std::uint32_t x, std::uint32_t p)
{
    return x > p / 2 ? static_cast<std::int64_t>(x) - p : x;
}

} // namespace

TEST(FpMatrix, BasicOperations)
{
    const FpMatrix a(2, 2, 5, {1, 2, 3, 4});
    const FpMatrix b(2, 2, 5, {4, 3, 2, 1});
    EXPECT_EQ((a + b).entries(), (std::vector<std::uint32_t>{0, 0, 0, 0}));
    EXPECT_EQ((a - b).entries(), (std::vector<std::uint32_t>{2, 4, 1, 3}));
    EXPECT_EQ((a * b).entries(), (std::vector<std::uint32_t>{3, 0, 0, 3}));
    EXPECT_TRUE(FpMatrix::identity(3, 7).is_identity());
    EXPECT_FALSE(a.is_identity());
    EXPECT_THROW(FpMatrix(2, 3, 5) * FpMatrix(2, 3, 5), Error);
    EXPECT_THROW(FpMatrix(1, 1, 65537), Error);
    EXPECT_EQ(FpMatrix(1, 1, 5, {7})(0, 0), 2U);
}

TEST(FpMatrix, InverseMod)
{
    for (std::uint32_t p : {3U, 5U, 65521U})
        for (std::uint32_t a = 1; a < std::min(p, 500U); ++a)
            ASSERT_EQ(std::uint64_t{a} * inverse_mod(a, p) % p, 1U);
    EXPECT_THROW(inverse_mod(0, 7), Error);
}

TEST(FpMatrix, RandomInverses)
{
    testgen::Gen gen(23);
    int inverted = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::uint32_t p = trial % 2 ? 3 : 65521;
        const std::size_t n = gen.uniform(1, 12);
        const FpMatrix m = gen.matrix(n, n, p);
        if (rank_and_nullspace(m).rank < n) {
            EXPECT_THROW(inverse(m), Error);
            continue;
        }
        ++inverted;
        const FpMatrix inv = inverse(m);
        ASSERT_TRUE((m * inv).is_identity());
        ASSERT_TRUE((inv * m).is_identity());
    }
    EXPECT_GT(inverted, 50);
}

TEST(FpMatrix, RankNullityAndEchelonAgree)
{
    testgen::Gen gen(29);
    for (int trial = 0; trial < 300; ++trial) {
        const std::uint32_t p = std::array<std::uint32_t, 3>{3, 7, 65521}[trial % 3];
        const std::size_t rows = gen.uniform(1, 15), cols = gen.uniform(1, 15);
        const FpMatrix m = gen.matrix(rows, cols, p, trial % 5 == 0 ? 0.2 : 1.0);
        const auto rn = rank_and_nullspace(m);
        ASSERT_EQ(rn.rank + rn.nullspace.size(), cols);
        for (const auto& v : rn.nullspace) {
            FpMatrix col(cols, 1, p, v);
            const FpMatrix prod = m * col;
            for (auto x : prod.entries())
                ASSERT_EQ(x, 0U);
        }
        EchelonBasis basis(cols, p);
        for (std::size_t r = 0; r < rows; ++r)
            basis.insert({m.row(r).begin(), m.row(r).end()});
        ASSERT_EQ(basis.rank(), rn.rank) << "trial " << trial;
        // Dependent rows are rejected.
        if (rows > 0) {
            ASSERT_FALSE(basis.insert({m.row(0).begin(), m.row(0).end()}));
        }
    }
}

TEST(FpMatrix, EchelonLazyReductionNearOverflow)
{
    // Many full rows at the largest modulus exercise the deferred reduction.
    testgen::Gen gen(31);
    const std::uint32_t p = 65521;
    const std::size_t cols = 80;
    const FpMatrix m = gen.matrix(120, cols, p);
    EchelonBasis basis(cols, p);
    for (std::size_t r = 0; r < m.rows(); ++r)
        basis.insert({m.row(r).begin(), m.row(r).end()});
    EXPECT_EQ(basis.rank(), rank_and_nullspace(m).rank);
    EXPECT_THROW(basis.insert(std::vector<std::uint32_t>(3, 0)), Error);
}

TEST(Tableaux, CountsMatchHookLengthFormula)
{
    for (std::uint64_t d = 0; d <= 9; ++d)
        for (const auto& lambda : enumerate_partitions(d)) {
            const auto tabs = standard_tableaux(lambda);
            ASSERT_EQ(tabs.size(), hook_length_dim(lambda)) << lambda.to_string();
            for (std::size_t i = 0; i + 1 < tabs.size(); ++i) {
                std::vector<std::uint32_t> a, b;
                for (const auto& row : tabs[i])
                    a.insert(a.end(), row.begin(), row.end());
                for (const auto& row : tabs[i + 1])
                    b.insert(b.end(), row.begin(), row.end());
                ASSERT_LT(a, b);
            }
        }
    EXPECT_EQ(tabloid_count({18, 0}), 1U);
    EXPECT_EQ(tabloid_count({9, 9}), 48620U);
    EXPECT_EQ(tabloid_count({2, 1}), 3U);
}

TEST(Tableaux, TabloidOfRows)
{
    const Tableau t{{1, 3}, {2}};
    EXPECT_EQ(tabloid_of(t, 3).row_of, (std::vector<std::uint8_t>{0, 1, 0}));
}

TEST(Specht, TrivialAndSignModules)
{
    for (std::uint64_t d = 2; d <= 6; ++d) {
        const auto triv = build_specht_rep(Partition({d}), Prime(3));
        ASSERT_EQ(triv.dim, 1U);
        for (const auto& g : triv.generators)
            EXPECT_TRUE(g.is_identity());
        const auto sign = build_specht_rep(Partition(std::vector<std::uint64_t>(d, 1)), Prime(3));
        ASSERT_EQ(sign.dim, 1U);
        for (const auto& g : sign.generators)
            EXPECT_EQ(g(0, 0), 2U);
    }
}

TEST(Specht, SmallDegrees)
{
    for (const Partition& lambda : {Partition{}, Partition{1}}) {
        const auto rep = build_specht_rep(lambda, Prime(5));
        EXPECT_EQ(rep.dim, 1U);
        EXPECT_TRUE(rep.generators.empty());
        EXPECT_EQ(h0_dim(rep), 1U);
        EXPECT_EQ(h1_dim(rep), 0U);
        EXPECT_EQ(h1_dim_full_presentation(rep), 0U);
    }
}

TEST(Specht, CharacterOfTranspositionMatchesContentFormula)
{
    for (std::uint64_t d = 2; d <= 7; ++d)
        for (const auto& lambda : enumerate_partitions(d))
            for (std::uint64_t p : {3, 5, 7}) {
                const auto rep = build_specht_rep(lambda, Prime(p));
                const auto want = reduce(transposition_character(lambda), static_cast<std::uint32_t>(p));
                for (const auto& g : rep.generators) {
                    std::uint64_t trace = 0;
                    for (std::size_t i = 0; i < rep.dim; ++i)
                        trace += g(i, i);
                    ASSERT_EQ(trace % p, want) << lambda.to_string() << " p=" << p;
                }
            }
}

TEST(Specht, GeneratorsLiftToTheSameIntegerMatrices)
{
    // The polytabloid basis is integral, so reductions at two primes must
    // come from one small integer matrix.
    for (std::uint64_t d = 2; d <= 6; ++d)
        for (const auto& lambda : enumerate_partitions(d)) {
            const auto a = build_specht_rep(lambda, Prime(101));
            const auto b = build_specht_rep(lambda, Prime(103));
            for (std::size_t g = 0; g < a.generators.size(); ++g)
                for (std::size_t i = 0; i < a.dim * a.dim; ++i)
                    ASSERT_EQ(symmetric_lift(a.generators[g].entries()[i], 101),
                              symmetric_lift(b.generators[g].entries()[i], 103))
                        << lambda.to_string();
        }
}

TEST(Specht, CoxeterCheckRejectsBrokenGenerators)
{
    auto rep = build_specht_rep({2, 1}, Prime(5));
    EXPECT_NO_THROW(check_coxeter_relations(rep));
    rep.generators[0] = FpMatrix::identity(rep.dim, 5);
    try {
        check_coxeter_relations(rep);
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::RelationCheckFailed);
    }
}

TEST(Oracle, PinnedValues)
{
    const auto a = oracle_row({2, 1}, Prime(3), {0, 1});
    EXPECT_EQ(a.h0_oracle, 1U);
    EXPECT_EQ(a.h1_oracle, 1U);
    EXPECT_TRUE(a.match);
    const auto b = oracle_row({3, 3}, Prime(3), {1});
    EXPECT_EQ(b.h1_oracle, 1U);
    EXPECT_FALSE(b.h0_oracle.has_value());
    const auto c = oracle_row({1, 1}, Prime(5), {0, 1});
    EXPECT_EQ(c.h0_oracle, 0U);
    EXPECT_EQ(c.h1_oracle, 0U);
}

TEST(Oracle, SemisimpleWhenPrimeExceedsDegree)
{
    for (std::uint64_t d = 1; d <= 6; ++d)
        for (const auto& lambda : enumerate_partitions(d)) {
            const auto rep = build_specht_rep(lambda, Prime(7));
            EXPECT_EQ(h0_dim(rep), lambda.is_row() ? 1U : 0U) << lambda.to_string();
            EXPECT_EQ(h1_dim(rep), 0U) << lambda.to_string();
        }
}

TEST(Oracle, ReducedSystemMatchesFullPresentation)
{
    for (std::uint64_t p : {3, 5})
        for (std::uint64_t d = 2; d <= 6; ++d)
            for (const auto& lambda : enumerate_partitions(d)) {
                const auto rep = build_specht_rep(lambda, Prime(p));
                ASSERT_EQ(h1_dim(rep), h1_dim_full_presentation(rep)) << lambda.to_string() << " p=" << p;
            }
}

TEST(Oracle, Bounds)
{
    Bounds b;
    b.max_tabloids = 9;
    try {
        build_specht_rep({3, 2}, Prime(3), b);
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::BoundExceeded);
    }
    Bounds c;
    c.max_cocycle_unknowns = 10;
    const auto rep = build_specht_rep({3, 2}, Prime(3));
    EXPECT_THROW(h1_dim(rep, c), Error);
    const auto row = oracle_row({3, 2}, Prime(3), {1}, b);
    EXPECT_FALSE(row.match);
    EXPECT_NE(row.error.find("BoundExceeded"), std::string::npos);
    EXPECT_THROW(build_specht_rep({2, 1}, Prime(65537)), Error);
}

TEST(Oracle, SweepIsDeterministicAcrossThreadCounts)
{
    const auto one = oracle_sweep(1, 6, Prime(3), {0, 1}, {}, 1);
    const auto many = oracle_sweep(1, 6, Prime(3), {0, 1}, {}, 3);
    ASSERT_EQ(one.size(), many.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
        EXPECT_EQ(one[i].lambda, many[i].lambda);
        EXPECT_EQ(one[i].h0_oracle, many[i].h0_oracle);
        EXPECT_EQ(one[i].h1_oracle, many[i].h1_oracle);
        EXPECT_TRUE(one[i].match) << one[i].lambda.to_string();
    }
    std::size_t expected = 0;
    for (std::uint64_t d = 1; d <= 6; ++d)
        expected += enumerate_partitions(d).size();
    EXPECT_EQ(one.size(), expected);
}
