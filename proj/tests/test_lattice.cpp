#include <gtest/gtest.h>

#include "tautcheck/lattice.hpp"

using namespace tautcheck;

namespace {

// Naive count over [-bound, bound]^entries.
std::uint64_t brute_force_solutions(long sum, long norm, long bound, int entries)
{
    std::vector<long> b(entries, -bound);
    std::uint64_t found = 0;
    for (;;) {
        long s = 0, n = 0;
        for (long x : b) {
            s += x;
            n += x * x;
        }
        found += s == sum && n == norm;
        int k = 0;
        while (k < entries && b[k] == bound)
            b[k++] = -bound;
        if (k == entries)
            break;
        ++b[k];
    }
    return found;
}

} // namespace

TEST(Nikulin, EvenWithDeterminant64)
{
    auto n = nikulin_lattice();
    EXPECT_EQ(n.rank(), 8u);
    EXPECT_TRUE(n.is_even());
    EXPECT_EQ(n.determinant(), 64);
    EXPECT_TRUE(n.is_negative_definite());
}

TEST(Nikulin, DeterminantFromIndexTwoOverlattice)
{
    // The span of the eight (-2)-classes has determinant 2^8 = 256; adding the
    // half-sum e gives an index-2 overlattice, so det = 256 / 2^2 = 64.
    IntegerMatrix diag(8, 8);
    for (std::size_t i = 0; i < 8; ++i)
        diag(i, i) = -2;
    EXPECT_EQ(determinant(diag), 256);
    EXPECT_EQ(nikulin_lattice().determinant() * 4, determinant(diag));
    // The eighth node is 2e - (n1 + ... + n7), of square -2 and orthogonal to the rest.
    auto lat = lambda_g(7);
    auto k = nikulin_classes(lat);
    EXPECT_EQ(lat.norm(k.n[7]), -2);
    for (int i = 0; i < 7; ++i)
        EXPECT_EQ(lat.inner(k.n[7], k.n[i]), 0);
}

TEST(LambdaG, IdentitiesForSeveralGenera)
{
    for (int g = 2; g <= 12; ++g)
        for (const auto& id : lambda_identities(g))
            EXPECT_TRUE(id.holds()) << "g=" << g << " " << id.name;
    auto lat = lambda_g(7);
    auto k = nikulin_classes(lat);
    EXPECT_EQ(lat.norm(k.h), 8);
    EXPECT_EQ(lat.inner(k.h, k.c), 12);
    EXPECT_EQ(lat.norm(k.big_n), -16);
    EXPECT_EQ(lat.inner(k.big_n, k.h), 8);
    EXPECT_EQ(lat.inner(k.big_n, k.c), 0);
    EXPECT_EQ(lat.norm(k.e), -4);
    for (const auto& n : k.n)
        EXPECT_EQ(lat.inner(k.h, n), 1);
}

TEST(LambdaG, BlockDeterminant)
{
    for (int g = 2; g <= 10; ++g)
        EXPECT_EQ(lambda_g(g).determinant(), Integer(2 * g - 2) * 64);
    EXPECT_THROW(lambda_g(1), Error);
}

TEST(LambdaG, CongruenceOfC)
{
    for (int g = 2; g <= 12; ++g)
        EXPECT_TRUE(c_congruence_holds(g));
}

TEST(CauchySchwarz, DynamicProgrammingMatchesBruteForce)
{
    // Small boxes where brute force over [-B, B]^n is cheap.
    for (int entries = 1; entries <= 4; ++entries)
        for (long bound = 0; bound <= 3; ++bound)
            for (long sum = -4; sum <= 4; ++sum)
                for (long norm = 0; norm <= 10; ++norm)
                    EXPECT_EQ(count_norm_sum_solutions(sum, norm, bound, entries),
                              brute_force_solutions(sum, norm, bound, entries));
}

TEST(CauchySchwarz, ExhaustiveEightEntrySearchAtBoundThree)
{
    // 7^8 = 5764801 vectors: the full naive search the certificate replaces, at g = 7, a = 1.
    auto cert = cs_obstruction(7, 1);
    ASSERT_EQ(cert.entries.size(), 1u);
    const auto& e = cert.entries.front();
    EXPECT_EQ(e.search_bound, 3);
    EXPECT_EQ(brute_force_solutions(e.sum, e.norm, 3, 8), 0u);
    EXPECT_EQ(e.solutions, 0u);
    // Positive control: the search does find vectors when they exist.
    EXPECT_EQ(brute_force_solutions(2, 2, 3, 8), count_norm_sum_solutions(2, 2, 3, 8));
    EXPECT_EQ(count_norm_sum_solutions(2, 2, 3, 8), 28u);
}

TEST(CauchySchwarz, CertificatePassesForGenusSevenToTwelve)
{
    for (int g = 7; g <= 12; ++g) {
        auto cert = cs_obstruction(g, 5);
        EXPECT_TRUE(cert.passed()) << g;
        for (const auto& e : cert.entries) {
            EXPECT_EQ(e.gap, Integer(e.sum) * e.sum - 8 * Integer(e.norm));
            EXPECT_GT(e.gap, 0);
        }
    }
}

TEST(CauchySchwarz, GapIsPositiveForLargeParameters)
{
    for (long g = 7; g <= 200; ++g)
        for (long a = 1; a <= 50; ++a) {
            Integer s = 2 * a * g - 2 * a - 3;
            Integer n = a * a * (g - 1);
            EXPECT_GT(s * s - 8 * n, 0) << g << " " << a;
        }
}

TEST(DoublyElliptic, Identities)
{
    auto r = doubly_elliptic_identities();
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.curve_norm, 14);
    EXPECT_EQ(r.elliptic_sum_norm, 14);
    EXPECT_EQ(r.elliptic_product, 7);
    for (const auto& x : r.curve_dot_gamma)
        EXPECT_EQ(x, 0);
}

TEST(StandardLattices, E8AndU)
{
    auto a = e8(-1);
    EXPECT_EQ(a.determinant(), 1);
    EXPECT_TRUE(a.is_even());
    EXPECT_TRUE(a.is_negative_definite());
    EXPECT_FALSE(e8(1).is_negative_definite());
    EXPECT_EQ(e8(-2).determinant(), 256);
    EXPECT_EQ(hyperbolic_u().determinant(), -1);
    auto sum = hyperbolic_u() + e8(-1);
    EXPECT_EQ(sum.rank(), 10u);
    EXPECT_EQ(sum.determinant(), -1);
}

TEST(Lattice, Errors)
{
    auto n = nikulin_lattice();
    try {
        n.inner(LatticeVector{1, 0}, LatticeVector{1, 0});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
    }
    EXPECT_THROW(IntegerLattice(IntegerMatrix{{1, 2}, {3, 4}}, {"a", "b"}), Error);
    EXPECT_THROW(cs_obstruction(7, 0), Error);
}
