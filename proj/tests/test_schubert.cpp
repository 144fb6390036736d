#include <gtest/gtest.h>

#include "tautcheck/schubert.hpp"

using namespace tautcheck;

namespace {

// Lattice paths: number of standard fillings of the skew shape (a,b) inside
// the 2 x m box, i.e. coefficient of sigma_{m,m} in sigma_{a,b} sigma_1^{2m-a-b}.
Integer paths_to_top(int a, int b, int m)
{
    if (a > m || b > a)
        return 0;
    if (a == m && b == m)
        return 1;
    return paths_to_top(a + 1, b, m) + paths_to_top(a, b + 1, m);
}

Integer catalan_closed_form(long m)
{
    Integer num = 1, den = 1;
    for (long i = 1; i <= 2 * m; ++i)
        num *= i;
    for (long i = 1; i <= m; ++i)
        den *= i;
    Integer den2 = den * (m + 1);
    return num / (den * den2);
}

} // namespace

TEST(Schubert, GrassmannianDegreeIsCatalan)
{
    for (int n = 3; n <= 12; ++n)
        EXPECT_EQ(degree(SchubertCycle::unit(n)), catalan_closed_form(n - 2)) << n;
    EXPECT_EQ(degree(SchubertCycle::unit(5)), 5);
    EXPECT_EQ(degree(SchubertCycle::unit(6)), 14);
}

TEST(Schubert, DegreesMatchPathCounting)
{
    for (int n = 4; n <= 8; ++n) {
        int m = n - 2;
        for (int a = 0; a <= m; ++a)
            for (int b = 0; b <= a; ++b)
                EXPECT_EQ(degree(SchubertCycle::sigma(n, a, b)), paths_to_top(a, b, m));
    }
}

TEST(Schubert, VQDegree)
{
    EXPECT_EQ(degree(parse_schubert(5, "4*s(2,1)*s1^3")), 8);
    EXPECT_EQ(degree(Integer(4) * SchubertCycle::sigma(5, 2, 1)), 8);
    EXPECT_EQ(Integer(2) * degree(SchubertCycle::unit(5)), 10);
}

TEST(Schubert, PieriAgreesWithSpecialPieriForK1)
{
    for (int n = 4; n <= 7; ++n)
        for (int a = 0; a <= n - 2; ++a)
            for (int b = 0; b <= a; ++b) {
                auto c = SchubertCycle::sigma(n, a, b);
                EXPECT_EQ(pieri(c), special_pieri(c, 1));
            }
}

TEST(Schubert, ProductIsCommutativeAndAssociative)
{
    const int n = 7;
    std::vector<SchubertCycle> classes;
    for (int a = 0; a <= n - 2; ++a)
        for (int b = 0; b <= a; ++b)
            classes.push_back(SchubertCycle::sigma(n, a, b));
    for (const auto& x : classes)
        for (const auto& y : classes) {
            EXPECT_EQ(multiply(x, y), multiply(y, x));
            for (int k = 1; k <= 2; ++k) {
                auto z = SchubertCycle::sigma(n, k, 0);
                EXPECT_EQ(multiply(multiply(x, y), z), multiply(x, multiply(y, z)));
            }
        }
}

TEST(Schubert, KnownProducts)
{
    // sigma_1^2 = sigma_2 + sigma_{1,1}; sigma_{1,1}^2 = sigma_{2,2} in G(2,5).
    EXPECT_EQ(sigma1_power(5, 2).to_string(), "s(2,0) + s(1,1)");
    EXPECT_EQ(multiply(SchubertCycle::sigma(5, 1, 1), SchubertCycle::sigma(5, 1, 1)).to_string(), "s(2,2)");
    EXPECT_EQ(multiply(SchubertCycle::sigma(5, 2, 0), SchubertCycle::sigma(5, 1, 1)).to_string(), "s(3,1)");
    // Classes outside the box vanish.
    EXPECT_TRUE(SchubertCycle::sigma(5, 4, 0).is_zero());
    EXPECT_TRUE(multiply(SchubertCycle::sigma(4, 2, 0), SchubertCycle::sigma(4, 1, 1)).is_zero());
}

TEST(Schubert, GiambelliIdentity)
{
    // sigma_{a,b} = sigma_a sigma_b - sigma_{a+1} sigma_{b-1}
    const int n = 8;
    for (int a = 1; a <= n - 2; ++a)
        for (int b = 1; b <= a; ++b) {
            auto lhs = SchubertCycle::sigma(n, a, b);
            auto rhs = multiply(SchubertCycle::sigma(n, a), SchubertCycle::sigma(n, b)) -
                       multiply(SchubertCycle::sigma(n, a + 1), SchubertCycle::sigma(n, b - 1));
            EXPECT_EQ(lhs, rhs) << a << "," << b;
        }
}

TEST(Schubert, Parser)
{
    EXPECT_EQ(parse_schubert(5, "s1^2"), sigma1_power(5, 2));
    EXPECT_EQ(parse_schubert(5, "s(1,1)^2 - s2*s(1,1)").to_string(), "-s(3,1) + s(2,2)");
    EXPECT_EQ(parse_schubert(5, " -3 * s(2) "), Integer(-3) * SchubertCycle::sigma(5, 2));
    EXPECT_EQ(parse_schubert(6, "2 + s1"), Integer(2) * SchubertCycle::unit(6) + SchubertCycle::sigma(6, 1));
    for (const char* bad : {"", "s(1,2)", "x", "s(1", "s1 s1", "s(2,1)^"}) {
        try {
            parse_schubert(5, bad);
            ADD_FAILURE() << bad;
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::ParseError) << bad;
        }
    }
}

TEST(Schubert, Errors)
{
    try {
        degree(SchubertCycle::sigma(5, 1) + SchubertCycle::sigma(5, 2));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::MixedCodimension);
    }
    try {
        multiply(SchubertCycle::unit(5), SchubertCycle::unit(6));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::AmbientMismatch);
    }
    EXPECT_THROW(vq_dimension(3), Error);
}

TEST(Schubert, LinesOnQuadricDimension)
{
    for (int n = 4; n <= 12; ++n)
        EXPECT_EQ(vq_dimension(n), SchubertCycle(n + 1).dimension() - 3);
}
