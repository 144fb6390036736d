#include <gtest/gtest.h>

#include <bitset>

#include "tautcheck/curves.hpp"

using namespace tautcheck;

namespace {

template <class F>
ErrorCode code_of(F&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorCode::ParseError;
}

// Even theta characteristics counted over F_2^g x F_2^g.
long count_even_thetas(int g)
{
    long even = 0;
    for (unsigned a = 0; a < (1u << g); ++a)
        for (unsigned b = 0; b < (1u << g); ++b)
            even += std::bitset<32>(a & b).count() % 2 == 0;
    return even;
}

} // namespace

TEST(Xi, PairingsForEveryGenus)
{
    for (int g = 2; g <= 12; ++g) {
        auto xi = xi_curve(g);
        EXPECT_EQ(xi.pairing("lambda"), g + 1);
        EXPECT_EQ(xi.pairing("delta0'"), 6 * g + 2);
        EXPECT_EQ(xi.pairing("delta0''"), 0);
        EXPECT_EQ(xi.pairing("delta0ram"), 8);
        for (int i = 1; i <= g / 2; ++i)
            EXPECT_EQ(xi.pairing(sym::pi_delta(i)), 0);
        EXPECT_EQ(pair(xi, canonical_class(ModuliSpaceId(SpaceKind::Rbar, g))), g - 15);
    }
}

TEST(Xi, PushforwardAgreesWithK3Pencil)
{
    // A K3 Lefschetz pencil of genus-g curves: lambda = g + 1, delta0 = 6g + 18.
    for (int g = 2; g <= 12; ++g) {
        auto push = pushforward(xi_curve(g));
        auto k3 = k3_lefschetz_pencil(g);
        EXPECT_EQ(push.pairing("lambda"), k3.pairing("lambda"));
        EXPECT_EQ(push.pairing("delta0"), k3.pairing("delta0"));
        EXPECT_EQ(k3.pairing("delta0"), 6 * g + 18);
    }
}

TEST(Xi, PrymGreenPairing)
{
    const long expected[] = {-1, -5, -21, -84, -330, -1287, -5005};
    for (int i = 0; i <= 6; ++i) {
        EXPECT_EQ(pair(xi_curve(2 * i + 6), prym_green(2 * i + 6, i)), expected[i]);
        EXPECT_EQ(pair(xi_curve(2 * i + 6), prym_green(2 * i + 6, i)), -Rational(binomial(2 * i + 3, i)));
    }
}

TEST(Xi, NikulinDivisor) { EXPECT_EQ(pair(xi_curve(6), nikulin_n6()), -1); }

TEST(Pairing, OpaqueCoefficientMeetingNonzeroPairingIsAnError)
{
    ModuliSpaceId r(SpaceKind::Rbar, 6);
    auto c = CurveClass::of(r, {{"pi*delta1", 1}}, "probe");
    EXPECT_EQ(code_of([&] { pair(c, canonical_class(r)); }), ErrorCode::OpaquePairing);
    // prym_green leaves delta0'' opaque; a curve meeting delta0'' cannot be paired with it.
    auto d = CurveClass::of(r, {{"delta0''", 1}}, "probe");
    EXPECT_EQ(code_of([&] { pair(d, prym_green(6, 0)); }), ErrorCode::OpaquePairing);
}

TEST(Pairing, SpaceMismatch)
{
    EXPECT_EQ(code_of([] { pair(xi_curve(8), theta_null(8)); }), ErrorCode::SpaceMismatch);
    EXPECT_EQ(code_of([] { pair(xi_curve(7), prym_green(6, 0)); }), ErrorCode::SpaceMismatch);
}

TEST(Pairing, IsLinearInTheDivisor)
{
    auto r = r_curve_g8();
    auto a = theta_null(8);
    auto b = pullback_to_spin(bn8());
    for (int s = -3; s <= 3; ++s)
        EXPECT_EQ(pair(r, a + Rational(s) * b), pair(r, a) + s * pair(r, b));
}

TEST(Pencil, NoetherBudget)
{
    EXPECT_EQ(noether_c2(2, 0), 24);
    EXPECT_EQ(noether_c2(1, 9), 3);
    SurfacePencilSpec bad;
    bad.chi = 0;
    bad.k_squared = 1;
    EXPECT_EQ(code_of([&] { pencil_curve(bad); }), ErrorCode::BadParam);
    SurfacePencilSpec rbar;
    rbar.target = SpaceKind::Rbar;
    rbar.chi = 1;
    EXPECT_EQ(code_of([&] { pencil_curve(rbar); }), ErrorCode::BadParam);
    SurfacePencilSpec too_many;
    too_many.target = SpaceKind::SbarPlus;
    too_many.chi = 1;
    too_many.k_squared = 9;
    too_many.nodes_resolved = 100;
    EXPECT_EQ(code_of([&] { pencil_curve(too_many); }), ErrorCode::NegativeBudget);
}

TEST(Gamma, TriplesAndThetaPairing)
{
    struct Row {
        int g;
        long lambda, alpha0, beta0, theta;
    };
    const Row rows[] = {{4, 4, 32, 1, -1},   {5, 10, 72, 4, -2},  {6, 12, 80, 6, -2},
                        {7, 14, 88, 8, -2},  {8, 15, 92, 8, -2},  {9, 16, 96, 8, -2}};
    for (const auto& row : rows) {
        auto c = gamma_curve(row.g);
        EXPECT_EQ(c.pairing("lambda"), row.lambda) << row.g;
        EXPECT_EQ(c.pairing("alpha0"), row.alpha0) << row.g;
        EXPECT_EQ(c.pairing("beta0"), row.beta0) << row.g;
        EXPECT_EQ(pair(c, theta_null(row.g)), row.theta) << row.g;
        for (int i = 1; i <= row.g / 2; ++i) {
            EXPECT_EQ(c.pairing(sym::alpha(i)), 0);
            EXPECT_EQ(c.pairing(sym::beta(i)), 0);
        }
    }
    EXPECT_EQ(code_of([] { gamma_curve(3); }), ErrorCode::BadGenus);
    EXPECT_EQ(code_of([] { gamma_curve(10); }), ErrorCode::BadGenus);
}

TEST(Gamma, GenusSixFromTheCompleteIntersection)
{
    // (2,2,3) complete intersection in P^5. Chern classes from
    // c(T) = (1+H)^6 / ((1+2H)^2 (1+3H)), with H^2 = deg = 12.
    const long deg = 2 * 2 * 3;
    const long num[] = {1, 6, 15};   // (1+H)^6 up to H^2
    const long den[] = {1, -7, 33};  // (1-4H+12H^2)(1-3H+9H^2) up to H^2
    const long c1 = num[0] * den[1] + num[1] * den[0];
    const long c2 = (num[0] * den[2] + num[1] * den[1] + num[2] * den[0]) * deg;
    EXPECT_EQ(c1, -1); // K = H
    EXPECT_EQ(c2, 72);
    const long k_squared = c1 * c1 * deg;
    auto spec = gamma_surface(6);
    EXPECT_EQ(spec.k_squared, k_squared);
    EXPECT_EQ(12 * spec.chi, k_squared + c2);
    EXPECT_EQ(noether_c2(spec.chi, spec.k_squared), c2);
}

TEST(R, Battery)
{
    auto r = r_curve_g8();
    EXPECT_EQ(r.pairing("lambda"), 9);
    EXPECT_EQ(r.boundary_budget(), 66);
    EXPECT_EQ(r.pairing("beta0"), 7);
    EXPECT_EQ(r.pairing("alpha0"), 52);
    EXPECT_EQ(pair(r, theta_null(8)), -1);
    EXPECT_EQ(pair(r, pullback_to_spin(bn8())), 9 * 22 - 3 * 66);
    EXPECT_EQ(pair(r, pullback_to_spin(bn8())), 0);
}

TEST(R, HalfIntegerFibresSumToAnInteger)
{
    SurfacePencilSpec spec = r_surface_g8();
    spec.reducible_fibres = {7};
    auto half = pencil_curve(spec);
    EXPECT_EQ(to_string(half.pairing("beta0")), "7/2");
    EXPECT_EQ(r_curve_g8().pairing("beta0").get_den(), 1);
}

TEST(Septic, Pencil)
{
    auto s = septic_pencil_curve();
    EXPECT_EQ(s.pairing("lambda"), 8);
    EXPECT_EQ(s.pairing("delta0"), 59);
    EXPECT_EQ(pair(s, bn8()), -1);
    for (int i = 1; i <= 4; ++i)
        EXPECT_EQ(s.pairing(sym::delta(i)), 0);
}

TEST(Btilde, CoveringDegreeMatchesEnumeration)
{
    for (int g = 1; g <= 8; ++g)
        EXPECT_EQ(even_theta_count(g), count_even_thetas(g)) << g;
    EXPECT_EQ(even_theta_count(8), 32896);
}

TEST(Btilde, PairsOnlyWithPullbacks)
{
    auto b = btilde_curve(septic_pencil_curve());
    EXPECT_EQ(pair(b, pullback_to_spin(bn8())), -32896);
    EXPECT_EQ(code_of([&] { b.pairing("alpha0"); }), ErrorCode::UndefinedSplit);
    EXPECT_EQ(code_of([&] { pair(b, theta_null(8)); }), ErrorCode::UndefinedSplit);
    EXPECT_EQ(b.boundary_budget(), 59 * 32896);
}

TEST(Btilde, RejectsCurvesMeetingHigherBoundary)
{
    ModuliSpaceId m(SpaceKind::Mbar, 8);
    auto c = CurveClass::of(m, {{"lambda", 1}, {"delta2", 1}}, "probe");
    EXPECT_EQ(code_of([&] { btilde_curve(c); }), ErrorCode::NonzeroHigherBoundary);
    EXPECT_EQ(code_of([] { btilde_curve(r_curve_g8()); }), ErrorCode::SpaceMismatch);
}

TEST(Pushforward, ProjectionFormula)
{
    // pi_*(C) . D == C . pi^*(D) for classes on Mbar with pinned coefficients.
    auto r = r_curve_g8();
    EXPECT_EQ(pair(pushforward(r), bn8()), pair(r, pullback_to_spin(bn8())));
    auto xi = xi_curve(8);
    EXPECT_EQ(pair(pushforward(xi), bn8()), pair(xi, pullback_to_prym(bn8())));
}
