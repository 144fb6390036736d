#include <gtest/gtest.h>

#include <random>

#include "tautcheck/picard.hpp"

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

DivisorClass random_class(std::mt19937_64& rng, const ModuliSpaceId& space)
{
    std::uniform_int_distribution<long> num(-20, 20), den(1, 6);
    std::vector<DivisorClass::Entry> e;
    for (const auto& s : space.basis())
        e.emplace_back(s, make_rational(num(rng), den(rng)));
    return DivisorClass::of(space, e);
}

} // namespace

TEST(ModuliSpace, Bases)
{
    EXPECT_EQ(ModuliSpaceId(SpaceKind::Mbar, 8).basis(),
              (std::vector<std::string>{"lambda", "delta0", "delta1", "delta2", "delta3", "delta4"}));
    EXPECT_EQ(ModuliSpaceId(SpaceKind::Rbar, 5).basis(),
              (std::vector<std::string>{"lambda", "delta0'", "delta0''", "delta0ram", "pi*delta1", "pi*delta2"}));
    auto spin = ModuliSpaceId(SpaceKind::SbarPlus, 4).basis();
    EXPECT_EQ(spin, (std::vector<std::string>{"lambda", "alpha0", "beta0", "alpha1", "beta1", "alpha2", "beta2"}));
    EXPECT_EQ(code_of([] { ModuliSpaceId(SpaceKind::Mbar, 1); }), ErrorCode::BadGenus);
}

TEST(DivisorClass, ValidationErrors)
{
    ModuliSpaceId m(SpaceKind::Mbar, 8);
    EXPECT_EQ(code_of([&] { class_of(m, {{"alpha0", 1}}); }), ErrorCode::UnknownSymbol);
    EXPECT_EQ(code_of([&] { class_of(m, {{"lambda", 1}, {"lambda", 2}}); }), ErrorCode::DuplicateSymbol);
    EXPECT_EQ(code_of([&] { class_of(m, {{"lambda", 1}}, {"lambda"}); }), ErrorCode::DuplicateSymbol);
    EXPECT_EQ(code_of([&] { class_of(m, {{"delta5", 1}}); }), ErrorCode::UnknownSymbol);
}

TEST(DivisorClass, OpaqueCoefficientsCannotBeRead)
{
    auto k = canonical_class(ModuliSpaceId(SpaceKind::Rbar, 6));
    EXPECT_TRUE(k.is_opaque("pi*delta1"));
    EXPECT_EQ(code_of([&] { k.coeff("pi*delta2"); }), ErrorCode::OpaqueCoefficient);
    EXPECT_EQ(k.coeff("delta0ram"), -3);
}

TEST(DivisorClass, OpacityPropagatesThroughArithmetic)
{
    ModuliSpaceId m(SpaceKind::Mbar, 4);
    auto a = class_of(m, {{"lambda", 1}}, {"delta1"});
    auto b = class_of(m, {{"delta1", 5}});
    auto s = a + b;
    EXPECT_TRUE(s.is_opaque("delta1"));
    EXPECT_EQ(s.to_string(), "lambda + ?*delta1");
    EXPECT_TRUE((Rational(0) * a).is_zero());
    EXPECT_EQ(code_of([&] { a + class_of(ModuliSpaceId(SpaceKind::Mbar, 5), {}); }), ErrorCode::SpaceMismatch);
}

TEST(DivisorClass, LinearityProperties)
{
    std::mt19937_64 rng(7);
    for (auto kind : {SpaceKind::Mbar, SpaceKind::Rbar, SpaceKind::SbarPlus}) {
        ModuliSpaceId space(kind, 8);
        for (int trial = 0; trial < 50; ++trial) {
            auto a = random_class(rng, space);
            auto b = random_class(rng, space);
            auto c = random_class(rng, space);
            Rational s = make_rational(trial - 25, 3);
            EXPECT_EQ(a + b, b + a);
            EXPECT_EQ((a + b) + c, a + (b + c));
            EXPECT_EQ(s * (a + b), s * a + s * b);
            EXPECT_TRUE((a - a).is_zero());
        }
    }
}

TEST(DivisorClass, Rendering)
{
    EXPECT_EQ(bn8().to_string(), "22*lambda - 3*delta0 - 14*delta1 - 24*delta2 - 30*delta3 - 32*delta4");
    EXPECT_EQ(theta_null(8).to_string(), "1/4*lambda - 1/16*alpha0 - 1/2*beta1 - 1/2*beta2 - 1/2*beta3 - 1/2*beta4");
    EXPECT_EQ(DivisorClass(ModuliSpaceId(SpaceKind::Mbar, 3)).to_string(), "0");
}

TEST(Pullback, PrymMapsDeltaZeroToThreeComponents)
{
    ModuliSpaceId m(SpaceKind::Mbar, 6);
    auto d = pullback_to_prym(class_of(m, {{"lambda", 2}, {"delta0", 1}, {"delta2", 3}}));
    EXPECT_EQ(d.to_string(), "2*lambda + delta0' + delta0'' + 2*delta0ram + 3*pi*delta2");
    EXPECT_EQ(code_of([&] { pullback_to_prym(d); }), ErrorCode::SpaceMismatch);
}

TEST(Pullback, SpinMapsDeltaZeroToAlphaPlusTwoBeta)
{
    auto d = pullback_to_spin(bn8());
    EXPECT_EQ(d.coeff("alpha0"), -3);
    EXPECT_EQ(d.coeff("beta0"), -6);
    for (int i = 1; i <= 4; ++i)
        EXPECT_EQ(d.coeff(sym::alpha(i)), d.coeff(sym::beta(i)));
    EXPECT_EQ(d.coeff("alpha4"), -32);
}

TEST(Pullback, IsLinear)
{
    std::mt19937_64 rng(11);
    ModuliSpaceId m(SpaceKind::Mbar, 7);
    for (int trial = 0; trial < 30; ++trial) {
        auto a = random_class(rng, m);
        auto b = random_class(rng, m);
        EXPECT_EQ(pullback_to_spin(a + b), pullback_to_spin(a) + pullback_to_spin(b));
        EXPECT_EQ(pullback_to_prym(Rational(3) * a), Rational(3) * pullback_to_prym(a));
    }
}

TEST(Pullback, OpaqueSourceMakesImagesOpaque)
{
    auto k = canonical_class(ModuliSpaceId(SpaceKind::Mbar, 4));
    auto p = pullback_to_spin(k);
    EXPECT_TRUE(p.is_opaque("alpha1"));
    EXPECT_TRUE(p.is_opaque("beta2"));
    EXPECT_EQ(p.coeff("beta0"), -4);
}

TEST(NamedClasses, CanonicalClassOfSpinSpace)
{
    auto k = canonical_class(ModuliSpaceId(SpaceKind::SbarPlus, 8));
    EXPECT_EQ(k.to_string(), "13*lambda - 2*alpha0 - 3*beta0 - 3*alpha1 - 3*beta1 - 2*alpha2 - 2*beta2 - 2*alpha3 - "
                             "2*beta3 - 2*alpha4 - 2*beta4");
}

TEST(NamedClasses, PrymGreenRejectsWrongGenus)
{
    EXPECT_EQ(code_of([] { prym_green(8, 0); }), ErrorCode::BadParam);
    EXPECT_EQ(code_of([] { prym_green(3); }), ErrorCode::BadParam);
    EXPECT_EQ(code_of([] { prym_green(4, -1); }), ErrorCode::BadParam);
    EXPECT_EQ(prym_green(10), prym_green(10, 2));
}

TEST(NamedClasses, PrymGreenLambdaCoefficient)
{
    // C(2i+2, i) * 3(2i+7)/(i+3), evaluated by hand for i = 0, 1, 2.
    EXPECT_EQ(prym_green(6, 0).coeff("lambda"), 7);
    EXPECT_EQ(prym_green(8, 1).coeff("lambda"), 4 * make_rational(27, 4));
    EXPECT_EQ(prym_green(10, 2).coeff("lambda"), 15 * make_rational(33, 5));
}

TEST(NamedClasses, HodgeBundleOfCubes)
{
    auto e3 = hodge_c1(5, 3);
    EXPECT_EQ(e3.pinned_part().to_string(), "37*lambda - 3*delta0' - 3*delta0'' - 33/4*delta0ram");
    auto e1 = hodge_c1(5, 1);
    EXPECT_EQ(e1.pinned_part().to_string(), "lambda - 1/4*delta0ram");
    EXPECT_EQ(code_of([] { hodge_c1(5, 0); }), ErrorCode::BadParam);
}

TEST(SymPower, FactorMatchesFormalChernRoots)
{
    // Oracle: c1(Sym^p E) for E with Chern roots x_1..x_r is the sum over
    // multisets of size p of the root sums; each root appears in
    // sum over multisets of its multiplicity = p * C(r+p-1, p) / r times.
    auto multiset_factor = [](int r, int p) {
        // Enumerate multisets of {0..r-1} of size p as nondecreasing sequences; count root 0.
        long count = 0;
        std::vector<int> seq(p, 0);
        for (;;) {
            for (int x : seq)
                count += x == 0;
            int k = p - 1;
            while (k >= 0 && seq[k] == r - 1)
                --k;
            if (k < 0)
                break;
            ++seq[k];
            for (int j = k + 1; j < p; ++j)
                seq[j] = seq[k];
        }
        return count;
    };
    ModuliSpaceId m(SpaceKind::Mbar, 3);
    auto lambda = class_of(m, {{"lambda", 1}});
    for (int r = 1; r <= 5; ++r)
        for (int p = 1; p <= 4; ++p)
            EXPECT_EQ(sym_power_c1(lambda, r, p).coeff("lambda"), multiset_factor(r, p)) << r << " " << p;
    EXPECT_EQ(sym_power_c1(lambda, 4, 3).coeff("lambda"), 15);
}

TEST(NamedClasses, DifferenceOfTheTwoDegeneracyClasses)
{
    auto d1 = hodge_c1(5, 3) - sym_power_c1(hodge_c1(5, 1), 4, 3);
    EXPECT_EQ(d1.pinned_part().to_string(), "22*lambda - 3*delta0' - 3*delta0'' - 9/2*delta0ram");
    auto diff = (d1 - d2_nonveryample()).pinned_part();
    EXPECT_EQ(diff.to_string(), "8*lambda - delta0' - delta0'' - 2*delta0ram");
}

TEST(Slope, BrillNoetherDivisor)
{
    EXPECT_EQ(to_string(slope(bn8())), "22/3");
    ModuliSpaceId m(SpaceKind::Mbar, 4);
    EXPECT_EQ(code_of([&] { slope(class_of(m, {{"lambda", 1}})); }), ErrorCode::ZeroDenominator);
    EXPECT_EQ(code_of([&] { slope(class_of(m, {{"lambda", 1}, {"delta0", 2}})); }), ErrorCode::BadParam);
    EXPECT_EQ(code_of([] { slope(theta_null(4)); }), ErrorCode::SpaceMismatch);
}

TEST(NamedClasses, Lookup)
{
    EXPECT_EQ(named_divisor("bn8", 8), bn8());
    EXPECT_EQ(code_of([] { named_divisor("bn8", 7); }), ErrorCode::BadParam);
    EXPECT_EQ(code_of([] { named_divisor("nope", 7); }), ErrorCode::BadParam);
    EXPECT_EQ(code_of([] { named_divisor("hodge_c1", 7); }), ErrorCode::BadParam);
    EXPECT_EQ(named_divisor("canonical", 5, std::nullopt, SpaceKind::Rbar).space().kind(), SpaceKind::Rbar);
    for (const auto& name : divisor_names())
        EXPECT_FALSE(name.empty());
}
