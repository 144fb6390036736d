#ifndef TAUTCHECK_VERIFY_HPP
#define TAUTCHECK_VERIFY_HPP

#include <bitset>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tautcheck/curves.hpp"
#include "tautcheck/error.hpp"
#include "tautcheck/kodaira.hpp"
#include "tautcheck/lattice.hpp"
#include "tautcheck/picard.hpp"
#include "tautcheck/quadratic.hpp"
#include "tautcheck/rational.hpp"
#include "tautcheck/sampling.hpp"
#include "tautcheck/schubert.hpp"

namespace tautcheck {

enum class CheckStatus { Pass, Fail, CitedNotReplayed };

inline std::string status_name(CheckStatus s)
{
    switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::CitedNotReplayed: return "cited-not-replayed";
    }
    return "?";
}

struct CheckRecord {
    std::string id;
    std::string citation;
    std::string computed;
    std::string expected;
    CheckStatus status = CheckStatus::Fail;
    // Which catalog entries the check reads; used for fault-injection bookkeeping.
    bool uses_theta = false;
    bool uses_bn8 = false;
};

struct Report {
    std::vector<CheckRecord> checks;

    std::size_t count(CheckStatus s) const
    {
        std::size_t n = 0;
        for (const auto& c : checks)
            n += c.status == s;
        return n;
    }
    std::size_t passed() const { return count(CheckStatus::Pass); }
    std::size_t failed() const { return count(CheckStatus::Fail); }
    std::size_t cited() const { return count(CheckStatus::CitedNotReplayed); }
    bool ok() const { return failed() == 0; }

    const CheckRecord* find(const std::string& id) const
    {
        for (const auto& c : checks)
            if (c.id == id)
                return &c;
        return nullptr;
    }
};

/// Which part of the registry to run. CatalogOnly keeps the checks that read
/// theta_null or bn8, the only ones a catalog perturbation can move.
enum class VerifyScope { Full, CatalogOnly };

inline constexpr std::uint64_t default_seed = 20100813;

namespace detail {

using Outcome = std::pair<std::string, std::string>; // computed, expected

struct RegisteredCheck {
    std::string id;
    std::string citation;
    bool uses_theta = false;
    bool uses_bn8 = false;
    std::function<Outcome()> run;
};

inline std::string join(const std::vector<std::string>& parts, const std::string& sep = ",")
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            out += sep;
        out += parts[i];
    }
    return out;
}

inline std::string pairing_list(const CurveClass& c, const std::vector<std::string>& symbols)
{
    std::vector<std::string> parts;
    for (const auto& s : symbols)
        parts.push_back(s + "=" + to_string(c.pairing(s)));
    return join(parts);
}

inline std::string agree_count(std::size_t agree, std::size_t total)
{
    return std::to_string(agree) + "/" + std::to_string(total);
}

/// Even theta characteristics counted directly: pairs (a, b) in F_2^g x F_2^g with a.b = 0.
inline std::uint64_t enumerate_even_thetas(int genus)
{
    const std::uint64_t n = std::uint64_t(1) << genus;
    std::uint64_t even = 0;
    for (std::uint64_t a = 0; a < n; ++a)
        for (std::uint64_t b = 0; b < n; ++b)
            even += std::bitset<64>(a & b).count() % 2 == 0;
    return even;
}

inline RationalVector psi_of_rank(int r)
{
    WedgeBasisIndex idx(6);
    RationalVector psi(idx.size(), Rational(0));
    for (int k = 0; k < r; ++k)
        psi[idx.index_of(std::size_t(2 * k), std::size_t(2 * k + 1))] = 1;
    return psi;
}

inline std::vector<RegisteredCheck> registry(const ClassCatalog& cat, std::uint64_t seed)
{
    std::vector<RegisteredCheck> out;
    auto add = [&](std::string id, std::string citation, bool theta, bool bn, std::function<Outcome()> f) {
        out.push_back({std::move(id), std::move(citation), theta, bn, std::move(f)});
    };

    // Nikulin pencils in Rbar_g.
    for (int g = 2; g <= 12; ++g) {
        add("xi.pairings.g" + std::to_string(g), "Nikulin pencil Xi_g intersection numbers", false, false, [g] {
            auto xi = xi_curve(g);
            ModuliSpaceId space(SpaceKind::Rbar, g);
            std::string computed = pairing_list(xi, {sym::lambda, sym::delta0_prime, sym::delta0_second,
                                                     sym::delta0_ram});
            for (int i = 1; i <= g / 2; ++i)
                computed += "," + sym::pi_delta(i) + "=" + to_string(xi.pairing(sym::pi_delta(i)));
            computed += ";K=" + to_string(pair(xi, canonical_class(space)));
            std::string expected = "lambda=" + std::to_string(g + 1) + ",delta0'=" + std::to_string(6 * g + 2) +
                                   ",delta0''=0,delta0ram=8";
            for (int i = 1; i <= g / 2; ++i)
                expected += "," + sym::pi_delta(i) + "=0";
            expected += ";K=" + std::to_string(g - 15);
            return Outcome{computed, expected};
        });
    }
    add("xi.k3_pushforward", "Nikulin pencil Xi_g vs K3 Lefschetz pencil in Mbar_g", false, false, [] {
        std::vector<std::string> computed, expected;
        for (int g = 2; g <= 12; ++g) {
            auto push = pushforward(xi_curve(g));
            auto k3 = k3_lefschetz_pencil(g);
            computed.push_back(pairing_list(push, {sym::lambda, sym::delta(0)}));
            expected.push_back(pairing_list(k3, {sym::lambda, sym::delta(0)}));
        }
        return Outcome{join(computed, ";"), join(expected, ";")};
    });

    const long prym_green_values[] = {-1, -5, -21, -84, -330, -1287, -5005};
    for (int i = 0; i <= 6; ++i) {
        long value = prym_green_values[i];
        add("prym_green.i" + std::to_string(i), "Xi_{2i+6} against the Prym-Green class", false, false,
            [i, value] {
                return Outcome{to_string(pair(xi_curve(2 * i + 6), prym_green(2 * i + 6, i))),
                               std::to_string(value)};
            });
    }
    add("nikulin_n6.xi6", "Xi_6 against the Prym-Nikulin divisor", false, false,
        [] { return Outcome{to_string(pair(xi_curve(6), nikulin_n6())), "-1"}; });
    add("nikulin_n6.prym_green_agreement", "Prym-Green class at i = 0 vs the Prym-Nikulin divisor", false, false, [] {
        auto pg = prym_green(6, 0).pinned_part();
        auto n6 = nikulin_n6().with(sym::delta0_second, 0).pinned_part();
        return Outcome{pg.to_string(), n6.to_string()};
    });

    add("hodge.difference_g5", "D1 - D2 in Rbar_5 from c1(E_3) - c1(Sym^3 E_1)", false, false, [] {
        auto e1 = hodge_c1(5, 1);
        auto d1 = hodge_c1(5, 3) - sym_power_c1(e1, 4, 3);
        auto diff = (d1 - d2_nonveryample()).pinned_part();
        ModuliSpaceId space(SpaceKind::Rbar, 5);
        auto expected = class_of(space, {{sym::lambda, 8}, {sym::delta0_prime, -1}, {sym::delta0_second, -1},
                                         {sym::delta0_ram, -2}});
        Rational factor = sym_power_c1(e1, 4, 3).coeff(sym::lambda) / e1.coeff(sym::lambda);
        return Outcome{diff.to_string() + ";factor=" + to_string(factor), expected.to_string() + ";factor=15"};
    });

    // Canonical-surface pencils Gamma_g in Sbar_g^+.
    for (int g = 4; g <= 9; ++g) {
        add("gamma.g" + std::to_string(g), "Gamma_g pencil against theta_null", true, false, [g, cat] {
            auto gamma = gamma_curve(g);
            auto report = theta_rigidity_report(g, cat);
            std::string computed = pairing_list(gamma, {sym::lambda, sym::alpha(0), sym::beta(0)}) +
                                   ";theta=" + to_string(report.rows.front().self_pairing) +
                                   ";verdict=" + (report.verdict ? "rigid" : "not-rigid");
            long lambda = g >= 7 ? g + 7 : g == 6 ? 12 : g == 5 ? 10 : 4;
            long alpha0 = g >= 7 ? 4 * g + 60 : g == 6 ? 80 : g == 5 ? 72 : 32;
            long beta0 = g >= 7 ? 8 : g == 6 ? 6 : g == 5 ? 4 : 1;
            std::string expected = "lambda=" + std::to_string(lambda) + ",alpha0=" + std::to_string(alpha0) +
                                   ",beta0=" + std::to_string(beta0) + ";theta=" + (g == 4 ? "-1" : "-2") +
                                   ";verdict=rigid";
            return Outcome{computed, expected};
        });
    }
    add("theta_null.scaled_g4_9", "8 theta_null = 2 lambda - alpha0/2 - 4 sum beta_i", true, false, [cat] {
        std::vector<std::string> computed, expected;
        for (int g = 4; g <= 9; ++g) {
            computed.push_back((Rational(8) * cat.theta_null(g)).to_string());
            ModuliSpaceId space(SpaceKind::SbarPlus, g);
            std::vector<DivisorClass::Entry> e{{sym::lambda, 2}, {sym::alpha(0), make_rational(-1, 2)}};
            for (int i = 1; i <= g / 2; ++i)
                e.emplace_back(sym::beta(i), -4);
            expected.push_back(class_of(space, e).to_string());
        }
        return Outcome{join(computed, ";"), join(expected, ";")};
    });

    add("septic.pencil", "Lefschetz pencil of 7-nodal plane septics against bn8", false, true, [cat] {
        auto septic = septic_pencil_curve();
        std::string computed = pairing_list(septic, {sym::lambda, sym::delta(0), sym::delta(1), sym::delta(2),
                                                     sym::delta(3), sym::delta(4)}) +
                               ";bn8=" + to_string(pair(septic, cat.bn8()));
        return Outcome{computed, "lambda=8,delta0=59,delta1=0,delta2=0,delta3=0,delta4=0;bn8=-1"};
    });

    add("decomposition.g8", "K = 1/2 pi^*bn8 + 8 theta_null + sum a_i alpha_i + b_i beta_i on Sbar_8^+", true, true,
        [cat] {
            auto d = decompose_canonical_g8(cat);
            std::vector<std::string> pairs;
            for (int i = 1; i <= 4; ++i)
                pairs.push_back("(" + to_string(d.a.at(i)) + "," + to_string(d.b.at(i)) + ")");
            std::string computed = join(pairs) + ";residual=" + d.residual.to_string() +
                                   ";positive=" + (d.coefficients_positive() ? "yes" : "no");
            return Outcome{computed, "(4,8),(10,14),(13,17),(14,18);residual=0;positive=yes"};
        });

    add("r_curve.g8", "Pencil R on a doubly-elliptic K3 in Sbar_8^+", true, true, [cat] {
        auto r = r_curve_g8();
        auto spec = r_surface_g8();
        std::vector<std::string> halves;
        Rational beta0 = 0;
        for (long n : spec.reducible_fibres) {
            halves.push_back(to_string(make_rational(n, 2)));
            beta0 += make_rational(n, 2);
        }
        std::string computed = "lambda=" + to_string(r.pairing(sym::lambda)) +
                               ",budget=" + to_string(r.boundary_budget()) + ",beta0=" + join(halves, "+") + "=" +
                               to_string(beta0) + ",alpha0=" + to_string(r.pairing(sym::alpha(0))) +
                               ";theta=" + to_string(pair(r, cat.theta_null(8))) +
                               ";bn8=" + to_string(pair(r, pullback_to_spin(cat.bn8())));
        for (int i = 1; i <= 4; ++i)
            computed += ";" + sym::alpha(i) + "=" + to_string(r.pairing(sym::alpha(i))) + "," + sym::beta(i) + "=" +
                        to_string(r.pairing(sym::beta(i)));
        std::string expected = "lambda=9,budget=66,beta0=7/2+7/2=7,alpha0=52;theta=-1;bn8=0";
        for (int i = 1; i <= 4; ++i)
            expected += ";" + sym::alpha(i) + "=0," + sym::beta(i) + "=0";
        return Outcome{computed, expected};
    });

    add("rigidity.g8", "Sign table of the genus-8 decomposition", true, true, [cat] {
        auto report = rigidity_report_g8(cat);
        std::vector<std::string> rows;
        for (const auto& row : report.rows)
            rows.push_back(row.component + "/" + row.curve + "=" + to_string(row.self_pairing));
        return Outcome{join(rows, ";") + ";verdict=" + (report.verdict ? "rigid" : "not-rigid"),
                       "theta_null/R=-1;pi*(bn8)/btilde(septic pencil)=-32896;verdict=rigid"};
    });

    add("btilde.degree", "Degree of Sbar_8^+ -> Mbar_8: 2^{g-1}(2^g+1)", false, false, [] {
        return Outcome{to_string(even_theta_count(8)) + ";enumerated=" + std::to_string(enumerate_even_thetas(8)),
                       "32896;enumerated=32896"};
    });
    add("btilde.bn8", "Lift of the septic pencil against pi^*bn8 (units of c^2_{8,7})", false, true, [cat] {
        auto lifted = btilde_curve(septic_pencil_curve());
        Rational v = pair(lifted, pullback_to_spin(cat.bn8()));
        return Outcome{to_string(v) + (v < 0 ? ";negative" : ";nonnegative"), "-32896;negative"};
    });

    // Lattices.
    add("lattice.nikulin", "Nikulin lattice: even, rank 8, determinant 64", false, false, [] {
        auto n = nikulin_lattice();
        return Outcome{"rank=" + std::to_string(n.rank()) + ",even=" + (n.is_even() ? "yes" : "no") +
                           ",det=" + to_string(n.determinant()),
                       "rank=8,even=yes,det=64"};
    });
    add("lattice.lambda7", "Numerical identities in Lambda_7", false, false, [] {
        std::vector<std::string> computed, expected;
        for (const auto& id : lambda_identities(7)) {
            computed.push_back(id.name + "=" + to_string(id.computed));
            expected.push_back(id.name + "=" + to_string(id.expected));
        }
        return Outcome{join(computed), join(expected)};
    });
    add("lattice.lambda7_values", "Lambda_7: H^2 = 8, H.C = 12, N^2 = -16, N.H = 8, N.C = 0, e^2 = -4", false, false,
        [] {
            auto lat = lambda_g(7);
            auto k = nikulin_classes(lat);
            std::string computed = "H^2=" + to_string(lat.norm(k.h)) + ",H.C=" + to_string(lat.inner(k.h, k.c)) +
                                   ",N^2=" + to_string(lat.norm(k.big_n)) +
                                   ",N.H=" + to_string(lat.inner(k.big_n, k.h)) +
                                   ",N.C=" + to_string(lat.inner(k.big_n, k.c)) + ",e^2=" + to_string(lat.norm(k.e));
            return Outcome{computed, "H^2=8,H.C=12,N^2=-16,N.H=8,N.C=0,e^2=-4"};
        });
    for (int g = 7; g <= 12; ++g) {
        add("lattice.cauchy_schwarz.g" + std::to_string(g), "No square-zero class of H-degree 3 in Lambda_g",
            false, false, [g] {
                auto cert = cs_obstruction(g, 5);
                std::vector<std::string> computed, expected;
                for (const auto& e : cert.entries) {
                    computed.push_back("a=" + std::to_string(e.a) + ":gap" + (e.gap > 0 ? ">0" : "<=0") +
                                       ",solutions=" + std::to_string(e.solutions));
                    expected.push_back("a=" + std::to_string(e.a) + ":gap>0,solutions=0");
                }
                return Outcome{join(computed, ";"), join(expected, ";")};
            });
    }
    add("lattice.c_congruence", "C.l = 0 mod 2g-2 on Lambda_g, g = 2..12", false, false, [] {
        std::string computed;
        for (int g = 2; g <= 12; ++g)
            computed += c_congruence_holds(g) ? "y" : "n";
        return Outcome{computed, std::string(11, 'y')};
    });
    add("lattice.doubly_elliptic", "Doubly-elliptic K3: (2E + sum Gamma_i)^2 and (C1 + C2)^2", false, false, [] {
        auto r = doubly_elliptic_identities();
        std::vector<std::string> dots;
        for (const auto& x : r.curve_dot_gamma)
            dots.push_back(to_string(x));
        return Outcome{"curve^2=" + to_string(r.curve_norm) + ",curve.Gamma=" + join(dots) +
                           ",(C1+C2)^2=" + to_string(r.elliptic_sum_norm) + ",C1.C2=" + to_string(r.elliptic_product),
                       "curve^2=14,curve.Gamma=0,0,0,0,0,0,0,(C1+C2)^2=14,C1.C2=7"};
    });
    add("lattice.e8", "E8(-1) and E8(-2)", false, false, [] {
        auto a = e8(-1);
        auto b = e8(-2);
        auto u = hyperbolic_u();
        return Outcome{"E8(-1):det=" + to_string(a.determinant()) + ",even=" + (a.is_even() ? "yes" : "no") +
                           ",negdef=" + (a.is_negative_definite() ? "yes" : "no") +
                           ";E8(-2):det=" + to_string(b.determinant()) + ";U:det=" + to_string(u.determinant()),
                       "E8(-1):det=1,even=yes,negdef=yes;E8(-2):det=256;U:det=-1"};
    });

    // Schubert calculus.
    add("schubert.v_q_degree", "4 sigma_{2,1} sigma_1^3 in G(2,5)", false, false,
        [] { return Outcome{to_string(degree(parse_schubert(5, "4*s(2,1)*s1^3"))), "8"}; });
    add("schubert.grassmannian_degrees", "deg G(2,n) against (2m)!/(m!(m+1)!), m = n - 2", false, false, [] {
        std::vector<std::string> computed, expected;
        for (int n = 5; n <= 6; ++n) {
            long m = n - 2;
            Integer catalan = binomial(2 * m, m) / (m + 1);
            computed.push_back(to_string(degree(SchubertCycle::unit(n))));
            expected.push_back(to_string(catalan));
        }
        return Outcome{join(computed) + ";closed=" + join(expected), "5,14;closed=5,14"};
    });
    add("schubert.w_q_degree", "Quadratic line complex in G(2,5): 2 deg G(2,5)", false, false,
        [] { return Outcome{to_string(Integer(Integer(2) * degree(SchubertCycle::unit(5)))), "10"}; });
    add("schubert.v_q_dimension", "Lines on a smooth quadric in P^n: dim G(2,n+1) - 3", false, false, [] {
        std::vector<std::string> computed, expected;
        for (int n = 4; n <= 9; ++n) {
            computed.push_back(std::to_string(vq_dimension(n)));
            expected.push_back(std::to_string(SchubertCycle(n + 1).dimension() - 3));
        }
        return Outcome{join(computed), join(expected)};
    });

    // Quadratic complexes; sampled with the caller's seed.
    add("complex.compound_rank", "rank of the second compound = C(rank q, 2), dim 5, 100 samples per rank", false,
        false, [seed] {
            sampling::Rng rng(seed);
            std::vector<std::string> computed, expected;
            for (std::size_t r = 0; r <= 5; ++r) {
                std::size_t agree = 0;
                for (int s = 0; s < 100; ++s)
                    agree += sampling::compound_rank_trial(rng, 5, r);
                computed.push_back("r" + std::to_string(r) + ":" + agree_count(agree, 100));
                expected.push_back("r" + std::to_string(r) + ":" + agree_count(100, 100));
            }
            return Outcome{join(computed), join(expected)};
        });
    add("complex.tangency", "tangency via the compound form vs the discriminant", false, false, [seed] {
        sampling::Rng rng(seed + 1);
        std::size_t agree = 0, tangent = 0;
        const std::size_t n = 1000;
        for (std::size_t s = 0; s < n; ++s) {
            auto t = sampling::tangency_trial(rng, 4 + s % 3, s % 2 == 0);
            agree += t.agree;
            tangent += t.predicate;
        }
        bool both = tangent > 0 && tangent < n;
        return Outcome{agree_count(agree, n) + (both ? ";both-outcomes" : ";one-sided"),
                       agree_count(n, n) + ";both-outcomes"};
    });
    add("complex.singular", "singularity by gradient vs isotropy of the line", false, false, [seed] {
        sampling::Rng rng(seed + 2);
        std::size_t agree = 0, singular = 0;
        const std::size_t n = 1000;
        for (std::size_t s = 0; s < n; ++s) {
            auto t = sampling::singular_trial(rng, 4 + s % 3, s % 2 == 0);
            agree += t.agree;
            singular += t.predicate;
        }
        bool both = singular > 0 && singular < n;
        return Outcome{agree_count(agree, n) + (both ? ";both-outcomes" : ";one-sided"),
                       agree_count(n, n) + ";both-outcomes"};
    });
    add("complex.plucker_rank", "rank of quadrics through G(2,6) by wedge rank of psi, 100 conjugates each", false,
        false, [seed] {
            sampling::Rng rng(seed + 3);
            std::vector<std::string> computed;
            for (int r = 1; r <= 3; ++r) {
                auto psi = psi_of_rank(r);
                std::size_t base = plucker_quadric_rank(psi);
                std::size_t stable = 0;
                for (int s = 0; s < 100; ++s)
                    stable += sampling::conjugated_plucker_rank(rng, psi) == base;
                computed.push_back("w" + std::to_string(r) + ":" + std::to_string(base) + ":" +
                                   agree_count(stable, 100));
            }
            return Outcome{join(computed), "w1:6:100/100,w2:10:100/100,w3:15:100/100"};
        });
    add("complex.e_q_class", "E_Q from its pairings with the test curves h and s", false, false, [] {
        RationalMatrix rows{{1, 0}, {0, 1}};
        auto x = solve_in_basis(rows, {Rational(2), Rational(-2)});
        return Outcome{"H=" + to_string(x[0]) + ",B=" + to_string(x[1]), "H=2,B=-2"};
    });

    add("slope.bn8", "slope of bn8 = 6 + 12/(g+1) at g = 8", false, true, [cat] {
        Rational expected = 6 + make_rational(12, 9);
        return Outcome{to_string(slope(cat.bn8())), to_string(expected)};
    });
    return out;
}

struct CitedStep {
    const char* id;
    const char* citation;
};

inline const std::vector<CitedStep>& cited_steps()
{
    static const std::vector<CitedStep> steps{
        {"cited.kodaira_dimension_zero", "kappa(Sbar_8^+) = 0 from the rigid decomposition"},
        {"cited.clifford_index", "Clifford-index step for the Nikulin sections"},
        {"cited.v_q_class", "coefficient 4 of sigma_{2,1} in the class of V_Q"},
        {"cited.transversality", "transversality of the genus-6 Nikulin construction (computer check)"},
        {"cited.uniruledness", "uniruledness statements for small genus"},
    };
    return steps;
}

} // namespace detail

/// Runs the registry in order. Exceptions inside a check make it fail with the
/// error text as computed value.
inline Report verify_all(const ClassCatalog& catalog = {}, std::uint64_t seed = default_seed,
                         VerifyScope scope = VerifyScope::Full)
{
    Report report;
    for (auto& check : detail::registry(catalog, seed)) {
        if (scope == VerifyScope::CatalogOnly && !check.uses_theta && !check.uses_bn8)
            continue;
        CheckRecord rec{check.id, check.citation, "", "", CheckStatus::Fail, check.uses_theta, check.uses_bn8};
        try {
            auto [computed, expected] = check.run();
            rec.computed = std::move(computed);
            rec.expected = std::move(expected);
            rec.status = rec.computed == rec.expected ? CheckStatus::Pass : CheckStatus::Fail;
        } catch (const std::exception& e) {
            rec.computed = std::string("error: ") + e.what();
            rec.expected = "no error";
        }
        report.checks.push_back(std::move(rec));
    }
    if (scope == VerifyScope::Full)
        for (const auto& step : detail::cited_steps())
            report.checks.push_back({step.id, step.citation, "-", "-", CheckStatus::CitedNotReplayed});
    return report;
}

/// One line per check: status, id, computed, and the expected value on failure.
inline std::string render_text(const Report& report)
{
    std::ostringstream out;
    for (const auto& c : report.checks) {
        out << (c.status == CheckStatus::Pass ? "PASS " : c.status == CheckStatus::Fail ? "FAIL " : "CITE ") << c.id;
        if (c.status != CheckStatus::CitedNotReplayed)
            out << "  " << c.computed;
        if (c.status == CheckStatus::Fail)
            out << "  (expected " << c.expected << ")";
        out << "  [" << c.citation << "]\n";
    }
    out << report.passed() << " passed, " << report.failed() << " failed, " << report.cited()
        << " cited-not-replayed\n";
    return out.str();
}

} // namespace tautcheck

#endif // TAUTCHECK_VERIFY_HPP
