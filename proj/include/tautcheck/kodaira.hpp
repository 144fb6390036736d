#ifndef TAUTCHECK_KODAIRA_HPP
#define TAUTCHECK_KODAIRA_HPP

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tautcheck/curves.hpp"
#include "tautcheck/error.hpp"
#include "tautcheck/picard.hpp"
#include "tautcheck/rational.hpp"

namespace tautcheck {

/// The two classes the canonical-class argument on Sbar_8^+ is built from.
/// Swappable so that the harness can be fed deliberately wrong inputs.
struct ClassCatalog {
    std::function<DivisorClass(int)> theta_null = [](int g) { return tautcheck::theta_null(g); };
    std::function<DivisorClass()> bn8 = [] { return tautcheck::bn8(); };

    /// Catalog whose theta_null has `delta` added to the coefficient of
    /// `symbol` in every genus whose basis contains it.
    ClassCatalog with_theta_offset(const std::string& symbol, const Rational& delta) const
    {
        ClassCatalog out = *this;
        auto base = theta_null;
        out.theta_null = [base, symbol, delta](int g) {
            auto d = base(g);
            if (!d.space().find(symbol))
                return d;
            return d.with(symbol, d.coeff(symbol) + delta);
        };
        return out;
    }

    ClassCatalog with_theta_transform(std::function<DivisorClass(DivisorClass)> f) const
    {
        ClassCatalog out = *this;
        auto base = theta_null;
        out.theta_null = [base, f](int g) { return f(base(g)); };
        return out;
    }

    ClassCatalog with_bn8_offset(const std::string& symbol, const Rational& delta) const
    {
        ClassCatalog out = *this;
        auto base = bn8;
        out.bn8 = [base, symbol, delta] {
            auto d = base();
            return d.with(symbol, d.coeff(symbol) + delta);
        };
        return out;
    }
};

/// K = 1/2 pi^*(bn8) + 8 theta_null + sum_{i=1}^4 (a_i alpha_i + b_i beta_i) on Sbar_8^+.
struct DecompositionResult {
    std::map<int, Rational> a;
    std::map<int, Rational> b;
    DivisorClass residual;

    bool residual_zero() const { return residual.pinned_part().is_zero() && residual.opaque_indices().empty(); }

    bool coefficients_positive() const
    {
        for (const auto* m : {&a, &b})
            for (const auto& [i, v] : *m)
                if (v <= 0)
                    return false;
        return a.size() == 4 && b.size() == 4;
    }
};

/// Unvalidated decomposition: reads a_i, b_i off K - 1/2 pi^* bn8 - 8 theta and
/// leaves whatever is not accounted for (lambda, alpha0, beta0) in the residual.
inline DecompositionResult decompose_canonical_g8(const ClassCatalog& catalog = {})
{
    const ModuliSpaceId spin(SpaceKind::SbarPlus, 8);
    DivisorClass rest = canonical_class(spin) - make_rational(1, 2) * pullback_to_spin(catalog.bn8()) -
                        Rational(8) * catalog.theta_null(8);
    DecompositionResult out{{}, {}, DivisorClass(spin)};
    DivisorClass residual = rest;
    for (int i = 1; i <= 4; ++i) {
        out.a[i] = rest.coeff(sym::alpha(i));
        out.b[i] = rest.coeff(sym::beta(i));
        residual = residual.with(sym::alpha(i), 0).with(sym::beta(i), 0);
    }
    out.residual = residual;
    return out;
}

inline DecompositionResult canonical_decomposition_g8(const ClassCatalog& catalog = {})
{
    auto result = decompose_canonical_g8(catalog);
    if (!result.residual_zero())
        throw Error(ErrorCode::ResidualNonzero, "residual " + result.residual.to_string());
    if (!result.coefficients_positive())
        throw Error(ErrorCode::NonPositiveCoefficient, "some a_i or b_i is not positive");
    return result;
}

struct RigidityRow {
    std::string component;
    std::string curve;
    Rational self_pairing;
    std::vector<std::pair<std::string, Rational>> cross_pairings;
};

struct RigidityReport {
    std::vector<RigidityRow> rows;
    bool verdict = false;
};

namespace detail {

inline bool rows_rigid(const std::vector<RigidityRow>& rows)
{
    for (const auto& row : rows) {
        if (row.self_pairing >= 0)
            return false;
        for (const auto& [name, v] : row.cross_pairings)
            if (v != 0)
                return false;
    }
    return !rows.empty();
}

inline std::vector<std::pair<std::string, Rational>> higher_boundary_pairings(const CurveClass& c)
{
    std::vector<std::pair<std::string, Rational>> out;
    for (int i = 1; i <= c.space().genus() / 2; ++i) {
        out.emplace_back(sym::alpha(i), c.pairing(sym::alpha(i)));
        out.emplace_back(sym::beta(i), c.pairing(sym::beta(i)));
    }
    return out;
}

} // namespace detail

/// Sign table for the components of the genus-8 decomposition: R covers
/// theta_null, the lift of the septic pencil covers pi^*(bn8).
/// Pairings with bn8 are in units of the positive constant c^2_{8,7}.
inline RigidityReport rigidity_report_g8(const ClassCatalog& catalog = {})
{
    canonical_decomposition_g8(catalog);
    const auto r = r_curve_g8();
    const auto btilde = btilde_curve(septic_pencil_curve());
    const auto pulled = pullback_to_spin(catalog.bn8());
    const auto theta = catalog.theta_null(8);

    RigidityReport out;
    RigidityRow r_row{"theta_null", r.label(), pair(r, theta), {{"pi*(bn8)", pair(r, pulled)}}};
    for (const auto& e : detail::higher_boundary_pairings(r))
        r_row.cross_pairings.push_back(e);
    out.rows.push_back(r_row);

    RigidityRow b_row{"pi*(bn8)", btilde.label(), pair(btilde, pulled), detail::higher_boundary_pairings(btilde)};
    out.rows.push_back(b_row);
    out.verdict = detail::rows_rigid(out.rows);
    return out;
}

/// Gamma_g against theta_null and the higher boundary, 4 <= g <= 9. The verdict
/// also requires the theta pairing to be -2 (g >= 5) or -1 (g = 4) and the
/// curve's boundary budget to match Noether's formula on its surface.
inline RigidityReport theta_rigidity_report(int genus, const ClassCatalog& catalog = {})
{
    const auto spec = gamma_surface(genus);
    const auto gamma = gamma_curve(genus);
    RigidityReport out;
    out.rows.push_back({"theta_null", gamma.label(), pair(gamma, catalog.theta_null(genus)),
                        detail::higher_boundary_pairings(gamma)});
    const Rational expected = genus == 4 ? -1 : -2;
    const Rational budget = noether_c2(spec.chi, spec.k_squared) + spec.base_points + 4L * (genus - 1);
    out.verdict = detail::rows_rigid(out.rows) && out.rows.front().self_pairing == expected &&
                  gamma.boundary_budget() == budget;
    return out;
}

} // namespace tautcheck

#endif // TAUTCHECK_KODAIRA_HPP
