#ifndef TAUTCHECK_CURVES_HPP
#define TAUTCHECK_CURVES_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tautcheck/error.hpp"
#include "tautcheck/picard.hpp"
#include "tautcheck/rational.hpp"

namespace tautcheck {

/// A one-parameter family of curves, recorded only through its intersection
/// numbers with the Picard basis of one moduli space.
///
/// A curve may be "combination-only": it knows its pairing with the total
/// boundary pullback alpha0 + 2 beta0 but not the individual alpha0 / beta0
/// numbers. Such a curve can only be paired with classes whose (alpha0, beta0)
/// part is a multiple of alpha0 + 2 beta0.
class CurveClass {
public:
    using Entry = std::pair<std::string, Rational>;

    CurveClass(ModuliSpaceId space, std::string label) : space_(space), label_(std::move(label)) {}

    static CurveClass of(const ModuliSpaceId& space, const std::vector<Entry>& entries, std::string label)
    {
        CurveClass out(space, std::move(label));
        for (const auto& [name, value] : entries) {
            auto idx = space.index_of(name);
            if (out.pairings_.count(idx))
                throw Error(ErrorCode::DuplicateSymbol, "'" + name + "' given twice");
            if (value != 0)
                out.pairings_[idx] = value;
        }
        return out;
    }

    /// Spin-space curve that only knows (alpha0 + 2 beta0)-pairing = `budget`.
    static CurveClass combination_only(const ModuliSpaceId& space, const std::vector<Entry>& entries,
                                       const Rational& budget, std::string label)
    {
        if (space.kind() != SpaceKind::SbarPlus)
            throw Error(ErrorCode::SpaceMismatch, "combination-only curves live on SbarPlus");
        for (const auto& [name, value] : entries)
            if (name == sym::alpha(0) || name == sym::beta(0))
                throw Error(ErrorCode::UndefinedSplit, "combination-only curve cannot pin " + name);
        CurveClass out = of(space, entries, std::move(label));
        out.budget_ = budget;
        return out;
    }

    const ModuliSpaceId& space() const noexcept { return space_; }
    const std::string& label() const noexcept { return label_; }
    bool is_combination_only() const noexcept { return budget_.has_value(); }
    const std::map<std::size_t, Rational>& pairings() const noexcept { return pairings_; }

    Rational pairing(std::string_view symbol) const { return pairing_index(space_.index_of(symbol)); }

    Rational pairing_index(std::size_t idx) const
    {
        if (budget_ && (idx == 1 || idx == 2))
            throw Error(ErrorCode::UndefinedSplit,
                        label_ + " only knows its pairing with alpha0 + 2 beta0, not " + space_.symbol(idx));
        auto it = pairings_.find(idx);
        return it == pairings_.end() ? Rational(0) : it->second;
    }

    /// Pairing with the pullback of delta0:
    ///   Mbar delta0; Rbar delta0' + delta0'' + 2 delta0ram; SbarPlus alpha0 + 2 beta0.
    Rational boundary_budget() const
    {
        if (budget_)
            return *budget_;
        switch (space_.kind()) {
        case SpaceKind::Mbar: return pairing(sym::delta(0));
        case SpaceKind::Rbar:
            return pairing(sym::delta0_prime) + pairing(sym::delta0_second) + 2 * pairing(sym::delta0_ram);
        case SpaceKind::SbarPlus: return pairing(sym::alpha(0)) + 2 * pairing(sym::beta(0));
        }
        return 0;
    }

    std::string to_string() const
    {
        std::string out = label_ + " on " + space_.to_string() + ":";
        for (std::size_t idx = 0; idx < space_.rank(); ++idx) {
            if (budget_ && (idx == 1 || idx == 2))
                continue;
            auto it = pairings_.find(idx);
            out += " " + space_.symbol(idx) + "=" + tautcheck::to_string(it == pairings_.end() ? Rational(0) : it->second);
        }
        if (budget_)
            out += " (alpha0+2beta0)=" + tautcheck::to_string(*budget_);
        return out;
    }

private:
    ModuliSpaceId space_;
    std::string label_;
    std::map<std::size_t, Rational> pairings_;
    std::optional<Rational> budget_;
};

/// Exact intersection number C . D.
inline Rational pair(const CurveClass& c, const DivisorClass& d)
{
    require_same_space(c.space(), d.space());
    const auto& space = c.space();
    Rational total = 0;
    auto opaque_check = [&](std::size_t idx, const Rational& curve_value) {
        if (d.is_opaque_index(idx) && curve_value != 0)
            throw Error(ErrorCode::OpaquePairing, c.label() + " pairs " + tautcheck::to_string(curve_value) +
                                                      " with " + space.symbol(idx) +
                                                      ", whose coefficient is opaque");
    };
    for (std::size_t idx = 0; idx < space.rank(); ++idx) {
        if (c.is_combination_only() && (idx == 1 || idx == 2))
            continue;
        Rational cv = c.pairing_index(idx);
        opaque_check(idx, cv);
        if (cv != 0)
            total += cv * d.coeff_index(idx);
    }
    if (c.is_combination_only()) {
        Rational budget = c.boundary_budget();
        if (budget != 0) {
            if (d.is_opaque_index(1) || d.is_opaque_index(2))
                throw Error(ErrorCode::OpaquePairing, c.label() + ": alpha0/beta0 coefficient is opaque");
            Rational a0 = d.coeff_index(1);
            Rational b0 = d.coeff_index(2);
            if (b0 != 2 * a0)
                throw Error(ErrorCode::UndefinedSplit,
                            c.label() + " cannot pair with a class whose (alpha0, beta0) part is not a "
                                        "multiple of alpha0 + 2 beta0");
            total += a0 * budget;
        }
    }
    total.canonicalize();
    return total;
}

/// Image of a Prym or spin test curve in Mbar_g, characterized by the
/// projection formula pi_*(C) . D = C . pi^*(D).
inline CurveClass pushforward(const CurveClass& c)
{
    const int g = c.space().genus();
    ModuliSpaceId target(SpaceKind::Mbar, g);
    std::vector<CurveClass::Entry> e{{sym::lambda, c.pairing(sym::lambda)}, {sym::delta(0), c.boundary_budget()}};
    for (int i = 1; i <= g / 2; ++i) {
        switch (c.space().kind()) {
        case SpaceKind::Mbar: e.emplace_back(sym::delta(i), c.pairing(sym::delta(i))); break;
        case SpaceKind::Rbar: e.emplace_back(sym::delta(i), c.pairing(sym::pi_delta(i))); break;
        case SpaceKind::SbarPlus:
            e.emplace_back(sym::delta(i), c.pairing(sym::alpha(i)) + c.pairing(sym::beta(i)));
            break;
        }
    }
    return CurveClass::of(target, e, "pi_*(" + c.label() + ")");
}

/// c2 = 12 chi - K^2.
inline long noether_c2(long chi, long k_squared) { return 12 * chi - k_squared; }

/// Numerical data of a fibred surface whose fibres sweep out a test curve.
///
/// `k_squared` is K^2 of the surface before the pencil's base points are
/// blown up; `base_points` adds one to c2 per blow-up. Each resolved node
/// puts one fibre into beta0 with multiplicity 1; a reducible fibre whose
/// components meet in n nodes contributes n/2 to beta0.
struct SurfacePencilSpec {
    long chi = 0;
    long k_squared = 0;
    long nodes_resolved = 0;
    long base_points = 0;
    int genus = 2;
    SpaceKind target = SpaceKind::Mbar;
    std::vector<long> reducible_fibres;
};

inline CurveClass pencil_curve(const SurfacePencilSpec& spec, std::string label = "pencil")
{
    if (spec.nodes_resolved < 0 || spec.base_points < 0)
        throw Error(ErrorCode::BadParam, "node and base-point counts must be nonnegative");
    const long c2 = noether_c2(spec.chi, spec.k_squared);
    if (c2 < 0)
        throw Error(ErrorCode::BadParam, "Noether gives negative c2 = " + std::to_string(c2));
    ModuliSpaceId space(spec.target, spec.genus);
    const Rational lambda = spec.chi + spec.genus - 1;
    const Rational total = c2 + spec.base_points + 4L * (spec.genus - 1);

    switch (spec.target) {
    case SpaceKind::Mbar:
        if (spec.nodes_resolved != 0 || !spec.reducible_fibres.empty())
            throw Error(ErrorCode::BadParam, "beta0 data is meaningless for an Mbar pencil");
        return CurveClass::of(space, {{sym::lambda, lambda}, {sym::delta(0), total}}, std::move(label));
    case SpaceKind::SbarPlus: {
        Rational beta0 = spec.nodes_resolved;
        for (long nodes : spec.reducible_fibres) {
            if (nodes <= 0)
                throw Error(ErrorCode::BadParam, "reducible fibre needs a positive node count");
            beta0 += make_rational(nodes, 2);
        }
        Rational alpha0 = total - 2 * beta0;
        if (alpha0 < 0)
            throw Error(ErrorCode::NegativeBudget, "alpha0 pairing would be " + to_string(alpha0));
        return CurveClass::of(space, {{sym::lambda, lambda}, {sym::alpha(0), alpha0}, {sym::beta(0), beta0}},
                              std::move(label));
    }
    case SpaceKind::Rbar: break;
    }
    throw Error(ErrorCode::BadParam, "pencil_curve targets Mbar or SbarPlus");
}

/// Xi_g: Lefschetz pencil on a Nikulin surface, tabulated directly.
inline CurveClass xi_curve(int genus)
{
    ModuliSpaceId space(SpaceKind::Rbar, genus);
    return CurveClass::of(space,
                          {{sym::lambda, genus + 1},
                           {sym::delta0_prime, 6 * genus + 2},
                           {sym::delta0_second, 0},
                           {sym::delta0_ram, 8}},
                          "Xi_" + std::to_string(genus));
}

/// pi_*(Xi_g) rebuilt from surface data: a Lefschetz pencil in |C| on a K3
/// surface (chi = 2, K^2 = 0) with C^2 = 2g - 2 base points.
inline CurveClass k3_lefschetz_pencil(int genus)
{
    SurfacePencilSpec spec;
    spec.chi = 2;
    spec.k_squared = 0;
    spec.base_points = 2L * genus - 2;
    spec.genus = genus;
    spec.target = SpaceKind::Mbar;
    return pencil_curve(spec, "K3 pencil g=" + std::to_string(genus));
}

/// Surface data of the canonical-surface pencil Gamma in Sbar_g^+, 4 <= g <= 9.
///   7..9: complete intersection of a rank-3 quadric and three quadrics in P^6, 8 nodes
///   6:    (2,2,3) complete intersection in P^5: K = O(1), K^2 = 12, p_g = 6, q = 0, 6 nodes
///   5:    (2,4) complete intersection in P^4: K^2 = 8, chi = 6, 4 nodes
///   4:    F_2 blown up at the 18 base points of |3(C0 + 2F)|; one fibre C0 + D with C0.D = 2
inline SurfacePencilSpec gamma_surface(int genus)
{
    SurfacePencilSpec spec;
    spec.genus = genus;
    spec.target = SpaceKind::SbarPlus;
    if (genus >= 7 && genus <= 9) {
        spec.chi = 8;
        spec.k_squared = 16;
        spec.nodes_resolved = 8;
    } else if (genus == 6) {
        spec.chi = 7;
        spec.k_squared = 12;
        spec.nodes_resolved = 6;
    } else if (genus == 5) {
        spec.chi = 6;
        spec.k_squared = 8;
        spec.nodes_resolved = 4;
    } else if (genus == 4) {
        spec.chi = 1;
        spec.k_squared = 8;
        spec.base_points = 18;
        spec.reducible_fibres = {2};
    } else {
        throw Error(ErrorCode::BadGenus, "Gamma pencils exist for 4 <= g <= 9, got " + std::to_string(genus));
    }
    return spec;
}

inline CurveClass gamma_curve(int genus)
{
    return pencil_curve(gamma_surface(genus), "Gamma_" + std::to_string(genus));
}

/// R in Sbar_8^+: pencil of genus-8 sections of a doubly-elliptic K3 (14 base
/// points) with two reducible fibres, each a pair of elliptic curves meeting in 7 points.
inline SurfacePencilSpec r_surface_g8()
{
    SurfacePencilSpec spec;
    spec.chi = 2;
    spec.k_squared = 0;
    spec.base_points = 14;
    spec.genus = 8;
    spec.target = SpaceKind::SbarPlus;
    spec.reducible_fibres = {7, 7};
    return spec;
}

inline CurveClass r_curve_g8() { return pencil_curve(r_surface_g8(), "R"); }

/// Lefschetz pencil of 7-nodal plane septics: P^2 blown up at 21 base points and 7 nodes.
inline SurfacePencilSpec septic_surface()
{
    SurfacePencilSpec spec;
    spec.chi = 1;
    spec.k_squared = 9;
    spec.base_points = 28;
    spec.genus = 8;
    spec.target = SpaceKind::Mbar;
    return spec;
}

inline CurveClass septic_pencil_curve() { return pencil_curve(septic_surface(), "septic pencil"); }

/// Degree of Sbar_g^+ -> Mbar_g: the number of even theta-characteristics, 2^{g-1}(2^g + 1).
inline Integer even_theta_count(int genus)
{
    if (genus < 1)
        throw Error(ErrorCode::BadGenus, "genus must be positive");
    const auto g = static_cast<unsigned long>(genus);
    return pow2(g - 1) * (pow2(g) + 1);
}

/// Lift of a curve B in Mbar_g to Sbar_g^+ (all even spin structures over B).
/// B must avoid Delta_i for i >= 1; the lift then pairs with pi^*(D) as
/// deg(pi) * (B . D), and only its (alpha0 + 2 beta0)-pairing is known.
inline CurveClass btilde_curve(const CurveClass& base)
{
    if (base.space().kind() != SpaceKind::Mbar)
        throw Error(ErrorCode::SpaceMismatch, "btilde lifts a curve on Mbar");
    const int g = base.space().genus();
    for (int i = 1; i <= g / 2; ++i)
        if (base.pairing(sym::delta(i)) != 0)
            throw Error(ErrorCode::NonzeroHigherBoundary,
                        base.label() + " meets delta" + std::to_string(i));
    Rational degree(even_theta_count(g));
    return CurveClass::combination_only(ModuliSpaceId(SpaceKind::SbarPlus, g),
                                        {{sym::lambda, degree * base.pairing(sym::lambda)}},
                                        degree * base.pairing(sym::delta(0)), "btilde(" + base.label() + ")");
}

} // namespace tautcheck

#endif // TAUTCHECK_CURVES_HPP
