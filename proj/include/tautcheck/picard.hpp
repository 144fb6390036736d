#ifndef TAUTCHECK_PICARD_HPP
#define TAUTCHECK_PICARD_HPP

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tautcheck/error.hpp"
#include "tautcheck/rational.hpp"

namespace tautcheck {

enum class SpaceKind { Mbar, Rbar, SbarPlus };

inline std::string_view kind_name(SpaceKind kind)
{
    switch (kind) {
    case SpaceKind::Mbar: return "Mbar";
    case SpaceKind::Rbar: return "Rbar";
    case SpaceKind::SbarPlus: return "SbarPlus";
    }
    return "?";
}

namespace sym {

inline const std::string lambda = "lambda";

inline std::string delta(int i) { return "delta" + std::to_string(i); }
inline const std::string delta0_prime = "delta0'";
inline const std::string delta0_second = "delta0''";
inline const std::string delta0_ram = "delta0ram";
inline std::string pi_delta(int i) { return "pi*delta" + std::to_string(i); }
inline std::string alpha(int i) { return "alpha" + std::to_string(i); }
inline std::string beta(int i) { return "beta" + std::to_string(i); }

} // namespace sym

/// One of the three Picard groups: Mbar_g, Rbar_g (Prym) or Sbar_g^+ (even spin).
class ModuliSpaceId {
public:
    ModuliSpaceId(SpaceKind kind, int genus) : kind_(kind), genus_(genus)
    {
        if (genus < 2)
            throw Error(ErrorCode::BadGenus, "genus must be >= 2, got " + std::to_string(genus));
    }

    SpaceKind kind() const noexcept { return kind_; }
    int genus() const noexcept { return genus_; }
    int half_genus() const noexcept { return genus_ / 2; }

    /// Ordered basis symbols.
    ///   Mbar:     lambda, delta0, delta1, ..., delta[g/2]
    ///   Rbar:     lambda, delta0', delta0'', delta0ram, pi*delta1, ..., pi*delta[g/2]
    ///   SbarPlus: lambda, alpha0, beta0, alpha1, beta1, ..., alpha[g/2], beta[g/2]
    std::vector<std::string> basis() const
    {
        std::vector<std::string> out{sym::lambda};
        switch (kind_) {
        case SpaceKind::Mbar:
            for (int i = 0; i <= half_genus(); ++i)
                out.push_back(sym::delta(i));
            break;
        case SpaceKind::Rbar:
            out.push_back(sym::delta0_prime);
            out.push_back(sym::delta0_second);
            out.push_back(sym::delta0_ram);
            for (int i = 1; i <= half_genus(); ++i)
                out.push_back(sym::pi_delta(i));
            break;
        case SpaceKind::SbarPlus:
            for (int i = 0; i <= half_genus(); ++i) {
                out.push_back(sym::alpha(i));
                out.push_back(sym::beta(i));
            }
            break;
        }
        return out;
    }

    std::size_t rank() const { return basis().size(); }

    std::optional<std::size_t> find(std::string_view symbol) const
    {
        auto b = basis();
        for (std::size_t i = 0; i < b.size(); ++i)
            if (b[i] == symbol)
                return i;
        return std::nullopt;
    }

    std::size_t index_of(std::string_view symbol) const
    {
        if (auto i = find(symbol))
            return *i;
        throw Error(ErrorCode::UnknownSymbol,
                    "'" + std::string(symbol) + "' is not a basis symbol of " + to_string());
    }

    std::string symbol(std::size_t index) const { return basis().at(index); }

    std::string to_string() const
    {
        return std::string(kind_name(kind_)) + "_" + std::to_string(genus_);
    }

    friend bool operator==(const ModuliSpaceId&, const ModuliSpaceId&) = default;

private:
    SpaceKind kind_;
    int genus_;
};

inline void require_same_space(const ModuliSpaceId& a, const ModuliSpaceId& b)
{
    if (!(a == b))
        throw Error(ErrorCode::SpaceMismatch, a.to_string() + " vs " + b.to_string());
}

/// Sparse exact-rational divisor class. Coefficients listed in `opaque` are
/// unknown (the "..." tail of a quoted class); all other absent symbols are 0.
class DivisorClass {
public:
    using Entry = std::pair<std::string, Rational>;

    explicit DivisorClass(ModuliSpaceId space) : space_(space) {}

    /// Validating constructor; drops zero coefficients.
    static DivisorClass of(const ModuliSpaceId& space, const std::vector<Entry>& entries,
                           const std::set<std::string>& opaque = {})
    {
        DivisorClass out(space);
        std::set<std::size_t> seen;
        for (const auto& [name, value] : entries) {
            auto idx = space.index_of(name);
            if (!seen.insert(idx).second)
                throw Error(ErrorCode::DuplicateSymbol, "'" + name + "' given twice");
            if (value != 0)
                out.coeffs_[idx] = value;
        }
        for (const auto& name : opaque) {
            auto idx = space.index_of(name);
            if (seen.count(idx))
                throw Error(ErrorCode::DuplicateSymbol, "'" + name + "' is both pinned and opaque");
            out.opaque_.insert(idx);
        }
        return out;
    }

    const ModuliSpaceId& space() const noexcept { return space_; }

    bool is_opaque(std::string_view symbol) const { return opaque_.count(space_.index_of(symbol)) > 0; }
    bool is_opaque_index(std::size_t idx) const { return opaque_.count(idx) > 0; }

    /// Pinned coefficient; throws OpaqueCoefficient for an opaque symbol.
    Rational coeff(std::string_view symbol) const { return coeff_index(space_.index_of(symbol)); }

    Rational coeff_index(std::size_t idx) const
    {
        if (opaque_.count(idx))
            throw Error(ErrorCode::OpaqueCoefficient,
                        "coefficient of " + space_.symbol(idx) + " is not pinned");
        auto it = coeffs_.find(idx);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    const std::map<std::size_t, Rational>& coefficients() const noexcept { return coeffs_; }
    const std::set<std::size_t>& opaque_indices() const noexcept { return opaque_; }

    bool is_zero() const { return coeffs_.empty() && opaque_.empty(); }

    /// Copy with `symbol` pinned to `value` (clears opacity of that symbol).
    DivisorClass with(std::string_view symbol, const Rational& value) const
    {
        DivisorClass out = *this;
        auto idx = space_.index_of(symbol);
        out.opaque_.erase(idx);
        if (value == 0)
            out.coeffs_.erase(idx);
        else
            out.coeffs_[idx] = value;
        return out;
    }

    /// Copy with `symbol` marked opaque.
    DivisorClass with_opaque(std::string_view symbol) const
    {
        DivisorClass out = *this;
        auto idx = space_.index_of(symbol);
        out.coeffs_.erase(idx);
        out.opaque_.insert(idx);
        return out;
    }

    /// The class with every opaque symbol dropped (the pinned part only).
    DivisorClass pinned_part() const
    {
        DivisorClass out = *this;
        out.opaque_.clear();
        return out;
    }

    /// "22*lambda - 3*delta0 + ?*delta1"; "0" for the zero class.
    std::string to_string() const
    {
        std::string out;
        for (std::size_t idx = 0; idx < space_.rank(); ++idx) {
            const std::string name = space_.symbol(idx);
            if (opaque_.count(idx)) {
                out += out.empty() ? "?*" : " + ?*";
                out += name;
                continue;
            }
            auto it = coeffs_.find(idx);
            if (it == coeffs_.end())
                continue;
            Rational c = it->second;
            if (out.empty()) {
                if (c < 0) {
                    out += "-";
                    c = -c;
                }
            } else {
                out += c < 0 ? " - " : " + ";
                if (c < 0)
                    c = -c;
            }
            if (c != 1)
                out += tautcheck::to_string(c) + "*";
            out += name;
        }
        return out.empty() ? "0" : out;
    }

    friend bool operator==(const DivisorClass& a, const DivisorClass& b)
    {
        return a.space_ == b.space_ && a.coeffs_ == b.coeffs_ && a.opaque_ == b.opaque_;
    }

    friend DivisorClass operator+(const DivisorClass& a, const DivisorClass& b)
    {
        require_same_space(a.space_, b.space_);
        DivisorClass out(a.space_);
        out.opaque_ = a.opaque_;
        out.opaque_.insert(b.opaque_.begin(), b.opaque_.end());
        for (const auto* src : {&a, &b})
            for (const auto& [idx, value] : src->coeffs_)
                if (!out.opaque_.count(idx))
                    out.coeffs_[idx] += value;
        std::erase_if(out.coeffs_, [](const auto& kv) { return kv.second == 0; });
        return out;
    }

    friend DivisorClass operator*(const Rational& c, const DivisorClass& d)
    {
        DivisorClass out(d.space_);
        if (c == 0)
            return out;
        out.opaque_ = d.opaque_;
        for (const auto& [idx, value] : d.coeffs_)
            out.coeffs_[idx] = c * value;
        return out;
    }

    friend DivisorClass operator*(const DivisorClass& d, const Rational& c) { return c * d; }
    friend DivisorClass operator-(const DivisorClass& d) { return Rational(-1) * d; }
    friend DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) { return a + (-b); }

private:
    ModuliSpaceId space_;
    std::map<std::size_t, Rational> coeffs_;
    std::set<std::size_t> opaque_;
};

inline DivisorClass class_of(const ModuliSpaceId& space, const std::vector<DivisorClass::Entry>& entries,
                             const std::set<std::string>& opaque = {})
{
    return DivisorClass::of(space, entries, opaque);
}

inline DivisorClass add(const DivisorClass& a, const DivisorClass& b) { return a + b; }
inline DivisorClass scale(const DivisorClass& a, const Rational& c) { return c * a; }

namespace detail {

inline void require_kind(const DivisorClass& d, SpaceKind kind)
{
    if (d.space().kind() != kind)
        throw Error(ErrorCode::SpaceMismatch, "expected a class on " + std::string(kind_name(kind)) +
                                                  ", got " + d.space().to_string());
}

/// Pushes a linear substitution {basis index -> list of (image index, multiplier)}
/// through `d`. An opaque source symbol makes all of its images opaque.
template <class Rule>
DivisorClass substitute(const DivisorClass& d, const ModuliSpaceId& target, Rule rule)
{
    DivisorClass out(target);
    std::set<std::string> opaque;
    std::map<std::string, Rational> acc;
    const auto& src = d.space();
    for (std::size_t idx = 0; idx < src.rank(); ++idx) {
        std::vector<std::pair<std::string, Rational>> images = rule(src.symbol(idx));
        if (d.is_opaque_index(idx)) {
            for (const auto& [name, mult] : images)
                opaque.insert(name);
            continue;
        }
        Rational c = d.coeff_index(idx);
        if (c == 0)
            continue;
        for (const auto& [name, mult] : images)
            acc[name] += c * mult;
    }
    std::vector<DivisorClass::Entry> entries;
    for (const auto& [name, value] : acc)
        if (!opaque.count(name))
            entries.emplace_back(name, value);
    return DivisorClass::of(target, entries, opaque);
}

} // namespace detail

/// Pullback along Rbar_g -> Mbar_g:
///   lambda -> lambda, delta0 -> delta0' + delta0'' + 2 delta0ram, delta_i -> pi*delta_i.
inline DivisorClass pullback_to_prym(const DivisorClass& d)
{
    detail::require_kind(d, SpaceKind::Mbar);
    ModuliSpaceId target(SpaceKind::Rbar, d.space().genus());
    return detail::substitute(d, target, [](const std::string& s) -> std::vector<std::pair<std::string, Rational>> {
        if (s == sym::lambda)
            return {{sym::lambda, 1}};
        if (s == sym::delta(0))
            return {{sym::delta0_prime, 1}, {sym::delta0_second, 1}, {sym::delta0_ram, 2}};
        return {{"pi*" + s, 1}};
    });
}

/// Pullback along Sbar_g^+ -> Mbar_g:
///   lambda -> lambda, delta0 -> alpha0 + 2 beta0, delta_i -> alpha_i + beta_i.
inline DivisorClass pullback_to_spin(const DivisorClass& d)
{
    detail::require_kind(d, SpaceKind::Mbar);
    ModuliSpaceId target(SpaceKind::SbarPlus, d.space().genus());
    return detail::substitute(d, target, [](const std::string& s) -> std::vector<std::pair<std::string, Rational>> {
        if (s == sym::lambda)
            return {{sym::lambda, 1}};
        int i = std::stoi(s.substr(5));
        if (i == 0)
            return {{sym::alpha(0), 1}, {sym::beta(0), 2}};
        return {{sym::alpha(i), 1}, {sym::beta(i), 1}};
    });
}

namespace detail {

inline std::set<std::string> higher_prym_boundary(int genus)
{
    std::set<std::string> out;
    for (int i = 1; i <= genus / 2; ++i)
        out.insert(sym::pi_delta(i));
    return out;
}

inline void require_genus(int genus, int expected, std::string_view what)
{
    if (genus != expected)
        throw Error(ErrorCode::BadParam, std::string(what) + " lives in genus " + std::to_string(expected) +
                                             ", got " + std::to_string(genus));
}

} // namespace detail

/// Canonical class. Only the coefficients the computations consume are pinned:
///   SbarPlus: 13 lambda - 2 alpha0 - 3 beta0 - 2 sum(alpha_i + beta_i) - (alpha1 + beta1)
///   Rbar:     13 lambda - 2(delta0' + delta0'') - 3 delta0ram, pi*delta_i opaque
///   Mbar:     13 lambda - 2 delta0, delta_i opaque
inline DivisorClass canonical_class(const ModuliSpaceId& space)
{
    const int h = space.half_genus();
    switch (space.kind()) {
    case SpaceKind::SbarPlus: {
        std::vector<DivisorClass::Entry> e{{sym::lambda, 13}, {sym::alpha(0), -2}, {sym::beta(0), -3}};
        for (int i = 1; i <= h; ++i) {
            Rational c = i == 1 ? -3 : -2;
            e.emplace_back(sym::alpha(i), c);
            e.emplace_back(sym::beta(i), c);
        }
        return DivisorClass::of(space, e);
    }
    case SpaceKind::Rbar:
        return DivisorClass::of(space,
                                {{sym::lambda, 13}, {sym::delta0_prime, -2}, {sym::delta0_second, -2},
                                 {sym::delta0_ram, -3}},
                                detail::higher_prym_boundary(space.genus()));
    case SpaceKind::Mbar: {
        std::set<std::string> opaque;
        for (int i = 1; i <= h; ++i)
            opaque.insert(sym::delta(i));
        return DivisorClass::of(space, {{sym::lambda, 13}, {sym::delta(0), -2}}, opaque);
    }
    }
    throw Error(ErrorCode::BadParam, "unknown space");
}

/// Vanishing theta-nulls: 1/4 lambda - 1/16 alpha0 - 1/2 sum_{i>=1} beta_i on Sbar_g^+.
inline DivisorClass theta_null(int genus)
{
    ModuliSpaceId space(SpaceKind::SbarPlus, genus);
    std::vector<DivisorClass::Entry> e{{sym::lambda, make_rational(1, 4)}, {sym::alpha(0), make_rational(-1, 16)}};
    for (int i = 1; i <= space.half_genus(); ++i)
        e.emplace_back(sym::beta(i), make_rational(-1, 2));
    return DivisorClass::of(space, e);
}

/// Prym-Green virtual divisor on Rbar_{2i+6}:
///   C(2i+2, i) * (3(2i+7)/(i+3) lambda - 3/2 delta0ram - delta0' - ? delta0'' - ...)
inline DivisorClass prym_green(int genus, int i)
{
    if (i < 0 || genus != 2 * i + 6)
        throw Error(ErrorCode::BadParam, "prym_green needs genus = 2i+6 with i >= 0 (genus " +
                                             std::to_string(genus) + ", i " + std::to_string(i) + ")");
    ModuliSpaceId space(SpaceKind::Rbar, genus);
    Rational b(binomial(2 * i + 2, i));
    auto opaque = detail::higher_prym_boundary(genus);
    opaque.insert(sym::delta0_second);
    return DivisorClass::of(space,
                            {{sym::lambda, b * make_rational(3 * (2 * i + 7), i + 3)},
                             {sym::delta0_ram, b * make_rational(-3, 2)},
                             {sym::delta0_prime, -b}},
                            opaque);
}

/// Prym-Green divisor with i inferred from the genus.
inline DivisorClass prym_green(int genus)
{
    if (genus < 6 || genus % 2 != 0)
        throw Error(ErrorCode::BadParam, "prym_green needs an even genus >= 6, got " + std::to_string(genus));
    return prym_green(genus, (genus - 6) / 2);
}

/// Closure of the Prym-Nikulin divisor in Rbar_6: 7 lambda - 3/2 delta0ram - (delta0' + delta0'') - ...
inline DivisorClass nikulin_n6()
{
    ModuliSpaceId space(SpaceKind::Rbar, 6);
    return DivisorClass::of(space,
                            {{sym::lambda, 7}, {sym::delta0_ram, make_rational(-3, 2)},
                             {sym::delta0_prime, -1}, {sym::delta0_second, -1}},
                            detail::higher_prym_boundary(6));
}

/// Normalized Brill-Noether divisor of plane septics on Mbar_8.
inline DivisorClass bn8()
{
    ModuliSpaceId space(SpaceKind::Mbar, 8);
    return DivisorClass::of(space, {{sym::lambda, 22},
                                    {sym::delta(0), -3},
                                    {sym::delta(1), -14},
                                    {sym::delta(2), -24},
                                    {sym::delta(3), -30},
                                    {sym::delta(4), -32}});
}

/// Prym curves in Rbar_5 whose Prym-canonical bundle is not very ample.
inline DivisorClass d2_nonveryample()
{
    ModuliSpaceId space(SpaceKind::Rbar, 5);
    return DivisorClass::of(space,
                            {{sym::lambda, 14}, {sym::delta0_prime, -2}, {sym::delta0_second, -2},
                             {sym::delta0_ram, make_rational(-5, 2)}},
                            detail::higher_prym_boundary(5));
}

/// c1 of the bundle with fibres H^0(C, (omega_C (x) eta)^i) over Rbar_g:
///   C(i,2)(12 lambda - delta0' - delta0'' - 2 delta0ram) + lambda - i^2/4 delta0ram.
inline DivisorClass hodge_c1(int genus, int i)
{
    if (i < 1)
        throw Error(ErrorCode::BadParam, "hodge_c1 needs i >= 1, got " + std::to_string(i));
    ModuliSpaceId space(SpaceKind::Rbar, genus);
    Rational b(binomial(i, 2));
    return DivisorClass::of(space,
                            {{sym::lambda, 12 * b + 1},
                             {sym::delta0_prime, -b},
                             {sym::delta0_second, -b},
                             {sym::delta0_ram, -2 * b - make_rational(long(i) * i, 4)}},
                            detail::higher_prym_boundary(genus));
}

/// c1(Sym^power E) for E of the given rank: power * C(rank+power-1, power) / rank * c1(E).
inline DivisorClass sym_power_c1(const DivisorClass& c1, int rank, int power)
{
    if (rank < 1 || power < 1)
        throw Error(ErrorCode::BadParam, "sym_power_c1 needs rank >= 1 and power >= 1");
    Rational factor(Integer(power) * binomial(rank + power - 1, power), Integer(rank));
    factor.canonicalize();
    return factor * c1;
}

/// a / b0 for a class a lambda - b0 delta0 - ... on Mbar_g (b0 > 0).
inline Rational slope(const DivisorClass& d)
{
    detail::require_kind(d, SpaceKind::Mbar);
    Rational a = d.coeff(sym::lambda);
    Rational d0 = d.coeff(sym::delta(0));
    if (d0 == 0)
        throw Error(ErrorCode::ZeroDenominator, "delta0 coefficient is zero");
    if (d0 > 0)
        throw Error(ErrorCode::BadParam, "slope needs a negative delta0 coefficient");
    Rational s = a / (-d0);
    s.canonicalize();
    return s;
}

/// Names accepted by named_divisor(), in catalog order.
inline const std::vector<std::string>& divisor_names()
{
    static const std::vector<std::string> names{"canonical", "theta_null", "prym_green", "nikulin_N6",
                                                "bn8",       "d2_nonveryample", "hodge_c1"};
    return names;
}

/// Looks up a named class. `param` is i for prym_green / hodge_c1.
/// canonical needs an explicit space kind; the others carry their own.
inline DivisorClass named_divisor(std::string_view name, int genus, std::optional<int> param = std::nullopt,
                                  SpaceKind canonical_kind = SpaceKind::SbarPlus)
{
    if (name == "canonical")
        return canonical_class(ModuliSpaceId(canonical_kind, genus));
    if (name == "theta_null")
        return theta_null(genus);
    if (name == "prym_green")
        return param ? prym_green(genus, *param) : prym_green(genus);
    if (name == "nikulin_N6") {
        detail::require_genus(genus, 6, "nikulin_N6");
        return nikulin_n6();
    }
    if (name == "bn8") {
        detail::require_genus(genus, 8, "bn8");
        return bn8();
    }
    if (name == "d2_nonveryample") {
        detail::require_genus(genus, 5, "d2_nonveryample");
        return d2_nonveryample();
    }
    if (name == "hodge_c1") {
        if (!param)
            throw Error(ErrorCode::BadParam, "hodge_c1 needs --param i");
        return hodge_c1(genus, *param);
    }
    throw Error(ErrorCode::BadParam, "unknown divisor '" + std::string(name) + "'");
}

} // namespace tautcheck

#endif // TAUTCHECK_PICARD_HPP
