#ifndef TAUTCHECK_SAMPLING_HPP
#define TAUTCHECK_SAMPLING_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>

#include "tautcheck/matrix.hpp"
#include "tautcheck/quadratic.hpp"
#include "tautcheck/rational.hpp"

// Random exact inputs for the quadratic-complex property checks.
// Integer entries are drawn from [-9, 9].

namespace tautcheck::sampling {

using Rng = std::mt19937_64;

inline long small_int(Rng& rng)
{
    return std::uniform_int_distribution<long>(-9, 9)(rng);
}

inline long small_nonzero(Rng& rng)
{
    long x = 0;
    while (x == 0)
        x = small_int(rng);
    return x;
}

inline RationalVector random_vector(Rng& rng, std::size_t dim)
{
    RationalVector v(dim);
    for (auto& x : v)
        x = small_int(rng);
    return v;
}

inline RationalMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols)
{
    RationalMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = small_int(rng);
    return m;
}

inline RationalMatrix random_invertible(Rng& rng, std::size_t dim)
{
    for (;;) {
        auto m = random_matrix(rng, dim, dim);
        if (determinant(m) != 0)
            return m;
    }
}

/// P^T D P with D diagonal of exactly `rank` nonzero entries and P invertible.
inline SymmetricForm random_form_of_rank(Rng& rng, std::size_t dim, std::size_t rank)
{
    RationalVector d(dim, Rational(0));
    for (std::size_t i = 0; i < rank; ++i)
        d[i] = small_nonzero(rng);
    return SymmetricForm::diagonal(d).pulled_back(random_invertible(rng, dim));
}

/// Nondegenerate form with two hyperbolic planes, q = P^T D P with
/// D = diag(c1, -c1, c2, -c2, ...), so isotropic vectors can be written down
/// in the D-coordinates and moved back by P^{-1}.
class SplitQuadric {
public:
    SplitQuadric(Rng& rng, std::size_t dim) : rng_(rng), diag_(dim)
    {
        if (dim < 4)
            throw Error(ErrorCode::BadParam, "SplitQuadric needs dim >= 4");
        long c1 = small_nonzero(rng);
        long c2 = small_nonzero(rng);
        diag_[0] = c1;
        diag_[1] = -c1;
        diag_[2] = c2;
        diag_[3] = -c2;
        for (std::size_t i = 4; i < dim; ++i)
            diag_[i] = small_nonzero(rng);
        p_ = random_invertible(rng, dim);
        p_inv_ = inverse(p_);
        form_ = SymmetricForm::diagonal(diag_).pulled_back(p_);
        s1_ = sign_draw();
        s2_ = sign_draw();
    }

    const SymmetricForm& form() const { return *form_; }
    std::size_t dim() const { return diag_.size(); }

    /// Random nonzero isotropic vector (a, s1 a, b, s2 b, 0, ...) in D-coordinates.
    RationalVector isotropic()
    {
        auto [a, b] = nonzero_pair();
        return from_split(a, b);
    }

    /// Isotropic vector orthogonal to from_split(a, b), independent of it.
    RationalVector isotropic_partner(const RationalVector& u)
    {
        // u is never degenerate here; take a second pair not proportional to the first.
        auto w = p_ * u;
        Rational a = w[0];
        Rational b = w[2];
        for (;;) {
            auto [c, d] = nonzero_pair();
            if (a * d - b * c != 0)
                return from_split(c, d);
        }
    }

    Rng& rng() { return rng_; }

private:
    long sign_draw() { return std::uniform_int_distribution<int>(0, 1)(rng_) ? 1 : -1; }

    std::pair<long, long> nonzero_pair()
    {
        for (;;) {
            long a = small_int(rng_);
            long b = small_int(rng_);
            if (a != 0 || b != 0)
                return {a, b};
        }
    }

    RationalVector from_split(long a, long b) const
    {
        RationalVector w(dim(), Rational(0));
        w[0] = a;
        w[1] = s1_ * a;
        w[2] = b;
        w[3] = s2_ * b;
        return p_inv_ * w;
    }

    Rng& rng_;
    RationalVector diag_;
    RationalMatrix p_;
    RationalMatrix p_inv_;
    std::optional<SymmetricForm> form_;
    long s1_ = 1;
    long s2_ = 1;
};

/// Random vector v with q(u, v) = 0 and u ^ v != 0.
inline RationalVector random_orthogonal(Rng& rng, const SymmetricForm& q, const RationalVector& u)
{
    for (;;) {
        auto r = random_vector(rng, q.dim());
        auto s = random_vector(rng, q.dim());
        Rational qs = q(u, s);
        if (qs == 0)
            continue;
        Rational f = q(u, r) / qs;
        RationalVector v(q.dim());
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] = r[i] - f * s[i];
        if (!is_zero(wedge(u, v)))
            return v;
    }
}

inline RationalVector random_independent(Rng& rng, const RationalVector& u)
{
    for (;;) {
        auto v = random_vector(rng, u.size());
        if (!is_zero(wedge(u, v)))
            return v;
    }
}

/// rank(second_compound(q)) == C(rank q, 2) for one random q of the given rank.
inline bool compound_rank_trial(Rng& rng, std::size_t dim, std::size_t rank)
{
    auto q = random_form_of_rank(rng, dim, rank);
    if (q.rank() != rank)
        return false;
    return Integer(static_cast<unsigned long>(second_compound(q).rank())) == binomial(long(rank), 2);
}

/// Tangency predicate vs discriminant oracle at one random (u, v); half the
/// samples are constrained to q(u, v) = 0 so both outcomes are exercised.
struct TrialOutcome {
    bool agree = false;
    bool predicate = false;
};

inline TrialOutcome tangency_trial(Rng& rng, std::size_t dim, bool force_tangent)
{
    SplitQuadric quadric(rng, dim);
    auto u = quadric.isotropic();
    auto v = force_tangent ? random_orthogonal(rng, quadric.form(), u) : random_independent(rng, u);
    bool pred = tangency(quadric.form(), u, v);
    return {pred == discriminant_tangency(quadric.form(), u, v), pred};
}

/// Gradient singularity test vs the isotropy criterion at one random point
/// of W_Q; half the samples put the whole line on the quadric.
inline TrialOutcome singular_trial(Rng& rng, std::size_t dim, bool line_in_quadric)
{
    SplitQuadric quadric(rng, dim);
    auto u = quadric.isotropic();
    RationalVector v = line_in_quadric ? quadric.isotropic_partner(u) : random_orthogonal(rng, quadric.form(), u);
    if (line_in_quadric) {
        long t = small_int(rng);
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] += t * u[i];
    }
    bool pred = is_singular_point(quadric.form(), u, v);
    return {pred == singular_by_isotropy(quadric.form(), u, v), pred};
}

/// Plucker rank of g . psi for a random invertible g.
inline std::size_t conjugated_plucker_rank(Rng& rng, const RationalVector& psi)
{
    return plucker_quadric_rank(transform_bivector(random_invertible(rng, 6), psi));
}

} // namespace tautcheck::sampling

#endif // TAUTCHECK_SAMPLING_HPP
