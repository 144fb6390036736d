#ifndef TAUTCHECK_QUADRATIC_HPP
#define TAUTCHECK_QUADRATIC_HPP

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tautcheck/error.hpp"
#include "tautcheck/matrix.hpp"
#include "tautcheck/rational.hpp"

namespace tautcheck {

/// Exact symmetric bilinear form given by its Gram matrix.
class SymmetricForm {
public:
    explicit SymmetricForm(RationalMatrix gram) : gram_(std::move(gram))
    {
        if (!gram_.is_square() || gram_.rows() == 0)
            throw Error(ErrorCode::DimensionMismatch, "Gram matrix must be square and nonempty");
        if (!gram_.is_symmetric())
            throw Error(ErrorCode::BadParam, "Gram matrix must be symmetric");
    }

    static SymmetricForm diagonal(const std::vector<Rational>& entries)
    {
        RationalMatrix g(entries.size(), entries.size());
        for (std::size_t i = 0; i < entries.size(); ++i)
            g(i, i) = entries[i];
        return SymmetricForm(std::move(g));
    }

    std::size_t dim() const noexcept { return gram_.rows(); }
    const RationalMatrix& gram() const noexcept { return gram_; }
    std::size_t rank() const { return tautcheck::rank(gram_); }

    Rational operator()(const RationalVector& u, const RationalVector& v) const
    {
        if (u.size() != dim() || v.size() != dim())
            throw Error(ErrorCode::DimensionMismatch, "vector length does not match form dimension");
        Rational out = 0;
        for (std::size_t i = 0; i < dim(); ++i) {
            if (u[i] == 0)
                continue;
            for (std::size_t j = 0; j < dim(); ++j)
                out += u[i] * gram_(i, j) * v[j];
        }
        return out;
    }

    Rational quadratic(const RationalVector& u) const { return (*this)(u, u); }

    /// The form in new coordinates x = P y: Gram P^T G P.
    SymmetricForm pulled_back(const RationalMatrix& p) const { return SymmetricForm(p.transpose() * gram_ * p); }

private:
    RationalMatrix gram_;
};

/// Lexicographic basis e_i ^ e_j (i < j) of the exterior square of a dim-dimensional space.
class WedgeBasisIndex {
public:
    explicit WedgeBasisIndex(std::size_t dim) : dim_(dim)
    {
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = i + 1; j < dim; ++j)
                pairs_.emplace_back(i, j);
    }

    std::size_t base_dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return pairs_.size(); }
    const std::pair<std::size_t, std::size_t>& pair(std::size_t k) const { return pairs_.at(k); }

    std::size_t index_of(std::size_t i, std::size_t j) const
    {
        if (i >= j || j >= dim_)
            throw Error(ErrorCode::BadParam, "wedge index needs i < j < dim");
        // Rows before i contribute (dim-1) + (dim-2) + ... + (dim-i).
        return i * dim_ - i * (i + 1) / 2 + (j - i - 1);
    }

private:
    std::size_t dim_;
    std::vector<std::pair<std::size_t, std::size_t>> pairs_;
};

/// Plucker coordinates of u ^ v.
inline RationalVector wedge(const RationalVector& u, const RationalVector& v)
{
    if (u.size() != v.size())
        throw Error(ErrorCode::DimensionMismatch, "wedge of vectors of different length");
    WedgeBasisIndex idx(u.size());
    RationalVector out(idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k) {
        auto [i, j] = idx.pair(k);
        out[k] = u[i] * v[j] - u[j] * v[i];
    }
    return out;
}

inline bool is_zero(const RationalVector& v)
{
    for (const auto& x : v)
        if (x != 0)
            return false;
    return true;
}

inline RationalVector basis_vector(std::size_t dim, std::size_t i)
{
    RationalVector e(dim, Rational(0));
    e.at(i) = 1;
    return e;
}

/// Induced form on the exterior square:
/// (u^v, s^t) -> q(u,s) q(v,t) - q(v,s) q(u,t); its Gram is the second compound of q.
inline SymmetricForm second_compound(const SymmetricForm& q)
{
    WedgeBasisIndex idx(q.dim());
    const auto& g = q.gram();
    RationalMatrix out(idx.size(), idx.size());
    for (std::size_t p = 0; p < idx.size(); ++p) {
        auto [i, j] = idx.pair(p);
        for (std::size_t r = 0; r < idx.size(); ++r) {
            auto [k, l] = idx.pair(r);
            out(p, r) = g(i, k) * g(j, l) - g(j, k) * g(i, l);
        }
    }
    return SymmetricForm(std::move(out));
}

namespace detail {

inline void require_line(const SymmetricForm& q, const RationalVector& u, const RationalVector& v)
{
    if (u.size() != q.dim() || v.size() != q.dim())
        throw Error(ErrorCode::DimensionMismatch, "vector length does not match form dimension");
    if (q.quadratic(u) != 0)
        throw Error(ErrorCode::BasePointNotOnQuadric, "q(u,u) = " + to_string(q.quadratic(u)));
    if (is_zero(wedge(u, v)))
        throw Error(ErrorCode::DependentVectors, "u and v are linearly dependent");
}

} // namespace detail

/// Is the line <u, v> (u on the quadric) tangent to it? Evaluated as
/// nu2(q)(u^v) = 0 through the second compound form.
inline bool tangency(const SymmetricForm& q, const RationalVector& u, const RationalVector& v)
{
    detail::require_line(q, u, v);
    auto w = wedge(u, v);
    return second_compound(q).quadratic(w) == 0;
}

/// Independent route: the binary form q(su + tv) has a double root iff
/// q(u,v)^2 - q(u)q(v) = 0.
inline bool discriminant_tangency(const SymmetricForm& q, const RationalVector& u, const RationalVector& v)
{
    Rational b = q(u, v);
    return b * b - q.quadratic(u) * q.quadratic(v) == 0;
}

/// Singularity of the line complex W_Q at [u^v]: the linear form
/// nu2(q)(u^v, -) must vanish on all tangent directions u^a - v^b.
inline bool is_singular_point(const SymmetricForm& q, const RationalVector& u, const RationalVector& v)
{
    detail::require_line(q, u, v);
    const auto nu2 = second_compound(q);
    const auto point = wedge(u, v);
    if (nu2.quadratic(point) != 0)
        throw Error(ErrorCode::NotInComplex, "the line is not tangent to the quadric");
    for (std::size_t a = 0; a < q.dim(); ++a) {
        auto e = basis_vector(q.dim(), a);
        if (nu2(point, wedge(u, e)) != 0 || nu2(point, wedge(v, e)) != 0)
            return false;
    }
    return true;
}

/// Closed-form criterion for the same question: the line lies on the quadric, q(v,v) = 0.
/// Valid when u is not in the radical of q.
inline bool singular_by_isotropy(const SymmetricForm& q, const RationalVector& /*u*/, const RationalVector& v)
{
    return q.quadratic(v) == 0;
}

/// Coefficients x with pairing_rows * x = targets: a class written in a divisor
/// basis from its intersection numbers with test curves.
inline RationalVector solve_in_basis(const RationalMatrix& pairing_rows, const RationalVector& targets)
{
    return solve(pairing_rows, targets);
}

/// Bivector psi in the wedge basis, as the skew matrix P with psi = sum_{i<j} P_ij e_i^e_j.
inline RationalMatrix skew_matrix(const RationalVector& psi, std::size_t dim)
{
    WedgeBasisIndex idx(dim);
    if (psi.size() != idx.size())
        throw Error(ErrorCode::DimensionMismatch, "bivector length does not match C(dim, 2)");
    RationalMatrix p(dim, dim);
    for (std::size_t k = 0; k < idx.size(); ++k) {
        auto [i, j] = idx.pair(k);
        p(i, j) = psi[k];
        p(j, i) = -psi[k];
    }
    return p;
}

inline RationalVector bivector_from_skew(const RationalMatrix& p)
{
    if (!p.is_square())
        throw Error(ErrorCode::DimensionMismatch, "skew matrix must be square");
    for (std::size_t i = 0; i < p.rows(); ++i)
        for (std::size_t j = i; j < p.cols(); ++j)
            if (p(i, j) != -p(j, i))
                throw Error(ErrorCode::BadParam, "matrix is not skew-symmetric");
    WedgeBasisIndex idx(p.rows());
    RationalVector psi(idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k) {
        auto [i, j] = idx.pair(k);
        psi[k] = p(i, j);
    }
    return psi;
}

/// Smallest r with psi a sum of r decomposable bivectors (half the rank of its skew matrix).
inline std::size_t wedge_rank(const RationalVector& psi, std::size_t dim)
{
    return rank(skew_matrix(psi, dim)) / 2;
}

/// Image of psi under the linear map g acting on V: P -> G P G^T.
inline RationalVector transform_bivector(const RationalMatrix& g, const RationalVector& psi)
{
    const auto p = skew_matrix(psi, g.rows());
    return bivector_from_skew(g * p * g.transpose());
}

namespace detail {

/// Sign of the permutation sorting `xs`, 0 on repeats.
template <std::size_t N>
int permutation_sign(std::array<std::size_t, N> xs)
{
    int sign = 1;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i + 1; j < N; ++j) {
            if (xs[i] == xs[j])
                return 0;
            if (xs[i] > xs[j])
                sign = -sign;
        }
    return sign;
}

} // namespace detail

/// Quadric through G(2,6) attached to psi in the exterior square of C^6:
/// B(x, y) = coefficient of e1^...^e6 in x ^ y ^ psi.
inline SymmetricForm plucker_form(const RationalVector& psi)
{
    WedgeBasisIndex idx(6);
    if (psi.size() != idx.size())
        throw Error(ErrorCode::DimensionMismatch, "plucker_form needs a bivector on a 6-dimensional space");
    RationalMatrix b(idx.size(), idx.size());
    for (std::size_t p = 0; p < idx.size(); ++p)
        for (std::size_t q = 0; q < idx.size(); ++q) {
            Rational total = 0;
            for (std::size_t r = 0; r < idx.size(); ++r) {
                if (psi[r] == 0)
                    continue;
                auto [i, j] = idx.pair(p);
                auto [k, l] = idx.pair(q);
                auto [m, n] = idx.pair(r);
                int s = detail::permutation_sign<6>({i, j, k, l, m, n});
                if (s != 0)
                    total += s * psi[r];
            }
            b(p, q) = total;
        }
    return SymmetricForm(std::move(b));
}

/// Rank of the quadric x -> vol(x ^ x ^ psi)/2 on the exterior square of C^6:
/// 6 (Plucker quadric), 10 or 15 according to the wedge rank 1, 2, 3 of psi.
inline std::size_t plucker_quadric_rank(const RationalVector& psi)
{
    if (psi.size() != 15)
        throw Error(ErrorCode::DimensionMismatch, "plucker_quadric_rank needs dim V = 6 (15 coordinates)");
    if (is_zero(psi))
        throw Error(ErrorCode::ZeroInput, "psi must be nonzero");
    return plucker_form(psi).rank();
}

} // namespace tautcheck

#endif // TAUTCHECK_QUADRATIC_HPP
