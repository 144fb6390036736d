#ifndef TAUTCHECK_LATTICE_HPP
#define TAUTCHECK_LATTICE_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tautcheck/error.hpp"
#include "tautcheck/matrix.hpp"
#include "tautcheck/rational.hpp"

namespace tautcheck {

/// Integer coordinates in a lattice basis.
struct LatticeVector {
    std::vector<Integer> coords;

    LatticeVector() = default;
    explicit LatticeVector(std::size_t rank) : coords(rank, Integer(0)) {}
    LatticeVector(std::initializer_list<long> xs)
    {
        for (long x : xs)
            coords.emplace_back(x);
    }

    std::size_t size() const noexcept { return coords.size(); }

    friend LatticeVector operator+(LatticeVector a, const LatticeVector& b)
    {
        if (a.size() != b.size())
            throw Error(ErrorCode::DimensionMismatch, "vector length mismatch");
        for (std::size_t i = 0; i < a.size(); ++i)
            a.coords[i] += b.coords[i];
        return a;
    }
    friend LatticeVector operator*(const Integer& s, LatticeVector v)
    {
        for (auto& x : v.coords)
            x *= s;
        return v;
    }
    friend LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) { return a + Integer(-1) * b; }
    friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
};

/// Integral symmetric bilinear form with named basis vectors.
class IntegerLattice {
public:
    IntegerLattice(IntegerMatrix gram, std::vector<std::string> names) : gram_(std::move(gram)), names_(std::move(names))
    {
        if (!gram_.is_square() || gram_.rows() == 0)
            throw Error(ErrorCode::DimensionMismatch, "Gram matrix must be square and nonempty");
        if (!gram_.is_symmetric())
            throw Error(ErrorCode::BadParam, "Gram matrix must be symmetric");
        if (names_.size() != gram_.rows())
            throw Error(ErrorCode::DimensionMismatch, "one name per basis vector");
    }

    std::size_t rank() const noexcept { return gram_.rows(); }
    const IntegerMatrix& gram() const noexcept { return gram_; }
    const std::vector<std::string>& names() const noexcept { return names_; }

    LatticeVector basis_vector(std::size_t i) const
    {
        LatticeVector v(rank());
        v.coords.at(i) = 1;
        return v;
    }

    LatticeVector basis_vector(const std::string& name) const
    {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name)
                return basis_vector(i);
        throw Error(ErrorCode::UnknownSymbol, "no basis vector named '" + name + "'");
    }

    Integer inner(const LatticeVector& v, const LatticeVector& w) const
    {
        if (v.size() != rank() || w.size() != rank())
            throw Error(ErrorCode::DimensionMismatch, "vector length " + std::to_string(v.size()) + "/" +
                                                          std::to_string(w.size()) + " vs rank " +
                                                          std::to_string(rank()));
        Integer out = 0;
        for (std::size_t i = 0; i < rank(); ++i) {
            if (v.coords[i] == 0)
                continue;
            for (std::size_t j = 0; j < rank(); ++j)
                out += v.coords[i] * gram_(i, j) * w.coords[j];
        }
        return out;
    }

    Integer norm(const LatticeVector& v) const { return inner(v, v); }

    bool is_even() const
    {
        for (std::size_t i = 0; i < rank(); ++i)
            if (mpz_odd_p(gram_(i, i).get_mpz_t()))
                return false;
        return true;
    }

    Integer determinant() const { return tautcheck::determinant(gram_); }

    /// Sylvester: leading principal minors alternate in sign, starting negative.
    bool is_negative_definite() const
    {
        for (std::size_t k = 1; k <= rank(); ++k) {
            IntegerMatrix minor(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    minor(i, j) = gram_(i, j);
            Integer d = tautcheck::determinant(minor);
            int expected = (k % 2 == 1) ? -1 : 1;
            if (sgn(d) != expected)
                return false;
        }
        return true;
    }

    IntegerLattice scaled(const Integer& s) const { return IntegerLattice(gram_.scaled(s), names_); }

    /// Orthogonal direct sum.
    friend IntegerLattice operator+(const IntegerLattice& a, const IntegerLattice& b)
    {
        const std::size_t n = a.rank() + b.rank();
        IntegerMatrix g(n, n);
        for (std::size_t i = 0; i < a.rank(); ++i)
            for (std::size_t j = 0; j < a.rank(); ++j)
                g(i, j) = a.gram_(i, j);
        for (std::size_t i = 0; i < b.rank(); ++i)
            for (std::size_t j = 0; j < b.rank(); ++j)
                g(a.rank() + i, a.rank() + j) = b.gram_(i, j);
        auto names = a.names_;
        names.insert(names.end(), b.names_.begin(), b.names_.end());
        return IntegerLattice(std::move(g), std::move(names));
    }

private:
    IntegerMatrix gram_;
    std::vector<std::string> names_;
};

/// Nikulin lattice in the integral basis {n1, ..., n7, e}, e = (n1 + ... + n8)/2:
/// n_i^2 = -2, n_i . n_j = 0, e^2 = -4, e . n_i = -1.
inline IntegerLattice nikulin_lattice()
{
    IntegerMatrix g(8, 8);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < 7; ++i) {
        g(i, i) = -2;
        g(i, 7) = -1;
        g(7, i) = -1;
        names.push_back("n" + std::to_string(i + 1));
    }
    g(7, 7) = -4;
    names.push_back("e");
    return IntegerLattice(std::move(g), std::move(names));
}

/// Lambda_g = Z c (+) Nikulin, c^2 = 2g - 2. Basis {c, n1, ..., n7, e}.
inline IntegerLattice lambda_g(int genus)
{
    if (genus < 2)
        throw Error(ErrorCode::BadGenus, "Lambda_g needs g >= 2");
    IntegerMatrix c(1, 1);
    c(0, 0) = 2 * genus - 2;
    return IntegerLattice(std::move(c), {"c"}) + nikulin_lattice();
}

/// Classes of Lambda_g used throughout: C = c, e, N_i (i = 1..8), H = C - e, N = 2e.
struct NikulinClasses {
    LatticeVector c;
    LatticeVector e;
    std::vector<LatticeVector> n; // n[0..7] = N_1..N_8
    LatticeVector h;
    LatticeVector big_n;
};

inline NikulinClasses nikulin_classes(const IntegerLattice& lambda)
{
    NikulinClasses out;
    out.c = lambda.basis_vector("c");
    out.e = lambda.basis_vector("e");
    LatticeVector sum7(lambda.rank());
    for (int i = 1; i <= 7; ++i) {
        out.n.push_back(lambda.basis_vector("n" + std::to_string(i)));
        sum7 = sum7 + out.n.back();
    }
    out.n.push_back(Integer(2) * out.e - sum7);
    out.h = out.c - out.e;
    out.big_n = Integer(2) * out.e;
    return out;
}

inline IntegerLattice hyperbolic_u()
{
    return IntegerLattice(IntegerMatrix{{0, 1}, {1, 0}}, {"u1", "u2"});
}

/// scale * (Cartan matrix of E8). e8(-1) is the even unimodular negative-definite E8(-1).
inline IntegerLattice e8(long scale)
{
    IntegerMatrix g(8, 8);
    for (std::size_t i = 0; i < 8; ++i)
        g(i, i) = 2;
    // Bourbaki labelling: chain 1-3-4-5-6-7-8 with node 2 attached to 4.
    const std::pair<int, int> edges[] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}};
    for (auto [a, b] : edges) {
        g(a - 1, b - 1) = -1;
        g(b - 1, a - 1) = -1;
    }
    std::vector<std::string> names;
    for (int i = 1; i <= 8; ++i)
        names.push_back("a" + std::to_string(i));
    return IntegerLattice(g.scaled(Integer(scale)), std::move(names));
}

struct LatticeIdentity {
    std::string name;
    Integer computed;
    Integer expected;
    bool holds() const { return computed == expected; }
};

/// The numerical identities of Lambda_g: C^2, H^2, H.C, H.N_i, N^2, N.H, N.C, e^2.
inline std::vector<LatticeIdentity> lambda_identities(int genus)
{
    auto lat = lambda_g(genus);
    auto k = nikulin_classes(lat);
    std::vector<LatticeIdentity> out{
        {"C^2", lat.norm(k.c), 2 * genus - 2},
        {"H^2", lat.norm(k.h), 2 * genus - 6},
        {"H.C", lat.inner(k.h, k.c), 2 * genus - 2},
    };
    for (std::size_t i = 0; i < k.n.size(); ++i)
        out.push_back({"H.N" + std::to_string(i + 1), lat.inner(k.h, k.n[i]), 1});
    out.push_back({"N^2", lat.norm(k.big_n), -16});
    out.push_back({"N.H", lat.inner(k.big_n, k.h), 8});
    out.push_back({"N.C", lat.inner(k.big_n, k.c), 0});
    out.push_back({"e^2", lat.norm(k.e), -4});
    return out;
}

/// C . l == 0 mod 2g - 2 for every basis vector l of Lambda_g (hence for all of Lambda_g).
inline bool c_congruence_holds(int genus)
{
    auto lat = lambda_g(genus);
    auto c = lat.basis_vector("c");
    const Integer modulus = 2 * genus - 2;
    for (std::size_t i = 0; i < lat.rank(); ++i) {
        Integer v = lat.inner(c, lat.basis_vector(i));
        if (v % modulus != 0)
            return false;
    }
    return true;
}

/// Smallest B with B^2 >= n.
inline long ceil_sqrt(long n)
{
    Integer root;
    mpz_sqrt(root.get_mpz_t(), Integer(n).get_mpz_t());
    long r = root.get_si();
    return r * r == n ? r : r + 1;
}

/// Number of b in [-bound, bound]^8 with sum(b_i) = target_sum and sum(b_i^2) = target_norm,
/// by exhaustive dynamic programming over (entries placed, partial norm, partial sum).
inline std::uint64_t count_norm_sum_solutions(long target_sum, long target_norm, long bound, int entries = 8)
{
    if (target_norm < 0 || bound < 0)
        return 0;
    const long sum_span = static_cast<long>(entries) * bound;
    const long width = 2 * sum_span + 1;
    auto at = [&](long norm, long sum) { return static_cast<std::size_t>(norm * width + (sum + sum_span)); };
    std::vector<std::uint64_t> layer(static_cast<std::size_t>((target_norm + 1) * width), 0);
    layer[at(0, 0)] = 1;
    for (int k = 0; k < entries; ++k) {
        std::vector<std::uint64_t> next(layer.size(), 0);
        for (long norm = 0; norm <= target_norm; ++norm)
            for (long sum = -sum_span; sum <= sum_span; ++sum) {
                auto ways = layer[at(norm, sum)];
                if (ways == 0)
                    continue;
                for (long b = -bound; b <= bound; ++b) {
                    long nn = norm + b * b;
                    long ns = sum + b;
                    if (nn > target_norm || ns < -sum_span || ns > sum_span)
                        continue;
                    next[at(nn, ns)] += ways;
                }
            }
        layer = std::move(next);
    }
    if (target_sum < -sum_span || target_sum > sum_span)
        return 0;
    return layer[at(target_norm, target_sum)];
}

struct CsEntry {
    long a = 0;
    long sum = 0;       // 2ag - 2a - 3
    long norm = 0;      // a^2 (g - 1)
    Integer gap;        // sum^2 - 8 norm, must be > 0
    long search_bound = 0;
    std::uint64_t solutions = 0;
    bool passed() const { return gap > 0 && solutions == 0; }
};

struct CsCertificate {
    int genus = 0;
    std::vector<CsEntry> entries;
    bool passed() const
    {
        for (const auto& e : entries)
            if (!e.passed())
                return false;
        return !entries.empty();
    }
};

/// No class a C - sum b_i N_i in Lambda_g has square 0 and degree 3 against H:
/// that would need sum b_i = 2ag - 2a - 3 and sum b_i^2 = a^2(g - 1), which
/// Cauchy-Schwarz (sum b)^2 <= 8 sum b^2 forbids. The certificate records the
/// gap and an exhaustive search confirming there are no integer solutions.
inline CsCertificate cs_obstruction(int genus, int a_bound)
{
    if (genus < 2 || a_bound < 1)
        throw Error(ErrorCode::BadParam, "cs_obstruction needs g >= 2 and a_bound >= 1");
    CsCertificate cert;
    cert.genus = genus;
    for (long a = 1; a <= a_bound; ++a) {
        CsEntry e;
        e.a = a;
        e.sum = 2 * a * genus - 2 * a - 3;
        e.norm = a * a * (genus - 1);
        e.gap = Integer(e.sum) * e.sum - Integer(8) * e.norm;
        e.search_bound = ceil_sqrt(e.norm);
        e.solutions = count_norm_sum_solutions(e.sum, e.norm, e.search_bound);
        cert.entries.push_back(e);
    }
    return cert;
}

struct DoublyEllipticReport {
    IntegerLattice section_lattice;   // {E, Gamma_1..Gamma_7}
    LatticeVector curve;              // 2E + Gamma_1 + ... + Gamma_7
    Integer curve_norm;
    Integer curve_dot_e;
    std::vector<Integer> curve_dot_gamma;
    IntegerLattice elliptic_lattice;  // {C1, C2}
    Integer elliptic_sum_norm;        // (C1 + C2)^2
    Integer elliptic_product;         // C1 . C2

    bool passed() const
    {
        for (const auto& x : curve_dot_gamma)
            if (x != 0)
                return false;
        return curve_norm == 14 && elliptic_sum_norm == 14 && elliptic_product == 7;
    }
};

inline DoublyEllipticReport doubly_elliptic_identities()
{
    IntegerMatrix g(8, 8);
    std::vector<std::string> names{"E"};
    for (std::size_t i = 1; i < 8; ++i) {
        g(i, i) = -2;
        g(0, i) = 1;
        g(i, 0) = 1;
        names.push_back("Gamma" + std::to_string(i));
    }
    IntegerLattice section(std::move(g), std::move(names));
    LatticeVector curve = Integer(2) * section.basis_vector(0);
    for (std::size_t i = 1; i < 8; ++i)
        curve = curve + section.basis_vector(i);

    IntegerLattice elliptic(IntegerMatrix{{0, 7}, {7, 0}}, {"C1", "C2"});
    LatticeVector c1 = elliptic.basis_vector(0);
    LatticeVector c2 = elliptic.basis_vector(1);

    DoublyEllipticReport r{section, curve, section.norm(curve), section.inner(curve, section.basis_vector(0)), {},
                           elliptic, elliptic.norm(c1 + c2), elliptic.inner(c1, c2)};
    for (std::size_t i = 1; i < 8; ++i)
        r.curve_dot_gamma.push_back(section.inner(curve, section.basis_vector(i)));
    return r;
}

} // namespace tautcheck

#endif // TAUTCHECK_LATTICE_HPP
