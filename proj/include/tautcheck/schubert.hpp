#ifndef TAUTCHECK_SCHUBERT_HPP
#define TAUTCHECK_SCHUBERT_HPP

#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "tautcheck/error.hpp"
#include "tautcheck/rational.hpp"

namespace tautcheck {

/// Integer combination of Schubert classes sigma_{a,b} (n-2 >= a >= b >= 0)
/// in the cohomology of G(2, n).
class SchubertCycle {
public:
    using Partition = std::pair<int, int>;

    explicit SchubertCycle(int n) : n_(n)
    {
        if (n < 2)
            throw Error(ErrorCode::BadParam, "G(2,n) needs n >= 2");
    }

    /// sigma_{a,b}; zero if the partition does not fit the 2 x (n-2) box.
    static SchubertCycle sigma(int n, int a, int b = 0, const Integer& coeff = 1)
    {
        SchubertCycle c(n);
        c.add_term(a, b, coeff);
        return c;
    }

    static SchubertCycle unit(int n) { return sigma(n, 0, 0); }

    int n() const noexcept { return n_; }
    int box() const noexcept { return n_ - 2; }
    int dimension() const noexcept { return 2 * (n_ - 2); }
    const std::map<Partition, Integer>& terms() const noexcept { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Integer coeff(int a, int b) const
    {
        auto it = terms_.find({a, b});
        return it == terms_.end() ? Integer(0) : it->second;
    }

    /// Adds coeff * sigma_{a,b}; silently drops partitions outside the box.
    void add_term(int a, int b, const Integer& coeff)
    {
        if (a < b || b < 0 || a > box() || coeff == 0)
            return;
        auto& slot = terms_[{a, b}];
        slot += coeff;
        if (slot == 0)
            terms_.erase({a, b});
    }

    std::string to_string() const
    {
        if (terms_.empty())
            return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [p, c] = *it;
            Integer v = c;
            if (out.empty()) {
                if (v < 0) {
                    out += "-";
                    v = -v;
                }
            } else {
                out += v < 0 ? " - " : " + ";
                if (v < 0)
                    v = -v;
            }
            if (v != 1)
                out += v.get_str() + "*";
            out += "s(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
        }
        return out;
    }

    friend SchubertCycle operator+(SchubertCycle a, const SchubertCycle& b)
    {
        if (a.n_ != b.n_)
            throw Error(ErrorCode::AmbientMismatch, "G(2," + std::to_string(a.n_) + ") vs G(2," +
                                                        std::to_string(b.n_) + ")");
        for (const auto& [p, c] : b.terms_)
            a.add_term(p.first, p.second, c);
        return a;
    }

    friend SchubertCycle operator*(const Integer& s, const SchubertCycle& c)
    {
        SchubertCycle out(c.n_);
        for (const auto& [p, v] : c.terms_)
            out.add_term(p.first, p.second, s * v);
        return out;
    }

    friend SchubertCycle operator-(const SchubertCycle& a, const SchubertCycle& b) { return a + Integer(-1) * b; }

    friend bool operator==(const SchubertCycle&, const SchubertCycle&) = default;

private:
    int n_;
    std::map<Partition, Integer> terms_;
};

/// Multiplication by sigma_1: sigma_{a,b} -> sigma_{a+1,b} + sigma_{a,b+1}.
inline SchubertCycle pieri(const SchubertCycle& c)
{
    SchubertCycle out(c.n());
    for (const auto& [p, v] : c.terms()) {
        out.add_term(p.first + 1, p.second, v);
        out.add_term(p.first, p.second + 1, v);
    }
    return out;
}

/// Multiplication by the special class sigma_k:
/// sigma_{a,b} sigma_k = sum sigma_{c,d}, c + d = a + b + k, c >= a >= d >= b.
inline SchubertCycle special_pieri(const SchubertCycle& c, int k)
{
    if (k == 0)
        return c;
    SchubertCycle out(c.n());
    if (k < 0 || k > c.box())
        return out;
    for (const auto& [p, v] : c.terms()) {
        auto [a, b] = p;
        for (int d = b; d <= a; ++d) {
            int top = a + b + k - d;
            if (top >= a)
                out.add_term(top, d, v);
        }
    }
    return out;
}

/// c * sigma_{a,b} through Giambelli: sigma_{a,b} = sigma_a sigma_b - sigma_{a+1} sigma_{b-1}.
inline SchubertCycle multiply_by_sigma(const SchubertCycle& c, int a, int b)
{
    if (b == 0)
        return special_pieri(c, a);
    return special_pieri(special_pieri(c, a), b) - special_pieri(special_pieri(c, a + 1), b - 1);
}

inline SchubertCycle multiply(const SchubertCycle& x, const SchubertCycle& y)
{
    if (x.n() != y.n())
        throw Error(ErrorCode::AmbientMismatch, "G(2," + std::to_string(x.n()) + ") vs G(2," +
                                                    std::to_string(y.n()) + ")");
    SchubertCycle out(x.n());
    for (const auto& [p, v] : y.terms())
        out = out + v * multiply_by_sigma(x, p.first, p.second);
    return out;
}

inline SchubertCycle sigma1_power(int n, int k)
{
    SchubertCycle out = SchubertCycle::unit(n);
    for (int i = 0; i < k; ++i)
        out = pieri(out);
    return out;
}

/// Degree of a pure codimension-k cycle: top-class coefficient of c * sigma_1^{dim - k}.
inline Integer degree(const SchubertCycle& c)
{
    if (c.is_zero())
        return 0;
    int codim = -1;
    for (const auto& [p, v] : c.terms()) {
        int k = p.first + p.second;
        if (codim >= 0 && k != codim)
            throw Error(ErrorCode::MixedCodimension, "cycle mixes codimensions " + std::to_string(codim) +
                                                         " and " + std::to_string(k));
        codim = k;
    }
    SchubertCycle top = c;
    for (int i = codim; i < c.dimension(); ++i)
        top = pieri(top);
    return top.coeff(c.box(), c.box());
}

/// Dimension of the variety of lines on a smooth quadric in P^n.
inline int vq_dimension(int n)
{
    if (n < 4)
        throw Error(ErrorCode::BadParam, "vq_dimension needs n >= 4");
    return 2 * n - 5;
}

namespace detail {

class ExprParser {
public:
    ExprParser(int n, std::string_view text) : n_(n), text_(text) {}

    SchubertCycle parse()
    {
        SchubertCycle total(n_);
        bool negate = false;
        skip();
        if (peek() == '-') {
            negate = true;
            ++pos_;
        }
        total = sign(product(), negate);
        for (skip(); pos_ < text_.size(); skip()) {
            char op = text_[pos_++];
            if (op != '+' && op != '-')
                fail("expected '+' or '-'");
            total = total + sign(product(), op == '-');
        }
        return total;
    }

private:
    SchubertCycle sign(const SchubertCycle& c, bool negate) { return negate ? Integer(-1) * c : c; }

    SchubertCycle product()
    {
        SchubertCycle acc = factor();
        for (skip(); peek() == '*'; skip()) {
            ++pos_;
            acc = multiply(acc, factor());
        }
        return acc;
    }

    SchubertCycle factor()
    {
        skip();
        SchubertCycle base(n_);
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            base = Integer(number()) * SchubertCycle::unit(n_);
        } else if (peek() == 's') {
            ++pos_;
            if (peek() == '(') {
                ++pos_;
                int a = number();
                int b = 0;
                skip();
                if (peek() == ',') {
                    ++pos_;
                    b = number();
                }
                skip();
                if (peek() != ')')
                    fail("expected ')'");
                ++pos_;
                if (a < b || b < 0)
                    fail("partition must satisfy a >= b >= 0");
                base = SchubertCycle::sigma(n_, a, b);
            } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
                base = SchubertCycle::sigma(n_, number(), 0);
            } else {
                fail("expected s(a,b) or s<k>");
            }
        } else {
            fail("unexpected character");
        }
        skip();
        if (peek() == '^') {
            ++pos_;
            int e = number();
            SchubertCycle p = SchubertCycle::unit(n_);
            for (int i = 0; i < e; ++i)
                p = multiply(p, base);
            return p;
        }
        return base;
    }

    int number()
    {
        skip();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected a number");
        return std::stoi(std::string(text_.substr(start, pos_ - start)));
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    [[noreturn]] void fail(const std::string& why) const
    {
        throw Error(ErrorCode::ParseError, why + " at position " + std::to_string(pos_) + " in '" +
                                               std::string(text_) + "'");
    }

    int n_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parses sums of products such as "4*s(2,1)*s1^3", "s(1,1)^2 - s2*s(1,1)".
/// Factors: an integer, s(a,b), s(a), s<k> (special class), each with an optional ^e.
inline SchubertCycle parse_schubert(int n, std::string_view text)
{
    return detail::ExprParser(n, text).parse();
}

} // namespace tautcheck

#endif // TAUTCHECK_SCHUBERT_HPP
