#ifndef WITTPATHS_SERIES_HPP
#define WITTPATHS_SERIES_HPP

// Multivariate formal power series over exact rationals, truncated at a total
// degree bound D. Coefficients live in a sparse map keyed by exponent vector;
// zero coefficients are never stored.

#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "numth.hpp"

namespace wittpaths
{

using Exponent = std::vector<unsigned>;

inline unsigned total_degree(std::span<const unsigned> e)
{
    return std::accumulate(e.begin(), e.end(), 0u);
}

/// All exponent vectors with `vars` entries and total degree <= bound,
/// ordered by total degree, then lexicographically.
inline std::vector<Exponent> graded_monomials(unsigned vars, unsigned bound, bool include_constant = true)
{
    std::vector<Exponent> out;
    for (unsigned d = include_constant ? 0 : 1; d <= bound; ++d) {
        Exponent e(vars, 0);
        std::function<void(unsigned, unsigned)> rec = [&](unsigned i, unsigned left) {
            if (i + 1 == vars) {
                e[i] = left;
                out.push_back(e);
                return;
            }
            for (unsigned v = 0; v <= left; ++v) {
                e[i] = v;
                rec(i + 1, left - v);
            }
        };
        if (vars > 0) {
            rec(0, d);
        }
    }
    return out;
}

class TruncatedSeries
{
public:
    using Terms = std::map<Exponent, BigRational>;

    TruncatedSeries(unsigned num_vars, unsigned degree_bound) : vars_(num_vars), bound_(degree_bound)
    {
        if (num_vars == 0) {
            throw std::invalid_argument("series needs at least one variable");
        }
    }

    static TruncatedSeries constant(unsigned num_vars, unsigned degree_bound, const BigRational &c)
    {
        TruncatedSeries s(num_vars, degree_bound);
        s.set(Exponent(num_vars, 0), c);
        return s;
    }

    static TruncatedSeries one(unsigned num_vars, unsigned degree_bound)
    {
        return constant(num_vars, degree_bound, 1);
    }

    /// z_i, 0-based.
    static TruncatedSeries variable(unsigned num_vars, unsigned degree_bound, unsigned index)
    {
        Exponent e(num_vars, 0);
        e.at(index) = 1;
        return monomial(num_vars, degree_bound, e, 1);
    }

    static TruncatedSeries monomial(unsigned num_vars, unsigned degree_bound, Exponent e, const BigRational &c)
    {
        TruncatedSeries s(num_vars, degree_bound);
        s.set(std::move(e), c);
        return s;
    }

    unsigned num_vars() const noexcept
    {
        return vars_;
    }
    unsigned degree_bound() const noexcept
    {
        return bound_;
    }
    const Terms &terms() const noexcept
    {
        return terms_;
    }
    bool is_zero() const noexcept
    {
        return terms_.empty();
    }

    BigRational coefficient(const Exponent &e) const
    {
        check_shape(e);
        auto it = terms_.find(e);
        return it == terms_.end() ? BigRational(0) : it->second;
    }

    BigRational constant_term() const
    {
        return coefficient(Exponent(vars_, 0));
    }

    /// Stores c at e; terms beyond the degree bound are dropped.
    void set(Exponent e, const BigRational &c)
    {
        check_shape(e);
        if (total_degree(e) > bound_) {
            return;
        }
        if (c == 0) {
            terms_.erase(e);
        } else {
            terms_[std::move(e)] = c;
        }
    }

    void add_to(const Exponent &e, const BigRational &c)
    {
        if (c == 0 || total_degree(e) > bound_) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) {
                terms_.erase(it);
            }
        }
    }

    /// Homogeneous component of total degree d.
    TruncatedSeries homogeneous(unsigned d) const
    {
        TruncatedSeries out(vars_, bound_);
        for (const auto &[e, c] : terms_) {
            if (total_degree(e) == d) {
                out.terms_.emplace(e, c);
            }
        }
        return out;
    }

    TruncatedSeries truncated(unsigned new_bound) const
    {
        if (new_bound > bound_) {
            throw std::invalid_argument("cannot raise a truncation bound");
        }
        TruncatedSeries out(vars_, new_bound);
        for (const auto &[e, c] : terms_) {
            if (total_degree(e) <= new_bound) {
                out.terms_.emplace(e, c);
            }
        }
        return out;
    }

    /// s(z_1^2, ..., z_r^2), truncated at the same bound.
    TruncatedSeries square_variables() const
    {
        TruncatedSeries out(vars_, bound_);
        for (const auto &[e, c] : terms_) {
            Exponent doubled(e);
            for (unsigned &x : doubled) {
                x *= 2;
            }
            out.set(std::move(doubled), c);
        }
        return out;
    }

    TruncatedSeries &operator+=(const TruncatedSeries &o)
    {
        check_compatible(o);
        for (const auto &[e, c] : o.terms_) {
            add_to(e, c);
        }
        return *this;
    }

    TruncatedSeries &operator-=(const TruncatedSeries &o)
    {
        check_compatible(o);
        for (const auto &[e, c] : o.terms_) {
            add_to(e, -c);
        }
        return *this;
    }

    TruncatedSeries &operator*=(const BigRational &k)
    {
        if (k == 0) {
            terms_.clear();
            return *this;
        }
        for (auto &[e, c] : terms_) {
            c *= k;
        }
        return *this;
    }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries &b)
    {
        a += b;
        return a;
    }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries &b)
    {
        a -= b;
        return a;
    }
    friend TruncatedSeries operator-(TruncatedSeries a)
    {
        a *= BigRational(-1);
        return a;
    }
    friend TruncatedSeries operator*(TruncatedSeries a, const BigRational &k)
    {
        a *= k;
        return a;
    }
    friend TruncatedSeries operator*(const BigRational &k, TruncatedSeries a)
    {
        a *= k;
        return a;
    }

    friend TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b)
    {
        a.check_compatible(b);
        TruncatedSeries out(a.vars_, a.bound_);
        Exponent e(a.vars_);
        for (const auto &[ea, ca] : a.terms_) {
            const unsigned da = total_degree(ea);
            for (const auto &[eb, cb] : b.terms_) {
                if (da + total_degree(eb) > a.bound_) {
                    continue;
                }
                for (unsigned i = 0; i < a.vars_; ++i) {
                    e[i] = ea[i] + eb[i];
                }
                out.add_to(e, ca * cb);
            }
        }
        return out;
    }

    TruncatedSeries &operator*=(const TruncatedSeries &o)
    {
        *this = *this * o;
        return *this;
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    TruncatedSeries inverse() const
    {
        const BigRational c0 = constant_term();
        if (c0 == 0) {
            throw std::domain_error("series inverse needs a nonzero constant term");
        }
        std::vector<TruncatedSeries> self_layers = layers();
        std::vector<TruncatedSeries> inv_layers;
        inv_layers.push_back(constant(vars_, bound_, 1 / c0));
        for (unsigned n = 1; n <= bound_; ++n) {
            TruncatedSeries acc(vars_, bound_);
            for (unsigned j = 1; j <= n; ++j) {
                acc += self_layers[j] * inv_layers[n - j];
            }
            acc *= BigRational(-1) / c0;
            inv_layers.push_back(std::move(acc));
        }
        return join(inv_layers);
    }

    /// Integer power; negative powers go through inverse().
    TruncatedSeries pow(long long n) const
    {
        if (n < 0) {
            return inverse().pow(-n);
        }
        TruncatedSeries result = one(vars_, bound_);
        TruncatedSeries base = *this;
        while (n > 0) {
            if (n & 1) {
                result *= base;
            }
            n >>= 1;
            if (n > 0) {
                base *= base;
            }
        }
        return result;
    }

    /// Homogeneous parts 0..bound.
    std::vector<TruncatedSeries> layers() const
    {
        std::vector<TruncatedSeries> out(bound_ + 1, TruncatedSeries(vars_, bound_));
        for (const auto &[e, c] : terms_) {
            out[total_degree(e)].terms_.emplace(e, c);
        }
        return out;
    }

    static TruncatedSeries join(const std::vector<TruncatedSeries> &parts)
    {
        TruncatedSeries out = parts.at(0);
        for (std::size_t i = 1; i < parts.size(); ++i) {
            out += parts[i];
        }
        return out;
    }

    friend bool operator==(const TruncatedSeries &a, const TruncatedSeries &b)
    {
        return a.vars_ == b.vars_ && a.bound_ == b.bound_ && a.terms_ == b.terms_;
    }

    std::string to_string() const
    {
        if (terms_.empty()) {
            return "0";
        }
        std::ostringstream os;
        bool first = true;
        for (const Exponent &e : graded_monomials(vars_, bound_)) {
            auto it = terms_.find(e);
            if (it == terms_.end()) {
                continue;
            }
            os << (first ? "" : " + ") << wittpaths::to_string(it->second);
            for (unsigned i = 0; i < vars_; ++i) {
                if (e[i] == 1) {
                    os << "*z" << i + 1;
                } else if (e[i] > 1) {
                    os << "*z" << i + 1 << '^' << e[i];
                }
            }
            first = false;
        }
        return os.str();
    }

private:
    void check_shape(const Exponent &e) const
    {
        if (e.size() != vars_) {
            throw std::invalid_argument("exponent vector length does not match the number of variables");
        }
    }

    void check_compatible(const TruncatedSeries &o) const
    {
        if (o.vars_ != vars_ || o.bound_ != bound_) {
            throw std::invalid_argument("series dimensions differ (variables or degree bound)");
        }
    }

    unsigned vars_;
    unsigned bound_;
    Terms terms_;
};

/// Formal exponential; the argument must have zero constant term.
/// Uses n E_n = sum_{j=1}^{n} j A_j E_{n-j} on homogeneous layers.
inline TruncatedSeries series_exp(const TruncatedSeries &a)
{
    if (a.constant_term() != 0) {
        throw std::domain_error("series_exp needs a zero constant term");
    }
    const unsigned vars = a.num_vars();
    const unsigned bound = a.degree_bound();
    std::vector<TruncatedSeries> a_layers = a.layers();
    std::vector<TruncatedSeries> e_layers;
    e_layers.push_back(TruncatedSeries::one(vars, bound));
    for (unsigned n = 1; n <= bound; ++n) {
        TruncatedSeries acc(vars, bound);
        for (unsigned j = 1; j <= n; ++j) {
            if (!a_layers[j].is_zero()) {
                acc += (a_layers[j] * e_layers[n - j]) * BigRational(j);
            }
        }
        acc *= BigRational(1, n);
        e_layers.push_back(std::move(acc));
    }
    return TruncatedSeries::join(e_layers);
}

/// Formal logarithm; the argument must have constant term 1.
/// Uses n L_n = n B_n - sum_{j=1}^{n-1} j L_j B_{n-j}.
inline TruncatedSeries series_log(const TruncatedSeries &b)
{
    if (b.constant_term() != 1) {
        throw std::domain_error("series_log needs constant term 1");
    }
    const unsigned vars = b.num_vars();
    const unsigned bound = b.degree_bound();
    std::vector<TruncatedSeries> b_layers = b.layers();
    std::vector<TruncatedSeries> l_layers(1, TruncatedSeries(vars, bound));
    for (unsigned n = 1; n <= bound; ++n) {
        TruncatedSeries acc = b_layers[n] * BigRational(n);
        for (unsigned j = 1; j < n; ++j) {
            if (!l_layers[j].is_zero()) {
                acc -= (l_layers[j] * b_layers[n - j]) * BigRational(j);
            }
        }
        acc *= BigRational(1, n);
        l_layers.push_back(std::move(acc));
    }
    return TruncatedSeries::join(l_layers);
}

/// Generalized binomial coefficient C(e, j) for rational e.
inline BigRational binomial_rational(const BigRational &e, unsigned j)
{
    BigRational out = 1;
    for (unsigned i = 0; i < j; ++i) {
        out *= (e - i);
        out /= (i + 1);
    }
    return out;
}

/// (1 + sign * z^k)^e truncated at the bound, expanded by the binomial series.
inline TruncatedSeries binomial_factor(unsigned vars, unsigned bound, const Exponent &k, int sign, const BigRational &e)
{
    const unsigned deg = total_degree(k);
    if (deg == 0) {
        throw std::invalid_argument("binomial_factor needs a nonconstant monomial");
    }
    TruncatedSeries out = TruncatedSeries::one(vars, bound);
    Exponent power(vars, 0);
    for (unsigned j = 1; j * deg <= bound; ++j) {
        for (unsigned i = 0; i < vars; ++i) {
            power[i] = j * k[i];
        }
        BigRational c = binomial_rational(e, j);
        if (sign < 0 && j % 2 == 1) {
            c = -c;
        }
        out.set(power, c);
    }
    return out;
}

/// Exponent attached to each factor of an infinite product, as a function of
/// the raw exponent vector (entries may be zero).
using ExponentFunction = std::function<BigRational(std::span<const unsigned>)>;

/// prod over nonzero exponent vectors k with |k| <= D of (1 + sign z^k)^{exponent(k)},
/// multiplied in ascending total degree. Factors with |k| > D cannot reach
/// degree D and are skipped.
inline TruncatedSeries product_expand(const ExponentFunction &exponent, int sign, unsigned vars, unsigned bound)
{
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("product sign must be +1 or -1");
    }
    TruncatedSeries result = TruncatedSeries::one(vars, bound);
    for (const Exponent &k : graded_monomials(vars, bound, false)) {
        BigRational e = exponent(k);
        if (e == 0) {
            continue;
        }
        result *= binomial_factor(vars, bound, k, sign, e);
    }
    return result;
}

} // namespace wittpaths

#endif
