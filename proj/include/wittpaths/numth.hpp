#ifndef WITTPATHS_NUMTH_HPP
#define WITTPATHS_NUMTH_HPP

// Number-theoretic and combinatorial primitives shared by every counter:
// exact integers/rationals, multidegrees, Moebius function, divisor lattices,
// binomials that vanish outside Pascal's triangle, Stirling numbers of the
// second kind, compositions and the divisor-sum transform pair.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace wittpaths
{

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Raised when a quantity that must be integral (or nonnegative) is not.
/// Always indicates a bug in a counter, never bad user input.
class IntegralityError : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

/// Raised when two independent routes to the same number disagree.
class ConsistencyError : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

/// Raised when an enumeration or series request exceeds its configured bound.
class ResourceLimitError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

inline std::string to_string(const BigInt &value)
{
    return value.get_str();
}

/// Lowest-terms rendering: "p/q", or "p" when the denominator is 1.
inline std::string to_string(const BigRational &value)
{
    if (value.get_den() == 1) {
        return value.get_num().get_str();
    }
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

inline BigRational make_rational(const BigInt &num, const BigInt &den)
{
    if (den == 0) {
        throw std::domain_error("zero denominator");
    }
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

/// Returns the numerator of `value` after checking that it is an integer.
inline BigInt require_integer(const BigRational &value, const std::string &what)
{
    if (value.get_den() != 1) {
        throw IntegralityError(what + " is not integral: " + to_string(value));
    }
    return value.get_num();
}

inline BigInt require_nonnegative_integer(const BigRational &value, const std::string &what)
{
    BigInt n = require_integer(value, what);
    if (n < 0) {
        throw IntegralityError(what + " is negative: " + to_string(value));
    }
    return n;
}

/// Vector of strictly positive edge multiplicities (m_1, ..., m_r).
class MultiDegree
{
public:
    using value_type = unsigned;

    MultiDegree(std::vector<unsigned> entries) : entries_(std::move(entries))
    {
        if (entries_.empty()) {
            throw std::invalid_argument("multidegree must have at least one entry");
        }
        for (unsigned e : entries_) {
            if (e == 0) {
                throw std::invalid_argument("multidegree entries must be positive");
            }
        }
    }

    MultiDegree(std::initializer_list<unsigned> entries) : MultiDegree(std::vector<unsigned>(entries)) {}

    /// Builds a multidegree from a raw exponent vector, dropping zero entries.
    /// Throws when every entry is zero.
    static MultiDegree strip_zeros(std::span<const unsigned> raw)
    {
        std::vector<unsigned> kept;
        for (unsigned e : raw) {
            if (e != 0) {
                kept.push_back(e);
            }
        }
        return MultiDegree(std::move(kept));
    }

    std::size_t size() const noexcept
    {
        return entries_.size();
    }
    unsigned operator[](std::size_t i) const
    {
        return entries_[i];
    }
    const std::vector<unsigned> &entries() const noexcept
    {
        return entries_;
    }
    auto begin() const noexcept
    {
        return entries_.begin();
    }
    auto end() const noexcept
    {
        return entries_.end();
    }

    unsigned total() const noexcept
    {
        return std::accumulate(entries_.begin(), entries_.end(), 0u);
    }

    unsigned gcd() const noexcept
    {
        unsigned g = 0;
        for (unsigned e : entries_) {
            g = std::gcd(g, e);
        }
        return g;
    }

    bool all_even() const noexcept
    {
        return std::all_of(entries_.begin(), entries_.end(), [](unsigned e) { return e % 2 == 0; });
    }
    bool all_odd() const noexcept
    {
        return std::all_of(entries_.begin(), entries_.end(), [](unsigned e) { return e % 2 == 1; });
    }

    /// Entrywise division; `d` must divide every entry.
    MultiDegree divided_by(unsigned d) const
    {
        std::vector<unsigned> out(entries_);
        for (unsigned &e : out) {
            if (d == 0 || e % d != 0) {
                throw std::invalid_argument("divisor does not divide every entry");
            }
            e /= d;
        }
        return MultiDegree(std::move(out));
    }

    /// Entries in ascending order; the cache key for symmetric counters.
    MultiDegree sorted() const
    {
        std::vector<unsigned> out(entries_);
        std::sort(out.begin(), out.end());
        return MultiDegree(std::move(out));
    }

    friend bool operator==(const MultiDegree &, const MultiDegree &) = default;
    friend auto operator<=>(const MultiDegree &, const MultiDegree &) = default;

    friend std::ostream &operator<<(std::ostream &os, const MultiDegree &m)
    {
        os << '(';
        for (std::size_t i = 0; i < m.size(); ++i) {
            os << (i ? "," : "") << m[i];
        }
        return os << ')';
    }

private:
    std::vector<unsigned> entries_;
};

inline std::string to_string(const MultiDegree &m)
{
    std::ostringstream os;
    os << m;
    return os.str();
}

/// Moebius function by trial division.
inline int moebius(long long g)
{
    if (g <= 0) {
        throw std::invalid_argument("moebius: argument must be positive");
    }
    int sign = 1;
    for (long long p = 2; p * p <= g; ++p) {
        if (g % p == 0) {
            g /= p;
            if (g % p == 0) {
                return 0;
            }
            sign = -sign;
        }
    }
    if (g > 1) {
        sign = -sign;
    }
    return sign;
}

/// Ascending divisors of n.
inline std::vector<unsigned> divisors(unsigned n)
{
    if (n == 0) {
        throw std::invalid_argument("divisors: argument must be positive");
    }
    std::vector<unsigned> out;
    for (unsigned d = 1; d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
        }
    }
    return out;
}

/// Positive integers dividing every entry of m, ascending; always starts with 1.
inline std::vector<unsigned> common_divisors(const MultiDegree &m)
{
    return divisors(m.gcd());
}

/// Binomial coefficient extended by zero: C(n,k) = 0 unless 0 <= k <= n.
inline BigInt binomial_conv(long long n, long long k)
{
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

inline BigInt factorial(unsigned n)
{
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

inline BigInt ipow(const BigInt &base, unsigned exp)
{
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

/// Stirling number of the second kind via the alternating sum
/// S(n,r) = (1/r!) sum_j (-1)^(r+j) C(r,j) j^n.
inline BigInt stirling2(unsigned n, unsigned r)
{
    if (n == 0 || r == 0) {
        throw std::invalid_argument("stirling2: arguments must be positive");
    }
    if (r > n) {
        return 0;
    }
    BigInt sum = 0;
    for (unsigned j = 0; j <= r; ++j) {
        BigInt term = binomial_conv(r, j) * ipow(BigInt(j), n);
        if ((r + j) % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    BigInt rf = factorial(r);
    if (sum % rf != 0) {
        throw IntegralityError("stirling2: alternating sum not divisible by r!");
    }
    return sum / rf;
}

/// Calls `visit(parts)` for every composition of `total` into `parts` positive
/// summands, in lexicographic order. Nothing is visited when total < parts.
template <typename Visitor>
void for_each_composition(unsigned total, unsigned parts, Visitor &&visit)
{
    if (parts == 0 || total < parts) {
        return;
    }
    std::vector<unsigned> current(parts, 1);
    std::function<void(unsigned, unsigned)> rec = [&](unsigned index, unsigned remaining) {
        if (index + 1 == parts) {
            current[index] = remaining;
            visit(std::span<const unsigned>(current));
            return;
        }
        unsigned slots_after = parts - index - 1;
        for (unsigned v = 1; v + slots_after <= remaining; ++v) {
            current[index] = v;
            rec(index + 1, remaining - v);
        }
    };
    rec(0, total);
}

inline std::vector<std::vector<unsigned>> compositions(unsigned total, unsigned parts)
{
    std::vector<std::vector<unsigned>> out;
    for_each_composition(total, parts, [&](std::span<const unsigned> c) { out.emplace_back(c.begin(), c.end()); });
    return out;
}

using MultiDegreeFunction = std::function<BigRational(const MultiDegree &)>;

/// g(m) = sum over common divisors d of (mu(d)/d) f(m/d).
inline BigRational div_transform(const MultiDegreeFunction &f, const MultiDegree &m)
{
    BigRational sum = 0;
    for (unsigned d : common_divisors(m)) {
        int mu = moebius(d);
        if (mu != 0) {
            sum += BigRational(mu, d) * f(m.divided_by(d));
        }
    }
    return sum;
}

/// Inverse of div_transform: f(m) = sum over common divisors d of (1/d) g(m/d).
inline BigRational div_inverse(const MultiDegreeFunction &g, const MultiDegree &m)
{
    BigRational sum = 0;
    for (unsigned d : common_divisors(m)) {
        sum += BigRational(1, d) * g(m.divided_by(d));
    }
    return sum;
}

} // namespace wittpaths

#endif
