#ifndef WITTPATHS_SIGN_COUNTS_HPP
#define WITTPATHS_SIGN_COUNTS_HPP

// Path classes split by sign: theta = theta_plus + theta_minus.
//
// G = F/2. For all-even s, P(s) is the even-divisor part of the G divisor sum
// and H(s) = G(s) - sum_{k | s} P(s/k)/k; otherwise P = 0 and H = G.
// theta_plus is the Moebius divisor sum of H, which must agree with the
// odd-divisor divisor sum of G.

#include <string>

#include "memo.hpp"
#include "numth.hpp"
#include "path_counts.hpp"

namespace wittpaths
{

inline BigRational witt_G(const MultiDegree &m)
{
    return witt_F(m) / 2;
}

inline BigRational p_value(const MultiDegree &m)
{
    detail::require_two_edges(m, "p_value");
    if (!m.all_even()) {
        return 0;
    }
    BigRational sum = 0;
    for (unsigned g : common_divisors(m)) {
        // mu vanishes on multiples of 4, so only g = 2 * odd contributes.
        if (g % 2 == 0) {
            int mu = moebius(g);
            if (mu != 0) {
                sum += BigRational(mu, g) * witt_G(m.divided_by(g));
            }
        }
    }
    return sum;
}

inline BigRational h_value(const MultiDegree &m)
{
    detail::require_two_edges(m, "h_value");
    static detail::MemoTable<MultiDegree, BigRational> memo;
    return memo.get_or_compute(m.sorted(), [&] {
        BigRational value = witt_G(m);
        if (m.all_even()) {
            for (unsigned k : common_divisors(m)) {
                value -= BigRational(1, k) * p_value(m.divided_by(k));
            }
        }
        return value;
    });
}

/// sum over odd common divisors g of (mu(g)/g) G(m/g).
inline BigRational theta_plus_odd_divisor_sum(const MultiDegree &m)
{
    detail::require_two_edges(m, "theta_plus");
    BigRational sum = 0;
    for (unsigned g : common_divisors(m)) {
        if (g % 2 == 1) {
            sum += BigRational(moebius(g), g) * witt_G(m.divided_by(g));
        }
    }
    return sum;
}

/// sum over all common divisors g of (mu(g)/g) H(m/g).
inline BigRational theta_plus_h_divisor_sum(const MultiDegree &m)
{
    detail::require_two_edges(m, "theta_plus");
    return div_transform([](const MultiDegree &x) { return h_value(x); }, m);
}

/// Positive-sign path classes. A single edge traversed once splits as (2, 0):
/// both orientations count as positive.
inline BigInt theta_plus(const MultiDegree &m)
{
    if (m.size() == 1) {
        return m[0] == 1 ? 2 : 0;
    }
    static detail::MemoTable<MultiDegree, BigInt> memo;
    return memo.get_or_compute(m.sorted(), [&] {
        BigRational via_h = theta_plus_h_divisor_sum(m);
        BigRational via_odd = theta_plus_odd_divisor_sum(m);
        if (via_h != via_odd) {
            throw ConsistencyError("theta_plus" + to_string(m) + ": H divisor sum " + to_string(via_h) +
                                   " != odd-divisor G sum " + to_string(via_odd));
        }
        return require_nonnegative_integer(via_h, "theta_plus" + to_string(m));
    });
}

/// True when N < 2r, the entries are coprime, of mixed parity, or all odd;
/// in each case the two signs split evenly.
inline bool has_even_sign_split(const MultiDegree &m)
{
    const bool small = m.total() < 2 * m.size();
    const bool coprime = m.gcd() == 1;
    const bool mixed = !m.all_even() && !m.all_odd();
    return small || coprime || mixed || m.all_odd();
}

/// theta_plus(m) - theta_plus(m/2); defined for all-even m only.
inline BigInt theta_minus_by_halving(const MultiDegree &m)
{
    if (!m.all_even()) {
        throw std::invalid_argument("theta_minus_by_halving needs all-even entries");
    }
    return theta_plus(m) - theta_plus(m.divided_by(2));
}

/// Negative-sign path classes, defined as theta - theta_plus and cross-checked
/// against the even-split and halving relations where they apply.
inline BigInt theta_minus(const MultiDegree &m)
{
    if (m.size() == 1) {
        return 0;
    }
    BigInt plus = theta_plus(m);
    BigInt minus = theta(m) - plus;
    if (minus < 0) {
        throw IntegralityError("theta_minus" + to_string(m) + " is negative");
    }
    if (has_even_sign_split(m) && minus != plus) {
        throw ConsistencyError("theta_minus" + to_string(m) + " = " + to_string(minus) +
                               " but theta_plus = " + to_string(plus));
    }
    if (m.all_even()) {
        BigInt halved = theta_minus_by_halving(m);
        if (halved != minus) {
            throw ConsistencyError("theta_minus" + to_string(m) + " = " + to_string(minus) +
                                   " but halving relation gives " + to_string(halved));
        }
    }
    return minus;
}

} // namespace wittpaths

#endif
