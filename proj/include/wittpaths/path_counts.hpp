#ifndef WITTPATHS_PATH_COUNTS_HPP
#define WITTPATHS_PATH_COUNTS_HPP

// Unsigned closed-path counters on a bouquet of r loops.
//
// F(m)   sum over cyclic edge sequences of length a of (2^a / a) times the
//        number of ways to split each m_c into t_c positive exponents
// theta  Moebius-weighted divisor sum of F: the number of rotation classes
//        of closed nonperiodic non-backtracking paths with multidegree m
// F_c    F without the 2^a sign factor (counterclockwise paths only)
// M      the classical multivariate Witt formula

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "memo.hpp"
#include "numth.hpp"

namespace wittpaths
{

/// Cyclic sequence (j_1, ..., j_a) of edge indices in 1..r with j_k != j_{k+1}
/// and j_a != j_1. The sequence need not use every index.
class CyclicSequence
{
public:
    explicit CyclicSequence(std::vector<unsigned> symbols) : symbols_(std::move(symbols))
    {
        if (symbols_.size() < 2) {
            throw std::invalid_argument("cyclic sequence needs at least two symbols");
        }
        for (std::size_t k = 0; k < symbols_.size(); ++k) {
            if (symbols_[k] == 0) {
                throw std::invalid_argument("edge indices start at 1");
            }
            if (symbols_[k] == symbols_[(k + 1) % symbols_.size()]) {
                throw std::invalid_argument("cyclically adjacent symbols must differ");
            }
        }
    }

    const std::vector<unsigned> &symbols() const noexcept
    {
        return symbols_;
    }
    std::size_t length() const noexcept
    {
        return symbols_.size();
    }

    /// t_i: how many times edge i (1-based) occurs, for i in 1..r.
    std::vector<unsigned> multiplicities(unsigned r) const
    {
        std::vector<unsigned> t(r, 0);
        for (unsigned j : symbols_) {
            if (j > r) {
                throw std::out_of_range("edge index exceeds alphabet size");
            }
            ++t[j - 1];
        }
        return t;
    }

    friend bool operator==(const CyclicSequence &, const CyclicSequence &) = default;

private:
    std::vector<unsigned> symbols_;
};

/// Visits every cyclic sequence of length a over {1..r} in lexicographic order.
template <typename Visitor>
void for_each_cyclic_sequence(unsigned r, unsigned a, Visitor &&visit)
{
    if (a < 2 || r < 2) {
        return;
    }
    std::vector<unsigned> seq(a, 0);
    std::function<void(unsigned)> rec = [&](unsigned pos) {
        for (unsigned s = 1; s <= r; ++s) {
            if (pos > 0 && seq[pos - 1] == s) {
                continue;
            }
            if (pos + 1 == a && seq[0] == s) {
                continue;
            }
            seq[pos] = s;
            if (pos + 1 == a) {
                visit(std::span<const unsigned>(seq));
            } else {
                rec(pos + 1);
            }
        }
    };
    rec(0);
}

inline std::vector<CyclicSequence> cyclic_sequences(unsigned r, unsigned a)
{
    std::vector<CyclicSequence> out;
    for_each_cyclic_sequence(r, a, [&](std::span<const unsigned> s) {
        out.emplace_back(std::vector<unsigned>(s.begin(), s.end()));
    });
    return out;
}

namespace detail
{

using Profile = std::vector<unsigned>;
using ProfileCounts = std::map<Profile, BigInt>;

// Number of cyclic sequences of length a over {1..r}, grouped by their
// multiplicity vector t. Memoized per (r, a).
inline const ProfileCounts &cyclic_profile_counts(unsigned r, unsigned a)
{
    static MemoTable<std::pair<unsigned, unsigned>, std::shared_ptr<const ProfileCounts>> memo;
    auto ptr = memo.get_or_compute({r, a}, [&] {
        auto counts = std::make_shared<ProfileCounts>();
        std::vector<unsigned> t(r);
        for_each_cyclic_sequence(r, a, [&](std::span<const unsigned> s) {
            std::fill(t.begin(), t.end(), 0u);
            for (unsigned j : s) {
                ++t[j - 1];
            }
            (*counts)[t] += 1;
        });
        return std::shared_ptr<const ProfileCounts>(std::move(counts));
    });
    return *ptr;
}

// sum_{a=2}^{N} (weight(a)/a) sum_{S_a} prod_c C(m_c - 1, t_c - 1).
// Sequences missing an edge contribute zero through the binomial convention.
inline BigRational sequence_sum(const MultiDegree &m, const std::function<BigInt(unsigned)> &weight)
{
    const unsigned r = static_cast<unsigned>(m.size());
    const unsigned n = m.total();
    BigRational sum = 0;
    for (unsigned a = 2; a <= n; ++a) {
        BigInt inner = 0;
        for (const auto &[t, count] : cyclic_profile_counts(r, a)) {
            BigInt prod = count;
            for (unsigned c = 0; c < r && prod != 0; ++c) {
                prod *= binomial_conv(static_cast<long long>(m[c]) - 1, static_cast<long long>(t[c]) - 1);
            }
            inner += prod;
        }
        if (inner != 0) {
            sum += make_rational(weight(a) * inner, a);
        }
    }
    return sum;
}

inline void require_two_edges(const MultiDegree &m, const char *what)
{
    if (m.size() < 2) {
        throw std::invalid_argument(std::string(what) + " requires at least two nonzero entries");
    }
}

} // namespace detail

/// rw(a) = sum_{j=1}^{r} (-1)^(r+j) C(r,j) (j-1)^a + (-1)^(a+r): the number of
/// cyclic sequences of length a using all r symbols.
inline BigInt rw_count(unsigned r, unsigned a)
{
    if (r < 2 || a < 2) {
        throw std::invalid_argument("rw_count requires r >= 2 and a >= 2");
    }
    BigInt sum = 0;
    for (unsigned j = 1; j <= r; ++j) {
        BigInt term = binomial_conv(r, j) * ipow(BigInt(j - 1), a);
        sum += ((r + j) % 2 == 0) ? term : BigInt(-term);
    }
    sum += ((a + r) % 2 == 0) ? 1 : -1;
    return sum;
}

/// F(m) evaluated by enumerating cyclic sequences, for any r >= 2.
inline BigRational witt_F_by_sequences(const MultiDegree &m)
{
    detail::require_two_edges(m, "witt_F");
    return detail::sequence_sum(m, [](unsigned a) { return ipow(BigInt(2), a); });
}

/// The Witt partition function F. For r = 2 only alternating sequences exist
/// and the double-binomial form sum_a (4^a / a) C(m1-1,a-1) C(m2-1,a-1) is used.
inline BigRational witt_F(const MultiDegree &m)
{
    detail::require_two_edges(m, "witt_F");
    static detail::MemoTable<MultiDegree, BigRational> memo;
    const MultiDegree key = m.sorted();
    return memo.get_or_compute(key, [&] {
        if (key.size() == 2) {
            BigRational sum = 0;
            const unsigned top = std::min(key[0], key[1]);
            for (unsigned a = 1; a <= top; ++a) {
                BigInt b = binomial_conv(key[0] - 1, a - 1) * binomial_conv(key[1] - 1, a - 1);
                sum += make_rational(ipow(BigInt(4), a) * b, a);
            }
            return sum;
        }
        return witt_F_by_sequences(key);
    });
}

/// F'(m) = N * F(m): the number of letter-level words with multidegree m.
inline BigInt witt_F_prime(const MultiDegree &m)
{
    BigInt value = require_integer(BigRational(m.total()) * witt_F(m), "N*F" + to_string(m));
    if (value <= 0) {
        throw IntegralityError("N*F" + to_string(m) + " is not positive");
    }
    return value;
}

/// Number of rotation classes of closed nonperiodic non-backtracking paths.
/// A single edge is nonperiodic only when traversed once, in either direction.
inline BigInt theta(const MultiDegree &m)
{
    if (m.size() == 1) {
        return m[0] == 1 ? 2 : 0;
    }
    static detail::MemoTable<MultiDegree, BigInt> memo;
    return memo.get_or_compute(m.sorted(), [&] {
        BigRational value = div_transform([](const MultiDegree &x) { return witt_F(x); }, m);
        return require_nonnegative_integer(value, "theta" + to_string(m));
    });
}

/// F_c by the sequence sum with unit weights (r = 2 uses the single-binomial form).
inline BigRational witt_Fc(const MultiDegree &m)
{
    detail::require_two_edges(m, "witt_Fc");
    static detail::MemoTable<MultiDegree, BigRational> memo;
    const MultiDegree key = m.sorted();
    return memo.get_or_compute(key, [&] {
        if (key.size() == 2) {
            BigRational sum = 0;
            const unsigned top = std::min(key[0], key[1]);
            for (unsigned a = 1; a <= top; ++a) {
                sum += make_rational(binomial_conv(key[0] - 1, a - 1) * binomial_conv(key[1] - 1, a - 1), a);
            }
            return sum;
        }
        return detail::sequence_sum(key, [](unsigned) { return BigInt(1); });
    });
}

/// (1/N) N! / (m_1! ... m_r!): the closed form F_c must match.
inline BigRational witt_Fc_closed(const MultiDegree &m)
{
    const unsigned n = m.total();
    BigInt den = n;
    for (unsigned e : m) {
        den *= factorial(e);
    }
    return make_rational(factorial(n), den);
}

/// Classical Witt formula: nonperiodic necklaces with m_i beads of colour i.
inline BigInt witt_M(const MultiDegree &m)
{
    BigRational value = div_transform([](const MultiDegree &x) { return witt_Fc_closed(x); }, m);
    return require_nonnegative_integer(value, "M" + to_string(m));
}

} // namespace wittpaths

#endif
