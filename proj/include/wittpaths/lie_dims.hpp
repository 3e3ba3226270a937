#ifndef WITTPATHS_LIE_DIMS_HPP
#define WITTPATHS_LIE_DIMS_HPP

// Generator dimensions d(k) of a free graded Lie algebra whose homogeneous
// dimensions are the Moebius divisor sums of a Witt partition function W.
//
// Two independent routes to d(k):
//   dims_faa     Faa di Bruno expansion of 1 - exp(-g) over multisets of
//                componentwise-positive vectors l <= k
//   dims_series  coefficient extraction from the truncated series 1 - exp(-g)
// and the forward map witt_from_dims: W(k) = sum_{s in T(k)} (|s|-1)!/s! prod d^s.

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "numth.hpp"
#include "path_counts.hpp"
#include "series.hpp"
#include "sign_counts.hpp"

namespace wittpaths
{

enum class WittFunctionKind { F, F_PRIME, G, H, F_C };

inline std::string_view to_string(WittFunctionKind kind)
{
    switch (kind) {
        case WittFunctionKind::F:
            return "F";
        case WittFunctionKind::F_PRIME:
            return "F_PRIME";
        case WittFunctionKind::G:
            return "G";
        case WittFunctionKind::H:
            return "H";
        case WittFunctionKind::F_C:
            return "F_C";
    }
    return "?";
}

inline std::optional<WittFunctionKind> parse_witt_kind(std::string_view name)
{
    for (auto kind : {WittFunctionKind::F, WittFunctionKind::F_PRIME, WittFunctionKind::G, WittFunctionKind::H,
                      WittFunctionKind::F_C}) {
        if (to_string(kind) == name) {
            return kind;
        }
    }
    return std::nullopt;
}

/// Kinds whose generator dimensions are expected to be nonnegative integers.
inline bool has_integral_dimensions(WittFunctionKind kind)
{
    return kind == WittFunctionKind::F || kind == WittFunctionKind::G || kind == WittFunctionKind::H;
}

/// W(m) for a multidegree with at least two entries.
inline BigRational witt_partition(WittFunctionKind kind, const MultiDegree &m)
{
    switch (kind) {
        case WittFunctionKind::F:
            return witt_F(m);
        case WittFunctionKind::F_PRIME:
            return BigRational(witt_F_prime(m));
        case WittFunctionKind::G:
            return witt_G(m);
        case WittFunctionKind::H:
            return h_value(m);
        case WittFunctionKind::F_C:
            return witt_Fc(m);
    }
    throw std::invalid_argument("unknown Witt partition function");
}

/// W on a raw exponent vector: zero whenever some component is zero.
inline BigRational witt_partition_raw(WittFunctionKind kind, std::span<const unsigned> k)
{
    for (unsigned x : k) {
        if (x == 0) {
            return 0;
        }
    }
    return witt_partition(kind, MultiDegree(std::vector<unsigned>(k.begin(), k.end())));
}

/// Homogeneous Lie dimension sum_{g | k} (mu(g)/g) W(k/g).
inline BigRational lie_dimension(WittFunctionKind kind, const MultiDegree &k)
{
    return div_transform([kind](const MultiDegree &x) { return witt_partition(kind, x); }, k);
}

/// g = sum over componentwise-positive k with |k| <= D of W(k) z^k.
inline TruncatedSeries witt_generating_series(WittFunctionKind kind, unsigned vars, unsigned bound)
{
    TruncatedSeries g(vars, bound);
    for (const Exponent &k : graded_monomials(vars, bound, false)) {
        g.set(k, witt_partition_raw(kind, k));
    }
    return g;
}

namespace detail
{

// Componentwise-positive vectors l <= k, lexicographic.
inline std::vector<Exponent> positive_subvectors(const MultiDegree &k)
{
    std::vector<Exponent> out;
    Exponent l(k.size(), 1);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == k.size()) {
            out.push_back(l);
            return;
        }
        for (unsigned v = 1; v <= k[i]; ++v) {
            l[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

// Visits every multiset {l_i with multiplicity a_i} of vectors from `parts`
// summing to `target`, passing the multiplicities. Running-sum pruning keeps
// the remaining target componentwise nonnegative.
template <typename Visitor>
void for_each_vector_partition(const std::vector<Exponent> &parts, const Exponent &target, Visitor &&visit)
{
    std::vector<unsigned> mult(parts.size(), 0);
    Exponent remaining = target;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        bool done = true;
        for (unsigned x : remaining) {
            done = done && x == 0;
        }
        if (done) {
            visit(std::span<const unsigned>(mult));
            return;
        }
        if (i == parts.size()) {
            return;
        }
        // a_i = 0
        rec(i + 1);
        const Exponent &l = parts[i];
        unsigned taken = 0;
        while (true) {
            bool fits = true;
            for (std::size_t j = 0; j < l.size() && fits; ++j) {
                fits = l[j] <= remaining[j];
            }
            if (!fits) {
                break;
            }
            for (std::size_t j = 0; j < l.size(); ++j) {
                remaining[j] -= l[j];
            }
            ++taken;
            mult[i] = taken;
            rec(i + 1);
        }
        for (std::size_t j = 0; j < l.size(); ++j) {
            remaining[j] += taken * l[j];
        }
        mult[i] = 0;
    };
    rec(0);
}

} // namespace detail

/// d(k) = sum_lambda (-1)^(lambda+1) sum over multiplicities a with sum a_i = lambda,
/// sum a_i l_i = k of prod W(l_i)^(a_i) / a_i!.
inline BigRational dims_faa(WittFunctionKind kind, const MultiDegree &k)
{
    const std::vector<Exponent> parts = detail::positive_subvectors(k);
    std::vector<BigRational> w;
    w.reserve(parts.size());
    for (const Exponent &l : parts) {
        w.push_back(witt_partition(kind, MultiDegree(l)));
    }
    BigRational sum = 0;
    detail::for_each_vector_partition(parts, k.entries(), [&](std::span<const unsigned> a) {
        BigRational term = 1;
        unsigned lambda = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) {
                continue;
            }
            lambda += a[i];
            for (unsigned j = 0; j < a[i]; ++j) {
                term *= w[i];
            }
            term /= BigRational(factorial(a[i]));
        }
        if (lambda % 2 == 1) {
            sum += term;
        } else {
            sum -= term;
        }
    });
    return sum;
}

struct DimsSeriesLimits
{
    unsigned max_degree = 16;
};

/// Coefficient of z^k in 1 - exp(-g).
inline BigRational dims_series(WittFunctionKind kind, const MultiDegree &k, const DimsSeriesLimits &limits = {})
{
    const unsigned bound = k.total();
    if (bound > limits.max_degree) {
        throw ResourceLimitError("series degree " + std::to_string(bound) + " exceeds bound " +
                                 std::to_string(limits.max_degree));
    }
    const unsigned vars = static_cast<unsigned>(k.size());
    TruncatedSeries g = witt_generating_series(kind, vars, bound);
    TruncatedSeries f = TruncatedSeries::one(vars, bound) - series_exp(-g);
    return f.coefficient(k.entries());
}

/// Forward map from generator dimensions to the Witt partition value:
/// sum over multisets s of componentwise-positive vectors with weighted sum k
/// of (|s|-1)!/s! prod d(i)^(s_i).
inline BigRational witt_from_dims(const MultiDegreeFunction &d, const MultiDegree &k)
{
    const std::vector<Exponent> parts = detail::positive_subvectors(k);
    std::vector<BigRational> dv;
    dv.reserve(parts.size());
    for (const Exponent &l : parts) {
        dv.push_back(d(MultiDegree(l)));
    }
    BigRational sum = 0;
    detail::for_each_vector_partition(parts, k.entries(), [&](std::span<const unsigned> s) {
        unsigned size = 0;
        BigRational term = 1;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == 0) {
                continue;
            }
            size += s[i];
            for (unsigned j = 0; j < s[i]; ++j) {
                term *= dv[i];
            }
            term /= BigRational(factorial(s[i]));
        }
        sum += term * BigRational(factorial(size - 1));
    });
    return sum;
}

} // namespace wittpaths

#endif
