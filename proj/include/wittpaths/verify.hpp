#ifndef WITTPATHS_VERIFY_HPP
#define WITTPATHS_VERIFY_HPP

// Coefficientwise checks of the product identities, each truncated at total
// degree D:
//
//   sherman         prod_{m != 0} (1+z^m)^{N+(m)} (1-z^m)^{N-(m)} = prod_j (1+z_j)^2
//   cancellation    prod_{m > 0} (1+z^m)^{theta+} (1-z^m)^{theta-} = 1
//   plus-minus      prod (1+z^m)^{theta+} = exp(g(z) - g(z^2)),
//                   prod (1-z^m)^{theta-} = exp(g(z^2) - g(z)),  g built from H
//   gen-witt        prod (1-z^k)^{dim L(k)} = exp(-g) = 1 - f
//   witt-classical  prod_{m != 0} (1-z^m)^{M(m)} = 1 - sum_i z_i
//
// A failed check is a report, never an exception. A Corruption perturbs one
// exponent so tests can confirm that the verifiers notice.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lie_dims.hpp"
#include "numth.hpp"
#include "path_counts.hpp"
#include "series.hpp"
#include "sign_counts.hpp"

namespace wittpaths
{

struct Mismatch
{
    Exponent exponent;
    BigRational lhs;
    BigRational rhs;
};

struct VerificationReport
{
    std::string identity;
    unsigned num_vars = 0;
    unsigned degree_bound = 0;
    bool passed = true;
    std::optional<Mismatch> first_mismatch;
    /// Set when a check other than the coefficient comparison failed.
    std::string note;
};

/// Which exponent family a corruption applies to. Primary is theta+ (or
/// N+) for the signed products, dim L for gen-witt and M for witt-classical;
/// Secondary is theta- (or N-).
enum class CorruptionTarget { Primary, Secondary };

struct Corruption
{
    Exponent at;
    int delta = 1;
    CorruptionTarget target = CorruptionTarget::Primary;
};

namespace detail
{

inline bool is_positive(std::span<const unsigned> k)
{
    for (unsigned x : k) {
        if (x == 0) {
            return false;
        }
    }
    return true;
}

inline BigRational corrupted(const BigRational &value, std::span<const unsigned> k,
                             const std::optional<Corruption> &corruption, CorruptionTarget target)
{
    if (corruption && corruption->target == target && std::equal(k.begin(), k.end(), corruption->at.begin(),
                                                                 corruption->at.end())) {
        return value + corruption->delta;
    }
    return value;
}

inline void check_dimensions(unsigned vars, unsigned bound)
{
    if (vars < 2) {
        throw std::invalid_argument("identity checks need at least two variables");
    }
    if (bound < 1) {
        throw std::invalid_argument("degree bound must be at least 1");
    }
}

inline void check_corruption_shape(const std::optional<Corruption> &corruption, unsigned vars)
{
    if (corruption && corruption->at.size() != vars) {
        throw std::invalid_argument("corruption exponent has the wrong number of entries");
    }
}

} // namespace detail

/// Compares two series in graded order and records the first difference.
inline VerificationReport compare_series(std::string identity, const TruncatedSeries &lhs, const TruncatedSeries &rhs)
{
    VerificationReport report;
    report.identity = std::move(identity);
    report.num_vars = lhs.num_vars();
    report.degree_bound = lhs.degree_bound();
    for (const Exponent &e : graded_monomials(lhs.num_vars(), lhs.degree_bound())) {
        BigRational a = lhs.coefficient(e);
        BigRational b = rhs.coefficient(e);
        if (a != b) {
            report.passed = false;
            report.first_mismatch = Mismatch{e, a, b};
            break;
        }
    }
    return report;
}

/// N+ and N- on a raw exponent vector: zeros are stripped; a single edge
/// traversed once contributes (2, 0).
inline BigRational sherman_plus(std::span<const unsigned> k)
{
    return BigRational(theta_plus(MultiDegree::strip_zeros(k)));
}

inline BigRational sherman_minus(std::span<const unsigned> k)
{
    return BigRational(theta_minus(MultiDegree::strip_zeros(k)));
}

inline VerificationReport verify_sherman(unsigned loops, unsigned bound, const std::optional<Corruption> &corruption = {})
{
    detail::check_dimensions(loops, bound);
    detail::check_corruption_shape(corruption, loops);
    auto plus = [&](std::span<const unsigned> k) {
        return detail::corrupted(sherman_plus(k), k, corruption, CorruptionTarget::Primary);
    };
    auto minus = [&](std::span<const unsigned> k) {
        return detail::corrupted(sherman_minus(k), k, corruption, CorruptionTarget::Secondary);
    };
    TruncatedSeries lhs = product_expand(plus, +1, loops, bound) * product_expand(minus, -1, loops, bound);
    TruncatedSeries rhs = TruncatedSeries::one(loops, bound);
    for (unsigned j = 0; j < loops; ++j) {
        Exponent e(loops, 0);
        e[j] = 1;
        rhs *= binomial_factor(loops, bound, e, +1, 2);
    }
    return compare_series("sherman", lhs, rhs);
}

inline VerificationReport verify_cancellation(unsigned vars, unsigned bound, const std::optional<Corruption> &corruption = {})
{
    detail::check_dimensions(vars, bound);
    detail::check_corruption_shape(corruption, vars);
    auto plus = [&](std::span<const unsigned> k) -> BigRational {
        BigRational v = detail::is_positive(k) ? BigRational(theta_plus(MultiDegree::strip_zeros(k))) : BigRational(0);
        return detail::corrupted(v, k, corruption, CorruptionTarget::Primary);
    };
    auto minus = [&](std::span<const unsigned> k) -> BigRational {
        BigRational v = detail::is_positive(k) ? BigRational(theta_minus(MultiDegree::strip_zeros(k))) : BigRational(0);
        return detail::corrupted(v, k, corruption, CorruptionTarget::Secondary);
    };
    TruncatedSeries lhs = product_expand(plus, +1, vars, bound) * product_expand(minus, -1, vars, bound);
    return compare_series("cancellation", lhs, TruncatedSeries::one(vars, bound));
}

struct PlusMinusReports
{
    VerificationReport plus;
    VerificationReport minus;

    bool passed() const noexcept
    {
        return plus.passed && minus.passed;
    }
};

inline PlusMinusReports verify_plus_minus_products(unsigned vars, unsigned bound,
                                                   const std::optional<Corruption> &corruption = {})
{
    detail::check_dimensions(vars, bound);
    detail::check_corruption_shape(corruption, vars);
    auto plus = [&](std::span<const unsigned> k) -> BigRational {
        BigRational v = detail::is_positive(k) ? BigRational(theta_plus(MultiDegree::strip_zeros(k))) : BigRational(0);
        return detail::corrupted(v, k, corruption, CorruptionTarget::Primary);
    };
    auto minus = [&](std::span<const unsigned> k) -> BigRational {
        BigRational v = detail::is_positive(k) ? BigRational(theta_minus(MultiDegree::strip_zeros(k))) : BigRational(0);
        return detail::corrupted(v, k, corruption, CorruptionTarget::Secondary);
    };
    const TruncatedSeries g = witt_generating_series(WittFunctionKind::H, vars, bound);
    const TruncatedSeries g2 = g.square_variables();
    PlusMinusReports reports{
        compare_series("plus-product", product_expand(plus, +1, vars, bound), series_exp(g - g2)),
        compare_series("minus-product", product_expand(minus, -1, vars, bound), series_exp(g2 - g)),
    };
    return reports;
}

inline VerificationReport verify_gen_witt(WittFunctionKind kind, unsigned vars, unsigned bound,
                                          const std::optional<Corruption> &corruption = {})
{
    detail::check_dimensions(vars, bound);
    detail::check_corruption_shape(corruption, vars);
    auto dim = [&](std::span<const unsigned> k) -> BigRational {
        BigRational v = detail::is_positive(k) ? lie_dimension(kind, MultiDegree::strip_zeros(k)) : BigRational(0);
        return detail::corrupted(v, k, corruption, CorruptionTarget::Primary);
    };
    const TruncatedSeries g = witt_generating_series(kind, vars, bound);
    const TruncatedSeries one_minus_f = series_exp(-g);
    VerificationReport report =
        compare_series(std::string("gen-witt-") + std::string(to_string(kind)), product_expand(dim, -1, vars, bound),
                       one_minus_f);
    if (report.passed && has_integral_dimensions(kind)) {
        const TruncatedSeries f = TruncatedSeries::one(vars, bound) - one_minus_f;
        for (const Exponent &k : graded_monomials(vars, bound, false)) {
            BigRational d = f.coefficient(k);
            if (d < 0 || d.get_den() != 1) {
                report.passed = false;
                report.note = "generator dimension d" + to_string(MultiDegree::strip_zeros(k)) + " = " +
                              to_string(d) + " is not a nonnegative integer";
                break;
            }
        }
    }
    return report;
}

inline VerificationReport verify_witt_classical(unsigned loops, unsigned bound,
                                                const std::optional<Corruption> &corruption = {})
{
    detail::check_dimensions(loops, bound);
    detail::check_corruption_shape(corruption, loops);
    auto m = [&](std::span<const unsigned> k) {
        return detail::corrupted(BigRational(witt_M(MultiDegree::strip_zeros(k))), k, corruption,
                                 CorruptionTarget::Primary);
    };
    TruncatedSeries rhs = TruncatedSeries::one(loops, bound);
    for (unsigned j = 0; j < loops; ++j) {
        rhs -= TruncatedSeries::variable(loops, bound, j);
    }
    return compare_series("witt-classical", product_expand(m, -1, loops, bound), rhs);
}

} // namespace wittpaths

#endif
