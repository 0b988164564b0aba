#pragma once

#include <string>
#include <vector>

#include "u5/bignat.hpp"
#include "u5/structure.hpp"

namespace u5 {

enum class GammaVerdict { Below, Equal, Above };

/// Exact three-way comparison of an integer size against n^gamma with
/// gamma = log3(2). Never consults machine floating point: equality is
/// detected symbolically at (size, n) = (2^k, 3^k), and the strict cases are
/// decided by integer power comparisons against two-sided rational
/// approximations of log2(3), tightened Stern-Brocot style until decisive.
GammaVerdict gamma_compare(long long size, long long n);

/// The threshold n^gamma carried symbolically; the decimal rendering is for
/// display only and never feeds a verdict.
struct GammaBound {
    long long n = 0;

    /// 2^k when n = 3^k, absent otherwise.
    std::optional<long long> exact_value() const;
    double approx() const;
    std::string decimal(int significant = 12) const;
};

/// A prime quotient plus one positive weight per vertex (the sizes of the
/// best transitive sets inside the corresponding blocks).
struct WeightedQuotientInstance {
    Tournament quotient;
    std::vector<long long> weights;
};

/// Maximum-weight vertex set inducing a transitive subtournament, by
/// branch-and-bound over a weight-then-degree vertex order. Deterministic.
VertexSet max_transitive_weighted(const Tournament& q, const std::vector<long long>& weights);

VertexSet max_transitive_weighted(const WeightedQuotientInstance& instance);

/// Exact maximum transitive vertex set, computed over the substitution
/// decomposition: a transitive set meets each block in a transitive set and
/// the touched blocks must induce a transitive quotient subset. Effective
/// when every prime quotient is small; larger quotients still finish but
/// may be slow. The result is re-verified transitive before returning.
VertexSet max_transitive_exact(const Tournament& t);

/// Constructive transitive set of size at least n^gamma for a tournament
/// with a verified freeness certificate, assembled exactly as the bound's
/// proof directs (keep the two heaviest partition classes; keep the
/// dominant half of a circular quotient). Throws ContractViolation when the
/// certificate does not validate against t or is a forbidden-copy.
VertexSet u5free_lower_bound_set(const Tournament& t, const Certificate& freeness);

enum class KaramataOutcome { Holds, Fails, PreconditionsViolated };

/// Majorization test utility for f(x) = x^exponent: checks that xs is
/// majorized by ys (descending, prefix-dominated, equal totals) and then
/// whether sum f(xs) >= sum f(ys). Numeric with a relative tolerance; this
/// is a test aid, not part of any verdict path.
KaramataOutcome karamata_check(const std::vector<double>& xs, const std::vector<double>& ys,
                               double exponent);

/// Exact check of a^gamma + b^gamma >= (a+b+c)^gamma for nonnegative reals
/// with c = min(a, b, c). Inputs are taken as exact dyadic rationals; the
/// equality cases (a = b = c, and c = 0 with a or b zero) are answered
/// symbolically and the rest by widening rational interval arithmetic.
bool two_of_three_check(double a, double b, double c);

} // namespace u5
