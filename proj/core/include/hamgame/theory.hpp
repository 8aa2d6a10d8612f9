#pragma once

#include <optional>

namespace hamgame::theory {

/// ln n at which epsilon = 30 / ln^{1/4} n equals 1 (30^4).
inline constexpr double epsilon_unit_ln_n = 810000.0;

struct Constants {
    double n = 0.0;        // NaN when only ln n was supplied
    double ln_n = 0.0;
    double delta0 = 0.0;   // 6 / ln^{1/2} n
    double delta = 0.0;    // 15 / ln^{1/4} n
    double epsilon = 0.0;  // 30 / ln^{1/4} n
    double k0 = 0.0;       // delta0 * n
    double bias_multiplier = 0.0;  // 1 - epsilon
    double bias = 0.0;             // (1 - epsilon) n / ln n
};

/// Evaluates the constants at n, or at an explicit ln n (which need not be
/// the log of any representable n). Throws ParameterDomain when ln n <= 0
/// or when neither argument is usable.
Constants constants(std::optional<double> n, std::optional<double> ln_n = std::nullopt);

/// ln C(n, k); -inf outside 0 <= k <= n.
double log_choose(double n, double k);

/// ln of C(n,i) C(n-i,2i-1) ((3i-2)/(delta n - 12))^{6i}.
double log_failure_term(long i, long n, double delta);

/// ln of [4^5 e^3 (i/n)^3 / delta^6]^i, the simplified upper bound on a
/// failure term. Requires i >= 1, n > i, delta > 0.
double g_term(long i, long n, double delta);

/// ln of the sum of log_failure_term over 5 <= i <= k0 (log-sum-exp), or
/// -inf for the empty sum. Requires k0 <= n/3 and delta n - 12 > 3 k0 - 2.
double failure_bound(long n, double delta, long k0);

}  // namespace hamgame::theory
