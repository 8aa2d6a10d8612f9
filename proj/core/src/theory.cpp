#include "hamgame/theory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "hamgame/errors.hpp"

namespace hamgame::theory {

Constants constants(std::optional<double> n, std::optional<double> ln_n)
{
    Constants c;
    if (ln_n) {
        c.ln_n = *ln_n;
    } else if (n && *n > 1.0) {
        c.ln_n = std::log(*n);
    } else {
        throw Error(Errc::ParameterDomain, "constants need n > 1 or an explicit ln n");
    }
    if (!(c.ln_n > 0.0)) throw Error(Errc::ParameterDomain, "ln n must be positive");
    c.n = n ? *n : std::numeric_limits<double>::quiet_NaN();
    const double root2 = std::sqrt(c.ln_n);
    const double root4 = std::sqrt(root2);
    c.delta0 = 6.0 / root2;
    c.delta = 15.0 / root4;
    c.epsilon = 30.0 / root4;
    c.k0 = c.delta0 * c.n;
    c.bias_multiplier = 1.0 - c.epsilon;
    c.bias = c.bias_multiplier * c.n / c.ln_n;
    return c;
}

double log_choose(double n, double k)
{
    if (k < 0.0 || k > n) return -std::numeric_limits<double>::infinity();
    const double small = std::min(k, n - k);
    if (small <= 64.0) {
        double acc = 0.0;
        for (double j = 1.0; j <= small; j += 1.0) acc += std::log((n - small + j) / j);
        return acc;
    }
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

double log_failure_term(long i, long n, double delta)
{
    const double di = static_cast<double>(i);
    const double dn = static_cast<double>(n);
    const double ratio = (3.0 * di - 2.0) / (delta * dn - 12.0);
    return log_choose(dn, di) + log_choose(dn - di, 2.0 * di - 1.0) + 6.0 * di * std::log(ratio);
}

double g_term(long i, long n, double delta)
{
    if (i < 1 || n <= i || !(delta > 0.0))
        throw Error(Errc::ParameterDomain, "g_term needs i >= 1, n > i, delta > 0");
    const double di = static_cast<double>(i);
    const double log_base =
        5.0 * std::log(4.0) + 3.0 + 3.0 * std::log(di / static_cast<double>(n)) - 6.0 * std::log(delta);
    return di * log_base;
}

double failure_bound(long n, double delta, long k0)
{
    if (n < 1 || !(delta > 0.0)) throw Error(Errc::ParameterDomain, "failure_bound needs n >= 1 and delta > 0");
    if (3 * k0 > n) throw Error(Errc::ParameterDomain, "failure_bound needs k0 <= n/3");
    if (!(delta * static_cast<double>(n) - 12.0 > 3.0 * static_cast<double>(k0) - 2.0))
        throw Error(Errc::ParameterDomain, "failure_bound needs delta n - 12 > 3 k0 - 2");
    if (k0 < 5) return -std::numeric_limits<double>::infinity();

    std::vector<double> logs;
    logs.reserve(static_cast<std::size_t>(k0 - 4));
    for (long i = 5; i <= k0; ++i) logs.push_back(log_failure_term(i, n, delta));
    const double top = *std::max_element(logs.begin(), logs.end());
    double sum = 0.0;
    for (double t : logs) sum += std::exp(t - top);
    return top + std::log(sum);
}

}  // namespace hamgame::theory
