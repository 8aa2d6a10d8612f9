#include "hamgame/profile.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hamgame/errors.hpp"
#include "hamgame/theory.hpp"

namespace hamgame {

std::string_view to_string(Preset p) noexcept
{
    return p == Preset::Paper ? "paper" : "desk";
}

Preset parse_preset(std::string_view name)
{
    if (name == "paper") return Preset::Paper;
    if (name == "desk") return Preset::Desk;
    throw Error(Errc::InvalidConfig, "unknown profile preset \"" + std::string(name) + "\"");
}

StrategyProfile StrategyProfile::paper(int n)
{
    const auto c = theory::constants(static_cast<double>(std::max(n, 2)));
    StrategyProfile p;
    p.preset = Preset::Paper;
    p.d_target = 12;
    p.delta0 = c.delta0;
    p.delta = c.delta;
    p.epsilon = c.epsilon;
    p.k = std::max(1, static_cast<int>(std::floor(c.k0)));
    return p;
}

StrategyProfile StrategyProfile::desk(int n, double delta, int d_target)
{
    StrategyProfile p;
    p.preset = Preset::Desk;
    p.d_target = d_target;
    p.delta = delta;
    p.epsilon = 2.0 * delta;
    p.k = std::max(1, n / 16);
    p.delta0 = n > 0 ? static_cast<double>(p.k) / n : 0.0;
    return p;
}

void StrategyProfile::validate() const
{
    if (d_target < 1) throw Error(Errc::InvalidConfig, "d_target must be at least 1");
    if (!(delta > 0.0)) throw Error(Errc::InvalidConfig, "delta must be positive");
    if (k < 1) throw Error(Errc::InvalidConfig, "expander parameter k must be at least 1");
}

}  // namespace hamgame
