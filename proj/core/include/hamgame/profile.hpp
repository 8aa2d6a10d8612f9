#pragma once

#include <string_view>

#include "hamgame/rotation.hpp"

namespace hamgame {

enum class Preset { Paper, Desk };

std::string_view to_string(Preset p) noexcept;
Preset parse_preset(std::string_view name);

/// Parameters shared by the staged Maker and the degree monitor.
struct StrategyProfile {
    int d_target = 12;     // minimum-degree goal of the first stage
    int k = 1;             // expander parameter used for stage accounting
    double delta = 0.5;    // monitor fraction: trigger at (1 - delta) n Breaker edges
    double delta0 = 0.0;
    double epsilon = 1.0;
    Preset preset = Preset::Desk;
    RotationEffort rotation{4, 16};  // effort for in-game rotation searches

    /// Asymptotic constants evaluated at n (typically delta > 1 at feasible
    /// n, which makes the monitor vacuous).
    static StrategyProfile paper(int n);
    /// Desk-scale defaults: delta = 0.5, k = max(1, n/16), d_target = 12.
    static StrategyProfile desk(int n, double delta = 0.5, int d_target = 12);

    /// Throws InvalidConfig when d_target < 1 or delta <= 0.
    void validate() const;
    bool monitor_vacuous() const noexcept { return delta >= 1.0; }
};

}  // namespace hamgame
