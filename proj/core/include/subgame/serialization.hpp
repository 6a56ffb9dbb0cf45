#pragma once

#include <nlohmann/json.hpp>

#include "subgame/engine.hpp"

namespace subgame {

// {moves, seed, preperiod, period, prefix, cycle}; bits as 0/1 strings.
nlohmann::json report_to_json(const PeriodicityReport& r);
PeriodicityReport report_from_json(const nlohmann::json& j);

}  // namespace subgame
