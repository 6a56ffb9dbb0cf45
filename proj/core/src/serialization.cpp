#include "subgame/serialization.hpp"

namespace subgame {

nlohmann::json report_to_json(const PeriodicityReport& r) {
  nlohmann::json j;
  j["moves"] = r.moves.moves();
  j["seed"] = r.seed.to_string();
  j["preperiod"] = r.preperiod;
  j["period"] = r.period;
  if (r.materialized) {
    j["prefix"] = r.prefix.to_string();
    j["cycle"] = r.cycle.to_string();
  } else {
    j["prefix"] = nullptr;
    j["cycle"] = nullptr;
  }
  return j;
}

PeriodicityReport report_from_json(const nlohmann::json& j) {
  PeriodicityReport r;
  r.moves = MoveSet(j.at("moves").get<std::vector<std::uint32_t>>());
  r.seed = Seed{BitString::from_string(j.at("seed").get<std::string>())};
  r.preperiod = j.at("preperiod").get<std::uint64_t>();
  r.period = j.at("period").get<std::uint64_t>();
  r.materialized = !j.at("cycle").is_null();
  if (r.materialized) {
    r.prefix = BitString::from_string(j.at("prefix").get<std::string>());
    r.cycle = BitString::from_string(j.at("cycle").get<std::string>());
  }
  return r;
}

}  // namespace subgame
