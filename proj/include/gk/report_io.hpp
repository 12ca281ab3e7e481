#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "gk/bounds.hpp"
#include "gk/homspace.hpp"
#include "gk/reps.hpp"

namespace gk {

using Json = nlohmann::ordered_json;

Json to_json(const Representation& v);
/// {"p", "a" (when known), "f", "delta", "dim", "basis"}
Json to_json(const HomSpace& space);
Json to_json(const FiltrationTable& table);
Json to_json(const RankReport& report);
/// {"max_pa", "engine", "rows": [...]}; each row carries its wall time as "ms".
Json to_json(const SweepReport& report);

/// Header row plus one line per sweep row, same columns as the JSON rows.
std::string to_csv(const SweepReport& report);
std::string to_csv(const FiltrationTable& table);

std::string to_text(const FiltrationTable& table);
std::string to_text(const SweepReport& report);

}  // namespace gk
