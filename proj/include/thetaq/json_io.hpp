#pragma once

#include <json.hpp>
#include <string>

#include "thetaq/catalog.hpp"
#include "thetaq/recognize.hpp"
#include "thetaq/relation.hpp"
#include "thetaq/series.hpp"

namespace thetaq {

using Json = nlohmann::json;

/// {"denom": N, "terms": [[k, "num/den"], ...], "hi": bound or null when exact}.
Json to_json(const PuiseuxSeries& s);
PuiseuxSeries series_from_json(const Json& j);

/// {"u": {...}, "v": "m", "poly": [[i, j, "c"], ...], "validated_grid_order": ..., ...}.
Json to_json(const MinedRelation& rel);
MinedRelation relation_from_json(const Json& j);

/// Coefficients as decimal strings, low degree first.
Json to_json(const IntPoly& p);

Json to_json(const EntryReport& e);
Json to_json(const Report& r);

/// Two-space indented text with a trailing newline; keys come out sorted.
std::string dump(const Json& j);
void write_json(const std::string& path, const Json& j);
Json read_json(const std::string& path);

}  // namespace thetaq
