#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "equilex/bounds.hpp"
#include "equilex/certify.hpp"
#include "equilex/lp_core.hpp"
#include "equilex/search.hpp"
#include "equilex/verify.hpp"

namespace equilex {

inline constexpr int kPointSetFormatVersion = 1;

// On-disk form of a point set:
//   {"format_version": 1, "p": 1.5, "dim": 3, "claimed_scale": 1.587 | null,
//    "points": [[...], ...], "provenance": {...}}
struct PointSetDocument {
  PointSet set;
  nlohmann::json provenance = nlohmann::json::object();
};

nlohmann::json to_json(const PointSetDocument& doc);
// Throws ParseError on a malformed document or a row of the wrong length.
PointSetDocument point_set_from_json(const nlohmann::json& j);

PointSetDocument read_point_set(const std::string& path);
void write_point_set(const std::string& path, const PointSetDocument& doc);

// Headerless CSV, one point per row.
void write_csv(std::ostream& out, const PointSet& set);

nlohmann::json to_json(const EquilateralReport& rep);
nlohmann::json to_json(const RankCertificate& cert);
nlohmann::json to_json(const BoundsReport& rep);
nlohmann::json to_json(const SearchResult& res);

}  // namespace equilex
