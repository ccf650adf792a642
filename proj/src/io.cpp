#include "equilex/io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>

#include "equilex/error.hpp"

namespace equilex {

namespace {

using nlohmann::json;

json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

json to_json(const PointSetDocument& doc) {
  const PointSet& s = doc.set;
  json points = json::array();
  for (const auto& x : s.points()) points.push_back(x);
  return json{{"format_version", kPointSetFormatVersion},
              {"p", s.space().p()},
              {"dim", s.dim()},
              {"claimed_scale", optional_json(s.claimed_scale())},
              {"points", std::move(points)},
              {"provenance", doc.provenance}};
}

PointSetDocument point_set_from_json(const json& j) {
  try {
    if (!j.is_object()) throw ParseError("point set document must be a JSON object");
    const int version = j.at("format_version").get<int>();
    if (version != kPointSetFormatVersion) {
      throw ParseError("unsupported point set format_version " + std::to_string(version));
    }
    const double p = j.at("p").get<double>();
    const auto dim = j.at("dim").get<std::size_t>();
    std::optional<double> scale;
    if (j.contains("claimed_scale") && !j.at("claimed_scale").is_null()) {
      scale = j.at("claimed_scale").get<double>();
    }
    std::vector<Point> pts;
    for (const auto& row : j.at("points")) {
      auto x = row.get<Point>();
      if (x.size() != dim) {
        throw ParseError("point " + std::to_string(pts.size()) + " has " +
                         std::to_string(x.size()) + " coordinates, expected " +
                         std::to_string(dim));
      }
      pts.push_back(std::move(x));
    }
    json provenance = j.value("provenance", json::object());
    return PointSetDocument{PointSet(LpSpace(p, dim), std::move(pts), scale),
                            std::move(provenance)};
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed point set document: ") + e.what());
  }
}

PointSetDocument read_point_set(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return point_set_from_json(j);
}

void write_point_set(const std::string& path, const PointSetDocument& doc) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << to_json(doc).dump(2) << '\n';
}

void write_csv(std::ostream& out, const PointSet& set) {
  const auto old = out.precision(std::numeric_limits<double>::max_digits10);
  for (const auto& x : set.points()) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (i) out << ',';
      out << x[i];
    }
    out << '\n';
  }
  out.precision(old);
}

json to_json(const EquilateralReport& rep) {
  return json{{"n", rep.n},
              {"min_dist", rep.min_dist},
              {"max_dist", rep.max_dist},
              {"max_rel_dev", rep.max_rel_dev},
              {"scale_estimate", rep.scale_estimate},
              {"claimed_scale_rel_dev", optional_json(rep.claimed_scale_rel_dev)},
              {"sphere_max_dev", optional_json(rep.sphere_max_dev)},
              {"tolerance", rep.tolerance},
              {"pass", rep.pass}};
}

json to_json(const RankCertificate& cert) {
  return json{{"set_size", cert.set_size},
              {"family_size", cert.family_size},
              {"ambient_dim", cert.ambient_dim},
              {"numerical_rank", cert.numerical_rank},
              {"k_used", cert.k_used},
              // null encodes an infinite gap (full rank)
              {"singular_value_gap", finite_or_null(cert.singular_value_gap)},
              {"tolerance", cert.tolerance},
              {"singular_values", cert.singular_values},
              {"implied_bound", cert.implied_bound},
              {"certified", cert.certified}};
}

json to_json(const BoundsReport& rep) {
  auto list = [](const std::vector<Bound>& bounds) {
    json a = json::array();
    for (const auto& b : bounds) a.push_back(json{{"value", b.value}, {"source", b.source}});
    return a;
  };
  json j{{"p", rep.p},
         {"d", rep.d},
         {"lower_bounds", list(rep.lower_bounds)},
         {"upper_bounds", list(rep.upper_bounds)},
         {"best_lower", rep.best_lower},
         {"best_upper", optional_json(rep.best_upper)},
         {"exact", rep.exact},
         {"notes", rep.notes}};
  if (rep.exact) j["value"] = rep.best_lower;
  return j;
}

json to_json(const SearchResult& res) {
  json log = json::array();
  for (const auto& l : res.log) {
    log.push_back(json{{"restart", l.restart}, {"energy", l.energy}, {"iterations", l.iterations}});
  }
  return json{{"best_energy", res.best_energy},
              {"restart_index", res.restart_index},
              {"iterations_used", res.iterations_used},
              {"discovery", res.discovery},
              {"verifier_report",
               res.verifier_report ? to_json(*res.verifier_report) : json(nullptr)},
              {"best_points", to_json(PointSetDocument{res.best_points, json::object()})},
              {"restarts", std::move(log)}};
}

}  // namespace equilex
