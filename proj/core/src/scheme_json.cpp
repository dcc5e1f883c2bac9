#include <json.hpp>

#include "svdim/error.hpp"
#include "svdim/schemes.hpp"

namespace svdim {

namespace {

using json = nlohmann::ordered_json;

json point_to_json(const SchemePoint& pt) { return json{{"coords", pt.coords}, {"onH", pt.on_h}}; }

SchemePoint point_from_json(const json& j) {
  SchemePoint pt;
  j.at("coords").get_to(pt.coords);
  pt.on_h = j.value("onH", false);
  return pt;
}

}  // namespace

std::string to_json(const SchemeSpec& spec) {
  json j;
  j["ambient"] = spec.frame.ambient();
  j["n"] = spec.frame.n;
  j["m"] = spec.frame.m;
  j["d"] = spec.frame.d;
  j["doublePoints"] = json::array();
  for (const auto& pt : spec.double_points) j["doublePoints"].push_back(point_to_json(pt));
  j["simplePoints"] = json::array();
  for (const auto& pt : spec.simple_points) j["simplePoints"].push_back(point_to_json(pt));
  j["wSpaces"] = spec.w_anchors;
  j["vSpans"] = json::array();
  for (const auto& ref : spec.v_spans) {
    j["vSpans"].push_back(json{{"kind", ref.kind == PointKind::double_point ? "double" : "simple"},
                               {"index", ref.index}});
  }
  j["includeFatH1"] = spec.fat_h1;
  j["includeH2"] = spec.include_h2;
  return j.dump();
}

SchemeSpec scheme_from_json(std::string_view text) {
  SchemeSpec spec;
  try {
    const json j = json::parse(text);
    spec.frame = {j.at("n").get<int>(), j.at("m").get<int>(), j.at("d").get<int>()};
    if (j.contains("ambient") && j.at("ambient").get<int>() != spec.frame.ambient()) {
      throw InvalidParameters("scheme ambient dimension does not match n + m");
    }
    for (const auto& p : j.value("doublePoints", json::array())) spec.double_points.push_back(point_from_json(p));
    for (const auto& p : j.value("simplePoints", json::array())) spec.simple_points.push_back(point_from_json(p));
    for (const auto& a : j.value("wSpaces", json::array())) spec.w_anchors.push_back(a.get<std::vector<std::int64_t>>());
    for (const auto& v : j.value("vSpans", json::array())) {
      const std::string kind = v.at("kind").get<std::string>();
      if (kind != "double" && kind != "simple") throw InvalidParameters("unknown V-span kind '" + kind + "'");
      spec.v_spans.push_back({kind == "double" ? PointKind::double_point : PointKind::simple_point,
                              v.at("index").get<std::size_t>()});
    }
    spec.fat_h1 = j.value("includeFatH1", 0);
    spec.include_h2 = j.value("includeH2", false);
  } catch (const json::exception& e) {
    throw InvalidParameters(std::string("malformed scheme JSON: ") + e.what());
  }
  spec.validate();
  return spec;
}

}  // namespace svdim
