#include "wdb/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace wdb {

using nlohmann::json;

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw domain_error("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw domain_error("cannot write file: " + path);
  out << text;
}

namespace {

json edge_to_json(const MeridianEdge& e) {
  return json{{"kind", e.kind == EdgeKind::kArc ? "ARC" : "SEGMENT"},
              {"p", {e.p.x, e.p.y}},
              {"q", {e.q.x, e.q.y}},
              {"curvature", e.curvature},
              {"left", to_string(e.left)},
              {"right", to_string(e.right)}};
}

MeridianEdge edge_from_json(const json& j) {
  MeridianEdge e;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "ARC")
    e.kind = EdgeKind::kArc;
  else if (kind == "SEGMENT")
    e.kind = EdgeKind::kSegment;
  else
    throw domain_error("edge kind must be ARC or SEGMENT");
  e.p = {j.at("p").at(0).get<double>(), j.at("p").at(1).get<double>()};
  e.q = {j.at("q").at(0).get<double>(), j.at("q").at(1).get<double>()};
  e.curvature = j.value("curvature", 0.0);
  e.left = region_label_from_string(j.at("left").get<std::string>());
  e.right = region_label_from_string(j.at("right").get<std::string>());
  if (e.kind == EdgeKind::kSegment && e.curvature != 0.0)
    throw domain_error("segment with nonzero curvature");
  if (e.kind == EdgeKind::kArc && e.curvature == 0.0)
    throw domain_error("arc with zero curvature");
  return e;
}

}  // namespace

std::string network_to_json(const GeneratingNetwork& net,
                            const WeightTriple& w) {
  json j;
  j["dimension"] = net.dimension.n;
  j["weights"] = {w.w0, w.w1, w.w2};
  j["edges"] = json::array();
  for (const auto& e : net.edges) j["edges"].push_back(edge_to_json(e));
  return j.dump(2) + "\n";
}

NetworkFile network_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw domain_error(std::string("network JSON parse error: ") + e.what());
  }
  try {
    NetworkFile f{GeneratingNetwork{Dimension(j.at("dimension").get<int>()), {}},
                  std::nullopt};
    if (j.contains("weights")) {
      const auto& w = j.at("weights");
      f.weights = WeightTriple{w.at(0).get<double>(), w.at(1).get<double>(),
                               w.at(2).get<double>()};
    }
    for (const auto& je : j.at("edges"))
      f.net.edges.push_back(edge_from_json(je));
    return f;
  } catch (const json::exception& e) {
    throw domain_error(std::string("network JSON schema error: ") + e.what());
  }
}

NetworkFile read_network_file(const std::string& path) {
  return network_from_json(read_text_file(path));
}

void write_network_file(const std::string& path, const GeneratingNetwork& net,
                        const WeightTriple& w) {
  write_text_file(path, network_to_json(net, w));
}

std::string region_to_json(const PlanarRegion& r) {
  json j;
  j["loops"] = json::array();
  for (const auto& loop : r.loops) {
    json jl = json::array();
    for (const auto& e : loop)
      jl.push_back(json{{"kind", e.kind == EdgeKind::kArc ? "ARC" : "SEGMENT"},
                        {"p", {e.p.x, e.p.y}},
                        {"q", {e.q.x, e.q.y}},
                        {"curvature", e.curvature}});
    j["loops"].push_back(jl);
  }
  return j.dump(2) + "\n";
}

PlanarRegion region_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw domain_error(std::string("region JSON parse error: ") + e.what());
  }
  try {
    PlanarRegion r;
    for (const auto& jl : j.at("loops")) {
      PlanarLoop loop;
      for (const auto& je : jl) {
        PlanarEdge e;
        const std::string kind = je.at("kind").get<std::string>();
        if (kind == "ARC")
          e.kind = EdgeKind::kArc;
        else if (kind == "SEGMENT")
          e.kind = EdgeKind::kSegment;
        else
          throw domain_error("edge kind must be ARC or SEGMENT");
        e.p = {je.at("p").at(0).get<double>(), je.at("p").at(1).get<double>()};
        e.q = {je.at("q").at(0).get<double>(), je.at("q").at(1).get<double>()};
        e.curvature = je.value("curvature", 0.0);
        loop.push_back(e);
      }
      r.loops.push_back(std::move(loop));
    }
    return r;
  } catch (const json::exception& e) {
    throw domain_error(std::string("region JSON schema error: ") + e.what());
  }
}

PlanarRegion read_region_file(const std::string& path) {
  return region_from_json(read_text_file(path));
}

void write_region_file(const std::string& path, const PlanarRegion& r) {
  write_text_file(path, region_to_json(r));
}

}  // namespace wdb
