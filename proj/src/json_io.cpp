#include "dtopo/json_io.hpp"

#include <algorithm>

namespace dtopo {

namespace {

std::vector<VertexLabel> labels_at(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array())
    throw FormatError(std::string("expected an array of labels at \"") + key + "\"");
  std::vector<VertexLabel> out;
  for (const auto& v : j.at(key)) {
    if (!v.is_string()) throw FormatError(std::string("non-string label in \"") + key + "\"");
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::string string_at(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string())
    throw FormatError(std::string("expected a string at \"") + key + "\"");
  return j.at(key).get<std::string>();
}

std::pair<VertexLabel, VertexLabel> edge_at(const nlohmann::json& j) {
  auto e = labels_at(j, "edge");
  if (e.size() != 2) throw FormatError("\"edge\" must hold exactly two labels");
  return {e[0], e[1]};
}

}  // namespace

nlohmann::ordered_json certificate_to_json(const ContractionCertificate& c) {
  nlohmann::ordered_json j;
  j["deletion_order"] = c.deletion_order;
  return j;
}

ContractionCertificate certificate_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw FormatError("certificate must be a JSON object");
  return {labels_at(j, "deletion_order")};
}

nlohmann::ordered_json transformation_to_json(const Transformation& t) {
  nlohmann::ordered_json j;
  j["kind"] = std::string(kind_name(t));
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, DeletePoint>) {
          j["vertex"] = s.vertex;
        } else if constexpr (std::is_same_v<T, GluePoint>) {
          j["vertex"] = s.vertex;
          j["rim"] = s.rim;
        } else if constexpr (std::is_same_v<T, DeleteEdge> || std::is_same_v<T, GlueEdge>) {
          j["edge"] = {s.u, s.v};
        } else {
          j["set"] = s.set;
          j["z"] = s.z;
        }
      },
      t);
  return j;
}

Transformation transformation_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw FormatError("trace step must be a JSON object");
  const std::string kind = string_at(j, "kind");
  if (kind == "delete_point") return DeletePoint{string_at(j, "vertex")};
  if (kind == "glue_point") {
    auto rim = labels_at(j, "rim");
    std::sort(rim.begin(), rim.end());
    return GluePoint{string_at(j, "vertex"), std::move(rim)};
  }
  if (kind == "delete_edge") {
    auto [u, v] = edge_at(j);
    return DeleteEdge{u, v};
  }
  if (kind == "glue_edge") {
    auto [u, v] = edge_at(j);
    return GlueEdge{u, v};
  }
  if (kind == "contract_set") {
    auto set = labels_at(j, "set");
    std::sort(set.begin(), set.end());
    return ContractSet{std::move(set), string_at(j, "z")};
  }
  throw FormatError("unknown transformation kind \"" + kind + "\"");
}

nlohmann::ordered_json trace_to_json(const Trace& t) {
  nlohmann::ordered_json j;
  j["initial_digest"] = t.initial_digest;
  auto steps = nlohmann::ordered_json::array();
  for (const auto& s : t.steps) steps.push_back(transformation_to_json(s));
  j["steps"] = std::move(steps);
  return j;
}

Trace trace_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw FormatError("trace must be a JSON object");
  Trace t;
  t.initial_digest = string_at(j, "initial_digest");
  if (!j.contains("steps") || !j.at("steps").is_array()) throw FormatError("trace needs a \"steps\" array");
  const auto& steps = j.at("steps");
  for (std::size_t i = 0; i < steps.size(); ++i) {
    try {
      t.steps.push_back(transformation_from_json(steps[i]));
    } catch (const FormatError& e) {
      throw FormatError("steps[" + std::to_string(i) + "]: " + e.what());
    }
  }
  return t;
}

nlohmann::ordered_json report_to_json(const ThinningReport& r) {
  nlohmann::ordered_json j;
  j["skeleton"] = graph_to_json(r.skeleton);
  j["trace"] = trace_to_json(r.trace);
  nlohmann::ordered_json stats;
  stats["points_deleted"] = r.stats.points_deleted;
  stats["sets_contracted"] = r.stats.sets_contracted;
  stats["undecided_candidates_skipped"] = r.stats.undecided_candidates_skipped;
  stats["max_set_size"] = r.max_set_size;
  j["stats"] = std::move(stats);
  return j;
}

nlohmann::ordered_json model_to_json(const CubicalModel& m) {
  nlohmann::ordered_json j;
  j["n"] = m.dimension;
  j["L"] = m.edge_length;
  j["cubes"] = m.cubes;
  return j;
}

CubicalModel model_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("L") || !j.contains("cubes"))
    throw FormatError("cubical model needs \"n\", \"L\" and \"cubes\"");
  CubicalModel m;
  try {
    m.dimension = j.at("n").get<std::size_t>();
    m.edge_length = j.at("L").get<double>();
    m.cubes = j.at("cubes").get<std::vector<CubeIndex>>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("cubical model: ") + e.what());
  }
  if (!(m.edge_length > 0.0)) throw FormatError("cubical model: L must be positive");
  for (const auto& c : m.cubes)
    if (c.size() != m.dimension) throw FormatError("cubical model: cube index has wrong dimension");
  std::sort(m.cubes.begin(), m.cubes.end());
  if (std::adjacent_find(m.cubes.begin(), m.cubes.end()) != m.cubes.end())
    throw FormatError("cubical model: duplicate cube index");
  return m;
}

nlohmann::ordered_json invariants_to_json(const InvariantSummary& s) {
  nlohmann::ordered_json j;
  j["euler"] = s.euler;
  j["betti"] = s.betti.betti;
  j["clique_counts"] = s.clique_counts;
  return j;
}

}  // namespace dtopo
